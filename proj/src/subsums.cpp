#include "partstab/subsums.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "partstab/partition_count.hpp"

namespace partstab {

namespace {

void require_subsum_params(long m, long i)
{
    if (m < 1 || i < 1 || i > m)
        throw std::invalid_argument("subsums: need 1 <= i <= m, got m=" + std::to_string(m) +
                                    ", i=" + std::to_string(i));
}

FactorRule rule(const std::string &b, const std::string &c)
{
    FactorRule r;
    r.b = Expr::parse(b);
    r.c = Expr::parse(c);
    return r;
}

// Visits every partition of n into parts in [lo, hi], parts weakly decreasing.
void for_each_partition(long n, long lo, long hi, std::vector<long> &parts,
                        const std::function<void(const std::vector<long> &)> &visit)
{
    if (n == 0) {
        visit(parts);
        return;
    }
    for (long v = std::min(n, hi); v >= lo; --v) {
        parts.push_back(v);
        for_each_partition(n - v, lo, v, parts, visit);
        parts.pop_back();
    }
}

long z_weight(long m, long i, long part) { return (part - i) / m + 1; }

} // namespace

ProductSpec subsum_spec(long m, long i, SubsumForm form)
{
    require_subsum_params(m, i);
    ProductSpec spec;
    std::string ms = std::to_string(m);
    if (form == SubsumForm::csw) {
        spec.name = "csw_original(" + ms + "," + std::to_string(i) + ")";
        for (long b = 1; b <= m; ++b) {
            std::string c = "(j-1)*" + ms + "+" + std::to_string(b);
            spec.rules.push_back(rule(b < i ? "j-1" : "j", c));
        }
    } else {
        spec.name = "subsums(" + ms + "," + std::to_string(i) + ")";
        for (long b = 1; b < i; ++b) {
            FactorRule r = rule("0", std::to_string(b));
            r.j_max = 1;
            spec.rules.push_back(r);
        }
        for (long d = 0; d < m; ++d)
            spec.rules.push_back(rule("j", std::to_string(i) + "+(j-1)*" + ms + "+" + std::to_string(d)));
    }
    return spec;
}

LambdaTable lambda_table(long m, long i, long order)
{
    require_subsum_params(m, i);
    auto seq = expand_product(subsum_spec(m, i), order);
    return {m, i, order, std::move(seq.polys)};
}

ZPolynomial lambda_oracle(long m, long i, long n)
{
    require_subsum_params(m, i);
    if (n < 0)
        throw std::invalid_argument("lambda_oracle: negative n");
    std::vector<integer> counts(static_cast<std::size_t>(n) + 1, integer(0));
    std::vector<long> parts;
    for_each_partition(n, 1, n, parts, [&](const std::vector<long> &p) {
        long sum = 0;
        for (std::size_t pos = 1; pos <= p.size(); ++pos)
            if ((static_cast<long>(pos) - i) % m == 0)
                sum += p[pos - 1];
        counts[static_cast<std::size_t>(sum)] += 1;
    });
    return ZPolynomial(std::move(counts));
}

integer split_coefficient(long m, long i, long n, long j)
{
    require_subsum_params(m, i);
    if (n < 0 || j < 0)
        return 0;
    // mu[s][w]: partitions of s into parts >= i of z-weight w.
    std::vector<std::vector<integer>> mu(static_cast<std::size_t>(n) + 1,
                                         std::vector<integer>(static_cast<std::size_t>(j) + 1, integer(0)));
    mu[0][0] = 1;
    for (long v = i; v <= n; ++v) {
        long w = z_weight(m, i, v);
        for (long s = v; s <= n; ++s)
            for (long t = w; t <= j; ++t)
                mu[s][t] += mu[s - v][t - w];
    }
    integer total = 0;
    for (long s = j * i; s <= n; ++s)
        total += partition_count(n - s, PartitionConstraint::parts_less_than(i)) * mu[s][j];
    return total;
}

std::optional<long> first_part_forcing_failure(long m, long i, long s_max)
{
    require_subsum_params(m, i);
    std::vector<long> parts;
    for (long s = 1; s <= s_max; ++s) {
        bool failed = false;
        for_each_partition(s, i, s, parts, [&](const std::vector<long> &p) {
            long j = 0;
            for (long v : p)
                j += z_weight(m, i, v);
            if ((i + 1) * j > s && std::find(p.begin(), p.end(), i) == p.end())
                failed = true;
        });
        if (failed)
            return s;
    }
    return std::nullopt;
}

ProductSpec single_family_spec(long m, long b)
{
    ProductSpec spec;
    spec.name = "single_family(" + std::to_string(m) + "," + std::to_string(b) + ")";
    spec.rules.push_back(rule("j-1", "(j-1)*" + std::to_string(m) + "+" + std::to_string(b)));
    return spec;
}

StabilizationReport verify_single_family_props(long m, long b, long order)
{
    if (m < 2 || b < 1 || b >= m)
        throw std::invalid_argument("verify_single_family_props: need m >= 2 and 1 <= b < m");
    if (order < 0)
        throw std::invalid_argument("verify_single_family_props: negative order");
    ProductSpec spec = single_family_spec(m, b);
    ZSequence seq = expand_product(spec, order + b);
    auto hyp = check_hypotheses(spec, TailKind::lower);
    if (!hyp.satisfied || !hyp.m || !hyp.shift)
        throw std::logic_error("verify_single_family_props: lower-tail hypotheses unexpectedly fail");

    StabilizationReport rep = verify_lower_shift(seq, b, m);
    rep.kind = "single-family";
    rep.n_max = order;
    bool literal = rep.identity_holds;
    StabilizationReport derived = verify_lower_shift(seq, *hyp.shift, *hyp.m);

    auto p = partition_numbers(order);
    bool vanishing = true, plateau = true;
    for (long n = 0; n <= order; ++n) {
        for (long k = 0; (m + 1) * k <= n; ++k) {
            const integer &value = seq[n].coeff(k);
            if ((n - m * k) % b != 0) {
                if (value != 0) {
                    vanishing = false;
                    rep.record({n, k, value, integer(0), "vanishing"});
                }
            } else if ((m + 1) * b * k <= n && value != p[static_cast<std::size_t>(k)]) {
                plateau = false;
                rep.record({n, k, value, p[static_cast<std::size_t>(k)], "plateau"});
            }
        }
    }
    for (const auto &w : derived.witnesses)
        rep.record(w);
    rep.checks = {{"shift (k <= n/(m+1))", literal},
                  {"shift (k <= n/(m'+1))", derived.identity_holds},
                  {"vanishing", vanishing},
                  {"plateau", plateau}};
    rep.identity_holds = literal && derived.identity_holds && vanishing && plateau;
    rep.set_certified(true);
    return rep;
}

StabilizationReport verify_g22_convolution(long order)
{
    if (order < 0)
        throw std::invalid_argument("verify_g22_convolution: negative order");
    auto table = lambda_table(2, 2, order + 1);
    auto p = partition_numbers(order);
    StabilizationReport rep;
    rep.kind = "g22";
    rep.m = 2;
    rep.n_min = 0;
    rep.n_max = order;
    bool convolution = true, shift = true;
    for (long n = 0; n <= order; ++n) {
        const ZPolynomial &f = table.rows[static_cast<std::size_t>(n)];
        const ZPolynomial &next = table.rows[static_cast<std::size_t>(n) + 1];
        long empirical = -1;
        bool prefix = true;
        for (long k = 0; k <= std::max(f.degree(), n / 3); ++k) {
            integer expected = 0;
            for (long l = 0; l <= k; ++l)
                expected += p[static_cast<std::size_t>(l)] * p[static_cast<std::size_t>(k - l)];
            bool conv_ok = f.coeff(k) == expected;
            bool shift_ok = f.coeff(k) == next.coeff(k);
            prefix = prefix && conv_ok && shift_ok;
            if (prefix)
                empirical = k;
            if (3 * k > n)
                continue;
            if (!conv_ok) {
                convolution = false;
                rep.record({n, k, f.coeff(k), expected, "convolution"});
            }
            if (!shift_ok) {
                shift = false;
                rep.record({n, k, f.coeff(k), next.coeff(k), "shift"});
            }
        }
        rep.onsets.push_back({n, n / 3, empirical});
    }

    ProductSpec b_spec;
    b_spec.name = "g22_even";
    b_spec.rules.push_back(rule("j", "2*j"));
    auto b_seq = expand_product(b_spec, order);
    bool b_ok = true;
    for (long n = 0; n <= order; ++n) {
        ZPolynomial expected = n % 2 == 0 ? ZPolynomial::monomial(p[static_cast<std::size_t>(n / 2)], n / 2)
                                          : ZPolynomial();
        if (b_seq[n] != expected) {
            b_ok = false;
            rep.record({n, n / 2, b_seq[n].coeff(n / 2), expected.coeff(n / 2), "even-part expansion"});
        }
    }
    rep.checks = {{"convolution", convolution}, {"shift", shift}, {"even-part expansion", b_ok}};
    rep.identity_holds = convolution && shift && b_ok;
    rep.set_certified(true);
    return rep;
}

StabilizationReport verify_subsum_shift(long m, long i, long order)
{
    require_subsum_params(m, i);
    if (order < 0)
        throw std::invalid_argument("verify_subsum_shift: negative order");
    ZSequence seq;
    seq.spec = subsum_spec(m, i);
    seq.provenance = seq.spec->name;
    seq.order = order;
    seq.polys = lambda_table(m, i, order).rows;
    // With n' = n - i and k = j - 1 the identity reads [z^k]F_n' = [z^(k+1)]F_(n'+i)
    // for (i+1)(k+1) > n' + i.
    auto rep = verify_tail_shift(seq, i, [i](long n) { return (n + i) / (i + 1); }, "subsum-shift");
    for (auto &o : rep.onsets) {
        o.n += i;
        o.predicted += 1;
        o.empirical += 1;
    }
    for (auto &w : rep.witnesses) {
        w.n += i;
        w.k += 1;
    }
    rep.n_min = std::min(i, order);
    rep.n_max = order;
    rep.m = m;
    rep.set_certified(m > i + 1);
    return rep;
}

} // namespace partstab
