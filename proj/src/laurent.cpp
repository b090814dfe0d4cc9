#include "partstab/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partstab {

namespace {

FactorRule rule(const std::string &a, const std::string &b)
{
    FactorRule r;
    r.a = Expr::parse(a);
    r.b = Expr::parse(b);
    return r;
}

// Compares [z^(n-k)]F_n with [z^(n+1-k)]F_(n+1) for 0 <= m k <= n; the caller
// passes mirrored polynomials for the bottom tail.
bool scan_top(const std::vector<LaurentPolynomial> &polys, long m, const std::string &relation,
              StabilizationReport &rep, bool keep_onsets)
{
    bool ok = true;
    for (long n = 0; n + 1 < static_cast<long>(polys.size()); ++n) {
        const auto &f = polys[static_cast<std::size_t>(n)];
        const auto &g = polys[static_cast<std::size_t>(n) + 1];
        long predicted = n / m;
        for (long k = 0; k <= predicted; ++k) {
            if (f.coeff(n - k) != g.coeff(n + 1 - k)) {
                ok = false;
                rep.record({n, n - k, f.coeff(n - k), g.coeff(n + 1 - k), relation});
            }
        }
        if (!keep_onsets)
            continue;
        long last = n - std::min(f.min_exp(), g.min_exp() - 1);
        long empirical = -1;
        while (empirical < last && f.coeff(n - empirical - 1) == g.coeff(n - empirical))
            ++empirical;
        rep.onsets.push_back({n, predicted, empirical});
    }
    return ok;
}

StabilizationReport base_report(const LaurentSequence &seq, std::string kind, long m)
{
    if (seq.order < 1)
        throw std::invalid_argument(kind + ": sequence order must be at least 1");
    StabilizationReport rep;
    rep.kind = std::move(kind);
    rep.m = m;
    rep.n_min = 0;
    rep.n_max = seq.order - 1;
    return rep;
}

} // namespace

ProductSpec crank_spec()
{
    ProductSpec spec;
    spec.name = "crank";
    spec.laurent = true;
    spec.rules = {rule("1", "1"), rule("1", "-1"), rule("-1", "0")};
    return spec;
}

ProductSpec dt_spec()
{
    ProductSpec spec;
    spec.name = "dt";
    spec.laurent = true;
    spec.rules = {rule("j", "1"), rule("j", "-1"), rule("2*j", "0")};
    return spec;
}

LaurentSequence expand_crank(long order) { return expand_laurent(crank_spec(), order); }

LaurentSequence convolve_mirrored(const ZSequence &a, const ZSequence &b)
{
    if (a.order != b.order)
        throw std::invalid_argument("convolve_mirrored: orders differ (" + std::to_string(a.order) + " vs " +
                                    std::to_string(b.order) + ")");
    std::vector<LaurentPolynomial> mirrored;
    for (const auto &p : b.polys)
        mirrored.push_back(LaurentPolynomial(p).mirrored());
    LaurentSequence out;
    out.provenance = "convolve_mirrored(" + a.provenance + ", " + b.provenance + ")";
    out.order = a.order;
    for (long n = 0; n <= a.order; ++n) {
        LaurentPolynomial f;
        for (long l = 0; l <= n; ++l)
            f += LaurentPolynomial(a[l]) * mirrored[static_cast<std::size_t>(n - l)];
        out.polys.push_back(std::move(f));
    }
    return out;
}

ZSequence convolve_with_series(const ZSequence &a, const std::vector<integer> &q)
{
    if (static_cast<long>(q.size()) < a.order + 1)
        throw std::invalid_argument("convolve_with_series: series has " + std::to_string(q.size()) +
                                    " coefficients, need " + std::to_string(a.order + 1));
    ZSequence out;
    out.provenance = "convolve_with_series(" + a.provenance + ")";
    out.order = a.order;
    for (long n = 0; n <= a.order; ++n) {
        ZPolynomial f;
        for (long l = 0; l <= n; ++l) {
            const integer &c = q[static_cast<std::size_t>(n - l)];
            if (c == 0)
                continue;
            ZPolynomial term = a[l];
            term *= c;
            f += term;
        }
        out.polys.push_back(std::move(f));
    }
    return out;
}

HypothesisCheck check_two_sided_shape(const ProductSpec &spec, long order)
{
    HypothesisCheck h;
    h.kind = TailKind::upper;
    long first_up = 0, first_down = 0;
    auto flag = [&](const Factor &f, std::string reason) {
        h.violations.push_back(Violation{f.rule, f.j, f.z_exp, f.q_exp, std::move(reason)});
    };
    for (const Factor &f : instantiate_factors(spec, std::max(order, 1L))) {
        if (f.z_exp == 0)
            continue;
        if (f.z_exp != 1 && f.z_exp != -1) {
            flag(f, "z exponent must be -1, 0 or 1");
            continue;
        }
        if (f.sign != -1 || f.exponent > 0)
            flag(f, "factor with z must be 1/(1 - z^(+-1) q^i)^a with a >= 0");
        if (f.q_exp == 1)
            (f.z_exp == 1 ? first_up : first_down) += f.exponent;
    }
    if (first_up != -1)
        h.violations.push_back(Violation{0, 1, 1, 1, "need exactly 1/(1 - z q)"});
    if (first_down != -1)
        h.violations.push_back(Violation{0, 1, -1, 1, "need exactly 1/(1 - q / z)"});
    h.satisfied = h.violations.empty();
    h.m = 2;
    return h;
}

StabilizationReport verify_two_sided(const LaurentSequence &seq)
{
    auto rep = base_report(seq, "laurent", 2);
    bool top = scan_top(seq.polys, 2, "top", rep, true);
    std::vector<LaurentPolynomial> mirrored;
    for (const auto &p : seq.polys)
        mirrored.push_back(p.mirrored());
    bool bottom = scan_top(mirrored, 2, "bottom", rep, false);
    rep.identity_holds = top && bottom;
    rep.checks = {{"top", top}, {"bottom", bottom}};
    bool shape = false;
    if (seq.spec) {
        shape = check_two_sided_shape(*seq.spec, seq.order).satisfied;
        rep.checks.push_back({"shape", shape});
    }
    rep.set_certified(shape);
    if (shape)
        rep.label = "stated without proof; verified to order " + std::to_string(seq.order);
    return rep;
}

StabilizationReport verify_top_shift(const LaurentSequence &seq, long m)
{
    if (m < 1)
        throw std::invalid_argument("verify_top_shift: m must be positive");
    auto rep = base_report(seq, "top-shift", m);
    rep.identity_holds = scan_top(seq.polys, m, "top", rep, true);
    rep.set_certified(false);
    return rep;
}

} // namespace partstab
