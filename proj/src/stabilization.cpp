#include "partstab/stabilization.hpp"

#include <algorithm>
#include <set>

namespace partstab {

namespace {

using Skip = std::function<bool(long long)>;

Expr lit(long long v) { return Expr::constant(v); }

Violation violation(const FactorRule &rule, std::size_t r, long long j, std::string reason)
{
    return Violation{r, j, rule.b(j), rule.c(j), std::move(reason)};
}

// Up to `limit` indices of rule r with e(j) < t, ascending, honouring skip.
std::vector<long long> all_below(const FactorRule &rule, const Expr &e, long long t, const Skip &skip,
                                 std::size_t limit)
{
    std::vector<long long> out;
    std::set<long long> seen;
    while (out.size() < limit) {
        auto j = first_below(e, t, rule.range(), [&](long long jj) { return skip(jj) || seen.count(jj) > 0; });
        if (!j)
            break;
        out.push_back(*j);
        seen.insert(*j);
    }
    return out;
}

// First index of rule r whose factor is not trivially 1 (a(j) != 0).
std::optional<long long> first_nontrivial(const FactorRule &rule, const Skip &skip)
{
    auto lo = first_below(rule.a, 0, rule.range(), skip);
    auto hi = first_below(lit(0) - rule.a, 0, rule.range(), skip);
    if (lo && hi)
        return std::min(*lo, *hi);
    return lo ? lo : hi;
}

struct Distinguished {
    std::size_t rule;
    long long j;
};

class Checker {
public:
    Checker(const ProductSpec &spec, TailKind kind) : spec_(spec) { h_.kind = kind; }

    Skip skip_for(std::size_t r) const
    {
        return [this, r](long long j) {
            if (first_ && first_->rule == r && first_->j == j)
                return true;
            return spec_.rules[r].a(j) == 0;
        };
    }

    void flag(std::size_t r, long long j, std::string reason)
    {
        h_.violations.push_back(violation(spec_.rules[r], r, j, std::move(reason)));
    }

    // Every non-distinguished factor must be a plain denominator 1/(1 - z^b q^c)^a, a >= 0.
    void require_denominators()
    {
        for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
            const auto &rule = spec_.rules[r];
            auto skip = skip_for(r);
            if (rule.sign != -1) {
                if (auto j = first_nontrivial(rule, skip))
                    flag(r, *j, "factor has sign +1");
            }
            if (auto j = first_below(rule.a, 0, rule.range(), skip))
                flag(r, *j, "negative exponent a(j)");
        }
    }

    // Smallest j over all rules where e_r(j) < 0, for the expression built by make(rule).
    bool holds_everywhere(const std::function<Expr(const FactorRule &)> &make) const
    {
        for (std::size_t r = 0; r < spec_.rules.size(); ++r)
            if (first_below(make(spec_.rules[r]), 0, spec_.rules[r].range(), skip_for(r)))
                return false;
        return true;
    }

    void flag_where(const std::function<Expr(const FactorRule &)> &make, const std::string &reason)
    {
        for (std::size_t r = 0; r < spec_.rules.size(); ++r)
            if (auto j = first_below(make(spec_.rules[r]), 0, spec_.rules[r].range(), skip_for(r)))
                flag(r, *j, reason);
    }

    HypothesisCheck upper()
    {
        for (const Factor &f : instantiate_factors(spec_, 1)) {
            if (f.sign == -1 && f.z_exp == 1 && f.exponent == -1) {
                first_ = Distinguished{f.rule, f.j};
                break;
            }
        }
        if (!first_)
            h_.violations.push_back(Violation{0, 1, 0, 0, "no factor 1/(1 - z q)"});
        require_denominators();
        flag_where([](const FactorRule &rule) { return rule.b; }, "negative z exponent b(j)");

        auto bound_for = [](long m) {
            return [m](const FactorRule &rule) { return rule.c - lit(m) * rule.b; };
        };
        long m_hi = kUnboundedModulus;
        for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
            const auto &rule = spec_.rules[r];
            if (auto j = first_below(lit(0) - rule.b, 0, rule.range(), skip_for(r)))
                m_hi = std::min<long>(m_hi, static_cast<long>(rule.c(*j) / rule.b(*j)));
        }
        if (m_hi >= 2 && holds_everywhere(bound_for(2))) {
            long lo = 2, hi = m_hi; // lo valid
            while (lo < hi) {
                long mid = lo + (hi - lo + 1) / 2;
                if (holds_everywhere(bound_for(mid)))
                    lo = mid;
                else
                    hi = mid - 1;
            }
            h_.m = lo;
        } else {
            flag_where(bound_for(2), "m b(j) > c(j) already for m = 2");
        }
        return finish();
    }

    HypothesisCheck lower()
    {
        instantiate_factors(spec_, 1);
        std::vector<Distinguished> z_free;
        for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
            const auto &rule = spec_.rules[r];
            for (long long j : all_below(rule, rule.b, 1, skip_for(r), 3)) {
                if (rule.b(j) < 0)
                    flag(r, j, "negative z exponent b(j)");
                else
                    z_free.push_back({r, j});
            }
        }
        if (z_free.size() != 1) {
            if (z_free.empty())
                h_.violations.push_back(Violation{0, 1, 0, 0, "no z-free first factor"});
            for (const auto &d : z_free)
                flag(d.rule, d.j, "more than one z-free factor");
        } else {
            first_ = z_free.front();
            const auto &rule = spec_.rules[first_->rule];
            if (rule.sign != -1 || rule.a(first_->j) != 1)
                flag(first_->rule, first_->j, "z-free factor must be 1/(1 - q^c)");
            h_.shift = static_cast<long>(rule.c(first_->j));
        }
        require_denominators();

        auto bound_for = [](long m) {
            return [m](const FactorRule &rule) { return lit(m + 1) * rule.b - rule.c - lit(1); };
        };
        long hi = 1;
        while (hi < kUnboundedModulus && !holds_everywhere(bound_for(hi)))
            hi *= 2;
        if (!holds_everywhere(bound_for(hi))) {
            flag_where(bound_for(hi), "(m + 1) b(j) <= c(j) for every m tried");
        } else {
            long lo = hi / 2; // invalid, or 0
            while (hi - lo > 1) {
                long mid = lo + (hi - lo) / 2;
                if (holds_everywhere(bound_for(mid)))
                    hi = mid;
                else
                    lo = mid;
            }
            h_.m = hi;
        }
        return finish();
    }

    HypothesisCheck periodic()
    {
        require_denominators();
        for (std::size_t r = 0; r < spec_.rules.size(); ++r) {
            const auto &rule = spec_.rules[r];
            if (auto j = first_below(rule.b, 1, rule.range(), skip_for(r)))
                flag(r, *j, "z exponent b(j) must be 1");
            if (auto j = first_below(lit(0) - rule.b, -1, rule.range(), skip_for(r)))
                flag(r, *j, "z exponent b(j) must be 1");
        }
        for (const Factor &f : instantiate_factors(spec_, 1))
            flag(f.rule, f.j, "a_1 must be 0 (no factor with c = 1)");
        long at_two = 0;
        for (const Factor &f : instantiate_factors(spec_, 2)) {
            if (f.q_exp != 2)
                continue;
            ++at_two;
            if (f.exponent != -1)
                flag(f.rule, f.j, "a_2 must be 1");
        }
        if (at_two != 1)
            h_.violations.push_back(Violation{0, 2, 1, 2, "need exactly one factor 1/(1 - z q^2)"});
        return finish();
    }

private:
    HypothesisCheck finish()
    {
        h_.satisfied = h_.violations.empty();
        return h_;
    }

    const ProductSpec &spec_;
    HypothesisCheck h_;
    std::optional<Distinguished> first_;
};

const char *label_for(bool certified) { return certified ? "certified" : "empirical only"; }

} // namespace

std::string_view to_string(TailKind kind)
{
    switch (kind) {
    case TailKind::upper:
        return "upper";
    case TailKind::lower:
        return "lower";
    case TailKind::periodic:
        return "periodic";
    }
    return "?";
}

HypothesisCheck check_hypotheses(const ProductSpec &spec, TailKind kind)
{
    Checker checker(spec, kind);
    switch (kind) {
    case TailKind::upper:
        return checker.upper();
    case TailKind::lower:
        return checker.lower();
    case TailKind::periodic:
        return checker.periodic();
    }
    return {};
}

void StabilizationReport::record(Witness w)
{
    ++violation_count;
    if (witnesses.size() < kMaxWitnesses)
        witnesses.push_back(std::move(w));
}

void StabilizationReport::set_certified(bool yes)
{
    certified = yes;
    label = label_for(yes);
}

bool StabilizationReport::all_checks_hold() const
{
    return identity_holds && limit_match.value_or(true) && bound_holds.value_or(true) &&
           std::all_of(checks.begin(), checks.end(), [](const NamedCheck &c) { return c.holds; });
}

PowerSeries limiting_sequence(const ProductSpec &spec, long z_order)
{
    if (z_order < 0)
        throw std::invalid_argument("limiting_sequence: negative order");
    // The product runs over every factor but the first one, 1/(1 - z q); a
    // lone 1/(1 - z^b q) with another b takes its place.
    std::optional<Distinguished> first;
    for (const Factor &f : instantiate_factors(spec, 1)) {
        if (f.sign != -1 || f.exponent != -1)
            continue;
        if (!first || f.z_exp == 1)
            first = Distinguished{f.rule, f.j};
        if (f.z_exp == 1)
            break;
    }
    if (!first)
        throw spec_error("limiting_sequence: spec has no first factor 1/(1 - z q)");

    std::vector<UnivariateFactor> factors;
    for (std::size_t r = 0; r < spec.rules.size(); ++r) {
        const auto &rule = spec.rules[r];
        Skip skip = [&](long long j) { return (first->rule == r && first->j == j) || rule.a(j) == 0; };
        Expr diff = rule.c - rule.b;
        if (auto j = first_below(diff, 1, rule.range(), skip))
            throw spec_error("limiting_sequence: c(j) - b(j) = " + std::to_string(diff(*j)) + " at rule " +
                             std::to_string(r) + ", j=" + std::to_string(*j) + " (must be positive)");
        for (long long j : indices_at_most(diff, z_order, rule.range())) {
            if (skip(j))
                continue;
            factors.push_back(UnivariateFactor{rule.sign, static_cast<long>(diff(j)), static_cast<long>(-rule.a(j))});
        }
    }
    return expand_univariate_product(factors, z_order);
}

StabilizationReport verify_tail_shift(const ZSequence &seq, long step, const std::function<long(long)> &first_k,
                                      std::string kind)
{
    StabilizationReport rep;
    rep.kind = std::move(kind);
    rep.n_min = 0;
    rep.n_max = seq.order - step;
    for (long n = 0; n + step <= seq.order; ++n) {
        const ZPolynomial &lo = seq[n];
        const ZPolynomial &hi = seq[n + step];
        long predicted = std::max(0L, first_k(n));
        long top = std::max({lo.degree(), hi.degree() - 1, predicted - 1}) + 1;
        for (long k = predicted; k <= top; ++k) {
            if (lo.coeff(k) != hi.coeff(k + 1)) {
                rep.identity_holds = false;
                rep.record({n, k, lo.coeff(k), hi.coeff(k + 1), "shift"});
            }
        }
        long empirical = top;
        while (empirical > 0 && lo.coeff(empirical - 1) == hi.coeff(empirical))
            --empirical;
        rep.onsets.push_back({n, predicted, empirical});
    }
    rep.set_certified(false);
    return rep;
}

StabilizationReport verify_upper(const ZSequence &seq, long m, const std::optional<PowerSeries> &limit)
{
    if (seq.order < 2)
        throw std::invalid_argument("verify_upper: sequence order must be at least 2");
    if (m < 1)
        throw std::invalid_argument("verify_upper: m must be positive");
    if (limit && limit->order < seq.order)
        throw std::invalid_argument("verify_upper: limit has order " + std::to_string(limit->order) +
                                    ", need at least " + std::to_string(seq.order));

    auto rep = verify_tail_shift(seq, 1, [m](long n) { return n / m + 1; }, "upper");
    rep.m = m;
    if (limit) {
        rep.limit_match = true;
        rep.bound_holds = true;
        for (long n = 0; n <= seq.order; ++n) {
            const ZPolynomial &f = seq[n];
            for (long l = 0; l <= n; ++l) {
                const integer &top = f.coeff(n - l);
                const integer &lim = limit->coeff(l);
                if (l <= n / m && top != lim) {
                    rep.limit_match = false;
                    rep.record({n, n - l, top, lim, "limit"});
                }
                if (top > lim) {
                    rep.bound_holds = false;
                    rep.record({n, n - l, top, lim, "bound"});
                }
            }
        }
    }
    bool certified = false;
    if (seq.spec) {
        auto h = check_hypotheses(*seq.spec, TailKind::upper);
        certified = h.satisfied && h.m && m <= *h.m;
    }
    rep.set_certified(certified);
    return rep;
}

StabilizationReport verify_lower_shift(const ZSequence &seq, long c1, long m)
{
    if (c1 < 1 || m < 1)
        throw std::invalid_argument("verify_lower_shift: c1 and m must be positive");
    StabilizationReport rep;
    rep.kind = "lower";
    rep.m = m;
    rep.n_min = 0;
    rep.n_max = seq.order - c1;
    for (long n = 0; n + c1 <= seq.order; ++n) {
        const ZPolynomial &lo = seq[n];
        const ZPolynomial &hi = seq[n + c1];
        long predicted = n / (m + 1);
        for (long k = 0; k <= predicted; ++k) {
            if (lo.coeff(k) != hi.coeff(k)) {
                rep.identity_holds = false;
                rep.record({n, k, lo.coeff(k), hi.coeff(k), "lower-shift"});
            }
        }
        long top = std::max({lo.degree(), hi.degree(), predicted});
        long empirical = -1;
        while (empirical < top && lo.coeff(empirical + 1) == hi.coeff(empirical + 1))
            ++empirical;
        rep.onsets.push_back({n, predicted, empirical});
    }
    bool certified = false;
    if (seq.spec) {
        auto h = check_hypotheses(*seq.spec, TailKind::lower);
        certified = h.satisfied && h.shift == c1 && h.m && m >= *h.m;
    }
    rep.set_certified(certified);
    return rep;
}

StabilizationReport verify_periodic_shift(const ZSequence &seq)
{
    auto rep = verify_tail_shift(seq, 2, [](long n) { return (n + 2) / 3; }, "periodic");
    bool degree_ok = true;
    for (long n = 0; n <= seq.order; ++n) {
        const ZPolynomial &f = seq[n];
        // F_1 is the zero polynomial; the law is read as "no parts >= 2 sum to 1".
        bool ok = n == 1 ? f.is_zero() : f.degree() == n / 2;
        if (!ok) {
            degree_ok = false;
            rep.record({n, f.degree(), integer(f.degree()), integer(n / 2), "degree"});
        }
    }
    rep.checks.push_back({"shift", rep.identity_holds});
    rep.checks.push_back({"degree", degree_ok});
    bool certified = seq.spec && check_hypotheses(*seq.spec, TailKind::periodic).satisfied;
    rep.set_certified(certified);
    return rep;
}

integer fast_tail_coefficient(const ProductSpec &spec, long n, long ell)
{
    if (n < 0 || ell < 0)
        throw std::invalid_argument("fast_tail_coefficient: n and ell must be nonnegative");
    auto h = check_hypotheses(spec, TailKind::upper);
    if (!h.satisfied || !h.m)
        throw std::invalid_argument("fast_tail_coefficient: upper-tail hypotheses do not hold for '" + spec.name +
                                    "'");
    if (ell > n / *h.m)
        throw stability_range_error("ell = " + std::to_string(ell) + " is outside guaranteed stable range (ell <= " +
                                    std::to_string(n / *h.m) + " for n = " + std::to_string(n) +
                                    ", m = " + std::to_string(*h.m) + ")");
    return limiting_sequence(spec, ell).coeff(ell);
}

} // namespace partstab
