#pragma once

#include <random>
#include <string>

#include "partstab/product_spec.hpp"

namespace partstab::testing {

using Rng = std::mt19937_64;

inline long pick(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline std::string affine(long slope, long offset)
{
    return std::to_string(slope) + "*j+(" + std::to_string(offset) + ")";
}

inline FactorRule make_rule(const std::string &a, const std::string &b, const std::string &c, int sign = -1)
{
    FactorRule r;
    r.a = Expr::parse(a);
    r.b = Expr::parse(b);
    r.c = Expr::parse(c);
    r.sign = sign;
    return r;
}

// Mixed numerators and denominators, j <= 12 where bounded, small exponents.
inline ProductSpec random_oracle_spec(Rng &rng)
{
    ProductSpec spec;
    spec.name = "random";
    long rules = pick(rng, 1, 3);
    for (long r = 0; r < rules; ++r) {
        int sign = pick(rng, 0, 2) == 0 ? 1 : -1;
        static const char *exps[] = {"1", "2", "3", "-1", "-2", "j", "floor(j/2)", "ceil(j/2)", "-j"};
        std::string a = exps[pick(rng, 0, 8)];
        static const char *zs[] = {"0", "1", "2", "3", "j", "j-1"};
        std::string b = zs[pick(rng, 0, 5)];
        long s = pick(rng, 1, 3);
        long t = pick(rng, 1 - s, 2);
        FactorRule rule = make_rule(a, b, affine(s, t), sign);
        if (pick(rng, 0, 1) == 0)
            rule.j_max = pick(rng, 1, 12);
        spec.rules.push_back(rule);
    }
    return spec;
}

// One factor 1/(1 - z q); every other factor 1/(1 - z^b q^c)^a with a >= 0 and
// m b <= c for the drawn m.
inline ProductSpec random_upper_spec(Rng &rng)
{
    ProductSpec spec;
    spec.name = "random_upper";
    long m = pick(rng, 2, 3);
    if (pick(rng, 0, 1) == 0) {
        FactorRule first = make_rule("1", "1", "j");
        first.j_max = 1;
        spec.rules.push_back(first);
    } else {
        spec.rules.push_back(make_rule("1", "1", "j")); // m <= 2 from j = 2
        m = 2;
    }
    long extra = pick(rng, 1, 3);
    for (long r = 0; r < extra; ++r) {
        long b_slope = pick(rng, 0, 1);
        long b0 = pick(rng, 0, 2);
        long c_slope = m * b_slope + pick(rng, 0, 2);
        if (c_slope == 0)
            c_slope = 1;
        long c0 = m * b0 + pick(rng, 0, 3);
        if (c_slope + c0 < 2)
            c0 = 2 - c_slope;
        static const char *exps[] = {"1", "2", "3", "j", "floor(j/2)"};
        FactorRule rule = make_rule(exps[pick(rng, 0, 4)], affine(b_slope, b0), affine(c_slope, c0));
        if (pick(rng, 0, 1) == 0)
            rule.j_max = pick(rng, 1, 12);
        spec.rules.push_back(rule);
    }
    return spec;
}

// prod_j 1/(1 - z^b(j) q^c(j))^a(j) with b(1) = 0, a(1) = 1, b and c strictly
// increasing.
inline ProductSpec random_lower_spec(Rng &rng)
{
    ProductSpec spec;
    spec.name = "random_lower";
    long beta = pick(rng, 1, 2);
    long gamma = pick(rng, 1, 3);
    long c1 = pick(rng, 1, 4);
    static const char *exps[] = {"1", "j", "ceil(j/2)", "floor(j/2)+1"};
    spec.rules.push_back(make_rule(exps[pick(rng, 0, 3)], affine(beta, -beta), affine(gamma, c1 - gamma)));
    return spec;
}

} // namespace partstab::testing
