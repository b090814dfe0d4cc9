#pragma once

#include <span>
#include <vector>

#include "partstab/polynomial.hpp"

namespace partstab {

/// Power series in q truncated after q^order, with polynomial coefficients.
template <class Poly>
class TruncatedSeries {
public:
    /// The series 1 + O(q^(order+1)).
    explicit TruncatedSeries(long order);
    /// terms.size() must equal order + 1.
    TruncatedSeries(long order, std::vector<Poly> terms);

    long order() const { return order_; }
    const Poly &term(long n) const { return terms_.at(static_cast<std::size_t>(n)); }
    std::span<const Poly> terms() const { return terms_; }

    bool operator==(const TruncatedSeries &o) const = default;

private:
    long order_;
    std::vector<Poly> terms_;
};

using ZSeries = TruncatedSeries<ZPolynomial>;
using LaurentSeries = TruncatedSeries<LaurentPolynomial>;

/// (1 + sign z^z_exp q^q_exp)^exponent, expanded by the generalized binomial
/// theorem and truncated after q^order.
template <class Poly>
TruncatedSeries<Poly> expand_factor(int sign, long z_exp, long q_exp, long exponent, long order);

/// Cauchy product of two series of the same order.
template <class Poly>
TruncatedSeries<Poly> series_mul_truncated(const TruncatedSeries<Poly> &s, const TruncatedSeries<Poly> &t);

/// Generalized binomial coefficient C(top, t) for any integer top.
integer generalized_binomial(long top, long t);

/// A truncated univariate series c_0 + c_1 z + ... + c_order z^order. Unlike
/// ZPolynomial it keeps trailing zeros, so the truncation order survives.
struct PowerSeries {
    long order = 0;
    std::vector<integer> coeffs;

    const integer &coeff(long k) const;
    bool operator==(const PowerSeries &o) const = default;
};

struct UnivariateFactor {
    int sign = -1;
    long z_exp = 1;
    long exponent = -1;
};

/// Product of (1 + sign z^z_exp)^exponent over the factors, truncated after
/// z^z_order. Factors with z_exp > z_order are ignored; z_exp must be >= 1.
PowerSeries expand_univariate_product(std::span<const UnivariateFactor> factors, long z_order);

} // namespace partstab
