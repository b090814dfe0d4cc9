#pragma once

#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace partstab {

using integer = mpz_class;

inline std::string to_decimal(const integer &v) { return v.get_str(10); }

/// Dense polynomial in z with arbitrary-precision integer coefficients.
///
/// Entry k of the coefficient list is the coefficient of z^k. The list never
/// ends in a zero; the zero polynomial is the empty list.
class ZPolynomial {
public:
    ZPolynomial() = default;
    explicit ZPolynomial(std::vector<integer> coeffs);
    ZPolynomial(std::initializer_list<long> coeffs);

    static ZPolynomial constant(const integer &c);
    static ZPolynomial monomial(const integer &c, long exp);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const integer &coeff(long k) const;
    std::span<const integer> coeffs() const { return coeffs_; }

    integer evaluate(const integer &z) const;

    /// *this += sign * z^shift * src. shift must be nonnegative.
    void add_shifted(const ZPolynomial &src, long shift, int sign);

    ZPolynomial &operator+=(const ZPolynomial &o);
    ZPolynomial &operator-=(const ZPolynomial &o);
    ZPolynomial &operator*=(const integer &c);

    friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial &b) { return a += b; }
    friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial &b) { return a -= b; }
    friend ZPolynomial operator*(const ZPolynomial &a, const ZPolynomial &b);

    bool operator==(const ZPolynomial &o) const = default;

    std::string to_string() const;

private:
    void normalize();

    std::vector<integer> coeffs_;
};

/// Polynomial in z and 1/z. Entry t of the coefficient list is the
/// coefficient of z^(min_exp + t); the first and last entries are nonzero
/// unless the polynomial is zero (empty list, min_exp 0).
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long min_exp, std::vector<integer> coeffs);
    explicit LaurentPolynomial(const ZPolynomial &p);

    static LaurentPolynomial constant(const integer &c);
    static LaurentPolynomial monomial(const integer &c, long exp);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exp() const { return min_exp_; }
    /// min_exp() - 1 for the zero polynomial.
    long max_exp() const { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    const integer &coeff(long k) const;
    std::span<const integer> coeffs() const { return coeffs_; }

    /// Sum of coefficients, i.e. the value at z = 1.
    integer evaluate_at_one() const;
    /// P(1/z).
    LaurentPolynomial mirrored() const;
    bool is_symmetric() const;

    void add_shifted(const LaurentPolynomial &src, long shift, int sign);

    LaurentPolynomial &operator+=(const LaurentPolynomial &o);
    LaurentPolynomial &operator-=(const LaurentPolynomial &o);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);

    bool operator==(const LaurentPolynomial &o) const = default;

    std::string to_string() const;

private:
    void normalize();

    long min_exp_ = 0;
    std::vector<integer> coeffs_;
};

/// Throws std::domain_error if p has a negative exponent.
ZPolynomial to_ordinary(const LaurentPolynomial &p);

} // namespace partstab
