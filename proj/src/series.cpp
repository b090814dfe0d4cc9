#include "partstab/series.hpp"

#include <stdexcept>
#include <string>

namespace partstab {

namespace {

void check_order(long order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative, got " + std::to_string(order));
}

} // namespace

template <class Poly>
TruncatedSeries<Poly>::TruncatedSeries(long order) : order_(order)
{
    check_order(order);
    terms_.resize(static_cast<std::size_t>(order) + 1);
    terms_[0] = Poly::constant(1);
}

template <class Poly>
TruncatedSeries<Poly>::TruncatedSeries(long order, std::vector<Poly> terms) : order_(order), terms_(std::move(terms))
{
    check_order(order);
    if (static_cast<long>(terms_.size()) != order + 1)
        throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                    std::to_string(order + 1) + " terms, got " + std::to_string(terms_.size()));
}

integer generalized_binomial(long top, long t)
{
    if (t < 0)
        return 0;
    integer top_z(top), out;
    mpz_bin_ui(out.get_mpz_t(), top_z.get_mpz_t(), static_cast<unsigned long>(t));
    return out;
}

template <class Poly>
TruncatedSeries<Poly> expand_factor(int sign, long z_exp, long q_exp, long exponent, long order)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("factor sign must be +1 or -1");
    if (q_exp < 1)
        throw std::invalid_argument("factor q exponent must be >= 1, got " + std::to_string(q_exp));
    check_order(order);

    std::vector<Poly> terms(static_cast<std::size_t>(order) + 1);
    // w = C(exponent, t) * sign^t, advanced by w *= (exponent - t) * sign / (t + 1).
    integer w(1);
    for (long t = 0; t * q_exp <= order; ++t) {
        if (w == 0)
            break;
        terms[static_cast<std::size_t>(t * q_exp)] = Poly::monomial(w, t * z_exp);
        w *= exponent - t;
        if (sign < 0)
            w = -w;
        mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(t + 1));
    }
    return TruncatedSeries<Poly>(order, std::move(terms));
}

template <class Poly>
TruncatedSeries<Poly> series_mul_truncated(const TruncatedSeries<Poly> &s, const TruncatedSeries<Poly> &t)
{
    if (s.order() != t.order())
        throw std::invalid_argument("series_mul_truncated: orders differ (" + std::to_string(s.order()) + " vs " +
                                    std::to_string(t.order()) + ")");
    long order = s.order();
    std::vector<Poly> out(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n) {
        Poly acc;
        for (long l = 0; l <= n; ++l) {
            const Poly &a = s.term(l);
            const Poly &b = t.term(n - l);
            if (a.is_zero() || b.is_zero())
                continue;
            acc += a * b;
        }
        out[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return TruncatedSeries<Poly>(order, std::move(out));
}

template class TruncatedSeries<ZPolynomial>;
template class TruncatedSeries<LaurentPolynomial>;
template ZSeries expand_factor<ZPolynomial>(int, long, long, long, long);
template LaurentSeries expand_factor<LaurentPolynomial>(int, long, long, long, long);
template ZSeries series_mul_truncated<ZPolynomial>(const ZSeries &, const ZSeries &);
template LaurentSeries series_mul_truncated<LaurentPolynomial>(const LaurentSeries &, const LaurentSeries &);

const integer &PowerSeries::coeff(long k) const
{
    if (k < 0 || k > order)
        throw std::out_of_range("PowerSeries::coeff: index " + std::to_string(k) + " beyond order " +
                                std::to_string(order));
    return coeffs[static_cast<std::size_t>(k)];
}

PowerSeries expand_univariate_product(std::span<const UnivariateFactor> factors, long z_order)
{
    check_order(z_order);
    PowerSeries out{z_order, std::vector<integer>(static_cast<std::size_t>(z_order) + 1)};
    auto &c = out.coeffs;
    c[0] = 1;
    for (const auto &f : factors) {
        if (f.z_exp < 1)
            throw std::invalid_argument("univariate factor needs z exponent >= 1, got " + std::to_string(f.z_exp));
        if (f.z_exp > z_order)
            continue;
        auto d = static_cast<std::size_t>(f.z_exp);
        auto top = static_cast<std::size_t>(z_order);
        // 1/(1 + s x): ascending in-place; (1 + s x): descending in-place.
        for (long rep = 0; rep < -f.exponent; ++rep) {
            for (std::size_t k = d; k <= top; ++k) {
                if (f.sign < 0)
                    c[k] += c[k - d];
                else
                    c[k] -= c[k - d];
            }
        }
        for (long rep = 0; rep < f.exponent; ++rep) {
            for (std::size_t k = top; k >= d; --k) {
                if (f.sign > 0)
                    c[k] += c[k - d];
                else
                    c[k] -= c[k - d];
            }
        }
    }
    return out;
}

} // namespace partstab
