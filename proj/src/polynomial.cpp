#include "partstab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partstab {

namespace {

const integer &zero_coefficient()
{
    static const integer zero(0);
    return zero;
}

void append_term(std::ostringstream &os, const integer &c, long exp, bool first)
{
    if (c == 0)
        return;
    integer mag = abs(c);
    if (!first)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    bool unit = mag == 1;
    if (!unit || exp == 0)
        os << mag.get_str();
    if (exp == 0)
        return;
    if (!unit)
        os << "*";
    os << "z";
    if (exp != 1)
        os << "^" << exp;
}

} // namespace

// ---------------------------------------------------------------- ZPolynomial

ZPolynomial::ZPolynomial(std::vector<integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ZPolynomial::ZPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

ZPolynomial ZPolynomial::constant(const integer &c) { return ZPolynomial(std::vector<integer>{c}); }

ZPolynomial ZPolynomial::monomial(const integer &c, long exp)
{
    if (exp < 0)
        throw std::domain_error("ZPolynomial: negative exponent " + std::to_string(exp));
    std::vector<integer> v(static_cast<std::size_t>(exp) + 1);
    v.back() = c;
    return ZPolynomial(std::move(v));
}

void ZPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const integer &ZPolynomial::coeff(long k) const
{
    if (k < 0 || k >= static_cast<long>(coeffs_.size()))
        return zero_coefficient();
    return coeffs_[static_cast<std::size_t>(k)];
}

integer ZPolynomial::evaluate(const integer &z) const
{
    integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

void ZPolynomial::add_shifted(const ZPolynomial &src, long shift, int sign)
{
    if (src.is_zero())
        return;
    if (shift < 0)
        throw std::domain_error("ZPolynomial::add_shifted: negative shift");
    if (&src == this) {
        ZPolynomial copy = src;
        add_shifted(copy, shift, sign);
        return;
    }
    auto offset = static_cast<std::size_t>(shift);
    if (coeffs_.size() < src.coeffs_.size() + offset)
        coeffs_.resize(src.coeffs_.size() + offset);
    if (sign > 0) {
        for (std::size_t i = 0; i < src.coeffs_.size(); ++i)
            coeffs_[i + offset] += src.coeffs_[i];
    } else {
        for (std::size_t i = 0; i < src.coeffs_.size(); ++i)
            coeffs_[i + offset] -= src.coeffs_[i];
    }
    normalize();
}

ZPolynomial &ZPolynomial::operator+=(const ZPolynomial &o)
{
    add_shifted(o, 0, 1);
    return *this;
}

ZPolynomial &ZPolynomial::operator-=(const ZPolynomial &o)
{
    add_shifted(o, 0, -1);
    return *this;
}

ZPolynomial &ZPolynomial::operator*=(const integer &c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &x : coeffs_)
        x *= c;
    return *this;
}

ZPolynomial operator*(const ZPolynomial &a, const ZPolynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return ZPolynomial(std::move(out));
}

std::string ZPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        append_term(os, coeffs_[k], static_cast<long>(k), first);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------- LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(long min_exp, std::vector<integer> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs))
{
    normalize();
}

LaurentPolynomial::LaurentPolynomial(const ZPolynomial &p)
    : min_exp_(0), coeffs_(p.coeffs().begin(), p.coeffs().end())
{
    normalize();
}

LaurentPolynomial LaurentPolynomial::constant(const integer &c) { return LaurentPolynomial(0, {c}); }

LaurentPolynomial LaurentPolynomial::monomial(const integer &c, long exp) { return LaurentPolynomial(exp, {c}); }

void LaurentPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const integer &c) { return c != 0; });
    min_exp_ += static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty())
        min_exp_ = 0;
}

const integer &LaurentPolynomial::coeff(long k) const
{
    long t = k - min_exp_;
    if (t < 0 || t >= static_cast<long>(coeffs_.size()))
        return zero_coefficient();
    return coeffs_[static_cast<std::size_t>(t)];
}

integer LaurentPolynomial::evaluate_at_one() const
{
    integer acc(0);
    for (const auto &c : coeffs_)
        acc += c;
    return acc;
}

LaurentPolynomial LaurentPolynomial::mirrored() const
{
    if (is_zero())
        return {};
    std::vector<integer> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPolynomial(-max_exp(), std::move(rev));
}

bool LaurentPolynomial::is_symmetric() const { return *this == mirrored(); }

void LaurentPolynomial::add_shifted(const LaurentPolynomial &src, long shift, int sign)
{
    if (src.is_zero())
        return;
    if (&src == this) {
        LaurentPolynomial copy = src;
        add_shifted(copy, shift, sign);
        return;
    }
    long lo = src.min_exp_ + shift;
    long hi = src.max_exp() + shift;
    if (is_zero()) {
        min_exp_ = lo;
        coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), integer(0));
    } else {
        if (lo < min_exp_) {
            coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - lo), integer(0));
            min_exp_ = lo;
        }
        if (hi > max_exp())
            coeffs_.resize(static_cast<std::size_t>(hi - min_exp_ + 1));
    }
    auto offset = static_cast<std::size_t>(lo - min_exp_);
    for (std::size_t i = 0; i < src.coeffs_.size(); ++i) {
        if (sign > 0)
            coeffs_[i + offset] += src.coeffs_[i];
        else
            coeffs_[i + offset] -= src.coeffs_[i];
    }
    normalize();
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &o)
{
    add_shifted(o, 0, 1);
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &o)
{
    add_shifted(o, 0, -1);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return LaurentPolynomial(a.min_exp_ + b.min_exp_, std::move(out));
}

std::string LaurentPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0)
            continue;
        append_term(os, coeffs_[t], min_exp_ + static_cast<long>(t), first);
        first = false;
    }
    return os.str();
}

ZPolynomial to_ordinary(const LaurentPolynomial &p)
{
    if (p.is_zero())
        return {};
    if (p.min_exp() < 0)
        throw std::domain_error("polynomial has negative exponent " + std::to_string(p.min_exp()));
    std::vector<integer> v(static_cast<std::size_t>(p.min_exp()), integer(0));
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return ZPolynomial(std::move(v));
}

} // namespace partstab
