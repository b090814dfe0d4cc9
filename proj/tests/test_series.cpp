#include <doctest.h>

#include <stdexcept>

#include "partstab/partition_count.hpp"
#include "partstab/series.hpp"

using namespace partstab;

namespace {

ZPolynomial mono(long c, long e) { return ZPolynomial::monomial(integer(c), e); }

std::vector<integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("geometric factor")
{
    auto s = expand_factor<ZPolynomial>(-1, 1, 1, -1, 3);
    CHECK(s.order() == 3);
    CHECK(s.term(0) == ZPolynomial{1});
    CHECK(s.term(1) == mono(1, 1));
    CHECK(s.term(2) == mono(1, 2));
    CHECK(s.term(3) == mono(1, 3));
}

TEST_CASE("binomial square")
{
    auto s = expand_factor<ZPolynomial>(1, 1, 2, 2, 4);
    CHECK(s.term(0) == ZPolynomial{1});
    CHECK(s.term(1).is_zero());
    CHECK(s.term(2) == mono(2, 1));
    CHECK(s.term(3).is_zero());
    CHECK(s.term(4) == mono(1, 2));
}

TEST_CASE("negative binomial with exponent -2")
{
    auto s = expand_factor<ZPolynomial>(-1, 2, 3, -2, 6);
    CHECK(s.term(3) == mono(2, 2));
    CHECK(s.term(6) == mono(3, 4));
    for (long n : {1, 2, 4, 5})
        CHECK(s.term(n).is_zero());
}

TEST_CASE("numerator with sign -1 alternates")
{
    // (1 - z q)^3 = 1 - 3zq + 3z^2q^2 - z^3q^3
    auto s = expand_factor<ZPolynomial>(-1, 1, 1, 3, 5);
    CHECK(s.term(1) == mono(-3, 1));
    CHECK(s.term(2) == mono(3, 2));
    CHECK(s.term(3) == mono(-1, 3));
    CHECK(s.term(4).is_zero());
}

TEST_CASE("Laurent factor with negative z exponent")
{
    auto s = expand_factor<LaurentPolynomial>(-1, -1, 1, -1, 2);
    CHECK(s.term(2) == LaurentPolynomial::monomial(integer(1), -2));
}

TEST_CASE("expand_factor rejects bad input")
{
    CHECK_THROWS_AS(expand_factor<ZPolynomial>(-1, 1, 0, -1, 3), std::invalid_argument);
    CHECK_THROWS_AS(expand_factor<ZPolynomial>(-1, 1, 1, -1, -1), std::invalid_argument);
    CHECK_THROWS_AS(expand_factor<ZPolynomial>(2, 1, 1, -1, 3), std::invalid_argument);
}

TEST_CASE("Cauchy product")
{
    auto g = expand_factor<ZPolynomial>(-1, 1, 1, -1, 2);
    auto sq = series_mul_truncated(g, g);
    CHECK(sq.term(0) == ZPolynomial{1});
    CHECK(sq.term(1) == mono(2, 1));
    CHECK(sq.term(2) == mono(3, 2));

    ZSeries one(2);
    CHECK(series_mul_truncated(g, one) == g);

    ZSeries s(1, {ZPolynomial{1}, mono(1, 1)});
    ZSeries t(1, {ZPolynomial{1}, mono(1, 2)});
    auto st = series_mul_truncated(s, t);
    CHECK(st.term(1) == ZPolynomial{0, 1, 1});

    CHECK_THROWS_AS(series_mul_truncated(g, ZSeries(3)), std::invalid_argument);
    CHECK_THROWS_AS(ZSeries(2, {ZPolynomial{1}}), std::invalid_argument);
}

TEST_CASE("multiplication commutes and associates")
{
    auto a = expand_factor<ZPolynomial>(1, 2, 1, 3, 8);
    auto b = expand_factor<ZPolynomial>(-1, 1, 2, -2, 8);
    auto c = expand_factor<ZPolynomial>(-1, 0, 3, 4, 8);
    CHECK(series_mul_truncated(a, b) == series_mul_truncated(b, a));
    CHECK(series_mul_truncated(series_mul_truncated(a, b), c) ==
          series_mul_truncated(a, series_mul_truncated(b, c)));
}

TEST_CASE("generalized binomial")
{
    CHECK(generalized_binomial(5, 2) == 10);
    CHECK(generalized_binomial(2, 3) == 0);
    CHECK(generalized_binomial(-1, 4) == 1);
    CHECK(generalized_binomial(-2, 3) == -4);
    CHECK(generalized_binomial(-3, 2) == 6);
    CHECK(generalized_binomial(7, 0) == 1);
}

TEST_CASE("univariate products")
{
    std::vector<UnivariateFactor> parts;
    for (long d = 1; d <= 5; ++d)
        parts.push_back({-1, d, -1});
    auto p = expand_univariate_product(parts, 5);
    CHECK(p.coeffs == ints({1, 1, 2, 3, 5, 7}));

    auto empty = expand_univariate_product({}, 3);
    CHECK(empty.order == 3);
    CHECK(empty.coeffs == ints({1, 0, 0, 0}));

    std::vector<UnivariateFactor> even{{-1, 2, -1}};
    CHECK(expand_univariate_product(even, 6).coeffs == ints({1, 0, 1, 0, 1, 0, 1}));

    // (1 + x)^2 (1 - x^2)^-1 keeps trailing zeros out to the order.
    std::vector<UnivariateFactor> mixed{{1, 1, 2}, {-1, 2, -1}};
    CHECK(expand_univariate_product(mixed, 4).coeffs == ints({1, 2, 2, 2, 2}));

    std::vector<UnivariateFactor> bad{{-1, 0, -1}};
    CHECK_THROWS_AS(expand_univariate_product(bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(p.coeff(6), std::out_of_range);
}

TEST_CASE("partition product evaluated at z = 1 gives p(n)")
{
    ZSeries acc(60);
    for (long j = 1; j <= 60; ++j)
        acc = series_mul_truncated(acc, expand_factor<ZPolynomial>(-1, 1, j, -1, 60));
    auto p = partition_numbers(60);
    for (long n = 0; n <= 60; ++n)
        CHECK(acc.term(n).evaluate(1) == p[static_cast<std::size_t>(n)]);
}
