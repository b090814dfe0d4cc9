#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace partstab {

/// Raised for malformed or non-convergent product descriptions.
class spec_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer-valued expression in the index j.
///
/// Grammar: integer constants, j, + - *, unary minus, parentheses, and
/// floor(j/d), ceil(j/d) for a positive integer constant d. On each residue
/// class of j modulo the lcm of the divisors such an expression is a
/// polynomial in j with rational coefficients, which is what makes the
/// growth queries below exact.
class Expr {
public:
    /// The constant 0.
    Expr();
    static Expr parse(std::string_view text);
    static Expr constant(long long v);
    static Expr index();

    long long operator()(long long j) const;
    /// Source text (parsed expressions) or a canonical rendering.
    const std::string &text() const { return text_; }

    /// lcm of the floor/ceil divisors; 1 if there are none.
    long long period() const;
    /// Coefficients (ascending powers of j) of the polynomial that agrees
    /// with the expression for every j == residue (mod period()).
    std::vector<mpq_class> polynomial_on_residue(long long residue) const;

    friend Expr operator+(const Expr &a, const Expr &b);
    friend Expr operator-(const Expr &a, const Expr &b);
    friend Expr operator*(const Expr &a, const Expr &b);

    struct Node;

private:
    Expr(std::shared_ptr<const Node> root, std::string text);

    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// Index range j_min <= j <= j_max (unbounded when j_max is empty).
struct IndexRange {
    long long j_min = 1;
    std::optional<long long> j_max;
};

/// Smallest j in the range with e(j) < threshold for which skip(j) is false.
/// Exact for unbounded ranges.
std::optional<long long> first_below(const Expr &e, long long threshold, const IndexRange &range,
                                     const std::function<bool(long long)> &skip = {});

/// Every j in the range with e(j) <= bound, ascending. Throws spec_error when
/// the range is unbounded and e does not tend to +infinity on every residue
/// class (the answer would be infinite).
std::vector<long long> indices_at_most(const Expr &e, long long bound, const IndexRange &range);

} // namespace partstab
