#include "partstab/expression.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace partstab {

struct Expr::Node {
    enum class Kind { constant, index, add, sub, mul, neg, floor_div, ceil_div };
    Kind kind;
    long long value = 0; // constant, or divisor for floor_div / ceil_div
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Poly = std::vector<mpq_class>;

NodePtr make(Node::Kind kind, long long value = 0, NodePtr lhs = nullptr, NodePtr rhs = nullptr)
{
    return std::make_shared<const Node>(Node{kind, value, std::move(lhs), std::move(rhs)});
}

long long checked(bool overflow, const long long &v)
{
    if (overflow)
        throw spec_error("integer overflow while evaluating index expression");
    return v;
}

long long floor_div(long long a, long long d)
{
    long long q = a / d;
    if ((a % d != 0) && (a < 0))
        --q;
    return q;
}

long long eval(const Node &n, long long j)
{
    long long out = 0;
    switch (n.kind) {
    case Node::Kind::constant:
        return n.value;
    case Node::Kind::index:
        return j;
    case Node::Kind::add:
        return checked(__builtin_add_overflow(eval(*n.lhs, j), eval(*n.rhs, j), &out), out);
    case Node::Kind::sub:
        return checked(__builtin_sub_overflow(eval(*n.lhs, j), eval(*n.rhs, j), &out), out);
    case Node::Kind::mul:
        return checked(__builtin_mul_overflow(eval(*n.lhs, j), eval(*n.rhs, j), &out), out);
    case Node::Kind::neg:
        return checked(__builtin_sub_overflow(0LL, eval(*n.lhs, j), &out), out);
    case Node::Kind::floor_div:
        return floor_div(j, n.value);
    case Node::Kind::ceil_div:
        return -floor_div(-j, n.value);
    }
    return 0;
}

long long period_of(const Node &n)
{
    switch (n.kind) {
    case Node::Kind::floor_div:
    case Node::Kind::ceil_div:
        return n.value;
    case Node::Kind::add:
    case Node::Kind::sub:
    case Node::Kind::mul:
        return std::lcm(period_of(*n.lhs), period_of(*n.rhs));
    case Node::Kind::neg:
        return period_of(*n.lhs);
    default:
        return 1;
    }
}

void trim(Poly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

Poly poly_add(Poly a, const Poly &b, int sign)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += sign * b[i];
    trim(a);
    return a;
}

Poly poly_mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty())
        return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            out[i + k] += a[i] * b[k];
    trim(out);
    return out;
}

Poly residue_poly(const Node &n, long long r)
{
    switch (n.kind) {
    case Node::Kind::constant: {
        Poly p{mpq_class(static_cast<long>(n.value))};
        trim(p);
        return p;
    }
    case Node::Kind::index:
        return {mpq_class(0), mpq_class(1)};
    case Node::Kind::add:
        return poly_add(residue_poly(*n.lhs, r), residue_poly(*n.rhs, r), 1);
    case Node::Kind::sub:
        return poly_add(residue_poly(*n.lhs, r), residue_poly(*n.rhs, r), -1);
    case Node::Kind::mul:
        return poly_mul(residue_poly(*n.lhs, r), residue_poly(*n.rhs, r));
    case Node::Kind::neg:
        return poly_add({}, residue_poly(*n.lhs, r), -1);
    case Node::Kind::floor_div:
    case Node::Kind::ceil_div: {
        long long d = n.value;
        long long rem = r % d;
        // j == rem (mod d): floor(j/d) = (j - rem)/d, ceil(j/d) = (j + (d - rem) % d)/d.
        long long off = n.kind == Node::Kind::floor_div ? -rem : (d - rem) % d;
        Poly p{mpq_class(static_cast<long>(off), static_cast<long>(d)), mpq_class(1, static_cast<long>(d))};
        p[0].canonicalize();
        p[1].canonicalize();
        trim(p);
        return p;
    }
    }
    return {};
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string &why) const
    {
        throw spec_error("bad index expression \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok))
            fail("expected '" + std::string(tok) + "'");
    }

    long long number()
    {
        skip_ws();
        std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (__builtin_mul_overflow(v, 10LL, &v) || __builtin_add_overflow(v, s_[pos_] - '0', &v))
                fail("constant too large");
            ++pos_;
        }
        if (start == pos_)
            fail("expected a number");
        return v;
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (accept("+"))
                lhs = make(Node::Kind::add, 0, lhs, term());
            else if (accept("-"))
                lhs = make(Node::Kind::sub, 0, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        for (;;) {
            if (accept("*") || accept("·"))
                lhs = make(Node::Kind::mul, 0, lhs, unary());
            else
                return lhs;
        }
    }

    NodePtr unary()
    {
        if (accept("-"))
            return make(Node::Kind::neg, 0, unary());
        if (accept("+"))
            return unary();
        return primary();
    }

    NodePtr primary()
    {
        skip_ws();
        if (accept("(")) {
            NodePtr e = expr();
            expect(")");
            return e;
        }
        for (auto [name, kind] : {std::pair{"floor", Node::Kind::floor_div}, std::pair{"ceil", Node::Kind::ceil_div}}) {
            if (accept(name)) {
                expect("(");
                expect("j");
                expect("/");
                long long d = number();
                if (d < 1)
                    fail("divisor must be positive");
                expect(")");
                return make(kind, d);
            }
        }
        if (accept("j"))
            return make(Node::Kind::index);
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            return make(Node::Kind::constant, number());
        fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end of input");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

struct ClassBehaviour {
    int eventual_sign; // sign of e(j) - threshold for all large j in the class
    bool tends_to_infinity;
    long long settle; // beyond this j the sign is eventual_sign
};

constexpr long long kScanLimit = 50'000'000;

ClassBehaviour behaviour(const Poly &p)
{
    if (p.empty())
        return {0, false, 0};
    int sign = sgn(p.back());
    if (p.size() == 1)
        return {sign, false, 0};
    // Cauchy bound: every real root lies within 1 + max |a_i / a_d|.
    mpq_class bound(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        bound = std::max(bound, mpq_class(abs(p[i] / p.back())));
    mpz_class ceil_bound;
    mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    ceil_bound += 1;
    if (!ceil_bound.fits_slong_p() || ceil_bound > static_cast<long>(kScanLimit))
        throw spec_error("index expression settles too late to analyse");
    return {sign, sign > 0, ceil_bound.get_si()};
}

std::vector<ClassBehaviour> classes(const Expr &e, long long threshold)
{
    std::vector<ClassBehaviour> out;
    for (long long r = 0; r < e.period(); ++r) {
        Poly p = e.polynomial_on_residue(r);
        p = poly_add(std::move(p), Poly{mpq_class(static_cast<long>(threshold))}, -1);
        out.push_back(behaviour(p));
    }
    return out;
}

long long settle_point(const std::vector<ClassBehaviour> &cls, long long j_min, long long period)
{
    long long s = 0;
    for (const auto &c : cls)
        s = std::max(s, c.settle);
    return std::max(j_min, s) + period;
}

void check_scan(long long from, long long to)
{
    if (to - from > kScanLimit)
        throw spec_error("index range too large to scan");
}

} // namespace

Expr::Expr() : Expr(make(Node::Kind::constant, 0), "0") {}

Expr::Expr(std::shared_ptr<const Node> root, std::string text) : root_(std::move(root)), text_(std::move(text)) {}

Expr Expr::parse(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\n");
    auto last = text.find_last_not_of(" \t\n");
    std::string trimmed = first == std::string_view::npos ? "" : std::string(text.substr(first, last - first + 1));
    return Expr(Parser(trimmed).parse(), trimmed);
}

Expr Expr::constant(long long v)
{
    if (v < 0)
        return Expr(make(Node::Kind::neg, 0, make(Node::Kind::constant, -v)), std::to_string(v));
    return Expr(make(Node::Kind::constant, v), std::to_string(v));
}

Expr Expr::index() { return Expr(make(Node::Kind::index), "j"); }

long long Expr::operator()(long long j) const { return eval(*root_, j); }

long long Expr::period() const { return period_of(*root_); }

std::vector<mpq_class> Expr::polynomial_on_residue(long long residue) const
{
    long long L = period();
    return residue_poly(*root_, ((residue % L) + L) % L);
}

Expr operator+(const Expr &a, const Expr &b)
{
    return Expr(make(Expr::Node::Kind::add, 0, a.root_, b.root_), "(" + a.text_ + ") + (" + b.text_ + ")");
}

Expr operator-(const Expr &a, const Expr &b)
{
    return Expr(make(Expr::Node::Kind::sub, 0, a.root_, b.root_), "(" + a.text_ + ") - (" + b.text_ + ")");
}

Expr operator*(const Expr &a, const Expr &b)
{
    return Expr(make(Expr::Node::Kind::mul, 0, a.root_, b.root_), "(" + a.text_ + ") * (" + b.text_ + ")");
}

std::optional<long long> first_below(const Expr &e, long long threshold, const IndexRange &range,
                                     const std::function<bool(long long)> &skip)
{
    auto hit = [&](long long j) { return e(j) < threshold && !(skip && skip(j)); };
    long long period = e.period();
    auto cls = classes(e, threshold);
    long long settle = settle_point(cls, range.j_min, period);
    long long last = range.j_max ? std::min(*range.j_max, settle) : settle;
    check_scan(range.j_min, last);
    for (long long j = range.j_min; j <= last; ++j)
        if (hit(j))
            return j;
    if (range.j_max && *range.j_max <= settle)
        return std::nullopt;
    bool any_negative = std::any_of(cls.begin(), cls.end(), [](const auto &c) { return c.eventual_sign < 0; });
    if (!any_negative)
        return std::nullopt;
    // Past the settle point every negative class is below the threshold; only
    // skipped indices can delay the first hit.
    long long stop = settle + 64 * period;
    if (range.j_max)
        stop = std::min(stop, *range.j_max);
    for (long long j = settle + 1; j <= stop; ++j)
        if (hit(j))
            return j;
    return std::nullopt;
}

std::vector<long long> indices_at_most(const Expr &e, long long bound, const IndexRange &range)
{
    auto cls = classes(e, bound);
    bool grows = std::all_of(cls.begin(), cls.end(), [](const auto &c) { return c.tends_to_infinity; });
    if (!range.j_max && !grows)
        throw spec_error("expression \"" + e.text() +
                         "\" does not increase without bound on an unbounded index range");
    long long last = range.j_max.value_or(0);
    if (grows) {
        long long settle = settle_point(cls, range.j_min, e.period());
        last = range.j_max ? std::min(*range.j_max, settle) : settle;
    }
    check_scan(range.j_min, last);
    std::vector<long long> out;
    for (long long j = range.j_min; j <= last; ++j)
        if (e(j) <= bound)
            out.push_back(j);
    return out;
}

} // namespace partstab
