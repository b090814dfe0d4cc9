#include "partstab/overpartitions.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace partstab {

namespace {

using Row = std::vector<long>;

// Rows of a plane partition: each row weakly decreasing, no longer than the
// row above, and entrywise <= the row above.
void for_each_row(long n, const Row &above, Row &row, const std::function<void(const Row &, long)> &visit,
                  long used)
{
    if (!row.empty())
        visit(row, used);
    std::size_t col = row.size();
    if (col >= above.size())
        return;
    long cap = std::min(above[col], row.empty() ? above[col] : row.back());
    for (long v = 1; v <= cap && used + v <= n; ++v) {
        row.push_back(v);
        for_each_row(n, above, row, visit, used + v);
        row.pop_back();
    }
}

// Calls visit for every plane partition of `remaining` below `rows`.
void for_each_plane_partition(long remaining, std::vector<Row> &rows,
                              const std::function<void(const std::vector<Row> &)> &visit)
{
    if (remaining == 0) {
        visit(rows);
        return;
    }
    Row above = rows.empty() ? Row(static_cast<std::size_t>(remaining), remaining) : rows.back();
    Row row;
    for_each_row(remaining, above, row,
                 [&](const Row &r, long used) {
                     if (used == 0)
                         return;
                     rows.push_back(r);
                     for_each_plane_partition(remaining - used, rows, visit);
                     rows.pop_back();
                 },
                 0);
}

ZPolynomial overline_polynomial(const std::vector<Row> &rows)
{
    long forced_count = 0, free_count = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            long v = rows[r][c];
            bool allowed = c + 1 == rows[r].size() || rows[r][c + 1] != v;
            bool forced = r > 0 && rows[r - 1][c] == v;
            if (forced && !allowed)
                return {};
            if (forced)
                ++forced_count;
            else if (allowed)
                ++free_count;
        }
    }
    ZPolynomial out = ZPolynomial::monomial(1, forced_count);
    for (long t = 0; t < free_count; ++t)
        out = out * ZPolynomial{1, 1};
    return out;
}

} // namespace

ProductSpec plane_overpartition_spec()
{
    ProductSpec spec;
    spec.name = "plane_overpartitions";
    FactorRule numerator;
    numerator.a = Expr::parse("-j");
    numerator.sign = 1;
    FactorRule plain;
    plain.a = Expr::parse("ceil(j/2)");
    plain.b = Expr::constant(0);
    FactorRule pairs;
    pairs.a = Expr::parse("floor(j/2)");
    pairs.b = Expr::constant(2);
    spec.rules = {numerator, plain, pairs};
    return spec;
}

ZPolynomial enumerate_plane_overpartitions(long n)
{
    if (n < 0 || n > 12)
        throw std::invalid_argument("enumerate_plane_overpartitions: n must be in [0, 12], got " +
                                    std::to_string(n));
    ZPolynomial total;
    std::vector<Row> rows;
    for_each_plane_partition(n, rows, [&](const std::vector<Row> &pp) { total += overline_polynomial(pp); });
    return total;
}

StabilizationReport verify_pop_stabilization(long order)
{
    if (order < 2)
        throw std::invalid_argument("verify_pop_stabilization: order must be at least 2");
    return verify_pop_stabilization(expand_product(plane_overpartition_spec(), order));
}

StabilizationReport verify_pop_stabilization(const ZSequence &seq)
{
    auto rep = verify_tail_shift(seq, 1, [](long n) { return (2 * n + 2) / 3; }, "pop");
    std::vector<UnivariateFactor> factors;
    for (long j = 1; j <= seq.order; ++j) {
        factors.push_back({1, j, j});
        factors.push_back({-1, j, -j});
    }
    PowerSeries at_one = expand_univariate_product(factors, seq.order);
    bool consistent = true;
    for (long n = 0; n <= seq.order; ++n) {
        integer value = seq[n].evaluate(1);
        if (value != at_one.coeff(n)) {
            consistent = false;
            rep.record({n, 0, value, at_one.coeff(n), "z=1"});
        }
    }
    rep.checks = {{"shift", rep.identity_holds}, {"z=1", consistent}};
    rep.set_certified(true);
    return rep;
}

} // namespace partstab
