#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "partstab/partition_count.hpp"

using namespace partstab;

namespace {

// Independent count: walk every partition of n explicitly.
long brute(long n, const std::function<bool(const std::vector<long> &)> &keep)
{
    long count = 0;
    std::vector<long> parts;
    std::function<void(long, long)> walk = [&](long rest, long cap) {
        if (rest == 0) {
            count += keep(parts);
            return;
        }
        for (long v = std::min(rest, cap); v >= 1; --v) {
            parts.push_back(v);
            walk(rest - v, v);
            parts.pop_back();
        }
    };
    walk(n, n);
    return count;
}

} // namespace

TEST_CASE("known values")
{
    CHECK(partition_count(5) == 7);
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(50) == 204226);
    CHECK(partition_count(100) == integer("190569292"));
    CHECK(partition_count(5, PartitionConstraint::parts_less_than(3)) == 3);
    CHECK(partition_count(4, PartitionConstraint::no_ones()) == 2);
    CHECK(partition_count(1, PartitionConstraint::no_ones()) == 0);
    CHECK(partition_count(10, PartitionConstraint::exactly_k_parts(8)) == 2);
    CHECK(partition_count(0, PartitionConstraint::exactly_k_parts(0)) == 1);
    CHECK(partition_count(0, PartitionConstraint::parts_less_than(1)) == 1);
    CHECK(partition_count(3, PartitionConstraint::parts_less_than(1)) == 0);
    CHECK(partition_count(4, PartitionConstraint::exactly_k_parts(5)) == 0);
    CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);
}

TEST_CASE("agrees with explicit listing")
{
    for (long n = 0; n <= 18; ++n) {
        CHECK(partition_count(n) == brute(n, [](auto &) { return true; }));
        CHECK(partition_count(n, PartitionConstraint::no_ones()) ==
              brute(n, [](auto &p) { return std::find(p.begin(), p.end(), 1) == p.end(); }));
        for (long i = 1; i <= 4; ++i)
            CHECK(partition_count(n, PartitionConstraint::parts_less_than(i)) ==
                  brute(n, [i](auto &p) { return std::all_of(p.begin(), p.end(), [i](long v) { return v < i; }); }));
        for (long k = 0; k <= n; ++k)
            CHECK(partition_count(n, PartitionConstraint::exactly_k_parts(k)) ==
                  brute(n, [k](auto &p) { return static_cast<long>(p.size()) == k; }));
    }
}

TEST_CASE("partition_numbers matches single counts")
{
    auto p = partition_numbers(30);
    REQUIRE(p.size() == 31);
    for (long n = 0; n <= 30; ++n)
        CHECK(p[static_cast<std::size_t>(n)] == partition_count(n));
}
