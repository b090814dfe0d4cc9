#include "partstab/partition_count.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace partstab {

namespace {

// Partitions of 0..n with parts drawn from [lo, hi].
std::vector<integer> count_with_parts(long n, long lo, long hi)
{
    std::vector<integer> ways(static_cast<std::size_t>(n) + 1, integer(0));
    ways[0] = 1;
    for (long part = lo; part <= hi && part <= n; ++part)
        for (long s = part; s <= n; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways;
}

} // namespace

integer partition_count(long n, PartitionConstraint constraint)
{
    if (n < 0)
        throw std::invalid_argument("partition_count: negative n " + std::to_string(n));
    if (n == 0)
        return 1;
    switch (constraint.kind) {
    case PartitionConstraint::Kind::none:
        return count_with_parts(n, 1, n).back();
    case PartitionConstraint::Kind::parts_less_than:
        return count_with_parts(n, 1, constraint.value - 1).back();
    case PartitionConstraint::Kind::no_ones:
        return count_with_parts(n, 2, n).back();
    case PartitionConstraint::Kind::exactly_k_parts: {
        long k = constraint.value;
        if (k < 0 || k > n)
            return 0;
        // p(s, t) = p(s - 1, t - 1) + p(s - t, t)
        std::vector<std::vector<integer>> p(static_cast<std::size_t>(n) + 1,
                                            std::vector<integer>(static_cast<std::size_t>(k) + 1, integer(0)));
        p[0][0] = 1;
        for (long s = 1; s <= n; ++s)
            for (long t = 1; t <= std::min(s, k); ++t)
                p[s][t] = p[s - 1][t - 1] + p[s - t][t];
        return p[n][k];
    }
    }
    return 0;
}

std::vector<integer> partition_numbers(long max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("partition_numbers: negative bound");
    return count_with_parts(max_n, 1, max_n);
}

} // namespace partstab
