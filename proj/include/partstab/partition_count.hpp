#pragma once

#include "partstab/polynomial.hpp"

namespace partstab {

struct PartitionConstraint {
    enum class Kind { none, parts_less_than, no_ones, exactly_k_parts };
    Kind kind = Kind::none;
    long value = 0;

    static PartitionConstraint none() { return {}; }
    static PartitionConstraint parts_less_than(long i) { return {Kind::parts_less_than, i}; }
    static PartitionConstraint no_ones() { return {Kind::no_ones, 0}; }
    static PartitionConstraint exactly_k_parts(long k) { return {Kind::exactly_k_parts, k}; }
};

/// Number of partitions of n satisfying the constraint, by dynamic
/// programming over part sizes.
integer partition_count(long n, PartitionConstraint constraint = PartitionConstraint::none());

/// p(0), ..., p(max_n).
std::vector<integer> partition_numbers(long max_n);

} // namespace partstab
