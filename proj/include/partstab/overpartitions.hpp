#pragma once

#include "partstab/product_spec.hpp"
#include "partstab/stabilization.hpp"

namespace partstab {

/// prod_n (1 + z q^n)^n / ((1 - q^n)^ceil(n/2) (1 - z^2 q^n)^floor(n/2)); z
/// counts overlined entries of plane overpartitions.
ProductSpec plane_overpartition_spec();

/// Sum over plane overpartitions of n of z^(number of overlined entries),
/// by listing plane partitions of n and their legal overlinings: in a row only
/// the last copy of a value may carry a line, and in a column every copy
/// below the first must. n <= 12.
ZPolynomial enumerate_plane_overpartitions(long n);

/// [z^k]F_n = [z^(k+1)]F_(n+1) for 3k >= 2n, n < order, plus F_n(1) against
/// prod ((1 + q^n)/(1 - q^n))^n expanded on its own.
StabilizationReport verify_pop_stabilization(long order);
StabilizationReport verify_pop_stabilization(const ZSequence &seq);

} // namespace partstab
