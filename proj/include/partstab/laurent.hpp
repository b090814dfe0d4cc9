#pragma once

#include "partstab/product_spec.hpp"
#include "partstab/stabilization.hpp"

namespace partstab {

/// prod_k (1 - q^k) / ((1 - z q^k)(1 - q^k / z)); [q^n] counts partitions of n by crank.
ProductSpec crank_spec();

/// prod_k 1 / ((1 - z q^k)^k (1 - q^k / z)^k (1 - q^k)^(2k)).
ProductSpec dt_spec();

LaurentSequence expand_crank(long order);

/// F_n(z) = sum_l A_l(z) B_(n-l)(1/z). Orders must match.
LaurentSequence convolve_mirrored(const ZSequence &a, const ZSequence &b);

/// F_n(z) = sum_l q[n-l] A_l(z). q needs at least a.order + 1 entries.
ZSequence convolve_with_series(const ZSequence &a, const std::vector<integer> &q);

/// Shape required by the two-sided theorem, checked on the factors with
/// q exponent <= order: only (1 - z q^i)^(-a), (1 - q^i / z)^(-b) with
/// a, b >= 0, and z-free (1 +- q^i)^c; a_1 = b_1 = 1.
HypothesisCheck check_two_sided_shape(const ProductSpec &spec, long order);

/// [z^(n-k)]F_n = [z^(n+1-k)]F_(n+1) ("top") and the mirrored identity
/// ("bottom") for 0 <= 2k <= n, n < order.
StabilizationReport verify_two_sided(const LaurentSequence &seq);

/// The top identity alone, for 0 <= m k <= n.
StabilizationReport verify_top_shift(const LaurentSequence &seq, long m);

} // namespace partstab
