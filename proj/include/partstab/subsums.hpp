#pragma once

#include "partstab/product_spec.hpp"
#include "partstab/stabilization.hpp"

namespace partstab {

// Lambda_{m,i}(n, k): partitions of n whose parts at (1-based) positions
// congruent to i mod m sum to k, parts listed in weakly decreasing order.

enum class SubsumForm {
    csw,       // prod_b prod_j 1/(1 - z^(j-1 or j) q^((j-1)m+b))
    rewritten, // prefactor prod_{b<i} 1/(1 - q^b) times prod_a prod_d 1/(1 - z^a q^(i+(a-1)m+d))
};

/// Throws std::invalid_argument unless 1 <= i <= m.
ProductSpec subsum_spec(long m, long i, SubsumForm form = SubsumForm::rewritten);

struct LambdaTable {
    long m = 1;
    long i = 1;
    long order = 0;
    std::vector<ZPolynomial> rows; // rows[n] = sum_k Lambda(n, k) z^k
};

LambdaTable lambda_table(long m, long i, long order);

/// Row n by listing every partition of n. For n up to about 30.
ZPolynomial lambda_oracle(long m, long i, long n);

/// [z^j]F_n as sum over s of p(n - s, parts < i) times the number of
/// partitions of s into parts >= i whose z-weight is j; a part v >= i has
/// z-weight (v - i)/m + 1.
integer split_coefficient(long m, long i, long n, long j);

/// For m >= i + 2: every partition of s <= s_max into parts >= i with
/// z-weight j > s/(i+1) contains the part i. Returns the first s with a
/// counterexample, or nothing.
std::optional<long> first_part_forcing_failure(long m, long i, long s_max);

/// prod_{j>=1} 1/(1 - z^(j-1) q^((j-1)m+b)).
ProductSpec single_family_spec(long m, long b);

/// For 2 <= m, 1 <= b < m and n <= order, 0 <= k with (m+1)k <= n:
///   "shift (k <= n/(m+1))":       [z^k]A_n = [z^k]A_(n+b)
///   "shift (k <= n/(m'+1))":      the same with m' from check_hypotheses
///   "vanishing":                  [z^k]A_n = 0 when b does not divide n - mk
///   "plateau":                    [z^k]A_n = p(k) when b | n - mk and (m+1)bk <= n
StabilizationReport verify_single_family_props(long m, long b, long order);

/// [z^k]F_n = [z^k]F_(n+1) = sum_l p(l)p(k-l) for 3k <= n, F from
/// subsum_spec(2, 2); also checks the z^k q^(2k) factor expands to
/// sum_k p(k) z^k q^(2k).
StabilizationReport verify_g22_convolution(long order);

/// [z^j]F_n = [z^(j-1)]F_(n-i) for (i+1)j > n, n <= order. Certified only
/// when m > i + 1.
StabilizationReport verify_subsum_shift(long m, long i, long order);

} // namespace partstab
