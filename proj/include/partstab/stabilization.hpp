#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partstab/product_spec.hpp"

namespace partstab {

enum class TailKind { upper, lower, periodic };

std::string_view to_string(TailKind kind);

/// A factor instance that breaks a hypothesis.
struct Violation {
    std::size_t rule = 0;
    long long j = 0;
    long long b = 0;
    long long c = 0;
    std::string reason;
};

/// Outcome of checking a stabilization theorem's hypotheses on a spec.
///
/// upper:    one factor 1/(1 - z q), all others 1/(1 - z^b q^c)^a with
///           a, b >= 0 and m b <= c; m is the largest such m >= 2.
/// lower:    one z-free factor 1/(1 - q^c1), all others with b >= 1 and
///           (m + 1) b > c; m is the smallest such m >= 1, shift is c1.
/// periodic: only factors 1/(1 - z q^c)^a with c >= 2 and a single
///           1/(1 - z q^2).
/// The conditions are decided for every index j, not just a finite window.
struct HypothesisCheck {
    TailKind kind = TailKind::upper;
    bool satisfied = false;
    std::optional<long> m;
    std::optional<long> shift;
    std::vector<Violation> violations;
};

/// Used for m when no factor past the first carries z.
inline constexpr long kUnboundedModulus = 1L << 20;

HypothesisCheck check_hypotheses(const ProductSpec &spec, TailKind kind);

struct Onset {
    long n = 0;
    long predicted = 0;
    long empirical = 0;
};

/// A coefficient pair that should agree (or satisfy a bound) but does not.
struct Witness {
    long n = 0;
    long k = 0;
    integer lhs;
    integer rhs;
    std::string relation;
};

struct NamedCheck {
    std::string name;
    bool holds = true;
};

struct StabilizationReport {
    std::string kind;
    std::optional<long> m;
    bool certified = false;
    std::string label;
    long n_min = 0;
    long n_max = 0;
    bool identity_holds = true;
    std::optional<bool> limit_match;
    std::optional<bool> bound_holds;
    std::vector<NamedCheck> checks;
    std::vector<Onset> onsets;
    std::vector<Witness> witnesses;
    long violation_count = 0;

    /// Keeps the first kMaxWitnesses witnesses and counts the rest.
    void record(Witness w);
    void set_certified(bool yes);
    bool all_checks_hold() const;

    static constexpr std::size_t kMaxWitnesses = 32;
};

/// Thrown by fast_tail_coefficient when ell lies outside the proven range.
class stability_range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// [z^0..z^K] of prod over factors past the first, 1/(1 - z q), of
/// 1/(1 - z^(c(j) - b(j)))^a(j). Needs the factor 1/(1 - z q), c(j) > b(j)
/// for every other factor, and finitely many factors per difference.
PowerSeries limiting_sequence(const ProductSpec &spec, long z_order);

/// Upper-tail shift [z^k]F_n = [z^(k+1)]F_(n+1) for m k > n; with a limit,
/// also [z^(n-l)]F_n = limit[l] for l <= n/m and <= limit[l] for all l <= n.
StabilizationReport verify_upper(const ZSequence &seq, long m, const std::optional<PowerSeries> &limit);

/// [z^k]F_n = [z^(k+1)]F_(n+step) for every k >= first_k(n).
StabilizationReport verify_tail_shift(const ZSequence &seq, long step, const std::function<long(long)> &first_k,
                                      std::string kind);

/// [z^k]F_n = [z^k]F_(n+c1) for (m + 1) k <= n.
StabilizationReport verify_lower_shift(const ZSequence &seq, long c1, long m);

/// deg F_n = floor(n/2) and [z^k]F_n = [z^(k+1)]F_(n+2) for 3k >= n.
StabilizationReport verify_periodic_shift(const ZSequence &seq);

/// [z^(n-ell)]F_n via the limiting sequence, without expanding in q.
integer fast_tail_coefficient(const ProductSpec &spec, long n, long ell);

} // namespace partstab
