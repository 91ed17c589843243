#pragma once

// Integer arithmetic of differents and log-differents of finite extensions of
// discretely valued fields. Everything is measured in the normalized valuation
// of the upper field; no field elements are ever modelled.

#include <cstdint>
#include <span>
#include <vector>

namespace skel {

bool is_prime(std::int64_t n);

/// Ramification data of an extension E/F of discretely valued fields.
struct RamificationDatum {
  std::int64_t e = 1;  ///< ramification index
  std::int64_t p = 0;  ///< residue characteristic, 0 or a prime
  /// Orders |G_0| >= |G_1| >= ... of the lower-numbering filtration.
  std::vector<std::int64_t> filtration_orders{1};
};

/// Throws Error(MalformedFiltration) if the orders are not a non-increasing
/// divisibility chain of positive integers, or Error(InvalidValue) if p is
/// neither 0 nor prime, or p = 0 and there is wild inertia.
void validate(const RamificationDatum& datum);

struct DifferentValue {
  std::int64_t delta = 0;      ///< additive different
  std::int64_t delta_log = 0;  ///< log-different, delta + 1 - e
  std::int64_t e = 1;

  friend bool operator==(const DifferentValue&, const DifferentValue&) = default;
};

/// Hilbert's formula: sum over i >= 0 of (|G_i| - 1).
std::int64_t hilbert_different(std::span<const std::int64_t> orders);

/// Lower ramification jumps: indices i with |G_i| > |G_{i+1}|, the order past
/// the end of the list being 1.
std::vector<std::int64_t> lower_jumps(std::span<const std::int64_t> orders);

/// Invariants of a cyclic extension of prime degree p with unique lower jump j:
/// delta = (p-1)(j+1), delta_log = (p-1)j, e = p.
DifferentValue cyclic_jump_invariants(std::int64_t p, std::int64_t j);

/// delta + 1 - e. May be negative; that signals inconsistent data.
constexpr std::int64_t log_different(std::int64_t delta, std::int64_t e) {
  return delta + 1 - e;
}

/// Different of E/G from the tower E/F/G: delta(E/F) + e(E/F) * delta(F/G).
constexpr std::int64_t tower_different(std::int64_t delta_ef, std::int64_t e_ef,
                                       std::int64_t delta_fg) {
  return delta_ef + e_ef * delta_fg;
}

constexpr std::int64_t tower_log_different(std::int64_t dlog_ef, std::int64_t e_ef,
                                           std::int64_t dlog_fg) {
  return dlog_ef + e_ef * dlog_fg;
}

/// Tame iff the log-different vanishes.
constexpr bool is_tame(std::int64_t delta_log) { return delta_log == 0; }
constexpr bool is_unramified(std::int64_t delta) { return delta == 0; }

/// delta_log <= v_E(e * f^i), the valuation being supplied by the caller.
constexpr bool different_bound_holds(std::int64_t delta_log, std::int64_t v_e_of_ef) {
  return delta_log <= v_e_of_ef;
}

}  // namespace skel
