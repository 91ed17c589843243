#pragma once

// Kodaira-Neron catalogue of minimal skeleta of elliptic curves, and the
// base change of potentially multiplicative curves to their quadratic
// monodromy extension.

#include "skel/base_change.hpp"
#include "skel/metric_graph.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace skel {

struct KodairaType {
  enum class Family { I0, I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

  Family family = Family::I0;
  std::int64_t n = 0;  ///< subscript of I_n (n >= 1) and I*_n (n >= 0)

  static KodairaType I(std::int64_t n);
  static KodairaType IStar(std::int64_t n);
  static constexpr KodairaType of(Family f) { return {f, 0}; }

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
};

/// "I_0", "I_4", "I*_5", "II", "II*", ...
std::string to_string(const KodairaType& t);
KodairaType parse_kodaira(const std::string& text);

/// Minimal skeleton with the Table's multiplicities. Edge lengths follow the
/// snc convention 1/(m1 m2), except that I_n is a circle of n unit edges.
MetricGraph kodaira_skeleton(const KodairaType& t);

/// (type over k, type over k') = (I*_{nu + 4 dlog}, I_{2 nu}) for nu >= 1.
std::pair<KodairaType, KodairaType> classify_pot_mult(std::int64_t nu, std::int64_t dlog);

struct PotMultFixture {
  BaseChangeFixture fixture;
  std::string base_node;      ///< y, a fork node of Gamma
  std::string base_junction;  ///< x = phi(x'), where the loop meets the tail
  std::string node;           ///< y' above y
  std::string junction;       ///< x'
  std::string leaf;           ///< a leaf z' next to y'
};

/// Simultaneous skeleton for a potentially multiplicative curve with
/// nu = -ord j and wild monodromy extension of log-different dlog >= 1.
PotMultFixture build_pot_mult_cover(std::int64_t nu, std::int64_t dlog);

/// y^2 = x^3 + 2 over the maximal unramified extension of Q_2, base changed to
/// Q_2(sqrt 2): type II, good supersingular reduction after a wild quadratic
/// extension with different 3 and log-different 2.
BaseChangeFixture example_ii_fixture();

/// The region of the Example II base graph cut off by x0 (all vertices but x0).
std::vector<std::string> example_ii_region();

/// Interval between the Gauss point (mult 1) and a point of multiplicity 2 in
/// the Berkovich projective line: chi = 3, so not a skeleton of P^1.
MetricGraph projective_line_interval();

}  // namespace skel
