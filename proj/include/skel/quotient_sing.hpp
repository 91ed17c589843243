#pragma once

// Wild p-cyclic quotient singularities of arithmetic surfaces: the dictionary
// between ramification jumps and Euler characteristics of resolution graphs,
// genus and p-rank formulas, weakly wild resolution graphs and the base
// change of their skeleta.

#include "skel/base_change.hpp"
#include "skel/metric_graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace skel {

/// chi(Gamma_Q) = 1 - (p-1) j_Q.
std::int64_t chi_from_jump(std::int64_t p, std::int64_t j);

/// Inverse of chi_from_jump; Error(InconsistentData) unless (1 - chi) is a
/// positive multiple of p - 1.
std::int64_t jump_from_chi(std::int64_t p, std::int64_t chi);

/// Genus g' of a p-cyclic cover of a genus-g curve branched at d points with
/// lower jumps j_i: 2g' - 2 = p(2g - 2) + d(p-1) + sum_i j_i (p-1).
std::int64_t rh_genus(std::int64_t p, std::int64_t g_base, std::span<const std::int64_t> jumps);

/// p-rank of the cover: 2 gamma' - 2 = p(2 gamma - 2) + 2d(p-1).
std::int64_t crew_p_rank(std::int64_t p, std::int64_t gamma_base, std::int64_t d);

struct OrdinaryReport {
  bool ordinary = false;  ///< base ordinary and all jumps 1
  std::int64_t genus_total = 0;
  std::int64_t p_rank_total = 0;
};

/// Ordinary iff gamma = g and every jump is 1; then, and only then, the genus
/// and p-rank of the cover agree. Error(InvalidValue) if gamma > g.
OrdinaryReport ordinary_check(std::int64_t p, std::int64_t g_base, std::int64_t gamma_base,
                              std::span<const std::int64_t> jumps);

/// Multiplicities along a resolution arm leaving a node of multiplicity p
/// through a component of multiplicity r: m_0 = p, m_1 = r,
/// m_{i+1} = c_i m_i - m_{i-1} with c_i = ceil(m_{i-1} / m_i), stopping at 1.
/// Returns m_1, ..., 1; the node itself is not listed.
std::vector<std::int64_t> hirzebruch_jung_arm(std::int64_t p, std::int64_t r);

struct WeaklyWildGraph {
  MetricGraph graph;
  std::string centre;               ///< x, first vertex of the horizontal chain
  std::string node;                 ///< y
  std::vector<std::string> region;  ///< Gamma_Q: every vertex except x
};

/// Resolution graph of a weakly wild quotient singularity: a horizontal chain
/// of multiplicity-p vertices 1/p^2 apart from x to the node y, and two arms
/// descending from r and p - r to 1.
WeaklyWildGraph build_weakly_wild_graph(std::int64_t p, std::int64_t r, std::int64_t chain_edges);

struct QuotientCounts {
  std::int64_t chain_edges = 0;           ///< edges of [x, y]; equals j p
  std::int64_t vertices_inclusive = 0;    ///< vertices of [x, y] including both ends
  std::int64_t vertices_excluding_x = 0;  ///< ... excluding x
  std::int64_t vertices_interior = 0;     ///< ... excluding both ends
  Rational base_distance;                 ///< d(x, y)
  Rational total_distance;                ///< d(x', y')
};

struct QuotientFixture {
  BaseChangeFixture fixture;
  QuotientCounts counts;
  std::int64_t genus_total = 0;  ///< g' = g(x')
  std::string centre;            ///< x
  std::string centre_total;      ///< x'
  std::vector<std::vector<std::string>> regions;        ///< Gamma_Q per branch point
  std::vector<std::vector<std::string>> regions_total;  ///< Gamma'_Q
  std::vector<std::string> nodes;                       ///< y per region
  std::vector<std::string> nodes_total;                 ///< y' per region
  std::vector<std::string> chain_edges_total;           ///< first edge of each region at x'
};

/// Simultaneous skeleton of the resolution of Y/(Z/p) for an ordinary curve
/// of genus g' with good reduction over a p-cyclic extension with jump j,
/// branched at d points over a residual curve of genus g_base.
QuotientFixture build_quotient_cover(std::int64_t p, std::int64_t j, std::int64_t d,
                                     std::int64_t g_base);

}  // namespace skel
