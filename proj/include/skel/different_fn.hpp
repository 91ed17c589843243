#pragma once

// Piecewise-linear functions on metric graphs and the different function of
// a base-change cover: Laplacian, Riemann-Hurwitz residual, Dirichlet solver,
// temperate values and residual slopes.

#include "skel/harmonic_cover.hpp"
#include "skel/metric_graph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace skel {

/// A continuous function on a metric graph, affine on every edge, given by its
/// vertex values.
class PLFunction {
 public:
  /// Throws Error(WrongGraph) unless values are given for exactly the vertices of g.
  PLFunction(MetricGraph g, std::map<std::string, Rational> values);

  const MetricGraph& graph() const { return *graph_; }
  const std::map<std::string, Rational>& values() const { return values_; }
  const Rational& operator()(const std::string& v) const;

  /// Whether this function lives on exactly the graph g.
  bool defined_on(const MetricGraph& g) const { return *graph_ == g; }

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    return *a.graph_ == *b.graph_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const MetricGraph> graph_;
  std::map<std::string, Rational> values_;
};

/// (F(other end) - F(v)) / length(e). Zero on a loop. Error(UnknownId) if e
/// is not incident to v.
Rational outgoing_slope(const PLFunction& f, const std::string& v, const std::string& e);

/// Delta(F): coefficient at v is minus the sum of outgoing slopes over the
/// branches at v. With this sign Delta(delta) = K' - phi^* K.
Divisor laplacian(const PLFunction& f);

/// K_{Gamma'} - phi^* K_Gamma.
Divisor ramification_divisor(const CoverMap& cover);

/// Delta(delta) - (K_{Gamma'} - phi^* K_Gamma); zero iff Riemann-Hurwitz holds.
Divisor rh_residual(const CoverMap& cover, const PLFunction& delta);

/// Solves Delta(delta) = K' - phi^* K at every non-anchor vertex with the given
/// Dirichlet data, exactly. Afterwards the identity is re-checked at the anchors;
/// failure there throws Error(InconsistentAnchors) naming the vertex.
PLFunction solve_different(const CoverMap& cover, const std::map<std::string, Rational>& anchors);

/// Constant value of delta above the temperate part: dlog(k'/k) / [k':k].
Rational temperate_value(std::int64_t degree, std::int64_t dlog_base);

/// Slope of delta along a branch: m(x') times the residual log-different.
constexpr std::int64_t residual_slope(std::int64_t m_vertex, std::int64_t dlog_residual) {
  return m_vertex * dlog_residual;
}

struct DifferentReport {
  std::vector<std::string> negative_vertices;
  std::vector<std::string> nonintegral_edges;
  std::vector<std::string> over_bound_vertices;
  Rational max_value = 0;
  std::int64_t degree = 1;
  std::int64_t bound = 0;

  bool passed() const {
    return negative_vertices.empty() && nonintegral_edges.empty() && over_bound_vertices.empty();
  }
};

/// delta >= 0, integral slopes on every edge, delta <= v_k([k':k]).
DifferentReport validate_different(const PLFunction& delta, std::int64_t degree,
                                   std::int64_t v_k_of_degree);

/// Slope of delta on an edge oriented from e.u to e.v.
Rational edge_slope(const PLFunction& f, const std::string& e);

}  // namespace skel
