#pragma once

// Covers of metric graphs modelling base change of skeleta: edge and vertex
// degrees, the balancing condition, pullback of divisors.

#include "skel/metric_graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skel {

/// A map Gamma' -> Gamma of degree n = [k':k], given on vertices and edges.
class CoverMap {
 public:
  /// Throws Error(MalformedCover) if the maps are not total, not
  /// incidence-compatible, not surjective, or some edge degree is not a
  /// positive integer.
  CoverMap(MetricGraph base, MetricGraph total, std::int64_t degree,
           std::map<std::string, std::string> vertex_map,
           std::map<std::string, std::string> edge_map);

  const MetricGraph& base() const { return base_; }
  const MetricGraph& total() const { return total_; }
  std::int64_t degree() const { return degree_; }
  const std::map<std::string, std::string>& vertex_map() const { return vertex_map_; }
  const std::map<std::string, std::string>& edge_map() const { return edge_map_; }

  const std::string& image_of_vertex(const std::string& v) const;
  const std::string& image_of_edge(const std::string& e) const;
  const std::vector<std::string>& vertex_preimages(const std::string& base_vertex) const;
  const std::vector<std::string>& edge_preimages(const std::string& base_edge) const;

  friend bool operator==(const CoverMap&, const CoverMap&) = default;

 private:
  MetricGraph base_;
  MetricGraph total_;
  std::int64_t degree_;
  std::map<std::string, std::string> vertex_map_;
  std::map<std::string, std::string> edge_map_;
  std::map<std::string, std::vector<std::string>> vertex_fibres_;
  std::map<std::string, std::vector<std::string>> edge_fibres_;
};

/// length(image) / length(e'); Error(MalformedCover) if not a positive integer.
std::int64_t edge_degree(const CoverMap& cover, const std::string& total_edge);

struct EdgeBalance {
  std::string base_edge;
  std::int64_t degree_sum = 0;
  bool balanced = false;
};

struct BalancingReport {
  std::int64_t degree = 0;
  std::vector<EdgeBalance> edges;  ///< one per base edge, sorted by id

  bool passed() const;
  std::vector<std::string> offending_edges() const;
};

/// For every base edge: sum of degrees of its preimages versus the cover degree.
BalancingReport check_balancing(const CoverMap& cover);

/// deg_{v'} phi: for each base edge I at phi(v'), the sum of degrees of
/// preimages of I incident to v'. All sums must agree (Error(MalformedCover)).
/// An isolated vertex gets degree / #preimages.
std::int64_t vertex_degree(const CoverMap& cover, const std::string& total_vertex);

/// phi^*[x] = sum over x' above x of deg_{x'} phi [x'], extended linearly.
Divisor pullback(const CoverMap& cover, const Divisor& base_divisor);

/// Identity cover of degree 1 (vertex and edge ids unchanged).
CoverMap identity_cover(const MetricGraph& g);

}  // namespace skel
