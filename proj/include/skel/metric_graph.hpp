#pragma once

// Multiplicity- and genus-weighted metric graphs with exact rational edge
// lengths, the combinatorial model of a skeleton of an arithmetic curve.

#include "skel/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skel {

struct Vertex {
  std::string id;
  std::int64_t mult = 1;   ///< m(x), over the base field
  std::int64_t genus = 0;  ///< g(x), genus of the residual curve

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::string u;  ///< first endpoint; u == v for a loop
  std::string v;
  Rational length;

  bool is_loop() const { return u == v; }
  const std::string& other(const std::string& end) const { return end == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite connected metric graph. Immutable once constructed: every
/// operation that changes the graph returns a new one. Vertices and edges are
/// kept sorted by id so iteration order is deterministic.
class MetricGraph {
 public:
  /// Validates and builds. Throws Error with DuplicateId, UnknownId,
  /// NonPositiveLength, InvalidValue (mult < 1 or genus < 0) or Disconnected.
  MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(const std::string& id) const { return vertex_index_.contains(id); }
  bool has_edge(const std::string& id) const { return edge_index_.contains(id); }
  const Vertex& vertex(const std::string& id) const;  ///< throws UnknownId
  const Edge& edge(const std::string& id) const;      ///< throws UnknownId

  /// Ids of edges incident to v, a loop listed once.
  const std::vector<std::string>& incident_edges(const std::string& v) const;

  /// Number of branches at v; a loop contributes 2.
  std::int64_t valency(const std::string& v) const;

  /// An id of the form prefix, prefix1, prefix2, ... not used by any vertex or edge.
  std::string fresh_id(const std::string& prefix) const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
  std::map<std::string, std::vector<std::string>> incidence_;
};

/// Formal rational combination of vertices. Zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::map<std::string, Rational> coefficients);

  Rational operator[](const std::string& v) const;
  void add(const std::string& v, const Rational& c);
  const std::map<std::string, Rational>& coefficients() const { return coeffs_; }

  Rational degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Sum of the coefficients at the given vertices.
  Rational sum_over(std::span<const std::string> vertices) const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(const Rational& s, const Divisor& d);
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<std::string, Rational> coeffs_;
};

/// Throws Error(UnknownId) unless every vertex in the support lies in g.
void check_support(const MetricGraph& g, const Divisor& d);

/// "a=1 b=-2/3", sorted by id; zero divisor prints as "0".
std::string format_divisor(const Divisor& d);

/// chi_Gamma(v) = 2 - 2 g(v) - val(v).
std::int64_t local_chi(const MetricGraph& g, const std::string& v);

/// K_Gamma, with coefficient m(v) * local_chi(v) at v.
Divisor canonical_divisor(const MetricGraph& g);

/// chi(Gamma) = deg K_Gamma.
std::int64_t euler_char(const MetricGraph& g);

/// Sum of m(v) * local_chi(v) over the given vertices; valencies are taken in g.
std::int64_t region_euler_char(const MetricGraph& g, std::span<const std::string> region);

/// A subgraph is a skeleton iff its Euler characteristic equals the curve's.
constexpr bool skeleton_criterion(std::int64_t chi_graph, std::int64_t chi_curve) {
  return chi_graph == chi_curve;
}

/// Multiplicity of the divisorial point at distance d from an end of
/// multiplicity m on a neat interval of length 1/m^2: b * m where m^2 d = a/b
/// in lowest terms. Requires 0 < d <= 1/m^2, else Error(OutOfRange).
std::int64_t farey_multiplicity(std::int64_t m_end, const Rational& d);

/// Length 1/(m1 m2) of an snc node between components of multiplicities m1, m2.
inline Rational snc_length(std::int64_t m1, std::int64_t m2) { return Rational(1, m1 * m2); }

/// Blow-up of the node represented by an edge: inserts a genus-0 vertex of
/// multiplicity m1 + m2 splitting the edge into lengths 1/(m1(m1+m2)) and
/// 1/(m2(m1+m2)). The edge must have snc length 1/(m1 m2) (Error(InvalidValue)).
MetricGraph blowup_node(const MetricGraph& g, const std::string& edge,
                        std::optional<std::string> new_vertex = std::nullopt);

/// Blow-up of a smooth point on the component v: glues a leaf of multiplicity
/// m(v) at distance 1/m(v)^2.
MetricGraph blowup_smooth(const MetricGraph& g, const std::string& v,
                          std::optional<std::string> new_vertex = std::nullopt);

/// Inserts a vertex at distance t from edge.u. Requires 0 < t < length.
MetricGraph subdivide_edge(const MetricGraph& g, const std::string& edge, const Rational& t,
                           std::int64_t mult, std::int64_t genus = 0,
                           std::optional<std::string> new_vertex = std::nullopt);

/// Shortest-path distance.
Rational distance(const MetricGraph& g, const std::string& from, const std::string& to);

Rational total_length(const MetricGraph& g);

/// Edges whose length differs from 1/(m1 m2).
std::vector<std::string> snc_violations(const MetricGraph& g);

inline bool snc_edge_check(const MetricGraph& g) { return snc_violations(g).empty(); }

}  // namespace skel
