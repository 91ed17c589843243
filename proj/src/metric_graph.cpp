#include "skel/metric_graph.hpp"

#include "skel/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace skel {

MetricGraph::MetricGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::ranges::sort(vertices_, {}, &Vertex::id);
  std::ranges::sort(edges_, {}, &Edge::id);
  if (vertices_.empty()) throw Error(ErrorCode::InvalidValue, "graph has no vertices");

  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (!vertex_index_.emplace(v.id, i).second)
      throw Error(ErrorCode::DuplicateId, "duplicate vertex id \"" + v.id + "\"");
    if (v.mult < 1)
      throw Error(ErrorCode::InvalidValue, "vertex \"" + v.id + "\" has non-positive multiplicity");
    if (v.genus < 0)
      throw Error(ErrorCode::InvalidValue, "vertex \"" + v.id + "\" has negative genus");
    incidence_[v.id];
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (vertex_index_.contains(e.id) || !edge_index_.emplace(e.id, i).second)
      throw Error(ErrorCode::DuplicateId, "duplicate edge id \"" + e.id + "\"");
    for (const auto* end : {&e.u, &e.v})
      if (!vertex_index_.contains(*end))
        throw Error(ErrorCode::UnknownId,
                    "edge \"" + e.id + "\" references unknown vertex \"" + *end + "\"");
    if (e.length <= 0)
      throw Error(ErrorCode::NonPositiveLength,
                  "edge \"" + e.id + "\" has non-positive length " + to_string(e.length));
    incidence_[e.u].push_back(e.id);
    if (!e.is_loop()) incidence_[e.v].push_back(e.id);
  }

  std::set<std::string> seen{vertices_.front().id};
  std::vector<std::string> stack{vertices_.front().id};
  while (!stack.empty()) {
    const std::string cur = stack.back();
    stack.pop_back();
    for (const auto& eid : incidence_.at(cur)) {
      const auto& next = edges_[edge_index_.at(eid)].other(cur);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  if (seen.size() != vertices_.size()) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

const Vertex& MetricGraph::vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) throw Error(ErrorCode::UnknownId, "unknown vertex \"" + id + "\"");
  return vertices_[it->second];
}

const Edge& MetricGraph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownId, "unknown edge \"" + id + "\"");
  return edges_[it->second];
}

const std::vector<std::string>& MetricGraph::incident_edges(const std::string& v) const {
  auto it = incidence_.find(v);
  if (it == incidence_.end()) throw Error(ErrorCode::UnknownId, "unknown vertex \"" + v + "\"");
  return it->second;
}

std::int64_t MetricGraph::valency(const std::string& v) const {
  std::int64_t val = 0;
  for (const auto& eid : incident_edges(v)) val += edge(eid).is_loop() ? 2 : 1;
  return val;
}

std::string MetricGraph::fresh_id(const std::string& prefix) const {
  auto taken = [&](const std::string& id) {
    return vertex_index_.contains(id) || edge_index_.contains(id);
  };
  if (!taken(prefix)) return prefix;
  for (int n = 1;; ++n) {
    std::string candidate = prefix + std::to_string(n);
    if (!taken(candidate)) return candidate;
  }
}

Divisor::Divisor(std::map<std::string, Rational> coefficients) {
  for (auto& [v, c] : coefficients)
    if (c != 0) coeffs_.emplace(v, std::move(c));
}

Rational Divisor::operator[](const std::string& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Divisor::add(const std::string& v, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Rational Divisor::degree() const {
  Rational sum = 0;
  for (const auto& [v, c] : coeffs_) sum += c;
  return sum;
}

Rational Divisor::sum_over(std::span<const std::string> vertices) const {
  Rational sum = 0;
  for (const auto& v : vertices) sum += (*this)[v];
  return sum;
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& [v, c] : other.coeffs_) add(v, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  for (const auto& [v, c] : other.coeffs_) add(v, -c);
  return *this;
}

Divisor operator*(const Rational& s, const Divisor& d) {
  Divisor out;
  for (const auto& [v, c] : d.coeffs_) out.add(v, s * c);
  return out;
}

void check_support(const MetricGraph& g, const Divisor& d) {
  for (const auto& [v, c] : d.coefficients())
    if (!g.has_vertex(v))
      throw Error(ErrorCode::UnknownId, "divisor supported on unknown vertex \"" + v + "\"");
}

std::string format_divisor(const Divisor& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [v, c] : d.coefficients()) {
    if (!out.empty()) out += ' ';
    out += v + "=" + to_string(c);
  }
  return out;
}

std::int64_t local_chi(const MetricGraph& g, const std::string& v) {
  return 2 - 2 * g.vertex(v).genus - g.valency(v);
}

Divisor canonical_divisor(const MetricGraph& g) {
  Divisor k;
  for (const auto& v : g.vertices()) k.add(v.id, v.mult * local_chi(g, v.id));
  return k;
}

std::int64_t euler_char(const MetricGraph& g) {
  std::int64_t chi = 0;
  for (const auto& v : g.vertices()) chi += v.mult * local_chi(g, v.id);
  return chi;
}

std::int64_t region_euler_char(const MetricGraph& g, std::span<const std::string> region) {
  std::int64_t chi = 0;
  for (const auto& v : region) chi += g.vertex(v).mult * local_chi(g, v);
  return chi;
}

std::int64_t farey_multiplicity(std::int64_t m_end, const Rational& d) {
  if (m_end < 1) throw Error(ErrorCode::OutOfRange, "end multiplicity must be positive");
  const Rational q = Rational(m_end * m_end) * d;
  if (d <= 0 || q > 1)
    throw Error(ErrorCode::OutOfRange,
                "distance " + to_string(d) + " outside (0, 1/" + std::to_string(m_end * m_end) + "]");
  return to_int64(Rational(denom(q))) * m_end;
}

MetricGraph blowup_node(const MetricGraph& g, const std::string& edge_id,
                        std::optional<std::string> new_vertex) {
  const Edge& e = g.edge(edge_id);
  const std::int64_t m1 = g.vertex(e.u).mult;
  const std::int64_t m2 = g.vertex(e.v).mult;
  if (e.length != snc_length(m1, m2))
    throw Error(ErrorCode::InvalidValue, "edge \"" + edge_id + "\" has length " +
                                             to_string(e.length) + ", not 1/(m1 m2) = " +
                                             to_string(snc_length(m1, m2)));
  const std::string w = new_vertex.value_or(g.fresh_id("b"));
  if (g.has_vertex(w) || g.has_edge(w))
    throw Error(ErrorCode::DuplicateId, "id \"" + w + "\" already in use");

  std::vector<Vertex> vertices = g.vertices();
  vertices.push_back({w, m1 + m2, 0});
  std::vector<Edge> edges;
  for (const auto& other : g.edges())
    if (other.id != edge_id) edges.push_back(other);
  edges.push_back({edge_id + "a", e.u, w, Rational(1, m1 * (m1 + m2))});
  edges.push_back({edge_id + "b", w, e.v, Rational(1, m2 * (m1 + m2))});
  // Suffixes may collide with existing ids; the constructor reports that.
  return MetricGraph(std::move(vertices), std::move(edges));
}

MetricGraph blowup_smooth(const MetricGraph& g, const std::string& v,
                          std::optional<std::string> new_vertex) {
  const std::int64_t m = g.vertex(v).mult;
  const std::string w = new_vertex.value_or(g.fresh_id("s"));
  std::vector<Vertex> vertices = g.vertices();
  vertices.push_back({w, m, 0});
  std::vector<Edge> edges = g.edges();
  edges.push_back({g.fresh_id("e" + w), v, w, Rational(1, m * m)});
  return MetricGraph(std::move(vertices), std::move(edges));
}

MetricGraph subdivide_edge(const MetricGraph& g, const std::string& edge_id, const Rational& t,
                           std::int64_t mult, std::int64_t genus,
                           std::optional<std::string> new_vertex) {
  const Edge& e = g.edge(edge_id);
  if (t <= 0 || t >= e.length)
    throw Error(ErrorCode::OutOfRange, "subdivision point " + to_string(t) +
                                           " outside (0, " + to_string(e.length) + ")");
  const std::string w = new_vertex.value_or(g.fresh_id("d"));
  std::vector<Vertex> vertices = g.vertices();
  vertices.push_back({w, mult, genus});
  std::vector<Edge> edges;
  for (const auto& other : g.edges())
    if (other.id != edge_id) edges.push_back(other);
  edges.push_back({edge_id + "a", e.u, w, t});
  edges.push_back({edge_id + "b", w, e.v, e.length - t});
  return MetricGraph(std::move(vertices), std::move(edges));
}

Rational distance(const MetricGraph& g, const std::string& from, const std::string& to) {
  g.vertex(from);
  g.vertex(to);
  std::map<std::string, Rational> best{{from, Rational(0)}};
  std::set<std::pair<Rational, std::string>> frontier{{Rational(0), from}};
  std::set<std::string> done;
  while (!frontier.empty()) {
    auto [dist, cur] = *frontier.begin();
    frontier.erase(frontier.begin());
    if (cur == to) return dist;
    if (!done.insert(cur).second) continue;
    for (const auto& eid : g.incident_edges(cur)) {
      const Edge& e = g.edge(eid);
      const std::string& next = e.other(cur);
      const Rational cand = dist + e.length;
      auto it = best.find(next);
      if (it == best.end() || cand < it->second) {
        if (it != best.end()) frontier.erase({it->second, next});
        best[next] = cand;
        frontier.insert({cand, next});
      }
    }
  }
  throw Error(ErrorCode::Disconnected, "no path from \"" + from + "\" to \"" + to + "\"");
}

Rational total_length(const MetricGraph& g) {
  Rational sum = 0;
  for (const auto& e : g.edges()) sum += e.length;
  return sum;
}

std::vector<std::string> snc_violations(const MetricGraph& g) {
  std::vector<std::string> bad;
  for (const auto& e : g.edges())
    if (e.length != snc_length(g.vertex(e.u).mult, g.vertex(e.v).mult)) bad.push_back(e.id);
  return bad;
}

}  // namespace skel
