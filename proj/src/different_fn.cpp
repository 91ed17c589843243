#include "skel/different_fn.hpp"

#include "skel/error.hpp"

#include <algorithm>
#include <limits>

namespace skel {

PLFunction::PLFunction(MetricGraph g, std::map<std::string, Rational> values)
    : graph_(std::make_shared<const MetricGraph>(std::move(g))), values_(std::move(values)) {
  for (const auto& v : graph_->vertices())
    if (!values_.contains(v.id))
      throw Error(ErrorCode::WrongGraph, "no value for vertex \"" + v.id + "\"");
  for (const auto& [v, val] : values_)
    if (!graph_->has_vertex(v))
      throw Error(ErrorCode::WrongGraph, "value for unknown vertex \"" + v + "\"");
}

const Rational& PLFunction::operator()(const std::string& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw Error(ErrorCode::UnknownId, "unknown vertex \"" + v + "\"");
  return it->second;
}

Rational outgoing_slope(const PLFunction& f, const std::string& v, const std::string& e) {
  const Edge& edge = f.graph().edge(e);
  if (edge.u != v && edge.v != v)
    throw Error(ErrorCode::UnknownId, "edge \"" + e + "\" is not incident to \"" + v + "\"");
  return (f(edge.other(v)) - f(v)) / edge.length;
}

Rational edge_slope(const PLFunction& f, const std::string& e) {
  const Edge& edge = f.graph().edge(e);
  return (f(edge.v) - f(edge.u)) / edge.length;
}

Divisor laplacian(const PLFunction& f) {
  Divisor out;
  for (const auto& v : f.graph().vertices()) {
    Rational sum = 0;
    for (const auto& e : f.graph().incident_edges(v.id)) sum += outgoing_slope(f, v.id, e);
    out.add(v.id, -sum);
  }
  return out;
}

Divisor ramification_divisor(const CoverMap& cover) {
  return canonical_divisor(cover.total()) - pullback(cover, canonical_divisor(cover.base()));
}

Divisor rh_residual(const CoverMap& cover, const PLFunction& delta) {
  if (!delta.defined_on(cover.total()))
    throw Error(ErrorCode::WrongGraph, "function is not defined on the total graph of the cover");
  return laplacian(delta) - ramification_divisor(cover);
}

namespace {

// Sparse symmetric positive definite system, eliminated with a greedy
// minimum-degree ordering. Rows are kept as maps so fill-in is explicit.
std::vector<Rational> solve_spd(std::vector<std::map<std::size_t, Rational>> rows,
                                std::vector<Rational> rhs) {
  const std::size_t n = rows.size();
  std::vector<bool> eliminated(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n; ++i)
      if (!eliminated[i] && rows[i].size() < best) {
        best = rows[i].size();
        pivot = i;
      }
    const Rational diag = rows[pivot].at(pivot);
    if (diag == 0) throw Error(ErrorCode::InconsistentData, "singular Dirichlet system");
    for (const auto& [j, a_pj] : rows[pivot]) {
      if (j == pivot || eliminated[j]) continue;
      const Rational factor = rows[j].at(pivot) / diag;
      for (const auto& [k, a_pk] : rows[pivot]) {
        if (eliminated[k]) continue;
        Rational& slot = rows[j][k];
        slot -= factor * a_pk;
        if (slot == 0 && k != j) rows[j].erase(k);
      }
      rows[j].erase(pivot);
      rhs[j] -= factor * rhs[pivot];
    }
    eliminated[pivot] = true;
    order.push_back(pivot);
  }
  std::vector<Rational> x(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = *it;
    Rational acc = rhs[i];
    for (const auto& [j, a] : rows[i])
      if (j != i) acc -= a * x[j];
    x[i] = acc / rows[i].at(i);
  }
  return x;
}

}  // namespace

PLFunction solve_different(const CoverMap& cover, const std::map<std::string, Rational>& anchors) {
  const MetricGraph& g = cover.total();
  if (anchors.empty()) throw Error(ErrorCode::InvalidValue, "at least one anchor is required");
  for (const auto& [v, val] : anchors) g.vertex(v);

  const Divisor target = ramification_divisor(cover);
  std::map<std::string, std::size_t> unknown;
  for (const auto& v : g.vertices())
    if (!anchors.contains(v.id)) unknown.emplace(v.id, unknown.size());

  std::vector<std::map<std::size_t, Rational>> rows(unknown.size());
  std::vector<Rational> rhs(unknown.size());
  for (const auto& [v, i] : unknown) {
    rows[i][i];  // diagonal present even for an isolated vertex
    rhs[i] = target[v];
    for (const auto& eid : g.incident_edges(v)) {
      const Edge& e = g.edge(eid);
      if (e.is_loop()) continue;
      const Rational w = 1 / e.length;
      const std::string& other = e.other(v);
      rows[i][i] += w;
      if (auto it = unknown.find(other); it != unknown.end())
        rows[i][it->second] -= w;
      else
        rhs[i] += w * anchors.at(other);
    }
  }
  const std::vector<Rational> solution = solve_spd(std::move(rows), std::move(rhs));

  std::map<std::string, Rational> values = anchors;
  for (const auto& [v, i] : unknown) values.emplace(v, solution[i]);
  PLFunction delta(g, std::move(values));

  const Divisor residual = rh_residual(cover, delta);
  for (const auto& [v, c] : residual.coefficients())
    throw Error(ErrorCode::InconsistentAnchors,
                "anchor \"" + v + "\": Riemann-Hurwitz residual " + to_string(c) +
                    " (Laplacian " + to_string(laplacian(delta)[v]) + ", expected " +
                    to_string(target[v]) + ")");
  return delta;
}

Rational temperate_value(std::int64_t degree, std::int64_t dlog_base) {
  if (degree < 1) throw Error(ErrorCode::OutOfRange, "degree must be positive");
  return Rational(dlog_base, degree);
}

DifferentReport validate_different(const PLFunction& delta, std::int64_t degree,
                                   std::int64_t v_k_of_degree) {
  DifferentReport report;
  report.degree = degree;
  report.bound = v_k_of_degree;
  for (const auto& [v, value] : delta.values()) {
    if (value < 0) report.negative_vertices.push_back(v);
    if (value > v_k_of_degree) report.over_bound_vertices.push_back(v);
    report.max_value = std::max(report.max_value, value);
  }
  for (const auto& e : delta.graph().edges())
    if (!is_integer(edge_slope(delta, e.id))) report.nonintegral_edges.push_back(e.id);
  return report;
}

}  // namespace skel
