#include "skel/harmonic_cover.hpp"

#include "skel/error.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace skel {

namespace {

std::int64_t checked_edge_degree(const MetricGraph& base, const MetricGraph& total,
                                 const std::string& total_edge, const std::string& base_edge) {
  const Rational ratio = base.edge(base_edge).length / total.edge(total_edge).length;
  if (!is_integer(ratio) || ratio < 1)
    throw Error(ErrorCode::MalformedCover, "edge \"" + total_edge + "\" over \"" + base_edge +
                                               "\" has non-integral degree " + to_string(ratio));
  return to_int64(ratio);
}

}  // namespace

CoverMap::CoverMap(MetricGraph base, MetricGraph total, std::int64_t degree,
                   std::map<std::string, std::string> vertex_map,
                   std::map<std::string, std::string> edge_map)
    : base_(std::move(base)),
      total_(std::move(total)),
      degree_(degree),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (degree_ < 1) throw Error(ErrorCode::MalformedCover, "cover degree must be positive");

  for (const auto& v : total_.vertices()) {
    auto it = vertex_map_.find(v.id);
    if (it == vertex_map_.end())
      throw Error(ErrorCode::MalformedCover, "vertex \"" + v.id + "\" has no image");
    if (!base_.has_vertex(it->second))
      throw Error(ErrorCode::MalformedCover,
                  "vertex \"" + v.id + "\" maps to unknown base vertex \"" + it->second + "\"");
    vertex_fibres_[it->second].push_back(v.id);
  }
  if (vertex_map_.size() != total_.vertices().size())
    throw Error(ErrorCode::MalformedCover, "vertex map mentions vertices outside the total graph");

  for (const auto& e : total_.edges()) {
    auto it = edge_map_.find(e.id);
    if (it == edge_map_.end())
      throw Error(ErrorCode::MalformedCover, "edge \"" + e.id + "\" has no image");
    if (!base_.has_edge(it->second))
      throw Error(ErrorCode::MalformedCover,
                  "edge \"" + e.id + "\" maps to unknown base edge \"" + it->second + "\"");
    const Edge& image = base_.edge(it->second);
    std::array<std::string, 2> got{vertex_map_.at(e.u), vertex_map_.at(e.v)};
    std::array<std::string, 2> want{image.u, image.v};
    std::ranges::sort(got);
    std::ranges::sort(want);
    if (got != want)
      throw Error(ErrorCode::MalformedCover,
                  "edge \"" + e.id + "\" is not incidence-compatible with \"" + image.id + "\"");
    checked_edge_degree(base_, total_, e.id, image.id);
    edge_fibres_[image.id].push_back(e.id);
  }
  if (edge_map_.size() != total_.edges().size())
    throw Error(ErrorCode::MalformedCover, "edge map mentions edges outside the total graph");

  for (const auto& v : base_.vertices())
    if (!vertex_fibres_.contains(v.id))
      throw Error(ErrorCode::MalformedCover, "base vertex \"" + v.id + "\" has no preimage");
  for (const auto& e : base_.edges())
    if (!edge_fibres_.contains(e.id))
      throw Error(ErrorCode::MalformedCover, "base edge \"" + e.id + "\" has no preimage");
}

const std::string& CoverMap::image_of_vertex(const std::string& v) const {
  auto it = vertex_map_.find(v);
  if (it == vertex_map_.end()) throw Error(ErrorCode::UnknownId, "unknown vertex \"" + v + "\"");
  return it->second;
}

const std::string& CoverMap::image_of_edge(const std::string& e) const {
  auto it = edge_map_.find(e);
  if (it == edge_map_.end()) throw Error(ErrorCode::UnknownId, "unknown edge \"" + e + "\"");
  return it->second;
}

const std::vector<std::string>& CoverMap::vertex_preimages(const std::string& base_vertex) const {
  auto it = vertex_fibres_.find(base_vertex);
  if (it == vertex_fibres_.end())
    throw Error(ErrorCode::UnknownId, "unknown base vertex \"" + base_vertex + "\"");
  return it->second;
}

const std::vector<std::string>& CoverMap::edge_preimages(const std::string& base_edge) const {
  auto it = edge_fibres_.find(base_edge);
  if (it == edge_fibres_.end())
    throw Error(ErrorCode::UnknownId, "unknown base edge \"" + base_edge + "\"");
  return it->second;
}

std::int64_t edge_degree(const CoverMap& cover, const std::string& total_edge) {
  return checked_edge_degree(cover.base(), cover.total(), total_edge,
                             cover.image_of_edge(total_edge));
}

bool BalancingReport::passed() const {
  return std::ranges::all_of(edges, &EdgeBalance::balanced);
}

std::vector<std::string> BalancingReport::offending_edges() const {
  std::vector<std::string> out;
  for (const auto& e : edges)
    if (!e.balanced) out.push_back(e.base_edge);
  return out;
}

BalancingReport check_balancing(const CoverMap& cover) {
  BalancingReport report{cover.degree(), {}};
  for (const auto& e : cover.base().edges()) {
    std::int64_t sum = 0;
    for (const auto& pre : cover.edge_preimages(e.id)) sum += edge_degree(cover, pre);
    report.edges.push_back({e.id, sum, sum == cover.degree()});
  }
  return report;
}

std::int64_t vertex_degree(const CoverMap& cover, const std::string& total_vertex) {
  const std::string& image = cover.image_of_vertex(total_vertex);
  const auto& base_edges = cover.base().incident_edges(image);
  if (base_edges.empty()) {
    const auto fibre = static_cast<std::int64_t>(cover.vertex_preimages(image).size());
    if (cover.degree() % fibre != 0)
      throw Error(ErrorCode::MalformedCover, "isolated vertex \"" + total_vertex +
                                                 "\": degree not divisible by fibre size");
    return cover.degree() / fibre;
  }
  const auto& local = cover.total().incident_edges(total_vertex);
  std::optional<std::int64_t> common;
  for (const auto& base_edge : base_edges) {
    std::int64_t sum = 0;
    for (const auto& e : local)
      if (cover.image_of_edge(e) == base_edge) sum += edge_degree(cover, e);
    if (common && *common != sum)
      throw Error(ErrorCode::MalformedCover,
                  "vertex \"" + total_vertex + "\": local degree " + std::to_string(sum) +
                      " along \"" + base_edge + "\" differs from " + std::to_string(*common));
    common = sum;
  }
  if (*common < 1)
    throw Error(ErrorCode::MalformedCover, "vertex \"" + total_vertex + "\" has local degree 0");
  return *common;
}

Divisor pullback(const CoverMap& cover, const Divisor& base_divisor) {
  check_support(cover.base(), base_divisor);
  Divisor out;
  for (const auto& [x, c] : base_divisor.coefficients())
    for (const auto& pre : cover.vertex_preimages(x))
      out.add(pre, c * vertex_degree(cover, pre));
  return out;
}

CoverMap identity_cover(const MetricGraph& g) {
  std::map<std::string, std::string> vmap, emap;
  for (const auto& v : g.vertices()) vmap.emplace(v.id, v.id);
  for (const auto& e : g.edges()) emap.emplace(e.id, e.id);
  return CoverMap(g, g, 1, std::move(vmap), std::move(emap));
}

}  // namespace skel
