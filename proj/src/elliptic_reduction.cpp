#include "skel/elliptic_reduction.hpp"

#include "skel/error.hpp"

#include <map>
#include <vector>

namespace skel {

KodairaType KodairaType::I(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "I_n requires n >= 1");
  return {Family::I, n};
}

KodairaType KodairaType::IStar(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "I*_n requires n >= 0");
  return {Family::IStar, n};
}

std::string to_string(const KodairaType& t) {
  using F = KodairaType::Family;
  switch (t.family) {
    case F::I0: return "I_0";
    case F::I: return "I_" + std::to_string(t.n);
    case F::IStar: return "I*_" + std::to_string(t.n);
    case F::II: return "II";
    case F::III: return "III";
    case F::IV: return "IV";
    case F::IIStar: return "II*";
    case F::IIIStar: return "III*";
    case F::IVStar: return "IV*";
  }
  return "?";
}

KodairaType parse_kodaira(const std::string& text) {
  using F = KodairaType::Family;
  static const std::map<std::string, F> named{
      {"I_0", F::I0},   {"I0", F::I0},         {"II", F::II},          {"III", F::III},
      {"IV", F::IV},    {"II*", F::IIStar},    {"III*", F::IIIStar},   {"IV*", F::IVStar}};
  if (auto it = named.find(text); it != named.end()) return KodairaType::of(it->second);
  auto subscript = [&](std::size_t from) -> std::int64_t {
    const std::string digits = text.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidValue, "unknown Kodaira type \"" + text + "\"");
    return std::stoll(digits);
  };
  if (text.starts_with("I*_")) return KodairaType::IStar(subscript(3));
  if (text.starts_with("I_")) {
    const std::int64_t n = subscript(2);
    return n == 0 ? KodairaType::of(F::I0) : KodairaType::I(n);
  }
  throw Error(ErrorCode::InvalidValue, "unknown Kodaira type \"" + text + "\"");
}

namespace {

// Star with a central vertex and arms given as multiplicity chains read
// outwards from the centre; edges have snc length.
MetricGraph star(std::int64_t centre, const std::vector<std::vector<std::int64_t>>& arms) {
  std::vector<Vertex> vertices{{"o", centre, 0}};
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < arms.size(); ++a) {
    std::string prev = "o";
    std::int64_t prev_mult = centre;
    for (std::size_t i = 0; i < arms[a].size(); ++i) {
      const std::string id = "a" + std::to_string(a + 1) + "_" + std::to_string(i + 1);
      vertices.push_back({id, arms[a][i], 0});
      edges.push_back({"e" + id, prev, id, snc_length(prev_mult, arms[a][i])});
      prev = id;
      prev_mult = arms[a][i];
    }
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

std::string chain_id(std::int64_t i) { return "c" + std::to_string(i); }
std::string chain_edge_id(std::int64_t i) { return "e" + std::to_string(i); }

}  // namespace

MetricGraph kodaira_skeleton(const KodairaType& t) {
  using F = KodairaType::Family;
  switch (t.family) {
    case F::I0:
      return MetricGraph({{"o", 1, 1}}, {});
    case F::I: {
      if (t.n < 1) throw Error(ErrorCode::OutOfRange, "I_n requires n >= 1");
      std::vector<Vertex> vertices;
      std::vector<Edge> edges;
      for (std::int64_t i = 0; i < t.n; ++i) {
        vertices.push_back({"v" + std::to_string(i), 1, 0});
        edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                         "v" + std::to_string((i + 1) % t.n), Rational(1)});
      }
      return MetricGraph(std::move(vertices), std::move(edges));
    }
    case F::IStar: {
      if (t.n < 0) throw Error(ErrorCode::OutOfRange, "I*_n requires n >= 0");
      std::vector<Vertex> vertices;
      std::vector<Edge> edges;
      for (std::int64_t i = 0; i <= t.n; ++i) {
        vertices.push_back({chain_id(i), 2, 0});
        if (i > 0) edges.push_back({chain_edge_id(i - 1), chain_id(i - 1), chain_id(i), snc_length(2, 2)});
      }
      for (const auto& [leaf, node] : {std::pair<std::string, std::int64_t>{"l1", 0},
                                       {"l2", 0}, {"r1", t.n}, {"r2", t.n}}) {
        vertices.push_back({leaf, 1, 0});
        edges.push_back({"e" + leaf, leaf, chain_id(node), snc_length(1, 2)});
      }
      return MetricGraph(std::move(vertices), std::move(edges));
    }
    case F::II: return star(6, {{1}, {2}, {3}});
    case F::III: return star(4, {{1}, {1}, {2}});
    case F::IV: return star(3, {{1}, {1}, {1}});
    case F::IIStar: return star(6, {{5, 4, 3, 2, 1}, {4, 2}, {3}});
    case F::IIIStar: return star(4, {{3, 2, 1}, {3, 2, 1}, {2}});
    case F::IVStar: return star(3, {{2, 1}, {2, 1}, {2, 1}});
  }
  throw Error(ErrorCode::InvalidValue, "unknown Kodaira family");
}

std::pair<KodairaType, KodairaType> classify_pot_mult(std::int64_t nu, std::int64_t dlog) {
  if (nu < 1) throw Error(ErrorCode::OutOfRange, "nu must be positive for potentially multiplicative reduction");
  if (dlog < 0) throw Error(ErrorCode::OutOfRange, "log-different must be non-negative");
  return {KodairaType::IStar(nu + 4 * dlog), KodairaType::I(2 * nu)};
}

PotMultFixture build_pot_mult_cover(std::int64_t nu, std::int64_t dlog) {
  if (nu < 1) throw Error(ErrorCode::OutOfRange, "nu must be positive");
  if (dlog < 1) throw Error(ErrorCode::OutOfRange, "dlog must be positive (wild monodromy)");

  const std::int64_t n = nu + 4 * dlog;
  MetricGraph base = kodaira_skeleton(KodairaType::IStar(n));
  // Chain positions c_0 .. c_n, 1/4 apart. The loop of Gamma' lies over
  // [c_left, c_right], the two tails over [c_0, c_left] and [c_right, c_n].
  const std::int64_t left = 2 * dlog;
  const std::int64_t right = left + nu;
  auto on_loop = [&](std::int64_t i) { return i > left && i < right; };
  auto prime = [](const std::string& id) { return id + "'"; };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::string> vmap, emap;
  std::map<std::string, Rational> values;
  std::map<std::string, Locus> markings;
  const Rational tail_step(1, 8);

  for (std::int64_t i = 0; i <= n; ++i) {
    const std::string c = chain_id(i);
    if (on_loop(i)) {
      for (const char* sheet : {"a", "b"}) {
        const std::string id = prime(c) + sheet;
        vertices.push_back({id, 2, 0});
        vmap[id] = c;
        values[id] = 0;
        markings[id] = Locus::Split;
      }
      continue;
    }
    // Distance to the junction, in steps of 1/8; multiplicity from the neat
    // subintervals of length 1/4 between consecutive multiplicity-2 points.
    const std::int64_t steps = i <= left ? left - i : i - right;
    const Rational offset = tail_step * (steps % 2);
    const std::int64_t mult = offset == 0 ? 2 : farey_multiplicity(2, offset);
    vertices.push_back({prime(c), mult, 0});
    vmap[prime(c)] = c;
    values[prime(c)] = tail_step * steps * 2;
    markings[prime(c)] = steps == 0                    ? Locus::Unramified
                         : (i == 0 || i == n)          ? Locus::Temperate
                                                       : Locus::Ramified;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    const std::string e = chain_edge_id(i);
    const bool loop_edge = i >= left && i < right;
    if (loop_edge) {
      for (const char* sheet : {"a", "b"}) {
        auto end = [&](std::int64_t k) {
          return on_loop(k) ? prime(chain_id(k)) + sheet : prime(chain_id(k));
        };
        const std::string id = prime(e) + sheet;
        edges.push_back({id, end(i), end(i + 1), Rational(1, 4)});
        emap[id] = e;
      }
    } else {
      edges.push_back({prime(e), prime(chain_id(i)), prime(chain_id(i + 1)), tail_step});
      emap[prime(e)] = e;
    }
  }
  const Rational node_value = temperate_value(2, dlog);
  for (const auto& [leaf, node] : {std::pair<std::string, std::int64_t>{"l1", 0},
                                   {"l2", 0}, {"r1", n}, {"r2", n}}) {
    vertices.push_back({prime(leaf), 2, 0});
    vmap[prime(leaf)] = leaf;
    values[prime(leaf)] = node_value;
    markings[prime(leaf)] = Locus::Temperate;
    edges.push_back({prime("e" + leaf), prime(leaf), prime(chain_id(node)), Rational(1, 4)});
    emap[prime("e" + leaf)] = "e" + leaf;
  }

  MetricGraph total(std::move(vertices), std::move(edges));
  CoverMap cover(std::move(base), total, 2, std::move(vmap), std::move(emap));
  PLFunction delta(std::move(total), std::move(values));
  return PotMultFixture{
      BaseChangeFixture{std::move(cover), std::move(delta), std::move(markings), dlog,
                        minimal_bound(2, dlog), 0},
      chain_id(0), chain_id(left), prime(chain_id(0)), prime(chain_id(left)), prime("l1")};
}

BaseChangeFixture example_ii_fixture() {
  MetricGraph base({{"x0", 2, 0}, {"mid", 2, 0}, {"y", 6, 0}, {"z1", 1, 0}, {"z2", 3, 0}},
                   {{"e1", "x0", "mid", snc_length(2, 2)},
                    {"e2", "mid", "y", snc_length(2, 6)},
                    {"e3", "y", "z1", snc_length(6, 1)},
                    {"e4", "y", "z2", snc_length(6, 3)}});
  // Degree 2, every point of Gamma topologically ramified: lengths halve.
  MetricGraph total({{"x0'", 2, 1}, {"mid'", 4, 0}, {"y'", 6, 0}, {"z1'", 2, 0}, {"z2'", 6, 0}},
                    {{"e1'", "x0'", "mid'", Rational(1, 8)},
                     {"e2'", "mid'", "y'", Rational(1, 24)},
                     {"e3'", "y'", "z1'", Rational(1, 12)},
                     {"e4'", "y'", "z2'", Rational(1, 36)}});
  std::map<std::string, std::string> vmap, emap;
  for (const auto& v : total.vertices()) vmap[v.id] = v.id.substr(0, v.id.size() - 1);
  for (const auto& e : total.edges()) emap[e.id] = e.id.substr(0, e.id.size() - 1);
  CoverMap cover(std::move(base), total, 2, std::move(vmap), std::move(emap));
  PLFunction delta(std::move(total), {{"x0'", Rational(0)},
                                      {"mid'", Rational(3, 4)},
                                      {"y'", Rational(1)},
                                      {"z1'", Rational(1)},
                                      {"z2'", Rational(1)}});
  return BaseChangeFixture{std::move(cover),
                           std::move(delta),
                           {{"x0'", Locus::Unramified},
                            {"mid'", Locus::Ramified},
                            {"y'", Locus::Temperate},
                            {"z1'", Locus::Temperate},
                            {"z2'", Locus::Temperate}},
                           2,
                           minimal_bound(2, 2),
                           0};
}

std::vector<std::string> example_ii_region() { return {"mid", "y", "z1", "z2"}; }

MetricGraph projective_line_interval() {
  return MetricGraph({{"gauss", 1, 0}, {"x", 2, 0}}, {{"e", "gauss", "x", snc_length(1, 2)}});
}

}  // namespace skel
