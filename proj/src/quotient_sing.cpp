#include "skel/quotient_sing.hpp"

#include "skel/error.hpp"
#include "skel/ramification.hpp"

#include <map>
#include <numeric>

namespace skel {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

// Solves 2x - 2 = rhs for x >= 0.
std::int64_t genus_from_twice_minus_two(std::int64_t rhs, const char* what) {
  if ((rhs + 2) % 2 != 0 || rhs + 2 < 0)
    throw Error(ErrorCode::InconsistentData,
                std::string(what) + ": 2g-2 = " + std::to_string(rhs) + " has no genus solution");
  return (rhs + 2) / 2;
}

}  // namespace

std::int64_t chi_from_jump(std::int64_t p, std::int64_t j) {
  require_prime(p);
  if (j < 1) throw Error(ErrorCode::OutOfRange, "ramification jump must be positive");
  return 1 - (p - 1) * j;
}

std::int64_t jump_from_chi(std::int64_t p, std::int64_t chi) {
  require_prime(p);
  const std::int64_t gap = 1 - chi;
  if (gap <= 0 || gap % (p - 1) != 0)
    throw Error(ErrorCode::InconsistentData, "1 - chi = " + std::to_string(gap) +
                                                 " is not a positive multiple of p - 1");
  return gap / (p - 1);
}

std::int64_t rh_genus(std::int64_t p, std::int64_t g_base, std::span<const std::int64_t> jumps) {
  require_prime(p);
  if (g_base < 0) throw Error(ErrorCode::OutOfRange, "genus must be non-negative");
  std::int64_t rhs = p * (2 * g_base - 2) + static_cast<std::int64_t>(jumps.size()) * (p - 1);
  for (auto j : jumps) {
    if (j < 1) throw Error(ErrorCode::OutOfRange, "ramification jump must be positive");
    rhs += j * (p - 1);
  }
  return genus_from_twice_minus_two(rhs, "Riemann-Hurwitz");
}

std::int64_t crew_p_rank(std::int64_t p, std::int64_t gamma_base, std::int64_t d) {
  require_prime(p);
  if (gamma_base < 0 || d < 0) throw Error(ErrorCode::OutOfRange, "p-rank and d must be non-negative");
  return genus_from_twice_minus_two(p * (2 * gamma_base - 2) + 2 * d * (p - 1),
                                    "Deuring-Shafarevich-Crew");
}

OrdinaryReport ordinary_check(std::int64_t p, std::int64_t g_base, std::int64_t gamma_base,
                              std::span<const std::int64_t> jumps) {
  if (gamma_base > g_base) throw Error(ErrorCode::InvalidValue, "p-rank exceeds genus");
  OrdinaryReport report;
  report.genus_total = rh_genus(p, g_base, jumps);
  report.p_rank_total = crew_p_rank(p, gamma_base, static_cast<std::int64_t>(jumps.size()));
  report.ordinary = gamma_base == g_base;
  for (auto j : jumps) report.ordinary = report.ordinary && j == 1;
  if (report.ordinary != (report.genus_total == report.p_rank_total))
    throw Error(ErrorCode::InconsistentData, "ordinarity of base and cover disagree");
  return report;
}

std::vector<std::int64_t> hirzebruch_jung_arm(std::int64_t p, std::int64_t r) {
  if (r <= 0 || r >= p || std::gcd(p, r) != 1)
    throw Error(ErrorCode::OutOfRange, "arm start must be coprime to p and in (0, p)");
  std::vector<std::int64_t> arm{r};
  std::int64_t prev = p, cur = r;
  while (cur > 1) {
    const std::int64_t c = (prev + cur - 1) / cur;
    const std::int64_t next = c * cur - prev;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
  return arm;
}

WeaklyWildGraph build_weakly_wild_graph(std::int64_t p, std::int64_t r, std::int64_t chain_edges) {
  require_prime(p);
  if (r <= 0 || r >= p) throw Error(ErrorCode::OutOfRange, "r must satisfy 0 < r < p");
  if (chain_edges < 1) throw Error(ErrorCode::OutOfRange, "chain needs at least one edge");

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  auto chain = [&](std::int64_t i) {
    return i == 0 ? std::string("x") : i == chain_edges ? std::string("y") : "c" + std::to_string(i);
  };
  for (std::int64_t i = 0; i <= chain_edges; ++i) {
    vertices.push_back({chain(i), p, 0});
    if (i > 0) edges.push_back({"h" + std::to_string(i), chain(i - 1), chain(i), Rational(1, p * p)});
  }
  for (const auto& [name, start] : {std::pair<std::string, std::int64_t>{"w", r}, {"z", p - r}}) {
    std::string prev = "y";
    std::int64_t prev_mult = p;
    const auto arm = hirzebruch_jung_arm(p, start);
    for (std::size_t i = 0; i < arm.size(); ++i) {
      const std::string id = name + std::to_string(i + 1);
      vertices.push_back({id, arm[i], 0});
      edges.push_back({"e" + id, prev, id, snc_length(prev_mult, arm[i])});
      prev = id;
      prev_mult = arm[i];
    }
  }
  MetricGraph graph(std::move(vertices), std::move(edges));
  std::vector<std::string> region;
  for (const auto& v : graph.vertices())
    if (v.id != "x") region.push_back(v.id);
  return {std::move(graph), "x", "y", std::move(region)};
}

QuotientFixture build_quotient_cover(std::int64_t p, std::int64_t j, std::int64_t d,
                                     std::int64_t g_base) {
  require_prime(p);
  if (j < 1) throw Error(ErrorCode::OutOfRange, "ramification jump must be positive");
  if (d < 1) throw Error(ErrorCode::OutOfRange, "need at least one branch point");
  if (g_base < 0) throw Error(ErrorCode::OutOfRange, "genus must be non-negative");

  const std::vector<std::int64_t> residual_jumps(static_cast<std::size_t>(d), 1);
  const std::int64_t g_total = rh_genus(p, g_base, residual_jumps);
  const std::int64_t chain_len = j * p;
  const std::int64_t dlog = (p - 1) * j;
  const Rational slope = residual_slope(p, p - 1);
  const Rational total_step(1, p * p * p);
  auto prime = [](const std::string& id) { return id + "'"; };

  QuotientFixture out{
      BaseChangeFixture{identity_cover(MetricGraph({{"x", 1, 0}}, {})),
                        PLFunction(MetricGraph({{"x", 1, 0}}, {}), {{"x", Rational(0)}}),
                        {}, dlog, minimal_bound(p, dlog), 2 - 2 * g_total},
      {}, g_total, "x", prime("x"), {}, {}, {}, {}, {}};

  std::vector<Vertex> bv{{"x", p, g_base}}, tv{{prime("x"), p, g_total}};
  std::vector<Edge> be, te;
  std::map<std::string, std::string> vmap{{prime("x"), "x"}}, emap;
  std::map<std::string, Rational> values{{prime("x"), Rational(0)}};
  std::map<std::string, Locus>& markings = out.fixture.markings;
  markings[prime("x")] = Locus::Unramified;

  for (std::int64_t q = 1; q <= d; ++q) {
    const std::string tag = "q" + std::to_string(q);
    auto chain = [&](std::int64_t i) {
      return i == 0 ? std::string("x") : i == chain_len ? tag + "y" : tag + "c" + std::to_string(i);
    };
    std::vector<std::string> region, region_total;
    for (std::int64_t i = 1; i <= chain_len; ++i) {
      const std::string id = chain(i);
      bv.push_back({id, p, 0});
      const std::int64_t offset = i % p;
      const std::int64_t mult = offset == 0 ? p : farey_multiplicity(p, total_step * offset);
      tv.push_back({prime(id), mult, 0});
      vmap[prime(id)] = id;
      values[prime(id)] = slope * total_step * i;
      markings[prime(id)] = i == chain_len ? Locus::Temperate : Locus::Ramified;
      region.push_back(id);
      region_total.push_back(prime(id));

      const std::string eid = tag + "h" + std::to_string(i);
      be.push_back({eid, chain(i - 1), id, Rational(1, p * p)});
      te.push_back({prime(eid), prime(chain(i - 1)), prime(id), total_step});
      emap[prime(eid)] = eid;
    }
    for (const char* leaf : {"w", "z"}) {
      const std::string id = tag + leaf;
      bv.push_back({id, 1, 0});
      tv.push_back({prime(id), p, 0});
      vmap[prime(id)] = id;
      values[prime(id)] = slope * total_step * chain_len;
      markings[prime(id)] = Locus::Temperate;
      region.push_back(id);
      region_total.push_back(prime(id));
      const std::string eid = "e" + id;
      be.push_back({eid, chain(chain_len), id, snc_length(p, 1)});
      te.push_back({prime(eid), prime(chain(chain_len)), prime(id), Rational(1, p * p)});
      emap[prime(eid)] = eid;
    }
    out.regions.push_back(std::move(region));
    out.regions_total.push_back(std::move(region_total));
    out.nodes.push_back(chain(chain_len));
    out.nodes_total.push_back(prime(chain(chain_len)));
    out.chain_edges_total.push_back(prime(tag + "h1"));
  }

  MetricGraph base(std::move(bv), std::move(be));
  MetricGraph total(std::move(tv), std::move(te));
  out.counts = {chain_len,
                chain_len + 1,
                chain_len,
                chain_len - 1,
                distance(base, "x", out.nodes.front()),
                distance(total, prime("x"), out.nodes_total.front())};
  out.fixture.cover = CoverMap(std::move(base), total, p, std::move(vmap), std::move(emap));
  out.fixture.different = PLFunction(std::move(total), std::move(values));
  return out;
}

}  // namespace skel
