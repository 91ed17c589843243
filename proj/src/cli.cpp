#include "skel/cli.hpp"

#include "skel/base_change.hpp"
#include "skel/different_fn.hpp"
#include "skel/elliptic_reduction.hpp"
#include "skel/error.hpp"
#include "skel/io.hpp"
#include "skel/quotient_sing.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>

namespace skel {

namespace fs = std::filesystem;

namespace {

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// Every vertex of g with its coefficient, zeros included.
std::string format_on(const MetricGraph& g, const Divisor& d) {
  std::string out;
  for (const auto& v : g.vertices()) {
    if (!out.empty()) out += ' ';
    out += v.id + "=" + to_string(d[v.id]);
  }
  return out;
}

int cmd_chi(const std::string& path, std::ostream& out) {
  const MetricGraph g = load_graph(path);
  out << "vertices: " << g.vertices().size() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "K: " << format_on(g, canonical_divisor(g)) << "\n";
  out << "chi: " << euler_char(g) << "\n";
  return kPass;
}

int cmd_check_model(const std::string& path, std::ostream& out) {
  const MetricGraph g = load_graph(path);
  for (const auto& e : g.edges()) {
    const Rational expected = snc_length(g.vertex(e.u).mult, g.vertex(e.v).mult);
    out << "edge " << e.id << ": length " << to_string(e.length) << ", snc " << to_string(expected)
        << ", " << (e.length == expected ? "ok" : "mismatch") << "\n";
  }
  const bool ok = snc_edge_check(g);
  out << "snc: " << pass_fail(ok) << "\n";
  return ok ? kPass : kCheckFailed;
}

int cmd_check_cover(const std::string& path, std::ostream& out) {
  const CoverMap cover = load_cover(path);
  out << "degree: " << cover.degree() << "\n";
  const BalancingReport report = check_balancing(cover);
  for (const auto& e : report.edges) {
    out << "edge " << e.base_edge << ":";
    for (const auto& pre : cover.edge_preimages(e.base_edge))
      out << " " << pre << "(" << edge_degree(cover, pre) << ")";
    out << " sum " << e.degree_sum << ", " << (e.balanced ? "ok" : "unbalanced") << "\n";
  }
  bool degrees_ok = true;
  for (const auto& v : cover.total().vertices()) {
    out << "vertex " << v.id << " -> " << cover.image_of_vertex(v.id) << ": ";
    try {
      out << "degree " << vertex_degree(cover, v.id) << "\n";
    } catch (const Error& e) {
      degrees_ok = false;
      out << "error " << code_name(e.code()) << " " << e.what() << "\n";
    }
  }
  out << "balancing: " << pass_fail(report.passed()) << "\n";
  out << "vertex degrees: " << pass_fail(degrees_ok) << "\n";
  return report.passed() && degrees_ok ? kPass : kCheckFailed;
}

int cmd_check_rh(const std::string& cover_path, const std::string& function_path,
                 std::ostream& out) {
  const CoverMap cover = load_cover(cover_path);
  const PLFunction delta = parse_function(read_file(function_path), cover.total());
  const MetricGraph& g = cover.total();
  out << "laplacian: " << format_on(g, laplacian(delta)) << "\n";
  out << "K_total: " << format_on(g, canonical_divisor(g)) << "\n";
  out << "pullback K_base: " << format_on(g, pullback(cover, canonical_divisor(cover.base()))) << "\n";
  const Divisor residual = rh_residual(cover, delta);
  out << "residual: " << format_divisor(residual) << "\n";
  out << "rh: " << pass_fail(residual.is_zero()) << "\n";
  return residual.is_zero() ? kPass : kCheckFailed;
}

int cmd_solve(const std::string& cover_path, const std::vector<std::string>& anchor_args,
              std::ostream& out, std::ostream& err) {
  const CoverMap cover = load_cover(cover_path);
  std::map<std::string, Rational> anchors;
  for (const auto& a : anchor_args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidValue, "anchor \"" + a + "\" is not of the form id=a/b");
    anchors[a.substr(0, eq)] = parse_rational(a.substr(eq + 1));
  }
  try {
    out << serialize_function(solve_different(cover, anchors));
    return kPass;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InconsistentAnchors) throw;
    err << code_name(e.code()) << ": " << e.what() << "\n";
    return kCheckFailed;
  }
}

void write_fixture(const BaseChangeFixture& fx, const fs::path& dir, std::ostream& out) {
  fs::create_directories(dir);
  write_file(dir / "base.json", serialize_graph(fx.cover.base()));
  write_file(dir / "total.json", serialize_graph(fx.cover.total()));
  write_file(dir / "cover.json", serialize_cover(fx.cover));
  write_file(dir / "different.json", serialize_function(fx.different));
  nlohmann::json marks = nlohmann::json::object();
  for (const auto& [v, locus] : fx.markings) marks[v] = std::string(to_string(locus));
  write_file(dir / "markings.json", nlohmann::json{{"markings", marks}}.dump(2) + "\n");
  out << "wrote: base.json total.json cover.json different.json markings.json\n";
}

int report_fixture(const BaseChangeFixture& fx, std::ostream& out) {
  const FixtureCheck check = check_fixture(fx);
  out << "chi base: " << euler_char(fx.cover.base()) << "\n";
  out << "chi total: " << euler_char(fx.cover.total()) << "\n";
  out << "balancing: " << pass_fail(check.balanced) << "\n";
  out << "rh: " << pass_fail(check.rh_holds) << "\n";
  out << "different: " << pass_fail(check.different_valid) << "\n";
  out << "skeleton: " << pass_fail(check.skeleton) << "\n";
  return check.passed() ? kPass : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus of skeleta of arithmetic curves under base change", "skelcalc"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string graph_path, cover_path, function_path, dist_text, format = "dot", out_dir;
  std::vector<std::string> anchors;
  std::int64_t nu = 0, dlog = 0, p = 0, j = 0, d = 0, genus = 0, mult = 0;

  auto* chi = app.add_subcommand("chi", "Canonical divisor and Euler characteristic");
  chi->add_option("graph", graph_path)->required();
  chi->callback([&] { action = [&] { return cmd_chi(graph_path, out); }; });

  auto* model = app.add_subcommand("check-model", "Check snc edge lengths 1/(m1 m2)");
  model->add_option("graph", graph_path)->required();
  model->callback([&] { action = [&] { return cmd_check_model(graph_path, out); }; });

  auto* cover = app.add_subcommand("check-cover", "Balancing and vertex degrees of a cover");
  cover->add_option("cover", cover_path)->required();
  cover->callback([&] { action = [&] { return cmd_check_cover(cover_path, out); }; });

  auto* rh = app.add_subcommand("check-rh", "Riemann-Hurwitz identity for a different function");
  rh->add_option("cover", cover_path)->required();
  rh->add_option("function", function_path)->required();
  rh->callback([&] { action = [&] { return cmd_check_rh(cover_path, function_path, out); }; });

  auto* solve = app.add_subcommand("solve-different", "Solve for the different from Dirichlet data");
  solve->add_option("cover", cover_path)->required();
  solve->add_option("--anchor", anchors, "id=a/b")->required();
  solve->callback([&] { action = [&] { return cmd_solve(cover_path, anchors, out, err); }; });

  auto* classify = app.add_subcommand("classify-elliptic", "Reduction types of a potentially multiplicative curve");
  classify->add_option("--nu", nu)->required();
  classify->add_option("--dlog", dlog)->required();
  classify->callback([&] {
    action = [&] {
      const auto [over_k, over_k2] = classify_pot_mult(nu, dlog);
      out << to_string(over_k) << " / " << to_string(over_k2) << "\n";
      return kPass;
    };
  });

  auto* build_ell = app.add_subcommand("build-elliptic", "Write the potentially multiplicative fixture");
  build_ell->add_option("--nu", nu)->required();
  build_ell->add_option("--dlog", dlog)->required();
  build_ell->add_option("--out", out_dir)->required();
  build_ell->callback([&] {
    action = [&] {
      const PotMultFixture fx = build_pot_mult_cover(nu, dlog);
      const auto [over_k, over_k2] = classify_pot_mult(nu, dlog);
      out << "type over k: " << to_string(over_k) << "\n";
      out << "type over k': " << to_string(over_k2) << "\n";
      out << "d(x,y): " << to_string(distance(fx.fixture.cover.base(), fx.base_junction, fx.base_node)) << "\n";
      out << "d(x',y'): " << to_string(distance(fx.fixture.cover.total(), fx.junction, fx.node)) << "\n";
      out << "delta(y'): " << to_string(fx.fixture.different(fx.node)) << "\n";
      write_fixture(fx.fixture, out_dir, out);
      return report_fixture(fx.fixture, out);
    };
  });

  auto* build_quot = app.add_subcommand("build-quotient", "Write the weakly wild quotient fixture");
  build_quot->add_option("--p", p)->required();
  build_quot->add_option("--j", j)->required();
  build_quot->add_option("--d", d)->required();
  build_quot->add_option("--genus", genus)->required();
  build_quot->add_option("--out", out_dir)->required();
  build_quot->callback([&] {
    action = [&] {
      const QuotientFixture fx = build_quotient_cover(p, j, d, genus);
      out << "genus total: " << fx.genus_total << "\n";
      out << "chain edges: " << fx.counts.chain_edges << "\n";
      out << "vertices on [x,y]: " << fx.counts.vertices_inclusive << " inclusive, "
          << fx.counts.vertices_excluding_x << " excluding x, " << fx.counts.vertices_interior
          << " interior\n";
      out << "d(x,y): " << to_string(fx.counts.base_distance) << "\n";
      out << "d(x',y'): " << to_string(fx.counts.total_distance) << "\n";
      out << "delta(y'): " << to_string(fx.fixture.different(fx.nodes_total.front())) << "\n";
      write_fixture(fx.fixture, out_dir, out);
      return report_fixture(fx.fixture, out);
    };
  });

  auto* example = app.add_subcommand("build-example-ii", "Write the y^2 = x^3 + 2 fixture");
  example->add_option("--out", out_dir)->required();
  example->callback([&] {
    action = [&] {
      const BaseChangeFixture fx = example_ii_fixture();
      write_fixture(fx, out_dir, out);
      return report_fixture(fx, out);
    };
  });

  auto* farey = app.add_subcommand("farey", "Multiplicity at a point of a neat interval");
  farey->add_option("--mult", mult)->required();
  farey->add_option("--dist", dist_text)->required();
  farey->callback([&] {
    action = [&] {
      out << farey_multiplicity(mult, parse_rational(dist_text)) << "\n";
      return kPass;
    };
  });

  auto* render = app.add_subcommand("render", "Render a graph as DOT or TikZ");
  render->add_option("graph", graph_path)->required();
  render->add_option("--different", function_path);
  render->add_option("--format", format)->check(CLI::IsMember({"dot", "tikz"}));
  render->callback([&] {
    action = [&] {
      const MetricGraph g = load_graph(graph_path);
      std::optional<PLFunction> f;
      if (!function_path.empty()) f = parse_function(read_file(function_path), g);
      out << (format == "dot" ? render_dot(g, f) : render_tikz(g, f));
      return kPass;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << code_name(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "E_IO: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace skel
