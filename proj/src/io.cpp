#include "skel/io.hpp"

#include "skel/error.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace skel {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
}

const json& field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key))
    throw Error(ErrorCode::SchemaError, std::string(where) + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string string_field(const json& obj, const char* key, const char* where) {
  const json& v = field(obj, key, where);
  if (!v.is_string())
    throw Error(ErrorCode::SchemaError, std::string(where) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

std::int64_t int_field(const json& obj, const char* key, const char* where, std::int64_t fallback,
                       bool required) {
  if (!obj.contains(key)) {
    if (required) throw Error(ErrorCode::SchemaError, std::string(where) + ": missing \"" + key + "\"");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw Error(ErrorCode::SchemaError, std::string(where) + ": \"" + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

Rational rational_value(const json& v, const std::string& where) {
  if (!v.is_string())
    throw Error(ErrorCode::SchemaError, where + ": rationals must be strings such as \"1/4\"");
  return parse_rational(v.get<std::string>());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

MetricGraph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "graph document must be an object");
  const json& vs = field(doc, "vertices", "graph");
  const json& es = field(doc, "edges", "graph");
  if (!vs.is_array() || !es.is_array())
    throw Error(ErrorCode::SchemaError, "graph: \"vertices\" and \"edges\" must be arrays");
  std::vector<Vertex> vertices;
  for (const auto& v : vs)
    vertices.push_back({string_field(v, "id", "vertex"), int_field(v, "mult", "vertex", 1, true),
                        int_field(v, "genus", "vertex", 0, false)});
  std::vector<Edge> edges;
  for (const auto& e : es) {
    const std::string id = string_field(e, "id", "edge");
    const json& ends = field(e, "ends", "edge");
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      throw Error(ErrorCode::SchemaError, "edge \"" + id + "\": \"ends\" must be two vertex ids");
    edges.push_back({id, ends[0].get<std::string>(), ends[1].get<std::string>(),
                     rational_value(field(e, "length", "edge"), "edge \"" + id + "\"")});
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

json graph_to_json(const MetricGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"mult", v.mult}, {"genus", v.genus}});
  json es = json::array();
  for (const auto& e : g.edges())
    es.push_back({{"id", e.id}, {"ends", {e.u, e.v}}, {"length", to_string(e.length)}});
  return {{"vertices", vs}, {"edges", es}};
}

std::map<std::string, std::string> string_map(const json& obj, const char* key) {
  const json& m = field(obj, key, "cover");
  if (!m.is_object()) throw Error(ErrorCode::SchemaError, std::string("cover: \"") + key + "\" must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : m.items()) {
    if (!v.is_string())
      throw Error(ErrorCode::SchemaError, std::string("cover: \"") + key + "\" values must be strings");
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Quoted DOT label whose lines are separated by the DOT line break escape.
std::string label_of(const std::vector<std::string>& lines) {
  std::string joined;
  for (const auto& l : lines) {
    if (!joined.empty()) joined += "\\n";
    joined += quote(l).substr(1, quote(l).size() - 2);
  }
  return "\"" + joined + "\"";
}

}  // namespace

MetricGraph parse_graph(const std::string& text) { return graph_from_json(parse_json(text)); }

std::string serialize_graph(const MetricGraph& g) { return dump(graph_to_json(g)); }

CoverMap parse_cover(const std::string& text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::SchemaError, "cover document must be an object");
  auto graph_part = [&](const char* key) {
    const json& g = field(doc, key, "cover");
    if (g.is_string()) return load_graph(base_dir / g.get<std::string>());
    return graph_from_json(g);
  };
  MetricGraph base = graph_part("base");
  MetricGraph total = graph_part("total");
  const std::int64_t degree = int_field(doc, "degree", "cover", 1, true);
  return CoverMap(std::move(base), std::move(total), degree, string_map(doc, "vertex_map"),
                  string_map(doc, "edge_map"));
}

std::string serialize_cover(const CoverMap& cover) {
  json doc{{"base", graph_to_json(cover.base())},
           {"total", graph_to_json(cover.total())},
           {"degree", cover.degree()},
           {"vertex_map", cover.vertex_map()},
           {"edge_map", cover.edge_map()}};
  return dump(doc);
}

PLFunction parse_function(const std::string& text, const MetricGraph& graph) {
  const json doc = parse_json(text);
  const json& vals = field(doc, "values", "function");
  if (!vals.is_object()) throw Error(ErrorCode::SchemaError, "function: \"values\" must be an object");
  std::map<std::string, Rational> values;
  for (const auto& [k, v] : vals.items()) {
    if (!graph.has_vertex(k)) throw Error(ErrorCode::UnknownId, "function: unknown vertex \"" + k + "\"");
    values.emplace(k, rational_value(v, "function value at \"" + k + "\""));
  }
  return PLFunction(graph, std::move(values));
}

std::string serialize_function(const PLFunction& f) {
  json vals = json::object();
  for (const auto& [v, q] : f.values()) vals[v] = to_string(q);
  return dump(json{{"values", vals}});
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << contents;
}

MetricGraph load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

CoverMap load_cover(const std::filesystem::path& path) {
  return parse_cover(read_file(path), path.parent_path());
}

std::string render_dot(const MetricGraph& g, const std::optional<PLFunction>& f) {
  if (f && !f->defined_on(g)) throw Error(ErrorCode::WrongGraph, "function is not defined on this graph");
  std::ostringstream out;
  out << "graph skeleton {\n";
  for (const auto& v : g.vertices()) {
    std::vector<std::string> label{v.id + ":" + std::to_string(v.mult)};
    if (v.genus != 0) label[0] += ":g=" + std::to_string(v.genus);
    if (f) label.push_back("delta=" + to_string((*f)(v.id)));
    out << "  " << quote(v.id) << " [label=" << label_of(label) << "];\n";
  }
  for (const auto& e : g.edges()) {
    std::vector<std::string> label{to_string(e.length)};
    if (f) label.push_back("slope=" + to_string(edge_slope(*f, e.id)));
    out << "  " << quote(e.u) << " -- " << quote(e.v) << " [label=" << label_of(label)
        << ", id=" << quote(e.id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_tikz(const MetricGraph& g, const std::optional<PLFunction>& f) {
  if (f && !f->defined_on(g)) throw Error(ErrorCode::WrongGraph, "function is not defined on this graph");
  std::map<std::string, std::pair<int, int>> pos;
  std::map<int, int> used;
  std::vector<std::string> queue{g.vertices().front().id};
  pos[queue.front()] = {0, used[0]++};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::string cur = queue[i];
    for (const auto& eid : g.incident_edges(cur)) {
      const std::string& next = g.edge(eid).other(cur);
      if (pos.contains(next)) continue;
      const int layer = pos[cur].first + 1;
      pos[next] = {layer, used[layer]++};
      queue.push_back(next);
    }
  }
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (const auto& v : g.vertices()) {
    const auto [x, y] = pos.at(v.id);
    out << "\\draw[fill=black] (" << x << "," << -y << ") circle (2pt);\n";
    out << "\\node[above] at (" << x << "," << -y << ") {$" << v.mult;
    if (v.genus != 0) out << ",g=" << v.genus;
    out << "$};\n";
    if (f) out << "\\node[below,red] at (" << x << "," << -y << ") {$" << to_string((*f)(v.id)) << "$};\n";
  }
  for (const auto& e : g.edges()) {
    const auto [x1, y1] = pos.at(e.u);
    const auto [x2, y2] = pos.at(e.v);
    if (e.is_loop())
      out << "\\draw[thick] (" << x1 << "," << -y1 << ") to [out=60,in=120,loop] ();\n";
    else
      out << "\\draw[thick] (" << x1 << "," << -y1 << ") -- (" << x2 << "," << -y2 << ");\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace skel
