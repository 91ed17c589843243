#pragma once

// JSON documents for graphs, covers and piecewise-linear functions, plus DOT
// and TikZ rendering. Rationals are always JSON strings ("a" or "a/b").

#include "skel/different_fn.hpp"
#include "skel/harmonic_cover.hpp"
#include "skel/metric_graph.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace skel {

/// Parse failures throw Error with MalformedJson, SchemaError, UnknownId,
/// DuplicateId, NonPositiveLength, Disconnected or InvalidValue.
MetricGraph parse_graph(const std::string& text);
std::string serialize_graph(const MetricGraph& g);

/// "base" and "total" are either inline graph objects or paths, resolved
/// relative to base_dir.
CoverMap parse_cover(const std::string& text, const std::filesystem::path& base_dir = {});
std::string serialize_cover(const CoverMap& cover);

/// A function document holds only vertex values; the graph comes from context.
PLFunction parse_function(const std::string& text, const MetricGraph& graph);
std::string serialize_function(const PLFunction& f);

std::string read_file(const std::filesystem::path& path);  ///< Error(Io) on failure
void write_file(const std::filesystem::path& path, const std::string& contents);

MetricGraph load_graph(const std::filesystem::path& path);
CoverMap load_cover(const std::filesystem::path& path);

/// Deterministic Graphviz rendering; vertices labelled "id:mult[:g=genus]",
/// edges with exact lengths. With a function, vertices also show values and
/// edges slopes (oriented u -> v). Error(WrongGraph) if f lives elsewhere.
std::string render_dot(const MetricGraph& g, const std::optional<PLFunction>& f = std::nullopt);

/// Best-effort TikZ picture: breadth-first layering from the first vertex.
std::string render_tikz(const MetricGraph& g, const std::optional<PLFunction>& f = std::nullopt);

}  // namespace skel
