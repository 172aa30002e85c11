#pragma once

#include <string>
#include <vector>

#include "annigraph/group.hpp"
#include "annigraph/simple_graph.hpp"

namespace annigraph {

enum class GraphFormat { Graph6, Dot, EdgeListJson };

GraphFormat graph_format_from_string(const std::string& name);

/// Serialize a graph. Labels (one per vertex) are used by Dot and
/// EdgeListJson; vertex indices are used when labels are empty.
std::string export_graph(const SimpleGraph& g, GraphFormat format,
                         const std::vector<std::string>& labels = {});

/// Inverse of export_graph for all three formats (Dot import understands the
/// shape this library emits).
SimpleGraph import_graph(const std::string& data, GraphFormat format);

/// "(a,b,c)" for rank >= 2 groups, "a" for cyclic groups.
std::string element_label(const FiniteAbelianGroup& g, std::int64_t index);
std::vector<std::string> vertex_labels(const FiniteAbelianGroup& g);

}  // namespace annigraph
