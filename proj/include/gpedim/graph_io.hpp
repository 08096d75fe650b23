#ifndef GPEDIM_GRAPH_IO_HPP
#define GPEDIM_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "gpedim/graph.hpp"

namespace gpedim {

enum class ExportFormat { Dot, Json };

/// DOT: `graph "P(n,k)" {`, one `  u<i>;`/`  v<i>;` line per vertex, one `  a -- b [kind=...];`
/// line per edge, in id order. JSON: see docs/formats.md.
std::string export_graph(const GPGraph& g, ExportFormat format);

/// Inverse of export_graph(g, Json). Rejects documents whose vertex or edge lists
/// disagree with the declared (n, k).
GPGraph parse_graph_json(std::string_view text);

} // namespace gpedim

#endif
