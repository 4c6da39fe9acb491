#pragma once

#include <iosfwd>

#include "lpiso/chains.hpp"
#include "lpiso/graph.hpp"
#include "lpiso/r_class.hpp"

namespace lpiso {

// Report files open with this versioned header line.
inline constexpr const char* kReportHeader = "lpiso report v1";

// Vector literals: atomic part "[i:q,...]", step part "{t0 q0 t1 q1 ... 1}",
// sum-space pairs "([...], {...})".  Breakpoints are dyadic rationals.
std::string vector_literal(const LpVector& v);
LpVector parse_vector_literal(const std::string& text, SpaceTag tag, const Exponent& p,
                              std::optional<std::uint32_t> dim);

// Presentation files:
//   lpiso-presentation v1
//   kind lp_n|lp|Lp01|lpn_sum|lp_sum|finite_metric
//   p <rational>            (Banach kinds)
//   n <dim>                 (lp_n, lpn_sum)
//   scramble-perm i...      (optional, with scramble-signs)
//   scramble-piece-level L  (optional, with scramble-piece-perm/-signs)
//   points <count>          (finite_metric)
//   d i j <rational>        (finite_metric, upper triangle)
std::string presentation_to_text(const Presentation& pres);
Presentation presentation_from_text(const std::string& text);
Presentation load_presentation(const std::string& path);
void save_presentation(const Presentation& pres, const std::string& path);

// Table files: lines "f m n v" / "g m n v"; '#' comments.
std::string table_to_text(const IsometryTable& table);
IsometryTable table_from_text(const std::string& text);
IsometryTable load_table(const std::string& path);

// Map files for verification: lines "m v".
std::string map_to_text(const std::vector<PointIndex>& map);
std::vector<PointIndex> map_from_text(const std::string& text);
std::vector<PointIndex> load_map(const std::string& path);

// Graph files: first line the vertex count, then one "u v" edge per line.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
Graph load_graph(const std::string& path);

// Tree dumps: one line per node "address ; vector-literal ; chain-id",
// chain-id "-" when no partition is given.
std::string tree_dump(const VectorTree& tree, const ChainPartition* partition);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace lpiso
