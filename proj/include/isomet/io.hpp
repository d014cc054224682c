#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "isomet/metric.hpp"
#include "isomet/reductions.hpp"
#include "isomet/structure.hpp"
#include "isomet/tree.hpp"

// Text formats. Every emitter writes a "# isomet <kind> v1" header; every
// parser skips lines that start with '#'. Malformed input raises ParseError
// with the 1-based line number in indices()[0].
//
//   metric     n / n labels (whitespace separated) / n rows of n rationals "p/q"
//   tree       one node per line, comma-separated symbols; an empty line is the root
//   structure  universe size / per relation a "name arity" line followed by
//              one tuple per line
//   graph      vertex count / one "i j" edge per line
//   action     |G| / |G| rows of d_G / |Y| / |Y| rows of d_Y / |G| rows of
//              the action table (g.y) / |G| rows of the group table (g*h)

namespace isomet::io {

inline constexpr const char* kSchemaVersion = "v1";

MetricSpace read_metric(std::istream& in);
void write_metric(std::ostream& out, const MetricSpace& x);

Tree read_tree(std::istream& in);
void write_tree(std::ostream& out, const Tree& t);

RelationalStructure read_structure(std::istream& in);
void write_structure(std::ostream& out, const RelationalStructure& s);

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Shapes only; group and action laws are checked by check_group_action.
GroupAction read_action(std::istream& in);
void write_action(std::ostream& out, const GroupAction& a);

MetricSpace load_metric(const std::filesystem::path& path);
Tree load_tree(const std::filesystem::path& path);
RelationalStructure load_structure(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);
GroupAction load_action(const std::filesystem::path& path);

}  // namespace isomet::io
