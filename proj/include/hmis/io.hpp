#pragma once

#include <iosfwd>
#include <string>

#include "hmis/hypergraph.hpp"

namespace hmis {

/// Reads the .hg text format: '#' comment lines, a header "n m", then m
/// lines of space-separated vertex ids. Throws Parse on malformed input and
/// EmptyEdge on a blank edge line.
Hypergraph read_hg(std::istream& in);
Hypergraph read_hg_file(const std::string& path);

/// Writes ids ascending within each edge and edges in lexicographic order.
void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_file(const std::string& path, const Hypergraph& h);

}  // namespace hmis
