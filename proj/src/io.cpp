#include "hmis/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hmis/error.hpp"

namespace hmis {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(std::size_t lineno, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  // Blank lines before the header are tolerated.
  bool have_header = false;
  while (next_content_line(in, line, lineno)) {
    if (line.find_first_not_of(" \t") != std::string::npos) {
      have_header = true;
      break;
    }
  }
  if (!have_header) parse_error(lineno, "missing \"n m\" header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) parse_error(lineno, "bad header \"" + line + "\"");

  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno)) parse_error(lineno, "expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    std::vector<Vertex> ids;
    long long v = 0;
    while (row >> v) {
      if (v < 1 || v > n) parse_error(lineno, "vertex " + std::to_string(v) + " outside [1, n]");
      ids.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) parse_error(lineno, "non-numeric token");
    if (ids.empty()) throw Error(Errc::EmptyEdge, "line " + std::to_string(lineno) + ": empty edge");
    const std::size_t raw = ids.size();
    auto set = VertexSet::from_unsorted(std::move(ids));
    if (set.size() != raw) parse_error(lineno, "repeated vertex in edge");
    edges.push_back(std::move(set));
  }
  while (next_content_line(in, line, lineno)) {
    if (line.find_first_not_of(" \t") != std::string::npos) parse_error(lineno, "trailing content after edges");
  }
  return Hypergraph(static_cast<std::size_t>(n), std::move(edges));
}

Hypergraph read_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  std::vector<VertexSet> edges = h.edges();
  std::sort(edges.begin(), edges.end());
  out << h.universe() << ' ' << edges.size() << '\n';
  for (const auto& e : edges) {
    bool first = true;
    for (Vertex v : e) {
      if (!first) out << ' ';
      out << v;
      first = false;
    }
    out << '\n';
  }
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write " + path);
  write_hg(out, h);
}

}  // namespace hmis
