#include "erlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "erlab/errors.hpp"

namespace erlab {

namespace {

// Reads whitespace-separated tokens while skipping comment and blank lines,
// tracking the line number for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::istringstream& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      fields.clear();
      fields.str(line);
      return true;
    }
    return false;
  }
  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

template <class T>
T take(std::istringstream& fields, LineReader& reader, const char* what) {
  long long value;
  if (!(fields >> value)) reader.fail(std::string("expected ") + what);
  if (value < 0) reader.fail(std::string("negative ") + what);
  return T(value);
}

void expect_header(std::istringstream& fields, LineReader& reader, const std::string& word) {
  std::string head;
  if (!(fields >> head) || head != word) reader.fail("expected header '" + word + "'");
}

void expect_end(std::istringstream& fields, LineReader& reader) {
  std::string extra;
  if (fields >> extra) reader.fail("unexpected token '" + extra + "'");
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw StructuralError("empty graph file");
  expect_header(fields, reader, "graph");
  const auto n = take<std::size_t>(fields, reader, "vertex count");
  const auto m = take<std::size_t>(fields, reader, "edge count");
  expect_end(fields, reader);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(fields)) reader.fail("expected " + std::to_string(m) + " edges");
    const auto u = take<Vertex>(fields, reader, "vertex");
    const auto v = take<Vertex>(fields, reader, "vertex");
    expect_end(fields, reader);
    if (u >= n || v >= n) reader.fail("vertex out of range");
    if (u == v) reader.fail("loop");
    edges.push_back(make_edge(u, v));
  }
  Graph g(n, edges);
  if (g.size() != m) throw StructuralError("graph file lists a duplicate edge");
  return g;
}

void write_hypergraph(std::ostream& out, const LinearHypergraph& h) {
  out << "hypergraph " << h.n << ' ' << h.R << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

LinearHypergraph read_hypergraph(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw StructuralError("empty hypergraph file");
  expect_header(fields, reader, "hypergraph");
  const auto n = take<std::size_t>(fields, reader, "ground size");
  const auto R = take<int>(fields, reader, "uniformity");
  const auto m = take<std::size_t>(fields, reader, "edge count");
  expect_end(fields, reader);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(fields)) reader.fail("expected " + std::to_string(m) + " hyperedges");
    VertexSet e;
    long long v;
    while (fields >> v) {
      if (v < 0) reader.fail("negative vertex");
      e.push_back(Vertex(v));
    }
    if (!fields.eof()) reader.fail("non-numeric token");
    edges.push_back(std::move(e));
  }
  return LinearHypergraph(n, R, std::move(edges));
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    out << c.edges()[i].u << ' ' << c.edges()[i].v << ' ' << c.colors()[i] << '\n';
}

EdgeColoring read_coloring(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  std::vector<std::pair<Edge, int>> pairs;
  while (reader.next(fields)) {
    const auto u = take<Vertex>(fields, reader, "vertex");
    const auto v = take<Vertex>(fields, reader, "vertex");
    const auto c = take<int>(fields, reader, "colour");
    expect_end(fields, reader);
    if (u == v) reader.fail("loop");
    pairs.push_back({make_edge(u, v), c});
  }
  return EdgeColoring::from_pairs(std::move(pairs));
}

void write_partition(std::ostream& out, const SPartition& p) {
  out << "partition " << p.members.size() << ' ' << p.s << '\n';
  for (std::size_t v = 0; v < p.members.size(); ++v) {
    out << v << ' ' << p.members[v].size();
    for (std::size_t i = 0; i < p.members[v].size(); ++i)
      out << ' ' << p.members[v][i] << ' ' << p.parts[v][i];
    out << '\n';
  }
}

SPartition read_partition(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw StructuralError("empty partition file");
  expect_header(fields, reader, "partition");
  const auto n = take<std::size_t>(fields, reader, "ground size");
  SPartition p;
  p.s = take<int>(fields, reader, "part count");
  expect_end(fields, reader);
  p.members.resize(n);
  p.parts.resize(n);
  for (std::size_t line = 0; line < n; ++line) {
    if (!reader.next(fields)) reader.fail("expected " + std::to_string(n) + " clique lines");
    const auto v = take<std::size_t>(fields, reader, "clique index");
    if (v != line) reader.fail("clique lines must be in order");
    const auto size = take<std::size_t>(fields, reader, "clique size");
    for (std::size_t i = 0; i < size; ++i) {
      p.members[v].push_back(take<Vertex>(fields, reader, "member"));
      const int part = take<int>(fields, reader, "part");
      if (part >= p.s) reader.fail("part index out of range");
      p.parts[v].push_back(part);
    }
    expect_end(fields, reader);
    if (!std::is_sorted(p.members[v].begin(), p.members[v].end()))
      reader.fail("clique members must be sorted");
  }
  return p;
}

void write_vertex_set(std::ostream& out, const VertexSet& vs) {
  out << "vertices " << vs.size() << '\n';
  for (Vertex v : vs) out << v << '\n';
}

VertexSet read_vertex_set(std::istream& in) {
  LineReader reader(in);
  std::istringstream fields;
  if (!reader.next(fields)) throw StructuralError("empty vertex-set file");
  expect_header(fields, reader, "vertices");
  const auto k = take<std::size_t>(fields, reader, "size");
  VertexSet out;
  for (std::size_t i = 0; i < k; ++i) {
    if (!reader.next(fields)) reader.fail("expected " + std::to_string(k) + " vertices");
    out.push_back(take<Vertex>(fields, reader, "vertex"));
  }
  return out;
}

namespace {
std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path.string());
  return in;
}
}  // namespace

Graph load_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_graph(in);
}
LinearHypergraph load_hypergraph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_hypergraph(in);
}
EdgeColoring load_coloring(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_coloring(in);
}
SPartition load_partition(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_partition(in);
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << text;
}

std::string load_text(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace erlab
