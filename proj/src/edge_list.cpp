// Copyright 2026 The tristream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "tristream/errors.hpp"
#include "tristream/graph.hpp"

namespace tristream {

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

// Parses one decimal vertex id and advances `s` past it.
bool ConsumeId(std::string_view& s, VertexId& out) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) return false;
  if (value > std::numeric_limits<VertexId>::max()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  if (!s.empty() && !IsSpace(s.front())) return false;
  out = static_cast<VertexId>(value);
  return true;
}

}  // namespace

Graph ParseEdgeList(std::string_view text,
                    std::optional<std::size_t> num_vertices) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::size_t max_id_plus_one = 0;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;

    Edge e;
    if (!ConsumeId(line, e.u) || !ConsumeId(line, e.v) || !Trim(line).empty()) {
      throw ParseError(ParseError::Kind::kMalformed, line_no,
                       "expected two vertex ids below 2^32");
    }
    if (e.u == e.v) throw ParseError(ParseError::Kind::kSelfLoop, line_no);
    max_id_plus_one =
        std::max<std::size_t>(max_id_plus_one, std::size_t{std::max(e.u, e.v)} + 1);
    edges.push_back(e);
    lines.push_back(line_no);
  }

  std::size_t n = max_id_plus_one;
  if (num_vertices) {
    if (*num_vertices < max_id_plus_one) {
      throw InvalidArgs("vertex count " + std::to_string(*num_vertices) +
                        " does not cover vertex id " +
                        std::to_string(max_id_plus_one - 1));
    }
    n = *num_vertices;
  }

  try {
    return Graph(n, std::move(edges));
  } catch (const InvalidEdge& err) {
    const std::size_t line = lines[err.edge_index()];
    if (err.kind() == InvalidEdge::Kind::kDuplicateEdge) {
      throw ParseError(ParseError::Kind::kDuplicateEdge, line);
    }
    throw ParseError(ParseError::Kind::kMalformed, line, err.what());
  }
}

std::string SerializeEdgeList(const Graph& g) {
  std::string out;
  out.reserve(g.num_edges() * 12);
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph ReadEdgeListFile(const std::string& path,
                       std::optional<std::size_t> num_vertices) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgs("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseEdgeList(buf.str(), num_vertices);
}

void WriteEdgeListFile(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgs("cannot write " + path);
  out << SerializeEdgeList(g);
  if (!out) throw InvalidArgs("write failed for " + path);
}

}  // namespace tristream
