#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "fjq/graph.hpp"
#include "fjq/text_util.hpp"

namespace fjq {

namespace {

struct RawEdge {
  std::uint64_t u;
  std::uint64_t v;
  double w;
};

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, IndexBase base) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#' || tokens[0].front() == '%') continue;
    if (tokens.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected \"u v [w]\", got \"" +
                       line + "\"");
    }
    RawEdge e{};
    if (!detail::parse_uint(tokens[0], e.u) || !detail::parse_uint(tokens[1], e.v)) {
      throw ParseError("line " + std::to_string(line_no) + ": node ids must be non-negative integers");
    }
    e.w = 1.0;
    if (tokens.size() >= 3 && !detail::parse_double(tokens[2], e.w)) {
      throw ParseError("line " + std::to_string(line_no) + ": bad weight \"" +
                       std::string(tokens[2]) + "\"");
    }
    if (!(std::isfinite(e.w) && e.w > 0.0)) {
      throw ValidationError("line " + std::to_string(line_no) + ": weight must be positive, got " +
                            std::string(tokens[2]));
    }
    saw_zero = saw_zero || e.u == 0 || e.v == 0;
    raw.push_back(e);
  }

  LoadedGraph out;
  switch (base) {
    case IndexBase::kAuto: out.index_base = saw_zero ? 0 : 1; break;
    case IndexBase::kZero: out.index_base = 0; break;
    case IndexBase::kOne:
      if (saw_zero) throw ValidationError("node id 0 present in 1-indexed edge list");
      out.index_base = 1;
      break;
  }

  std::vector<std::uint64_t>& ids = out.original_ids;
  ids.reserve(2 * raw.size());
  for (const RawEdge& e : raw) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto compact = [&ids](std::uint64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({compact(e.u), compact(e.v), e.w});
  out.graph = Graph::from_edges(ids.size(), edges, &out.stats);
  return out;
}

LoadedGraph load_edge_list(const std::filesystem::path& path, IndexBase base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list " + path.string());
  return parse_edge_list(in, base);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::uint64_t> external_ids) {
  auto ext = [&](NodeId u) -> std::uint64_t { return external_ids.empty() ? u : external_ids[u]; };
  for (const Edge& e : g.edges()) {
    out << ext(e.head) << ' ' << ext(e.tail) << ' ' << format_double(e.weight) << '\n';
  }
}

}  // namespace fjq
