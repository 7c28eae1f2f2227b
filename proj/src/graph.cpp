#include "lpa/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace lpa {

namespace {

bool valid_name(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

Graph::Graph(std::vector<std::string> vertex_names,
             const std::vector<EdgeDecl>& edges)
    : vertex_names_(std::move(vertex_names)) {
  std::unordered_map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
    const auto& n = vertex_names_[i];
    if (!valid_name(n)) {
      throw GraphError("invalid vertex name \"" + n + "\"");
    }
    if (!ids.emplace(n, VertexId(i)).second) {
      throw GraphError("duplicate name \"" + n + "\"");
    }
  }
  out_.resize(vertex_names_.size());
  in_.resize(vertex_names_.size());
  std::unordered_map<std::string, bool> edge_names;
  for (auto const& e : edges) {
    if (!valid_name(e.name)) {
      throw GraphError("invalid edge name \"" + e.name + "\"");
    }
    if (ids.count(e.name) || !edge_names.emplace(e.name, true).second) {
      throw GraphError("duplicate name \"" + e.name + "\"");
    }
    auto s = ids.find(e.source);
    if (s == ids.end()) {
      throw GraphError("undeclared vertex \"" + e.source + "\"");
    }
    auto r = ids.find(e.range);
    if (r == ids.end()) {
      throw GraphError("undeclared vertex \"" + e.range + "\"");
    }
    const auto id = static_cast<EdgeId>(edge_names_.size());
    edge_names_.push_back(e.name);
    sources_.push_back(s->second);
    ranges_.push_back(r->second);
    out_[index(s->second)].push_back(id);
    in_[index(r->second)].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) {
    return std::nullopt;
  }
  return VertexId(it - vertex_names_.begin());
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end()) {
    return std::nullopt;
  }
  return EdgeId(it - edge_names_.begin());
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) {
    return *v;
  }
  throw GraphError("unknown vertex \"" + std::string(name) + "\"");
}

EdgeId Graph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) {
    return *e;
  }
  throw GraphError("unknown edge \"" + std::string(name) + "\"");
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    out.push_back(VertexId(i));
  }
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < edge_count(); ++i) {
    out.push_back(EdgeId(i));
  }
  return out;
}

std::string Graph::to_text() const {
  std::ostringstream os;
  for (auto const& n : vertex_names_) {
    os << "vertex " << n << '\n';
  }
  for (std::size_t i = 0; i < edge_count(); ++i) {
    os << "edge " << edge_names_[i] << ' ' << vertex_names_[index(sources_[i])]
       << ' ' << vertex_names_[index(ranges_[i])] << '\n';
  }
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  std::unordered_map<std::string, bool> declared;
  std::unordered_map<std::string, bool> vertex_names;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) {
      tokens.push_back(t);
    }
    if (tokens.empty()) {
      continue;
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (!valid_name(tokens[i])) {
        throw ParseError(line_no, "invalid name \"" + tokens[i] + "\"");
      }
    }
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected `vertex NAME`");
      }
      if (!declared.emplace(tokens[1], true).second) {
        throw ParseError(line_no, "duplicate name \"" + tokens[1] + "\"");
      }
      vertex_names.emplace(tokens[1], true);
      vertices.push_back(tokens[1]);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected `edge NAME SRC DST`");
      }
      for (std::size_t i : {2u, 3u}) {
        if (!vertex_names.count(tokens[i])) {
          throw ParseError(line_no,
                           "undeclared vertex \"" + tokens[i] + "\"");
        }
      }
      if (!declared.emplace(tokens[1], true).second) {
        throw ParseError(line_no, "duplicate name \"" + tokens[1] + "\"");
      }
      edges.push_back({tokens[1], tokens[2], tokens[3]});
    } else {
      throw ParseError(line_no, "unknown directive \"" + tokens[0] + "\"");
    }
  }
  return Graph(std::move(vertices), edges);
}

VertexSet::VertexSet(std::size_t universe,
                     std::initializer_list<VertexId> members)
    : bits_(universe, false) {
  for (auto v : members) {
    insert(v);
  }
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.assign(universe, true);
  return s;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      out.push_back(VertexId(i));
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  if (o.universe() != universe()) {
    throw GraphError("vertex sets over different graphs");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) {
      return false;
    }
  }
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = !bits_[i];
  }
  return out;
}

std::string format_vertex_set(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.members()) {
    if (!first) {
      out += ",";
    }
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

std::vector<VertexSet> weak_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto e : g.edges()) {
    std::size_t a = find(index(g.source(e)));
    std::size_t b = find(index(g.range(e)));
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are least members, so iterating roots in order gives the ordering.
  std::vector<VertexSet> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t root = find(v);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back(n);
    }
    out[slot[root]].insert(VertexId(v));
  }
  return out;
}

bool is_hereditary(const Graph& g, const VertexSet& s) {
  for (auto e : g.edges()) {
    if (s.contains(g.source(e)) && !s.contains(g.range(e))) {
      return false;
    }
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& s) {
  for (auto v : g.vertices()) {
    if (g.is_sink(v) || s.contains(v)) {
      continue;
    }
    auto out = g.out_edges(v);
    if (std::all_of(out.begin(), out.end(),
                    [&](EdgeId e) { return s.contains(g.range(e)); })) {
      return false;
    }
  }
  return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s) {
  VertexSet result = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto e : g.edges()) {
      if (result.contains(g.source(e)) && !result.contains(g.range(e))) {
        result.insert(g.range(e));
        changed = true;
      }
    }
    for (auto v : g.vertices()) {
      if (result.contains(v) || g.is_sink(v)) {
        continue;
      }
      auto out = g.out_edges(v);
      if (std::all_of(out.begin(), out.end(),
                      [&](EdgeId e) { return result.contains(g.range(e)); })) {
        result.insert(v);
        changed = true;
      }
    }
  }
  return result;
}

std::vector<VertexSet> minimal_hereditary_saturated(const Graph& g) {
  if (g.empty()) {
    throw GraphError("minimal hereditary saturated subsets of an empty graph");
  }
  std::vector<VertexSet> closures;
  for (auto v : g.vertices()) {
    VertexSet c =
        hereditary_saturated_closure(g, VertexSet(g.vertex_count(), {v}));
    if (std::find(closures.begin(), closures.end(), c) == closures.end()) {
      closures.push_back(std::move(c));
    }
  }
  std::vector<VertexSet> out;
  for (auto const& c : closures) {
    bool minimal = std::none_of(
        closures.begin(), closures.end(), [&](const VertexSet& d) {
          return d != c && d.is_subset_of(c);
        });
    if (minimal) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.members().front() < b.members().front();
  });
  return out;
}

CycleExitCheck every_cycle_has_exit(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto next = [&](std::size_t v) -> std::optional<std::size_t> {
    auto out = g.out_edges(VertexId(v));
    if (out.size() != 1) {
      return std::nullopt;
    }
    return index(g.range(out[0]));
  };
  // 0 = unvisited, 1 = on current walk, 2 = finished
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != 0) {
      continue;
    }
    std::vector<std::size_t> walk;
    std::optional<std::size_t> cur = start;
    while (cur && state[*cur] == 0 && g.out_edges(VertexId(*cur)).size() == 1) {
      state[*cur] = 1;
      walk.push_back(*cur);
      cur = next(*cur);
    }
    if (cur && state[*cur] == 1) {
      auto first = std::find(walk.begin(), walk.end(), *cur);
      std::vector<std::size_t> cycle(first, walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                  cycle.end());
      CycleExitCheck out;
      out.all_have_exits = false;
      for (auto v : cycle) {
        out.witness.push_back(g.out_edges(VertexId(v))[0]);
      }
      return out;
    }
    for (auto v : walk) {
      state[v] = 2;
    }
  }
  return {};
}

LpaSimplicity is_lpa_simple(const Graph& g) {
  if (g.empty()) {
    throw GraphError("simplicity of the empty graph");
  }
  LpaSimplicity out;
  if (auto exits = every_cycle_has_exit(g); !exits.all_have_exits) {
    out.obstruction = std::move(exits.witness);
    return out;
  }
  const VertexSet everything = VertexSet::all(g.vertex_count());
  for (auto v : g.vertices()) {
    VertexSet c =
        hereditary_saturated_closure(g, VertexSet(g.vertex_count(), {v}));
    if (c != everything) {
      out.obstruction = std::move(c);
      return out;
    }
  }
  out.simple = true;
  return out;
}

bool is_points_and_loops(const Graph& g) {
  for (auto const& comp : weak_components(g)) {
    if (comp.size() != 1) {
      return false;
    }
    VertexId v = comp.members().front();
    if (g.out_edges(v).size() > 1) {
      return false;
    }
  }
  return true;
}

BalloonWitness is_balloon(const Graph& g, VertexId v, const VertexSet& w) {
  if (index(v) >= g.vertex_count()) {
    throw GraphError("unknown vertex id " + std::to_string(index(v)));
  }
  if (w.universe() != g.vertex_count()) {
    throw GraphError("vertex set over a different graph");
  }
  if (w.empty()) {
    throw GraphError("balloon over an empty set");
  }
  BalloonWitness out;
  out.vertex = v;
  for (auto e : g.out_edges(v)) {
    if (g.is_loop(e) && !out.loop) {
      out.loop = e;
    }
    if (w.contains(g.range(e))) {
      out.edges_to_w.push_back(e);
    }
  }
  auto& c = out.conditions;
  c[0] = !w.contains(v);
  c[1] = out.loop.has_value();
  c[2] = !out.edges_to_w.empty();
  if (out.loop) {
    std::vector<EdgeId> expected = out.edges_to_w;
    if (std::find(expected.begin(), expected.end(), *out.loop) == expected.end()) {
      expected.push_back(*out.loop);
    }
    std::vector<EdgeId> actual(g.out_edges(v).begin(), g.out_edges(v).end());
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    c[3] = expected == actual;
    c[4] = g.in_edges(v).size() == 1 && g.in_edges(v)[0] == *out.loop;
  }
  out.balloon = std::all_of(c.begin(), c.end(), [](bool b) { return b; });
  return out;
}

bool is_fiber(const Graph& g, EdgeId e) {
  if (index(e) >= g.edge_count()) {
    throw GraphError("unknown edge id " + std::to_string(index(e)));
  }
  VertexId s = g.source(e);
  VertexId r = g.range(e);
  return g.is_source(s) && g.is_sink(r) && g.in_edges(r).size() == 1;
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.vertex_count()) {
    throw GraphError("vertex set over a different graph");
  }
  std::vector<std::string> names;
  for (auto v : w.members()) {
    names.push_back(g.name(v));
  }
  std::vector<EdgeDecl> edges;
  for (auto e : g.edges()) {
    if (w.contains(g.source(e)) && w.contains(g.range(e))) {
      edges.push_back({g.name(e), g.name(g.source(e)), g.name(g.range(e))});
    }
  }
  return Graph(std::move(names), edges);
}

}  // namespace lpa
