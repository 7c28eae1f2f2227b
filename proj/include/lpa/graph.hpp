#pragma once

// Finite directed multigraphs and the graph-theoretic predicates used by the
// Lie simplicity criterion: hereditary saturated closures, condition (L),
// balloons and fibers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lpa {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(EdgeId e) { return static_cast<std::size_t>(e); }

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse_graph; carries the 1-based line of the offending input.
class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeDecl {
  std::string name;
  std::string source;
  std::string range;
};

/// Immutable multigraph. Vertex and edge ids are positions in declaration
/// order; names are unique across vertices and edges together.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on duplicate or malformed names and on edges
  /// referencing undeclared vertices.
  Graph(std::vector<std::string> vertex_names, const std::vector<EdgeDecl>& edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return sources_.size(); }
  bool empty() const { return vertex_names_.empty(); }

  const std::string& name(VertexId v) const { return vertex_names_.at(index(v)); }
  const std::string& name(EdgeId e) const { return edge_names_.at(index(e)); }
  VertexId source(EdgeId e) const { return sources_.at(index(e)); }
  VertexId range(EdgeId e) const { return ranges_.at(index(e)); }
  bool is_loop(EdgeId e) const { return source(e) == range(e); }

  /// Out-edges of v in declaration order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(index(v)); }
  /// In-edges of v in declaration order.
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(index(v)); }
  bool is_sink(VertexId v) const { return out_edges(v).empty(); }
  bool is_source(VertexId v) const { return in_edges(v).empty(); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throws GraphError when absent.
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  /// Canonical text form accepted by parse_graph.
  std::string to_text() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> ranges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Line format: `# comment`, `vertex NAME`, `edge NAME SRC DST`.
Graph parse_graph(std::string_view text);

/// Subset of the vertices of a graph with a fixed vertex count.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  static VertexSet all(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(VertexId v) const { return bits_.at(index(v)); }
  void insert(VertexId v) { bits_.at(index(v)) = true; }
  void erase(VertexId v) { bits_.at(index(v)) = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Members in declaration order.
  std::vector<VertexId> members() const;
  bool is_subset_of(const VertexSet& o) const;
  VertexSet complement() const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<bool> bits_;
};

std::string format_vertex_set(const Graph& g, const VertexSet& s);

/// Weakly connected components, each listed by its least member.
std::vector<VertexSet> weak_components(const Graph& g);

bool is_hereditary(const Graph& g, const VertexSet& s);
bool is_saturated(const Graph& g, const VertexSet& s);

/// Least superset of s closed under edge ranges and under saturation.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& s);

/// Inclusion-minimal singleton closures, deduplicated, ordered by least
/// member. Every nonempty hereditary saturated set contains one of them.
/// Throws GraphError on an empty graph.
std::vector<VertexSet> minimal_hereditary_saturated(const Graph& g);

struct CycleExitCheck {
  bool all_have_exits = true;
  /// Edges of an exit-free cycle, starting at its least vertex.
  std::vector<EdgeId> witness;
};

/// Condition (L). A cycle lacks an exit exactly when each of its vertices
/// has out-degree one, so only the functional subgraph of out-degree-one
/// vertices is searched.
CycleExitCheck every_cycle_has_exit(const Graph& g);

struct LpaSimplicity {
  bool simple = false;
  /// Set on failure: an exit-free cycle or a proper nonempty hereditary
  /// saturated subset.
  std::variant<std::monostate, std::vector<EdgeId>, VertexSet> obstruction;
};

/// Condition (L) plus: the only hereditary saturated subsets are empty and V.
/// Throws GraphError on an empty graph.
LpaSimplicity is_lpa_simple(const Graph& g);

/// Every weak component is an isolated vertex or a single vertex with one
/// loop.
bool is_points_and_loops(const Graph& g);

struct BalloonWitness {
  VertexId vertex{};
  std::optional<EdgeId> loop;
  std::vector<EdgeId> edges_to_w;
  /// Conditions (i) v not in W, (ii) loop at v, (iii) E(v,W) nonempty,
  /// (iv) E(v,V) = {C} u E(v,W), (v) E(V,v) = {C}.
  std::array<bool, 5> conditions{};
  bool balloon = false;
};

/// Throws GraphError for an unknown vertex or an empty W.
BalloonWitness is_balloon(const Graph& g, VertexId v, const VertexSet& w);

/// Source-to-sink edge that is the only edge into its sink. Throws
/// GraphError for an unknown edge.
bool is_fiber(const Graph& g, EdgeId e);

/// Vertices of w and the edges with both ends in w, original order and names.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

}  // namespace lpa
