#pragma once

// Fixture graphs, an exhaustive small-graph corpus and random generators
// shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/leavitt.hpp"

namespace lpa::test {

inline constexpr const char* kPt = "vertex u\n";
inline constexpr const char* kLoop = "vertex u\nedge l u u\n";
inline constexpr const char* kA2 = "vertex v\nvertex w\nedge a v w\n";
inline constexpr const char* kR2 = "vertex u\nedge g u u\nedge h u u\n";
inline constexpr const char* kR3 = "vertex u\nedge g u u\nedge h u u\nedge k u u\n";
inline constexpr const char* kToe = "vertex v\nvertex w\nedge c v v\nedge e v w\n";
inline constexpr const char* kBall =
    "vertex v\nvertex w\nedge f1 w w\nedge f2 w w\nedge c v v\nedge e v w\n";

inline Graph graph(const char* text) { return parse_graph(text); }

/// One vertex u with n loops l1..ln.
inline Graph rose(int n) {
  std::vector<EdgeDecl> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({"l" + std::to_string(i), "u", "u"});
  return Graph({"u"}, edges);
}

using EdgeList = std::vector<std::pair<int, int>>;

inline Graph build(int n, const EdgeList& edges) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<EdgeDecl> decls;
  for (std::size_t i = 0; i < edges.size(); ++i)
    decls.push_back({"e" + std::to_string(i), names[edges[i].first], names[edges[i].second]});
  return Graph(names, decls);
}

inline EdgeList canonical(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [s, r] : edges) mapped.push_back({perm[s], perm[r]});
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Connected multigraphs with at most max_v vertices and max_e edges, one
/// per isomorphism class of the sorted edge list.
inline std::vector<Graph> small_corpus(int max_v = 3, int max_e = 4) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_v; ++n) {
    EdgeList pairs;
    for (int s = 0; s < n; ++s)
      for (int r = 0; r < n; ++r) pairs.push_back({s, r});
    std::set<EdgeList> seen;
    EdgeList current;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      EdgeList c = canonical(n, current);
      if (seen.insert(c).second) {
        Graph g = build(n, c);
        if (weak_components(g).size() == 1) out.push_back(g);
      }
      if (static_cast<int>(current.size()) == max_e) return;
      for (std::size_t i = from; i < pairs.size(); ++i) {
        current.push_back(pairs[i]);
        self(self, i);
        current.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int max_v, int max_e) {
  int n = std::uniform_int_distribution<int>(1, max_v)(rng);
  int m = std::uniform_int_distribution<int>(0, max_e)(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  EdgeList edges;
  for (int i = 0; i < m; ++i) edges.push_back({pick(rng), pick(rng)});
  return build(n, edges);
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  VertexSet s(n);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.insert(static_cast<VertexId>(i));
  return s;
}

/// All simple cycles as edge lists, each reported once per starting vertex
/// choice (the least vertex on the cycle).
inline std::vector<std::vector<EdgeId>> simple_cycles(const Graph& g) {
  std::vector<std::vector<EdgeId>> out;
  const std::size_t n = g.vertex_count();
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<bool> on(n, false);
    std::vector<EdgeId> path;
    auto dfs = [&](auto&& self, std::size_t at) -> void {
      for (EdgeId e : g.out_edges(static_cast<VertexId>(at))) {
        std::size_t r = index(g.range(e));
        if (r == start) {
          path.push_back(e);
          out.push_back(path);
          path.pop_back();
        } else if (r > start && !on[r]) {
          on[r] = true;
          path.push_back(e);
          self(self, r);
          path.pop_back();
          on[r] = false;
        }
      }
    };
    on[start] = true;
    dfs(dfs, start);
  }
  return out;
}

/// A cycle has an exit when some vertex on it emits an edge outside it.
inline bool cycle_has_exit(const Graph& g, const std::vector<EdgeId>& cycle) {
  for (EdgeId c : cycle)
    for (EdgeId e : g.out_edges(g.source(c)))
      if (std::find(cycle.begin(), cycle.end(), e) == cycle.end()) return true;
  return false;
}

inline Scalar random_scalar(std::mt19937_64& rng, FieldSpec f) {
  int n = std::uniform_int_distribution<int>(-9, 9)(rng);
  int d = f.is_rational() ? std::uniform_int_distribution<int>(1, 5)(rng) : 1;
  return Scalar::from_integer(f, n) / Scalar::from_integer(f, d);
}

inline Element random_element(const LeavittAlgebra& alg, const std::vector<Monomial>& pool,
                              std::mt19937_64& rng, int max_terms = 3) {
  Element a = alg.zero();
  if (pool.empty()) return a;
  int k = std::uniform_int_distribution<int>(1, max_terms)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int i = 0; i < k; ++i)
    a = a + alg.monomial(pool[pick(rng)], Scalar::from_integer(alg.field(), coef(rng)));
  return a;
}

inline VertexVector vec(FieldSpec f, std::initializer_list<long long> coords) {
  VertexVector v(f, coords.size());
  std::size_t i = 0;
  for (long long c : coords) v.set(i++, Scalar::from_integer(f, c));
  return v;
}


/// Generator word of p q*.
inline Word word_of(const Monomial& m) {
  if (m.is_vertex()) return {Generator::vertex(m.p.anchor)};
  Word w;
  for (EdgeId e : m.p.edges) w.push_back(Generator::edge(e));
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it)
    w.push_back(Generator::ghost(*it));
  return w;
}

inline std::vector<RawTerm> raw_terms(const Element& a) {
  std::vector<RawTerm> out;
  for (const auto& [m, c] : a.terms()) out.push_back({c, word_of(m)});
  return out;
}

}  // namespace lpa::test
