#pragma once

// Symbolic arithmetic in the Leavitt path algebra L(G) of a finite graph.
//
// Every element is a linear combination of basis monomials p q* with
// r(p) = r(q). A monomial is in normal form unless p and q end in the same
// edge f and f is the special edge of s(f); such monomials are rewritten with
//   f f* = s(f) - sum_{e in s^-1(s(f)), e != f} e e*.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WorkLimitExceeded : public AlgebraError {
 public:
  WorkLimitExceeded(std::size_t limit, std::size_t required)
      : AlgebraError("work limit of " + std::to_string(limit) +
                     " commutators exceeded (" + std::to_string(required) +
                     " required)"),
        limit_(limit),
        required_(required) {}
  std::size_t limit() const { return limit_; }
  std::size_t required() const { return required_; }

 private:
  std::size_t limit_;
  std::size_t required_;
};

/// A path e_1...e_k; for k = 0 the anchor is the vertex itself, otherwise it
/// is s(e_1).
struct Path {
  VertexId anchor{};
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  VertexId range(const Graph& g) const {
    return edges.empty() ? anchor : g.range(edges.back());
  }
  bool is_prefix_of(const Path& o) const;

  bool operator==(const Path&) const = default;
};

/// p q* with r(p) = r(q).
struct Monomial {
  Path p;
  Path q;

  static Monomial vertex(VertexId v) { return {{v, {}}, {v, {}}}; }
  static Monomial edge(const Graph& g, EdgeId e);
  static Monomial ghost(const Graph& g, EdgeId e);

  long degree() const {
    return static_cast<long>(p.length()) - static_cast<long>(q.length());
  }
  bool is_vertex() const { return p.edges.empty() && q.edges.empty(); }
  /// In S0: p = q.
  bool is_diagonal() const { return p == q; }

  bool operator==(const Monomial&) const = default;
};

/// Orders by degree, |p|, edges of p, edges of q, then anchors.
bool operator<(const Monomial& a, const Monomial& b);

/// Product of basis monomials modulo relations (1)-(3) only. The result is
/// zero or a single, possibly non-normal, monomial.
std::optional<Monomial> raw_product(const Monomial& a, const Monomial& b);

/// Special edge per non-sink vertex.
class NormalFormConfig {
 public:
  /// First declared out-edge of every non-sink.
  static NormalFormConfig first_out_edge(const Graph& g);
  /// Throws AlgebraError unless special[v] is an out-edge of v for every
  /// non-sink v, and absent for sinks.
  NormalFormConfig(const Graph& g, std::vector<std::optional<EdgeId>> special);

  std::optional<EdgeId> special(VertexId v) const { return special_.at(index(v)); }

  bool operator==(const NormalFormConfig&) const = default;

 private:
  NormalFormConfig() = default;
  std::vector<std::optional<EdgeId>> special_;
};

/// Finite linear combination of normal monomials with nonzero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  Element(FieldSpec field, std::uint64_t context) : field_(field), context_(context) {}

  const FieldSpec& field() const { return field_; }
  /// Fingerprint of the graph and special-edge choice the element lives in.
  std::uint64_t context() const { return context_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero when m is absent.
  Scalar coefficient(const Monomial& m) const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Scalar& c) const;

  bool operator==(const Element& o) const;

 private:
  friend class LeavittAlgebra;
  void add_term(const Monomial& m, const Scalar& c);
  void require_compatible(const Element& o) const;

  FieldSpec field_ = FieldSpec::rational();
  std::uint64_t context_ = 0;
  Terms terms_;
};

/// A generator v, e or e*.
struct Generator {
  enum class Kind { vertex, edge, ghost };
  Kind kind = Kind::vertex;
  std::uint32_t id = 0;

  static Generator vertex(VertexId v) { return {Kind::vertex, static_cast<std::uint32_t>(index(v))}; }
  static Generator edge(EdgeId e) { return {Kind::edge, static_cast<std::uint32_t>(index(e))}; }
  static Generator ghost(EdgeId e) { return {Kind::ghost, static_cast<std::uint32_t>(index(e))}; }
};

using Word = std::vector<Generator>;

struct RawTerm {
  Scalar coefficient;
  Word word;
};

/// L(G) over a field with a fixed special-edge choice. Holds its own copy of
/// the graph.
class LeavittAlgebra {
 public:
  LeavittAlgebra(Graph g, FieldSpec field);
  LeavittAlgebra(Graph g, FieldSpec field, NormalFormConfig config);

  const Graph& graph() const { return graph_; }
  const FieldSpec& field() const { return field_; }
  const NormalFormConfig& config() const { return config_; }
  std::uint64_t context() const { return context_; }

  Element zero() const { return Element(field_, context_); }
  Element scalar(long long n) const;
  Element vertex(VertexId v) const;
  Element edge(EdgeId e) const;
  Element ghost(EdgeId e) const;
  /// Sum of all vertices.
  Element identity() const;
  /// c * m for a normal or non-normal monomial; the result is normalized.
  Element monomial(const Monomial& m, const Scalar& c) const;
  Element monomial(const Monomial& m) const;

  bool is_normal(const Monomial& m) const;

  /// Collapses each word with relations (1)-(3) and rewrites the sum into
  /// normal form with relation (4). Non-composable words vanish. Throws
  /// AlgebraError on ids outside the graph.
  Element normalize(const std::vector<RawTerm>& raw) const;

  Element multiply(const Element& a, const Element& b) const;
  Element star(const Element& a) const;
  Element commutator(const Element& a, const Element& b) const;

  /// Parts spanned by monomials with p = q and with p != q.
  std::pair<Element, Element> s0_s1_split(const Element& a) const;
  std::map<long, Element> degree_components(const Element& a) const;
  /// Coefficients of the vertex monomials.
  VertexVector vertex_part(const Element& a) const;

  /// Generator word text: vertices by name, edges by name, ghosts as name',
  /// joined with '.', e.g. "2*e.f' - w". Zero renders as "0".
  std::string render(const Element& a) const;
  std::string render(const Monomial& m) const;

  /// Normal monomials p q* with |p|, |q| <= max_len.
  std::vector<Monomial> normal_monomials(std::size_t max_len) const;

 private:
  void require_context(const Element& a) const;
  Element reduce(Element::Terms raw) const;

  Graph graph_;
  FieldSpec field_;
  NormalFormConfig config_;
  std::uint64_t context_;
};

struct OracleOptions {
  std::size_t max_len = 2;
  /// Ceiling on the number of commutators evaluated.
  std::size_t work_limit = 20000;
};

/// Row-reduced basis of [L,L] n span(V) as reached by commutators of normal
/// monomials with path lengths <= max_len. The commutators are reduced with
/// non-vertex columns ahead of vertex columns, so the rows pivoting on a
/// vertex span exactly the intersection. Throws WorkLimitExceeded when more
/// than work_limit degree-compatible pairs would be evaluated.
std::vector<VertexVector> brute_force_commutator_vertex_span(
    const Graph& g, FieldSpec f, const OracleOptions& options = {});

/// Number of commutator pairs the oracle would evaluate.
std::size_t oracle_work(const Graph& g, FieldSpec f, std::size_t max_len);

/// True when every commutator of normal monomials with path lengths at most
/// max_len vanishes. Throws WorkLimitExceeded when more than work_limit
/// unordered pairs exist.
bool bounded_commutators_vanish(const Graph& g, FieldSpec f,
                                const OracleOptions& options = {});

}  // namespace lpa
