#include "lpa/simplicity.hpp"

#include <algorithm>
#include <set>

namespace lpa {

namespace {

// Coordinates of an induced subgraph inside its parent.
struct Embedding {
  Graph sub;
  std::vector<VertexId> to_parent;
  std::size_t parent_size = 0;

  Embedding(const Graph& g, const VertexSet& w)
      : sub(induced_subgraph(g, w)), to_parent(w.members()), parent_size(g.vertex_count()) {}

  VertexSet lift(const VertexSet& s) const {
    VertexSet out(parent_size);
    for (auto v : s.members()) {
      out.insert(to_parent[index(v)]);
    }
    return out;
  }

  VertexVector lift(const VertexVector& x) const {
    VertexVector out(x.field(), parent_size);
    for (auto i : x.support()) {
      out.set(index(to_parent[i]), x[i]);
    }
    return out;
  }

  MembershipCertificate lift(const MembershipCertificate& c) const {
    MembershipCertificate out;
    out.target = lift(c.target);
    for (auto v : c.basis_sources) {
      out.basis_sources.push_back(to_parent[index(v)]);
    }
    for (auto const& b : c.basis) {
      out.basis.push_back(lift(b));
    }
    out.solution = c.solution;
    return out;
  }
};

VertexVector indicator(FieldSpec f, const VertexSet& s) {
  VertexVector out(f, s.universe());
  for (auto v : s.members()) {
    out.set(index(v), Scalar::one(f));
  }
  return out;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::zero_lie:
      return "zero-lie";
    case Outcome::simple:
      return "simple";
    case Outcome::not_simple:
      return "not-simple";
  }
  return "?";
}

std::string to_string(DecisionCase c) {
  switch (c) {
    case DecisionCase::theorem_one:
      return "theorem-one";
    case DecisionCase::theorem_two:
      return "theorem-two";
    case DecisionCase::none:
      return "none";
  }
  return "?";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::none:
      return "none";
    case Reason::zero_lie:
      return "zero-lie";
    case Reason::multiple_nonzero_components:
      return "multiple-nonzero-components";
    case Reason::identity_in_commutators:
      return "identity-in-commutators";
    case Reason::no_unique_minimal:
      return "no-unique-minimal";
    case Reason::induced_not_simple:
      return "induced-not-simple";
    case Reason::not_balloon:
      return "not-balloon";
    case Reason::membership_fails:
      return "membership-fails";
  }
  return "?";
}

CommutatorBasis commutator_vertex_basis(const Graph& g, FieldSpec f) {
  CommutatorBasis out;
  const Scalar one = Scalar::one(f);
  const Scalar minus_one = -one;
  for (auto v : g.vertices()) {
    if (g.is_sink(v)) {
      continue;
    }
    VertexVector b(f, g.vertex_count());
    b.add(index(v), one);
    for (auto e : g.out_edges(v)) {
      b.add(index(g.range(e)), minus_one);
    }
    out.sources.push_back(v);
    out.vectors.push_back(std::move(b));
  }
  return out;
}

MembershipCertificate vertex_combo_in_commutators(const Graph& g, FieldSpec f,
                                                  const VertexVector& coeffs) {
  CommutatorBasis basis = commutator_vertex_basis(g, f);
  MembershipCertificate out;
  out.target = coeffs;
  out.solution = solve_in_span(basis.vectors, coeffs);
  out.basis_sources = std::move(basis.sources);
  out.basis = std::move(basis.vectors);
  return out;
}

MembershipCertificate balloon_sum_condition(const Graph& g, const VertexSet& w,
                                            VertexId v, FieldSpec f) {
  BalloonWitness witness = is_balloon(g, v, w);
  if (!witness.balloon) {
    throw GraphError("vertex " + g.name(v) + " is not a balloon over " +
                     format_vertex_set(g, w));
  }
  Embedding emb(g, w);
  VertexVector target(f, emb.sub.vertex_count());
  for (auto e : witness.edges_to_w) {
    target.add(index(emb.sub.vertex(g.name(g.range(e)))), Scalar::one(f));
  }
  return emb.lift(vertex_combo_in_commutators(emb.sub, f, target));
}

SimplicityVerdict decide_lie_simple(const Graph& g, FieldSpec f) {
  if (g.empty()) {
    throw GraphError("cannot decide simplicity for an empty graph");
  }
  SimplicityVerdict verdict;
  verdict.field = f;

  std::vector<VertexSet> nonzero;
  for (auto const& comp : weak_components(g)) {
    if (!is_points_and_loops(induced_subgraph(g, comp))) {
      nonzero.push_back(comp);
    }
  }
  if (nonzero.empty()) {
    verdict.outcome = Outcome::zero_lie;
    verdict.reason = Reason::zero_lie;
    return verdict;
  }
  if (nonzero.size() > 1) {
    verdict.outcome = Outcome::not_simple;
    verdict.reason = Reason::multiple_nonzero_components;
    verdict.nonzero_components = std::move(nonzero);
    return verdict;
  }

  const VertexSet comp = nonzero.front();
  verdict.component = comp;
  Embedding emb(g, comp);

  if (is_lpa_simple(emb.sub).simple) {
    verdict.decision_case = DecisionCase::theorem_one;
    VertexVector ones = indicator(f, VertexSet::all(emb.sub.vertex_count()));
    verdict.identity_membership =
        emb.lift(vertex_combo_in_commutators(emb.sub, f, ones));
    if (verdict.identity_membership->in_span()) {
      verdict.outcome = Outcome::not_simple;
      verdict.reason = Reason::identity_in_commutators;
    } else {
      verdict.outcome = Outcome::simple;
    }
    return verdict;
  }

  verdict.decision_case = DecisionCase::theorem_two;
  verdict.outcome = Outcome::not_simple;
  std::vector<VertexSet> minimal = minimal_hereditary_saturated(emb.sub);
  if (minimal.size() != 1) {
    verdict.reason = Reason::no_unique_minimal;
    for (auto const& m : minimal) {
      verdict.minimal_sets.push_back(emb.lift(m));
    }
    return verdict;
  }
  const VertexSet w = emb.lift(minimal.front());
  verdict.w = w;
  if (w == comp || !is_lpa_simple(induced_subgraph(g, w)).simple) {
    verdict.reason = Reason::induced_not_simple;
    return verdict;
  }

  std::vector<VertexId> outside;
  for (auto v : comp.members()) {
    if (!w.contains(v)) {
      outside.push_back(v);
    }
  }
  for (auto v : outside) {
    verdict.balloons.push_back(is_balloon(g, v, w));
    if (!verdict.balloons.back().balloon) {
      verdict.reason = Reason::not_balloon;
      verdict.reason_vertex = v;
      return verdict;
    }
  }
  for (auto v : outside) {
    verdict.memberships.push_back({v, balloon_sum_condition(g, w, v, f)});
    if (!verdict.memberships.back().certificate.in_span()) {
      verdict.reason = Reason::membership_fails;
      verdict.reason_vertex = v;
      return verdict;
    }
  }
  verdict.outcome = Outcome::simple;
  return verdict;
}

namespace {

class Verifier {
 public:
  Verifier(const Graph& g, FieldSpec f) : g_(g), f_(f) {}

  VerificationResult run(const SimplicityVerdict& v) {
    check_references(v);
    if (!(v.field == f_)) {
      return fail("verdict field " + v.field.to_string() + " differs from " +
                  f_.to_string());
    }
    if (v.outcome == Outcome::simple && v.reason != Reason::none) {
      return fail("simple verdict carries a refutation reason");
    }
    if (v.outcome != Outcome::simple && v.reason == Reason::none) {
      return fail("non-simple verdict without a reason");
    }
    bool needs_vertex =
        v.reason == Reason::not_balloon || v.reason == Reason::membership_fails;
    if (needs_vertex != v.reason_vertex.has_value()) {
      return fail("reason vertex present exactly for not-balloon and membership-fails");
    }

    if (v.outcome == Outcome::zero_lie || v.reason == Reason::zero_lie) {
      if (v.outcome != Outcome::zero_lie || v.reason != Reason::zero_lie ||
          v.decision_case != DecisionCase::none) {
        return fail("inconsistent zero-lie claim");
      }
      if (!is_points_and_loops(g_)) {
        return fail("graph is not a disjoint union of points and loops");
      }
      return {};
    }

    if (v.reason == Reason::multiple_nonzero_components) {
      if (v.decision_case != DecisionCase::none) {
        return fail("component-level refutation with a theorem case");
      }
      return check_multiple(v.nonzero_components);
    }

    if (!v.component) {
      return fail("missing component");
    }
    if (auto r = check_component(*v.component); !r) {
      return r;
    }
    const VertexSet& comp = *v.component;
    const Graph sub = induced_subgraph(g_, comp);
    const bool lpa_simple = is_lpa_simple(sub).simple;

    if (v.decision_case == DecisionCase::theorem_one) {
      if (!lpa_simple) {
        return fail("theorem-one case on a component whose path algebra is not simple");
      }
      return check_theorem_one(v, comp);
    }
    if (v.decision_case != DecisionCase::theorem_two) {
      return fail("missing theorem case");
    }
    if (lpa_simple) {
      return fail("theorem-two case on a component whose path algebra is simple");
    }
    return check_theorem_two(v, comp);
  }

 private:
  static VerificationResult fail(std::string why) { return {false, std::move(why)}; }

  void check_set(const VertexSet& s) const {
    if (s.universe() != g_.vertex_count()) {
      throw GraphError("certificate vertex set over a different graph");
    }
  }

  void check_vertex(VertexId v) const {
    if (index(v) >= g_.vertex_count()) {
      throw GraphError("certificate names unknown vertex id " + std::to_string(index(v)));
    }
  }

  void check_membership_refs(const MembershipCertificate& c) const {
    for (auto s : c.basis_sources) {
      check_vertex(s);
    }
    if (c.target.dimension() != g_.vertex_count()) {
      throw GraphError("certificate vector over a different graph");
    }
    for (auto const& b : c.basis) {
      if (b.dimension() != g_.vertex_count()) {
        throw GraphError("certificate vector over a different graph");
      }
    }
  }

  void check_references(const SimplicityVerdict& v) const {
    if (v.component) check_set(*v.component);
    if (v.w) check_set(*v.w);
    for (auto const& s : v.nonzero_components) check_set(s);
    for (auto const& s : v.minimal_sets) check_set(s);
    if (v.reason_vertex) check_vertex(*v.reason_vertex);
    for (auto const& b : v.balloons) {
      check_vertex(b.vertex);
      if (b.loop && index(*b.loop) >= g_.edge_count()) {
        throw GraphError("certificate names unknown edge id " + std::to_string(index(*b.loop)));
      }
      for (auto e : b.edges_to_w) {
        if (index(e) >= g_.edge_count()) {
          throw GraphError("certificate names unknown edge id " + std::to_string(index(e)));
        }
      }
    }
    for (auto const& m : v.memberships) {
      check_vertex(m.vertex);
      check_membership_refs(m.certificate);
    }
    if (v.identity_membership) check_membership_refs(*v.identity_membership);
  }

  bool is_weak_component(const VertexSet& s) const {
    auto comps = weak_components(g_);
    return std::find(comps.begin(), comps.end(), s) != comps.end();
  }

  bool lie_part_nonzero(const VertexSet& comp) const {
    return !is_points_and_loops(induced_subgraph(g_, comp));
  }

  VerificationResult check_multiple(const std::vector<VertexSet>& comps) const {
    if (comps.size() < 2) {
      return fail("fewer than two nonzero components listed");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (!is_weak_component(comps[i])) {
        return fail(format_vertex_set(g_, comps[i]) + " is not a weak component");
      }
      if (!lie_part_nonzero(comps[i])) {
        return fail(format_vertex_set(g_, comps[i]) + " has zero Lie part");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (comps[i] == comps[j]) {
          return fail("component listed twice");
        }
      }
    }
    return {};
  }

  VerificationResult check_component(const VertexSet& comp) const {
    if (!is_weak_component(comp)) {
      return fail(format_vertex_set(g_, comp) + " is not a weak component");
    }
    if (!lie_part_nonzero(comp)) {
      return fail(format_vertex_set(g_, comp) + " has zero Lie part");
    }
    for (auto const& other : weak_components(g_)) {
      if (other != comp && lie_part_nonzero(other)) {
        return fail("another component " + format_vertex_set(g_, other) +
                    " has nonzero Lie part");
      }
    }
    return {};
  }

  // Recomputes b_x for the non-sinks of the graph induced on `within`,
  // expressed in coordinates of g.
  VerificationResult check_basis(const MembershipCertificate& c,
                                 const VertexSet& within) const {
    std::vector<VertexId> sources;
    std::vector<VertexVector> vectors;
    for (auto x : within.members()) {
      std::vector<EdgeId> out;
      for (auto e : g_.out_edges(x)) {
        if (within.contains(g_.range(e))) {
          out.push_back(e);
        }
      }
      if (out.empty()) {
        continue;
      }
      VertexVector b(f_, g_.vertex_count());
      b.add(index(x), Scalar::one(f_));
      for (auto e : out) {
        b.add(index(g_.range(e)), -Scalar::one(f_));
      }
      sources.push_back(x);
      vectors.push_back(std::move(b));
    }
    if (c.basis_sources != sources || c.basis != vectors) {
      return fail("commutator basis does not match the graph");
    }
    return {};
  }

  VerificationResult check_solution(const MembershipCertificate& c,
                                    bool expect_in_span) const {
    if (!(c.target.field() == f_)) {
      return fail("membership target over the wrong field");
    }
    if (c.in_span() != expect_in_span) {
      return fail(expect_in_span ? "membership claimed to fail"
                                 : "membership claimed to hold");
    }
    if (expect_in_span) {
      auto const& coeffs = *c.solution.coefficients;
      if (coeffs.size() != c.basis.size()) {
        return fail("coefficient count differs from basis size");
      }
      for (auto const& x : coeffs) {
        if (!(x.field() == f_)) {
          return fail("coefficient over the wrong field");
        }
      }
      if (!(linear_combination(c.basis, coeffs, f_, g_.vertex_count()) == c.target)) {
        return fail("coefficients do not reproduce the target");
      }
      return {};
    }
    std::vector<VertexVector> augmented = c.basis;
    augmented.push_back(c.target);
    const std::size_t r = rank(c.basis);
    const std::size_t ra = rank(augmented);
    if (c.solution.basis_rank != r || c.solution.augmented_rank != ra) {
      return fail("stated ranks differ from recomputed ranks");
    }
    if (ra != r + 1) {
      return fail("target lies in the span");
    }
    return {};
  }

  VerificationResult check_theorem_one(const SimplicityVerdict& v,
                                       const VertexSet& comp) const {
    if (!v.identity_membership) {
      return fail("missing identity membership certificate");
    }
    if (v.w || !v.balloons.empty() || !v.memberships.empty()) {
      return fail("theorem-one verdict carries balloon data");
    }
    const auto& c = *v.identity_membership;
    if (!(c.target == indicator(f_, comp))) {
      return fail("identity target is not the sum of the component's vertices");
    }
    if (auto r = check_basis(c, comp); !r) {
      return r;
    }
    if (v.outcome == Outcome::simple) {
      return check_solution(c, false);
    }
    if (v.reason != Reason::identity_in_commutators) {
      return fail("theorem-one refutation must be identity-in-commutators");
    }
    return check_solution(c, true);
  }

  // W is hereditary saturated, the closure of each of its vertices, and
  // contained in the closure of every vertex of the component.
  VerificationResult check_unique_minimal(const VertexSet& w,
                                          const VertexSet& comp) const {
    if (w.empty() || !w.is_subset_of(comp)) {
      return fail("W must be a nonempty subset of the component");
    }
    if (!is_hereditary(g_, w) || !is_saturated(g_, w)) {
      return fail("W is not hereditary and saturated");
    }
    for (auto x : comp.members()) {
      VertexSet c = hereditary_saturated_closure(g_, VertexSet(g_.vertex_count(), {x}));
      if (w.contains(x) && c != w) {
        return fail("W is not minimal: closure of " + g_.name(x) + " is " +
                    format_vertex_set(g_, c));
      }
      if (!w.is_subset_of(c)) {
        return fail("W is not unique: closure of " + g_.name(x) + " misses part of W");
      }
    }
    return {};
  }

  VerificationResult check_minimal_sets(const SimplicityVerdict& v,
                                        const VertexSet& comp) const {
    if (v.minimal_sets.size() < 2) {
      return fail("fewer than two minimal sets listed");
    }
    for (std::size_t i = 0; i < v.minimal_sets.size(); ++i) {
      const VertexSet& m = v.minimal_sets[i];
      if (m.empty() || !m.is_subset_of(comp)) {
        return fail("minimal set outside the component");
      }
      if (!is_hereditary(g_, m) || !is_saturated(g_, m)) {
        return fail(format_vertex_set(g_, m) + " is not hereditary and saturated");
      }
      for (auto x : m.members()) {
        if (hereditary_saturated_closure(g_, VertexSet(g_.vertex_count(), {x})) != m) {
          return fail(format_vertex_set(g_, m) + " is not minimal");
        }
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (v.minimal_sets[j] == m) {
          return fail("minimal set listed twice");
        }
      }
    }
    return {};
  }

  // Literal edge-set evaluation of the five balloon conditions for the
  // claimed loop and edge list.
  VerificationResult check_balloon(const BalloonWitness& b, const VertexSet& w) const {
    const VertexId v = b.vertex;
    std::array<bool, 5> flags{};
    flags[0] = !w.contains(v);
    flags[1] = b.loop && g_.source(*b.loop) == v && g_.range(*b.loop) == v;
    std::vector<EdgeId> to_w;
    for (auto e : g_.out_edges(v)) {
      if (w.contains(g_.range(e))) {
        to_w.push_back(e);
      }
    }
    if (to_w != b.edges_to_w) {
      return fail("E(v,W) listed incorrectly for " + g_.name(v));
    }
    flags[2] = !to_w.empty();
    if (flags[1]) {
      std::set<EdgeId> expected(to_w.begin(), to_w.end());
      expected.insert(*b.loop);
      std::set<EdgeId> actual(g_.out_edges(v).begin(), g_.out_edges(v).end());
      flags[3] = expected == actual && actual.size() == g_.out_edges(v).size();
      flags[4] = g_.in_edges(v).size() == 1 && g_.in_edges(v)[0] == *b.loop;
    }
    if (flags != b.conditions) {
      return fail("balloon condition flags for " + g_.name(v) + " are wrong");
    }
    bool all = std::all_of(flags.begin(), flags.end(), [](bool x) { return x; });
    if (all != b.balloon) {
      return fail("balloon verdict for " + g_.name(v) + " is not the conjunction");
    }
    BalloonWitness fresh = is_balloon(g_, v, w);
    if (fresh.loop != b.loop || fresh.balloon != b.balloon) {
      return fail("balloon witness for " + g_.name(v) + " disagrees with the graph");
    }
    return {};
  }

  VerificationResult check_theorem_two(const SimplicityVerdict& v,
                                       const VertexSet& comp) const {
    if (v.identity_membership) {
      return fail("theorem-two verdict carries an identity certificate");
    }
    if (v.reason == Reason::no_unique_minimal) {
      if (v.w || !v.balloons.empty() || !v.memberships.empty()) {
        return fail("no-unique-minimal verdict carries W");
      }
      return check_minimal_sets(v, comp);
    }
    if (!v.minimal_sets.empty()) {
      return fail("unexpected minimal set list");
    }
    if (!v.w) {
      return fail("missing W");
    }
    const VertexSet& w = *v.w;
    if (auto r = check_unique_minimal(w, comp); !r) {
      return r;
    }
    const bool induced_simple = w != comp && is_lpa_simple(induced_subgraph(g_, w)).simple;
    if (v.reason == Reason::induced_not_simple) {
      if (induced_simple) {
        return fail("W induces a graph with simple path algebra");
      }
      if (!v.balloons.empty() || !v.memberships.empty()) {
        return fail("induced-not-simple verdict carries balloon data");
      }
      return {};
    }
    if (!induced_simple) {
      return fail("W does not induce a graph with simple path algebra");
    }

    std::vector<VertexId> outside;
    for (auto x : comp.members()) {
      if (!w.contains(x)) {
        outside.push_back(x);
      }
    }
    const bool stops_at_balloon = v.reason == Reason::not_balloon;
    const std::size_t expected_balloons =
        stops_at_balloon ? v.balloons.size() : outside.size();
    if (v.balloons.size() != expected_balloons || v.balloons.empty() ||
        v.balloons.size() > outside.size()) {
      return fail("balloon table does not cover V \\ W");
    }
    for (std::size_t i = 0; i < v.balloons.size(); ++i) {
      const BalloonWitness& b = v.balloons[i];
      if (b.vertex != outside[i]) {
        return fail("balloon table out of order");
      }
      if (auto r = check_balloon(b, w); !r) {
        return r;
      }
      bool last = i + 1 == v.balloons.size();
      if (stops_at_balloon && last) {
        if (b.balloon || *v.reason_vertex != b.vertex) {
          return fail("not-balloon witness is a balloon");
        }
      } else if (!b.balloon) {
        return fail(g_.name(b.vertex) + " is not a balloon");
      }
    }
    if (stops_at_balloon) {
      if (!v.memberships.empty()) {
        return fail("memberships listed after a failed balloon");
      }
      return {};
    }

    const bool stops_at_membership = v.reason == Reason::membership_fails;
    if (!stops_at_membership && v.reason != Reason::none) {
      return fail("reason " + to_string(v.reason) + " does not fit theorem-two data");
    }
    if (v.memberships.empty() ||
        (!stops_at_membership && v.memberships.size() != outside.size()) ||
        v.memberships.size() > outside.size()) {
      return fail("membership table does not cover V \\ W");
    }
    for (std::size_t i = 0; i < v.memberships.size(); ++i) {
      const auto& m = v.memberships[i];
      if (m.vertex != outside[i]) {
        return fail("membership table out of order");
      }
      VertexVector target(f_, g_.vertex_count());
      for (auto e : g_.out_edges(m.vertex)) {
        if (w.contains(g_.range(e))) {
          target.add(index(g_.range(e)), Scalar::one(f_));
        }
      }
      if (!(m.certificate.target == target)) {
        return fail("membership target for " + g_.name(m.vertex) + " is wrong");
      }
      if (auto r = check_basis(m.certificate, w); !r) {
        return r;
      }
      bool last = i + 1 == v.memberships.size();
      bool expect_in = !(stops_at_membership && last);
      if (stops_at_membership && last && *v.reason_vertex != m.vertex) {
        return fail("membership-fails names the wrong vertex");
      }
      if (auto r = check_solution(m.certificate, expect_in); !r) {
        return r;
      }
    }
    return {};
  }

  const Graph& g_;
  FieldSpec f_;
};

}  // namespace

VerificationResult verify_certificate(const Graph& g, FieldSpec f,
                                      const SimplicityVerdict& verdict) {
  return Verifier(g, f).run(verdict);
}

}  // namespace lpa
