#pragma once

// Decides simplicity of the Lie algebra [L(G), L(G)] for a finite graph G
// and produces a certificate that verify_certificate re-checks without
// repeating the search.
//
// A graph whose Leavitt path algebra is simple has a simple Lie algebra iff
// the identity sum_v v is not a combination of the commutator vertex
// vectors. Otherwise the Lie algebra is simple iff the unique minimal
// hereditary saturated set W induces a simple graph, every other vertex is a
// balloon over W, and for each balloon v the vertex sum over E(v,W) lies in
// [L(W), L(W)].

#include <optional>
#include <string>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// b_v = v - sum_{s(e)=v} r(e) for every non-sink v, in declaration order.
/// These span [L,L] n span(V).
struct CommutatorBasis {
  std::vector<VertexId> sources;
  std::vector<VertexVector> vectors;
};

CommutatorBasis commutator_vertex_basis(const Graph& g, FieldSpec f);

struct MembershipCertificate {
  VertexVector target;
  /// One vector per non-sink of the graph the membership is taken in, given
  /// in the coordinates of the analysed graph.
  std::vector<VertexId> basis_sources;
  std::vector<VertexVector> basis;
  SpanSolution solution;

  bool in_span() const { return solution.in_span(); }
};

MembershipCertificate vertex_combo_in_commutators(const Graph& g, FieldSpec f,
                                                  const VertexVector& coeffs);

/// Membership of sum_{e in E(v,W)} r(e), counted with edge multiplicity, in
/// [L(W), L(W)]. Vectors are in the coordinates of g. Throws GraphError when
/// v is not a balloon over w.
MembershipCertificate balloon_sum_condition(const Graph& g, const VertexSet& w,
                                            VertexId v, FieldSpec f);

enum class Outcome { zero_lie, simple, not_simple };
enum class DecisionCase { theorem_one, theorem_two, none };
enum class Reason {
  none,
  zero_lie,
  multiple_nonzero_components,
  identity_in_commutators,
  no_unique_minimal,
  induced_not_simple,
  not_balloon,
  membership_fails,
};

std::string to_string(Outcome o);
std::string to_string(DecisionCase c);
/// Name without the vertex argument, e.g. "membership-fails".
std::string to_string(Reason r);

struct BalloonMembership {
  VertexId vertex{};
  MembershipCertificate certificate;
};

struct SimplicityVerdict {
  Outcome outcome = Outcome::not_simple;
  DecisionCase decision_case = DecisionCase::none;
  FieldSpec field = FieldSpec::rational();
  /// The weak component carrying the whole Lie algebra.
  std::optional<VertexSet> component;
  /// Set for multiple_nonzero_components.
  std::vector<VertexSet> nonzero_components;
  /// Set for no_unique_minimal.
  std::vector<VertexSet> minimal_sets;
  std::optional<VertexSet> w;
  std::vector<BalloonWitness> balloons;
  std::vector<BalloonMembership> memberships;
  std::optional<MembershipCertificate> identity_membership;
  Reason reason = Reason::none;
  /// The vertex named by not_balloon and membership_fails.
  std::optional<VertexId> reason_vertex;

  bool simple() const { return outcome == Outcome::simple; }
};

/// Throws GraphError on an empty graph.
SimplicityVerdict decide_lie_simple(const Graph& g, FieldSpec f);

struct VerificationResult {
  bool ok = true;
  /// First failed check, empty when ok.
  std::string failure;

  explicit operator bool() const { return ok; }
};

/// Re-checks every claim of the verdict on g. Throws GraphError when the
/// certificate names vertices or edges outside g.
VerificationResult verify_certificate(const Graph& g, FieldSpec f,
                                      const SimplicityVerdict& verdict);

}  // namespace lpa
