#include "lpa/verdict_json.hpp"

#include <array>
#include <string>

namespace lpa {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<const char*, 5> kConditionNames = {"i", "ii", "iii", "iv", "v"};

json set_to_json(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (auto v : s.members()) {
    out.push_back(g.name(v));
  }
  return out;
}

json optional_set(const Graph& g, const std::optional<VertexSet>& s) {
  return s ? set_to_json(g, *s) : json(nullptr);
}

json vector_to_json(const Graph& g, const VertexVector& x) {
  json out = json::object();
  for (auto i : x.support()) {
    out[g.name(VertexId(i))] = x[i].to_string();
  }
  return out;
}

json membership_to_json(const Graph& g, const MembershipCertificate& c) {
  json out = json::object();
  out["target"] = vector_to_json(g, c.target);
  json basis = json::array();
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    basis.push_back({{"source", g.name(c.basis_sources.at(i))},
                     {"vector", vector_to_json(g, c.basis[i])}});
  }
  out["basis"] = std::move(basis);
  if (c.in_span()) {
    json coeffs = json::array();
    for (auto const& x : *c.solution.coefficients) {
      coeffs.push_back(x.to_string());
    }
    out["coefficients"] = std::move(coeffs);
  } else {
    out["ranks"] = {c.solution.basis_rank, c.solution.augmented_rank};
  }
  return out;
}

std::string reason_text(const Graph& g, const SimplicityVerdict& v) {
  std::string r = to_string(v.reason);
  if (v.reason_vertex) {
    r += "(" + g.name(*v.reason_vertex) + ")";
  }
  return r;
}

// Parsing helpers.

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw VerdictFormatError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_of(const json& j, const char* what) {
  if (!j.is_string()) {
    throw VerdictFormatError(std::string(what) + " must be a string");
  }
  return j.get<std::string>();
}

VertexSet set_from_json(const Graph& g, const json& j) {
  if (!j.is_array()) {
    throw VerdictFormatError("vertex set must be an array of names");
  }
  VertexSet out(g.vertex_count());
  for (auto const& name : j) {
    out.insert(g.vertex(string_of(name, "vertex name")));
  }
  return out;
}

std::optional<VertexSet> optional_set_from_json(const Graph& g, const json& j) {
  if (j.is_null()) {
    return std::nullopt;
  }
  return set_from_json(g, j);
}

VertexVector vector_from_json(const Graph& g, FieldSpec f, const json& j) {
  if (!j.is_object()) {
    throw VerdictFormatError("vector must be an object of name: scalar");
  }
  VertexVector out(f, g.vertex_count());
  for (auto const& [name, value] : j.items()) {
    try {
      out.set(index(g.vertex(name)), Scalar::parse(f, string_of(value, "scalar")));
    } catch (const FieldError& e) {
      throw VerdictFormatError(e.what());
    }
  }
  return out;
}

MembershipCertificate membership_from_json(const Graph& g, FieldSpec f, const json& j) {
  MembershipCertificate c;
  c.target = vector_from_json(g, f, field_of(j, "target"));
  const json& basis = field_of(j, "basis");
  if (!basis.is_array()) {
    throw VerdictFormatError("basis must be an array");
  }
  for (auto const& b : basis) {
    c.basis_sources.push_back(g.vertex(string_of(field_of(b, "source"), "source")));
    c.basis.push_back(vector_from_json(g, f, field_of(b, "vector")));
  }
  if (j.contains("coefficients")) {
    std::vector<Scalar> coeffs;
    for (auto const& x : j.at("coefficients")) {
      try {
        coeffs.push_back(Scalar::parse(f, string_of(x, "coefficient")));
      } catch (const FieldError& e) {
        throw VerdictFormatError(e.what());
      }
    }
    c.solution.coefficients = std::move(coeffs);
    c.solution.basis_rank = rank(c.basis);
    c.solution.augmented_rank = c.solution.basis_rank;
  } else {
    const json& ranks = field_of(j, "ranks");
    if (!ranks.is_array() || ranks.size() != 2 || !ranks[0].is_number_unsigned() ||
        !ranks[1].is_number_unsigned()) {
      throw VerdictFormatError("ranks must be a pair of non-negative integers");
    }
    c.solution.basis_rank = ranks[0].get<std::size_t>();
    c.solution.augmented_rank = ranks[1].get<std::size_t>();
  }
  return c;
}

Outcome outcome_from(const std::string& s) {
  for (auto o : {Outcome::zero_lie, Outcome::simple, Outcome::not_simple}) {
    if (to_string(o) == s) return o;
  }
  throw VerdictFormatError("unknown outcome \"" + s + "\"");
}

DecisionCase case_from(const std::string& s) {
  for (auto c : {DecisionCase::theorem_one, DecisionCase::theorem_two, DecisionCase::none}) {
    if (to_string(c) == s) return c;
  }
  throw VerdictFormatError("unknown case \"" + s + "\"");
}

void reason_from(const Graph& g, const json& j, SimplicityVerdict& v) {
  if (j.is_null()) {
    v.reason = Reason::none;
    return;
  }
  std::string text = string_of(j, "reason");
  std::string head = text;
  if (auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') {
      throw VerdictFormatError("malformed reason \"" + text + "\"");
    }
    head = text.substr(0, open);
    v.reason_vertex = g.vertex(text.substr(open + 1, text.size() - open - 2));
  }
  for (auto r : {Reason::zero_lie, Reason::multiple_nonzero_components,
                 Reason::identity_in_commutators, Reason::no_unique_minimal,
                 Reason::induced_not_simple, Reason::not_balloon,
                 Reason::membership_fails}) {
    if (to_string(r) == head) {
      v.reason = r;
      return;
    }
  }
  throw VerdictFormatError("unknown reason \"" + text + "\"");
}

}  // namespace

json verdict_to_json(const Graph& g, const SimplicityVerdict& v) {
  json out = json::object();
  out["outcome"] = to_string(v.outcome);
  out["case"] = to_string(v.decision_case);
  out["field"] = v.field.to_string();
  out["component"] = optional_set(g, v.component);
  out["W"] = optional_set(g, v.w);

  json balloons = json::array();
  for (auto const& b : v.balloons) {
    json conditions = json::object();
    for (std::size_t i = 0; i < 5; ++i) {
      conditions[kConditionNames[i]] = b.conditions[i];
    }
    json edges = json::array();
    for (auto e : b.edges_to_w) {
      edges.push_back(g.name(e));
    }
    balloons.push_back({{"v", g.name(b.vertex)},
                        {"loop", b.loop ? json(g.name(*b.loop)) : json(nullptr)},
                        {"edges_to_W", std::move(edges)},
                        {"conditions", std::move(conditions)},
                        {"balloon", b.balloon}});
  }
  out["balloons"] = std::move(balloons);

  json memberships = json::array();
  for (auto const& m : v.memberships) {
    json entry = {{"v", g.name(m.vertex)}};
    entry.update(membership_to_json(g, m.certificate));
    memberships.push_back(std::move(entry));
  }
  out["memberships"] = std::move(memberships);
  out["identity_membership"] = v.identity_membership
                                    ? membership_to_json(g, *v.identity_membership)
                                    : json(nullptr);
  out["reason"] = v.reason == Reason::none ? json(nullptr) : json(reason_text(g, v));

  json comps = json::array();
  for (auto const& c : v.nonzero_components) {
    comps.push_back(set_to_json(g, c));
  }
  out["nonzero_components"] = std::move(comps);
  json minimal = json::array();
  for (auto const& m : v.minimal_sets) {
    minimal.push_back(set_to_json(g, m));
  }
  out["minimal_sets"] = std::move(minimal);
  return out;
}

SimplicityVerdict verdict_from_json(const Graph& g, const json& j) {
  SimplicityVerdict v;
  v.outcome = outcome_from(string_of(field_of(j, "outcome"), "outcome"));
  v.decision_case = case_from(string_of(field_of(j, "case"), "case"));
  try {
    v.field = FieldSpec::parse(string_of(field_of(j, "field"), "field"));
  } catch (const FieldError& e) {
    throw VerdictFormatError(e.what());
  }
  v.component = optional_set_from_json(g, field_of(j, "component"));
  v.w = optional_set_from_json(g, field_of(j, "W"));

  for (auto const& b : field_of(j, "balloons")) {
    BalloonWitness w;
    w.vertex = g.vertex(string_of(field_of(b, "v"), "v"));
    const json& loop = field_of(b, "loop");
    if (!loop.is_null()) {
      w.loop = g.edge(string_of(loop, "loop"));
    }
    for (auto const& e : field_of(b, "edges_to_W")) {
      w.edges_to_w.push_back(g.edge(string_of(e, "edge name")));
    }
    const json& conditions = field_of(b, "conditions");
    for (std::size_t i = 0; i < 5; ++i) {
      const json& flag = field_of(conditions, kConditionNames[i]);
      if (!flag.is_boolean()) {
        throw VerdictFormatError("balloon conditions must be booleans");
      }
      w.conditions[i] = flag.get<bool>();
    }
    const json& overall = field_of(b, "balloon");
    if (!overall.is_boolean()) {
      throw VerdictFormatError("balloon flag must be a boolean");
    }
    w.balloon = overall.get<bool>();
    v.balloons.push_back(std::move(w));
  }

  for (auto const& m : field_of(j, "memberships")) {
    v.memberships.push_back({g.vertex(string_of(field_of(m, "v"), "v")),
                             membership_from_json(g, v.field, m)});
  }
  const json& identity = field_of(j, "identity_membership");
  if (!identity.is_null()) {
    v.identity_membership = membership_from_json(g, v.field, identity);
  }
  reason_from(g, field_of(j, "reason"), v);
  if (j.contains("nonzero_components")) {
    for (auto const& c : j.at("nonzero_components")) {
      v.nonzero_components.push_back(set_from_json(g, c));
    }
  }
  if (j.contains("minimal_sets")) {
    for (auto const& c : j.at("minimal_sets")) {
      v.minimal_sets.push_back(set_from_json(g, c));
    }
  }
  return v;
}

}  // namespace lpa
