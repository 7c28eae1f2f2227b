#include "lpa/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpa/expression.hpp"
#include "lpa/field.hpp"
#include "lpa/graph.hpp"
#include "lpa/leavitt.hpp"
#include "lpa/simplicity.hpp"
#include "lpa/verdict_json.hpp"

namespace lpa {

namespace {

using json = nlohmann::ordered_json;

// Carries an exit status out of a subcommand.
struct CommandFailure {
  int status;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CommandFailure{kExitInvalidRequest, "cannot read " + path};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw CommandFailure{kExitParseError, path + ": " + e.what()};
  } catch (const GraphError& e) {
    throw CommandFailure{kExitParseError, path + ": " + e.what()};
  }
}

FieldSpec load_field(const std::string& text) {
  try {
    return FieldSpec::parse(text);
  } catch (const FieldError& e) {
    throw CommandFailure{kExitInvalidRequest, e.what()};
  }
}

std::string format_vector(const Graph& g, const VertexVector& x) {
  std::string out;
  for (auto i : x.support()) {
    std::string coeff = x[i].to_string();
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) {
      coeff.erase(0, 1);
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") {
      out += coeff + "*";
    }
    out += g.name(VertexId(i));
  }
  return out.empty() ? "0" : out;
}

std::string format_edges(const Graph& g, const std::vector<EdgeId>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i ? "," : "") + g.name(edges[i]);
  }
  return out + "}";
}

void print_membership(std::ostream& os, const Graph& g, const std::string& label,
                      const MembershipCertificate& c) {
  os << label << ": target " << format_vector(g, c.target) << "; basis [";
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    os << (i ? ", " : "") << "b_" << g.name(c.basis_sources[i]) << " = "
       << format_vector(g, c.basis[i]);
  }
  os << "]; ";
  if (c.in_span()) {
    os << "in span, coefficients [";
    auto const& coeffs = *c.solution.coefficients;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      os << (i ? ", " : "") << coeffs[i].to_string();
    }
    os << "]\n";
  } else {
    os << "not in span, ranks " << c.solution.basis_rank << " -> "
       << c.solution.augmented_rank << "\n";
  }
}

void print_text_report(std::ostream& os, const Graph& g, const SimplicityVerdict& v,
                       bool verified, const std::string& verify_failure) {
  auto comps = weak_components(g);
  os << kToolName << " " << kVersion << "\n";
  os << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
     << " edges, " << comps.size() << " components\n";
  for (auto const& c : comps) {
    bool zero = is_points_and_loops(induced_subgraph(g, c));
    os << "  component " << format_vertex_set(g, c) << ": "
       << (zero ? "zero Lie part" : "nonzero Lie part") << "\n";
  }
  os << "field: " << v.field.to_string() << "\n";
  os << "outcome: " << to_string(v.outcome) << "\n";
  os << "case: " << to_string(v.decision_case) << "\n";
  if (v.reason != Reason::none) {
    os << "reason: " << to_string(v.reason);
    if (v.reason_vertex) {
      os << "(" << g.name(*v.reason_vertex) << ")";
    }
    os << "\n";
  }
  if (v.component) {
    os << "component: " << format_vertex_set(g, *v.component) << "\n";
  }
  for (auto const& c : v.nonzero_components) {
    os << "nonzero component: " << format_vertex_set(g, c) << "\n";
  }
  for (auto const& m : v.minimal_sets) {
    os << "minimal hereditary saturated set: " << format_vertex_set(g, m) << "\n";
  }
  if (v.identity_membership) {
    print_membership(os, g, "identity membership", *v.identity_membership);
  }
  if (v.w) {
    os << "W: " << format_vertex_set(g, *v.w) << "\n";
  }
  for (auto const& b : v.balloons) {
    os << "balloon " << g.name(b.vertex) << ": loop "
       << (b.loop ? g.name(*b.loop) : std::string("-")) << ", E(v,W) = "
       << format_edges(g, b.edges_to_w) << ", conditions (i)-(v):";
    for (bool c : b.conditions) {
      os << (c ? " yes" : " no");
    }
    os << (b.balloon ? " -> balloon" : " -> not a balloon") << "\n";
  }
  for (auto const& m : v.memberships) {
    print_membership(os, g, "membership " + g.name(m.vertex), m.certificate);
  }
  os << "certificate: " << (verified ? "verified" : "REJECTED: " + verify_failure)
     << "\n";
}

struct OracleComparison {
  std::vector<VertexVector> closed_form;
  std::vector<VertexVector> oracle;
  bool closed_in_oracle = true;
  bool oracle_in_closed = true;
  bool equal() const { return closed_in_oracle && oracle_in_closed; }
};

OracleComparison compare_with_oracle(const Graph& g, FieldSpec f,
                                     const OracleOptions& options) {
  OracleComparison out;
  out.closed_form = commutator_vertex_basis(g, f).vectors;
  try {
    out.oracle = brute_force_commutator_vertex_span(g, f, options);
  } catch (const WorkLimitExceeded& e) {
    throw CommandFailure{kExitInvalidRequest, e.what()};
  }
  for (auto const& b : out.closed_form) {
    out.closed_in_oracle = out.closed_in_oracle && solve_in_span(out.oracle, b).in_span();
  }
  for (auto const& b : out.oracle) {
    out.oracle_in_closed = out.oracle_in_closed && solve_in_span(out.closed_form, b).in_span();
  }
  return out;
}

json vectors_json(const Graph& g, const std::vector<VertexVector>& vs) {
  json out = json::array();
  for (auto const& v : vs) {
    out.push_back(format_vector(g, v));
  }
  return out;
}

struct AnalyzeOptions {
  std::string path;
  std::string field = "q";
  std::string format = "text";
  std::optional<std::size_t> max_len;
  std::size_t work_limit = OracleOptions{}.work_limit;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
  const Graph g = load_graph(opt.path);
  const FieldSpec f = load_field(opt.field);
  if (g.empty()) {
    throw CommandFailure{kExitInvalidRequest, opt.path + ": graph has no vertices"};
  }
  auto start = std::chrono::steady_clock::now();
  SimplicityVerdict verdict = decide_lie_simple(g, f);
  VerificationResult check = verify_certificate(g, f, verdict);
  std::optional<OracleComparison> oracle;
  if (opt.max_len) {
    oracle = compare_with_oracle(g, f, {*opt.max_len, opt.work_limit});
  }
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start).count();

  if (opt.format == "json") {
    json report = json::object();
    report["tool"] = kToolName;
    report["version"] = kVersion;
    json comps = json::array();
    for (auto const& c : weak_components(g)) {
      json names = json::array();
      for (auto v : c.members()) {
        names.push_back(g.name(v));
      }
      comps.push_back({{"vertices", std::move(names)},
                       {"lie_part", is_points_and_loops(induced_subgraph(g, c))
                                        ? "zero" : "nonzero"}});
    }
    report["graph"] = {{"vertices", g.vertex_count()},
                       {"edges", g.edge_count()},
                       {"components", std::move(comps)}};
    report["verdict"] = verdict_to_json(g, verdict);
    report["certificate_verified"] = check.ok;
    if (oracle) {
      report["oracle"] = {{"max_len", *opt.max_len},
                          {"closed_form", vectors_json(g, oracle->closed_form)},
                          {"oracle", vectors_json(g, oracle->oracle)},
                          {"equal", oracle->equal()}};
    }
    report["timing_ms"] = elapsed;
    out << report.dump(2) << "\n";
  } else {
    print_text_report(out, g, verdict, check.ok, check.failure);
    if (oracle) {
      out << "oracle (max_len " << *opt.max_len << "): "
          << (oracle->equal() ? "spans agree" : "spans DISAGREE") << "\n";
    }
    out << "time: " << elapsed << " ms\n";
  }
  return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& field,
             const std::string& expression, std::ostream& out) {
  const Graph g = load_graph(path);
  const FieldSpec f = load_field(field);
  LeavittAlgebra alg(g, f);
  Element e;
  try {
    e = evaluate_expression(alg, expression);
  } catch (const ExpressionError& ex) {
    throw CommandFailure{kExitParseError, std::string("expression ") + ex.what()};
  }
  auto [s0, s1] = alg.s0_s1_split(e);
  out << alg.render(e) << "\n";
  out << "S0: " << alg.render(s0) << "\n";
  out << "S1: " << alg.render(s1) << "\n";
  for (auto const& [d, part] : alg.degree_components(e)) {
    out << "degree " << d << ": " << alg.render(part) << "\n";
  }
  return kExitOk;
}

int cmd_oracle_compare(const std::string& path, const std::string& field,
                       std::size_t max_len, std::size_t work_limit, std::ostream& out) {
  const Graph g = load_graph(path);
  const FieldSpec f = load_field(field);
  OracleComparison cmp = compare_with_oracle(g, f, {max_len, work_limit});
  out << "closed-form basis:";
  for (auto const& b : cmp.closed_form) {
    out << " [" << format_vector(g, b) << "]";
  }
  out << "\noracle basis (max_len " << max_len << "):";
  for (auto const& b : cmp.oracle) {
    out << " [" << format_vector(g, b) << "]";
  }
  out << "\nclosed-form span inside oracle span: " << (cmp.closed_in_oracle ? "yes" : "no")
      << "\noracle span inside closed-form span: " << (cmp.oracle_in_closed ? "yes" : "no")
      << "\n" << (cmp.equal() ? "spans equal" : "spans differ") << "\n";
  return cmp.equal() ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decides simplicity of the Lie algebra of a Leavitt path algebra", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "decide simplicity and print a certificate");
  analyze_cmd->add_option("file", analyze.path, "graph file")->required();
  analyze_cmd->add_option("--field", analyze.field, "q or f<prime>");
  analyze_cmd->add_option("--format", analyze.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--max-len", analyze.max_len,
                          "also compare against the commutator oracle")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--work-limit", analyze.work_limit, "oracle commutator ceiling");

  std::string eval_path;
  std::string eval_field = "q";
  std::string expression;
  auto* eval_cmd = app.add_subcommand("eval", "normalize an element of L(G)");
  eval_cmd->add_option("file", eval_path, "graph file")->required();
  eval_cmd->add_option("expr", expression, "element expression")->required();
  eval_cmd->add_option("--field", eval_field, "q or f<prime>");

  std::string oracle_path;
  std::string oracle_field = "q";
  std::size_t max_len = 2;
  std::size_t work_limit = OracleOptions{}.work_limit;
  auto* oracle_cmd =
      app.add_subcommand("oracle-compare", "compare closed-form and brute-force spans");
  oracle_cmd->add_option("file", oracle_path, "graph file")->required();
  oracle_cmd->add_option("--field", oracle_field, "q or f<prime>");
  oracle_cmd->add_option("--max-len", max_len, "path length bound")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--work-limit", work_limit, "commutator ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidRequest;
  }

  try {
    if (*analyze_cmd) {
      return cmd_analyze(analyze, out);
    }
    if (*eval_cmd) {
      return cmd_eval(eval_path, eval_field, expression, out);
    }
    return cmd_oracle_compare(oracle_path, oracle_field, max_len, work_limit, out);
  } catch (const CommandFailure& f) {
    err << "error: " << f.message << "\n";
    return f.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidRequest;
  }
}

}  // namespace lpa
