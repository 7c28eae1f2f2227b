#include "lpa/leavitt.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace lpa {

namespace {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Path concat(const Path& a, std::span<const EdgeId> tail) {
  Path out = a;
  out.edges.insert(out.edges.end(), tail.begin(), tail.end());
  return out;
}

Path drop_last(const Path& a) {
  Path out = a;
  out.edges.pop_back();
  return out;
}

// Signed representative for display: residues above p/2 print as negatives.
std::pair<bool, std::string> display_coefficient(const Scalar& c) {
  if (c.field().is_rational()) {
    const mpq_class& q = c.rational_value();
    if (sgn(q) < 0) {
      return {true, mpq_class(-q).get_str()};
    }
    return {false, q.get_str()};
  }
  std::uint64_t p = c.field().characteristic();
  std::uint64_t r = c.residue();
  if (p > 2 && r > p / 2) {
    return {true, std::to_string(p - r)};
  }
  return {false, std::to_string(r)};
}

}  // namespace

bool Path::is_prefix_of(const Path& o) const {
  return anchor == o.anchor && edges.size() <= o.edges.size() &&
         std::equal(edges.begin(), edges.end(), o.edges.begin());
}

Monomial Monomial::edge(const Graph& g, EdgeId e) {
  return {{g.source(e), {e}}, {g.range(e), {}}};
}

Monomial Monomial::ghost(const Graph& g, EdgeId e) {
  return {{g.range(e), {}}, {g.source(e), {e}}};
}

bool operator<(const Monomial& a, const Monomial& b) {
  const long da = a.degree();
  const long db = b.degree();
  const std::size_t la = a.p.length();
  const std::size_t lb = b.p.length();
  return std::tie(da, la, a.p.edges, a.q.edges, a.p.anchor, a.q.anchor) <
         std::tie(db, lb, b.p.edges, b.q.edges, b.p.anchor, b.q.anchor);
}

std::optional<Monomial> raw_product(const Monomial& a, const Monomial& b) {
  // (p q*)(u v*): q* u collapses to the remainder of the longer path.
  const Path& q = a.q;
  const Path& u = b.p;
  if (q.is_prefix_of(u)) {
    std::span<const EdgeId> rest(u.edges.begin() + q.length(), u.edges.end());
    return Monomial{concat(a.p, rest), b.q};
  }
  if (u.is_prefix_of(q)) {
    std::span<const EdgeId> rest(q.edges.begin() + u.length(), q.edges.end());
    return Monomial{a.p, concat(b.q, rest)};
  }
  return std::nullopt;
}

NormalFormConfig NormalFormConfig::first_out_edge(const Graph& g) {
  NormalFormConfig cfg;
  for (auto v : g.vertices()) {
    auto out = g.out_edges(v);
    cfg.special_.push_back(out.empty() ? std::nullopt
                                       : std::optional<EdgeId>(out[0]));
  }
  return cfg;
}

NormalFormConfig::NormalFormConfig(const Graph& g,
                                   std::vector<std::optional<EdgeId>> special)
    : special_(std::move(special)) {
  if (special_.size() != g.vertex_count()) {
    throw AlgebraError("special-edge table has " +
                       std::to_string(special_.size()) + " entries for " +
                       std::to_string(g.vertex_count()) + " vertices");
  }
  for (auto v : g.vertices()) {
    auto const& s = special_[index(v)];
    if (g.is_sink(v)) {
      if (s) {
        throw AlgebraError("sink " + g.name(v) + " cannot have a special edge");
      }
      continue;
    }
    if (!s || index(*s) >= g.edge_count() || g.source(*s) != v) {
      throw AlgebraError("vertex " + g.name(v) +
                         " needs a special edge among its out-edges");
    }
  }
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

void Element::require_compatible(const Element& o) const {
  if (!(field_ == o.field_)) {
    throw AlgebraError("elements over different fields");
  }
  if (context_ != o.context_) {
    throw AlgebraError("elements of different algebras");
  }
}

Element Element::operator+(const Element& o) const {
  require_compatible(o);
  Element out = *this;
  for (auto const& [m, c] : o.terms_) {
    out.add_term(m, c);
  }
  return out;
}

Element Element::operator-() const {
  return scaled(Scalar::from_integer(field_, -1));
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
  Element out(field_, context_);
  for (auto const& [m, x] : terms_) {
    out.add_term(m, x * c);
  }
  return out;
}

bool Element::operator==(const Element& o) const {
  return field_ == o.field_ && context_ == o.context_ && terms_ == o.terms_;
}

LeavittAlgebra::LeavittAlgebra(Graph g, FieldSpec field)
    : LeavittAlgebra(g, field, NormalFormConfig::first_out_edge(g)) {}

LeavittAlgebra::LeavittAlgebra(Graph g, FieldSpec field,
                               NormalFormConfig config)
    : graph_(std::move(g)), field_(field), config_(std::move(config)) {
  std::string key = graph_.to_text();
  for (auto v : graph_.vertices()) {
    auto s = config_.special(v);
    key += s ? "special " + graph_.name(*s) + "\n" : "special -\n";
  }
  context_ = fnv1a(key);
}

void LeavittAlgebra::require_context(const Element& a) const {
  if (a.context() != context_ || !(a.field() == field_)) {
    throw AlgebraError("element does not belong to this algebra");
  }
}

bool LeavittAlgebra::is_normal(const Monomial& m) const {
  if (m.p.edges.empty() || m.q.edges.empty()) {
    return true;
  }
  EdgeId f = m.p.edges.back();
  if (f != m.q.edges.back()) {
    return true;
  }
  return config_.special(graph_.source(f)) != f;
}

Element LeavittAlgebra::reduce(Element::Terms raw) const {
  Element out = zero();
  // Each rewrite strictly shortens the one monomial it may leave non-normal.
  while (!raw.empty()) {
    auto node = raw.extract(std::prev(raw.end()));
    const Monomial& m = node.key();
    const Scalar& c = node.mapped();
    if (c.is_zero()) {
      continue;
    }
    if (is_normal(m)) {
      out.add_term(m, c);
      continue;
    }
    EdgeId f = m.p.edges.back();
    Path p0 = drop_last(m.p);
    Path q0 = drop_last(m.q);
    Monomial shorter{p0, q0};
    auto [it, inserted] = raw.try_emplace(shorter, c);
    if (!inserted) {
      it->second += c;
    }
    Scalar neg = -c;
    for (auto e : graph_.out_edges(graph_.source(f))) {
      if (e == f) {
        continue;
      }
      Monomial side{concat(p0, std::span<const EdgeId>(&e, 1)),
                    concat(q0, std::span<const EdgeId>(&e, 1))};
      out.add_term(side, neg);
    }
  }
  return out;
}

Element LeavittAlgebra::scalar(long long n) const {
  return identity().scaled(Scalar::from_integer(field_, n));
}

Element LeavittAlgebra::vertex(VertexId v) const {
  return monomial(Monomial::vertex(v));
}

Element LeavittAlgebra::edge(EdgeId e) const {
  return monomial(Monomial::edge(graph_, e));
}

Element LeavittAlgebra::ghost(EdgeId e) const {
  return monomial(Monomial::ghost(graph_, e));
}

Element LeavittAlgebra::identity() const {
  Element out = zero();
  for (auto v : graph_.vertices()) {
    out.add_term(Monomial::vertex(v), Scalar::one(field_));
  }
  return out;
}

Element LeavittAlgebra::monomial(const Monomial& m, const Scalar& c) const {
  Element::Terms raw;
  raw.emplace(m, c);
  return reduce(std::move(raw));
}

Element LeavittAlgebra::monomial(const Monomial& m) const {
  return monomial(m, Scalar::one(field_));
}

Element LeavittAlgebra::normalize(const std::vector<RawTerm>& raw) const {
  Element::Terms terms;
  for (auto const& t : raw) {
    if (!(t.coefficient.field() == field_)) {
      throw AlgebraError("coefficient over " + t.coefficient.field().to_string() +
                         " in an algebra over " + field_.to_string());
    }
    if (t.word.empty()) {
      throw AlgebraError("empty word");
    }
    std::optional<Monomial> acc;
    bool first = true;
    for (auto const& gen : t.word) {
      Monomial m;
      switch (gen.kind) {
        case Generator::Kind::vertex:
          if (gen.id >= graph_.vertex_count()) {
            throw AlgebraError("unknown vertex id " + std::to_string(gen.id));
          }
          m = Monomial::vertex(VertexId(gen.id));
          break;
        case Generator::Kind::edge:
        case Generator::Kind::ghost:
          if (gen.id >= graph_.edge_count()) {
            throw AlgebraError("unknown edge id " + std::to_string(gen.id));
          }
          m = gen.kind == Generator::Kind::edge
                  ? Monomial::edge(graph_, EdgeId(gen.id))
                  : Monomial::ghost(graph_, EdgeId(gen.id));
          break;
      }
      if (first) {
        acc = m;
        first = false;
      } else if (acc) {
        acc = raw_product(*acc, m);
      }
    }
    if (acc && !t.coefficient.is_zero()) {
      auto [it, inserted] = terms.try_emplace(*acc, t.coefficient);
      if (!inserted) {
        it->second += t.coefficient;
      }
    }
  }
  return reduce(std::move(terms));
}

Element LeavittAlgebra::multiply(const Element& a, const Element& b) const {
  require_context(a);
  require_context(b);
  Element::Terms raw;
  for (auto const& [ma, ca] : a.terms()) {
    for (auto const& [mb, cb] : b.terms()) {
      if (auto m = raw_product(ma, mb)) {
        Scalar c = ca * cb;
        auto [it, inserted] = raw.try_emplace(std::move(*m), c);
        if (!inserted) {
          it->second += c;
        }
      }
    }
  }
  return reduce(std::move(raw));
}

Element LeavittAlgebra::star(const Element& a) const {
  require_context(a);
  Element::Terms raw;
  for (auto const& [m, c] : a.terms()) {
    raw.emplace(Monomial{m.q, m.p}, c);
  }
  return reduce(std::move(raw));
}

Element LeavittAlgebra::commutator(const Element& a, const Element& b) const {
  return multiply(a, b) - multiply(b, a);
}

std::pair<Element, Element> LeavittAlgebra::s0_s1_split(const Element& a) const {
  require_context(a);
  Element s0 = zero();
  Element s1 = zero();
  for (auto const& [m, c] : a.terms()) {
    (m.is_diagonal() ? s0 : s1).add_term(m, c);
  }
  return {s0, s1};
}

std::map<long, Element> LeavittAlgebra::degree_components(const Element& a) const {
  require_context(a);
  std::map<long, Element> out;
  for (auto const& [m, c] : a.terms()) {
    out.try_emplace(m.degree(), zero()).first->second.add_term(m, c);
  }
  return out;
}

VertexVector LeavittAlgebra::vertex_part(const Element& a) const {
  require_context(a);
  VertexVector out(field_, graph_.vertex_count());
  for (auto const& [m, c] : a.terms()) {
    if (m.is_vertex()) {
      out.add(index(m.p.anchor), c);
    }
  }
  return out;
}

std::string LeavittAlgebra::render(const Monomial& m) const {
  if (m.is_vertex()) {
    return graph_.name(m.p.anchor);
  }
  std::string out;
  for (auto e : m.p.edges) {
    if (!out.empty()) {
      out += '.';
    }
    out += graph_.name(e);
  }
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
    if (!out.empty()) {
      out += '.';
    }
    out += graph_.name(*it) + "'";
  }
  return out;
}

std::string LeavittAlgebra::render(const Element& a) const {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto const& [m, c] : a.terms()) {
    auto [negative, magnitude] = display_coefficient(c);
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != "1") {
      out += magnitude + "*";
    }
    out += render(m);
  }
  return out;
}

std::vector<Monomial> LeavittAlgebra::normal_monomials(std::size_t max_len) const {
  // Paths grouped by range vertex.
  std::vector<std::vector<Path>> by_range(graph_.vertex_count());
  std::vector<Path> frontier;
  for (auto v : graph_.vertices()) {
    frontier.push_back(Path{v, {}});
  }
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Path> next;
    for (auto const& p : frontier) {
      by_range[index(p.range(graph_))].push_back(p);
      if (len == max_len) {
        continue;
      }
      for (auto e : graph_.out_edges(p.range(graph_))) {
        next.push_back(concat(p, std::span<const EdgeId>(&e, 1)));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out;
  for (auto const& paths : by_range) {
    for (auto const& p : paths) {
      for (auto const& q : paths) {
        Monomial m{p, q};
        if (is_normal(m)) {
          out.push_back(std::move(m));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t oracle_work(const Graph& g, FieldSpec f, std::size_t max_len) {
  LeavittAlgebra alg(g, f);
  auto monos = alg.normal_monomials(max_len);
  std::map<long, std::size_t> by_degree;
  for (auto const& m : monos) {
    ++by_degree[m.degree()];
  }
  std::size_t work = 0;
  for (auto const& [d, n] : by_degree) {
    if (d == 0) {
      work += n * (n - 1) / 2;
    } else if (d > 0) {
      auto it = by_degree.find(-d);
      if (it != by_degree.end()) {
        work += n * it->second;
      }
    }
  }
  return work;
}

std::vector<VertexVector> brute_force_commutator_vertex_span(
    const Graph& g, FieldSpec f, const OracleOptions& options) {
  if (options.max_len < 1) {
    throw AlgebraError("oracle max_len must be at least 1");
  }
  const std::size_t work = oracle_work(g, f, options.max_len);
  if (work > options.work_limit) {
    throw WorkLimitExceeded(options.work_limit, work);
  }
  LeavittAlgebra alg(g, f);
  const auto monos = alg.normal_monomials(options.max_len);

  // Column keys: (0, interned monomial) ahead of (1, vertex index).
  using Key = std::pair<int, std::size_t>;
  std::map<Monomial, std::size_t> interned;
  auto key_of = [&](const Monomial& m) -> Key {
    if (m.is_vertex()) {
      return {1, index(m.p.anchor)};
    }
    auto [it, inserted] = interned.try_emplace(m, interned.size());
    return {0, it->second};
  };

  SparseEchelon<Key> echelon;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i + 1; j < monos.size(); ++j) {
      if (monos[i].degree() + monos[j].degree() != 0) {
        continue;
      }
      auto ab = raw_product(monos[i], monos[j]);
      auto ba = raw_product(monos[j], monos[i]);
      bool ab_diag = ab && ab->is_diagonal();
      bool ba_diag = ba && ba->is_diagonal();
      if (ab && ba && ab_diag != ba_diag) {
        // Rewriting preserves p = q versus p != q, and monomial products
        // never straddle S0 and S1; skipping pure S1 commutators relies on it.
        throw std::logic_error("commutator of monomials straddles S0 and S1");
      }
      if (!ab_diag && !ba_diag) {
        continue;
      }
      Element c = alg.commutator(alg.monomial(monos[i]), alg.monomial(monos[j]));
      SparseEchelon<Key>::Vector row;
      for (auto const& [m, x] : c.terms()) {
        row.emplace(key_of(m), x);
      }
      echelon.insert(std::move(row));
    }
  }

  std::vector<VertexVector> found;
  for (auto const& [pivot, row] : echelon.rows()) {
    if (pivot.first != 1) {
      continue;
    }
    VertexVector v(f, g.vertex_count());
    for (auto const& [k, x] : row) {
      v.set(k.second, x);
    }
    found.push_back(std::move(v));
  }
  return row_reduced_basis(found);
}

bool bounded_commutators_vanish(const Graph& g, FieldSpec f,
                                const OracleOptions& options) {
  if (options.max_len < 1) {
    throw AlgebraError("oracle max_len must be at least 1");
  }
  LeavittAlgebra alg(g, f);
  const auto monos = alg.normal_monomials(options.max_len);
  const std::size_t work = monos.size() * (monos.size() - (monos.empty() ? 0 : 1)) / 2;
  if (work > options.work_limit) {
    throw WorkLimitExceeded(options.work_limit, work);
  }
  std::vector<Element> elems;
  for (auto const& m : monos) {
    elems.push_back(alg.monomial(m));
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (!alg.commutator(elems[i], elems[j]).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace lpa
