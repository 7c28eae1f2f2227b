#include "lpa/field.hpp"

#include <algorithm>
#include <charconv>

namespace lpa {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_class mod;
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mod.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                              19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) {
      return n == small;
    }
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) {
      continue;
    }
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) {
      return false;
    }
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw FieldError("field characteristic " + std::to_string(p) +
                     " is not prime");
  }
  if (p >> 63) {
    throw FieldError("field characteristic " + std::to_string(p) +
                     " exceeds 63 bits");
  }
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") {
    return rational();
  }
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint64_t p = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      return prime(p);
    }
  }
  throw FieldError("invalid field \"" + std::string(text) +
                   "\" (expected q or f<prime>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("q") : "f" + std::to_string(modulus_);
}

Scalar Scalar::from_integer(FieldSpec f, long long n) {
  return from_integer(f, mpz_class(static_cast<long>(n)));
}

Scalar Scalar::from_integer(FieldSpec f, const mpz_class& n) {
  Scalar s(f);
  if (f.is_rational()) {
    s.q_ = n;
  } else {
    s.r_ = reduce(n, f.characteristic());
  }
  return s;
}

Scalar Scalar::from_rational(FieldSpec f, const mpq_class& q) {
  if (f.is_rational()) {
    Scalar s(f);
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  Scalar num = from_integer(f, q.get_num());
  Scalar den = from_integer(f, q.get_den());
  if (den.is_zero()) {
    throw FieldError("denominator of " + q.get_str() + " vanishes in " +
                     f.to_string());
  }
  return num / den;
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw FieldError("invalid scalar \"" + s + "\"");
  }
  if (q.get_den() == 0) {
    throw FieldError("zero denominator in \"" + s + "\"");
  }
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.characteristic();
}

void Scalar::require_same(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw FieldError("mixed fields " + field_.to_string() + " and " +
                     o.field_.to_string());
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = q_ + o.q_;
  } else {
    std::uint64_t p = field_.characteristic();
    out.r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % p);
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = q_ * o.q_;
  } else {
    out.r_ = mul_mod(r_, o.r_, field_.characteristic());
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw FieldError("inversion of zero in " + field_.to_string());
  }
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    std::uint64_t p = field_.characteristic();
    out.r_ = pow_mod(r_, p - 2, p);
  }
  return out;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    return false;
  }
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

VertexVector::VertexVector(FieldSpec field, std::size_t dimension)
    : field_(field), coords_(dimension, Scalar::zero(field)) {}

void VertexVector::set(std::size_t i, Scalar value) {
  if (!(value.field() == field_)) {
    throw FieldError("vector over " + field_.to_string() +
                     " given scalar over " + value.field().to_string());
  }
  coords_.at(i) = std::move(value);
}

void VertexVector::add(std::size_t i, const Scalar& value) {
  coords_.at(i) += value;
}

bool VertexVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::size_t> VertexVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) {
      out.push_back(i);
    }
  }
  return out;
}

void VertexVector::require_compatible(const VertexVector& o) const {
  if (!(field_ == o.field_)) {
    throw FieldError("mixed fields " + field_.to_string() + " and " +
                     o.field_.to_string());
  }
  if (coords_.size() != o.coords_.size()) {
    throw FieldError("dimension mismatch: " + std::to_string(coords_.size()) +
                     " vs " + std::to_string(o.coords_.size()));
  }
}

VertexVector VertexVector::operator+(const VertexVector& o) const {
  require_compatible(o);
  VertexVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] += o.coords_[i];
  }
  return out;
}

VertexVector VertexVector::operator-(const VertexVector& o) const {
  return *this + o.scaled(Scalar::from_integer(field_, -1));
}

VertexVector VertexVector::scaled(const Scalar& c) const {
  VertexVector out = *this;
  for (auto& x : out.coords_) {
    x *= c;
  }
  return out;
}

bool VertexVector::operator==(const VertexVector& o) const {
  return field_ == o.field_ && coords_ == o.coords_;
}

namespace {

struct Elimination {
  // rows x cols, row-major
  std::vector<std::vector<Scalar>> m;
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan on m in place; pivots chosen left to right, topmost nonzero
// row wins.
Elimination eliminate(std::vector<std::vector<Scalar>> m, std::size_t cols) {
  Elimination e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) {
      ++sel;
    }
    if (sel == m.size()) {
      continue;
    }
    std::swap(m[row], m[sel]);
    Scalar inv = m[row][col].inverse();
    for (auto& x : m[row]) {
      x *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) {
        continue;
      }
      Scalar factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) {
        m[r][c] -= factor * m[row][c];
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

void check_vectors(const std::vector<VertexVector>& vs, FieldSpec f,
                   std::size_t dim) {
  for (auto const& v : vs) {
    if (!(v.field() == f)) {
      throw FieldError("mixed fields " + f.to_string() + " and " +
                       v.field().to_string());
    }
    if (v.dimension() != dim) {
      throw FieldError("dimension mismatch: " + std::to_string(dim) + " vs " +
                       std::to_string(v.dimension()));
    }
  }
}

}  // namespace

VertexVector linear_combination(const std::vector<VertexVector>& basis,
                                const std::vector<Scalar>& coefficients,
                                FieldSpec field, std::size_t dimension) {
  if (basis.size() != coefficients.size()) {
    throw FieldError("expected " + std::to_string(basis.size()) +
                     " coefficients, got " +
                     std::to_string(coefficients.size()));
  }
  check_vectors(basis, field, dimension);
  VertexVector out(field, dimension);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out = out + basis[i].scaled(coefficients[i]);
  }
  return out;
}

SpanSolution solve_in_span(const std::vector<VertexVector>& basis,
                           const VertexVector& target) {
  const FieldSpec f = target.field();
  const std::size_t dim = target.dimension();
  check_vectors(basis, f, dim);

  const std::size_t k = basis.size();
  std::vector<std::vector<Scalar>> m(dim, std::vector<Scalar>(k + 1, Scalar::zero(f)));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m[i][j] = basis[j][i];
    }
    m[i][k] = target[i];
  }
  Elimination e = eliminate(std::move(m), k + 1);

  SpanSolution out;
  out.augmented_rank = e.pivot_cols.size();
  bool target_pivot = !e.pivot_cols.empty() && e.pivot_cols.back() == k;
  out.basis_rank = out.augmented_rank - (target_pivot ? 1 : 0);
  if (target_pivot) {
    return out;
  }
  std::vector<Scalar> coeffs(k, Scalar::zero(f));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    coeffs[e.pivot_cols[r]] = e.m[r][k];
  }
  if (!(linear_combination(basis, coeffs, f, dim) == target)) {
    throw std::logic_error("solve_in_span: re-substitution failed");
  }
  out.coefficients = std::move(coeffs);
  return out;
}

std::size_t rank(const std::vector<VertexVector>& vectors) {
  if (vectors.empty()) {
    return 0;
  }
  const FieldSpec f = vectors.front().field();
  const std::size_t dim = vectors.front().dimension();
  check_vectors(vectors, f, dim);
  std::vector<std::vector<Scalar>> m;
  for (auto const& v : vectors) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < dim; ++i) {
      row.push_back(v[i]);
    }
    m.push_back(std::move(row));
  }
  return eliminate(std::move(m), dim).pivot_cols.size();
}

std::vector<VertexVector> row_reduced_basis(
    const std::vector<VertexVector>& vectors) {
  if (vectors.empty()) {
    return {};
  }
  const FieldSpec f = vectors.front().field();
  const std::size_t dim = vectors.front().dimension();
  check_vectors(vectors, f, dim);
  std::vector<std::vector<Scalar>> m;
  for (auto const& v : vectors) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < dim; ++i) {
      row.push_back(v[i]);
    }
    m.push_back(std::move(row));
  }
  Elimination e = eliminate(std::move(m), dim);
  std::vector<VertexVector> out;
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    VertexVector v(f, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      v.set(i, e.m[r][i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lpa
