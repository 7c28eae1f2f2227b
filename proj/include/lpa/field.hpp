#pragma once

// Exact scalars over Q and F_p, dense vertex vectors, and row reduction.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lpa {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Either the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
  /// Throws FieldError unless p is prime.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "q" or "f<p>", e.g. "f2", "f101".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return modulus_; }
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  Kind kind_;
  std::uint64_t modulus_;
};

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator, residues in [0, p).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rational()) {}
  explicit Scalar(FieldSpec field) : field_(field) {}

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return from_integer(f, 1); }
  static Scalar from_integer(FieldSpec f, long long n);
  static Scalar from_integer(FieldSpec f, const mpz_class& n);
  static Scalar from_rational(FieldSpec f, const mpq_class& q);
  /// Parses "n", "-n" or "n/d" and maps it into f.
  static Scalar parse(FieldSpec f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Throws FieldError on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  /// Equality across different fields is false, never an error.
  bool operator==(const Scalar& o) const;

  /// Negative rationals render with a leading '-'; residues as their
  /// representative in [0, p).
  std::string to_string() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  void require_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

/// Linear combination of the vertices of a fixed graph, stored densely in
/// vertex declaration order.
class VertexVector {
 public:
  VertexVector() : VertexVector(FieldSpec::rational(), 0) {}
  VertexVector(FieldSpec field, std::size_t dimension);

  const FieldSpec& field() const { return field_; }
  std::size_t dimension() const { return coords_.size(); }

  const Scalar& operator[](std::size_t i) const { return coords_.at(i); }
  void set(std::size_t i, Scalar value);
  void add(std::size_t i, const Scalar& value);

  bool is_zero() const;
  /// Indices with nonzero coefficient, ascending.
  std::vector<std::size_t> support() const;

  VertexVector operator+(const VertexVector& o) const;
  VertexVector operator-(const VertexVector& o) const;
  VertexVector scaled(const Scalar& c) const;

  bool operator==(const VertexVector& o) const;

 private:
  void require_compatible(const VertexVector& o) const;

  FieldSpec field_;
  std::vector<Scalar> coords_;
};

/// Result of solving sum_i c_i basis_i = target.
struct SpanSolution {
  /// Present exactly when the target lies in the span.
  std::optional<std::vector<Scalar>> coefficients;
  std::size_t basis_rank = 0;
  std::size_t augmented_rank = 0;

  bool in_span() const { return coefficients.has_value(); }
};

/// Gauss-Jordan elimination with leftmost pivots; columns are the basis
/// vectors in order, rows are coordinates in declaration order. Free
/// variables are set to zero. Coefficients are re-substituted before being
/// returned. Throws FieldError on dimension or field mismatch.
SpanSolution solve_in_span(const std::vector<VertexVector>& basis,
                           const VertexVector& target);

std::size_t rank(const std::vector<VertexVector>& vectors);

/// Reduced row echelon basis of span(vectors), pivots taken in coordinate
/// order. Zero rows are dropped.
std::vector<VertexVector> row_reduced_basis(
    const std::vector<VertexVector>& vectors);

/// sum_i coefficients_i * basis_i.
VertexVector linear_combination(const std::vector<VertexVector>& basis,
                                const std::vector<Scalar>& coefficients,
                                FieldSpec field, std::size_t dimension);

/// Incremental row echelon form over sparse vectors keyed by an ordered
/// column type. Each stored row has leading coefficient one at its pivot,
/// which is its least key.
template <class Key>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Scalar>;

  /// Returns true when v was independent of the rows so far.
  bool insert(Vector v) {
    erase_zeros(v);
    while (!v.empty()) {
      auto const& [pivot, lead] = *v.begin();
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Scalar inv = lead.inverse();
        for (auto& [k, c] : v) {
          c = c * inv;
        }
        rows_.emplace(pivot, std::move(v));
        return true;
      }
      Scalar factor = lead;
      for (auto const& [k, c] : it->second) {
        auto [pos, inserted] = v.try_emplace(k, Scalar::zero(c.field()));
        pos->second -= factor * c;
        if (pos->second.is_zero()) {
          v.erase(pos);
        }
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }
  /// Rows keyed by pivot.
  const std::map<Key, Vector>& rows() const { return rows_; }

 private:
  static void erase_zeros(Vector& v) {
    std::erase_if(v, [](auto const& kv) { return kv.second.is_zero(); });
  }

  std::map<Key, Vector> rows_;
};

}  // namespace lpa
