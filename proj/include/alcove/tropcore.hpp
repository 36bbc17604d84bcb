#pragma once

// Exact max-plus scalars and matrices.
//
// Every entry is either an exact rational or the distinguished element
// NEG_INF, the neutral element of tropical addition. Tropical addition is
// max, tropical multiplication is classical +.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& r);

class TropScalar {
 public:
  TropScalar() : value_(Rational(0)) {}
  TropScalar(const Rational& v) : value_(v) {}  // NOLINT(implicit)
  TropScalar(long v) : value_(Rational(v)) {}   // NOLINT(implicit)

  static TropScalar neg_inf() {
    TropScalar s;
    s.value_.reset();
    return s;
  }

  bool is_finite() const { return value_.has_value(); }
  bool is_neg_inf() const { return !value_.has_value(); }

  /// Throws std::domain_error for NEG_INF.
  const Rational& value() const;

  friend bool operator==(const TropScalar& a, const TropScalar& b) {
    return a.value_ == b.value_;
  }
  // NEG_INF is smaller than every rational.
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

 private:
  std::optional<Rational> value_;
};

std::string to_string(const TropScalar& s);

/// max(x, y)
TropScalar trop_add(const TropScalar& x, const TropScalar& y);
/// x + y, NEG_INF absorbing
TropScalar trop_mul(const TropScalar& x, const TropScalar& y);

class TropMatrix {
 public:
  /// Order-n matrix filled with `fill`. Requires n >= 2.
  explicit TropMatrix(std::size_t n, const TropScalar& fill = TropScalar(0));

  /// Builds from a square list of rows. Throws std::invalid_argument if
  /// the rows are ragged or fewer than two.
  static TropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);
  static TropMatrix from_rationals(const std::vector<std::vector<Rational>>& rows);
  /// Tropical identity: 0 on the diagonal, NEG_INF elsewhere.
  static TropMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }

  const TropScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  TropScalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool all_finite() const;
  TropMatrix transpose() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<TropScalar> entries_;
};

std::string to_string(const TropMatrix& m);

/// Entry (i,j) = max_k (a_ik + b_kj).
TropMatrix trop_mul_matrix(const TropMatrix& a, const TropMatrix& b);

/// D ⊙ A ⊙ D^{-1} for D = diag(b): entry (i,j) = b_i + a_ij - b_j.
TropMatrix conjugate(const TropMatrix& a, std::span<const Rational> b);

/// Entry (i,j) = a_{sigma(i) sigma(j)}. `sigma` is a 0-based bijection on [n].
TropMatrix permute_conjugate(const TropMatrix& a, std::span<const int> sigma);

/// A ⊙ A == A.
bool is_idempotent(const TropMatrix& a);

/// Classical 2-minor a_{ij;kl} = a_ik + a_jl - a_il - a_jk (0-based indices).
/// Throws std::domain_error if one of the four entries is NEG_INF.
Rational two_minor(const TropMatrix& a, std::size_t i, std::size_t j, std::size_t k,
                   std::size_t l);

using Point = std::vector<Rational>;

/// dd(p,q) = max_{i,j} { |p_i - q_i|, |p_i - q_i - p_j + q_j| }.
Rational trop_distance(const Point& p, const Point& q);

}  // namespace alcove
