#pragma once

// Order-4 normal idempotent (NI) and visualized idempotent (VI) matrices,
// their box/perturbation decomposition, cant and difference tuples, and the
// action of the 12-element group ±Σ3 on matrices and 6-tuples.
//
// Indices are 0-based throughout: entry (i,j) of the code is a_{i+1,j+1}.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/tropcore.hpp"

namespace alcove {

inline constexpr std::size_t kOrder = 4;

struct NiViolation {
  enum class Kind { WrongOrder, NotFinite, NotNormal, NotNonpositive, NotIdempotent };
  Kind kind;
  // 0-based; unused slots are -1.
  int i = -1;
  int j = -1;
  int k = -1;

  std::string describe() const;
};

/// First violated constraint in row-major scan: order, finiteness, zero
/// diagonal, nonpositivity, then a_ik + a_kj <= a_ij over (i,j,k).
std::optional<NiViolation> find_ni_violation(const TropMatrix& a);

class NotNiError : public std::invalid_argument {
 public:
  explicit NotNiError(NiViolation v) : std::invalid_argument(v.describe()), violation_(v) {}
  const NiViolation& violation() const { return violation_; }

 private:
  NiViolation violation_;
};

using Matrix4 = std::array<std::array<Rational, kOrder>, kOrder>;

class NiMatrix {
 public:
  /// Throws NotNiError.
  explicit NiMatrix(const TropMatrix& a);
  explicit NiMatrix(const Matrix4& a) : NiMatrix(to_trop(a)) {}

  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  const Matrix4& entries() const { return a_; }
  TropMatrix trop() const { return to_trop(a_); }
  bool is_visualized() const;
  NiMatrix transpose() const;

  friend bool operator==(const NiMatrix&, const NiMatrix&) = default;

  static TropMatrix to_trop(const Matrix4& a);

 private:
  Matrix4 a_;
};

/// Validates NI. Throws NotNiError naming the first violation.
NiMatrix check_ni(const TropMatrix& a);

class ViMatrix {
 public:
  /// Throws std::invalid_argument if the last row is not zero.
  explicit ViMatrix(const NiMatrix& a);

  const NiMatrix& ni() const { return a_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_(i, j); }

  friend bool operator==(const ViMatrix&, const ViMatrix&) = default;

 private:
  NiMatrix a_;
};

/// Entry (i,j) = a_{4i} + a_ij - a_{4j}.
ViMatrix visualize(const NiMatrix& a);

/// alpha_ij = a_ij - a_nj, any order. Requires finite entries.
TropMatrix geometric_matrix(const TropMatrix& a);
TropMatrix geometric_matrix(const NiMatrix& a);

/// Box with North Pole at the origin and edge lengths |t1|,|t2|,|t3|.
struct BoxMatrix {
  std::array<Rational, 3> t;

  /// Throws std::invalid_argument if some t_k > 0.
  explicit BoxMatrix(std::array<Rational, 3> t_);
  Matrix4 matrix() const;
  friend bool operator==(const BoxMatrix&, const BoxMatrix&) = default;
};

/// E = B - A for a VI matrix A: zero last row, column and diagonal, all
/// entries nonpositive.
struct PerturbationMatrix {
  Matrix4 e;

  /// Throws std::invalid_argument if the shape or sign condition fails.
  explicit PerturbationMatrix(const Matrix4& e_);
  const Rational& operator()(std::size_t i, std::size_t j) const { return e[i][j]; }
  bool is_zero() const;
  friend bool operator==(const PerturbationMatrix&, const PerturbationMatrix&) = default;
};

struct Decomposition {
  BoxMatrix box;
  PerturbationMatrix perturbation;
};

Decomposition decompose(const ViMatrix& a);

/// Classical difference B - E, the inverse of decompose.
Matrix4 recompose(const BoxMatrix& b, const PerturbationMatrix& e);

using Tuple6 = std::array<Rational, 6>;

struct CantTuple {
  Tuple6 c;
  friend bool operator==(const CantTuple&, const CantTuple&) = default;
};

struct DifferenceTuple {
  Tuple6 d;
  friend bool operator==(const DifferenceTuple&, const DifferenceTuple&) = default;
};

/// (e23, e13, e12, e32, e31, e21).
CantTuple cant_tuple(const PerturbationMatrix& e);

/// d_i = c_{i+1} - c_i with c_7 = c_1.
DifferenceTuple difference_tuple(const CantTuple& c);

/// Difference tuple of the perturbation of visualize(a). Cross-checked
/// against difference_tuple_by_minors; a mismatch throws std::logic_error.
DifferenceTuple difference_tuple_of_ni(const NiMatrix& a);

/// d1=-a_{12;34}, d2=-a_{14;23}, d3=-a_{31;24}, d4=-a_{34;12}, d5=-a_{23;14}, d6=-a_{24;31}.
DifferenceTuple difference_tuple_by_minors(const NiMatrix& a);

// ---------------------------------------------------------------------------
// The group ±Σ3 (cube symmetries fixing the Polar Axis).

/// sign * sigma, with sigma a 0-based permutation of {0,1,2}.
/// As a linear map of R^3 it is x -> sign*sgn(sigma) * P_sigma x, so `sign`
/// is +1 exactly for the rotations.
struct GroupElement {
  int sign = 1;
  std::array<int, 3> perm{0, 1, 2};

  static GroupElement identity() { return {}; }
  static GroupElement antipodal() { return {-1, {0, 1, 2}}; }
  /// +(ij) or -(ij) for 1-based i != j in [3].
  static GroupElement transposition(int sign, int i, int j);
  /// Parses "+id", "-id", "+(12)", "-(132)", ...
  static GroupElement parse(const std::string& name);

  int parity() const;  // sgn(sigma)
  bool transposes() const { return sign * parity() < 0; }
  GroupElement inverse() const;

  std::string name() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Direct product law: signs multiply, permutations compose (g1 after g2).
GroupElement operator*(const GroupElement& g1, const GroupElement& g2);

/// All 12 elements, identity first, in a fixed order.
const std::vector<GroupElement>& group_elements();

/// -id·A = A^T, -(ij)·A = ^{(ij)}A, +(ij)·A = ^{(ij)}A^T; in general the
/// permutation conjugation by sigma^{-1}, transposed when transposes().
NiMatrix act_on_matrix(const GroupElement& g, const NiMatrix& a);

/// Signed permutation of 6 positions: (p·v)[perm[i]] = sign * v[i].
struct SignedPerm6 {
  int sign = 1;
  std::array<int, 6> perm{0, 1, 2, 3, 4, 5};

  std::string name() const;  // e.g. "+(14)(25)(36)"
  friend bool operator==(const SignedPerm6&, const SignedPerm6&) = default;
};

/// p1 ∘ p2 (apply p2 first).
SignedPerm6 operator*(const SignedPerm6& p1, const SignedPerm6& p2);

/// Homomorphism generated by
///   -id -> +(14)(25)(36), +(12) -> -(26)(35), +(13) -> -(15)(24), +(23) -> -(13)(46).
SignedPerm6 theta(const GroupElement& g);

/// g·v through theta(g).
template <typename T>
std::array<T, 6> permute_signed(const SignedPerm6& p, const std::array<T, 6>& v) {
  std::array<T, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[p.perm[i]] = p.sign > 0 ? v[i] : -v[i];
  return out;
}

Tuple6 act_on_tuple(const GroupElement& g, const Tuple6& v);

/// The sign-twist automorphism (e, sigma) -> (e*sgn(sigma), sigma). It
/// swaps +(ij) with -(ij) and fixes ±id and the 3-cycles.
GroupElement parity_twist(const GroupElement& g);

/// The signed permutation carrying d(A) to d(g·A):
/// difference_tuple_of_ni(act_on_matrix(g, A)) == permute_signed(matrix_tuple_action(g), d(A)).
/// Equals theta(parity_twist(g)).
SignedPerm6 matrix_tuple_action(const GroupElement& g);

std::string to_string(const Matrix4& m);

}  // namespace alcove
