#pragma once

// Cask types from difference-tuple signs and from geometry, the Equatorial
// Belt, and the eight quasi-Euclidean classes as orbits of ±Σ3 on sign tuples.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/nimatrix.hpp"
#include "alcove/polytope.hpp"

namespace alcove {

/// Entries are -1 or +1. Ordered lexicographically with - before +.
struct SignTuple {
  std::array<int, 6> s{};

  bool is_constant() const;
  std::string to_string() const;  // "(-,-,+,-,-,+)"
  friend auto operator<=>(const SignTuple&, const SignTuple&) = default;
};

/// d has a zero entry: the input is not a maximal dodecahedron.
class ZeroComponentError : public std::domain_error {
 public:
  explicit ZeroComponentError(int index);
  int index() const { return index_; }  // 1-based

 private:
  int index_;
};

class ConstantTupleError : public std::domain_error {
 public:
  ConstantTupleError() : std::domain_error("constant sign tuple cannot come from a difference tuple") {}
};

/// A minor a_{i,4;i-1,i+1} vanishes.
class ZeroMinorError : public std::domain_error {
 public:
  explicit ZeroMinorError(int i);
  int index() const { return index_; }  // 1-based

 private:
  int index_;
};

class NonMaximalError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws ZeroComponentError.
SignTuple sign_tuple(const DifferenceTuple& d);

enum class Chirality { Left, Right, Implied };

struct CaskType {
  std::array<int, 3> gons{5, 5, 5};
  Chirality chirality = Chirality::Implied;

  std::string to_string() const;  // "(4.5.6)", "(5.5.5) right"
  friend bool operator==(const CaskType&, const CaskType&) = default;
};

/// Validates gons (a permutation of 4,5,6 or 5,5,5) against the chirality
/// rule. Throws std::invalid_argument.
CaskType make_cask_type(std::array<int, 3> gons, Chirality c = Chirality::Implied);

CaskType flip_chirality(CaskType t);

/// Edge-lengths of the North Cask; absent entries are NEG_INF.
struct CaskAnalysis {
  std::array<TropScalar, 3> rho;
  std::array<TropScalar, 3> lambda;
  std::array<TropScalar, 3> delta;
  std::array<TropScalar, 3> epsilon;
};

/// Throws ZeroMinorError if some a_{i,4;i-1,i+1} = 0.
CaskAnalysis north_cask_analysis(const ViMatrix& a);

/// North Cask type read off the analysis: a facet meets both a rho and a
/// lambda edge iff it is the hexagon.
CaskType cask_type(const CaskAnalysis& c);

/// Lookup of sign(d2,d4,d6).
CaskType north_cask_type(const SignTuple& s);
CaskType north_cask_type(const DifferenceTuple& d);

/// The same lookup on -sign(d5,d3,d1), then slots 2 and 3 exchanged and the
/// chirality word flipped (the effect of the polar exchange +(23)).
CaskType south_cask_type(const SignTuple& s);
CaskType south_cask_type(const DifferenceTuple& d);

class XSequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One row of the table of shortened South sequences, with the chirality word as the table names it.
struct XRow {
  std::vector<std::string> sequence;
  CaskType type;
  int inversions;
};

const std::array<XRow, 8>& x_table();

/// Matches a cyclic shortened sequence (six labels i4 / 4i) against the table,
/// up to rotation. Throws XSequenceError.
const XRow& lookup_x_sequence(const std::vector<std::string>& shortened);

struct SouthGeometry {
  std::vector<std::string> boundary;   // nine labels, clockwise seen from outside
  std::vector<std::string> shortened;  // pair labels only
  std::array<bool, 3> inverted{};      // 4i precedes i4
  const XRow* row = nullptr;
  /// Gon-counts of the facets x_i = a_i4; the chirality word is the table's,
  /// flipped to the naming used by south_cask_type.
  CaskType type;
};

/// Throws NonMaximalError, or XSequenceError if the read-off does not match
/// the facet gon-counts.
SouthGeometry south_cask_from_geometry(const AlcovedPolytope& p);

/// North type from the facets x_i = -a_4i. For (5.5.5) the chirality comes from
/// the South Cask of the polar exchange +(23)·A, whose word is the opposite.
CaskType north_cask_from_geometry(const AlcovedPolytope& p, const NiMatrix& a);

/// Throws NonMaximalError.
std::array<int, 6> belt(const AlcovedPolytope& p);

struct QeClass {
  int index = 0;  // 1..8
  std::vector<SignTuple> orbit;  // sorted
  SignTuple representative;      // smallest member
};

/// The eight orbits, ordered by index. Computed once.
const std::vector<QeClass>& compute_orbits();

/// The sign tuples of the eight worked examples; they name the classes.
const std::array<SignTuple, 8>& example_sign_tuples();

/// Throws ConstantTupleError.
const QeClass& qe_class(const SignTuple& s);
/// Throws ZeroComponentError.
const QeClass& qe_class(const DifferenceTuple& d);

int combinatorial_class(const QeClass& q);

std::string to_string(Chirality c);

}  // namespace alcove
