#pragma once

// The alcoved polyhedron P(A) in R^3 = {x_4 = 0}: halfspaces, exact vertex
// enumeration, edges, facets, combinatorial labels and shape descriptors.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove/nimatrix.hpp"

namespace alcove {

using Point3 = std::array<Rational, 3>;

/// normal · x <= bound, coming from the entry a_{row,col} as
/// x_row - x_col >= a_{row,col} (coordinate 3 is the fixed x_4 = 0).
struct Halfspace {
  std::array<int, 3> normal;
  Rational bound;
  int row;
  int col;

  bool contains(const Point3& x) const;
  bool is_tight(const Point3& x) const;
  /// e.g. "x1 >= -8", "x2 - x3 <= 6".
  std::string describe() const;
};

struct HalfspaceSystem {
  /// Indexed by constraint_index(row, col).
  std::array<Halfspace, 12> constraints;

  const Halfspace& at(int row, int col) const;
  bool contains(const Point3& x) const;
};

/// Position of the constraint for entry (row, col), row != col, in [0, 12).
int constraint_index(int row, int col);

HalfspaceSystem halfspaces(const NiMatrix& a);

struct VertexLabel {
  enum class Kind { Generator, PrincipalTriple, NonPrincipalPair };
  std::string digits;  // 1-based, e.g. "3", "124", "41"
  Kind kind;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct Vertex {
  Point3 point;
  std::vector<int> tight;  // constraint indices
  std::vector<VertexLabel> labels;
  bool has_label(const std::string& digits) const;
};

struct Edge {
  int a;
  int b;
  std::array<Rational, 3> direction;  // point(b) - point(a)
  Rational tropical_length;
  std::vector<int> tight;  // constraints tight along the whole edge
};

struct Facet {
  int constraint;              // defining constraint index
  std::vector<int> cycle;      // counterclockwise seen from outside
  std::size_t gons() const { return cycle.size(); }
};

struct FVector {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t facets = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

class AlcovedPolytope {
 public:
  std::vector<Vertex> vertices;  // lexicographically sorted by point
  std::vector<Edge> edges;
  std::vector<Facet> facets;
  HalfspaceSystem system;

  FVector f_vector() const { return {vertices.size(), edges.size(), facets.size()}; }
  int dimension() const { return dimension_; }

  /// Index of the vertex at `p`, or -1.
  int find_vertex(const Point3& p) const;
  /// Index of the unique vertex carrying `digits`; throws std::out_of_range.
  int vertex_with_label(const std::string& digits) const;
  /// The facet supported by constraint (row, col), if that constraint is facet-defining.
  const Facet* facet_of(int row, int col) const;
  int north_pole() const;
  int south_pole() const;
  std::vector<std::vector<int>> adjacency() const;

 private:
  friend AlcovedPolytope enumerate_vertices(const HalfspaceSystem& h);
  int dimension_ = -1;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact enumeration over all 220 triples of bounding planes. Throws
/// GeometryError if the system is infeasible.
AlcovedPolytope enumerate_vertices(const HalfspaceSystem& h);

/// Attaches generator, principal-triple and pair labels. Throws GeometryError
/// if a principal vertex is missing.
AlcovedPolytope label_vertices(AlcovedPolytope p, const NiMatrix& a);

/// halfspaces + enumerate_vertices + label_vertices.
AlcovedPolytope build_polytope(const NiMatrix& a);

bool is_maximal(const AlcovedPolytope& p);

/// One direction class: u_i (axis), u_i+u_j (pair) or u_1+u_2+u_3 (diagonal);
/// std::nullopt for a direction outside that set.
struct DirectionClass {
  enum class Kind { Axis, Pair, Diagonal };
  Kind kind;
  int missing = -1;  // for Pair: the 0-based coordinate that is zero
  int axis = -1;     // for Axis: the 0-based coordinate that is nonzero
};
std::optional<DirectionClass> classify_direction(const std::array<Rational, 3>& v);

struct ShapeDescriptors {
  FVector f;
  std::array<int, 3> p{};  // (p4, p5, p6)
  std::array<int, 4> h{};  // hexagon families of size 1..4
  std::array<int, 3> t{};  // edges in direction u_{j-1}+u_{j+1}
  std::optional<std::array<int, 6>> belt;  // EB, maximal only
};

ShapeDescriptors descriptors(const AlcovedPolytope& p);

/// Gon-count of the Belt facet cutting the cantable box edge l_j, j in 1..6,
/// which is the facet of the perturbation entry with cant-tuple slot j.
std::array<int, 6> belt_gons(const AlcovedPolytope& p);

/// Tropical length of every edge, in edge order.
std::vector<Rational> edge_lengths(const AlcovedPolytope& p);

/// Smallest j (1-based) with x in R_j; R_4 is the nonpositive orthant.
int region_of(const Point3& x);
bool in_region(const Point3& x, int j);

/// OFF text. Throws GeometryError if the body is not 3-dimensional.
std::string export_mesh(const AlcovedPolytope& p, int precision = 12);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits);

std::string to_string(const Point3& p);

}  // namespace alcove
