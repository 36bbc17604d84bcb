#include <doctest.h>

#include <map>
#include <set>

#include "alcove/polytope.hpp"
#include "fixtures.hpp"

using namespace alcove;
using fixtures::examples;

namespace {

using Vec = std::array<Rational, 3>;

Vec sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Rational dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::set<Point3> points(const AlcovedPolytope& p) {
  std::set<Point3> s;
  for (const auto& v : p.vertices) s.insert(v.point);
  return s;
}

// The union of the facets through vertex `pole`: its f-vector and boundary ring.
struct Cask {
  FVector f;
  std::vector<int> ring;
};

Cask cask_at(const AlcovedPolytope& p, int pole) {
  std::set<int> verts;
  std::map<std::pair<int, int>, int> edges;
  Cask c;
  for (const auto& f : p.facets) {
    if (std::find(f.cycle.begin(), f.cycle.end(), pole) == f.cycle.end()) continue;
    ++c.f.facets;
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      const int a = f.cycle[k], b = f.cycle[(k + 1) % f.cycle.size()];
      verts.insert(a);
      ++edges[{std::min(a, b), std::max(a, b)}];
    }
  }
  c.f.vertices = verts.size();
  c.f.edges = edges.size();
  std::map<int, std::vector<int>> nbr;
  for (const auto& [e, n] : edges)
    if (n == 1) {
      nbr[e.first].push_back(e.second);
      nbr[e.second].push_back(e.first);
    }
  if (nbr.empty()) return c;
  c.ring.push_back(nbr.begin()->first);
  for (int prev = -1;;) {
    const auto& nx = nbr[c.ring.back()];
    const int n = nx[0] == prev ? nx[1] : nx[0];
    if (n == c.ring.front() || c.ring.size() > nbr.size()) break;
    prev = c.ring.back();
    c.ring.push_back(n);
  }
  return c;
}

bool cyclic_equal(std::vector<std::string> a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

std::string label_of(const Vertex& v) { return v.labels.empty() ? "" : v.labels.front().digits; }

}  // namespace

TEST_CASE("halfspaces of the cube") {
  const HalfspaceSystem h = halfspaces(NiMatrix(fixtures::cube_dq()));
  for (int k = 0; k < 3; ++k) {
    CHECK(h.at(k, 3).describe() == "x" + std::to_string(k + 1) + " >= -2");
    CHECK(h.at(3, k).describe() == "x" + std::to_string(k + 1) + " <= 0");
  }
  CHECK(h.at(0, 1).describe() == "x1 - x2 >= -2");
  CHECK(h.at(1, 0).describe() == "x2 - x1 >= -2");

  const HalfspaceSystem hq = halfspaces(NiMatrix(fixtures::cube_q()));
  for (int k = 0; k < 3; ++k) {
    CHECK(hq.at(k, 3).bound == 1);  // -x_k <= 1
    CHECK(hq.at(3, k).bound == 1);  // x_k <= 1
  }
  CHECK(hq.at(2, 0).bound == 2);
  CHECK(constraint_index(3, 2) == 11);
  CHECK_THROWS_AS(constraint_index(2, 2), std::invalid_argument);
}

TEST_CASE("halfspaces follow x_i - x_j >= a_ij") {
  const NiMatrix a = examples()[6];
  const HalfspaceSystem h = halfspaces(a);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      const Halfspace& s = h.at(r, c);
      Point3 x{0, 0, 0};
      // A point on the plane x_r - x_c = a_rc, with x_4 = 0.
      if (c == 3) x[r] = a(r, c);
      else if (r == 3) x[c] = -a(r, c);
      else x[r] = a(r, c);
      CHECK(s.is_tight(x));
    }
}

TEST_CASE("box faces are axis parallel") {
  const BoxMatrix b({-3, -1, -2});
  const AlcovedPolytope p = build_polytope(NiMatrix(b.matrix()));
  CHECK(p.f_vector() == FVector{8, 12, 6});
  for (const auto& f : p.facets) {
    const Halfspace& h = p.system.constraints[f.constraint];
    CHECK((h.row == 3 || h.col == 3));
  }
  for (const auto& v : p.vertices)
    for (int k = 0; k < 3; ++k) CHECK((v.point[k] == 0 || v.point[k] == b.t[k]));
  // The pair labels fall onto principal vertices.
  for (const auto& v : p.vertices) {
    bool principal = false;
    for (const auto& l : v.labels) principal |= l.kind != VertexLabel::Kind::NonPrincipalPair;
    CHECK(principal);
  }
  CHECK(p.vertices[p.vertex_with_label("12")].has_label("124"));
}

TEST_CASE("cube") {
  const AlcovedPolytope p = build_polytope(NiMatrix(fixtures::cube_dq()));
  CHECK(p.f_vector() == FVector{8, 12, 6});
  CHECK(p.dimension() == 3);
  CHECK_FALSE(is_maximal(p));
  const int n = p.vertex_with_label("123");
  CHECK(p.vertices[n].point == Point3{0, 0, 0});
  CHECK(n == p.north_pole());
  CHECK(p.vertex_with_label("4") == p.south_pole());
  for (const auto& len : edge_lengths(p)) CHECK(len == 2);
  const ShapeDescriptors d = descriptors(p);
  CHECK(d.p == std::array<int, 3>{6, 0, 0});
  CHECK_FALSE(d.belt);

  const AlcovedPolytope centered = build_polytope(NiMatrix(fixtures::cube_q()));
  CHECK(centered.vertices[centered.north_pole()].point == Point3{1, 1, 1});
  CHECK(centered.vertices[centered.vertex_with_label("123")].point == Point3{1, 1, 1});
}

TEST_CASE("one cant") {
  const NiMatrix a = fixtures::one_cant(-6, -5, -4, -2);
  const AlcovedPolytope p = build_polytope(a);
  CHECK(p.f_vector().facets == 7);
  CHECK_FALSE(is_maximal(p));
  CHECK(descriptors(p).p == std::array<int, 3>{5, 2, 0});
  int pair_edges = 0;
  for (const auto& e : p.edges) {
    auto c = classify_direction(e.direction);
    REQUIRE(c);
    if (c->kind != DirectionClass::Kind::Pair) continue;
    ++pair_edges;
    CHECK(c->missing == 0);
    CHECK(e.tropical_length == 2);
  }
  CHECK(pair_edges == 2);
  CHECK(p.facet_of(1, 2) != nullptr);
  CHECK(p.facet_of(1, 2)->gons() == 4);
}

TEST_CASE("maximal examples") {
  for (const auto& a : examples()) {
    const AlcovedPolytope p = build_polytope(a);
    CHECK(p.f_vector() == FVector{20, 30, 12});
    CHECK(is_maximal(p));
    std::set<std::string> labels;
    for (const auto& v : p.vertices) {
      CHECK(v.labels.size() == 1);
      labels.insert(label_of(v));
    }
    CHECK(labels.size() == 20);
    CHECK(p.vertices[p.north_pole()].point == Point3{0, 0, 0});
    CHECK(p.vertex_with_label("123") == p.north_pole());
    CHECK(p.vertex_with_label("4") == p.south_pole());
  }
}

TEST_CASE("descriptors of the worked examples") {
  const ShapeDescriptors d3 = descriptors(build_polytope(examples()[2]));
  CHECK(d3.p == std::array<int, 3>{3, 6, 3});
  CHECK(d3.h == std::array<int, 4>{3, 0, 0, 0});
  CHECK(d3.t == std::array<int, 3>{2, 2, 2});
  CHECK(*d3.belt == std::array<int, 6>{5, 4, 5, 5, 6, 5});

  const ShapeDescriptors d7 = descriptors(build_polytope(examples()[6]));
  CHECK(d7.p == std::array<int, 3>{2, 8, 2});
  CHECK(*d7.belt == std::array<int, 6>{4, 5, 5, 5, 5, 6});

  for (const auto& a : examples()) {
    const ShapeDescriptors d = descriptors(build_polytope(a));
    CHECK(d.f.facets == static_cast<std::size_t>(d.p[0] + d.p[1] + d.p[2]));
    CHECK(d.h[0] + 2 * d.h[1] + 3 * d.h[2] + 4 * d.h[3] == d.p[2]);
    CHECK(d.t[0] + d.t[1] + d.t[2] == 6);
  }
}

TEST_CASE("u_i+u_j edges of a maximal example have the lengths |d_i|") {
  for (const auto& a : examples()) {
    const AlcovedPolytope p = build_polytope(a);
    std::vector<Rational> pair_lengths, d_abs;
    for (const auto& e : p.edges) {
      auto c = classify_direction(e.direction);
      if (c && c->kind == DirectionClass::Kind::Pair) pair_lengths.push_back(e.tropical_length);
    }
    for (const auto& x : difference_tuple_of_ni(a).d) d_abs.push_back(abs(x));
    std::sort(pair_lengths.begin(), pair_lengths.end());
    std::sort(d_abs.begin(), d_abs.end());
    CHECK(pair_lengths == d_abs);
  }
}

TEST_CASE("edge lengths against a coordinate oracle") {
  const AlcovedPolytope p = build_polytope(examples()[1]);
  for (const auto& e : p.edges) {
    const Point3& a = p.vertices[e.a].point;
    const Point3& b = p.vertices[e.b].point;
    std::array<Rational, 4> diff{a[0] - b[0], a[1] - b[1], a[2] - b[2], 0};
    CHECK(e.tropical_length == *std::max_element(diff.begin(), diff.end()) -
                                   *std::min_element(diff.begin(), diff.end()));
  }
}

TEST_CASE("North Cask") {
  const std::vector<std::string> expected{"1", "12", "21", "2", "23", "32", "3", "31", "13"};
  for (const auto& a : examples()) {
    const AlcovedPolytope p = build_polytope(a);
    const Cask c = cask_at(p, p.north_pole());
    CHECK(c.f == FVector{10, 12, 3});
    std::vector<std::string> ring;
    for (int v : c.ring) ring.push_back(label_of(p.vertices[v]));
    std::vector<std::string> reversed(ring.rbegin(), ring.rend());
    CHECK((cyclic_equal(ring, expected) || cyclic_equal(reversed, expected)));
  }
}

TEST_CASE("facet cycles are counterclockwise seen from outside") {
  for (const auto& a : examples()) {
    const AlcovedPolytope p = build_polytope(a);
    for (const auto& f : p.facets) {
      const auto& n = p.system.constraints[f.constraint].normal;
      const Vec normal{n[0], n[1], n[2]};
      const std::size_t k = f.cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        const Point3& u = p.vertices[f.cycle[i]].point;
        const Point3& v = p.vertices[f.cycle[(i + 1) % k]].point;
        const Point3& w = p.vertices[f.cycle[(i + 2) % k]].point;
        CHECK(dot(cross(sub(v, u), sub(w, v)), normal) > 0);
      }
    }
  }
}

TEST_CASE("edge directions and facial angles") {
  const std::set<Rational> cos2{0, Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  for (const auto& a : examples()) {
    const AlcovedPolytope p = build_polytope(a);
    for (const auto& e : p.edges) CHECK(classify_direction(e.direction).has_value());
    for (const auto& f : p.facets) {
      const std::size_t k = f.cycle.size();
      for (std::size_t i = 0; i < k; ++i) {
        const Vec u = sub(p.vertices[f.cycle[(i + k - 1) % k]].point, p.vertices[f.cycle[i]].point);
        const Vec w = sub(p.vertices[f.cycle[(i + 1) % k]].point, p.vertices[f.cycle[i]].point);
        const Rational c = dot(u, w) * dot(u, w) / (dot(u, u) * dot(w, w));
        CHECK(cos2.count(c) == 1);
      }
    }
  }
}

TEST_CASE("direction classes") {
  CHECK(classify_direction({0, 3, 0})->axis == 1);
  CHECK(classify_direction({-2, 0, -2})->missing == 1);
  CHECK(classify_direction({5, 5, 5})->kind == DirectionClass::Kind::Diagonal);
  CHECK_FALSE(classify_direction({1, 2, 0}));
  CHECK_FALSE(classify_direction({1, -1, 0}));
  CHECK_FALSE(classify_direction({0, 0, 0}));
}

TEST_CASE("regions") {
  CHECK(region_of({0, 0, 0}) == 1);
  for (int j = 1; j <= 4; ++j) CHECK(in_region({0, 0, 0}, j));
  CHECK(region_of({-1, -2, -3}) == 4);
  CHECK(region_of({-1, 1, -1}) == 2);
  CHECK_FALSE(in_region({-1, -2, -3}, 1));
}

TEST_CASE("generators and their regions") {
  fixtures::RandomNi gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const NiMatrix a = gen.next();
    const AlcovedPolytope p = build_polytope(a);
    const TropMatrix a0 = geometric_matrix(a);
    const TropMatrix t0 = geometric_matrix(a.trop().transpose());
    for (int j = 0; j < 4; ++j) {
      const Point3 g{a0(0, j).value(), a0(1, j).value(), a0(2, j).value()};
      CHECK(p.find_vertex(g) >= 0);
      CHECK(in_region(g, j + 1));
      const Point3 t{-t0(0, j).value(), -t0(1, j).value(), -t0(2, j).value()};
      CHECK(p.find_vertex(t) >= 0);
    }
  }
}

TEST_CASE("degenerate bodies") {
  const NiMatrix zero(TropMatrix(4, TropScalar(0)));
  const AlcovedPolytope point = build_polytope(zero);
  CHECK(point.f_vector() == FVector{1, 0, 0});
  CHECK(point.dimension() == 0);
  CHECK_THROWS_AS(export_mesh(point), GeometryError);

  const NiMatrix flat = fixtures::ni({{0, 0, -2, -2}, {0, 0, -2, -2}, {-2, -2, 0, -2}, {0, 0, 0, 0}});
  const AlcovedPolytope quad = build_polytope(flat);
  CHECK(quad.dimension() == 2);
  CHECK(quad.f_vector() == FVector{4, 4, 0});
  CHECK_THROWS_AS(export_mesh(quad), GeometryError);

  HalfspaceSystem h = halfspaces(NiMatrix(fixtures::cube_dq()));
  h.constraints[constraint_index(0, 3)].bound = -5;  // x1 >= 5 and x1 <= 0
  CHECK_THROWS_AS(enumerate_vertices(h), GeometryError);
}

TEST_CASE("mesh export") {
  const std::string cube = export_mesh(build_polytope(NiMatrix(fixtures::cube_dq())));
  CHECK(cube.rfind("OFF\n8 6 12\n", 0) == 0);
  const std::string qe1 = export_mesh(build_polytope(examples()[0]));
  CHECK(qe1.rfind("OFF\n20 12 30\n", 0) == 0);
  CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal(Rational(-8), 12) == "-8");
  CHECK(to_decimal(Rational(-2, 3), 12) == "-0.666666666667");
}
