#include "alcove/polytope.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace alcove {

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 to_vec(const std::array<int, 3>& n) { return {Rational(n[0]), Rational(n[1]), Rational(n[2])}; }

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Rank of a set of vectors in R^3, exact.
int rank(const std::vector<Vec3>& vs) {
  std::vector<Vec3> nz;
  for (const auto& v : vs)
    if (!is_zero(v)) nz.push_back(v);
  if (nz.empty()) return 0;
  bool two = false;
  for (std::size_t a = 0; a < nz.size(); ++a) {
    for (std::size_t b = a + 1; b < nz.size(); ++b) {
      const Vec3 c = cross(nz[a], nz[b]);
      if (is_zero(c)) continue;
      two = true;
      for (std::size_t k = 0; k < nz.size(); ++k)
        if (dot(c, nz[k]) != 0) return 3;
    }
  }
  return two ? 2 : 1;
}

int affine_rank(const std::vector<Vec3>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vec3> diffs;
  for (const auto& p : pts) diffs.push_back(sub(p, pts.front()));
  return rank(diffs);
}

// Solves the 3x3 system with integer coefficient rows by Cramer's rule.
std::optional<Vec3> solve(const std::array<const Halfspace*, 3>& rows) {
  auto det3 = [](const std::array<Vec3, 3>& m) { return dot(m[0], cross(m[1], m[2])); };
  std::array<Vec3, 3> m{to_vec(rows[0]->normal), to_vec(rows[1]->normal), to_vec(rows[2]->normal)};
  const Rational det = det3(m);
  if (det == 0) return std::nullopt;
  Vec3 x;
  for (int c = 0; c < 3; ++c) {
    std::array<Vec3, 3> mc = m;
    for (int r = 0; r < 3; ++r) mc[r][c] = rows[r]->bound;
    x[c] = det3(mc) / det;
  }
  return x;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string coord_name(int c) { return "x" + std::to_string(c + 1); }

}  // namespace

int constraint_index(int row, int col) {
  if (row == col || row < 0 || col < 0 || row > 3 || col > 3)
    throw std::invalid_argument("constraint index needs distinct entries in [0,4)");
  return row * 3 + (col > row ? col - 1 : col);
}

bool Halfspace::contains(const Point3& x) const { return dot(to_vec(normal), x) <= bound; }
bool Halfspace::is_tight(const Point3& x) const { return dot(to_vec(normal), x) == bound; }

std::string Halfspace::describe() const {
  const Rational a = -bound;  // x_row - x_col >= a
  if (col == 3) return coord_name(row) + " >= " + to_string(a);
  if (row == 3) return coord_name(col) + " <= " + to_string(Rational(-a));
  return coord_name(row) + " - " + coord_name(col) + " >= " + to_string(a);
}

const Halfspace& HalfspaceSystem::at(int row, int col) const {
  return constraints[constraint_index(row, col)];
}

bool HalfspaceSystem::contains(const Point3& x) const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const Halfspace& h) { return h.contains(x); });
}

HalfspaceSystem halfspaces(const NiMatrix& a) {
  HalfspaceSystem h;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      // x_r - x_c >= a_rc  <=>  (e_c - e_r)·x <= -a_rc, with e_3 = 0.
      std::array<int, 3> n{0, 0, 0};
      if (c < 3) n[c] += 1;
      if (r < 3) n[r] -= 1;
      h.constraints[constraint_index(r, c)] = Halfspace{n, Rational(-a(r, c)), r, c};
    }
  }
  return h;
}

bool Vertex::has_label(const std::string& digits) const {
  return std::any_of(labels.begin(), labels.end(),
                     [&](const VertexLabel& l) { return l.digits == digits; });
}

int AlcovedPolytope::find_vertex(const Point3& p) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].point == p) return static_cast<int>(i);
  return -1;
}

int AlcovedPolytope::vertex_with_label(const std::string& digits) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].has_label(digits)) return static_cast<int>(i);
  throw std::out_of_range("no vertex labeled " + digits);
}

const Facet* AlcovedPolytope::facet_of(int row, int col) const {
  const int k = constraint_index(row, col);
  for (const auto& f : facets)
    if (f.constraint == k) return &f;
  return nullptr;
}

int AlcovedPolytope::north_pole() const {
  Point3 top = vertices.front().point;
  for (const auto& v : vertices)
    for (int c = 0; c < 3; ++c) top[c] = std::max(top[c], v.point[c]);
  const int i = find_vertex(top);
  if (i < 0) throw GeometryError("coordinatewise maximum is not a vertex");
  return i;
}

int AlcovedPolytope::south_pole() const {
  Point3 bottom = vertices.front().point;
  for (const auto& v : vertices)
    for (int c = 0; c < 3; ++c) bottom[c] = std::min(bottom[c], v.point[c]);
  const int i = find_vertex(bottom);
  if (i < 0) throw GeometryError("coordinatewise minimum is not a vertex");
  return i;
}

std::vector<std::vector<int>> AlcovedPolytope::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& n : adj) std::sort(n.begin(), n.end());
  return adj;
}

AlcovedPolytope enumerate_vertices(const HalfspaceSystem& h) {
  AlcovedPolytope p;
  p.system = h;
  const auto& cs = h.constraints;

  std::set<Point3> points;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        if (auto x = solve({&cs[a], &cs[b], &cs[c]}); x && h.contains(*x)) points.insert(*x);
  if (points.empty()) throw GeometryError("halfspace system is infeasible");

  for (const auto& x : points) {
    Vertex v{x, {}, {}};
    for (int k = 0; k < 12; ++k)
      if (cs[k].is_tight(x)) v.tight.push_back(k);
    p.vertices.push_back(std::move(v));
  }

  std::vector<Vec3> pts;
  for (const auto& v : p.vertices) pts.push_back(v.point);
  p.dimension_ = affine_rank(pts);

  // Two vertices span an edge iff the constraints tight at both have rank 2;
  // that face is then a segment whose only vertices are the two endpoints.
  for (std::size_t a = 0; a < p.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < p.vertices.size(); ++b) {
      std::vector<int> common = intersect(p.vertices[a].tight, p.vertices[b].tight);
      std::vector<Vec3> normals;
      for (int k : common) normals.push_back(to_vec(cs[k].normal));
      if (rank(normals) != 2) continue;
      Edge e{static_cast<int>(a), static_cast<int>(b),
             sub(p.vertices[b].point, p.vertices[a].point),
             trop_distance(Point(p.vertices[a].point.begin(), p.vertices[a].point.end()),
                           Point(p.vertices[b].point.begin(), p.vertices[b].point.end())),
             std::move(common)};
      p.edges.push_back(std::move(e));
    }
  }

  if (p.dimension_ < 3) return p;

  for (int k = 0; k < 12; ++k) {
    std::vector<int> on;
    std::vector<Vec3> on_pts;
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
      if (std::binary_search(p.vertices[v].tight.begin(), p.vertices[v].tight.end(), k)) {
        on.push_back(static_cast<int>(v));
        on_pts.push_back(p.vertices[v].point);
      }
    }
    if (affine_rank(on_pts) != 2) continue;

    // Walk the boundary of the facet along its edges.
    std::vector<std::vector<int>> nbr(p.vertices.size());
    for (const auto& e : p.edges) {
      if (std::binary_search(e.tight.begin(), e.tight.end(), k)) {
        nbr[e.a].push_back(e.b);
        nbr[e.b].push_back(e.a);
      }
    }
    std::vector<int> cycle{on.front()};
    int prev = -1;
    while (true) {
      const int cur = cycle.back();
      if (nbr[cur].size() != 2) throw GeometryError("facet boundary is not a cycle");
      const int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      if (next == cycle.front()) break;
      prev = cur;
      cycle.push_back(next);
      if (cycle.size() > on.size()) throw GeometryError("facet boundary walk did not close");
    }
    if (cycle.size() != on.size()) throw GeometryError("facet boundary misses vertices");

    // The constraint normal points outward; make the cycle counterclockwise
    // seen from outside.
    const Vec3& v0 = p.vertices[cycle[0]].point;
    const Vec3& v1 = p.vertices[cycle[1]].point;
    const Vec3& v2 = p.vertices[cycle[2]].point;
    if (dot(cross(sub(v1, v0), sub(v2, v1)), to_vec(cs[k].normal)) < 0)
      std::reverse(cycle.begin() + 1, cycle.end());
    p.facets.push_back(Facet{k, std::move(cycle)});
  }
  return p;
}

namespace {

// BFS distances from `source`, never entering vertices flagged in `blocked`.
std::vector<int> distances(const std::vector<std::vector<int>>& adj, int source,
                           const std::vector<bool>& blocked) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : adj[u]) {
      if (dist[w] >= 0 || blocked[w]) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

void add_label(Vertex& v, VertexLabel label) {
  if (!v.has_label(label.digits)) v.labels.push_back(std::move(label));
}

}  // namespace

AlcovedPolytope label_vertices(AlcovedPolytope p, const NiMatrix& a) {
  using Kind = VertexLabel::Kind;
  for (auto& v : p.vertices) v.labels.clear();

  const TropMatrix a0 = geometric_matrix(a);
  const TropMatrix at0 = geometric_matrix(a.trop().transpose());
  std::array<int, 4> generator{};
  for (int j = 0; j < 4; ++j) {
    const Point3 g{a0(0, j).value(), a0(1, j).value(), a0(2, j).value()};
    generator[j] = p.find_vertex(g);
    if (generator[j] < 0) throw GeometryError("generator " + std::to_string(j + 1) + " is not a vertex");
    add_label(p.vertices[generator[j]], {std::to_string(j + 1), Kind::Generator});

    // P(A^T) = -P(A), so the negated columns of (A^T)_0 are vertices of P(A).
    const Point3 t{-at0(0, j).value(), -at0(1, j).value(), -at0(2, j).value()};
    const int idx = p.find_vertex(t);
    if (idx < 0) throw GeometryError("principal vertex for column " + std::to_string(j + 1) + " is missing");
    std::string digits;
    for (int d = 1; d <= 4; ++d)
      if (d != j + 1) digits += static_cast<char>('0' + d);
    add_label(p.vertices[idx], {digits, Kind::PrincipalTriple});
  }

  // Pair labels: ij is the vertex next to generator i on a shortest edge-path
  // to generator j, the path avoiding the other two generators where possible.
  const auto adj = p.adjacency();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const int gi = generator[i];
      const int gj = generator[j];
      std::vector<bool> blocked(p.vertices.size(), false);
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j && generator[k] != gi && generator[k] != gj) blocked[generator[k]] = true;
      std::vector<int> from_j = distances(adj, gj, blocked);
      if (from_j[gi] < 0) from_j = distances(adj, gj, std::vector<bool>(p.vertices.size(), false));
      const int length = from_j[gi];
      if (length < 0) throw GeometryError("polytope edge graph is disconnected");

      // Walk `steps` edges from gi toward gj, smallest index on ties.
      const int steps = length >= 3 ? 1 : length / 2;
      int at = gi;
      for (int s = 0; s < steps; ++s) {
        int best = -1;
        for (int w : adj[at])
          if (from_j[w] == from_j[at] - 1 && (best < 0 || w < best)) best = w;
        at = best;
      }
      add_label(p.vertices[at], {std::to_string(i + 1) + std::to_string(j + 1), Kind::NonPrincipalPair});
    }
  }
  return p;
}

AlcovedPolytope build_polytope(const NiMatrix& a) {
  return label_vertices(enumerate_vertices(halfspaces(a)), a);
}

bool is_maximal(const AlcovedPolytope& p) { return p.f_vector() == FVector{20, 30, 12}; }

std::optional<DirectionClass> classify_direction(const std::array<Rational, 3>& v) {
  int zeros = 0;
  for (const auto& x : v) zeros += x == 0;
  if (zeros == 3) return std::nullopt;
  if (zeros == 2) {
    for (int c = 0; c < 3; ++c)
      if (v[c] != 0) return DirectionClass{DirectionClass::Kind::Axis, -1, c};
  }
  if (zeros == 1) {
    for (int c = 0; c < 3; ++c) {
      if (v[c] != 0) continue;
      const Rational& x = v[(c + 1) % 3];
      const Rational& y = v[(c + 2) % 3];
      if (x == y) return DirectionClass{DirectionClass::Kind::Pair, c, -1};
      return std::nullopt;
    }
  }
  if (v[0] == v[1] && v[1] == v[2]) return DirectionClass{DirectionClass::Kind::Diagonal};
  return std::nullopt;
}

std::array<int, 6> belt_gons(const AlcovedPolytope& p) {
  // Cant-tuple order: e23, e13, e12, e32, e31, e21.
  static constexpr std::array<std::pair<int, int>, 6> kSlots{
      {{1, 2}, {0, 2}, {0, 1}, {2, 1}, {2, 0}, {1, 0}}};
  std::array<int, 6> q{};
  for (int j = 0; j < 6; ++j) {
    const Facet* f = p.facet_of(kSlots[j].first, kSlots[j].second);
    q[j] = f ? static_cast<int>(f->gons()) : 0;
  }
  return q;
}

ShapeDescriptors descriptors(const AlcovedPolytope& p) {
  ShapeDescriptors d;
  d.f = p.f_vector();
  for (const auto& f : p.facets)
    if (f.gons() >= 4 && f.gons() <= 6) ++d.p[f.gons() - 4];

  for (const auto& e : p.edges) {
    auto cls = classify_direction(e.direction);
    if (cls && cls->kind == DirectionClass::Kind::Pair) ++d.t[cls->missing];
  }

  // Hexagon families: connected components of the graph of hexagons that
  // share an edge.
  std::vector<int> hexes;
  for (std::size_t i = 0; i < p.facets.size(); ++i)
    if (p.facets[i].gons() == 6) hexes.push_back(static_cast<int>(i));
  auto share_edge = [&](const Facet& f, const Facet& g) {
    return std::any_of(p.edges.begin(), p.edges.end(), [&](const Edge& e) {
      return std::binary_search(e.tight.begin(), e.tight.end(), f.constraint) &&
             std::binary_search(e.tight.begin(), e.tight.end(), g.constraint);
    });
  };
  std::vector<int> component(hexes.size(), -1);
  std::vector<int> sizes;
  for (std::size_t s = 0; s < hexes.size(); ++s) {
    if (component[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::deque<std::size_t> queue{s};
    component[s] = id;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      ++sizes[id];
      for (std::size_t w = 0; w < hexes.size(); ++w) {
        if (component[w] >= 0 || !share_edge(p.facets[hexes[u]], p.facets[hexes[w]])) continue;
        component[w] = id;
        queue.push_back(w);
      }
    }
  }
  for (int size : sizes) {
    if (size > 4) throw GeometryError("hexagon family larger than 4");
    ++d.h[size - 1];
  }

  if (is_maximal(p)) d.belt = belt_gons(p);
  return d;
}

std::vector<Rational> edge_lengths(const AlcovedPolytope& p) {
  std::vector<Rational> out;
  out.reserve(p.edges.size());
  for (const auto& e : p.edges) out.push_back(e.tropical_length);
  return out;
}

bool in_region(const Point3& x, int j) {
  if (j == 4) return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c <= 0; });
  const Rational& xj = x[j - 1];
  if (xj < 0) return false;
  return std::all_of(x.begin(), x.end(), [&](const Rational& c) { return c <= xj; });
}

int region_of(const Point3& x) {
  for (int j = 1; j <= 4; ++j)
    if (in_region(x, j)) return j;
  throw std::logic_error("regions R_1..R_4 do not cover the point");
}

std::string to_decimal(const Rational& r, int digits) {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  digits = std::clamp(digits, 1, 90);
  const Dec value = Dec(numerator(r)) / Dec(denominator(r));
  std::string s = value.str(digits, std::ios_base::fmtflags(0));
  return s == "-0" ? "0" : s;
}

std::string export_mesh(const AlcovedPolytope& p, int precision) {
  if (p.dimension() != 3) throw GeometryError("mesh export needs a 3-dimensional body");
  std::ostringstream os;
  os << "OFF\n" << p.vertices.size() << ' ' << p.facets.size() << ' ' << p.edges.size() << '\n';
  for (const auto& v : p.vertices)
    os << to_decimal(v.point[0], precision) << ' ' << to_decimal(v.point[1], precision) << ' '
       << to_decimal(v.point[2], precision) << '\n';
  for (const auto& f : p.facets) {
    os << f.cycle.size();
    for (int v : f.cycle) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

std::string to_string(const Point3& p) {
  return "(" + to_string(p[0]) + "," + to_string(p[1]) + "," + to_string(p[2]) + ")";
}

}  // namespace alcove
