#include "alcove/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

bool SignTuple::is_constant() const {
  return std::all_of(s.begin(), s.end(), [&](int x) { return x == s[0]; });
}

std::string SignTuple::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += ',';
    out += s[i] > 0 ? '+' : '-';
  }
  return out + ")";
}

ZeroComponentError::ZeroComponentError(int index)
    : std::domain_error("difference tuple entry d" + std::to_string(index) +
                        " is zero: not a maximal dodecahedron"),
      index_(index) {}

ZeroMinorError::ZeroMinorError(int i)
    : std::domain_error("minor a_{" + std::to_string(i) + ",4;" + std::to_string((i + 1) % 3 + 1) +
                        "," + std::to_string(i % 3 + 1) + "} is zero: not a maximal dodecahedron"),
      index_(i) {}

SignTuple sign_tuple(const DifferenceTuple& d) {
  SignTuple s;
  for (int i = 0; i < 6; ++i) {
    if (d.d[i] == 0) throw ZeroComponentError(i + 1);
    s.s[i] = d.d[i] > 0 ? 1 : -1;
  }
  return s;
}

std::string to_string(Chirality c) {
  switch (c) {
    case Chirality::Left: return "left";
    case Chirality::Right: return "right";
    case Chirality::Implied: return "implied";
  }
  return "";
}

std::string CaskType::to_string() const {
  std::string out = "(" + std::to_string(gons[0]) + "." + std::to_string(gons[1]) + "." +
                    std::to_string(gons[2]) + ")";
  if (chirality != Chirality::Implied) out += " " + alcove::to_string(chirality);
  return out;
}

CaskType make_cask_type(std::array<int, 3> gons, Chirality c) {
  std::array<int, 3> sorted = gons;
  std::sort(sorted.begin(), sorted.end());
  const bool all_five = sorted == std::array<int, 3>{5, 5, 5};
  if (!all_five && sorted != std::array<int, 3>{4, 5, 6})
    throw std::invalid_argument("cask gon-counts must be (5.5.5) or a permutation of (4.5.6)");
  if (all_five == (c == Chirality::Implied))
    throw std::invalid_argument("chirality is explicit exactly for (5.5.5)");
  return CaskType{gons, c};
}

CaskType flip_chirality(CaskType t) {
  if (t.chirality == Chirality::Left) t.chirality = Chirality::Right;
  else if (t.chirality == Chirality::Right) t.chirality = Chirality::Left;
  return t;
}

CaskAnalysis north_cask_analysis(const ViMatrix& v) {
  const TropMatrix a = v.ni().trop();
  CaskAnalysis c;
  for (auto* arr : {&c.rho, &c.lambda, &c.delta, &c.epsilon}) arr->fill(TropScalar::neg_inf());
  for (int i = 0; i < 3; ++i) {
    const int prev = (i + 2) % 3;
    const int next = (i + 1) % 3;
    const Rational m = two_minor(a, i, 3, prev, next);
    if (m == 0) throw ZeroMinorError(i + 1);
    if (m > 0) {
      c.rho[next] = m;
      c.delta[next] = two_minor(a, i, prev, next, prev);
    } else {
      c.lambda[prev] = Rational(-m);
      c.epsilon[prev] = two_minor(a, i, next, prev, next);
    }
  }
  return c;
}

CaskType cask_type(const CaskAnalysis& c) {
  std::array<int, 3> gons{};
  int rights = 0;
  for (int k = 0; k < 3; ++k) {
    const bool r = c.rho[k].is_finite() && c.rho[k].value() > 0;
    const bool l = c.lambda[k].is_finite() && c.lambda[k].value() > 0;
    gons[k] = 4 + r + l;
    rights += r;
  }
  if (gons != std::array<int, 3>{5, 5, 5}) return make_cask_type(gons);
  return make_cask_type(gons, rights == 3 ? Chirality::Right : Chirality::Left);
}

namespace {

int code(int a, int b, int c) { return (a > 0) * 4 + (b > 0) * 2 + (c > 0); }

// Keyed by code() of the sign triple.
const std::map<int, CaskType>& north_table() {
  static const std::map<int, CaskType> table{
      {code(1, 1, 1), {{5, 5, 5}, Chirality::Right}},
      {code(-1, -1, -1), {{5, 5, 5}, Chirality::Left}},
      {code(-1, -1, 1), {{4, 5, 6}}},
      {code(1, -1, -1), {{5, 6, 4}}},
      {code(-1, 1, -1), {{6, 4, 5}}},
      {code(1, -1, 1), {{4, 6, 5}}},
      {code(-1, 1, 1), {{5, 4, 6}}},
      {code(1, 1, -1), {{6, 5, 4}}},
  };
  return table;
}

}  // namespace

CaskType north_cask_type(const SignTuple& s) {
  return north_table().at(code(s.s[1], s.s[3], s.s[5]));
}

CaskType north_cask_type(const DifferenceTuple& d) {
  for (int i : {1, 3, 5})
    if (d.d[i] == 0) throw ZeroComponentError(i + 1);
  SignTuple s;
  for (int i = 0; i < 6; ++i) s.s[i] = d.d[i] > 0 ? 1 : -1;
  return north_cask_type(s);
}

CaskType south_cask_type(const SignTuple& s) {
  CaskType t = north_table().at(code(-s.s[4], -s.s[2], -s.s[0]));
  std::swap(t.gons[1], t.gons[2]);
  return flip_chirality(t);
}

CaskType south_cask_type(const DifferenceTuple& d) {
  for (int i : {0, 2, 4})
    if (d.d[i] == 0) throw ZeroComponentError(i + 1);
  SignTuple s;
  for (int i = 0; i < 6; ++i) s.s[i] = d.d[i] > 0 ? 1 : -1;
  return south_cask_type(s);
}

const std::array<XRow, 8>& x_table() {
  static const std::array<XRow, 8> rows{{
      {{"14", "41", "24", "42", "34", "43"}, {{5, 5, 5}, Chirality::Left}, 0},
      {{"14", "41", "24", "42", "43", "34"}, {{4, 6, 5}}, 1},
      {{"14", "41", "42", "24", "34", "43"}, {{6, 5, 4}}, 1},
      {{"41", "14", "24", "42", "34", "43"}, {{5, 4, 6}}, 1},
      {{"14", "41", "42", "24", "43", "34"}, {{5, 6, 4}}, 2},
      {{"41", "14", "24", "42", "43", "34"}, {{4, 5, 6}}, 2},
      {{"41", "14", "42", "24", "34", "43"}, {{6, 4, 5}}, 2},
      {{"41", "14", "42", "24", "43", "34"}, {{5, 5, 5}, Chirality::Right}, 3},
  }};
  return rows;
}

const XRow& lookup_x_sequence(const std::vector<std::string>& shortened) {
  if (shortened.size() == 6) {
    for (std::size_t shift = 0; shift < 6; ++shift) {
      std::vector<std::string> rotated(shortened.begin() + shift, shortened.end());
      rotated.insert(rotated.end(), shortened.begin(), shortened.begin() + shift);
      for (const auto& row : x_table())
        if (row.sequence == rotated) return row;
    }
  }
  std::string seq;
  for (const auto& l : shortened) seq += (seq.empty() ? "" : ",") + l;
  throw XSequenceError("South sequence " + seq + " is not in the table");
}

SouthGeometry south_cask_from_geometry(const AlcovedPolytope& p) {
  if (!is_maximal(p)) throw NonMaximalError("South Cask read-off needs a maximal dodecahedron");
  const int s = p.south_pole();

  // Boundary of the union of the three facets at S: edges on exactly one of them.
  std::map<std::pair<int, int>, int> count;
  int at_pole = 0;
  for (const auto& f : p.facets) {
    if (std::find(f.cycle.begin(), f.cycle.end(), s) == f.cycle.end()) continue;
    ++at_pole;
    for (std::size_t k = 0; k < f.cycle.size(); ++k) {
      int a = f.cycle[k];
      int b = f.cycle[(k + 1) % f.cycle.size()];
      ++count[{std::min(a, b), std::max(a, b)}];
    }
  }
  if (at_pole != 3) throw XSequenceError("South Pole does not lie on exactly three facets");
  std::map<int, std::vector<int>> nbr;
  for (const auto& [e, n] : count) {
    if (n != 1) continue;
    nbr[e.first].push_back(e.second);
    nbr[e.second].push_back(e.first);
  }
  std::vector<int> ring{nbr.begin()->first};
  for (int prev = -1;;) {
    const auto& next = nbr.at(ring.back());
    if (next.size() != 2) throw XSequenceError("South Cask boundary is not a cycle");
    const int n = next[0] == prev ? next[1] : next[0];
    if (n == ring.front()) break;
    prev = ring.back();
    ring.push_back(n);
  }
  if (ring.size() != 9 || ring.size() != nbr.size())
    throw XSequenceError("South Cask boundary does not have nine vertices");

  // Clockwise seen from outside, where the outward direction at S is -(1,1,1).
  const Point3& sp = p.vertices[s].point;
  Rational winding = 0;
  for (std::size_t k = 0; k < ring.size(); ++k) {
    const Point3& u = p.vertices[ring[k]].point;
    const Point3& w = p.vertices[ring[(k + 1) % ring.size()]].point;
    const std::array<Rational, 3> a{u[0] - sp[0], u[1] - sp[1], u[2] - sp[2]};
    const std::array<Rational, 3> b{w[0] - sp[0], w[1] - sp[1], w[2] - sp[2]};
    winding -= (a[1] * b[2] - a[2] * b[1]) + (a[2] * b[0] - a[0] * b[2]) + (a[0] * b[1] - a[1] * b[0]);
  }
  if (winding > 0) std::reverse(ring.begin() + 1, ring.end());

  // Start the ring at the first of the vertices 14, 41.
  auto group_one = [&](int v) {
    for (const auto& l : p.vertices[v].labels)
      if (l.digits == "14" || l.digits == "41") return true;
    return false;
  };
  for (std::size_t k = 0; k < ring.size(); ++k) {
    if (group_one(ring[k]) && group_one(ring[(k + 1) % ring.size()])) {
      std::rotate(ring.begin(), ring.begin() + k, ring.end());
      break;
    }
  }

  SouthGeometry g;
  for (int v : ring) {
    if (p.vertices[v].labels.size() != 1) throw XSequenceError("South Cask vertex without a unique label");
    const std::string& digits = p.vertices[v].labels.front().digits;
    g.boundary.push_back(digits);
    if (digits.size() == 2) g.shortened.push_back(digits);
  }
  g.row = &lookup_x_sequence(g.shortened);
  for (int i = 0; i < 3; ++i) {
    const std::string forward = std::to_string(i + 1) + "4";
    const std::string backward = "4" + std::to_string(i + 1);
    for (std::size_t k = 0; k < 6; ++k)
      if (g.shortened[k] == backward && g.shortened[(k + 1) % 6] == forward) g.inverted[i] = true;
  }

  std::array<int, 3> gons{};
  for (int i = 0; i < 3; ++i) gons[i] = static_cast<int>(p.facet_of(i, 3)->gons());
  if (gons != g.row->type.gons)
    throw XSequenceError("South sequence row " + g.row->type.to_string() +
                         " disagrees with the facet gon-counts");
  g.type = flip_chirality(g.row->type);
  return g;
}

CaskType north_cask_from_geometry(const AlcovedPolytope& p, const NiMatrix& a) {
  if (!is_maximal(p)) throw NonMaximalError("North Cask read-off needs a maximal dodecahedron");
  std::array<int, 3> gons{};
  for (int i = 0; i < 3; ++i) gons[i] = static_cast<int>(p.facet_of(3, i)->gons());
  if (gons != std::array<int, 3>{5, 5, 5}) return make_cask_type(gons);
  const NiMatrix turned = act_on_matrix(GroupElement::transposition(1, 2, 3), a);
  const SouthGeometry south = south_cask_from_geometry(build_polytope(turned));
  return make_cask_type(gons, flip_chirality(south.type).chirality);
}

std::array<int, 6> belt(const AlcovedPolytope& p) {
  if (!is_maximal(p)) throw NonMaximalError("the Equatorial Belt needs a maximal dodecahedron");
  return belt_gons(p);
}

const std::array<SignTuple, 8>& example_sign_tuples() {
  static const std::array<SignTuple, 8> tuples{{
      {{-1, -1, 1, -1, -1, 1}},
      {{-1, -1, -1, -1, 1, 1}},
      {{1, -1, -1, -1, 1, 1}},
      {{-1, -1, 1, -1, 1, 1}},
      {{1, -1, -1, 1, 1, -1}},
      {{-1, 1, -1, 1, -1, 1}},
      {{-1, -1, -1, -1, -1, 1}},
      {{-1, -1, -1, 1, -1, 1}},
  }};
  return tuples;
}

const std::vector<QeClass>& compute_orbits() {
  static const std::vector<QeClass> orbits = [] {
    std::vector<QeClass> out;
    std::set<SignTuple> seen;
    for (int bits = 0; bits < 64; ++bits) {
      SignTuple t;
      for (int i = 0; i < 6; ++i) t.s[i] = (bits >> (5 - i)) & 1 ? 1 : -1;
      if (t.is_constant() || seen.count(t)) continue;
      std::set<SignTuple> orbit;
      for (const auto& g : group_elements()) orbit.insert(SignTuple{permute_signed(theta(g), t.s)});
      seen.insert(orbit.begin(), orbit.end());
      QeClass q;
      q.orbit.assign(orbit.begin(), orbit.end());
      q.representative = q.orbit.front();
      const auto& ex = example_sign_tuples();
      for (int k = 0; k < 8; ++k) {
        if (!orbit.count(ex[k])) continue;
        if (q.index) throw std::logic_error("two worked examples share an orbit");
        q.index = k + 1;
      }
      if (!q.index) throw std::logic_error("orbit without a worked example");
      out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), [](const QeClass& a, const QeClass& b) { return a.index < b.index; });
    return out;
  }();
  return orbits;
}

const QeClass& qe_class(const SignTuple& s) {
  if (s.is_constant()) throw ConstantTupleError();
  for (const auto& q : compute_orbits())
    if (std::binary_search(q.orbit.begin(), q.orbit.end(), s)) return q;
  throw std::logic_error("sign tuple outside every orbit");
}

const QeClass& qe_class(const DifferenceTuple& d) { return qe_class(sign_tuple(d)); }

int combinatorial_class(const QeClass& q) {
  static constexpr std::array<int, 8> kClass{6, 2, 1, 4, 5, 1, 3, 2};
  if (q.index < 1 || q.index > 8) throw std::invalid_argument("QE index out of range");
  return kClass[q.index - 1];
}

}  // namespace alcove
