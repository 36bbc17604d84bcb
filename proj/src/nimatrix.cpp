#include "alcove/nimatrix.hpp"

#include <algorithm>
#include <tuple>
#include <deque>
#include <map>
#include <sstream>

namespace alcove {

std::string NiViolation::describe() const {
  auto one = [](int x) { return std::to_string(x + 1); };
  switch (kind) {
    case Kind::WrongOrder:
      return "WrongOrder: expected a 4x4 matrix";
    case Kind::NotFinite:
      return "NotFinite(" + one(i) + "," + one(j) + "): entry is -inf";
    case Kind::NotNormal:
      return "NotNormal(" + one(i) + "): diagonal entry is not 0";
    case Kind::NotNonpositive:
      return "NotNonpositive(" + one(i) + "," + one(j) + "): entry is positive";
    case Kind::NotIdempotent:
      return "NotIdempotent(" + one(i) + "," + one(j) + "," + one(k) + "): a_" + one(i) + one(k) +
             " + a_" + one(k) + one(j) + " > a_" + one(i) + one(j);
  }
  return "unknown violation";
}

std::optional<NiViolation> find_ni_violation(const TropMatrix& a) {
  using K = NiViolation::Kind;
  if (a.order() != kOrder) return NiViolation{K::WrongOrder};
  const int n = static_cast<int>(kOrder);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j).is_neg_inf()) return NiViolation{K::NotFinite, i, j};
  for (int i = 0; i < n; ++i)
    if (a(i, i).value() != 0) return NiViolation{K::NotNormal, i};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j).value() > 0) return NiViolation{K::NotNonpositive, i, j};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a(i, k).value() + a(k, j).value() > a(i, j).value())
          return NiViolation{K::NotIdempotent, i, j, k};
  return std::nullopt;
}

NiMatrix::NiMatrix(const TropMatrix& a) {
  if (auto v = find_ni_violation(a)) throw NotNiError(*v);
  for (std::size_t i = 0; i < kOrder; ++i)
    for (std::size_t j = 0; j < kOrder; ++j) a_[i][j] = a(i, j).value();
}

TropMatrix NiMatrix::to_trop(const Matrix4& a) {
  TropMatrix m(kOrder);
  for (std::size_t i = 0; i < kOrder; ++i)
    for (std::size_t j = 0; j < kOrder; ++j) m(i, j) = TropScalar(a[i][j]);
  return m;
}

bool NiMatrix::is_visualized() const {
  return std::all_of(a_[3].begin(), a_[3].end(), [](const Rational& x) { return x == 0; });
}

NiMatrix NiMatrix::transpose() const { return NiMatrix(trop().transpose()); }

NiMatrix check_ni(const TropMatrix& a) { return NiMatrix(a); }

ViMatrix::ViMatrix(const NiMatrix& a) : a_(a) {
  if (!a.is_visualized()) throw std::invalid_argument("matrix is NI but its last row is not zero");
}

ViMatrix visualize(const NiMatrix& a) {
  const auto& row = a.entries()[3];
  return ViMatrix(NiMatrix(conjugate(a.trop(), row)));
}

TropMatrix geometric_matrix(const TropMatrix& a) {
  if (!a.all_finite()) throw std::domain_error("geometric matrix needs finite entries");
  const std::size_t n = a.order();
  TropMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = TropScalar(a(i, j).value() - a(n - 1, j).value());
  return g;
}

TropMatrix geometric_matrix(const NiMatrix& a) { return geometric_matrix(a.trop()); }

BoxMatrix::BoxMatrix(std::array<Rational, 3> t_) : t(std::move(t_)) {
  for (const auto& x : t)
    if (x > 0) throw std::invalid_argument("box parameters must be nonpositive");
}

Matrix4 BoxMatrix::matrix() const {
  Matrix4 m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < kOrder; ++j) m[i][j] = i == j ? Rational(0) : t[i];
  return m;
}

PerturbationMatrix::PerturbationMatrix(const Matrix4& e_) : e(e_) {
  for (std::size_t i = 0; i < kOrder; ++i) {
    if (e[i][3] != 0 || e[3][i] != 0 || e[i][i] != 0)
      throw std::invalid_argument("perturbation matrix needs zero diagonal, last row and column");
    for (std::size_t j = 0; j < kOrder; ++j)
      if (e[i][j] > 0) throw std::invalid_argument("perturbation entries must be nonpositive");
  }
}

bool PerturbationMatrix::is_zero() const {
  for (const auto& row : e)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

Decomposition decompose(const ViMatrix& a) {
  BoxMatrix box({a(0, 3), a(1, 3), a(2, 3)});
  const Matrix4 b = box.matrix();
  Matrix4 e{};
  for (std::size_t i = 0; i < kOrder; ++i)
    for (std::size_t j = 0; j < kOrder; ++j) e[i][j] = b[i][j] - a(i, j);
  return {box, PerturbationMatrix(e)};
}

Matrix4 recompose(const BoxMatrix& b, const PerturbationMatrix& e) {
  Matrix4 m = b.matrix();
  for (std::size_t i = 0; i < kOrder; ++i)
    for (std::size_t j = 0; j < kOrder; ++j) m[i][j] -= e(i, j);
  return m;
}

CantTuple cant_tuple(const PerturbationMatrix& e) {
  // The crocked closed path through the off-diagonal 3x3 block.
  return {{e(1, 2), e(0, 2), e(0, 1), e(2, 1), e(2, 0), e(1, 0)}};
}

DifferenceTuple difference_tuple(const CantTuple& c) {
  DifferenceTuple d;
  for (std::size_t i = 0; i < 6; ++i) d.d[i] = c.c[(i + 1) % 6] - c.c[i];
  return d;
}

DifferenceTuple difference_tuple_by_minors(const NiMatrix& a) {
  const TropMatrix m = a.trop();
  auto minor = [&](int i, int j, int k, int l) {
    return Rational(-two_minor(m, i - 1, j - 1, k - 1, l - 1));
  };
  return {{minor(1, 2, 3, 4), minor(1, 4, 2, 3), minor(3, 1, 2, 4), minor(3, 4, 1, 2),
           minor(2, 3, 1, 4), minor(2, 4, 3, 1)}};
}

DifferenceTuple difference_tuple_of_ni(const NiMatrix& a) {
  const DifferenceTuple d = difference_tuple(cant_tuple(decompose(visualize(a)).perturbation));
  if (d != difference_tuple_by_minors(a)) {
    throw std::logic_error("difference tuple: decomposition and 2-minor paths disagree");
  }
  return d;
}

// ---------------------------------------------------------------------------

GroupElement GroupElement::transposition(int sign, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > 3 || j > 3) throw std::invalid_argument("bad transposition");
  GroupElement g{sign, {0, 1, 2}};
  std::swap(g.perm[i - 1], g.perm[j - 1]);
  return g;
}

int GroupElement::parity() const {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

GroupElement GroupElement::inverse() const {
  GroupElement g{sign, {}};
  for (int i = 0; i < 3; ++i) g.perm[perm[i]] = i;
  return g;
}

namespace {

// Cycle notation of a 0-based permutation, 1-based digits, fixed points omitted.
template <std::size_t N>
std::string cycles(const std::array<int, N>& p) {
  std::string out;
  std::array<bool, N> seen{};
  for (std::size_t s = 0; s < N; ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += '(';
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      out += static_cast<char>('1' + x);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace

std::string GroupElement::name() const { return (sign > 0 ? "+" : "-") + cycles(perm); }

GroupElement GroupElement::parse(const std::string& name) {
  for (const auto& g : group_elements())
    if (g.name() == name) return g;
  // Accept any rotation of a 3-cycle, e.g. "+(231)".
  if (name.size() == 6 && name[1] == '(' && name[5] == ')') {
    for (const auto& g : group_elements()) {
      const std::string n = g.name();
      if (n.size() != 6 || n[0] != name[0]) continue;
      const std::string body = n.substr(2, 3);
      const std::string want = name.substr(2, 3);
      for (int r = 0; r < 3; ++r)
        if (body.substr(r) + body.substr(0, r) == want) return g;
    }
  }
  throw std::invalid_argument("unknown group element '" + name + "'");
}

GroupElement operator*(const GroupElement& g1, const GroupElement& g2) {
  GroupElement g{g1.sign * g2.sign, {}};
  for (int i = 0; i < 3; ++i) g.perm[i] = g1.perm[g2.perm[i]];
  return g;
}

const std::vector<GroupElement>& group_elements() {
  static const std::vector<GroupElement> all = [] {
    std::vector<GroupElement> v;
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    for (int sign : {1, -1})
      for (const auto& q : perms) v.push_back({sign, q});
    return v;
  }();
  return all;
}

NiMatrix act_on_matrix(const GroupElement& g, const NiMatrix& a) {
  const GroupElement inv = g.inverse();
  const std::array<int, 4> sigma{inv.perm[0], inv.perm[1], inv.perm[2], 3};
  TropMatrix m = permute_conjugate(a.trop(), sigma);
  if (g.transposes()) m = m.transpose();
  return NiMatrix(m);
}

std::string SignedPerm6::name() const { return (sign > 0 ? "+" : "-") + cycles(perm); }

SignedPerm6 operator*(const SignedPerm6& p1, const SignedPerm6& p2) {
  SignedPerm6 p{p1.sign * p2.sign, {}};
  for (int i = 0; i < 6; ++i) p.perm[i] = p1.perm[p2.perm[i]];
  return p;
}

namespace {

SignedPerm6 from_pairs(int sign, std::initializer_list<std::pair<int, int>> swaps) {
  SignedPerm6 p{sign, {0, 1, 2, 3, 4, 5}};
  for (auto [a, b] : swaps) std::swap(p.perm[a - 1], p.perm[b - 1]);
  return p;
}

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return std::tie(a.sign, a.perm) < std::tie(b.sign, b.perm);
  }
};

using ThetaTable = std::map<GroupElement, SignedPerm6, ElementLess>;

// Closes the generator images under composition; any inconsistency means the
// assignment does not extend to a homomorphism.
ThetaTable build_theta() {
  const std::vector<std::pair<GroupElement, SignedPerm6>> generators = {
      {GroupElement::antipodal(), from_pairs(1, {{1, 4}, {2, 5}, {3, 6}})},
      {GroupElement::transposition(1, 1, 2), from_pairs(-1, {{2, 6}, {3, 5}})},
      {GroupElement::transposition(1, 1, 3), from_pairs(-1, {{1, 5}, {2, 4}})},
      {GroupElement::transposition(1, 2, 3), from_pairs(-1, {{1, 3}, {4, 6}})},
  };
  ThetaTable table{{GroupElement::identity(), SignedPerm6{}}};
  std::deque<GroupElement> queue{GroupElement::identity()};
  while (!queue.empty()) {
    const GroupElement h = queue.front();
    queue.pop_front();
    for (const auto& [s, image] : generators) {
      const GroupElement sh = s * h;
      const SignedPerm6 value = image * table.at(h);
      auto [it, inserted] = table.emplace(sh, value);
      if (inserted) {
        queue.push_back(sh);
      } else if (!(it->second == value)) {
        throw std::logic_error("theta generator images are not a homomorphism");
      }
    }
  }
  if (table.size() != 12) throw std::logic_error("theta table is incomplete");
  for (const auto& g1 : group_elements())
    for (const auto& g2 : group_elements())
      if (!(table.at(g1 * g2) == table.at(g1) * table.at(g2)))
        throw std::logic_error("theta is not a homomorphism");
  return table;
}

}  // namespace

SignedPerm6 theta(const GroupElement& g) {
  static const ThetaTable table = build_theta();
  return table.at(g);
}

Tuple6 act_on_tuple(const GroupElement& g, const Tuple6& v) { return permute_signed(theta(g), v); }

GroupElement parity_twist(const GroupElement& g) { return {g.sign * g.parity(), g.perm}; }

SignedPerm6 matrix_tuple_action(const GroupElement& g) { return theta(parity_twist(g)); }

std::string to_string(const Matrix4& m) { return to_string(NiMatrix::to_trop(m)); }

}  // namespace alcove
