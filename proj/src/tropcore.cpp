#include "alcove/tropcore.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace alcove {

Rational parse_rational(const std::string& text) {
  static const std::regex kPattern(R"(\s*([+-]?[0-9]+)(?:/([0-9]+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, kPattern)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  boost::multiprecision::cpp_int num(m[1].str().front() == '+' ? m[1].str().substr(1)
                                                               : m[1].str());
  boost::multiprecision::cpp_int den(1);
  if (m[2].matched) {
    den = boost::multiprecision::cpp_int(m[2].str());
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

const Rational& TropScalar::value() const {
  if (!value_) throw std::domain_error("NEG_INF has no rational value");
  return *value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    return b.is_neg_inf() <=> a.is_neg_inf();
  }
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*b.value_ < *a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const TropScalar& s) {
  return s.is_finite() ? to_string(s.value()) : std::string("-inf");
}

TropScalar trop_add(const TropScalar& x, const TropScalar& y) { return x < y ? y : x; }

TropScalar trop_mul(const TropScalar& x, const TropScalar& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return TropScalar::neg_inf();
  return TropScalar(x.value() + y.value());
}

TropMatrix::TropMatrix(std::size_t n, const TropScalar& fill) : n_(n), entries_(n * n, fill) {
  if (n < 2) throw std::invalid_argument("matrix order must be at least 2");
}

TropMatrix TropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  TropMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(rows[i].size()) + " entries");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TropMatrix TropMatrix::from_rationals(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<TropScalar>> r;
  r.reserve(rows.size());
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return from_rows(r);
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, TropScalar::neg_inf());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar(0);
  return m;
}

bool TropMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TropScalar& s) { return s.is_finite(); });
}

TropMatrix TropMatrix::transpose() const {
  TropMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string to_string(const TropMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) os << ' ';
      os << to_string(m(i, j));
    }
    os << '\n';
  }
  return os.str();
}

TropMatrix trop_mul_matrix(const TropMatrix& a, const TropMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("order mismatch in tropical product: " +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  const std::size_t n = a.order();
  TropMatrix c(n, TropScalar::neg_inf());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c(i, j) = trop_add(c(i, j), trop_mul(a(i, k), b(k, j)));
  return c;
}

TropMatrix conjugate(const TropMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.order()) {
    throw std::invalid_argument("conjugating vector has wrong length");
  }
  TropMatrix c(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      c(i, j) = trop_mul(trop_mul(TropScalar(b[i]), a(i, j)), TropScalar(Rational(-b[j])));
  return c;
}

TropMatrix permute_conjugate(const TropMatrix& a, std::span<const int> sigma) {
  const std::size_t n = a.order();
  if (sigma.size() != n) throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || seen[s]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[s] = true;
  }
  TropMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a(sigma[i], sigma[j]);
  return c;
}

bool is_idempotent(const TropMatrix& a) { return trop_mul_matrix(a, a) == a; }

Rational two_minor(const TropMatrix& a, std::size_t i, std::size_t j, std::size_t k,
                   std::size_t l) {
  const TropScalar* e[] = {&a(i, k), &a(j, l), &a(i, l), &a(j, k)};
  for (const TropScalar* s : e) {
    if (s->is_neg_inf()) throw std::domain_error("2-minor of a matrix with a NEG_INF entry");
  }
  return e[0]->value() + e[1]->value() - e[2]->value() - e[3]->value();
}

Rational trop_distance(const Point& p, const Point& q) {
  if (p.size() != q.size()) throw std::invalid_argument("points of different dimension");
  std::vector<Rational> diff(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) diff[i] = p[i] - q[i];
  Rational best(0);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    best = std::max(best, Rational(abs(diff[i])));
    for (std::size_t j = i + 1; j < diff.size(); ++j) best = std::max(best, Rational(abs(diff[i] - diff[j])));
  }
  return best;
}

}  // namespace alcove
