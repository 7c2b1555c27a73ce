#pragma once

#include <utility>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace kmy {

// Dense polynomial over Q, coefficients in ascending degree, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }
  Poly(long long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const Rational& lead() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> r(a.c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division: a = q b + r with deg r < deg b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("core.DivisionByZero", "polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    int db = b.degree();
    std::vector<Rational> q(std::max(0, a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
      if (rem[k] == 0) continue;
      Rational f = rem[k] / b.lead();
      q[k - db] = f;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  Poly derivative() const {
    std::vector<Rational> r;
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<long long>(k));
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return {};
    std::vector<Rational> r(c_);
    for (auto& v : r) v /= c_.back();
    return Poly(std::move(r));
  }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Laurent to_laurent() const {
    Laurent p;
    for (std::size_t k = 0; k < c_.size(); ++k) p.add_term(static_cast<int>(k), c_[k]);
    return p;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Exact quotient; throws if b does not divide a.
inline Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("core.InexactDivision", "polynomial division is not exact");
  return q;
}

// Laurent polynomial with no negative exponents, as a Poly.
inline Poly to_poly(const Laurent& p) {
  if (!p.is_zero() && p.min_exponent() < 0)
    throw Error("core.NegativePower", "Laurent polynomial has negative exponents");
  std::vector<Rational> c(p.is_zero() ? 0 : p.max_exponent() + 1);
  for (const auto& [k, v] : p.terms()) c[k] = v;
  return Poly(std::move(c));
}

using PolyMatrix = std::vector<std::vector<Poly>>;
using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Fraction-free Gaussian elimination; every intermediate division is exact.
inline Poly bareiss_det(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Determinant over Q[d, 1/d]: clear negative powers row by row, then Bareiss.
inline Laurent laurent_det(const LaurentMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("core.NotSquare", "determinant of a non-square matrix");
  PolyMatrix pm;
  int shift = 0;
  for (const auto& row : m) {
    int lo = 0;
    for (const auto& e : row)
      if (!e.is_zero()) lo = std::min(lo, e.min_exponent());
    shift += lo;
    std::vector<Poly> prow;
    for (const auto& e : row) prow.push_back(to_poly(e * Laurent::monomial(-lo)));
    pm.push_back(std::move(prow));
  }
  return bareiss_det(std::move(pm)).to_laurent() * Laurent::monomial(shift);
}

// Number of distinct real roots of p (p nonzero), by Sturm's theorem.
inline int sturm_distinct_real_roots(const Poly& p) {
  if (p.is_zero()) throw Error("core.ZeroPolynomial", "Sturm sequence of the zero polynomial");
  std::vector<Poly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  auto changes = [&](bool at_plus_infinity) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
      int s = q.lead() > 0 ? 1 : -1;
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

inline Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return p;
  return exact_div(p, gcd(p, p.derivative()));
}

// True iff every complex root of p is real.
inline bool sturm_all_roots_real(const Poly& p) {
  Poly sf = square_free_part(p);
  return sturm_distinct_real_roots(sf) == sf.degree();
}

}  // namespace kmy
