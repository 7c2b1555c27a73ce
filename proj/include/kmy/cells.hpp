#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"
#include "half_diagram.hpp"
#include "poly.hpp"
#include "specht.hpp"

namespace kmy {

struct CellIndex {
  int p;
  Partition lambda;

  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

inline std::string to_string(const CellIndex& c) {
  return "(" + std::to_string(c.p) + "," + to_string(c.lambda) + ")";
}

// Labels (p, lambda) of J_{l,n}: p = n, n-2, ..., lambda |- m_l(p).
inline std::vector<CellIndex> cell_indices(int n, int l) {
  std::vector<CellIndex> out;
  for (int p = n; p >= 0; p -= 2)
    for (auto& lam : Partition::all(permuting_strands(l, p))) out.push_back({p, lam});
  return out;
}

inline bool is_cell_index(int n, int l, const CellIndex& c) {
  return c.p >= 0 && c.p <= n && (n - c.p) % 2 == 0 && c.lambda.size() == permuting_strands(l, c.p);
}

// Cell module of J_{l,n}(d) with basis V_p x (standard polytabloids of
// lambda); basis element k is (half k / f, tableau k % f), f = dim S^lambda.
// Vectors have coefficients in Q[d, 1/d].
class CellModule {
 public:
  using Vector = std::vector<Laurent>;

  CellModule(int n, int l, CellIndex index)
      : n_(n), l_(std::max(-1, std::min(l, n - 2))), index_(std::move(index)), specht_(index_.lambda) {
    if (!is_cell_index(n, l_, index_))
      throw Error("cells.BadCellIndex", "no cell " + to_string(index_) + " for J_{" + std::to_string(l) + "," +
                                            std::to_string(n) + "}");
    halves_ = half_diagrams(n, l_, index_.p);
    for (std::size_t i = 0; i < halves_.size(); ++i) half_index_[halves_[i]] = static_cast<int>(i);
  }

  int n() const { return n_; }
  int l() const { return l_; }
  const CellIndex& index() const { return index_; }
  const std::vector<HalfDiagram>& halves() const { return halves_; }
  const SpechtModule& specht() const { return specht_; }
  int dimension() const { return static_cast<int>(halves_.size()) * specht_.dimension(); }
  int half_of(int k) const { return k / specht_.dimension(); }
  int tableau_of(int k) const { return k % specht_.dimension(); }

  // d acting on basis element k.  The product is zero when propagating lines
  // are lost; otherwise the new half carries d^loops and the permutation of
  // the free points acts on the Specht factor.
  Vector act(const Diagram& d, int k) const {
    Vector out(dimension());
    const int p = index_.p;
    auto [loops, prod] = multiply(d, lift(halves_[half_of(k)]));
    if (prod.propagating_count() < p) return out;
    HalfDiagram h = top_half(prod);
    auto it = half_index_.find(h);
    if (it == half_index_.end())
      throw Error("cells.HeightInvariantViolation", "product half diagram is outside V_p");
    // rho: old free point index -> new free point index.
    std::vector<int> rho(p);
    auto pts = h.free_points();
    for (int k2 = 0; k2 < p; ++k2) rho[prod.partner(pts[k2]) - n_] = k2;
    auto coords = specht_.coordinates(specht_.act(restrict_to_specht(rho), specht_.basis_vector(tableau_of(k))));
    Laurent scale = Laurent::monomial(loops);
    for (int t = 0; t < specht_.dimension(); ++t)
      if (coords[t] != 0) out[it->second * specht_.dimension() + t] += scale * Laurent(coords[t]);
    return out;
  }

  Vector act(const Element<Laurent>& a, const Vector& v) const {
    Vector out(dimension());
    for (int k = 0; k < dimension(); ++k) {
      if (v[k].is_zero()) continue;
      for (const auto& [d, c] : a.terms()) {
        Vector part = act(d, k);
        for (int j = 0; j < dimension(); ++j)
          if (!part[j].is_zero()) out[j] += c * v[k] * part[j];
      }
    }
    return out;
  }

  Vector unit(int k) const {
    Vector v(dimension());
    v[k] = Laurent(1);
    return v;
  }

  // <(x,v),(y,w)>: stack the flipped x above y; if all p lines survive the
  // entry is d^loops <v, pi w> with pi carrying y's free points to x's.
  LaurentMatrix gram() const {
    const int f = specht_.dimension(), p = index_.p;
    LaurentMatrix g(dimension(), std::vector<Laurent>(dimension()));
    for (std::size_t i = 0; i < halves_.size(); ++i)
      for (std::size_t j = 0; j < halves_.size(); ++j) {
        auto [loops, prod] = multiply(lift(halves_[i]).flip(), lift(halves_[j]));
        if (prod.propagating_count() < p) continue;
        std::vector<int> pi(p);
        for (int k = 0; k < p; ++k) pi[prod.partner(k) - n_] = k;
        auto sigma = restrict_to_specht(pi);
        for (int a = 0; a < f; ++a)
          for (int b = 0; b < f; ++b) {
            Rational v = SpechtModule::inner(specht_.basis_vector(a), specht_.act(sigma, specht_.basis_vector(b)));
            g[i * f + a][j * f + b] = Laurent::monomial(loops, v);
          }
      }
    return g;
  }

 private:
  std::vector<int> restrict_to_specht(const std::vector<int>& perm) const {
    const int ml = specht_.degree();
    for (int k = ml; k < static_cast<int>(perm.size()); ++k)
      if (perm[k] != k)
        throw Error("cells.HeightInvariantViolation",
                    "permutation moves strand " + std::to_string(k + 1) + " beyond m_l = " + std::to_string(ml));
    return {perm.begin(), perm.begin() + ml};
  }

  int n_, l_;
  CellIndex index_;
  SpechtModule specht_;
  std::vector<HalfDiagram> halves_;
  std::map<HalfDiagram, int> half_index_;
};

inline CellModule cell_module(int n, int l, int p, const Partition& lambda) {
  check_height_bound(n, l);
  return CellModule(n, l, {p, lambda});
}

inline LaurentMatrix gram_matrix(int n, int l, int p, const Partition& lambda) {
  return cell_module(n, l, p, lambda).gram();
}

// Memoised per cell; l is clamped as in CellModule.
inline Poly gram_det(int n, int l, int p, const Partition& lambda) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, Partition>, Poly> cache;
  check_height_bound(n, l);
  auto key = std::tuple{n, std::max(-1, std::min(l, n - 2)), p, lambda};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Poly det = to_poly(laurent_det(gram_matrix(n, l, p, lambda)));
  std::lock_guard lock(mu);
  return cache.emplace(key, det).first->second;
}

// G(d) = M + d D for the cell (n-2, lambda).
struct LinearGram {
  RationalMatrix M, D;
};

inline LinearGram decompose_M_plus_deltaD(int n, int l, const Partition& lambda) {
  if (n < 2) throw Error("cells.BadCellIndex", "the cell (n-2, lambda) needs n >= 2");
  auto g = gram_matrix(n, l, n - 2, lambda);
  LinearGram out{RationalMatrix(g.size(), std::vector<Rational>(g.size())),
                 RationalMatrix(g.size(), std::vector<Rational>(g.size()))};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      for (const auto& [k, c] : g[i][j].terms())
        if (k != 0 && k != 1)
          throw Error("cells.DecompositionFailed", "Gram entry " + to_string(g[i][j]) + " is not linear in d");
      out.M[i][j] = g[i][j].coeff(0);
      out.D[i][j] = g[i][j].coeff(1);
    }
  return out;
}

// Sturm certificate that every root of det G(n-2, lambda) is real.
inline bool all_gram_roots_real(int n, int l, const Partition& lambda) {
  Poly det = gram_det(n, l, n - 2, lambda);
  if (det.is_zero()) throw Error("cells.ZeroDeterminant", "Gram determinant vanishes identically");
  return sturm_all_roots_real(det);
}

struct SemisimpleReport {
  struct Cell {
    CellIndex index;
    Poly det;
    bool vanishes;
  };
  std::vector<Cell> cells;
  bool semisimple;
};

// Evaluates every cell's Gram determinant at delta0 (in Q or Q(i)); the
// algebra is semisimple iff none vanishes.
template <class T>
SemisimpleReport semisimple_at(int n, int l, const T& delta0) {
  check_height_bound(n, l);
  SemisimpleReport r{{}, true};
  for (const auto& c : cell_indices(n, l)) {
    Poly det = gram_det(n, l, c.p, c.lambda);
    bool zero = det.to_laurent().evaluate(delta0) == T{};
    r.cells.push_back({c, det, zero});
    r.semisimple = r.semisimple && !zero;
  }
  return r;
}

// Generic d: semisimple iff no Gram determinant is the zero polynomial.
inline SemisimpleReport semisimple_generic(int n, int l) {
  check_height_bound(n, l);
  SemisimpleReport r{{}, true};
  for (const auto& c : cell_indices(n, l)) {
    Poly det = gram_det(n, l, c.p, c.lambda);
    r.cells.push_back({c, det, det.is_zero()});
    r.semisimple = r.semisimple && !det.is_zero();
  }
  return r;
}

}  // namespace kmy
