#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cells.hpp"
#include "linalg.hpp"

namespace kmy {

enum class AxiomStatus { Verified, Failed, Skipped };

inline std::string to_string(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::Verified: return "verified";
    case AxiomStatus::Failed: return "failed";
    default: return "skipped";
  }
}

struct AxiomReport {
  std::string axiom;
  int n = 0, l = 0;
  AxiomStatus status = AxiomStatus::Verified;
  std::vector<std::pair<std::string, std::string>> witness;
  std::string failure;

  void note(std::string key, long long value) { witness.emplace_back(std::move(key), std::to_string(value)); }
  void note(std::string key, std::string value) { witness.emplace_back(std::move(key), std::move(value)); }
  // Keeps the first failing sub-check.
  bool require(bool ok, const std::string& what) {
    if (!ok && status != AxiomStatus::Failed) {
      status = AxiomStatus::Failed;
      failure = what;
    }
    return ok;
  }
  bool verified() const { return status == AxiomStatus::Verified; }
};

// l brought into [-1, m-2] for the smaller algebras of the tower; beyond that
// bound J_{l,m} is already the Brauer algebra.
inline int tower_height(int m, int l) { return std::max(-1, std::min(l, m - 2)); }

// d (x) 1: one extra vertical line on the right.
inline Diagram embed(const Diagram& d) { return tensor(d, Diagram::identity(1)); }

inline Element<Laurent> embed(const Element<Laurent>& a) {
  Element<Laurent> out(a.n() + 1);
  for (const auto& [d, c] : a.terms()) out.add(embed(d), c);
  return out;
}

// 1_{n-2} (x) U.
inline Diagram cap_last(int n) { return tensor(Diagram::identity(n - 2), cap_cup(2, 1)); }

// Phi(a) = d^-1 (a (x) U): J_{l,n-2} -> e_n J_{l,n} e_n.
inline Element<Laurent> phi(const Element<Laurent>& a) {
  Element<Laurent> out(a.n() + 2);
  for (const auto& [d, c] : a.terms()) out.add(tensor(d, cap_cup(2, 1)), c * Laurent::monomial(-1));
  return out;
}

// theta(a) = iota(a) e_n: J_{l,n-1} -> J_{l,n} e_n.
inline Element<Laurent> theta(const Element<Laurent>& a) {
  const int n = a.n() + 1;
  return embed(a) * Element<Laurent>(cap_last(n), Laurent::monomial(-1));
}

// dim Delta_{l,n}(p, lambda), zero outside the index set.
inline long long cell_dimension(int n, int l, int p, const Partition& lambda) {
  if (n < 0 || p < 0 || p > n) return 0;
  int lc = tower_height(n, l);
  CellIndex c{p, lambda};
  if (!is_cell_index(n, lc, c)) return 0;
  return CellModule(n, lc, c).dimension();
}

namespace detail {

inline Element<Laurent> random_element(const std::vector<Diagram>& basis, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-1, 1);
  Element<Laurent> out(basis.front().n());
  for (int k = 0; k < 3; ++k) {
    int c = coeff(rng);
    if (c != 0) out.add(basis[pick(rng)], Laurent::monomial(expo(rng), c));
  }
  if (out.is_zero()) out.add(basis[pick(rng)], Laurent(1));
  return out;
}

}  // namespace detail

// (A1) e_n J_{l,n} e_n = Phi(J_{l,n-2}); Phi is injective on the basis and
// multiplicative on every pair of basis diagrams.
inline AxiomReport check_A1(int n, int l) {
  check_height_bound(n, l);
  AxiomReport r{"A1", n, l};
  if (n < 2) {
    r.note("note", "no idempotent e_n for n < 2");
    return r;
  }
  const auto& small = closure(n - 2, tower_height(n - 2, l)).sorted();
  const Diagram e = cap_last(n);
  std::set<Diagram> corner, image;
  for (const auto& b : closure(n, l).sorted()) corner.insert(multiply(multiply(e, b).diagram, e).diagram);
  for (const auto& d : small) image.insert(tensor(d, cap_cup(2, 1)));
  r.note("dim_J_n-2", static_cast<long long>(small.size()));
  r.note("dim_eJe", static_cast<long long>(corner.size()));
  r.require(image.size() == small.size(), "Phi is not injective on the basis");
  r.require(image == corner, "Phi(J_{l,n-2}) differs from e_n J_{l,n} e_n");
  for (const auto& a : small)
    for (const auto& b : small) {
      Element<Laurent> x(a), y(b);
      if (!r.require(phi(x) * phi(y) == phi(x * y), "Phi(a)Phi(b) != Phi(ab) for a=" + to_string(a) +
                                                          ", b=" + to_string(b)))
        return r;
    }
  return r;
}

// (A2, computable part) J e'_{n,t} J = I_{n-2t} as spans for every t.
inline AxiomReport check_A2_chain(int n, int l) {
  check_height_bound(n, l);
  AxiomReport r{"A2", n, l};
  KMYAlgebra A(n, l);
  const auto& basis = A.basis();
  for (int t = 0; 2 * t <= n; ++t) {
    Diagram e = A.e_diagram(t);
    std::set<Diagram> left, span;
    for (const auto& a : basis) left.insert(multiply(a, e).diagram);
    for (const auto& x : left)
      for (const auto& b : basis) span.insert(multiply(x, b).diagram);
    auto ideal = A.ideal_basis(n - 2 * t);
    r.note("span_t" + std::to_string(t), static_cast<long long>(span.size()));
    r.require(span == std::set<Diagram>(ideal.begin(), ideal.end()),
              "J e'_{n," + std::to_string(t) + "} J differs from I_" + std::to_string(n - 2 * t));
  }
  return r;
}

// (A3) iota(d) = d (x) 1 embeds J_{l,n-1} in J_{l,n} as an algebra.
inline AxiomReport check_A3(int n, int l) {
  check_height_bound(n, l);
  AxiomReport r{"A3", n, l};
  if (n < 1) return r;
  const auto& small = closure(n - 1, tower_height(n - 1, l)).sorted();
  const auto& big = closure(n, l);
  std::set<Diagram> image;
  for (const auto& d : small) {
    image.insert(embed(d));
    r.require(big.contains(embed(d)), "iota(" + to_string(d) + ") is not a basis diagram");
  }
  r.note("dim_J_n-1", static_cast<long long>(small.size()));
  r.require(image.size() == small.size(), "iota is not injective");
  r.require(embed(Diagram::identity(n - 1)) == Diagram::identity(n), "iota does not preserve the identity");
  for (const auto& a : small)
    for (const auto& b : small) {
      auto [k, ab] = multiply(a, b);
      auto [k2, img] = multiply(embed(a), embed(b));
      if (!r.require(k == k2 && img == embed(ab), "iota(ab) != iota(a)iota(b) for a=" + to_string(a)))
        return r;
    }
  return r;
}

// (A4) theta: J_{l,n-1} -> J_{l,n} e_n is a bijection of bases intertwining
// the left J_{l,n-1} action and the right J_{l,n-2} action (via Phi).
inline AxiomReport check_A4(int n, int l, std::uint64_t seed = 1, int samples = 200) {
  check_height_bound(n, l);
  AxiomReport r{"A4", n, l};
  if (n < 2) {
    r.note("note", "no idempotent e_n for n < 2");
    return r;
  }
  const auto& mid = closure(n - 1, tower_height(n - 1, l)).sorted();
  const auto& low = closure(n - 2, tower_height(n - 2, l)).sorted();
  const Diagram e = cap_last(n);
  std::set<Diagram> right, image;
  for (const auto& b : closure(n, l).sorted()) right.insert(multiply(b, e).diagram);
  for (const auto& d : mid) image.insert(multiply(embed(d), e).diagram);
  r.note("dim_J_n-1", static_cast<long long>(mid.size()));
  r.note("dim_Je", static_cast<long long>(right.size()));
  r.require(image.size() == mid.size(), "theta is not injective on the basis");
  r.require(image == right, "theta(J_{l,n-1}) differs from J_{l,n} e_n");

  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    auto a = detail::random_element(mid, rng);
    auto d = detail::random_element(mid, rng);
    auto x = detail::random_element(low, rng);
    if (!r.require(theta(a * d) == embed(a) * theta(d), "theta(ad) != iota(a) theta(d)")) return r;
    if (!r.require(theta(d * embed(x)) == theta(d) * phi(x), "theta(d iota(x)) != theta(d) Phi(x)")) return r;
  }
  r.note("samples", samples);
  return r;
}

enum class RestrictionCase { Below, At, Above };

inline std::string to_string(RestrictionCase c) {
  switch (c) {
    case RestrictionCase::Below: return "p<l+2";
    case RestrictionCase::At: return "p=l+2";
    default: return "p>l+2";
  }
}

inline RestrictionCase restriction_case(int l, int p) {
  return p < l + 2 ? RestrictionCase::Below : p == l + 2 ? RestrictionCase::At : RestrictionCase::Above;
}

// Labels of J_{l,n-1} in the restriction of Delta_{l,n}(p, lambda): the
// submodule part (p-1 lines) and the quotient part (p+1 lines).
struct RestrictionTerms {
  std::vector<CellIndex> sub, quotient;
};

inline RestrictionTerms restriction_terms(int l, int p, const Partition& lambda) {
  RestrictionTerms t;
  switch (restriction_case(l, p)) {
    case RestrictionCase::Below:
      for (auto& mu : lambda.remove_box()) t.sub.push_back({p - 1, mu});
      for (auto& mu : lambda.add_box()) t.quotient.push_back({p + 1, mu});
      break;
    case RestrictionCase::At:
      for (auto& mu : lambda.remove_box()) t.sub.push_back({p - 1, mu});
      t.quotient.push_back({p + 1, lambda});
      break;
    case RestrictionCase::Above:
      t.sub.push_back({p - 1, lambda});
      t.quotient.push_back({p + 1, lambda});
      break;
  }
  return t;
}

// (A5) restriction of Delta_{l,n}(p, lambda) to J_{l,n-1}.  Checks the
// dimension identity of the matching case, and that the span of basis
// vectors whose half diagram has vertex n on a propagating line is a
// J_{l,n-1}-submodule with the predicted dimension.
inline AxiomReport restriction_check(int n, int l, int p, const Partition& lambda) {
  check_height_bound(n, l);
  AxiomReport r{"A5", n, l};
  CellModule M(n, l, {p, lambda});
  r.note("cell", to_string(M.index()));
  r.note("case", to_string(restriction_case(l, p)));
  if (n < 1) return r;
  auto terms = restriction_terms(l, p, lambda);
  long long sub = 0, quot = 0;
  for (const auto& c : terms.sub) sub += cell_dimension(n - 1, l, c.p, c.lambda);
  for (const auto& c : terms.quotient) quot += cell_dimension(n - 1, l, c.p, c.lambda);
  r.note("dim", M.dimension());
  r.note("predicted_sub", sub);
  r.note("predicted_quotient", quot);
  r.require(M.dimension() == sub + quot, "dimension differs from the restriction sum");

  std::vector<bool> inside(M.dimension());
  long long dim_s = 0;
  for (int k = 0; k < M.dimension(); ++k) {
    inside[k] = M.halves()[M.half_of(k)].mate[n - 1] < 0;
    dim_s += inside[k];
  }
  r.note("dim_sub", dim_s);
  r.require(dim_s == sub, "submodule dimension differs from the prediction");
  for (const auto& g : generators(n - 1, tower_height(n - 1, l)))
    for (int k = 0; k < M.dimension(); ++k) {
      if (!inside[k]) continue;
      auto v = M.act(embed(g), k);
      for (int j = 0; j < M.dimension(); ++j)
        if (!v[j].is_zero() && !inside[j]) {
          r.require(false, "span is not closed under " + to_string(g));
          return r;
        }
    }
  return r;
}

// (A6) every label (p, lambda) of J_{l,n} appears in the restriction of some
// Delta_{l,n+1}(p+1, mu).
inline AxiomReport coverage_check(int n, int l) {
  check_height_bound(n, l);
  AxiomReport r{"A6", n, l};
  const int lc = tower_height(n + 1, l);
  for (const auto& c : cell_indices(n, l)) {
    std::vector<Partition> candidates;
    if (c.p + 1 <= l + 2) candidates = c.lambda.add_box();
    else candidates = {c.lambda};
    bool found = false;
    for (const auto& mu : candidates) {
      CellIndex up{c.p + 1, mu};
      if (!is_cell_index(n + 1, lc, up)) continue;
      auto sub = restriction_terms(l, up.p, mu).sub;
      if (std::find(sub.begin(), sub.end(), c) != sub.end() && cell_dimension(n, l, c.p, c.lambda) > 0) {
        r.note(to_string(c), to_string(up));
        found = true;
        break;
      }
    }
    r.require(found, "no cell of J_{l,n+1} covers " + to_string(c));
  }
  return r;
}

// Every axiom for J_{l,n}, restriction over all cells.
inline std::vector<AxiomReport> check_all_axioms(int n, int l, std::uint64_t seed = 1) {
  std::vector<AxiomReport> out{check_A1(n, l), check_A2_chain(n, l), check_A3(n, l), check_A4(n, l, seed)};
  for (const auto& c : cell_indices(n, l)) out.push_back(restriction_check(n, l, c.p, c.lambda));
  out.push_back(coverage_check(n, l));
  return out;
}

// dim e_n Delta_{l,n}(p, lambda) against dim Delta_{l,n-2}(p, lambda), or 0
// when p = n.  Returns (observed, expected).
inline std::pair<long long, long long> localise_cell(int n, int l, int p, const Partition& lambda) {
  check_height_bound(n, l);
  CellModule M(n, l, {p, lambda});
  long long expected = p <= n - 2 ? cell_dimension(n - 2, l, p, lambda) : 0;
  if (n < 2) return {M.dimension(), M.dimension()};
  // Each image column is d^k times a rational vector; rescaling columns does
  // not change the rank.
  const Diagram e = cap_last(n);
  RationalMatrix cols;
  for (int k = 0; k < M.dimension(); ++k) {
    auto v = M.act(e, k);
    std::vector<Rational> col(v.size());
    bool any = false;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) {
        col[j] = v[j].coeff(v[j].min_exponent());
        any = true;
      }
    if (any) cols.push_back(std::move(col));
  }
  return {rank(cols), expected};
}

// (dim Delta_{l,n}, dim e_{n+2} Delta_{l,n+2}): globalisation followed by
// localisation returns a module of the original dimension.
inline std::pair<long long, long long> globalise_cell(int n, int l, int p, const Partition& lambda) {
  check_height_bound(n, l);
  long long here = CellModule(n, l, {p, lambda}).dimension();
  return {here, localise_cell(n + 2, l, p, lambda).first};
}

}  // namespace kmy
