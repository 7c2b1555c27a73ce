#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "closure.hpp"
#include "element.hpp"
#include "half_diagram.hpp"

namespace kmy {

inline long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// One layer I_m / I_{m-2} of the iterated inflation: V_m x S_{m_l} x V_m.
struct InflationLayer {
  int m;
  int ml;
  std::vector<HalfDiagram> halves;
  std::vector<Diagram> diagrams;  // the basis diagrams with m lines

  std::size_t expected_size() const {
    return halves.size() * halves.size() * static_cast<std::size_t>(factorial(ml));
  }
};

// J_{l,n}(d): the span of diagrams of height at most l.
class KMYAlgebra {
 public:
  KMYAlgebra(int n, int l) : n_(n), l_(l) {
    check_height_bound(n, l);
    basis_ = closure(n, l).sorted();
    std::stable_sort(basis_.begin(), basis_.end(), [](const Diagram& a, const Diagram& b) {
      return a.propagating_count() > b.propagating_count();
    });
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  }

  int n() const { return n_; }
  int l() const { return l_; }
  std::size_t dimension() const { return basis_.size(); }
  // Ordered by propagating count (descending), then canonically.
  const std::vector<Diagram>& basis() const { return basis_; }
  bool contains(const Diagram& d) const { return index_.count(d) != 0; }
  int index_of(const Diagram& d) const {
    auto it = index_.find(d);
    if (it == index_.end()) throw Error("algebra.NotInAlgebra", "diagram " + to_string(d) + " is not in the basis");
    return it->second;
  }

  // Basis of I_m: diagrams with at most m propagating lines.
  std::vector<Diagram> ideal_basis(int m) const {
    std::vector<Diagram> out;
    for (const auto& d : basis_)
      if (d.propagating_count() <= m) out.push_back(d);
    return out;
  }

  // Structure constant b_i b_j = d^loops b_k, memoised.
  std::pair<int, int> product(int i, int j) const {
    std::lock_guard lock(memo_mu_);
    auto key = static_cast<long long>(i) * static_cast<long long>(basis_.size()) + j;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto [loops, d] = multiply(basis_[i], basis_[j]);
    auto value = std::pair{loops, index_of(d)};
    memo_.emplace(key, value);
    return value;
  }

  // Layers for m = n, n-2, ...; each assembled set is compared against the
  // basis diagrams with m lines.
  std::vector<InflationLayer> inflation_layers() const {
    std::vector<InflationLayer> out;
    for (int m = n_; m >= 0; m -= 2) {
      InflationLayer layer{m, permuting_strands(l_, m), half_diagrams(n_, l_, m), {}};
      for (const auto& d : basis_)
        if (d.propagating_count() == m) layer.diagrams.push_back(d);
      std::set<Diagram> assembled;
      std::vector<int> sigma(layer.ml);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        std::vector<int> full(sigma);
        for (int k = layer.ml; k < m; ++k) full.push_back(k);
        for (const auto& x : layer.halves)
          for (const auto& y : layer.halves) assembled.insert(assemble(x, full, y));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      std::set<Diagram> actual(layer.diagrams.begin(), layer.diagrams.end());
      if (assembled != actual || assembled.size() != layer.expected_size())
        throw Error("algebra.LayerMismatch", "layer m=" + std::to_string(m) + " does not match V_m x S_m_l x V_m");
      out.push_back(std::move(layer));
    }
    return out;
  }

  // e_{n,t} = 1_{n-2t} (x) U^{(x)t}, a planar diagram.
  Diagram e_diagram(int t) const {
    if (t < 0 || 2 * t > n_) throw Error("algebra.BadIdempotent", "e_{n,t} needs 0 <= 2t <= n");
    Diagram d = Diagram::identity(n_ - 2 * t);
    for (int k = 0; k < t; ++k) d = tensor(d, cap_cup(2, 1));
    return d;
  }

  // e_n = d^-1 (1_{n-2} (x) U).
  Element<Laurent> idempotent_e() const {
    if (n_ < 2) throw Error("algebra.BadIdempotent", "e_n needs n >= 2");
    return Element<Laurent>(e_diagram(1), Laurent::monomial(-1));
  }

  // e'_{n,t} = d^-t e_{n,t}.
  Element<Laurent> idempotent_e_t(int t) const { return Element<Laurent>(e_diagram(t), Laurent::monomial(-t)); }

  // e'_{n,t} with d specialised to delta0 in Q or Q(i).
  template <class T>
  Element<T> idempotent_e_t(int t, const T& delta0) const {
    if (t > 0 && is_zero(delta0)) throw Error("algebra.DeltaNotInvertible", "e'_{n,t} needs d invertible");
    T scale = T(1);
    for (int k = 0; k < t; ++k) scale = scale / delta0;
    return Element<T>(e_diagram(t), scale);
  }

 private:
  int n_, l_;
  std::vector<Diagram> basis_;
  std::unordered_map<Diagram, int> index_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<long long, std::pair<int, int>> memo_;
};

inline KMYAlgebra algebra_new(int n, int l) { return KMYAlgebra(n, l); }

}  // namespace kmy
