#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"
#include "scalar.hpp"

namespace kmy {

// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] <= 0 || (i && parts_[i] > parts_[i - 1]))
        throw Error("specht.BadPartition", "parts must be positive and weakly decreasing");
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const { return static_cast<int>(parts_.size()); }

  // lambda + e_i for each row index i that keeps a partition (rows in order,
  // the new row last).
  std::vector<Partition> add_box() const {
    std::vector<Partition> out;
    for (int i = 0; i <= rows(); ++i) {
      if (i < rows() && i > 0 && parts_[i] == parts_[i - 1]) continue;
      auto p = parts_;
      if (i == rows()) p.push_back(1);
      else ++p[i];
      out.emplace_back(p);
    }
    return out;
  }

  // lambda - e_i for each removable box, in row order.
  std::vector<Partition> remove_box() const {
    std::vector<Partition> out;
    for (int i = 0; i < rows(); ++i) {
      if (i + 1 < rows() && parts_[i + 1] == parts_[i]) continue;
      auto p = parts_;
      if (--p[i] == 0) p.pop_back();
      out.emplace_back(p);
    }
    return out;
  }

  // Every partition of m in reverse lexicographic order.
  static std::vector<Partition> all(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
      if (left == 0) {
        out.emplace_back(cur);
        return;
      }
      for (int k = std::min(left, cap); k >= 1; --k) {
        cur.push_back(k);
        self(self, left - k, k);
        cur.pop_back();
      }
    };
    rec(rec, m, m);
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  if (p.parts().empty()) return "()";
  std::string out = "(";
  for (int k : p.parts()) out += (out.size() > 1 ? "," : "") + std::to_string(k);
  return out + ")";
}

// "2,1", "(2,1)", "2 1", or "" / "()" for the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    if (num.size() > 4) throw Error("specht.BadPartition", "part too large");
    parts.push_back(std::stoi(num));
    num.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') num += c;
    else if (c == ',' || c == ' ' || c == '(' || c == ')') flush();
    else throw Error("specht.BadPartition", "unexpected character in partition '" + std::string(text) + "'");
  }
  flush();
  return Partition(parts);
}

// Number of standard tableaux by the hook length formula.
inline BigInt hook_length_dimension(const Partition& p) {
  BigInt num = 1, den = 1;
  for (int k = 2; k <= p.size(); ++k) num *= k;
  const auto& r = p.parts();
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < r[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k < p.rows() && r[k] > j; ++k) ++below;
      den *= r[i] - j + below;
    }
  return num / den;
}

// Specht module S^lambda inside the permutation module on row tabloids.  A
// tabloid is stored as the row index of each entry 0..m-1; rows keep their
// position in lambda.  Vectors are given in tabloid coordinates.
class SpechtModule {
 public:
  using Tableau = std::vector<std::vector<int>>;  // rows of entries 0..m-1

  explicit SpechtModule(Partition lambda) : lambda_(std::move(lambda)) {
    std::vector<int> rows;
    for (int i = 0; i < lambda_.rows(); ++i) rows.insert(rows.end(), lambda_.parts()[i], i);
    // rows is sorted, so next_permutation walks tabloids in lexicographic order.
    do {
      index_.emplace(rows, static_cast<int>(tabloids_.size()));
      tabloids_.push_back(rows);
    } while (std::next_permutation(rows.begin(), rows.end()));
    enumerate_standard();
    for (const auto& t : standard_) polytabloids_.push_back(polytabloid(t));
  }

  const Partition& shape() const { return lambda_; }
  int degree() const { return lambda_.size(); }
  int dimension() const { return static_cast<int>(standard_.size()); }
  const std::vector<std::vector<int>>& tabloids() const { return tabloids_; }
  const std::vector<Tableau>& standard_tableaux() const { return standard_; }
  int tabloid_index(const std::vector<int>& rows) const { return index_.at(rows); }

  // e_T for the k-th standard tableau.
  const std::vector<Rational>& basis_vector(int k) const { return polytabloids_[k]; }

  // e_T = sum over column permutations pi of sign(pi) {pi T}.
  std::vector<Rational> polytabloid(const Tableau& t) const {
    std::vector<Rational> v(tabloids_.size());
    std::vector<std::vector<int>> cols;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        if (cols.size() <= j) cols.emplace_back();
        cols[j].push_back(t[i][j]);
      }
    std::vector<int> base(degree());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (int e : t[i]) base[e] = static_cast<int>(i);
    // Iterate over the product of column symmetric groups.
    std::vector<std::vector<int>> perms(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      perms[c].resize(cols[c].size());
      std::iota(perms[c].begin(), perms[c].end(), 0);
    }
    for (;;) {
      std::vector<int> rows(degree());
      int sign = 1;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        sign *= permutation_sign(perms[c]);
        for (std::size_t k = 0; k < cols[c].size(); ++k) rows[cols[c][perms[c][k]]] = base[cols[c][k]];
      }
      v[index_.at(rows)] += sign;
      std::size_t c = 0;
      while (c < cols.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
      if (c == cols.size()) break;
    }
    return v;
  }

  // sigma acts by relabelling entries: entry x moves to sigma[x] (0-based).
  std::vector<Rational> act(const std::vector<int>& sigma, const std::vector<Rational>& v) const {
    if (static_cast<int>(sigma.size()) != degree())
      throw Error("specht.DegreeMismatch", "permutation degree differs from |lambda|");
    std::vector<Rational> out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t] == 0) continue;
      std::vector<int> rows(degree());
      for (int x = 0; x < degree(); ++x) rows[sigma[x]] = tabloids_[t][x];
      out[index_.at(rows)] += v[t];
    }
    return out;
  }

  // Coordinates in the standard polytabloid basis.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const {
    RationalMatrix a(tabloids_.size(), std::vector<Rational>(standard_.size()));
    for (std::size_t j = 0; j < standard_.size(); ++j)
      for (std::size_t i = 0; i < tabloids_.size(); ++i) a[i][j] = polytabloids_[j][i];
    auto x = solve(a, v);
    if (!x) throw Error("specht.NotInSpan", "vector is not in the Specht module");
    return *x;
  }

  // The tabloid form: distinct tabloids are orthonormal.
  static Rational inner(const std::vector<Rational>& v, const std::vector<Rational>& w) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
    return s;
  }

  // Gram matrix of the polytabloid basis under the tabloid form.
  RationalMatrix gram() const {
    RationalMatrix g(dimension(), std::vector<Rational>(dimension()));
    for (int i = 0; i < dimension(); ++i)
      for (int j = 0; j < dimension(); ++j) g[i][j] = inner(polytabloids_[i], polytabloids_[j]);
    return g;
  }

  static int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    std::vector<bool> seen(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    return sign;
  }

 private:
  // Standard tableaux in the order of placing 0..m-1 row by row, preferring
  // lower row indices first.
  void enumerate_standard() {
    const int m = degree();
    Tableau t(lambda_.rows());
    auto rec = [&](auto&& self, int next) -> void {
      if (next == m) {
        standard_.push_back(t);
        return;
      }
      for (int i = 0; i < lambda_.rows(); ++i) {
        int len = static_cast<int>(t[i].size());
        if (len == lambda_.parts()[i]) continue;
        if (i > 0 && static_cast<int>(t[i - 1].size()) <= len) continue;
        t[i].push_back(next);
        self(self, next + 1);
        t[i].pop_back();
      }
    };
    rec(rec, 0);
  }

  Partition lambda_;
  std::vector<std::vector<int>> tabloids_;
  std::map<std::vector<int>, int> index_;
  std::vector<Tableau> standard_;
  std::vector<std::vector<Rational>> polytabloids_;
};

}  // namespace kmy
