#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace kmy {

inline constexpr int kMaxStrands = 16;

// A pair partition of {T1..Tn} u {B1..Bn}.  Vertices are held 0-based
// internally: 0..n-1 are the top row, n..2n-1 the bottom row (Bi -> n+i-1).
// The public pair encoding is 1-based: 1..n top, n+1..2n bottom.
class Diagram {
 public:
  Diagram() = default;

  static Diagram identity(int n) {
    check_size(n);
    Diagram d(n);
    for (int i = 0; i < n && i < kMaxStrands; ++i) d.link(i, n + i);
    return d;
  }

  // pairs use the 1-based encoding.
  static Diagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    check_size(n);
    Diagram d(n);
    std::vector<bool> seen(2 * n, false);
    auto take = [&](int v) {
      if (v < 1 || v > 2 * n)
        throw Error("core.MalformedPairing", "vertex " + std::to_string(v) + " out of range");
      if (seen[v - 1])
        throw Error("core.MalformedPairing", "vertex " + vertex_name(n, v - 1) + " used twice");
      seen[v - 1] = true;
      return v - 1;
    };
    for (auto [a, b] : pairs) {
      int x = take(a), y = take(b);
      d.link(x, y);
    }
    for (int v = 0; v < 2 * n; ++v)
      if (!seen[v]) throw Error("core.MalformedPairing", "vertex " + vertex_name(n, v) + " is missing");
    return d;
  }

  // partner[v] for 0-based v; validated.
  static Diagram from_partners(int n, const std::vector<int>& partner) {
    check_size(n);
    if (static_cast<int>(partner.size()) != 2 * n)
      throw Error("core.MalformedPairing", "wrong number of vertices");
    Diagram d(n);
    for (int v = 0; v < 2 * n; ++v) {
      int w = partner[v];
      if (w < 0 || w >= 2 * n || w == v || partner[w] != v)
        throw Error("core.MalformedPairing", "partner table is not an involution");
      d.p_[v] = static_cast<std::uint8_t>(w);
    }
    return d;
  }

  // sigma[i] = image of i, 1-based; yields pairs {Ti, B_sigma(i)}.
  static Diagram from_permutation(const std::vector<int>& sigma) {
    int n = static_cast<int>(sigma.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i + 1, n + sigma[i]);
    return from_pairs(n, pairs);
  }

  int n() const { return n_; }
  int partner(int v) const { return p_[v]; }
  bool is_top(int v) const { return v < n_; }

  // Canonical 1-based pairs: smaller vertex first, sorted.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < 2 * n_; ++v)
      if (v < p_[v]) out.emplace_back(v + 1, p_[v] + 1);
    return out;
  }

  int propagating_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += p_[i] >= n_;
    return c;
  }

  // Reading the boundary as T1..Tn, Bn..B1, no two pairs interleave.
  bool is_planar() const {
    std::vector<int> pos(2 * n_), stack;
    for (int i = 0; i < n_; ++i) {
      pos[i] = i;
      pos[n_ + i] = 2 * n_ - 1 - i;
    }
    std::vector<int> at(2 * n_);
    for (int v = 0; v < 2 * n_; ++v) at[pos[v]] = v;
    for (int k = 0; k < 2 * n_; ++k) {
      int v = at[k], w = p_[v];
      if (pos[w] > k) stack.push_back(v);
      else if (stack.empty() || stack.back() != w) return false;
      else stack.pop_back();
    }
    return true;
  }

  // Reflection in the horizontal axis: Ti <-> Bi.
  Diagram flip() const {
    Diagram d(n_);
    for (int v = 0; v < 2 * n_; ++v) d.p_[swap_row(v)] = static_cast<std::uint8_t>(swap_row(p_[v]));
    return d;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && std::equal(a.p_.begin(), a.p_.begin() + 2 * a.n_, b.p_.begin());
  }

  // Lexicographic order on the canonical pair list (all pairs of equal n).
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    if (a.n_ != b.n_) return a.n_ <=> b.n_;
    int va = 0, vb = 0;
    for (;;) {
      while (va < 2 * a.n_ && a.p_[va] < va) ++va;
      while (vb < 2 * b.n_ && b.p_[vb] < vb) ++vb;
      if (va == 2 * a.n_) return std::strong_ordering::equal;
      if (va != vb) return va <=> vb;
      if (a.p_[va] != b.p_[vb]) return a.p_[va] <=> b.p_[vb];
      ++va;
      ++vb;
    }
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(n_);
    for (int v = 0; v < 2 * n_; ++v) h = (h ^ p_[v]) * 1099511628211ull;
    return h;
  }

  static std::string vertex_name(int n, int v) {
    return v < n ? std::to_string(v + 1) : std::to_string(v - n + 1) + "'";
  }

 private:
  explicit Diagram(int n) : n_(static_cast<std::uint8_t>(n)) { p_.fill(0); }

  static void check_size(int n) {
    if (n < 0 || n > kMaxStrands)
      throw Error("core.MalformedPairing",
                  "strand count must lie in [0, " + std::to_string(kMaxStrands) + "]");
  }
  void link(int a, int b) {
    p_[a] = static_cast<std::uint8_t>(b);
    p_[b] = static_cast<std::uint8_t>(a);
  }
  int swap_row(int v) const { return v < n_ ? v + n_ : v - n_; }

  friend Diagram tensor(const Diagram&, const Diagram&);
  friend struct Product multiply(const Diagram&, const Diagram&);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, 2 * kMaxStrands> p_{};
};

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const { return d.hash(); }
};

struct Product {
  int loops;
  Diagram diagram;
};

// d1 is drawn above d2; the bottom row of d1 is glued to the top row of d2.
inline Product multiply(const Diagram& d1, const Diagram& d2) {
  const int n = d1.n();
  if (d2.n() != n) throw Error("core.SizeMismatch", "multiplying diagrams of different sizes");
  Diagram out(n);
  std::array<bool, kMaxStrands> used{};
  // Follow a path entering the middle row at position m from above (from d1)
  // or from below (from d2) until it leaves at an outer vertex.
  auto exit_from = [&](int m, bool from_d1) {
    for (;;) {
      used[m] = true;
      if (from_d1) {
        int w = d2.p_[m];
        if (w >= n) return w;  // bottom of d2 = bottom of product
        m = w;
        from_d1 = false;
      } else {
        int w = d1.p_[n + m];
        if (w < n) return w;  // top of d1 = top of product
        m = w - n;
        from_d1 = true;
      }
    }
  };
  std::array<bool, 2 * kMaxStrands> done{};
  for (int v = 0; v < 2 * n; ++v) {
    if (done[v]) continue;
    int end;
    if (v < n) {
      int w = d1.p_[v];
      end = w < n ? w : exit_from(w - n, true);
    } else {
      int w = d2.p_[v];
      end = w >= n ? w : exit_from(w, false);
    }
    out.link(v, end);
    done[v] = done[end] = true;
  }
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (used[m]) continue;
    ++loops;
    int cur = m;
    bool down = true;  // next step goes through d2
    do {
      used[cur] = true;
      cur = down ? d2.p_[cur] : d1.p_[n + cur] - n;
      down = !down;
    } while (cur != m || !down);
  }
  return {loops, out};
}

// Side by side: d2 to the right of d1.
inline Diagram tensor(const Diagram& d1, const Diagram& d2) {
  const int a = d1.n(), b = d2.n(), n = a + b;
  Diagram::check_size(n);
  Diagram d(n);
  auto map1 = [&](int v) { return v < a ? v : v - a + n; };
  auto map2 = [&](int v) { return v < b ? v + a : v - b + n + a; };
  for (int v = 0; v < 2 * a; ++v) d.p_[map1(v)] = static_cast<std::uint8_t>(map1(d1.p_[v]));
  for (int v = 0; v < 2 * b; ++v) d.p_[map2(v)] = static_cast<std::uint8_t>(map2(d2.p_[v]));
  return d;
}

// u_i: caps {i, i+1} on both rows, other strands vertical (1 <= i < n).
inline Diagram cap_cup(int n, int i) {
  if (i < 1 || i >= n) throw Error("core.BadGenerator", "u" + std::to_string(i) + " needs 1 <= i < n");
  std::vector<std::pair<int, int>> pairs{{i, i + 1}, {n + i, n + i + 1}};
  for (int k = 1; k <= n; ++k)
    if (k != i && k != i + 1) pairs.emplace_back(k, n + k);
  return Diagram::from_pairs(n, pairs);
}

// s_m: strands m and m+1 exchanged (1 <= m < n).
inline Diagram transposition(int n, int m) {
  if (m < 1 || m >= n) throw Error("core.BadGenerator", "s" + std::to_string(m) + " needs 1 <= m < n");
  std::vector<int> sigma(n);
  for (int k = 0; k < n; ++k) sigma[k] = k + 1;
  std::swap(sigma[m - 1], sigma[m]);
  return Diagram::from_permutation(sigma);
}

inline std::string to_string(const Diagram& d) {
  std::string out;
  for (auto [a, b] : d.pairs()) {
    if (!out.empty()) out += ' ';
    out += Diagram::vertex_name(d.n(), a - 1) + "-" + Diagram::vertex_name(d.n(), b - 1);
  }
  return out;
}

// Whitespace separated "a-b" tokens; a primed label denotes a bottom vertex.
inline Diagram parse_diagram(int n, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<int, int>> pairs;
  auto vertex = [&](const std::string& s) {
    bool bottom = !s.empty() && s.back() == '\'';
    std::string digits = bottom ? s.substr(0, s.size() - 1) : s;
    if (digits.empty() || digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error("core.ParseError", "bad vertex label '" + s + "'");
    int k = std::stoi(digits);
    if (k < 1 || k > n) throw Error("core.MalformedPairing", "vertex '" + s + "' out of range");
    return bottom ? n + k : k;
  };
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw Error("core.ParseError", "expected a-b, got '" + tok + "'");
    pairs.emplace_back(vertex(tok.substr(0, dash)), vertex(tok.substr(dash + 1)));
  }
  return Diagram::from_pairs(n, pairs);
}

}  // namespace kmy

template <>
struct std::hash<kmy::Diagram> {
  std::size_t operator()(const kmy::Diagram& d) const { return d.hash(); }
};
