#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "closure.hpp"
#include "diagram.hpp"
#include "drawing.hpp"

namespace kmy {

// A product of generators read left to right, i.e. stacked top to bottom,
// equal to d^delta_exponent times a single diagram.
struct GeneratorWord {
  int n = 0;
  int l = -1;
  std::vector<GeneratorId> tokens;
  int delta_exponent = 0;
};

inline void check_token(int n, int l, GeneratorId g) {
  bool ok = (g.kind == 'u' && g.index >= 1 && g.index <= n - 1) ||
            (g.kind == 's' && g.index >= 1 && g.index <= l + 1 && g.index <= n - 1);
  if (!ok)
    throw Error("decompose.BadToken", "token " + to_string(g) + " is not a generator of J_{" +
                                          std::to_string(l) + "," + std::to_string(n) + "}");
}

inline Product evaluate_word(const GeneratorWord& w) {
  Product acc{0, Diagram::identity(w.n)};
  for (auto g : w.tokens) {
    check_token(w.n, w.l, g);
    auto [loops, d] = multiply(acc.diagram, generator_diagram(w.n, g));
    acc = {acc.loops + loops, d};
  }
  return acc;
}

// "d^k" prefix only when k != 0; the empty word prints as "1".
inline std::string to_string(const GeneratorWord& w) {
  std::string out = w.delta_exponent ? "d^" + std::to_string(w.delta_exponent) : "";
  for (auto g : w.tokens) out += (out.empty() ? "" : " ") + to_string(g);
  return out.empty() ? "1" : out;
}

inline GeneratorWord parse_word(int n, int l, std::string_view text) {
  GeneratorWord w{n, l, {}, 0};
  std::istringstream in{std::string(text)};
  std::string tok;
  bool first = true;
  while (in >> tok) {
    auto number = [&](std::size_t from) {
      std::string s = tok.substr(from);
      bool neg = !s.empty() && s[0] == '-';
      std::string digits = neg ? s.substr(1) : s;
      if (digits.empty() || digits.size() > 6 ||
          digits.find_first_not_of("0123456789") != std::string::npos)
        throw Error("decompose.ParseError", "bad token '" + tok + "'");
      return neg ? -std::stoi(digits) : std::stoi(digits);
    };
    if (first && tok.rfind("d^", 0) == 0) w.delta_exponent = number(2);
    else if (tok == "1" && first) {
    } else if (tok[0] == 'u' || tok[0] == 's') {
      GeneratorId g{tok[0], number(1)};
      check_token(n, l, g);
      w.tokens.push_back(g);
    } else {
      throw Error("decompose.ParseError", "bad token '" + tok + "'");
    }
    first = false;
  }
  return w;
}

inline void require_in_algebra(const Diagram& d, int l) {
  check_height_bound(d.n(), l);
  if (l < d.n() - 2 && !closure(d.n(), l).contains(d))
    throw Error("decompose.NotInAlgebra", "diagram has height above " + std::to_string(l));
}

// ---------------------------------------------------------------------------
// Search oracle: breadth first search from the identity over closure_basis,
// right-multiplying by generators, so every word found is shortest.

struct SearchTree {
  struct Node {
    Diagram parent;
    GeneratorId token;
    int loops;
  };
  std::unordered_map<Diagram, Node> nodes;
};

inline const SearchTree& search_tree(int n, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SearchTree>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{n, l}];
  if (slot) return *slot;
  slot = std::make_unique<SearchTree>();
  auto ids = generator_ids(n, l);
  std::vector<Diagram> gens;
  for (auto g : ids) gens.push_back(generator_diagram(n, g));
  Diagram id = Diagram::identity(n);
  slot->nodes.emplace(id, SearchTree::Node{id, {'u', 0}, 0});
  std::queue<Diagram> todo;
  todo.push(id);
  while (!todo.empty()) {
    Diagram x = todo.front();
    todo.pop();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto [loops, y] = multiply(x, gens[k]);
      if (slot->nodes.emplace(y, SearchTree::Node{x, ids[k], loops}).second) todo.push(y);
    }
  }
  return *slot;
}

inline GeneratorWord decompose_search(const Diagram& d, int l) {
  require_in_algebra(d, l);
  const auto& tree = search_tree(d.n(), l);
  GeneratorWord w{d.n(), l, {}, 0};
  Diagram cur = d, id = Diagram::identity(d.n());
  while (!(cur == id)) {
    const auto& node = tree.nodes.at(cur);
    w.tokens.push_back(node.token);
    w.delta_exponent += node.loops;
    cur = node.parent;
  }
  std::reverse(w.tokens.begin(), w.tokens.end());
  return w;
}

// ---------------------------------------------------------------------------
// Temperley-Lieb normal form.

// Length of a reduced u-word for a planar diagram: half the total horizontal
// extent of its arcs and lines.
inline int tl_length(const Diagram& d) {
  const int n = d.n();
  int total = 0;
  for (int v = 0; v < 2 * n; ++v) {
    int w = d.partner(v);
    if (v > w) continue;
    if (w < n || v >= n) total += w - v;
    else total += std::abs(v - (w - n));
  }
  return total / 2;
}

// Left-to-right Jones normal form: repeatedly peel the smallest u_i with
// d = u_i d' and d' one step shorter.  The result is a product of decreasing
// runs (u_j u_{j-1} ... u_k) whose starts and ends both increase.
inline std::vector<GeneratorId> jones_normal_form(Diagram d) {
  const int n = d.n();
  std::vector<GeneratorId> word;
  for (int len = tl_length(d); len > 0; --len) {
    std::optional<Diagram> next;
    int peeled = 0;
    for (int i = 1; i < n && !next; ++i) {
      int a = i - 1, b = i;
      if (d.partner(a) != b) continue;
      Diagram ui = cap_cup(n, i);
      for (int x = 0; x < 2 * n && !next; ++x) {
        int y = d.partner(x);
        if (x == a || x == b || x > y) continue;
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          std::vector<int> partner(2 * n);
          for (int v = 0; v < 2 * n; ++v) partner[v] = d.partner(v);
          partner[a] = p, partner[p] = a, partner[b] = q, partner[q] = b;
          Diagram cand = Diagram::from_partners(n, partner);
          if (!cand.is_planar() || tl_length(cand) != len - 1) continue;
          auto [loops, back] = multiply(ui, cand);
          if (loops == 0 && back == d) {
            next = cand;
            peeled = i;
            break;
          }
        }
      }
    }
    if (!next) throw Error("decompose.InternalVerificationFailed", "Temperley-Lieb peeling stalled");
    word.push_back({'u', peeled});
    d = *next;
  }
  return word;
}

// ---------------------------------------------------------------------------
// Constructive decomposition.

struct SplitRecord {
  int level;
  std::string kind;  // "1", "2a" or "2b"
  int loops;
};

namespace detail {

struct Measure {
  int level, features;
  friend auto operator<=>(const Measure&, const Measure&) = default;
};

inline Measure measure(const Drawing& dr) {
  int top = dr.max_label();
  return {top, top < 0 ? 0 : dr.count_label(top)};
}

struct CutPoint {
  Point at;
  int curve;
};

inline std::vector<CutPoint> cut_points(const Drawing& dr, const std::vector<Point>& cells) {
  std::vector<CutPoint> out;
  for (std::size_t k = 0; k + 1 < cells.size(); ++k) {
    Point a = cells[k], b = cells[k + 1];
    Point mid = a.y == b.y ? Point{(a.x + b.x) / 2, a.y} : Point{a.x, (a.y + b.y) / 2};
    int c = dr.curve_between(a, b);
    if (c >= 0) out.push_back({mid, c});
  }
  return out;
}

// Points with odd coordinate along each segment, in travel order.
inline std::vector<Point> odd_points(const std::vector<Point>& path) {
  std::vector<Point> out;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    Point p = path[k], q = path[k + 1];
    if (p.x == q.x) {
      int step = q.y > p.y ? 1 : -1;
      for (int y = p.y + step; y != q.y; y += step)
        if (y & 1) out.push_back({p.x, y});
    } else {
      int step = q.x > p.x ? 1 : -1;
      for (int x = p.x + step; x != q.x; x += step)
        if (x & 1) out.push_back({x, p.y});
    }
  }
  return out;
}

// Endpoint labels of the pieces: top vertex, bottom vertex, or a cut point.
struct End {
  char kind;  // 't', 'b', 'c'
  int idx;
  friend auto operator<=>(const End&, const End&) = default;
};

struct Slices {
  std::vector<std::pair<End, End>> upper, lower;
  int cuts;
};

// Cuts every curve along the upper and lower cut curves; pieces above the
// upper cut form the top factor, pieces below the lower cut the bottom one,
// and every piece in between must run from one cut to the other.
inline std::optional<Slices> slice(const Drawing& dr, const std::vector<CutPoint>& upper,
                                   const std::vector<CutPoint>& lower) {
  if (upper.size() != lower.size()) return std::nullopt;
  auto key = [](Point p) { return std::pair{p.x, p.y}; };
  std::map<std::pair<int, int>, int> cu, cl;
  for (std::size_t k = 0; k < upper.size(); ++k) cu[key(upper[k].at)] = static_cast<int>(k);
  for (std::size_t k = 0; k < lower.size(); ++k) cl[key(lower[k].at)] = static_cast<int>(k);
  Slices out{{}, {}, static_cast<int>(upper.size())};
  enum State { Up, Slab, Low };
  for (const auto& curve : dr.curves()) {
    auto end_of = [&](Point p) { return End{p.y == 0 ? 't' : 'b', p.x / 8 - 1}; };
    End cur = end_of(curve.path.front());
    State state = cur.kind == 't' ? Up : Low;
    char entered = 0;
    for (Point mp : odd_points(curve.path)) {
      auto iu = cu.find(key(mp));
      auto il = cl.find(key(mp));
      bool hu = iu != cu.end(), hl = il != cl.end();
      if (!hu && !hl) continue;
      std::vector<std::pair<char, int>> seq;
      if (state == Up) {
        if (!hu) return std::nullopt;
        seq.push_back({'u', iu->second});
        if (hl) seq.push_back({'l', il->second});
      } else if (state == Low) {
        if (!hl) return std::nullopt;
        seq.push_back({'l', il->second});
        if (hu) seq.push_back({'u', iu->second});
      } else {
        if (hu && hl) return std::nullopt;
        seq.push_back(hu ? std::pair{'u', iu->second} : std::pair{'l', il->second});
      }
      for (auto [side, idx] : seq) {
        if (state == Up) {
          if (side != 'u') return std::nullopt;
          out.upper.push_back({cur, End{'c', idx}});
          state = Slab;
          entered = 'u';
        } else if (state == Low) {
          if (side != 'l') return std::nullopt;
          out.lower.push_back({End{'c', idx}, cur});
          state = Slab;
          entered = 'l';
        } else {
          if (side == entered) return std::nullopt;
          state = side == 'l' ? Low : Up;
          cur = End{'c', idx};
        }
      }
    }
    End last = end_of(curve.path.back());
    if (state == Up) out.upper.push_back({cur, last});
    else if (state == Low) out.lower.push_back({cur, last});
    else return std::nullopt;
  }
  return out;
}

// Closes the two slices into diagrams d1 (top) and d2 (bottom) so that
// d1 * s_{l+1} * d2 reproduces the original diagram.
inline std::optional<std::pair<Diagram, Diagram>> pad(int n, const Slices& s) {
  const int c = s.cuts;
  if (c < 1 || c > n || (n - c) % 2) return std::nullopt;
  std::vector<int> p1(2 * n, -1), p2(2 * n, -1);
  auto link = [](std::vector<int>& p, int a, int b) {
    p[a] = b;
    p[b] = a;
  };
  auto top_id = [&](End e) { return e.kind == 't' ? e.idx : n + e.idx; };
  for (auto [a, b] : s.upper) link(p1, top_id(a), top_id(b));
  for (int j = c; j < n; j += 2) link(p1, n + j, n + j + 1);
  auto bottom_id = [&](End e) {
    if (e.kind == 'b') return n + e.idx;
    return e.idx == c - 1 ? n - 1 : e.idx;
  };
  for (auto [a, b] : s.lower) link(p2, bottom_id(a), bottom_id(b));
  for (int j = c - 1; j < n - 1; j += 2) link(p2, j, j + 1);
  if (std::count(p1.begin(), p1.end(), -1) || std::count(p2.begin(), p2.end(), -1)) return std::nullopt;
  return std::pair{Diagram::from_partners(n, p1), Diagram::from_partners(n, p2)};
}

inline std::string feature_kind(const Drawing& dr, const Crossing& x) {
  int lines = (dr.curves()[x.vertical].kind == Curve::Propagating) +
              (dr.curves()[x.horizontal].kind == Curve::Propagating);
  return lines == 2 ? "1" : lines == 1 ? "2a" : "2b";
}

struct Split {
  Diagram top, bottom;
  int loops;
};

// Tries cuts through one crossing of label l: a shortest path from the left
// frame to the cheapest face at the crossing, a step through the crossing
// point, and a path on to the right frame.  The two ways round the crossing
// give the upper and lower cut.  The first cut whose factors both have a
// smaller measure wins.
inline std::optional<Split> split_at(const Drawing& dr, const Crossing& x, Measure m) {
  const Diagram& d = dr.diagram();
  const int n = d.n();
  std::vector<Point> quads;
  for (int dx : {-1, 1})
    for (int dy : {-1, 1}) quads.push_back({x.x + dx, x.y + dy});
  std::sort(quads.begin(), quads.end(), [&](Point a, Point b) {
    return std::tuple(dr.distance(a), a.x, a.y) < std::tuple(dr.distance(b), b.x, b.y);
  });
  Diagram s = transposition(n, x.label + 1);
  for (Point q : quads) {
    if (dr.distance(q) != x.label) continue;
    Point opposite{2 * x.x - q.x, 2 * x.y - q.y};
    Point r1{q.x, opposite.y}, r2{opposite.x, q.y};
    for (int left_order = 0; left_order < 3; ++left_order) {
      auto left = dr.search(dr.left_frame(), {}, left_order);
      std::vector<Point> lp;
      for (int i = dr.cell_index(q); i >= 0; i = left.parent[i]) lp.push_back(dr.cell_at(i));
      std::reverse(lp.begin(), lp.end());
      std::vector<char> blocked(dr.cell_count(), 0);
      for (Point p : lp) blocked[dr.cell_index(p)] = 1;
      blocked[dr.cell_index(r1)] = blocked[dr.cell_index(r2)] = 1;
      for (int right_order = 0; right_order < 3; ++right_order) {
        auto right = dr.search(dr.right_frame(), blocked, right_order);
        if (right.dist[dr.cell_index(opposite)] == Drawing::kUnreachable) continue;
        std::vector<Point> rp;
        for (int i = dr.cell_index(opposite); i >= 0; i = right.parent[i]) rp.push_back(dr.cell_at(i));
        auto path_via = [&](Point r) {
          std::vector<Point> p(lp);
          p.push_back(r);
          p.insert(p.end(), rp.begin(), rp.end());
          return cut_points(dr, p);
        };
        auto c1 = path_via(r1), c2 = path_via(r2);
        for (int flip = 0; flip < 2; ++flip) {
          auto sl = flip ? slice(dr, c2, c1) : slice(dr, c1, c2);
          if (!sl) continue;
          auto factors = pad(n, *sl);
          if (!factors) continue;
          auto [d1, d2] = *factors;
          auto [k1, ds] = multiply(d1, s);
          auto [k2, dd] = multiply(ds, d2);
          if (!(dd == d)) continue;
          if (!(measure(Drawing(d1)) < m) || !(measure(Drawing(d2)) < m)) continue;
          return Split{d1, d2, k1 + k2};
        }
      }
    }
  }
  return std::nullopt;
}

inline GeneratorWord constructive(const Diagram& d, int l, std::vector<SplitRecord>* trace) {
  Drawing dr(d);
  Measure m = measure(dr);
  GeneratorWord w{d.n(), l, {}, 0};
  if (m.level < 0) {
    w.tokens = jones_normal_form(d);
    return w;
  }
  if (m.level > l)
    throw Error("decompose.EstimatorAboveBound",
                "standardized drawing has a crossing of label " + std::to_string(m.level) +
                    " above the requested bound " + std::to_string(l));
  // Features of the top label in order of x, then y.
  for (const auto& x : dr.crossings()) {
    if (x.label != m.level) continue;
    auto sp = split_at(dr, x, m);
    if (!sp) continue;
    if (trace) trace->push_back({m.level, feature_kind(dr, x), sp->loops});
    GeneratorWord a = constructive(sp->top, l, trace);
    GeneratorWord b = constructive(sp->bottom, l, trace);
    w.tokens = a.tokens;
    w.tokens.push_back({'s', m.level + 1});
    w.tokens.insert(w.tokens.end(), b.tokens.begin(), b.tokens.end());
    return w;
  }
  throw Error("decompose.InternalVerificationFailed",
              "no admissible cut for diagram " + to_string(d));
}

}  // namespace detail

// Words from the proof of the generating set theorem: split at a crossing of
// the top label, recurse on both factors, finish planar pieces in Jones
// normal form.  The d exponent is measured by re-evaluating the word.
// A verified word of legal tokens already certifies membership, so the
// closure is consulted only when the construction fails.
inline GeneratorWord decompose_constructive(const Diagram& d, int l, std::vector<SplitRecord>* trace = nullptr) {
  check_height_bound(d.n(), l);
  GeneratorWord w;
  try {
    w = detail::constructive(d, l, trace);
  } catch (const Error&) {
    require_in_algebra(d, l);
    throw;
  }
  auto [loops, back] = evaluate_word(w);
  if (!(back == d))
    throw Error("decompose.InternalVerificationFailed", "constructive word does not evaluate to the input");
  w.delta_exponent = loops;
  return w;
}

}  // namespace kmy
