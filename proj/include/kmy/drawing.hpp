#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <tuple>
#include <vector>

#include "diagram.hpp"

namespace kmy {

struct Point {
  int x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Curve {
  enum Kind { TopArc, Propagating, BottomArc };
  Kind kind;
  int a, b;  // 0-based positions: row positions for arcs, (top, bottom) for lines
  std::vector<Point> path;
};

struct Crossing {
  int x, y;
  int vertical, horizontal;  // curve ids
  int label;
};

// The standardized drawing on an integer grid.  Vertex i of either row sits
// at x = 8(i+1); y grows downwards from the top edge (y = 0) to the bottom
// edge (y = height).  Curves are axis-parallel polylines with corners at even
// coordinates; the faces are sampled by cells at odd coordinates.
//
// Top arcs are U-shapes nested by span, propagating lines are sorted into
// their bottom order by adjacent swaps (one crossing per inversion), and the
// bottom band mirrors the top.  The label of a crossing is the least number
// of curves a path from the left frame must cross to reach a face touching
// the crossing.
class Drawing {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  explicit Drawing(const Diagram& d) : diagram_(d) { build(); }

  const Diagram& diagram() const { return diagram_; }
  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  // Curve occupying the unit piece from (x,y) to (x,y+1), or -1.
  int vert(int x, int y) const { return at(vert_, x, y); }
  // Curve occupying the unit piece from (x,y) to (x+1,y), or -1.
  int hor(int x, int y) const { return at(hor_, x, y); }

  int max_label() const {
    int m = -1;
    for (const auto& c : crossings_) m = std::max(m, c.label);
    return m;
  }
  int count_label(int l) const {
    int r = 0;
    for (const auto& c : crossings_) r += c.label == l;
    return r;
  }

  // Left-frame distance of the cell at odd (x, y).
  int distance(Point cell) const { return left_dist_[cell_index(cell)]; }

  bool is_cell(Point c) const {
    return c.x > 0 && c.x < width_ && c.y > 0 && c.y < height_ && (c.x & 1) && (c.y & 1);
  }
  int cell_index(Point c) const { return (c.x / 2) * cells_y() + c.y / 2; }
  Point cell_at(int idx) const { return {2 * (idx / cells_y()) + 1, 2 * (idx % cells_y()) + 1}; }
  int cell_count() const { return (width_ / 2) * cells_y(); }

  // Cost of stepping between neighbouring cells: 1 if a curve is crossed.
  int step_cost(Point a, Point b) const {
    if (a.y == b.y) {
      int xm = (a.x + b.x) / 2;
      return vert(xm, a.y) >= 0 || vert(xm, a.y - 1) >= 0;
    }
    int ym = (a.y + b.y) / 2;
    return hor(a.x, ym) >= 0 || hor(a.x - 1, ym) >= 0;
  }

  // The curve crossed by a step, or -1.
  int curve_between(Point a, Point b) const {
    if (a.y == b.y) {
      int c = vert((a.x + b.x) / 2, a.y);
      return c;
    }
    return hor(a.x, (a.y + b.y) / 2);
  }

  struct Search {
    std::vector<int> dist;
    std::vector<int> parent;  // cell index, -1 at sources
  };

  // 0-1 breadth first search over cells.  order selects one of three
  // neighbour orders, which changes how ties between shortest paths break.
  Search search(const std::vector<Point>& sources, const std::vector<char>& blocked, int order = 0) const {
    static constexpr std::array<std::array<std::array<int, 2>, 4>, 3> kOrders{{
        {{{2, 0}, {-2, 0}, {0, 2}, {0, -2}}},
        {{{0, -2}, {2, 0}, {-2, 0}, {0, 2}}},
        {{{0, 2}, {2, 0}, {-2, 0}, {0, -2}}},
    }};
    Search s{std::vector<int>(cell_count(), kUnreachable), std::vector<int>(cell_count(), -1)};
    std::deque<int> dq;
    for (Point p : sources) {
      int i = cell_index(p);
      if (!blocked.empty() && blocked[i]) continue;
      s.dist[i] = 0;
      dq.push_back(i);
    }
    while (!dq.empty()) {
      int i = dq.front();
      dq.pop_front();
      Point c = cell_at(i);
      for (auto [dx, dy] : kOrders[order]) {
        Point nb{c.x + dx, c.y + dy};
        if (!is_cell(nb)) continue;
        int j = cell_index(nb);
        if (!blocked.empty() && blocked[j]) continue;
        int w = step_cost(c, nb);
        if (s.dist[i] + w < s.dist[j]) {
          s.dist[j] = s.dist[i] + w;
          s.parent[j] = i;
          if (w == 0) dq.push_front(j);
          else dq.push_back(j);
        }
      }
    }
    return s;
  }

  std::vector<Point> left_frame() const {
    std::vector<Point> v;
    for (int y = 1; y < height_; y += 2) v.push_back({1, y});
    return v;
  }
  std::vector<Point> right_frame() const {
    std::vector<Point> v;
    for (int y = 1; y < height_; y += 2) v.push_back({width_ - 1, y});
    return v;
  }

  static int vertex_x(int i) { return 8 * (i + 1); }

 private:
  int cells_y() const { return height_ / 2; }
  int at(const std::vector<int>& grid, int x, int y) const {
    if (x < 0 || y < 0 || x > width_ || y > height_) return -1;
    return grid[x * (height_ + 1) + y];
  }

  void build() {
    const int n = diagram_.n();
    std::vector<std::pair<int, int>> top, bottom, lines;
    for (int v = 0; v < 2 * n; ++v) {
      int w = diagram_.partner(v);
      if (v < n && w < n && v < w) top.push_back({v, w});
      else if (v >= n && w >= n && v < w) bottom.push_back({v - n, w - n});
      else if (v < n && w >= n) lines.push_back({v, w - n});
    }
    auto by_span = [](auto p, auto q) {
      return std::tuple(p.second - p.first, p.first) < std::tuple(q.second - q.first, q.first);
    };
    std::sort(top.begin(), top.end(), by_span);
    std::sort(bottom.begin(), bottom.end(), by_span);

    for (std::size_t k = 0; k < top.size(); ++k) {
      auto [a, b] = top[k];
      int y = 4 * static_cast<int>(k + 1);
      curves_.push_back({Curve::TopArc, a, b, {{vertex_x(a), 0}, {vertex_x(a), y}, {vertex_x(b), y}, {vertex_x(b), 0}}});
    }

    // Middle band.
    const int top_band = 4 * static_cast<int>(top.size() + 1);
    const int m = static_cast<int>(lines.size());
    std::vector<std::vector<Point>> paths(m);
    std::vector<int> cur(m), order(m), rank(m);
    for (int k = 0; k < m; ++k) {
      paths[k] = {{vertex_x(lines[k].first), 0}, {vertex_x(lines[k].first), top_band}};
      cur[k] = vertex_x(lines[k].first);
      order[k] = k;
    }
    std::vector<int> by_bottom(order);
    std::sort(by_bottom.begin(), by_bottom.end(),
              [&](int p, int q) { return lines[p].second < lines[q].second; });
    for (int r = 0; r < m; ++r) rank[by_bottom[r]] = r;
    int y = top_band;
    for (bool changed = true; changed;) {
      changed = false;
      for (int k = 0; k + 1 < m; ++k) {
        int a = order[k], b = order[k + 1];
        if (rank[a] < rank[b]) continue;
        int p = cur[a], q = cur[b];
        int y1 = y + 4, y2 = y + 8, y3 = y + 12;
        paths[a].insert(paths[a].end(), {{p, y1}, {p + 4, y1}, {p + 4, y3}, {q, y3}});
        paths[b].insert(paths[b].end(), {{q, y2}, {p, y2}});
        std::swap(cur[a], cur[b]);
        std::swap(order[k], order[k + 1]);
        y = y3 + 4;
        changed = true;
      }
    }
    // Slide every line sideways to its bottom position: leftward moves in
    // slot order, then rightward moves in reverse slot order.
    std::vector<int> moves;
    for (int s = 0; s < m; ++s)
      if (vertex_x(lines[order[s]].second) < cur[order[s]]) moves.push_back(order[s]);
    for (int s = m - 1; s >= 0; --s)
      if (vertex_x(lines[order[s]].second) > cur[order[s]]) moves.push_back(order[s]);
    for (int k : moves) {
      y += 4;
      paths[k].insert(paths[k].end(), {{cur[k], y}, {vertex_x(lines[k].second), y}});
      cur[k] = vertex_x(lines[k].second);
    }
    y += 4;
    height_ = y + 4 * static_cast<int>(bottom.size() + 1);
    width_ = 8 * (n + 1);
    for (int k = 0; k < m; ++k) {
      paths[k].push_back({cur[k], height_});
      curves_.push_back({Curve::Propagating, lines[k].first, lines[k].second, std::move(paths[k])});
    }
    for (std::size_t k = 0; k < bottom.size(); ++k) {
      auto [a, b] = bottom[k];
      int yb = height_ - 4 * static_cast<int>(k + 1);
      curves_.push_back({Curve::BottomArc, a, b,
                         {{vertex_x(a), height_}, {vertex_x(a), yb}, {vertex_x(b), yb}, {vertex_x(b), height_}}});
    }

    vert_.assign((width_ + 1) * (height_ + 1), -1);
    hor_.assign((width_ + 1) * (height_ + 1), -1);
    for (int id = 0; id < static_cast<int>(curves_.size()); ++id) {
      const auto& pl = curves_[id].path;
      for (std::size_t k = 0; k + 1 < pl.size(); ++k) {
        Point p = pl[k], q = pl[k + 1];
        if (p.x == q.x)
          for (int t = std::min(p.y, q.y); t < std::max(p.y, q.y); ++t) vert_[p.x * (height_ + 1) + t] = id;
        else
          for (int t = std::min(p.x, q.x); t < std::max(p.x, q.x); ++t) hor_[t * (height_ + 1) + p.y] = id;
      }
    }

    left_dist_ = search(left_frame(), {}).dist;
    for (int x = 0; x <= width_; x += 2)
      for (int yy = 2; yy < height_; yy += 2) {
        int c = vert(x, yy), c2 = hor(x, yy);
        if (c < 0 || c2 < 0 || c == c2) continue;
        if (vert(x, yy - 1) != c || hor(x - 1, yy) != c2) continue;
        int label = kUnreachable;
        for (int dx : {-1, 1})
          for (int dy : {-1, 1}) label = std::min(label, distance({x + dx, yy + dy}));
        crossings_.push_back({x, yy, c, c2, label});
      }
  }

  Diagram diagram_;
  int width_ = 0, height_ = 0;
  std::vector<Curve> curves_;
  std::vector<Crossing> crossings_;  // sorted by (x, y)
  std::vector<int> vert_, hor_;
  std::vector<int> left_dist_;
};

inline Drawing standardise(const Diagram& d) { return Drawing(d); }

// Largest crossing label of the standardized drawing; -1 without crossings.
inline int height_upper_bound(const Diagram& d) { return Drawing(d).max_label(); }

inline int height_l_feature_count(const Drawing& drawing, int l) { return drawing.count_label(l); }

}  // namespace kmy
