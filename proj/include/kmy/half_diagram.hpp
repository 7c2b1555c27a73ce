#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "closure.hpp"
#include "diagram.hpp"

namespace kmy {

// m_l = min(l+2, m): the number of leftmost propagating strands on which a
// basis diagram of J_{l,n} may permute.
inline int permuting_strands(int l, int m) { return std::max(0, std::min(l + 2, m)); }

// One row of a diagram after cutting its propagating lines: arcs among
// positions 0..n-1 plus free (propagating) endpoints marked -1.
struct HalfDiagram {
  std::vector<int> mate;

  int n() const { return static_cast<int>(mate.size()); }
  int p() const { return static_cast<int>(std::count(mate.begin(), mate.end(), -1)); }
  std::vector<int> free_points() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
      if (mate[i] < 0) out.push_back(i);
    return out;
  }

  friend auto operator<=>(const HalfDiagram&, const HalfDiagram&) = default;
};

// "{1,2} {3,6} | 4 5 7 8" with 1-based positions.
inline std::string to_string(const HalfDiagram& h) {
  std::string arcs, pts;
  for (int i = 0; i < h.n(); ++i) {
    if (h.mate[i] < 0) pts += (pts.empty() ? "" : " ") + std::to_string(i + 1);
    else if (i < h.mate[i])
      arcs += (arcs.empty() ? "" : " ") + ("{" + std::to_string(i + 1) + "," + std::to_string(h.mate[i] + 1) + "}");
  }
  std::string out = arcs.empty() ? "|" : arcs + " |";
  return pts.empty() ? out : out + " " + pts;
}

struct Cut {
  HalfDiagram top;
  std::vector<int> sigma;  // k-th top free point joins the sigma[k]-th bottom one
  HalfDiagram bottom;
};

inline HalfDiagram top_half(const Diagram& d) {
  const int n = d.n();
  HalfDiagram h{std::vector<int>(n)};
  for (int i = 0; i < n; ++i) h.mate[i] = d.partner(i) < n ? d.partner(i) : -1;
  return h;
}

inline Cut cut(const Diagram& d) {
  const int n = d.n();
  Cut c{top_half(d), {}, top_half(d.flip())};
  auto bottom = c.bottom.free_points();
  for (int t : c.top.free_points()) {
    int b = d.partner(t) - n;
    c.sigma.push_back(static_cast<int>(std::lower_bound(bottom.begin(), bottom.end(), b) - bottom.begin()));
  }
  return c;
}

// Inverse of cut().
inline Diagram assemble(const HalfDiagram& top, const std::vector<int>& sigma, const HalfDiagram& bottom) {
  const int n = top.n();
  std::vector<int> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    if (top.mate[i] >= 0) partner[i] = top.mate[i];
    if (bottom.mate[i] >= 0) partner[n + i] = n + bottom.mate[i];
  }
  auto tf = top.free_points(), bf = bottom.free_points();
  if (tf.size() != bf.size() || sigma.size() != tf.size())
    throw Error("cells.HalfMismatch", "half diagrams have different propagating counts");
  for (std::size_t k = 0; k < tf.size(); ++k) {
    partner[tf[k]] = n + bf[sigma[k]];
    partner[n + bf[sigma[k]]] = tf[k];
  }
  return Diagram::from_partners(n, partner);
}

// A diagram with top half h whose free points run straight down to bottom
// positions 0..p-1, followed by bottom cups {p,p+1}, {p+2,p+3}, ...
inline Diagram lift(const HalfDiagram& h) {
  const int n = h.n(), p = h.p();
  HalfDiagram low{std::vector<int>(n, -1)};
  for (int j = p; j + 1 < n; j += 2) {
    low.mate[j] = j + 1;
    low.mate[j + 1] = j;
  }
  std::vector<int> id(p);
  for (int k = 0; k < p; ++k) id[k] = k;
  return assemble(h, id, low);
}

// Cuts a basis diagram of J_{l,n}; sigma must fix every strand from m_l on.
inline Cut cut_halves(const Diagram& d, int l) {
  Cut c = cut(d);
  int ml = permuting_strands(l, c.top.p());
  for (int k = ml; k < static_cast<int>(c.sigma.size()); ++k)
    if (c.sigma[k] != k)
      throw Error("cells.HeightInvariantViolation",
                  "permutation moves strand " + std::to_string(k + 1) + " beyond m_l = " + std::to_string(ml));
  return c;
}

// V_p: distinct top halves of the basis diagrams of J_{l,n} with p
// propagating lines, in canonical order.
inline std::vector<HalfDiagram> half_diagrams(int n, int l, int p) {
  std::set<HalfDiagram> seen;
  for (const auto& d : closure(n, l).members)
    if (d.propagating_count() == p) seen.insert(top_half(d));
  return {seen.begin(), seen.end()};
}

}  // namespace kmy
