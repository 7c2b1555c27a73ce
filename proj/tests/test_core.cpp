#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "kmy/diagram.hpp"
#include "kmy/element.hpp"
#include "kmy/poly.hpp"
#include "oracles.hpp"

using namespace kmy;
using namespace oracle;

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int k) : up(k) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// Product by union-find over top (0..n-1), middle (n..2n-1), bottom (2n..3n-1).
Product multiply_by_union_find(const Diagram& a, const Diagram& b) {
  const int n = a.n();
  UnionFind uf(3 * n);
  for (int v = 0; v < 2 * n; ++v) {
    uf.unite(v, a.partner(v));
    uf.unite(v + n, b.partner(v) + n);
  }
  std::vector<int> partner(2 * n);
  auto outer = [n](int v) { return v < n ? v : v - n; };  // 3-row index to 2-row
  std::vector<std::vector<int>> members(3 * n);
  for (int v = 0; v < 3 * n; ++v) members[uf.find(v)].push_back(v);
  int loops = 0;
  for (const auto& m : members) {
    if (m.empty()) continue;
    std::vector<int> ends;
    for (int v : m)
      if (v < n || v >= 2 * n) ends.push_back(outer(v));
    if (ends.empty()) ++loops;
    else {
      partner[ends[0]] = ends[1];
      partner[ends[1]] = ends[0];
    }
  }
  return {loops, Diagram::from_partners(n, partner)};
}

Laurent cofactor_det(const LaurentMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Laurent(1);
  Laurent out;
  for (std::size_t j = 0; j < n; ++j) {
    LaurentMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Laurent> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Laurent term = m[0][j] * cofactor_det(minor);
    out = j % 2 ? out - term : out + term;
  }
  return out;
}

Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }

const char* kWorked = "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'";

}  // namespace

TEST(Diagram, IdentityFromPairs) {
  auto d = Diagram::from_pairs(2, {{1, 3}, {2, 4}});
  EXPECT_EQ(d, Diagram::identity(2));
}

TEST(Diagram, MalformedPairing) {
  try {
    Diagram::from_pairs(5, {{1, 2}, {1, 3}, {4, 5}, {6, 7}, {8, 9}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "core.MalformedPairing");
  }
  EXPECT_THROW(Diagram::from_pairs(2, {{1, 2}}), Error);
  EXPECT_THROW(Diagram::from_pairs(2, {{1, 2}, {3, 5}}), Error);
}

TEST(Diagram, WorkedExampleParsesAndPrints) {
  auto d = Diagram::from_pairs(8, {{1, 15}, {2, 9}, {3, 6}, {5, 8}, {4, 10}, {7, 12}, {11, 14}, {13, 16}});
  EXPECT_EQ(parse_diagram(8, kWorked), d);
  EXPECT_EQ(parse_diagram(8, to_string(d)), d);
  EXPECT_EQ(d.propagating_count(), 4);
  EXPECT_FALSE(d.is_planar());
}

TEST(Diagram, ParseErrors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("none");
  };
  EXPECT_EQ(code([] { parse_diagram(2, "1-2 1'x2'"); }), "core.ParseError");
  EXPECT_EQ(code([] { parse_diagram(2, "1-2 a-2'"); }), "core.ParseError");
  EXPECT_EQ(code([] { parse_diagram(2, "1-3 1'-2'"); }), "core.MalformedPairing");
}

TEST(Diagram, MultiplyExamples) {
  auto u1 = cap_cup(3, 1), u2 = cap_cup(3, 2);
  auto [k, d] = multiply(u1, u1);
  EXPECT_EQ(k, 1);
  EXPECT_EQ(d, u1);
  EXPECT_EQ(multiply(Diagram::identity(3), u2).diagram, u2);
  auto p = multiply(multiply(u1, u2).diagram, u1);
  EXPECT_EQ(p.loops, 0);
  EXPECT_EQ(p.diagram, u1);
  EXPECT_THROW(multiply(u1, cap_cup(4, 1)), Error);
}

TEST(Diagram, MultiplyAgreesWithUnionFind) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n)
    for (int t = 0; t < 300; ++t) {
      auto a = random_diagram(n, rng), b = random_diagram(n, rng);
      auto x = multiply(a, b), y = multiply_by_union_find(a, b);
      ASSERT_EQ(x.loops, y.loops);
      ASSERT_EQ(x.diagram, y.diagram);
    }
}

TEST(Diagram, ExhaustiveProductsSmallN) {
  for (int n = 1; n <= 4; ++n) {
    auto all = all_matchings(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto da = Diagram::from_partners(n, a), db = Diagram::from_partners(n, b);
        auto x = multiply(da, db), y = multiply_by_union_find(da, db);
        ASSERT_EQ(x.loops, y.loops);
        ASSERT_EQ(x.diagram, y.diagram);
        ASSERT_LE(x.diagram.propagating_count(), std::min(da.propagating_count(), db.propagating_count()));
      }
  }
}

TEST(Diagram, PlanarCountsAreCatalan) {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  const int dfact[] = {1, 1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 6; ++n) {
    auto all = all_matchings(n);
    EXPECT_EQ(static_cast<int>(all.size()), dfact[n]);
    int planar = 0;
    for (const auto& p : all) {
      bool fast = Diagram::from_partners(n, p).is_planar();
      ASSERT_EQ(fast, planar_by_chords(p, n));
      planar += fast;
    }
    EXPECT_EQ(planar, catalan[n]);
  }
}

TEST(Diagram, FlipIsAntiAutomorphism) {
  std::mt19937_64 rng(11);
  EXPECT_EQ(Diagram::identity(4).flip(), Diagram::identity(4));
  EXPECT_EQ(cap_cup(2, 1).flip(), cap_cup(2, 1));
  auto d = parse_diagram(8, kWorked);
  EXPECT_EQ(d.flip(), parse_diagram(8, "1'-7 2'-1 3'-6' 5'-8' 4'-2 7'-4 3-6 5-8"));
  for (int t = 0; t < 500; ++t) {
    int n = 1 + t % 7;
    auto a = random_diagram(n, rng), b = random_diagram(n, rng);
    auto x = multiply(a, b), y = multiply(b.flip(), a.flip());
    ASSERT_EQ(x.loops, y.loops);
    ASSERT_EQ(x.diagram.flip(), y.diagram);
  }
}

TEST(Diagram, TensorAndPermutations) {
  EXPECT_EQ(tensor(Diagram::identity(2), Diagram::identity(3)), Diagram::identity(5));
  EXPECT_EQ(tensor(cap_cup(2, 1), cap_cup(2, 1)), Diagram::from_pairs(4, {{1, 2}, {5, 6}, {3, 4}, {7, 8}}));
  EXPECT_EQ(tensor(Diagram::identity(2), cap_cup(2, 1)), cap_cup(4, 3));
  EXPECT_EQ(Diagram::from_permutation({1, 2, 3}), Diagram::identity(3));
  EXPECT_EQ(Diagram::from_permutation({2, 1}), Diagram::from_pairs(2, {{1, 4}, {2, 3}}));
  auto sigma = Diagram::from_permutation({2, 4, 1, 5, 3});
  EXPECT_EQ(sigma, Diagram::from_pairs(5, {{1, 7}, {2, 9}, {3, 6}, {4, 10}, {5, 8}}));
  EXPECT_FALSE(Diagram::from_permutation({2, 1}).is_planar());
  EXPECT_EQ(cap_cup(5, 1).propagating_count(), 3);
}

TEST(Diagram, Associativity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + t % 5;
    Element<Laurent> a(random_diagram(n, rng)), b(random_diagram(n, rng)), c(random_diagram(n, rng));
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Element, Arithmetic) {
  Element<Laurent> u(cap_cup(3, 1));
  EXPECT_EQ(u * u, Laurent::delta() * u);
  Element<Rational> x(cap_cup(3, 2), Rational(3, 2));
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_THROW(Element<Rational>(cap_cup(3, 1)) + Element<Rational>(cap_cup(4, 1)), Error);
  // Elements over different rings are different types; no implicit mixing.
  static_assert(!std::is_convertible_v<Element<Rational>, Element<Laurent>>);
}

TEST(Element, Evaluate) {
  auto e = Element<Laurent>(cap_cup(4, 3), Laurent::monomial(-1));
  auto half = evaluate(e, Rational(2));
  EXPECT_EQ(half.coeff(cap_cup(4, 3)), Rational(1, 2));
  try {
    evaluate(e, Rational(0));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), "core.EvalAtZeroWithNegativePower");
  }
  auto g = evaluate(Element<Laurent>(cap_cup(2, 1), Laurent::delta() * Laurent::delta()), Gaussian{0, 1});
  EXPECT_EQ(g.coeff(cap_cup(2, 1)), (Gaussian{-1, 0}));
}

TEST(Scalar, LaurentPrinting) {
  Laurent d = Laurent::delta();
  EXPECT_EQ(to_string(d * d * d * d - d * d), "-d^2 + d^4");
  EXPECT_EQ(to_string(Laurent::monomial(-1, Rational(1, 2))), "1/2*d^-1");
  EXPECT_EQ(to_string(Laurent()), "0");
}

TEST(Scalar, GaussianRoundTrip) {
  for (std::string s : {"i", "-i", "1+i", "2+3i", "1/2-5/3i", "7"}) EXPECT_EQ(to_string(parse_gaussian(s)), s);
  EXPECT_EQ(parse_gaussian("0+1i"), (Gaussian{0, 1}));
  EXPECT_EQ(parse_rational(" -3/6 "), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1.5"), Error);
}

TEST(Poly, DeterminantMatchesCofactor) {
  Laurent d = Laurent::delta();
  EXPECT_EQ(to_string(laurent_det({{d}})), "d");
  EXPECT_EQ(to_string(laurent_det({{d * d, d}, {d, d * d}})), "-d^2 + d^4");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  for (int size = 1; size <= 5; ++size)
    for (int t = 0; t < 10; ++t) {
      LaurentMatrix m(size, std::vector<Laurent>(size));
      for (auto& row : m)
        for (auto& x : row) x = Laurent::monomial(e(rng), c(rng)) + Laurent::monomial(e(rng), c(rng));
      ASSERT_EQ(laurent_det(m), cofactor_det(m));
    }
}

TEST(Poly, Sturm) {
  Poly x2p1 = P({1, 0, 1}), quad = P({2, -3, 1});
  EXPECT_FALSE(sturm_all_roots_real(x2p1));
  EXPECT_TRUE(sturm_all_roots_real(quad));
  // (x-1)^2 (x+2): repeated roots handled through the square-free part.
  Poly cubic = P({-1, 1}) * P({-1, 1}) * P({2, 1});
  EXPECT_TRUE(sturm_all_roots_real(cubic));
  EXPECT_EQ(sturm_distinct_real_roots(cubic), 2);
  EXPECT_FALSE(sturm_all_roots_real(P({1, 0, 1}) * P({-1, 1})));
}
