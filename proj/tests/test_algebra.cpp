#include <gtest/gtest.h>

#include <set>

#include "kmy/algebra.hpp"
#include "kmy/cells.hpp"
#include "oracles.hpp"

using namespace kmy;

namespace {

const char* kWorked = "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'";

long long fact(int m) { return m <= 1 ? 1 : m * fact(m - 1); }

}  // namespace

TEST(Algebra, Dimensions) {
  EXPECT_EQ(KMYAlgebra(4, -1).dimension(), 14u);
  EXPECT_EQ(KMYAlgebra(4, 2).dimension(), 105u);
  EXPECT_EQ(KMYAlgebra(4, 0).dimension(), 43u);
  try {
    KMYAlgebra(4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "height.BadHeightBound");
  }
}

TEST(Algebra, BasisOrderFollowsPropagatingLines) {
  KMYAlgebra A(5, 1);
  const auto& b = A.basis();
  for (std::size_t i = 1; i < b.size(); ++i) {
    ASSERT_GE(b[i - 1].propagating_count(), b[i].propagating_count());
    if (b[i - 1].propagating_count() == b[i].propagating_count()) ASSERT_LT(b[i - 1], b[i]);
  }
  for (std::size_t i = 0; i < b.size(); ++i) ASSERT_EQ(A.index_of(b[i]), static_cast<int>(i));
  EXPECT_THROW(A.index_of(transposition(5, 4)), Error);
}

TEST(Algebra, IdealBases) {
  KMYAlgebra A(4, 0);
  EXPECT_EQ(A.ideal_basis(4).size(), A.dimension());
  EXPECT_EQ(A.ideal_basis(2).size(), 41u);
  auto i0 = A.ideal_basis(0);
  EXPECT_EQ(i0.size(), 9u);
  for (const auto& d : i0) EXPECT_EQ(d.propagating_count(), 0);
  // Ideal bases are suffixes of the basis.
  auto i2 = A.ideal_basis(2);
  EXPECT_TRUE(std::equal(i2.begin(), i2.end(), A.basis().end() - i2.size()));
}

TEST(Algebra, StructureConstantsAndIdeals) {
  for (int n = 1; n <= 4; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l) {
      KMYAlgebra A(n, l);
      const int dim = static_cast<int>(A.dimension());
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          auto [loops, k] = A.product(i, j);
          auto direct = multiply(A.basis()[i], A.basis()[j]);
          ASSERT_EQ(loops, direct.loops);
          ASSERT_EQ(A.basis()[k], direct.diagram);
          ASSERT_LE(A.basis()[k].propagating_count(),
                    std::min(A.basis()[i].propagating_count(), A.basis()[j].propagating_count()));
        }
    }
}

TEST(Algebra, InflationLayers) {
  KMYAlgebra A(4, 0);
  auto layers = A.inflation_layers();
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_EQ(layers[0].diagrams.size(), 2u);   // m = 4
  EXPECT_EQ(layers[1].diagrams.size(), 32u);  // m = 2
  EXPECT_EQ(layers[2].diagrams.size(), 9u);   // m = 0
  EXPECT_EQ(layers[0].halves.size(), 1u);
  EXPECT_EQ(layers[1].halves.size(), 4u);
  EXPECT_EQ(layers[2].halves.size(), 3u);

  auto br2 = KMYAlgebra(2, 0).inflation_layers();
  ASSERT_EQ(br2.size(), 2u);
  EXPECT_EQ(br2[0].diagrams.size(), 2u);
  EXPECT_EQ(br2[1].diagrams.size(), 1u);
}

TEST(Algebra, DimensionIdentities) {
  for (int n = 1; n <= 5; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l) {
      KMYAlgebra A(n, l);
      std::size_t inflation = 0, cellular = 0;
      for (const auto& layer : A.inflation_layers()) {
        EXPECT_EQ(layer.diagrams.size(), layer.expected_size());
        inflation += layer.halves.size() * layer.halves.size() * fact(layer.ml);
      }
      for (const auto& c : cell_indices(n, l)) {
        std::size_t d = CellModule(n, l, c).dimension();
        cellular += d * d;
      }
      EXPECT_EQ(inflation, A.dimension()) << n << " " << l;
      EXPECT_EQ(cellular, A.dimension()) << n << " " << l;
    }
}

TEST(Algebra, Idempotents) {
  for (int n = 2; n <= 6; ++n) {
    KMYAlgebra A(n, -1);
    EXPECT_EQ(A.idempotent_e() * A.idempotent_e(), A.idempotent_e());
    EXPECT_EQ(A.e_diagram(0), Diagram::identity(n));
    for (int t = 0; 2 * t <= n; ++t) {
      auto e = A.idempotent_e_t(t);
      EXPECT_EQ(e * e, e) << n << " " << t;
      EXPECT_TRUE(A.e_diagram(t).is_planar());
      EXPECT_EQ(A.e_diagram(t).propagating_count(), n - 2 * t);
    }
  }
  KMYAlgebra A(4, 0);
  auto half = A.idempotent_e_t(1, Rational(2));
  EXPECT_EQ(half.coeff(A.e_diagram(1)), Rational(1, 2));
  try {
    A.idempotent_e_t(1, Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "algebra.DeltaNotInvertible");
  }
  EXPECT_THROW(A.e_diagram(3), Error);
}

TEST(HalfDiagrams, CutExamples) {
  auto id = cut_halves(Diagram::identity(3), 1);
  EXPECT_EQ(id.top.p(), 3);
  EXPECT_EQ(id.sigma, (std::vector<int>{0, 1, 2}));

  auto u = cut_halves(cap_cup(3, 1), -1);
  EXPECT_EQ(to_string(u.top), "{1,2} | 3");
  EXPECT_EQ(to_string(u.bottom), "{1,2} | 3");

  auto d = parse_diagram(8, kWorked);
  auto c = cut_halves(d, 3);
  EXPECT_EQ(to_string(c.top), "{3,6} {5,8} | 1 2 4 7");
  EXPECT_EQ(to_string(c.bottom), "{3,6} {5,8} | 1 2 4 7");
  // 1 -> 7', 2 -> 1', 4 -> 2', 7 -> 4'.
  EXPECT_EQ(c.sigma, (std::vector<int>{3, 0, 1, 2}));
  EXPECT_EQ(assemble(c.top, c.sigma, c.bottom), d);
}

TEST(HalfDiagrams, PaperCellBases) {
  EXPECT_EQ(half_diagrams(4, 0, 0).size(), 3u);
  EXPECT_EQ(half_diagrams(4, 0, 2).size(), 4u);
  EXPECT_EQ(half_diagrams(4, 0, 4).size(), 1u);
}

TEST(HalfDiagrams, TriplesAreABijection) {
  for (int n = 1; n <= 6; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l) {
      std::set<std::tuple<HalfDiagram, std::vector<int>, HalfDiagram>> seen;
      for (const auto& d : closure_basis(n, l)) {
        auto c = cut_halves(d, l);
        ASSERT_EQ(assemble(c.top, c.sigma, c.bottom), d);
        seen.emplace(c.top, c.sigma, c.bottom);
      }
      EXPECT_EQ(seen.size(), closure_basis(n, l).size());
    }
  try {
    cut_halves(transposition(4, 3), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "cells.HeightInvariantViolation");
  }
}
