// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "kmy/kmy.hpp"

using namespace kmy;

namespace {

const char* kWorked = "1-7' 2-1' 3-6 5-8 4-2' 7-4' 3'-6' 5'-8'";
const char* kWorkedWord = "s3 s4 u5 s1 s2 u6 s4 u5 u7 s3 u6 s4 u5 s4 s3";

struct Result {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

long long double_factorial(int m) { return m <= 1 ? 1 : m * double_factorial(m - 2); }

Result boundary_dimensions() {
  Result r;
  for (int n = 1; n <= 8; ++n)
    if (static_cast<long long>(closure_basis(n, -1).size()) != catalan(n))
      r.fail("dim J_{-1," + std::to_string(n) + "} != Catalan");
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 6; ++n)
    if (static_cast<long long>(closure_basis(n, std::max(-1, n - 2)).size()) != double_factorial(2 * n - 1))
      r.fail("dim J_{n-2," + std::to_string(n) + "} != (2n-1)!!");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60) r.fail("Brauer closures took " + std::to_string(secs) + " s");
  if (r.ok) r.detail << "Catalan n<=8, (2n-1)!! n<=6 in " << static_cast<int>(secs * 1000) << " ms";
  return r;
}

Result cell_bases() {
  Result r;
  const long long want[] = {3, 4, 1};
  for (int k = 0; k < 3; ++k) {
    int p = 2 * k;
    auto v = static_cast<long long>(half_diagrams(4, 0, p).size());
    if (v != want[k]) r.fail("|V_" + std::to_string(p) + "| = " + std::to_string(v));
    for (const auto& c : cell_indices(4, 0))
      if (c.p == p && CellModule(4, 0, c).dimension() != want[k] * SpechtModule(c.lambda).dimension())
        r.fail("dim of cell " + to_string(c));
  }
  if (cell_module(4, 0, 0, Partition()).dimension() != 3 || cell_module(4, 0, 2, Partition({2})).dimension() != 4 ||
      cell_module(4, 0, 4, Partition({2})).dimension() != 1)
    r.fail("cell dimensions differ");
  if (r.ok) r.detail << "|V_0|=3 |V_2|=4 |V_4|=1";
  return r;
}

Result iterated_inflation() {
  Result r;
  int cases = 0;
  for (int n = 1; n <= 5; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l) {
      KMYAlgebra A(n, l);
      long long inflation = 0, cellular = 0;
      for (const auto& layer : A.inflation_layers())
        inflation += static_cast<long long>(layer.halves.size() * layer.halves.size()) * factorial(layer.ml);
      for (const auto& c : cell_indices(n, l)) {
        long long d = CellModule(n, l, c).dimension();
        cellular += d * d;
      }
      const auto dim = static_cast<long long>(A.dimension());
      if (inflation != dim || cellular != dim)
        r.fail("n=" + std::to_string(n) + " l=" + std::to_string(l) + ": " + std::to_string(dim) + " / " +
               std::to_string(inflation) + " / " + std::to_string(cellular));
      ++cases;
    }
  if (r.ok) r.detail << "closure = inflation sum = cell sum for " << cases << " algebras";
  return r;
}

Result worked_decomposition() {
  Result r;
  auto d = parse_diagram(8, kWorked);
  auto [loops, back] = evaluate_word(parse_word(8, 3, kWorkedWord));
  if (loops != 0 || !(back == d)) r.fail("worked word does not evaluate to d^0 d");
  int h = height_exact(d);
  if (h != 3) r.fail("height_exact = " + std::to_string(h));
  auto w = decompose_constructive(d, 3);
  auto [k, again] = evaluate_word(w);
  if (!(again == d) || k != w.delta_exponent) r.fail("constructive word does not re-evaluate to d");
  if (r.ok)
    r.detail << "worked word -> d^0 d, height 3, constructive word of " << w.tokens.size() << " tokens with d^"
             << w.delta_exponent;
  return r;
}

Result height_laws() {
  Result r;
  long long pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::unordered_map<Diagram, int> h;
    for (const auto& d : closure_basis(n, std::max(-1, n - 2))) h[d] = height_exact(d);
    for (const auto& [a, ha] : h) {
      if (h.at(a.flip()) != ha) r.fail("flip changes height of " + to_string(a));
      if (height_upper_bound(a) < ha) r.fail("estimator below height of " + to_string(a));
      for (const auto& [b, hb] : h) {
        if (h.at(multiply(a, b).diagram) > std::max(ha, hb)) r.fail("product raises height");
        ++pairs;
      }
    }
  }
  if (r.ok) r.detail << "0 violations over " << pairs << " products";
  return r;
}

Result tower_axioms() {
  Result r;
  int reports = 0, cells = 0;
  for (int n = 1; n <= 5; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l) {
      for (const auto& a : check_all_axioms(n, l)) {
        if (!a.verified()) r.fail(a.axiom + " n=" + std::to_string(n) + " l=" + std::to_string(l) + ": " + a.failure);
        ++reports;
      }
      for (const auto& c : cell_indices(n, l)) {
        auto [got, want] = localise_cell(n, l, c.p, c.lambda);
        if (got != want) r.fail("localise " + to_string(c));
        ++cells;
      }
    }
  if (r.ok) r.detail << reports << " reports verified, localisation matches on " << cells << " cells";
  return r;
}

Result semisimplicity() {
  Result r;
  bool a = true, b = true;
  int lowest = 0;
  for (int n = 2; n <= 5; ++n)
    for (int l = -1; l <= n - 2; ++l)
      for (const auto& lam : Partition::all(permuting_strands(l, n - 2))) {
        try {
          auto [M, D] = decompose_M_plus_deltaD(n, l, lam);
          LaurentMatrix g(M.size(), std::vector<Laurent>(M.size()));
          for (std::size_t i = 0; i < M.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j) g[i][j] = Laurent(M[i][j]) + Laurent::monomial(1, D[i][j]);
          a = a && is_symmetric(M) && laurent_det(g) == gram_det(n, l, n - 2, lam).to_laurent() &&
              all_gram_roots_real(n, l, lam);
        } catch (const Error&) {
          a = false;
        }
        ++lowest;
      }
  for (int n = 1; n <= 5; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l)
      for (Gaussian z : {Gaussian{0, 1}, Gaussian{1, 1}, Gaussian{2, 3}}) b = b && semisimple_at(n, l, z).semisimple;
  std::string even, odd;
  for (int n = 2; n <= 5; ++n)
    for (int l = -1; l <= n - 2; ++l)
      if (semisimple_at(n, l, Rational(0)).semisimple)
        (n % 2 ? odd : even) += " J_{" + std::to_string(l) + "," + std::to_string(n) + "}";
  const bool c = even.empty() && odd.empty();
  r.ok = a && b && c;
  r.detail << "(a) " << (a ? "holds" : "fails") << " on " << lowest << " cells; (b) " << (b ? "holds" : "fails")
           << "; (c) " << (c ? "holds" : "fails");
  if (!c) r.detail << ", no Gram determinant vanishes at d=0 for" << even << odd;
  return r;
}

Result cross_oracle_decomposition() {
  Result r;
  long long count = 0;
  for (int n = 1; n <= 4; ++n)
    for (int l = -1; l <= std::max(-1, n - 2); ++l)
      for (const auto& d : closure_basis(n, l)) {
        for (const auto& w : {decompose_search(d, l), decompose_constructive(d, l)}) {
          auto [loops, back] = evaluate_word(w);
          if (!(back == d) || loops != w.delta_exponent) r.fail("round trip failed for " + to_string(d));
        }
        ++count;
      }
  if (r.ok) r.detail << "both methods round-trip on " << count << " basis diagrams";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {"boundary dimensions", boundary_dimensions},
      {"cell bases of J_{0,4}", cell_bases},
      {"iterated inflation", iterated_inflation},
      {"worked decomposition", worked_decomposition},
      {"height laws", height_laws},
      {"tower axioms", tower_axioms},
      {"semisimplicity", semisimplicity},
      {"cross-oracle decomposition", cross_oracle_decomposition},
  };
  int failed = 0, k = 0;
  for (const auto& c : criteria) {
    ++k;
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    failed += !r.ok;
    std::cout << (r.ok ? "PASS " : "FAIL ") << k << " " << c.name << ": " << r.detail.str() << std::endl;
  }
  return failed ? 1 : 0;
}
