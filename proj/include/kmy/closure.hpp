#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "diagram.hpp"

namespace kmy {

struct GeneratorId {
  char kind;  // 'u' or 's'
  int index;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

inline std::string to_string(const GeneratorId& g) { return g.kind + std::to_string(g.index); }

inline Diagram generator_diagram(int n, GeneratorId g) {
  return g.kind == 'u' ? cap_cup(n, g.index) : transposition(n, g.index);
}

inline void check_height_bound(int n, int l) {
  if (l < -1 || l > std::max(-1, n - 2))
    throw Error("height.BadHeightBound",
                "height bound l=" + std::to_string(l) + " outside [-1, n-2] for n=" + std::to_string(n));
}

// u_1..u_{n-1}, then s_1..s_{l+1}.
inline std::vector<GeneratorId> generator_ids(int n, int l) {
  check_height_bound(n, l);
  std::vector<GeneratorId> out;
  for (int i = 1; i < n; ++i) out.push_back({'u', i});
  for (int m = 1; m <= l + 1; ++m) out.push_back({'s', m});
  return out;
}

inline std::vector<Diagram> generators(int n, int l) {
  std::vector<Diagram> out;
  for (auto g : generator_ids(n, l)) out.push_back(generator_diagram(n, g));
  return out;
}

// Worker count for parallel loops: set_thread_count(), else KMY_THREADS,
// else the hardware concurrency.
inline int& thread_count_override() {
  static int value = 0;
  return value;
}
inline void set_thread_count(int k) { thread_count_override() = std::max(0, k); }
inline int thread_count() {
  if (thread_count_override() > 0) return thread_count_override();
  if (const char* env = std::getenv("KMY_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(begin, end, worker) over [0, count) split into contiguous chunks.
template <class F>
void parallel_chunks(std::size_t count, F body) {
  int workers = static_cast<int>(std::min<std::size_t>(thread_count(), count / 256 + 1));
  if (workers <= 1) {
    body(std::size_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t step = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = std::min(count, w * step), hi = std::min(count, lo + step);
    pool.emplace_back([=] { body(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

struct ClosureSet {
  std::unordered_set<Diagram> members;

  bool contains(const Diagram& d) const { return members.count(d) != 0; }
  std::size_t size() const { return members.size(); }

  // Canonically ordered copy, built on first use.
  const std::vector<Diagram>& sorted() const {
    std::call_once(sorted_once_, [&] {
      sorted_.assign(members.begin(), members.end());
      std::sort(sorted_.begin(), sorted_.end());
    });
    return sorted_;
  }

 private:
  mutable std::once_flag sorted_once_;
  mutable std::vector<Diagram> sorted_;
};

// Smallest set holding the identity and the generators, closed under taking
// the diagram part of products.  Built by a frontier worklist multiplying on
// both sides by every generator.
inline void compute_closure(int n, int l, ClosureSet& out) {
  std::vector<Diagram> gens = generators(n, l);
  std::vector<Diagram> frontier{Diagram::identity(n)};
  out.members.insert(frontier.front());
  while (!frontier.empty()) {
    int workers = thread_count();
    std::vector<std::vector<Diagram>> found(workers);
    parallel_chunks(frontier.size(), [&](std::size_t lo, std::size_t hi, int w) {
      for (std::size_t k = lo; k < hi; ++k)
        for (const auto& g : gens)
          for (const Diagram& x : {multiply(frontier[k], g).diagram, multiply(g, frontier[k]).diagram})
            if (!out.members.count(x)) found[w].push_back(x);
    });
    std::vector<Diagram> next;
    for (auto& bucket : found)
      for (auto& x : bucket)
        if (out.members.insert(x).second) next.push_back(x);
    frontier = std::move(next);
  }
}

// Memoised per (n, l).  l is clamped to [-1, n-2], so J_{l,n} for l beyond
// n-2 is the Brauer algebra and small n have a single basis element.
inline const ClosureSet& closure(int n, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ClosureSet>> cache;
  l = std::max(-1, std::min(l, n - 2));
  std::lock_guard lock(mu);
  auto& slot = cache[{n, l}];
  if (!slot) {
    slot = std::make_unique<ClosureSet>();
    compute_closure(n, l, *slot);
  }
  return *slot;
}

inline const std::vector<Diagram>& closure_basis(int n, int l) {
  check_height_bound(n, l);
  return closure(n, l).sorted();
}

// -1 for planar diagrams, else the least l with d in closure_basis(n, l).
// Every pairing lies in closure(n, n-2) (the Brauer case), so the search
// stops one level early.
inline int height_exact(const Diagram& d) {
  if (d.is_planar()) return -1;
  const int n = d.n();
  for (int l = 0; l < n - 2; ++l)
    if (closure(n, l).contains(d)) return l;
  return n - 2;
}

}  // namespace kmy
