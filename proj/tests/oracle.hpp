#pragma once

// Independent reference computations for the invariant engine.

#include <numeric>
#include <vector>

#include "knotmosaic/invariants.hpp"

namespace oracle {

using namespace knotmosaic;

inline int find(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = find(p, p[x]); }

// Plain state sum over all 2^k smoothings. At [a b c d] the A-smoothing
// joins a-b and c-d, the B-smoothing a-d and b-c.
inline Laurent naive_bracket(const DiagramCode& code) {
  const int k = code.size();
  const Laurent d = Laurent(-1, 2) + Laurent(-1, -2);
  Laurent sum;
  for (long state = 0; state < (1L << k); ++state) {
    std::vector<int> parent(2 * k + 1);
    std::iota(parent.begin(), parent.end(), 0);
    int a_count = 0;
    for (int i = 0; i < k; ++i) {
      const auto& p = code.crossings[i].pd;
      const bool a = (state >> i) & 1;
      a_count += a;
      if (a) {
        parent[find(parent, p[0])] = find(parent, p[1]);
        parent[find(parent, p[2])] = find(parent, p[3]);
      } else {
        parent[find(parent, p[0])] = find(parent, p[3]);
        parent[find(parent, p[1])] = find(parent, p[2]);
      }
    }
    int loops = 0;
    for (int x = 1; x <= 2 * k; ++x) loops += find(parent, x) == x;
    Laurent term(1, a_count - (k - a_count));
    for (int i = 1; i < loops; ++i) term *= d;
    sum += term;
  }
  return k == 0 ? Laurent(1) : sum;
}

// Sign from the labels alone: positive when the over-strand runs d -> b.
inline int naive_writhe(const DiagramCode& code) {
  const int n = 2 * code.size();
  int w = 0;
  for (const auto& c : code.crossings) {
    if (n == 2) {
      w += c.sign;
      continue;
    }
    w += (c.pd[1] - c.pd[3] + n) % n == 1 ? 1 : -1;
  }
  return w;
}

inline Laurent naive_jones(const DiagramCode& code) {
  const int w = naive_writhe(code);
  Laurent f = naive_bracket(code) * Laurent(w % 2 == 0 ? 1 : -1, -3 * w);
  return f.scale_exponents(-1).compress_exponents(4);
}

}  // namespace oracle
