#pragma once

// Independent reference computations used only by tests. Nothing here may
// call into the code paths it is checking.

#include <map>
#include <string>
#include <vector>

#include "cusptrees/bigint.hpp"
#include "cusptrees/treegen.hpp"

namespace oracles {

// Partition numbers p(n) via Euler's pentagonal-number recurrence.
inline cusptrees::BigInt partition_count(int n) {
  static std::vector<cusptrees::BigInt> memo = {1};  // p(0) = 1
  if (n < 0) return 0;
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    cusptrees::BigInt total = 0;
    for (int k = 1; k * (3 * k - 1) / 2 <= m; ++k) {
      const int sign = (k % 2 == 1) ? 1 : -1;
      const int g1 = m - k * (3 * k - 1) / 2;
      const int g2 = m - k * (3 * k + 1) / 2;
      if (g1 >= 0) total += sign * memo[static_cast<std::size_t>(g1)];
      if (g2 >= 0) total += sign * memo[static_cast<std::size_t>(g2)];
    }
    memo.push_back(total);
  }
  return memo[static_cast<std::size_t>(n)];
}

// Number of size-m multisets over t labeled types by direct enumeration
// of non-decreasing index tuples.
inline long long multiset_count_brute(int types, int size) {
  long long count = 0;
  std::vector<int> pick;
  auto step = [&](auto&& self, int low) -> void {
    if (static_cast<int>(pick.size()) == size) {
      ++count;
      return;
    }
    for (int i = low; i < types; ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  step(step, 0);
  return count;
}

// Canonical form independent of the centroid machinery: the minimum over
// all vertex rootings of a plain parenthesis code (single-child chains
// allowed, so rooting at a tip is fine). Equal forms iff homeomorphic.
inline std::string min_rooting_code(const cusptrees::UnrootedTree& t) {
  auto code_at = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> children;
    for (int w : t.neighbors(v)) {
      if (w != parent) children.push_back(self(self, w, v));
    }
    if (children.empty()) return "*";
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const std::string& c : children) out += c;
    out += ")";
    return out;
  };
  std::string best;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::string code = code_at(code_at, v, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace oracles
