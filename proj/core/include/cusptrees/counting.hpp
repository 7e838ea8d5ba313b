#pragma once

#include <map>
#include <mutex>
#include <string>

#include "cusptrees/bigint.hpp"

namespace cusptrees {

enum class CountKind { RootedT, VertexPointedP, EdgePairQ, UnrootedExact };

const char* to_string(CountKind kind);

// Append-only memo of counts per tip count. A stored value is never changed.
class CountTable {
 public:
  explicit CountTable(CountKind kind) : kind_(kind) {}

  CountKind kind() const noexcept { return kind_; }
  bool contains(int n) const { return values_.count(n) != 0; }
  const BigInt& at(int n) const { return values_.at(n); }
  void store(int n, BigInt value);
  const std::map<int, BigInt>& values() const noexcept { return values_; }

 private:
  CountKind kind_;
  std::map<int, BigInt> values_;
};

struct PaperTotals {
  BigInt s;   // sum of vertex-pointed counts up to max_tips
  BigInt s1;  // s plus the edge-pair counts up to floor(max_tips / 2)
};

// Memoized counts of series-reduced trees by number of tips.
//
// rooted(n)          T: rooted trees with n leaves, every internal vertex
//                       (the root included) with >= 2 children.
// vertex_pointed(n)  P: multisets of >= 3 rooted trees with n leaves total,
//                       i.e. trees pointed at a vertex of degree >= 3, with
//                       no restriction on branch sizes. Overcounts
//                       homeomorphism classes: a tree appears once per
//                       distinct branch multiset.
// edge_pair(n)       Q: unordered pairs (repetition allowed) of rooted trees
//                       with n leaves each, C(T[n]+1, 2); glued root-to-root
//                       they realize 2n-tip trees.
// unrooted_exact(n)  u: homeomorphism classes of trees with n tips, via the
//                       leaf-centroid split: branch multisets with every
//                       branch below n/2 leaves, plus the balanced edge
//                       pairs Q[n/2] when n is even.
//
// All methods are safe to call concurrently on a shared instance.
class TreeCounts {
 public:
  BigInt rooted(int n);
  BigInt vertex_pointed(int n);
  BigInt edge_pair(int n);
  BigInt unrooted_exact(int n);

  PaperTotals paper_total(int max_tips = 17);
  BigInt homeomorphism_classes_upto(int max_tips);

  // Copy of a memo table, for inspection.
  CountTable snapshot(CountKind kind) const;

 private:
  const BigInt& rooted_locked(int n);
  const BigInt& vertex_pointed_locked(int n);
  const BigInt& edge_pair_locked(int n);
  const BigInt& unrooted_exact_locked(int n);

  mutable std::mutex mu_;
  CountTable t_{CountKind::RootedT};
  CountTable p_{CountKind::VertexPointedP};
  CountTable q_{CountKind::EdgePairQ};
  CountTable u_{CountKind::UnrootedExact};
};

// Process-wide shared memo behind the free functions below.
TreeCounts& shared_tree_counts();

BigInt count_rooted(int n);
BigInt count_vertex_pointed(int n);
BigInt count_edge_pair(int n);
BigInt count_unrooted_exact(int n);
PaperTotals paper_total(int max_tips = 17);
BigInt homeomorphism_classes_upto(int max_tips);

}  // namespace cusptrees
