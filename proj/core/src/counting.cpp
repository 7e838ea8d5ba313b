#include "cusptrees/counting.hpp"

#include <stdexcept>

#include "cusptrees/partitions.hpp"

namespace cusptrees {

const char* to_string(CountKind kind) {
  switch (kind) {
    case CountKind::RootedT: return "rooted";
    case CountKind::VertexPointedP: return "vertex-pointed";
    case CountKind::EdgePairQ: return "edge-pair";
    case CountKind::UnrootedExact: return "unrooted-exact";
  }
  return "unknown";
}

void CountTable::store(int n, BigInt value) {
  auto it = values_.find(n);
  if (it != values_.end()) {
    if (it->second != value) throw std::logic_error("count table is append-only");
    return;
  }
  values_.emplace(n, std::move(value));
}

namespace {

// Product over the distinct parts of p of C(T[part] + mult - 1, mult),
// the number of ways to pick an unordered branch multiset with the given
// leaf-count partition.
template <typename RootedCount>
BigInt branch_multiset_product(const Partition& p, RootedCount&& rooted) {
  const PartMultiplicity by_part = conv_part(p);
  BigInt product = 1;
  for (const auto& [part, multiplicity] : by_part.entries()) {
    product *= multiset_coefficient(rooted(part), multiplicity);
    if (product == 0) break;
  }
  return product;
}

}  // namespace

const BigInt& TreeCounts::rooted_locked(int n) {
  if (n < 1) throw std::domain_error("count_rooted requires n >= 1");
  if (t_.contains(n)) return t_.at(n);
  if (!t_.contains(1)) {
    t_.store(1, 1);
    t_.store(2, 1);
  }
  for (int k = 3; k <= n; ++k) {
    if (t_.contains(k)) continue;
    BigInt total = 0;
    for (const Partition& p : partitions_of(k)) {
      if (p.size() < 2) continue;
      total += branch_multiset_product(p, [&](int part) { return t_.at(part); });
    }
    t_.store(k, std::move(total));
  }
  return t_.at(n);
}

const BigInt& TreeCounts::vertex_pointed_locked(int n) {
  if (n < 1) throw std::domain_error("count_vertex_pointed requires n >= 1");
  if (p_.contains(n)) return p_.at(n);
  if (n == 1) {
    p_.store(1, 1);
    return p_.at(1);
  }
  if (n >= 3) rooted_locked(n - 2);  // largest part a >=3-part partition can hold
  BigInt total = 0;
  for (const Partition& p : partitions_of(n)) {
    if (p.size() < 3) continue;
    total += branch_multiset_product(p, [&](int part) { return rooted_locked(part); });
  }
  p_.store(n, std::move(total));
  return p_.at(n);
}

const BigInt& TreeCounts::edge_pair_locked(int n) {
  if (n < 1) throw std::domain_error("count_edge_pair requires n >= 1");
  if (q_.contains(n)) return q_.at(n);
  q_.store(n, binomial(rooted_locked(n) + 1, 2));
  return q_.at(n);
}

const BigInt& TreeCounts::unrooted_exact_locked(int n) {
  if (n < 1) throw std::domain_error("count_unrooted_exact requires n >= 1");
  if (u_.contains(n)) return u_.at(n);
  if (n == 1) {
    u_.store(1, 1);  // the one-vertex tree
    return u_.at(1);
  }
  // Unique leaf-centroid vertex: every branch carries < n/2 leaves.
  const int max_branch = (n + 1) / 2 - 1;
  BigInt total = 0;
  if (max_branch >= 1) {
    rooted_locked(max_branch);
    for (const Partition& p : partitions_of(n, max_branch)) {
      if (p.size() < 3) continue;
      total += branch_multiset_product(p, [&](int part) { return t_.at(part); });
    }
  }
  // Unique balanced edge: the two halves carry exactly n/2 leaves each.
  if (n % 2 == 0) total += edge_pair_locked(n / 2);
  u_.store(n, std::move(total));
  return u_.at(n);
}

BigInt TreeCounts::rooted(int n) {
  std::lock_guard lock(mu_);
  return rooted_locked(n);
}

BigInt TreeCounts::vertex_pointed(int n) {
  std::lock_guard lock(mu_);
  return vertex_pointed_locked(n);
}

BigInt TreeCounts::edge_pair(int n) {
  std::lock_guard lock(mu_);
  return edge_pair_locked(n);
}

BigInt TreeCounts::unrooted_exact(int n) {
  std::lock_guard lock(mu_);
  return unrooted_exact_locked(n);
}

PaperTotals TreeCounts::paper_total(int max_tips) {
  if (max_tips < 1) throw std::domain_error("paper_total requires max_tips >= 1");
  std::lock_guard lock(mu_);
  PaperTotals totals;
  for (int i = 1; i <= max_tips; ++i) totals.s += vertex_pointed_locked(i);
  totals.s1 = totals.s;
  for (int i = 1; i <= max_tips / 2; ++i) totals.s1 += edge_pair_locked(i);
  return totals;
}

BigInt TreeCounts::homeomorphism_classes_upto(int max_tips) {
  if (max_tips < 1) {
    throw std::domain_error("homeomorphism_classes_upto requires max_tips >= 1");
  }
  std::lock_guard lock(mu_);
  BigInt total = 0;
  for (int n = 1; n <= max_tips; ++n) total += unrooted_exact_locked(n);
  return total;
}

CountTable TreeCounts::snapshot(CountKind kind) const {
  std::lock_guard lock(mu_);
  switch (kind) {
    case CountKind::RootedT: return t_;
    case CountKind::VertexPointedP: return p_;
    case CountKind::EdgePairQ: return q_;
    case CountKind::UnrootedExact: return u_;
  }
  throw std::invalid_argument("unknown count kind");
}

TreeCounts& shared_tree_counts() {
  static TreeCounts counts;
  return counts;
}

BigInt count_rooted(int n) { return shared_tree_counts().rooted(n); }
BigInt count_vertex_pointed(int n) { return shared_tree_counts().vertex_pointed(n); }
BigInt count_edge_pair(int n) { return shared_tree_counts().edge_pair(n); }
BigInt count_unrooted_exact(int n) { return shared_tree_counts().unrooted_exact(n); }
PaperTotals paper_total(int max_tips) { return shared_tree_counts().paper_total(max_tips); }
BigInt homeomorphism_classes_upto(int max_tips) {
  return shared_tree_counts().homeomorphism_classes_upto(max_tips);
}

}  // namespace cusptrees
