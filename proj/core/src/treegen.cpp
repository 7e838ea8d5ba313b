#include "cusptrees/treegen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "cusptrees/partitions.hpp"

namespace cusptrees {

namespace {

int code_rank(char c) {
  switch (c) {
    case '(': return 0;
    case '*': return 1;
    case ')': return 2;
  }
  return 3;
}

}  // namespace

bool code_less(std::string_view a, std::string_view b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](char x, char y) { return code_rank(x) < code_rank(y); });
}

RootedTree RootedTree::leaf() { return RootedTree(); }

RootedTree RootedTree::internal(std::vector<RootedTree> children) {
  if (children.size() < 2) {
    throw std::invalid_argument("internal vertex needs at least 2 children");
  }
  RootedTree t;
  t.children_ = std::move(children);
  std::sort(t.children_.begin(), t.children_.end(),
            [](const RootedTree& x, const RootedTree& y) {
              return code_less(x.code(), y.code());
            });
  t.leaf_count_ = 0;
  t.code_ = "(";
  for (const RootedTree& child : t.children_) {
    t.leaf_count_ += child.leaf_count();
    t.code_ += child.code();
  }
  t.code_ += ')';
  return t;
}

const std::string& canonical_code(const RootedTree& t) { return t.code(); }

namespace {

// Walks every non-decreasing index tuple of the given length over
// [0, pool_size): one call per multiset of pool elements.
void for_each_index_multiset(int pool_size, int length,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(length));
  std::function<void(int)> step = [&](int low) {
    if (static_cast<int>(indices.size()) == length) {
      visit(indices);
      return;
    }
    for (int i = low; i < pool_size; ++i) {
      indices.push_back(i);
      step(i);
      indices.pop_back();
    }
  };
  step(0);
}

// Every multiset of branches whose leaf counts realize the partition, with
// branches drawn from the per-leaf-count pools.
void for_each_branch_multiset(
    const Partition& partition,
    const std::vector<std::vector<RootedTree>>& pool_by_leaves,
    const std::function<void(const std::vector<RootedTree>&)>& visit) {
  const PartMultiplicity by_part = conv_part(partition);
  const auto& entries = by_part.entries();
  std::vector<RootedTree> branches;
  std::function<void(std::size_t)> step = [&](std::size_t entry_index) {
    if (entry_index == entries.size()) {
      visit(branches);
      return;
    }
    const auto& [part, multiplicity] = entries[entry_index];
    const auto& pool = pool_by_leaves[static_cast<std::size_t>(part)];
    for_each_index_multiset(
        static_cast<int>(pool.size()), multiplicity,
        [&](const std::vector<int>& indices) {
          for (int i : indices) branches.push_back(pool[static_cast<std::size_t>(i)]);
          step(entry_index + 1);
          for (std::size_t i = 0; i < indices.size(); ++i) branches.pop_back();
        });
  };
  step(0);
}

std::vector<std::vector<RootedTree>> rooted_levels(int n) {
  std::vector<std::vector<RootedTree>> level(static_cast<std::size_t>(n) + 1);
  level[1] = {RootedTree::leaf()};
  for (int k = 2; k <= n; ++k) {
    std::vector<RootedTree> acc;
    for (const Partition& p : partitions_of(k)) {
      if (p.size() < 2) continue;
      for_each_branch_multiset(p, level, [&](const std::vector<RootedTree>& branches) {
        acc.push_back(RootedTree::internal(branches));
      });
    }
    std::sort(acc.begin(), acc.end(), [](const RootedTree& x, const RootedTree& y) {
      return code_less(x.code(), y.code());
    });
    level[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return level;
}

}  // namespace

std::vector<RootedTree> generate_rooted(int n) {
  if (n < 1) throw std::domain_error("generate_rooted requires n >= 1");
  return std::move(rooted_levels(n)[static_cast<std::size_t>(n)]);
}

UnrootedTree UnrootedTree::single_vertex() { return from_edges(1, {}); }

UnrootedTree UnrootedTree::from_edges(int vertex_count,
                                      std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw std::invalid_argument("a tree on v vertices has exactly v-1 edges");
  }
  UnrootedTree t;
  t.adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count || a == b) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    t.adjacency_[static_cast<std::size_t>(a)].push_back(b);
    t.adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  t.edges_ = std::move(edges);

  // Connectivity; acyclicity follows from the edge count.
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertex_count) throw std::invalid_argument("edges do not form a tree");

  for (int v = 0; v < vertex_count; ++v) {
    int deg = t.degree(v);
    if (deg == 2) {
      throw std::invalid_argument("degree-2 vertex: tree is not series-reduced");
    }
    if (deg <= 1) ++t.tip_count_;
  }
  return t;
}

namespace {

bool is_tip(const UnrootedTree& t, int v) { return t.degree(v) <= 1; }

// Tips in the subtree of each vertex when rooted at vertex 0, plus the
// parent array of that rooting.
void tip_subtree_counts(const UnrootedTree& t, std::vector<int>& sub,
                        std::vector<int>& parent, std::vector<int>& order) {
  const int n = t.vertex_count();
  sub.assign(static_cast<std::size_t>(n), 0);
  parent.assign(static_cast<std::size_t>(n), -1);
  order.clear();
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> stack = {0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (is_tip(t, v)) sub[static_cast<std::size_t>(v)] += 1;
    if (parent[static_cast<std::size_t>(v)] >= 0) {
      sub[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] +=
          sub[static_cast<std::size_t>(v)];
    }
  }
}

}  // namespace

LeafCentroid leaf_centroid(const UnrootedTree& t) {
  const int tips = t.tip_count();
  if (tips < 2) {
    throw std::domain_error("leaf_centroid requires at least 2 tips");
  }
  std::vector<int> sub, parent, order;
  tip_subtree_counts(t, sub, parent, order);

  LeafCentroid found{};
  int hits = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    // Components of t - v: one per child subtree, plus the rest above v.
    bool strict = true;
    int below = 0;
    for (int w : t.neighbors(v)) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      below += sub[static_cast<std::size_t>(w)];
      if (2 * sub[static_cast<std::size_t>(w)] >= tips) strict = false;
    }
    if (parent[static_cast<std::size_t>(v)] >= 0) {
      int above = tips - (is_tip(t, v) ? 1 : 0) - below;
      if (2 * above >= tips) strict = false;
    }
    if (strict) {
      found = LeafCentroid{LeafCentroid::Kind::Vertex, v, {-1, -1}};
      ++hits;
    }
  }
  if (tips % 2 == 0) {
    for (int v = 0; v < t.vertex_count(); ++v) {
      int up = parent[static_cast<std::size_t>(v)];
      if (up >= 0 && 2 * sub[static_cast<std::size_t>(v)] == tips) {
        found = LeafCentroid{LeafCentroid::Kind::Edge, -1, {up, v}};
        ++hits;
      }
    }
  }
  if (hits != 1) {
    throw std::logic_error("leaf centroid is not unique");
  }
  return found;
}

namespace {

RootedTree root_subtree(const UnrootedTree& t, int v, int parent) {
  std::vector<RootedTree> children;
  for (int w : t.neighbors(v)) {
    if (w != parent) children.push_back(root_subtree(t, w, v));
  }
  if (children.empty()) return RootedTree::leaf();
  return RootedTree::internal(std::move(children));
}

void append_branch(const RootedTree& branch, int attach_to, int& next_id,
                   std::vector<std::pair<int, int>>& edges) {
  int id = next_id++;
  edges.emplace_back(attach_to, id);
  for (const RootedTree& child : branch.children()) {
    append_branch(child, id, next_id, edges);
  }
}

UnrootedTree unrooted_from_branches(const std::vector<RootedTree>& branches) {
  std::vector<std::pair<int, int>> edges;
  int next_id = 1;
  for (const RootedTree& branch : branches) {
    append_branch(branch, 0, next_id, edges);
  }
  return UnrootedTree::from_edges(next_id, std::move(edges));
}

}  // namespace

std::string unrooted_canonical_code(const UnrootedTree& t) {
  if (t.tip_count() == 1) return "*";
  LeafCentroid c = leaf_centroid(t);
  if (c.kind == LeafCentroid::Kind::Vertex) {
    return root_subtree(t, c.vertex, -1).code();
  }
  // Virtual midpoint of the balanced edge; its two children are the halves.
  RootedTree half_a = root_subtree(t, c.edge.first, c.edge.second);
  RootedTree half_b = root_subtree(t, c.edge.second, c.edge.first);
  return RootedTree::internal({std::move(half_a), std::move(half_b)}).code();
}

std::vector<UnrootedTree> generate_unrooted(int n) {
  if (n < 1) throw std::domain_error("generate_unrooted requires n >= 1");
  if (n == 1) {
    std::vector<UnrootedTree> out;
    out.push_back(UnrootedTree::single_vertex());
    return out;
  }
  if (n == 2) {
    std::vector<UnrootedTree> out;
    out.push_back(UnrootedTree::from_edges(2, {{0, 1}}));
    return out;
  }
  // Every series-reduced tree with >= 3 tips has a vertex of degree >= 3,
  // so hanging every branch multiset off a hub reaches every class at
  // least once. Duplicates collapse on the canonical code.
  auto level = rooted_levels(n - 2);
  std::map<std::string, UnrootedTree, CodeOrder> classes;
  for (const Partition& p : partitions_of(n)) {
    if (p.size() < 3) continue;
    for_each_branch_multiset(p, level, [&](const std::vector<RootedTree>& branches) {
      UnrootedTree candidate = unrooted_from_branches(branches);
      classes.emplace(unrooted_canonical_code(candidate), std::move(candidate));
    });
  }
  std::vector<UnrootedTree> out;
  out.reserve(classes.size());
  for (auto& [code, tree] : classes) out.push_back(std::move(tree));
  return out;
}

std::string serialize(const RootedTree& t) { return t.code(); }

namespace {

RootedTree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) {
    throw ParseError("expected '*' or '(', got end of input", pos);
  }
  if (text[pos] == '*') {
    ++pos;
    return RootedTree::leaf();
  }
  if (text[pos] != '(') {
    throw ParseError(std::string("expected '*' or '(', got '") + text[pos] + "'", pos);
  }
  const std::size_t open = pos;
  ++pos;
  std::vector<RootedTree> children;
  while (pos < text.size() && text[pos] != ')') {
    children.push_back(parse_tree(text, pos));
  }
  if (pos >= text.size()) {
    throw ParseError("unbalanced '(': missing ')'", open);
  }
  if (children.size() < 2) {
    throw ParseError("internal vertex needs at least 2 children", open);
  }
  ++pos;  // consume ')'
  return RootedTree::internal(std::move(children));
}

}  // namespace

RootedTree parse(std::string_view text) {
  std::size_t pos = 0;
  RootedTree t = parse_tree(text, pos);
  if (pos != text.size()) {
    throw ParseError("trailing input after tree", pos);
  }
  return t;
}

}  // namespace cusptrees
