#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cusptrees {

// Canonical codes are text over { '(', '*', ')' }: a leaf is "*", an
// internal vertex wraps its children's codes, sorted, in parentheses.
// The fixed character order for all code comparisons is '(' < '*' < ')'.
bool code_less(std::string_view a, std::string_view b);

struct CodeOrder {
  bool operator()(std::string_view a, std::string_view b) const {
    return code_less(a, b);
  }
};

// Rooted series-reduced tree: a leaf, or >= 2 children. Children are
// normalized into canonical-code order at construction, so equal codes
// mean isomorphic trees.
class RootedTree {
 public:
  static RootedTree leaf();
  static RootedTree internal(std::vector<RootedTree> children);

  bool is_leaf() const noexcept { return children_.empty(); }
  const std::vector<RootedTree>& children() const noexcept { return children_; }
  int leaf_count() const noexcept { return leaf_count_; }
  const std::string& code() const noexcept { return code_; }

  bool operator==(const RootedTree& other) const { return code_ == other.code_; }

 private:
  RootedTree() = default;

  std::vector<RootedTree> children_;
  std::string code_ = "*";
  int leaf_count_ = 1;
};

const std::string& canonical_code(const RootedTree& t);

// One representative per isomorphism class of rooted series-reduced trees
// with n leaves, sorted by canonical code. Practical up to about n = 10;
// the class counts grow exponentially.
std::vector<RootedTree> generate_rooted(int n);

// Tree with no degree-2 vertices, the reduced representative of a
// homeomorphism class. Tips are the vertices of degree <= 1; the
// single-vertex tree counts as one tip.
class UnrootedTree {
 public:
  static UnrootedTree single_vertex();
  static UnrootedTree from_edges(int vertex_count,
                                 std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int tip_count() const noexcept { return tip_count_; }

 private:
  UnrootedTree() = default;

  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  int tip_count_ = 0;
};

// Leaf-centroid of a tree with n >= 2 tips: either the unique vertex whose
// removal leaves components with < n/2 tips each, or the unique edge
// splitting the tips exactly n/2 - n/2. Exactly one of the two exists.
struct LeafCentroid {
  enum class Kind { Vertex, Edge };
  Kind kind;
  int vertex = -1;               // valid when kind == Vertex
  std::pair<int, int> edge{-1, -1};  // valid when kind == Edge
};

LeafCentroid leaf_centroid(const UnrootedTree& t);

// Code of the tree rooted at its leaf-centroid; for a centroid edge the
// two halves become the children of a virtual midpoint. Equal codes mean
// homeomorphic trees.
std::string unrooted_canonical_code(const UnrootedTree& t);

// One representative per homeomorphism class of trees with n tips, sorted
// by canonical code. Candidates are built from every branch multiset around
// a hub vertex and deduplicated by code. Practical up to about n = 10.
std::vector<UnrootedTree> generate_unrooted(int n);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Tree text format: tree := "*" | "(" tree tree tree* ")". serialize emits
// the canonical code; parse accepts any order and re-canonicalizes, and
// rejects single-child nodes, unbalanced parentheses and trailing input
// with a positioned ParseError.
std::string serialize(const RootedTree& t);
RootedTree parse(std::string_view text);

}  // namespace cusptrees
