#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bona/numbers.hpp"

namespace bona {

// A rooted plane binary tree in which every vertex with two children
// carries a 0/1 label and vertices with at most one child carry none.
// Immutable value type; copies share structure.
class ZeroOneTree {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    NodePtr left;
    NodePtr right;
    std::optional<int> label;  // present exactly when both children are
  };

  // Validates the labeling rule on the whole subtree; throws DomainError.
  explicit ZeroOneTree(NodePtr root);

  static ZeroOneTree leaf();
  static ZeroOneTree with_left(const ZeroOneTree& child);
  static ZeroOneTree with_right(const ZeroOneTree& child);
  static ZeroOneTree with_children(const ZeroOneTree& left, int label,
                                   const ZeroOneTree& right);

  const NodePtr& root() const { return root_; }

 private:
  NodePtr root_;
};

bool operator==(const ZeroOneTree& a, const ZeroOneTree& b);
inline bool operator!=(const ZeroOneTree& a, const ZeroOneTree& b) {
  return !(a == b);
}

struct TreeStats {
  int vertices = 0;
  int left_edges = 0;
  int right_edges = 0;
  int labeled_vertices = 0;  // vertices with two children
};

TreeStats stats(const ZeroOneTree& t);

// Canonical text form: a leaf is "•", a one-child vertex shows "_" on the
// missing side, a two-child vertex shows its label between the subtrees.
//   (• _)     root with a left leaf
//   (_ •)     root with a right leaf
//   (• 1 •)   root labeled 1 with two leaves
std::string to_string(const ZeroOneTree& t);

// Inverse of to_string; whitespace between tokens is flexible. Throws
// DomainError on malformed input.
ZeroOneTree parse_tree(const std::string& text);

// Exhaustive generation is capped here; beyond it the cost is no longer
// interactive (the counts grow by a factor of about 4.8 per vertex).
inline constexpr int max_enumeration_vertices = 14;

// Visits every tree on n vertices exactly once, in a deterministic order:
// by left-subtree size ascending, then recursively, with label 0 before
// label 1. Throws DomainError for n < 1, SizeError beyond the cap.
void for_each_tree(int n, const std::function<void(const ZeroOneTree&)>& visit);

std::vector<ZeroOneTree> enumerate_trees(int n);

// Depth-and-label-preserving involution: every vertex with exactly one
// child hands its subtree to the other side.
ZeroOneTree involution_f(const ZeroOneTree& t);

// The reading order used by the prefix constructions: vertices of the
// deepest level first, each level left to right, so the root comes last.
// Pointers stay valid as long as the tree is alive.
std::vector<const ZeroOneTree::Node*> total_order(const ZeroOneTree& t);

// The forest induced by the first `count` vertices of the reading order.
// That vertex set is closed downward, so every component is a complete
// subtree of t and in particular a valid tree on its own. Components are
// listed by the reading-order position of their root.
struct PrefixForest {
  std::vector<ZeroOneTree> components;
  int member_count = 0;
};

PrefixForest prefix_forest(const ZeroOneTree& t, int count);

// Balance profile d(j) = (left edges) - (right edges) of the forest
// induced by the first j vertices, for j = 1..n. Consecutive entries
// differ by at most 1.
std::vector<int> prefix_balance(const ZeroOneTree& t);

// Maps a tree with r right edges to one with r+1 right edges by flipping
// the one-child vertices in the shortest prefix whose balance is +1; the
// construction is injective. Requires r <= (n-3)/2, i.e. the tree sits in
// the strictly-left half of its row; throws DomainError otherwise.
ZeroOneTree injection_z(const ZeroOneTree& t);

// Left inverse: finds the shortest prefix with balance -1 and flips it
// back. Empty when the tree is outside the image of injection_z.
std::optional<ZeroOneTree> injection_z_inverse(const ZeroOneTree& t);

// Right-edge histograms of all trees on 1..n_max vertices, as a triangle:
// entry (n, k) counts trees on n vertices with k-1 right edges. This is
// the brute-force counterpart of the closed-form triangles.
Triangle enumeration_triangle(int n_max);

}  // namespace bona
