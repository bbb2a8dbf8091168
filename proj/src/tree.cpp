#include "bona/tree.hpp"

#include <algorithm>
#include <utility>

#include "bona/errors.hpp"

namespace bona {

namespace {

using Node = ZeroOneTree::Node;
using NodePtr = ZeroOneTree::NodePtr;

NodePtr make_node(NodePtr left, std::optional<int> label, NodePtr right) {
  auto n = std::make_shared<Node>();
  n->left = std::move(left);
  n->right = std::move(right);
  n->label = label;
  return n;
}

void validate(const NodePtr& node) {
  if (!node) return;
  const bool two = node->left && node->right;
  if (two && !node->label) {
    throw DomainError("two-child vertex is missing its 0/1 label");
  }
  if (!two && node->label) {
    throw DomainError("vertex with at most one child must not carry a label");
  }
  if (node->label && *node->label != 0 && *node->label != 1) {
    throw DomainError("vertex label must be 0 or 1");
  }
  validate(node->left);
  validate(node->right);
}

bool equal_nodes(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->label == b->label && equal_nodes(a->left, b->left) &&
         equal_nodes(a->right, b->right);
}

void collect_stats(const NodePtr& node, TreeStats& s) {
  if (!node) return;
  ++s.vertices;
  if (node->left && node->right) ++s.labeled_vertices;
  if (node->left) {
    ++s.left_edges;
    collect_stats(node->left, s);
  }
  if (node->right) {
    ++s.right_edges;
    collect_stats(node->right, s);
  }
}

// Index-based mirror of a tree used by the order-sensitive operations.
// Entry 0 is the root; children precede nothing in particular, but the
// preorder position doubles as the left-to-right tiebreak within a level.
struct FlatNode {
  NodePtr node;
  int left = -1;
  int right = -1;
  std::optional<int> label;
  int depth = 0;
};

int flatten_into(const NodePtr& node, int depth, std::vector<FlatNode>& out) {
  const int me = static_cast<int>(out.size());
  out.push_back({node, -1, -1, node->label, depth});
  if (node->left) out[static_cast<std::size_t>(me)].left = flatten_into(node->left, depth + 1, out);
  if (node->right) out[static_cast<std::size_t>(me)].right = flatten_into(node->right, depth + 1, out);
  return me;
}

std::vector<FlatNode> flatten(const ZeroOneTree& t) {
  std::vector<FlatNode> out;
  flatten_into(t.root(), 0, out);
  return out;
}

// Indices into the flat array, deepest level first, preorder (= left to
// right) within a level.
std::vector<int> reading_order(const std::vector<FlatNode>& flat) {
  std::vector<int> order(flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&flat](int a, int b) {
    return flat[static_cast<std::size_t>(a)].depth >
           flat[static_cast<std::size_t>(b)].depth;
  });
  return order;
}

NodePtr rebuild(const std::vector<FlatNode>& flat, int idx) {
  if (idx < 0) return nullptr;
  const FlatNode& f = flat[static_cast<std::size_t>(idx)];
  return make_node(rebuild(flat, f.left), f.label, rebuild(flat, f.right));
}

// Balance step contributed by one vertex once its children are present:
// +1 per left edge down, -1 per right edge down.
int balance_step(const FlatNode& f) {
  return (f.left >= 0 ? 1 : 0) - (f.right >= 0 ? 1 : 0);
}

// Core of both injection directions: find the shortest reading-order
// prefix with the wanted balance and flip the one-child vertices in it.
std::optional<ZeroOneTree> flip_at_balance(const ZeroOneTree& t, int wanted) {
  std::vector<FlatNode> flat = flatten(t);
  const std::vector<int> order = reading_order(flat);
  int balance = 0;
  int prefix = -1;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    balance += balance_step(flat[static_cast<std::size_t>(order[pos])]);
    if (balance == wanted) {
      prefix = static_cast<int>(pos) + 1;
      break;
    }
  }
  if (prefix < 0) return std::nullopt;
  for (int pos = 0; pos < prefix; ++pos) {
    FlatNode& f = flat[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])];
    if ((f.left >= 0) != (f.right >= 0)) std::swap(f.left, f.right);
  }
  return ZeroOneTree(rebuild(flat, 0));
}

void generate(int n, const std::function<void(const NodePtr&)>& emit) {
  if (n == 1) {
    emit(make_node(nullptr, std::nullopt, nullptr));
    return;
  }
  for (int left_size = 0; left_size <= n - 1; ++left_size) {
    const int right_size = n - 1 - left_size;
    if (left_size == 0) {
      generate(right_size, [&emit](const NodePtr& r) {
        emit(make_node(nullptr, std::nullopt, r));
      });
    } else if (right_size == 0) {
      generate(left_size, [&emit](const NodePtr& l) {
        emit(make_node(l, std::nullopt, nullptr));
      });
    } else {
      generate(left_size, [&emit, right_size](const NodePtr& l) {
        generate(right_size, [&emit, &l](const NodePtr& r) {
          emit(make_node(l, 0, r));
          emit(make_node(l, 1, r));
        });
      });
    }
  }
}

NodePtr flip_single_children(const NodePtr& node) {
  if (!node) return nullptr;
  NodePtr l = flip_single_children(node->left);
  NodePtr r = flip_single_children(node->right);
  if (l && r) return make_node(std::move(l), node->label, std::move(r));
  if (l) return make_node(nullptr, std::nullopt, std::move(l));
  if (r) return make_node(std::move(r), std::nullopt, nullptr);
  return make_node(nullptr, std::nullopt, nullptr);
}

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r')) {
      ++pos;
    }
  }

  bool try_consume(const std::string& token) {
    skip_ws();
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("tree syntax error at byte " + std::to_string(pos) +
                      ": " + what);
  }

  NodePtr parse_node() {
    if (try_consume("\xe2\x80\xa2")) {  // the leaf bullet
      return make_node(nullptr, std::nullopt, nullptr);
    }
    if (!try_consume("(")) fail("expected a leaf or '('");
    if (try_consume("_")) {
      NodePtr right = parse_node();
      if (!try_consume(")")) fail("expected ')'");
      return make_node(nullptr, std::nullopt, std::move(right));
    }
    NodePtr left = parse_node();
    if (try_consume("_")) {
      if (!try_consume(")")) fail("expected ')'");
      return make_node(std::move(left), std::nullopt, nullptr);
    }
    std::optional<int> label;
    if (try_consume("0")) {
      label = 0;
    } else if (try_consume("1")) {
      label = 1;
    } else {
      fail("expected '_', '0' or '1' after the left subtree");
    }
    NodePtr right = parse_node();
    if (!try_consume(")")) fail("expected ')'");
    return make_node(std::move(left), label, std::move(right));
  }
};

void render(const NodePtr& node, std::string& out) {
  if (!node->left && !node->right) {
    out += "\xe2\x80\xa2";
    return;
  }
  out += "(";
  if (node->left) {
    render(node->left, out);
  } else {
    out += "_";
  }
  out += " ";
  if (node->label) {
    out += (*node->label == 0) ? "0 " : "1 ";
  }
  if (node->right) {
    render(node->right, out);
  } else {
    out += "_";
  }
  out += ")";
}

}  // namespace

ZeroOneTree::ZeroOneTree(NodePtr root) : root_(std::move(root)) {
  if (!root_) throw DomainError("a tree needs at least its root vertex");
  validate(root_);
}

ZeroOneTree ZeroOneTree::leaf() {
  return ZeroOneTree(make_node(nullptr, std::nullopt, nullptr));
}

ZeroOneTree ZeroOneTree::with_left(const ZeroOneTree& child) {
  return ZeroOneTree(make_node(child.root(), std::nullopt, nullptr));
}

ZeroOneTree ZeroOneTree::with_right(const ZeroOneTree& child) {
  return ZeroOneTree(make_node(nullptr, std::nullopt, child.root()));
}

ZeroOneTree ZeroOneTree::with_children(const ZeroOneTree& left, int label,
                                       const ZeroOneTree& right) {
  return ZeroOneTree(make_node(left.root(), label, right.root()));
}

bool operator==(const ZeroOneTree& a, const ZeroOneTree& b) {
  return equal_nodes(a.root(), b.root());
}

TreeStats stats(const ZeroOneTree& t) {
  TreeStats s;
  collect_stats(t.root(), s);
  return s;
}

std::string to_string(const ZeroOneTree& t) {
  std::string out;
  render(t.root(), out);
  return out;
}

ZeroOneTree parse_tree(const std::string& text) {
  Parser p{text};
  NodePtr root = p.parse_node();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return ZeroOneTree(std::move(root));
}

void for_each_tree(int n, const std::function<void(const ZeroOneTree&)>& visit) {
  if (n < 1) throw DomainError("trees need at least one vertex");
  if (n > max_enumeration_vertices) {
    throw SizeError("exhaustive enumeration is capped at " +
                    std::to_string(max_enumeration_vertices) +
                    " vertices, got " + std::to_string(n));
  }
  generate(n, [&visit](const NodePtr& root) { visit(ZeroOneTree(root)); });
}

std::vector<ZeroOneTree> enumerate_trees(int n) {
  std::vector<ZeroOneTree> out;
  for_each_tree(n, [&out](const ZeroOneTree& t) { out.push_back(t); });
  return out;
}

ZeroOneTree involution_f(const ZeroOneTree& t) {
  return ZeroOneTree(flip_single_children(t.root()));
}

std::vector<const ZeroOneTree::Node*> total_order(const ZeroOneTree& t) {
  const std::vector<FlatNode> flat = flatten(t);
  std::vector<const Node*> out;
  out.reserve(flat.size());
  for (const int idx : reading_order(flat)) {
    out.push_back(flat[static_cast<std::size_t>(idx)].node.get());
  }
  return out;
}

PrefixForest prefix_forest(const ZeroOneTree& t, int count) {
  const std::vector<FlatNode> flat = flatten(t);
  const int n = static_cast<int>(flat.size());
  if (count < 1 || count > n) {
    throw DomainError("prefix size must be between 1 and the vertex count");
  }
  const std::vector<int> order = reading_order(flat);
  std::vector<bool> selected(flat.size(), false);
  std::vector<int> position(flat.size(), 0);
  for (int pos = 0; pos < n; ++pos) {
    position[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    if (pos < count) selected[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = true;
  }
  // The prefix is downward closed (children are deeper, hence earlier),
  // so a selected vertex whose parent is unselected roots a component
  // that is the entire subtree below it.
  std::vector<bool> has_selected_parent(flat.size(), false);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (!selected[i]) continue;
    for (const int child : {flat[i].left, flat[i].right}) {
      if (child >= 0) {
        if (!selected[static_cast<std::size_t>(child)]) {
          throw ExactnessError("reading-order prefix was not downward closed");
        }
        has_selected_parent[static_cast<std::size_t>(child)] = true;
      }
    }
  }
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    if (selected[static_cast<std::size_t>(i)] && !has_selected_parent[static_cast<std::size_t>(i)]) {
      roots.push_back(i);
    }
  }
  std::sort(roots.begin(), roots.end(), [&position](int a, int b) {
    return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
  });
  PrefixForest forest;
  forest.member_count = count;
  for (const int r : roots) {
    forest.components.push_back(ZeroOneTree(flat[static_cast<std::size_t>(r)].node));
  }
  return forest;
}

std::vector<int> prefix_balance(const ZeroOneTree& t) {
  const std::vector<FlatNode> flat = flatten(t);
  std::vector<int> out;
  out.reserve(flat.size());
  int balance = 0;
  for (const int idx : reading_order(flat)) {
    balance += balance_step(flat[static_cast<std::size_t>(idx)]);
    out.push_back(balance);
  }
  return out;
}

ZeroOneTree injection_z(const ZeroOneTree& t) {
  const TreeStats s = stats(t);
  if (2 * s.right_edges > s.vertices - 3) {
    throw DomainError("injection needs right edges <= (n-3)/2, got " +
                      std::to_string(s.right_edges) + " of " +
                      std::to_string(s.vertices - 1) + " edges");
  }
  // The final balance is n-1-2r >= 2 and each step moves it by at most 1
  // from 0, so a prefix with balance exactly +1 exists.
  auto flipped = flip_at_balance(t, +1);
  if (!flipped) {
    throw ExactnessError("no prefix with balance +1 despite the size bound");
  }
  return *flipped;
}

std::optional<ZeroOneTree> injection_z_inverse(const ZeroOneTree& t) {
  return flip_at_balance(t, -1);
}

Triangle enumeration_triangle(int n_max) {
  if (n_max < 1) throw DomainError("triangle needs n_max >= 1");
  if (n_max > max_enumeration_vertices) {
    // Fail before burning minutes on the rows below the cap.
    throw SizeError("exhaustive enumeration is capped at " +
                    std::to_string(max_enumeration_vertices) +
                    " vertices, got " + std::to_string(n_max));
  }
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    auto& row = rows[static_cast<std::size_t>(n - 1)];
    row.assign(static_cast<std::size_t>(n), BigInt(0));
    for_each_tree(n, [&row](const ZeroOneTree& t) {
      ++row[static_cast<std::size_t>(stats(t).right_edges)];
    });
  }
  return Triangle(std::move(rows));
}

}  // namespace bona
