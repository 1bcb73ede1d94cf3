#include "geotree/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace geotree {

Tree::Tree(int k, const std::vector<std::pair<int, int>>& edges) {
  if (k < 1) throw std::invalid_argument("a tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != k - 1)
    throw std::invalid_argument("a tree on k vertices has k-1 edges");
  adjacency_.assign(k, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= k || v >= k)
      throw std::invalid_argument("tree edge references a missing vertex");
    if (u == v) throw std::invalid_argument("self-loop in tree");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("parallel edge in tree");
  }
  // k-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != k) throw std::invalid_argument("tree is not connected");
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Tree spider_tree(int n) {
  if (n < 2) throw std::invalid_argument("spider tree needs n >= 2");
  if (n == 2) return Tree(2, {{0, 1}});
  const int odd = n % 2 == 1 ? n : n - 1;
  std::vector<std::pair<int, int>> edges;
  for (int leg = 0; leg < (odd - 1) / 2; ++leg) {
    const int middle = 1 + 2 * leg;
    edges.emplace_back(0, middle);
    edges.emplace_back(middle, middle + 1);
  }
  if (n % 2 == 0) {
    edges.front() = {0, n - 1};
    edges.emplace_back(n - 1, 1);
  }
  return Tree(n, edges);
}

Tree path_tree(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Tree(k, edges);
}

Tree star_tree(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
  return Tree(k, edges);
}

RootedTree root_at(const Tree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::out_of_range("root vertex out of range");
  const int k = t.size();
  RootedTree rt;
  rt.tree = t;
  rt.root = v;
  rt.children.assign(k, {});
  rt.parent.assign(k, std::nullopt);
  rt.subtree_size.assign(k, 1);

  std::vector<int> order{v};
  std::vector<char> seen(k, 0);
  seen[v] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int u = order[i];
    for (int w : t.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      rt.parent[w] = u;
      rt.children[u].push_back(w);
      order.push_back(w);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (rt.parent[*it]) rt.subtree_size[*rt.parent[*it]] += rt.subtree_size[*it];
  return rt;
}

RootedTree sort_children_by_subtree_size(RootedTree rt, bool ascending) {
  for (auto& kids : rt.children) {
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      const int sa = rt.subtree_size[a], sb = rt.subtree_size[b];
      if (sa != sb) return ascending ? sa < sb : sa > sb;
      return a < b;
    });
  }
  return rt;
}

namespace {

std::string encode_rooted(const Tree& t, int v, int parent) {
  std::vector<std::string> codes;
  for (int w : t.neighbors(v))
    if (w != parent) codes.push_back(encode_rooted(t, w, v));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  out += ')';
  return out;
}

std::vector<int> centers(const Tree& t) {
  const int k = t.size();
  if (k <= 2) {
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> degree(k);
  std::vector<int> layer;
  for (int v = 0; v < k; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = k;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string ahu_canonical(const Tree& t) {
  std::string best;
  for (int c : centers(t)) {
    std::string code = encode_rooted(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Tree tree_from_canonical(const std::string& code) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> stack;
  int next = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      else if (next != 0) throw std::invalid_argument("canonical string has several roots");
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced canonical string");
      stack.pop_back();
    } else {
      throw std::invalid_argument("unexpected character in canonical string");
    }
  }
  if (!stack.empty() || next == 0) throw std::invalid_argument("unbalanced canonical string");
  return Tree(next, edges);
}

Tree tree_from_prufer(const std::vector<int>& sequence) {
  const int k = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(k, 1);
  for (int x : sequence) {
    if (x < 0 || x >= k) throw std::invalid_argument("Prufer entry out of range");
    ++degree[x];
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(k - 1);
  // Linear-time decoding: `leaf` is the smallest current leaf.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : sequence) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, k - 1);
  return Tree(k, edges);
}

std::vector<Tree> all_trees(int k) {
  if (k < 2 || k > kMaxEnumeratedTreeSize)
    throw std::invalid_argument("all_trees supports 2 <= k <= 10");
  if (k == 2) return {Tree(2, {{0, 1}})};

  // Every isomorphism class has a labeling whose leaves are 0..k-m-1 and
  // whose m internal vertices are k-m..k-1. Its Prufer sequence is then
  // surjective onto the internal labels, so enumerating only those sequences
  // reaches every class.
  std::set<std::string> classes;
  const int len = k - 2;
  std::vector<int> seq(len);
  for (int m = 1; m <= len; ++m) {
    const int low = k - m;
    std::vector<int> uses(m, 0);
    std::function<void(int, int)> fill = [&](int pos, int missing) {
      if (len - pos < missing) return;
      if (pos == len) {
        classes.insert(ahu_canonical(tree_from_prufer(seq)));
        return;
      }
      for (int x = 0; x < m; ++x) {
        seq[pos] = low + x;
        const int now_missing = missing - (uses[x] == 0 ? 1 : 0);
        ++uses[x];
        fill(pos + 1, now_missing);
        --uses[x];
      }
    };
    fill(0, m);
  }
  std::vector<Tree> out;
  out.reserve(classes.size());
  for (const auto& code : classes) out.push_back(tree_from_canonical(code));
  return out;
}

}  // namespace geotree
