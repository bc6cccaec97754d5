#ifndef ORD_TESTS_HELPERS_HPP
#define ORD_TESTS_HELPERS_HPP

// Test-only oracles, independent of the library's comparison and
// enumeration code paths.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ord/cnf.hpp"
#include "ord/expr.hpp"

namespace ord_test {

inline ord::cnf c(const std::string& text) { return ord::parse_cnf(text); }

// all raw binary trees with at most max_nodes nodes
inline std::vector<ord::cnf_tree> all_raw_trees(std::size_t max_nodes) {
  std::vector<std::vector<ord::cnf_tree>> exact(max_nodes + 1);
  exact[0].push_back(ord::cnf_tree::leaf());
  for (std::size_t n = 1; n <= max_nodes; ++n)
    for (std::size_t i = 0; i + 1 <= n; ++i)
      for (const auto& e : exact[i])
        for (const auto& r : exact[n - 1 - i])
          exact[n].push_back(ord::cnf_tree::node(e, r));
  std::vector<ord::cnf_tree> all;
  for (auto& bucket : exact)
    for (auto& t : bucket) all.push_back(t);
  return all;
}

inline std::string tree_key(const ord::cnf_tree& t) {
  if (t.is_leaf()) return ".";
  return "(" + tree_key(t.exp()) + tree_key(t.rest()) + ")";
}

// The strict order on raw trees computed as the least relation closed
// under the three generating clauses:
//   0 < <a,b>;   a < c  ->  <a,b> < <c,d>;   b < d  ->  <a,b> < <a,d>.
// Computed by fixpoint iteration over the finite universe, which is
// closed under subtrees, so the result is the exact restriction.
class order_oracle {
 public:
  explicit order_oracle(std::size_t max_nodes) {
    for (const auto& t : all_raw_trees(max_nodes)) {
      std::string k = tree_key(t);
      if (!id_.count(k)) {
        id_[k] = trees_.size();
        trees_.push_back(t);
      }
    }
    const std::size_t n = trees_.size();
    lt_.assign(n * n, false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (lt_[a * n + b]) continue;
          bool derive = false;
          if (trees_[a].is_leaf() && !trees_[b].is_leaf()) derive = true;
          if (!trees_[a].is_leaf() && !trees_[b].is_leaf()) {
            std::size_t ae = idx(trees_[a].exp()), be = idx(trees_[b].exp());
            std::size_t ar = idx(trees_[a].rest()), br = idx(trees_[b].rest());
            if (lt_[ae * n + be]) derive = true;
            if (trees_[a].exp() == trees_[b].exp() && lt_[ar * n + br]) derive = true;
          }
          if (derive) {
            lt_[a * n + b] = true;
            changed = true;
          }
        }
      }
    }
  }

  bool lt(const ord::cnf_tree& a, const ord::cnf_tree& b) const {
    return lt_[idx(a) * trees_.size() + idx(b)];
  }
  bool lt(const ord::cnf& a, const ord::cnf& b) const { return lt(a.as_tree(), b.as_tree()); }

 private:
  std::size_t idx(const ord::cnf_tree& t) const { return id_.at(tree_key(t)); }
  std::map<std::string, std::size_t> id_;
  std::vector<ord::cnf_tree> trees_;
  std::vector<bool> lt_;
};

}  // namespace ord_test

#endif  // ORD_TESTS_HELPERS_HPP
