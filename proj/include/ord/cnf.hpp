#ifndef ORD_CNF_HPP
#define ORD_CNF_HPP

// Cantor normal forms as binary trees.
//
// An ordinal below epsilon_0 is represented by an unlabeled binary tree:
// the empty tree is 0, and node(e, r) stands for w^e + r.  A tree is in
// normal form when, hereditarily, the left subtree of every rest is at
// most the exponent next to it; cnf values maintain that invariant by
// construction, cnf_tree values are raw and go through validate().
//
// All values are immutable and structurally shared; every operation here
// is pure and safe to call from multiple threads.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ord/errors.hpp"

namespace ord {

namespace detail {

struct cnf_node;
using cnf_ptr = std::shared_ptr<const cnf_node>;

struct cnf_node {
  cnf_ptr exp;
  cnf_ptr rest;

  cnf_node(cnf_ptr e, cnf_ptr r) : exp(std::move(e)), rest(std::move(r)) {}

  // Unary naturals make very deep rest spines; dismantle children
  // iteratively so the implicit shared_ptr recursion stays shallow.
  ~cnf_node() {
    std::vector<cnf_ptr> pending;
    auto grab = [&pending](cnf_ptr& p) {
      if (p && p.use_count() == 1) pending.push_back(std::move(p));
      p.reset();
    };
    grab(exp);
    grab(rest);
    while (!pending.empty()) {
      cnf_ptr p = std::move(pending.back());
      pending.pop_back();
      auto* m = const_cast<cnf_node*>(p.get());
      grab(m->exp);
      grab(m->rest);
    }
  }
};

inline cnf_ptr make_node(cnf_ptr e, cnf_ptr r) {
  return std::make_shared<cnf_node>(std::move(e), std::move(r));
}

// Hereditary lexicographic order on raw trees.  The rest spine is walked
// iteratively; recursion depth is bounded by exponent nesting only.
inline std::strong_ordering compare_ptr(const cnf_node* a, const cnf_node* b) {
  while (true) {
    if (a == b) return std::strong_ordering::equal;  // shared subtree
    if (!a) return std::strong_ordering::less;
    if (!b) return std::strong_ordering::greater;
    auto c = compare_ptr(a->exp.get(), b->exp.get());
    if (c != std::strong_ordering::equal) return c;
    a = a->rest.get();
    b = b->rest.get();
  }
}

inline std::size_t count_nodes(const cnf_node* t) {
  std::size_t n = 0;
  while (t) {
    n += 1 + count_nodes(t->exp.get());
    t = t->rest.get();
  }
  return n;
}

}  // namespace detail

class cnf_tree;
class cnf_class;
class cnf;
struct divmod_result;

cnf validate(const cnf_tree& t);
cnf add(const cnf& a, const cnf& b);
cnf mul(const cnf& a, const cnf& b);
cnf omega_pow(const cnf& a);
cnf sub(const cnf& x, const cnf& y);
divmod_result divmod(const cnf& a, const cnf& b);
cnf nat(std::uint64_t n);
cnf fund_at(const cnf& a, std::uint64_t i);
cnf_class classify(const cnf& a);
std::optional<std::uint64_t> as_natural(const cnf& a);
std::pair<cnf, std::uint64_t> split_trailing_nat(const cnf& a);
std::vector<cnf> enumerate(std::size_t max_nodes, std::size_t cap);

// Raw, possibly non-normal binary tree: parser/validator input only.
class cnf_tree {
 public:
  cnf_tree() = default;  // the tree 0

  static cnf_tree leaf() { return cnf_tree(); }
  static cnf_tree node(const cnf_tree& exp, const cnf_tree& rest) {
    return cnf_tree(detail::make_node(exp.root_, rest.root_));
  }

  bool is_leaf() const noexcept { return !root_; }
  cnf_tree exp() const { return cnf_tree(root_ ? root_->exp : nullptr); }
  cnf_tree rest() const { return cnf_tree(root_ ? root_->rest : nullptr); }
  // left subtree if there is one, 0 otherwise
  cnf_tree left() const { return exp(); }

  std::size_t node_count() const { return detail::count_nodes(root_.get()); }

  friend bool operator==(const cnf_tree& a, const cnf_tree& b) {
    return detail::compare_ptr(a.root_.get(), b.root_.get()) == std::strong_ordering::equal;
  }

 private:
  explicit cnf_tree(detail::cnf_ptr p) : root_(std::move(p)) {}
  detail::cnf_ptr root_;
  friend class cnf;
  friend cnf validate(const cnf_tree& t);
};

// A tree in Cantor normal form.  Only validate() and the arithmetic
// operations construct these, so the hereditary left(rest) <= exp
// invariant holds for every reachable value.
class cnf {
 public:
  cnf() = default;  // 0

  bool is_leaf() const noexcept { return !root_; }
  bool is_zero() const noexcept { return !root_; }

  cnf exp() const { return cnf(root_ ? root_->exp : nullptr); }
  cnf rest() const { return cnf(root_ ? root_->rest : nullptr); }
  cnf left() const { return exp(); }

  cnf_tree as_tree() const { return cnf_tree(root_); }
  std::size_t node_count() const { return detail::count_nodes(root_.get()); }

  // Debug hook: re-checks the normal-form invariant, throws not_normal_error.
  void revalidate() const;

  friend std::strong_ordering compare(const cnf& a, const cnf& b) {
    return detail::compare_ptr(a.root_.get(), b.root_.get());
  }
  friend bool operator==(const cnf& a, const cnf& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

 private:
  explicit cnf(detail::cnf_ptr p) : root_(std::move(p)) {}
  detail::cnf_ptr root_;

  const detail::cnf_node* node() const noexcept { return root_.get(); }

  // trusted constructor for operations that preserve normality
  static cnf unchecked(detail::cnf_ptr p) { return cnf(std::move(p)); }

  friend cnf validate(const cnf_tree& t);
  friend cnf add(const cnf& a, const cnf& b);
  friend cnf mul(const cnf& a, const cnf& b);
  friend cnf omega_pow(const cnf& a);
  friend cnf sub(const cnf& x, const cnf& y);
  friend divmod_result divmod(const cnf& a, const cnf& b);
  friend cnf nat(std::uint64_t n);
  friend cnf fund_at(const cnf& a, std::uint64_t i);
  friend std::optional<std::uint64_t> as_natural(const cnf& a);
  friend std::pair<cnf, std::uint64_t> split_trailing_nat(const cnf& a);
  friend std::vector<cnf> enumerate(std::size_t max_nodes, std::size_t cap);
};

std::strong_ordering compare(const cnf& a, const cnf& b);  // usable as ord::compare

inline bool is_zero(const cnf& a) noexcept { return a.is_zero(); }

// Wraps t as a cnf iff every contained node satisfies left(rest) <= exp;
// otherwise throws not_normal_error naming the offending node by its
// '0'/'1' path from the root.
inline cnf validate(const cnf_tree& t) {
  std::function<void(const detail::cnf_node*, std::string&)> walk =
      [&](const detail::cnf_node* n, std::string& path) {
        std::size_t spine_steps = 0;
        while (n) {
          const detail::cnf_node* l = n->rest ? n->rest->exp.get() : nullptr;
          if (detail::compare_ptr(l, n->exp.get()) == std::strong_ordering::greater)
            throw not_normal_error(path);
          path.push_back('0');
          walk(n->exp.get(), path);
          path.back() = '1';
          ++spine_steps;
          n = n->rest.get();
        }
        path.resize(path.size() - spine_steps);
      };
  std::string path;
  walk(t.root_.get(), path);
  return cnf::unchecked(t.root_);
}

inline void cnf::revalidate() const { (void)validate(as_tree()); }

// Natural-number embedding eta: a right spine of n node(0, .) cells.
// Built iteratively; structurally identical to n-fold add(., 1) from 0.
inline cnf nat(std::uint64_t n) {
  detail::cnf_ptr r;
  for (std::uint64_t i = 0; i < n; ++i) r = detail::make_node(nullptr, std::move(r));
  return cnf::unchecked(std::move(r));
}

// Some(n) iff the tree is the pure natural eta(n).
inline std::optional<std::uint64_t> as_natural(const cnf& a) {
  std::uint64_t n = 0;
  for (const detail::cnf_node* t = a.node(); t; t = t->rest.get()) {
    if (t->exp) return std::nullopt;
    ++n;
  }
  return n;
}

// Splits a as b + k where k is the trailing run of w^0 terms;
// b has no trailing natural part.
inline std::pair<cnf, std::uint64_t> split_trailing_nat(const cnf& a) {
  // exponents are non-increasing along the spine, so the w^0 terms
  // form a suffix starting at the first leaf exponent
  std::vector<const detail::cnf_node*> prefix;
  const detail::cnf_node* t = a.node();
  while (t && t->exp) {
    prefix.push_back(t);
    t = t->rest.get();
  }
  std::uint64_t k = 0;
  for (; t; t = t->rest.get()) ++k;
  if (k == 0) return {a, 0};
  detail::cnf_ptr b;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    b = detail::make_node((*it)->exp, std::move(b));
  return {cnf::unchecked(std::move(b)), k};
}

// Addition per the three defining clauses: leading terms of a whose
// exponent is at least the leading exponent of b survive, the remainder
// of a is absorbed.  Executed as a loop over a's rest spine.
inline cnf add(const cnf& a, const cnf& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const detail::cnf_node* lead_b = b.node();
  std::vector<const detail::cnf_node*> kept;
  for (const detail::cnf_node* t = a.node(); t; t = t->rest.get()) {
    if (detail::compare_ptr(t->exp.get(), lead_b->exp.get()) == std::strong_ordering::less)
      break;  // the rest of a is absorbed by b
    kept.push_back(t);
  }
  detail::cnf_ptr r = b.root_;
  for (auto it = kept.rbegin(); it != kept.rend(); ++it)
    r = detail::make_node((*it)->exp, std::move(r));
  return cnf::unchecked(std::move(r));
}

inline cnf succ(const cnf& a) { return add(a, nat(1)); }

// w^a as a tree is node(a, 0); always a normal form.
inline cnf omega_pow(const cnf& a) {
  return cnf::unchecked(detail::make_node(a.root_, nullptr));
}

// Multiplication.  Walks the right argument's terms once: a term w^e of b
// with e /= 0 contributes one copy of w^(a.exp + e); the trailing natural
// k of b contributes a taken k times, which collapses to k copies of a's
// leading run followed by a's tail.  Term for term this matches the
// defining recursion, but runs as a loop, linear in the output size.
inline cnf mul(const cnf& a, const cnf& b) {
  if (a.is_zero() || b.is_zero()) return cnf();
  struct run {
    detail::cnf_ptr exp;
    std::uint64_t copies;
  };
  std::vector<run> out;
  const cnf a_exp = a.exp();
  const detail::cnf_node* t = b.node();
  while (t && t->exp) {
    // batch maximal runs of equal exponents in b
    const detail::cnf_node* e = t->exp.get();
    std::uint64_t reps = 0;
    while (t && t->exp &&
           detail::compare_ptr(t->exp.get(), e) == std::strong_ordering::equal) {
      ++reps;
      t = t->rest.get();
    }
    cnf e_cnf = cnf::unchecked(detail::cnf_ptr(b.root_, e));  // aliased subtree
    out.push_back({add(a_exp, e_cnf).root_, reps});
  }
  detail::cnf_ptr tail;
  if (t) {
    // trailing natural k of b
    std::uint64_t k = 0;
    for (const detail::cnf_node* u = t; u; u = u->rest.get()) ++k;
    std::uint64_t m = 0;  // length of a's leading run
    const detail::cnf_node* u = a.node();
    while (u && detail::compare_ptr(u->exp.get(), a.node()->exp.get()) ==
                    std::strong_ordering::equal) {
      ++m;
      u = u->rest.get();
    }
    out.push_back({a.root_->exp, m * k});
    if (u) tail = detail::cnf_ptr(a.root_, u);  // a's tail, aliased
  }
  detail::cnf_ptr r = std::move(tail);
  for (auto it = out.rbegin(); it != out.rend(); ++it)
    for (std::uint64_t i = 0; i < it->copies; ++i)
      r = detail::make_node(it->exp, std::move(r));
  return cnf::unchecked(std::move(r));
}

// x - y per the three-case recursion; requires y <= x.
inline cnf sub(const cnf& x, const cnf& y) {
  if (compare(y, x) == std::strong_ordering::greater) throw underflow_error();
  const detail::cnf_node* a = x.node();
  const detail::cnf_node* b = y.node();
  while (true) {
    if (!b) return a ? cnf::unchecked(detail::cnf_ptr(x.root_, a)) : cnf();
    if (!a) return cnf();
    auto c = detail::compare_ptr(a->exp.get(), b->exp.get());
    if (c == std::strong_ordering::less) return cnf();
    if (c == std::strong_ordering::greater)
      return cnf::unchecked(detail::cnf_ptr(x.root_, a));
    a = a->rest.get();
    b = b->rest.get();
  }
}

struct divmod_result {
  cnf quot;
  cnf rem;
};

// Euclidean division: a = b*q + r with r < b, following the case analysis
// of the subtraction/division lemma.  The quotient is assembled from a
// worklist so the recursion over a's rest spine becomes a loop.
inline divmod_result divmod(const cnf& a, const cnf& b) {
  if (b.is_zero()) throw division_by_zero_error();
  struct step {
    detail::cnf_ptr exp;  // set: q = node(exp, q); unset: q = q + ones
    std::uint64_t ones = 0;
  };
  std::vector<step> steps;
  cnf cur = a;
  cnf q, r;
  while (true) {
    auto c = compare(cur, b);
    if (c == std::strong_ordering::less) {
      r = cur;  // q stays 0
      break;
    }
    if (c == std::strong_ordering::equal) {
      q = nat(1);
      break;
    }
    auto ce = compare(cur.exp(), b.exp());
    if (ce == std::strong_ordering::greater) {
      steps.push_back({sub(cur.exp(), b.exp()).root_, 0});
      cur = cur.rest();
    } else {
      // exponents equal (less would contradict cur > b)
      if (!steps.empty() && !steps.back().exp)
        ++steps.back().ones;
      else
        steps.push_back({nullptr, 1});
      cur = sub(cur.rest(), b.rest());
    }
  }
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->exp)
      q = cnf::unchecked(detail::make_node(it->exp, q.root_));
    else
      q = add(q, nat(it->ones));
  }
#ifdef ORD_CNF_PARANOID
  q.revalidate();
  r.revalidate();
#endif
  return {q, r};
}

// --- classification ---------------------------------------------------

enum class cnf_kind { zero, successor, limit };

// Fundamental sequence of a limit CNF at index i, by the three cases of
// the classification lemma:
//   (i)   <c+1, 0>      |-> w^c * i
//   (ii)  <a, 0>, a lim |-> w^(fund(a, i))
//   (iii) <a, b>, b lim |-> <a, fund(b, i)>
// Indexing starts at 0, so case (i) yields fund(0) = 0.
inline cnf fund_at(const cnf& a, std::uint64_t i) {
  if (a.is_zero()) throw not_a_limit_error();
  if (a.rest().is_zero()) {
    const cnf e = a.exp();
    if (e.is_zero()) throw not_a_limit_error();  // a = 1 is a successor
    auto [head, k] = split_trailing_nat(e);
    if (k > 0) {
      cnf c = add(head, nat(k - 1));  // e = c + 1
      return mul(omega_pow(c), nat(i));
    }
    return omega_pow(fund_at(e, i));
  }
  cnf tail = fund_at(a.rest(), i);
  cnf out = cnf::unchecked(detail::make_node(a.exp().root_, tail.root_));
#ifdef ORD_CNF_PARANOID
  out.revalidate();
#endif
  return out;
}

class cnf_class {
 public:
  cnf_kind kind() const noexcept { return kind_; }
  // pre: kind() == successor
  const cnf& pred() const { return pred_; }
  // pre: kind() == limit; the specific sequence from the classification
  // lemma's proof (fundamental sequences are not unique in general)
  cnf fund(std::uint64_t i) const { return fund_at(value_, i); }

 private:
  cnf_class(cnf_kind k, cnf pred, cnf value)
      : kind_(k), pred_(std::move(pred)), value_(std::move(value)) {}
  cnf_kind kind_;
  cnf pred_;
  cnf value_;
  friend cnf_class classify(const cnf& a);
};

// Zero, successor with predecessor, or limit: exactly one applies.
// A CNF is a successor iff its rest-most term is w^0.
inline cnf_class classify(const cnf& a) {
  if (a.is_zero()) return cnf_class(cnf_kind::zero, cnf(), cnf());
  auto [head, k] = split_trailing_nat(a);
  if (k > 0) return cnf_class(cnf_kind::successor, add(head, nat(k - 1)), a);
  return cnf_class(cnf_kind::limit, cnf(), a);
}

// Classifiability recursion: structural descent along classify;
// terminates for every input by well-foundedness of the order.
// on_zero() -> R
// on_succ(pred, result_on_pred) -> R
// on_lim(fund, rec) -> R with fund(i) the fundamental sequence and rec(i)
// folding its i-th element on demand.
template <class R, class ZeroFn, class SuccFn, class LimFn>
R transfinite_fold(const cnf& a, ZeroFn&& on_zero, SuccFn&& on_succ, LimFn&& on_lim) {
  cnf_class cls = classify(a);
  switch (cls.kind()) {
    case cnf_kind::zero:
      return on_zero();
    case cnf_kind::successor: {
      R below = transfinite_fold<R>(cls.pred(), on_zero, on_succ, on_lim);
      return on_succ(cls.pred(), std::move(below));
    }
    case cnf_kind::limit:
    default: {
      auto fund = [a](std::uint64_t i) { return fund_at(a, i); };
      auto rec = [&on_zero, &on_succ, &on_lim, a](std::uint64_t i) -> R {
        return transfinite_fold<R>(fund_at(a, i), on_zero, on_succ, on_lim);
      };
      return on_lim(std::function<cnf(std::uint64_t)>(fund),
                    std::function<R(std::uint64_t)>(rec));
    }
  }
}

// All normal forms with at most max_nodes node constructors, ascending,
// no duplicates.  Oracle support; the cap keeps accidental blowups out.
inline std::vector<cnf> enumerate(std::size_t max_nodes, std::size_t cap = 9) {
  if (max_nodes > cap) throw bound_too_large_error(max_nodes, cap);
  // by_count[n] = all normal forms with exactly n nodes
  std::vector<std::vector<cnf>> by_count(max_nodes + 1);
  by_count[0].push_back(cnf());
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      std::size_t j = n - 1 - i;
      for (const cnf& e : by_count[i]) {
        for (const cnf& r : by_count[j]) {
          if (compare(r.left(), e) != std::strong_ordering::greater)
            by_count[n].push_back(cnf::unchecked(detail::make_node(e.root_, r.root_)));
        }
      }
    }
  }
  std::vector<cnf> all;
  for (auto& bucket : by_count)
    for (auto& c : bucket) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), [](const cnf& a, const cnf& b) {
    return compare(a, b) == std::strong_ordering::less;
  });
  return all;
}

}  // namespace ord

#endif  // ORD_CNF_HPP
