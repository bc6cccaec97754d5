#ifndef ORD_BRW_HPP
#define ORD_BRW_HPP

// Brouwer trees: zero, successor, and limits of strictly increasing
// sequences, as raw lazy trees.
//
// The paper-level quotient (bisimilar limits are equal) has no runtime
// form; equality and order are answered by fuel-bounded procedures that
// return a sound three-valued verdict.  True/False answers are
// definitive; Unknown says the search budget ran out.
//
// Limit sequences carry provenance.  For sequences built by this library
// (iota, arithmetic tails, fundamental sequences of normal forms, jumps,
// the tower) the provenance is enough to recover the denoted ordinal as
// a normal form (or as exactly epsilon_0), which in turn decides order
// questions outright.  Raw user sequences carry no guarantee: verdicts
// about them come only from bounded search, and values containing them
// are flagged as tainted.
//
// Values are immutable; sequence memoization is internally synchronized,
// so trees may be shared freely across threads.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ord/cnf.hpp"
#include "ord/errors.hpp"

namespace ord {

using fuel_t = std::uint64_t;  // search budget; spent on every index probe or sample
inline constexpr fuel_t default_fuel = 64;

// Three-valued verdict of a fuel-bounded comparison.
class tri {
 public:
  static tri yes() { return tri(state::yes, nullptr); }
  static tri no() { return tri(state::no, nullptr); }
  static tri unknown(const char* why) { return tri(state::unknown, why); }

  bool is_true() const noexcept { return s_ == state::yes; }
  bool is_false() const noexcept { return s_ == state::no; }
  bool is_unknown() const noexcept { return s_ == state::unknown; }
  bool definitive() const noexcept { return s_ != state::unknown; }
  // exhaustion reason; null unless unknown
  const char* reason() const noexcept { return why_; }

 private:
  enum class state : unsigned char { no, yes, unknown };
  tri(state s, const char* why) : s_(s), why_(why) {}
  state s_;
  const char* why_;
};

enum class seq_tag {
  iota,       // k |-> k + offset
  add_tail,   // k |-> base + f(k)
  mul_tail,   // k |-> base * f(k)
  exp_tail,   // k |-> base ^ f(k)
  cnf_fund,   // k |-> embedding of the source normal form's fundamental sequence
  jump,       // jumping sequence of a bit sequence
  tower,      // k |-> w ^^ k
  raw         // unchecked user sequence
};

class brw;
class brw_seq;

namespace detail {

struct brw_node;
using brw_ptr = std::shared_ptr<const brw_node>;
struct brw_seq_impl;
using seq_ptr = std::shared_ptr<const brw_seq_impl>;

// value of a vetted tree: a normal form below epsilon_0, or epsilon_0 itself
struct brw_val {
  bool eps0 = false;
  cnf c;
};

inline std::strong_ordering val_compare(const brw_val& a, const brw_val& b) {
  if (a.eps0 && b.eps0) return std::strong_ordering::equal;
  if (a.eps0) return std::strong_ordering::greater;
  if (b.eps0) return std::strong_ordering::less;
  return compare(a.c, b.c);
}

struct brw_seq_impl {
  seq_tag tag = seq_tag::raw;
  bool tainted = false;  // contains a raw sequence somewhere
  std::uint64_t iota_offset = 0;
  brw_ptr base;                              // add/mul/exp tails
  seq_ptr inner;                             // add/mul/exp tails
  cnf source;                                // cnf_fund
  std::function<bool(std::uint64_t)> bits;   // jump
  std::function<brw_ptr(std::uint64_t)> fn;  // element evaluation

  mutable std::mutex mu;
  mutable std::map<std::uint64_t, brw_ptr> memo;
  mutable std::optional<std::optional<brw_val>> value;  // cached value of limit(this)

  brw_ptr at(std::uint64_t i) const {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(i);
      if (it != memo.end()) return it->second;
    }
    brw_ptr v = fn(i);  // pure: recomputation is observationally invisible
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(i, std::move(v)).first->second;
  }
};

struct brw_node {
  brw_ptr pred;  // successor node when seq is null
  seq_ptr seq;   // limit node otherwise

  explicit brw_node(brw_ptr p) : pred(std::move(p)) {}
  explicit brw_node(seq_ptr s) : seq(std::move(s)) {}

  // successor spines can be huge; unlink them iteratively
  ~brw_node() {
    brw_ptr p = std::move(pred);
    while (p && p.use_count() == 1) {
      brw_ptr next = std::move(const_cast<brw_node*>(p.get())->pred);
      p = std::move(next);
    }
  }
};

inline brw_ptr make_succ(brw_ptr p) { return std::make_shared<brw_node>(std::move(p)); }
inline brw_ptr make_limit(seq_ptr s) { return std::make_shared<brw_node>(std::move(s)); }

inline bool is_limit_node(const brw_node* n) { return n && n->seq != nullptr; }

// (number of successor layers, underlying zero-or-limit node)
inline std::pair<std::uint64_t, const brw_node*> peel_spine(const brw_node* n) {
  std::uint64_t k = 0;
  while (n && !n->seq) {
    ++k;
    n = n->pred.get();
  }
  return {k, n};
}

inline bool tree_tainted(const brw_node* n) {
  while (n && !n->seq) n = n->pred.get();
  return n && n->seq->tainted;
}

// structural identity: same shape, with limits requiring the same
// sequence object (function equality is not decidable)
inline bool structural_identical(const brw_node* a, const brw_node* b) {
  while (true) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->seq || b->seq) return a->seq && b->seq && a->seq == b->seq;
    a = a->pred.get();
    b = b->pred.get();
  }
}

std::optional<brw_val> value_of(const brw_node* x);
std::optional<brw_val> value_of_seq(const seq_ptr& s);

inline constexpr std::uint64_t jump_value_scan_window = 256;

// Value of limit(s) from the sequence's provenance.  Each rule mirrors a
// defining equation or a proved identity of the embedding:
//   iota         -> w
//   cnf_fund(a)  -> a (the embedding preserves fundamental sequences)
//   tower        -> epsilon_0
//   add/mul/exp tails -> fold the operation over the operand values,
//                        using that the embedding commutes with + * w^
//   jump(s)      -> w*2 when a set bit is found in a bounded scan
inline std::optional<brw_val> value_of_seq_uncached(const brw_seq_impl& s) {
  switch (s.tag) {
    case seq_tag::iota:
      return brw_val{false, omega_pow(nat(1))};
    case seq_tag::cnf_fund:
      return brw_val{false, s.source};
    case seq_tag::tower:
      return brw_val{true, cnf()};
    case seq_tag::jump: {
      for (std::uint64_t i = 0; i < jump_value_scan_window; ++i)
        if (s.bits(i)) return brw_val{false, mul(omega_pow(nat(1)), nat(2))};
      return std::nullopt;  // cannot rule out a later set bit
    }
    case seq_tag::add_tail: {
      auto vb = value_of(s.base.get());
      auto vi = value_of_seq(s.inner);
      if (!vb || !vi) return std::nullopt;
      if (vi->eps0) return vb->eps0 ? std::nullopt : std::optional<brw_val>(brw_val{true, cnf()});
      if (vb->eps0) return std::nullopt;  // eps0 + positive limit overflows
      return brw_val{false, add(vb->c, vi->c)};
    }
    case seq_tag::mul_tail: {
      auto vb = value_of(s.base.get());
      auto vi = value_of_seq(s.inner);
      if (!vb || !vi) return std::nullopt;
      if (vb->eps0) return std::nullopt;
      if (vb->c.is_zero()) return brw_val{false, cnf()};
      if (vi->eps0) return brw_val{true, cnf()};  // c * eps0 = eps0 for 0 < c < eps0
      return brw_val{false, mul(vb->c, vi->c)};
    }
    case seq_tag::exp_tail: {
      auto vb = value_of(s.base.get());
      auto vi = value_of_seq(s.inner);
      if (!vb || !vi) return std::nullopt;
      if (vb->eps0) return std::nullopt;
      if (vb->c == omega_pow(nat(1))) {
        if (vi->eps0) return brw_val{true, cnf()};  // w ^ eps0 = eps0
        return brw_val{false, omega_pow(vi->c)};
      }
      return std::nullopt;  // other bases are outside the certified fragment
    }
    case seq_tag::raw:
    default:
      return std::nullopt;
  }
}

inline std::optional<brw_val> value_of_seq(const seq_ptr& s) {
  {
    std::lock_guard<std::mutex> lock(s->mu);
    if (s->value) return *s->value;
  }
  std::optional<brw_val> v = value_of_seq_uncached(*s);
  std::lock_guard<std::mutex> lock(s->mu);
  if (!s->value) s->value = v;
  return *s->value;
}

inline std::optional<brw_val> value_of(const brw_node* x) {
  auto [k, base] = peel_spine(x);
  if (!base) return brw_val{false, nat(k)};
  auto v = value_of_seq(base->seq);
  if (!v) return std::nullopt;
  if (v->eps0) return k == 0 ? v : std::nullopt;  // eps0 + k overflows
  return brw_val{false, add(v->c, nat(k))};
}

struct fuel_cell {
  fuel_t remaining;
  bool tick() {
    if (remaining == 0) return false;
    --remaining;
    return true;
  }
};

// Fuel-bounded x <= y following the code characterisation of the order:
//   zero / _            true
//   succ / zero         false
//   succ / succ         recurse on predecessors
//   succ / limit        exists n. x <= f(n)   (bounded search)
//   limit / zero        false
//   limit / succ y      reduce to limit / y
//   limit / limit       forall k exists n      (certificates or refutation)
// Where both sides have recoverable values the comparison is decided
// outright; that is the only way a universally quantified case can
// come out True.  Refutations use the sound criterion that
// y <= f(k) for a sampled k contradicts limit f <= y.
inline tri leq_rec(const brw_node* x, const brw_node* y, fuel_cell& cell) {
  while (true) {
    if (x == y) return tri::yes();
    if (!x) return tri::yes();
    if (!y) return tri::no();
    bool xs = !x->seq, ys = !y->seq;
    if (xs && ys) {  // succ / succ
      x = x->pred.get();
      y = y->pred.get();
      continue;
    }
    if (!xs && ys) {  // limit / succ: limit f <= succ y iff limit f <= y
      y = y->pred.get();
      continue;
    }
    break;
  }
  // here y is a limit; x is a successor or a limit
  auto vx = value_of(x);
  auto vy = value_of(y);
  if (vx && vy)
    return val_compare(*vx, *vy) != std::strong_ordering::greater ? tri::yes() : tri::no();
  if (!x->seq) {
    // succ / limit: first try to refute via limit y <= pred x, then search
    if (leq_rec(y, x->pred.get(), cell).is_true()) return tri::no();
    for (std::uint64_t n = 0;; ++n) {
      if (!cell.tick()) return tri::unknown("existential index search exhausted the fuel budget");
      if (leq_rec(x, y->seq->at(n).get(), cell).is_true()) return tri::yes();
    }
  }
  // limit / limit
  if (x->seq == y->seq) return tri::yes();
  for (std::uint64_t k = 0;; ++k) {
    if (!cell.tick()) return tri::unknown("universal sampling exhausted the fuel budget");
    // y <= f(k) refutes limit f <= y since f(k) < limit f
    if (leq_rec(y, x->seq->at(k).get(), cell).is_true()) return tri::no();
  }
}

}  // namespace detail

// Strictly increasing index -> brw sequence with provenance.
class brw_seq {
 public:
  seq_tag tag() const noexcept { return impl_->tag; }
  bool tainted() const noexcept { return impl_->tainted; }
  brw at(std::uint64_t i) const;

  // k |-> k + offset
  static brw_seq iota(std::uint64_t offset = 0);
  // unchecked user sequence; in debug builds the first few indices are
  // spot-checked for strict increase
  static brw_seq raw(std::function<brw(std::uint64_t)> eval);
  // jumping sequence of a bit sequence: 0, 1, 2, ... until the first set
  // bit, then w, w+1, w+2, ...
  static brw_seq jump(std::function<bool(std::uint64_t)> bits);
  // embedding of the fundamental sequence of a limit normal form; eval
  // is supplied by the embedding layer
  static brw_seq cnf_fund(cnf source, std::function<brw(std::uint64_t)> eval);

 private:
  explicit brw_seq(detail::seq_ptr p) : impl_(std::move(p)) {}
  detail::seq_ptr impl_;
  friend class brw;
  friend const brw& epsilon0();
};

// A Brouwer tree.  Default-constructed value is zero.
class brw {
 public:
  brw() = default;

  static brw zero() { return brw(); }
  static brw succ(const brw& x) { return brw(detail::make_succ(x.root_)); }
  static brw limit(const brw_seq& s) { return brw(detail::make_limit(s.impl_)); }

  bool is_zero() const noexcept { return !root_; }
  bool is_succ() const noexcept { return root_ && !root_->seq; }
  bool is_limit() const noexcept { return root_ && root_->seq != nullptr; }

  // pre: is_succ()
  brw pred() const { return brw(root_->pred); }
  // pre: is_limit()
  brw_seq seq() const { return brw_seq(root_->seq); }

  // true when some contained limit was built from an unchecked sequence
  bool tainted() const noexcept { return detail::tree_tainted(root_.get()); }

 private:
  explicit brw(detail::brw_ptr p) : root_(std::move(p)) {}
  detail::brw_ptr root_;

  friend brw from_nat(std::uint64_t n);
  friend brw add(const brw& x, const brw& y);
  friend brw mul(const brw& x, const brw& y);
  friend brw exp(const brw& x, const brw& y);
  friend tri leq_fuel(const brw& x, const brw& y, fuel_t fuel);
  friend tri bisim_fuel(const brw& x, const brw& y, fuel_t fuel);
  friend std::optional<std::uint64_t> is_finite(const brw& x);
  friend brw join_fin(const brw& x, std::uint64_t n);
  friend const brw& epsilon0();
  friend class brw_seq;
};

inline brw brw_seq::at(std::uint64_t i) const { return brw(impl_->at(i)); }

inline brw from_nat(std::uint64_t n) {
  detail::brw_ptr p;
  for (std::uint64_t i = 0; i < n; ++i) p = detail::make_succ(std::move(p));
  return brw(std::move(p));
}

inline brw_seq brw_seq::iota(std::uint64_t offset) {
  auto impl = std::make_shared<detail::brw_seq_impl>();
  impl->tag = seq_tag::iota;
  impl->iota_offset = offset;
  impl->fn = [offset](std::uint64_t i) {
    detail::brw_ptr p;
    for (std::uint64_t j = 0; j < i + offset; ++j) p = detail::make_succ(std::move(p));
    return p;
  };
  return brw_seq(std::move(impl));
}

// omega = limit(iota); a single shared sequence object so that identity
// shortcuts apply across all uses
inline const brw& omega() {
  static const brw w = brw::limit(brw_seq::iota());
  return w;
}

// Some(n) iff the tree is an n-fold successor of zero.
inline std::optional<std::uint64_t> is_finite(const brw& x) {
  auto [k, base] = detail::peel_spine(x.root_.get());
  if (base) return std::nullopt;
  return k;
}

// --- arithmetic ---------------------------------------------------------
//
// Structural recursion on the right argument, run as a loop over its
// successor spine.  Zero- and one-tests are structural; a limit is never
// zero or one because its sequence is strictly increasing.

inline brw add(const brw& x, const brw& y) {
  auto [k, base] = detail::peel_spine(y.root_.get());
  detail::brw_ptr core;
  if (!base) {
    core = x.root_;  // x + 0 = x
  } else {
    auto impl = std::make_shared<detail::brw_seq_impl>();
    impl->tag = seq_tag::add_tail;
    impl->base = x.root_;
    impl->inner = base->seq;
    impl->tainted = detail::tree_tainted(x.root_.get()) || base->seq->tainted;
    detail::brw_ptr xb = x.root_;
    detail::seq_ptr f = base->seq;
    impl->fn = [xb, f](std::uint64_t i) { return add(brw(xb), brw(f->at(i))).root_; };
    core = detail::make_limit(std::move(impl));
  }
  for (std::uint64_t i = 0; i < k; ++i) core = detail::make_succ(std::move(core));
  return brw(std::move(core));
}

inline brw mul(const brw& x, const brw& y) {
  auto [k, base] = detail::peel_spine(y.root_.get());
  detail::brw_ptr acc;
  if (base) {
    if (x.is_zero()) return brw();  // zero * limit f = zero, and adding zero keeps it zero
    auto impl = std::make_shared<detail::brw_seq_impl>();
    impl->tag = seq_tag::mul_tail;
    impl->base = x.root_;
    impl->inner = base->seq;
    impl->tainted = detail::tree_tainted(x.root_.get()) || base->seq->tainted;
    detail::brw_ptr xb = x.root_;
    detail::seq_ptr f = base->seq;
    impl->fn = [xb, f](std::uint64_t i) { return mul(brw(xb), brw(f->at(i))).root_; };
    acc = detail::make_limit(std::move(impl));
  }
  // x * succ(y') = (x * y') + x, applied k times
  brw m(std::move(acc));
  for (std::uint64_t i = 0; i < k; ++i) m = add(m, x);
  return m;
}

inline brw exp(const brw& x, const brw& y) {
  auto [k, base] = detail::peel_spine(y.root_.get());
  brw e;
  if (!base) {
    e = from_nat(1);  // x ^ 0 = 1
  } else if (x.is_zero()) {
    e = brw();
  } else if (x.is_succ() && x.pred().is_zero()) {
    e = from_nat(1);  // 1 ^ limit f = 1
  } else {
    auto impl = std::make_shared<detail::brw_seq_impl>();
    impl->tag = seq_tag::exp_tail;
    impl->base = x.root_;
    impl->inner = base->seq;
    impl->tainted = detail::tree_tainted(x.root_.get()) || base->seq->tainted;
    detail::brw_ptr xb = x.root_;
    detail::seq_ptr f = base->seq;
    impl->fn = [xb, f](std::uint64_t i) { return exp(brw(xb), brw(f->at(i))).root_; };
    e = brw(detail::make_limit(std::move(impl)));
  }
  // x ^ succ(y') = (x ^ y') * x, applied k times
  for (std::uint64_t i = 0; i < k; ++i) e = mul(e, x);
  return e;
}

// --- comparisons --------------------------------------------------------

inline tri leq_fuel(const brw& x, const brw& y, fuel_t fuel = default_fuel) {
  detail::fuel_cell cell{fuel};
  return detail::leq_rec(x.root_.get(), y.root_.get(), cell);
}

// x < y is succ x <= y
inline tri lt_fuel(const brw& x, const brw& y, fuel_t fuel = default_fuel) {
  return leq_fuel(brw::succ(x), y, fuel);
}

// Mutual fuel-bounded inequality, with a structural identity fast path.
// False dominates; True needs both directions.
inline tri bisim_fuel(const brw& x, const brw& y, fuel_t fuel = default_fuel) {
  if (detail::structural_identical(x.root_.get(), y.root_.get())) return tri::yes();
  tri fwd = leq_fuel(x, y, fuel);
  if (fwd.is_false()) return tri::no();
  tri bwd = leq_fuel(y, x, fuel);
  if (bwd.is_false()) return tri::no();
  if (fwd.is_true() && bwd.is_true()) return tri::yes();
  return fwd.is_unknown() ? fwd : bwd;
}

// lt_fuel against a limit, also reporting a sequence index n with
// x < f(n) when the verdict is True and such an n shows up within the
// fuel budget.  A True verdict always has such a witness in principle;
// the bounded search exposes it.
struct lt_witness_result {
  tri verdict;
  std::optional<std::uint64_t> witness;
};

inline lt_witness_result lt_fuel_witness(const brw& x, const brw& y,
                                         fuel_t fuel = default_fuel) {
  tri v = lt_fuel(x, y, fuel);
  std::optional<std::uint64_t> w;
  if (v.is_true() && y.is_limit()) {
    brw_seq f = y.seq();
    for (std::uint64_t n = 0; n <= fuel; ++n) {
      if (lt_fuel(x, f.at(n), fuel).is_true()) {
        w = n;
        break;
      }
    }
  }
  return {v, w};
}

// --- joins (the two computable cases) ------------------------------------

// x max n for finite n: limits absorb n, zero is the unit, successors
// recurse; collapses to from_nat(max(k, n)) on finite trees.
inline brw join_fin(const brw& x, std::uint64_t n) {
  auto fin = is_finite(x);
  if (!fin) return x;
  return *fin >= n ? x : from_nat(n);
}

inline brw join_omega(const brw& x) { return is_finite(x) ? omega() : x; }

// --- sequences around decidability --------------------------------------

inline brw_seq brw_seq::raw(std::function<brw(std::uint64_t)> eval) {
  auto impl = std::make_shared<detail::brw_seq_impl>();
  impl->tag = seq_tag::raw;
  impl->tainted = true;
  impl->fn = [eval](std::uint64_t i) { return eval(i).root_; };
#ifndef NDEBUG
  // spot-check strict increase on the first few indices
  for (std::uint64_t i = 0; i < 3; ++i) {
    brw a = brw(impl->at(i)), b = brw(impl->at(i + 1));
    if (lt_fuel(a, b, 16).is_false())
      throw domain_error("raw sequence is not strictly increasing at sampled indices");
  }
#endif
  return brw_seq(std::move(impl));
}

// jump(s): jump(0) = zero; jump(n+1) is w when n is the minimal set bit
// of s, succ(jump(n)) otherwise.  Strictly increasing for every s.
inline brw_seq brw_seq::jump(std::function<bool(std::uint64_t)> bits) {
  auto impl = std::make_shared<detail::brw_seq_impl>();
  impl->tag = seq_tag::jump;
  impl->bits = bits;
  impl->fn = [bits](std::uint64_t i) {
    // scanning in order makes the first hit the minimal set bit
    std::optional<std::uint64_t> hit;
    for (std::uint64_t n = 0; n < i; ++n) {
      if (bits(n)) {
        hit = n;
        break;
      }
    }
    detail::brw_ptr v;
    std::uint64_t succs = i;
    if (hit) {
      v = omega().root_;
      succs = i - (*hit + 1);
    }
    for (std::uint64_t n = 0; n < succs; ++n) v = detail::make_succ(std::move(v));
    return v;
  };
  return brw_seq(std::move(impl));
}

inline brw_seq brw_seq::cnf_fund(cnf source, std::function<brw(std::uint64_t)> eval) {
  auto impl = std::make_shared<detail::brw_seq_impl>();
  impl->tag = seq_tag::cnf_fund;
  impl->source = std::move(source);
  impl->fn = [eval](std::uint64_t i) { return eval(i).root_; };
  return brw_seq(std::move(impl));
}

// pointwise decidable predicate applied along a sequence
inline std::function<bool(std::uint64_t)> unjump(std::function<brw(std::uint64_t)> f,
                                                 std::function<bool(const brw&)> p) {
  return [f, p](std::uint64_t n) { return p(f(n)); };
}

inline std::function<bool(std::uint64_t)> unjump(const brw_seq& f,
                                                 std::function<bool(const brw&)> p) {
  return [f, p](std::uint64_t n) { return p(f.at(n)); };
}

// Minimal-witness search: Some(n) with s(n) set and s(k) clear for all
// k < n, scanning indices 0..bound; None when no set bit shows up.
inline std::optional<std::uint64_t> first_true(const std::function<bool(std::uint64_t)>& s,
                                               std::uint64_t bound) {
  for (std::uint64_t n = 0; n <= bound; ++n)
    if (s(n)) return n;
  return std::nullopt;
}

// --- towers ---------------------------------------------------------------

// w ^^ 0 = w;  w ^^ (k+1) = w ^ (w ^^ k)
inline brw omega_tower(std::uint64_t k) {
  brw t = omega();
  for (std::uint64_t i = 0; i < k; ++i) t = exp(omega(), t);
  return t;
}

// epsilon_0 = limit of the tower sequence
inline const brw& epsilon0() {
  static const brw e0 = [] {
    auto impl = std::make_shared<detail::brw_seq_impl>();
    impl->tag = seq_tag::tower;
    impl->fn = [](std::uint64_t i) { return omega_tower(i).root_; };
    return brw::limit(brw_seq(std::move(impl)));
  }();
  return e0;
}

}  // namespace ord

#endif  // ORD_BRW_HPP
