#ifndef ORD_FINORD_HPP
#define ORD_FINORD_HPP

// Finite-carrier relations as candidate transitive, extensional,
// well-founded orders, with brute-force simulation search and the
// standard constructions (successor, sum, product, supremum).
//
// A valid finite ordinal in this sense is necessarily a strict linear
// order; rank (= carrier size) is therefore a complete invariant and is
// used as the cross-checking oracle.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ord/errors.hpp"

namespace ord {

// Carrier {0, .., n-1} with an arbitrary boolean relation matrix;
// rel(i, j) reads "i precedes j".  Validity is a checked property, not a
// construction invariant.
class fin_ord {
 public:
  explicit fin_ord(std::size_t n = 0) : n_(n), rel_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }
  bool rel(std::size_t i, std::size_t j) const { return rel_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v) { rel_[i * n_ + j] = v; }

  friend bool operator==(const fin_ord& a, const fin_ord& b) {
    return a.n_ == b.n_ && a.rel_ == b.rel_;
  }

  // Text format: first line "n=<size>", then n rows of n '0'/'1' chars.
  std::string to_text() const {
    std::string out = "n=" + std::to_string(n_) + "\n";
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) out += rel(i, j) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  static fin_ord from_text(const std::string& text) {
    std::size_t pos = text.find('\n');
    if (text.rfind("n=", 0) != 0 || pos == std::string::npos)
      throw syntax_error("expected header line n=<size>", 0);
    std::size_t n = 0;
    for (std::size_t i = 2; i < pos; ++i) {
      char c = text[i];
      if (c < '0' || c > '9') throw syntax_error("bad size", i);
      n = n * 10 + static_cast<std::size_t>(c - '0');
      if (n > 4096) throw syntax_error("size too large", i);
    }
    fin_ord a(n);
    std::size_t at = pos + 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++at) {
        if (at >= text.size() || (text[at] != '0' && text[at] != '1'))
          throw syntax_error("expected '0' or '1'", at);
        a.set(i, j, text[at] == '1');
      }
      if (at < text.size() && text[at] == '\n') ++at;
    }
    return a;
  }

 private:
  std::size_t n_;
  std::vector<bool> rel_;
};

inline bool check_transitive(const fin_ord& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.rel(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (a.rel(j, k) && !a.rel(i, k)) return false;
  return true;
}

// distinct elements must have distinct predecessor sets
inline bool check_extensional(const fin_ord& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool same = true;
      for (std::size_t k = 0; k < n; ++k)
        if (a.rel(k, i) != a.rel(k, j)) {
          same = false;
          break;
        }
      if (same) return false;
    }
  return true;
}

// iterated removal of minimal elements; on a finite carrier this is
// exactly acyclicity
inline bool check_wellfounded(const fin_ord& a) {
  const std::size_t n = a.size();
  std::vector<bool> removed(n, false);
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n && pick == n; ++i) {
      if (removed[i]) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < n; ++k)
        if (!removed[k] && a.rel(k, i)) {
          minimal = false;
          break;
        }
      if (minimal) pick = i;
    }
    if (pick == n) return false;  // no minimal element left: a cycle
    removed[pick] = true;
  }
  return true;
}

inline bool is_ordinal(const fin_ord& a) {
  return check_transitive(a) && check_extensional(a) && check_wellfounded(a);
}

// number of predecessors of x; for valid orders this is x's position
inline std::size_t pred_count(const fin_ord& a, std::size_t x) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.rel(k, x)) ++c;
  return c;
}

// Carrier size; a complete invariant for valid orders since finite
// transitive extensional well-founded relations are strict linear orders.
inline std::size_t rank(const fin_ord& a) { return a.size(); }

struct sim_witness {
  std::vector<std::size_t> map;        // per element of A, its image in B
  std::optional<std::size_t> bounded;  // image is exactly the segment below this
};

namespace detail {

inline bool simulation_conditions_hold(const fin_ord& a, const fin_ord& b,
                                       const std::vector<std::size_t>& f) {
  // monotone
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.rel(x, y) && !b.rel(f[x], f[y])) return false;
  // fiberwise downward closure: y < f(x) needs a preimage below x
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (!b.rel(y, f[x])) continue;
      bool found = false;
      for (std::size_t x0 = 0; x0 < a.size() && !found; ++x0)
        if (a.rel(x0, x) && f[x0] == y) found = true;
      if (!found) return false;
    }
  return true;
}

inline bool search_simulation(const fin_ord& a, const fin_ord& b, std::vector<std::size_t>& f,
                              std::size_t next) {
  if (next == a.size()) return simulation_conditions_hold(a, b, f);
  for (std::size_t img = 0; img < b.size(); ++img) {
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      if (a.rel(prev, next) && !b.rel(f[prev], img)) ok = false;
      if (a.rel(next, prev) && !b.rel(img, f[prev])) ok = false;
      if (f[prev] == img) ok = false;  // simulations are injective
    }
    if (!ok) continue;
    f[next] = img;
    if (search_simulation(a, b, f, next + 1)) return true;
  }
  return false;
}

}  // namespace detail

// Brute-force search for the (unique, when it exists) simulation from a
// into b.  Both relations must be valid orders.
inline std::optional<sim_witness> find_simulation(const fin_ord& a, const fin_ord& b) {
  if (!is_ordinal(a) || !is_ordinal(b)) throw invalid_order_error();
  std::vector<std::size_t> f(a.size(), 0);
  if (a.size() > 0 && !detail::search_simulation(a, b, f, 0)) return std::nullopt;
  if (a.size() == 0) f.clear();
  sim_witness w;
  w.map = f;
  // bounded iff the image is exactly the predecessor set of some element
  std::set<std::size_t> image(f.begin(), f.end());
  for (std::size_t bound = 0; bound < b.size(); ++bound) {
    std::set<std::size_t> preds;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b.rel(k, bound)) preds.insert(k);
    if (preds == image) {
      w.bounded = bound;
      break;
    }
  }
  return w;
}

// segment below x in a order-isomorphic to segment below y in b;
// brute-force over bijections, for cross-checking on tiny instances
inline bool segments_isomorphic(const fin_ord& a, std::size_t x, const fin_ord& b,
                                std::size_t y) {
  std::vector<std::size_t> sa, sb;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a.rel(k, x)) sa.push_back(k);
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b.rel(k, y)) sb.push_back(k);
  if (sa.size() != sb.size()) return false;
  std::vector<std::size_t> perm(sb.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < sa.size() && ok; ++i)
      for (std::size_t j = 0; j < sa.size() && ok; ++j)
        if (a.rel(sa[i], sa[j]) != b.rel(sb[perm[i]], sb[perm[j]])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline fin_ord ord_zero() { return fin_ord(0); }

// append one top element related above everything
inline fin_ord ord_succ(const fin_ord& a) {
  fin_ord s(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s.set(i, j, a.rel(i, j));
  for (std::size_t i = 0; i < a.size(); ++i) s.set(i, a.size(), true);
  return s;
}

// disjoint union with b's block above a's
inline fin_ord ord_sum(const fin_ord& a, const fin_ord& b) {
  fin_ord s(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s.set(i, j, a.rel(i, j));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      s.set(a.size() + i, a.size() + j, b.rel(i, j));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s.set(i, a.size() + j, true);
  return s;
}

// pairs (x, y) with the reverse lexicographic order; (x, y) is encoded
// as x + y*|a|
inline fin_ord ord_prod(const fin_ord& a, const fin_ord& b) {
  fin_ord p(a.size() * b.size());
  for (std::size_t x1 = 0; x1 < a.size(); ++x1)
    for (std::size_t y1 = 0; y1 < b.size(); ++y1)
      for (std::size_t x2 = 0; x2 < a.size(); ++x2)
        for (std::size_t y2 = 0; y2 < b.size(); ++y2) {
          bool lt = b.rel(y1, y2) || (y1 == y2 && a.rel(x1, x2));
          p.set(x1 + y1 * a.size(), x2 + y2 * a.size(), lt);
        }
  return p;
}

// Supremum of a finite family: the quotient of the disjoint union by
// initial-segment isomorphism, ordered by strict segment inclusion.
// For valid (hence linear) finite orders, segment isomorphism classes
// are exactly predecessor counts, so the classes are the ranks occurring
// in the family and the result is the linear order on them.
inline fin_ord ord_sup(const std::vector<fin_ord>& family) {
  std::set<std::size_t> classes;
  for (const fin_ord& m : family) {
    if (!is_ordinal(m)) throw invalid_order_error();
    for (std::size_t x = 0; x < m.size(); ++x) classes.insert(pred_count(m, x));
  }
  fin_ord s(classes.size());
  // ranks occurring are 0..max-1, one per element of the result
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) s.set(i, j, true);
  return s;
}

}  // namespace ord

#endif  // ORD_FINORD_HPP
