#ifndef ORD_HIERARCHY_HPP
#define ORD_HIERARCHY_HPP

// Hardy hierarchy evaluation over both representations:
//   H_0(n) = n;  H_(a+1)(n) = H_a(n+1);  H_(lim f)(n) = H_(f(n))(n).
//
// The value returned is the raw natural.  For limits it depends on the
// chosen sequence representative; callers comparing the two
// representations should stick to trees built through vetted
// constructions, where the representatives agree index by index.

#include <cstdint>
#include <limits>

#include "ord/brw.hpp"
#include "ord/cnf.hpp"
#include "ord/errors.hpp"

namespace ord {

struct hardy_result {
  std::uint64_t value = 0;
  std::uint64_t steps = 0;  // count of successor/limit clause unfoldings
};

inline constexpr std::uint64_t hardy_unlimited = std::numeric_limits<std::uint64_t>::max();

// Evaluation by classifiability recursion, run as a loop.  The trailing
// natural part of the argument is consumed in one batch: stripping k
// final w^0 terms is k applications of the successor clause.
inline hardy_result hardy_cnf(const cnf& a, std::uint64_t n,
                              std::uint64_t budget = hardy_unlimited) {
  hardy_result out;
  cnf cur = a;
  while (true) {
    if (cur.is_zero()) {
      out.value = n;
      return out;
    }
    auto [head, k] = split_trailing_nat(cur);
    if (k > 0) {
      if (k > budget - out.steps) throw budget_exceeded_error(budget);
      out.steps += k;
      n += k;
      cur = head;
    } else {
      if (out.steps >= budget) throw budget_exceeded_error(budget);
      ++out.steps;
      cur = fund_at(cur, n);
    }
  }
}

// Direct structural recursion on the tree, also run as a loop; the limit
// clause evaluates the sequence at the current argument.
inline hardy_result hardy_brw(const brw& x, std::uint64_t n,
                              std::uint64_t budget = hardy_unlimited) {
  hardy_result out;
  brw cur = x;
  while (true) {
    if (cur.is_zero()) {
      out.value = n;
      return out;
    }
    if (cur.is_succ()) {
      if (out.steps >= budget) throw budget_exceeded_error(budget);
      ++out.steps;
      ++n;
      cur = cur.pred();
    } else {
      if (out.steps >= budget) throw budget_exceeded_error(budget);
      ++out.steps;
      cur = cur.seq().at(n);
    }
  }
}

}  // namespace ord

#endif  // ORD_HIERARCHY_HPP
