#ifndef ORD_EMBED_HPP
#define ORD_EMBED_HPP

// The embedding of Cantor normal forms into Brouwer trees, with checkers
// for its preservation properties, and the finite restriction of the
// Brouwer-tree-to-order map.

#include <cstdint>
#include <string>

#include "ord/brw.hpp"
#include "ord/cnf.hpp"
#include "ord/errors.hpp"
#include "ord/finord.hpp"

namespace ord {

// ctob(0) = zero; ctob(<a, b>) = w^ctob(a) + ctob(b).
// The trailing natural part of the spine maps to a plain successor
// spine, which is exactly what the clause recursion produces there;
// the remaining terms are folded right to left.
inline brw ctob(const cnf& a) {
  auto [head, k] = split_trailing_nat(a);
  brw acc = from_nat(k);
  std::vector<cnf> exps;
  for (cnf t = head; !t.is_zero(); t = t.rest()) exps.push_back(t.exp());
  for (auto it = exps.rbegin(); it != exps.rend(); ++it)
    acc = add(exp(omega(), ctob(*it)), acc);
  return acc;
}

// The image of a limit CNF's fundamental sequence, with provenance
// pointing back at the source normal form.
inline brw_seq ctob_fund_seq(const cnf& a) {
  if (classify(a).kind() != cnf_kind::limit) throw not_a_limit_error();
  return brw_seq::cnf_fund(a, [a](std::uint64_t i) { return ctob(fund_at(a, i)); });
}

struct embed_report {
  std::uint64_t pairs_checked = 0;
  std::uint64_t definitive_agreements = 0;
  std::uint64_t unknowns = 0;
  std::uint64_t refutations = 0;  // must be 0 on a passing run
  fuel_t fuel = default_fuel;

  std::string to_string() const {
    return "pairs=" + std::to_string(pairs_checked) +
           " agree=" + std::to_string(definitive_agreements) +
           " unknown=" + std::to_string(unknowns) +
           " refute=" + std::to_string(refutations) + " fuel=" + std::to_string(fuel);
  }
};

namespace detail {

inline void tally(embed_report& rep, const tri& verdict, bool expected) {
  ++rep.pairs_checked;
  if (verdict.is_unknown()) {
    ++rep.unknowns;
  } else if (verdict.is_true() == expected) {
    ++rep.definitive_agreements;
  } else {
    ++rep.refutations;
  }
}

}  // namespace detail

// For every pair of enumerated normal forms, the fuel-bounded order on
// their images must not contradict the decidable order on the normal
// forms; reflection is checked contrapositively (a definitive verdict on
// the tree side disagreeing with the normal-form side is a refutation).
inline embed_report check_order_preservation(std::size_t bound, fuel_t fuel = default_fuel) {
  embed_report rep;
  rep.fuel = fuel;
  std::vector<cnf> all = enumerate(bound);
  std::vector<brw> images;
  images.reserve(all.size());
  for (const cnf& a : all) images.push_back(ctob(a));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto c = compare(all[i], all[j]);
      if (c == std::strong_ordering::less)
        detail::tally(rep, lt_fuel(images[i], images[j], fuel), true);
      else if (c == std::strong_ordering::equal)
        detail::tally(rep, bisim_fuel(images[i], images[j], fuel), true);
      else
        detail::tally(rep, lt_fuel(images[i], images[j], fuel), false);
    }
  }
  return rep;
}

// ctob commutes with +, *, and w^-: each identity instance is checked as
// a fuel-bounded bisimilarity between the two construction routes.
inline embed_report check_arith_preservation(std::size_t bound, fuel_t fuel = default_fuel) {
  embed_report rep;
  rep.fuel = fuel;
  std::vector<cnf> all = enumerate(bound);
  std::vector<brw> images;
  images.reserve(all.size());
  for (const cnf& a : all) images.push_back(ctob(a));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      detail::tally(rep, bisim_fuel(ctob(add(all[i], all[j])), add(images[i], images[j]), fuel),
                    true);
      detail::tally(rep, bisim_fuel(ctob(mul(all[i], all[j])), mul(images[i], images[j]), fuel),
                    true);
    }
    detail::tally(rep, bisim_fuel(ctob(omega_pow(all[i])), exp(omega(), images[i]), fuel), true);
  }
  return rep;
}

// The embedding sends a limit normal form to the limit of the embedded
// fundamental sequence.  Checks the bisimilarity plus strict increase
// and boundedness of the first `samples` elements.
inline embed_report check_fundseq_preservation(const cnf& a, std::uint64_t samples,
                                               fuel_t fuel = default_fuel) {
  if (classify(a).kind() != cnf_kind::limit) throw not_a_limit_error();
  embed_report rep;
  rep.fuel = fuel;
  brw lhs = ctob(a);
  brw rhs = brw::limit(ctob_fund_seq(a));
  detail::tally(rep, bisim_fuel(lhs, rhs, fuel), true);
  brw_seq s = rhs.seq();
  for (std::uint64_t i = 0; i + 1 < samples; ++i)
    detail::tally(rep, lt_fuel(s.at(i), s.at(i + 1), fuel), true);
  for (std::uint64_t i = 0; i < samples; ++i)
    detail::tally(rep, lt_fuel(s.at(i), lhs, fuel), true);
  return rep;
}

// Restriction of the tree-to-order map to finite trees: the initial
// segment below an n-fold successor is the n-element linear order.
inline fin_ord btoo_finite(const brw& x) {
  auto n = is_finite(x);
  if (!n) throw not_finite_error();
  fin_ord a(static_cast<std::size_t>(*n));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) a.set(i, j, true);
  return a;
}

}  // namespace ord

#endif  // ORD_EMBED_HPP
