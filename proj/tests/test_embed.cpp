#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ord/embed.hpp"

using namespace ord;
using ord_test::c;

TEST_CASE("ctob frozen cases") {
  CHECK(ctob(cnf()).is_zero());
  CHECK(is_finite(ctob(nat(7))) == std::uint64_t{7});
  CHECK(bisim_fuel(ctob(c("w")), omega(), 16).is_true());
  CHECK(bisim_fuel(ctob(c("w+2")), brw::succ(brw::succ(omega())), 16).is_true());
  CHECK(bisim_fuel(ctob(c("w^2")), exp(omega(), from_nat(2)), 16).is_true());
}

TEST_CASE("every embedded normal form sits below epsilon0") {
  for (const cnf& a : enumerate(3)) CHECK(lt_fuel(ctob(a), epsilon0(), 32).is_true());
}

TEST_CASE("injectivity spot check") {
  std::vector<cnf> all = enumerate(3);
  for (const cnf& a : all)
    for (const cnf& b : all)
      if (!(a == b)) CHECK(!bisim_fuel(ctob(a), ctob(b), 64).is_true());
}

TEST_CASE("order preservation reports") {
  embed_report r0 = check_order_preservation(0, 64);
  CHECK(r0.pairs_checked == 1);
  CHECK(r0.definitive_agreements == 1);
  CHECK(r0.refutations == 0);

  embed_report r2 = check_order_preservation(2, 64);
  CHECK(r2.refutations == 0);
  CHECK(r2.pairs_checked == 16);

  embed_report r4 = check_order_preservation(4, 64);
  CHECK(r4.refutations == 0);
}

TEST_CASE("arithmetic preservation reports") {
  embed_report r = check_arith_preservation(2, 32);
  CHECK(r.refutations == 0);
  CHECK(r.unknowns == 0);
  // worked instances: absorption on (1, w), successor case on (w, 1)
  CHECK(bisim_fuel(ctob(add(c("1"), c("w"))), add(ctob(c("1")), ctob(c("w"))), 32).is_true());
  CHECK(bisim_fuel(ctob(add(c("w"), c("1"))), add(ctob(c("w")), ctob(c("1"))), 32).is_true());
}

TEST_CASE("fundamental sequence preservation") {
  for (const char* text : {"w", "w^2", "w^w", "w*2"}) {
    embed_report r = check_fundseq_preservation(c(text), 5, 32);
    INFO(text);
    CHECK(r.refutations == 0);
    CHECK(r.unknowns == 0);
  }
  CHECK_THROWS_AS(check_fundseq_preservation(c("w+1"), 5, 32), not_a_limit_error);
  CHECK_THROWS_AS(ctob_fund_seq(c("3")), not_a_limit_error);

  brw_seq s = ctob_fund_seq(c("w^2"));
  CHECK(s.tag() == seq_tag::cnf_fund);
  CHECK(bisim_fuel(brw::limit(s), ctob(c("w^2")), 32).is_true());
}

TEST_CASE("report line format") {
  embed_report r;
  r.pairs_checked = 12;
  r.definitive_agreements = 10;
  r.unknowns = 2;
  r.refutations = 0;
  r.fuel = 64;
  CHECK(r.to_string() == "pairs=12 agree=10 unknown=2 refute=0 fuel=64");
}

TEST_CASE("btoo_finite") {
  fin_ord empty = btoo_finite(brw::zero());
  CHECK(empty.size() == 0);
  CHECK(is_ordinal(empty));

  fin_ord three = btoo_finite(from_nat(3));
  CHECK(three.size() == 3);
  CHECK(is_ordinal(three));
  CHECK(three.rel(0, 1));
  CHECK(three.rel(0, 2));
  CHECK(three.rel(1, 2));
  CHECK(!three.rel(1, 0));

  CHECK_THROWS_AS(btoo_finite(omega()), not_finite_error);
}

TEST_CASE("btoo_finite is monotone via simulations") {
  for (std::uint64_t m = 0; m < 5; ++m)
    for (std::uint64_t n = 0; n < 5; ++n) {
      auto w = find_simulation(btoo_finite(from_nat(m)), btoo_finite(from_nat(n)));
      CHECK(w.has_value() == (m <= n));
      if (w) CHECK(w->bounded.has_value() == (m < n));
    }
}
