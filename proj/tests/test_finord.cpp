#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

#include "ord/finord.hpp"

using namespace ord;

namespace {

fin_ord linear(std::size_t n) {
  fin_ord a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a.set(i, j, true);
  return a;
}

// linear order with a permuted carrier
fin_ord linear_permuted(const std::vector<std::size_t>& order) {
  fin_ord a(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) a.set(order[i], order[j], true);
  return a;
}

// all relations on a carrier of size n, as bit patterns
std::vector<fin_ord> all_relations(std::size_t n) {
  std::vector<fin_ord> out;
  std::size_t bits = n * n;
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    fin_ord a(n);
    for (std::size_t b = 0; b < bits; ++b)
      if (mask & (std::size_t{1} << b)) a.set(b / n, b % n, true);
    out.push_back(a);
  }
  return out;
}

bool is_strict_linear(const fin_ord& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    if (a.rel(i, i)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a.rel(i, j) == a.rel(j, i)) return false;  // connex + asymmetric
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.rel(i, j) && a.rel(j, k) && !a.rel(i, k)) return false;
  return true;
}

}  // namespace

TEST_CASE("checks on hand-built relations") {
  fin_ord empty(0);
  CHECK(check_transitive(empty));
  CHECK(check_extensional(empty));
  CHECK(check_wellfounded(empty));
  CHECK(is_ordinal(empty));

  fin_ord antichain(2);  // both predecessor sets empty
  CHECK(check_transitive(antichain));
  CHECK(!check_extensional(antichain));
  CHECK(check_wellfounded(antichain));
  CHECK(!is_ordinal(antichain));

  CHECK(is_ordinal(linear(3)));

  fin_ord cycle(2);
  cycle.set(0, 1, true);
  cycle.set(1, 0, true);
  CHECK(!check_wellfounded(cycle));

  fin_ord nontrans(3);
  nontrans.set(0, 1, true);
  nontrans.set(1, 2, true);
  CHECK(!check_transitive(nontrans));
}

TEST_CASE("valid finite orders are exactly the strict linear orders") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const fin_ord& a : all_relations(n)) CHECK(is_ordinal(a) == is_strict_linear(a));
}

TEST_CASE("simulations") {
  auto id2 = find_simulation(linear(2), linear(2));
  REQUIRE(id2.has_value());
  CHECK(id2->map == std::vector<std::size_t>({0, 1}));
  CHECK(!id2->bounded.has_value());

  auto up = find_simulation(linear(2), linear(3));
  REQUIRE(up.has_value());
  CHECK(up->map == std::vector<std::size_t>({0, 1}));
  REQUIRE(up->bounded.has_value());
  CHECK(*up->bounded == 2);

  CHECK(!find_simulation(linear(3), linear(2)).has_value());

  CHECK_THROWS_AS(find_simulation(fin_ord(2), linear(2)), invalid_order_error);

  // existence iff rank <=, bounded iff rank <; also across relabelings
  std::vector<fin_ord> orders = {linear(0), linear(1), linear(2), linear(3), linear(4),
                                 linear_permuted({2, 0, 1}), linear_permuted({3, 1, 0, 2})};
  for (const fin_ord& a : orders)
    for (const fin_ord& b : orders) {
      auto w = find_simulation(a, b);
      CHECK(w.has_value() == (rank(a) <= rank(b)));
      if (w) {
        CHECK(w->bounded.has_value() == (rank(a) < rank(b)));
        // the witness really is a simulation: monotone and downward closed
        for (std::size_t x = 0; x < a.size(); ++x)
          for (std::size_t y = 0; y < a.size(); ++y)
            if (a.rel(x, y)) CHECK(b.rel(w->map[x], w->map[y]));
      }
    }
}

TEST_CASE("at most one simulation exists") {
  std::vector<fin_ord> orders = {linear(0), linear(1), linear(2), linear(3),
                                 linear_permuted({1, 0}), linear_permuted({2, 0, 1})};
  for (const fin_ord& a : orders)
    for (const fin_ord& b : orders) {
      // exhaustive count over all maps
      std::size_t found = 0;
      std::vector<std::size_t> f(a.size(), 0);
      std::function<void(std::size_t)> go = [&](std::size_t next) {
        if (next == a.size()) {
          if (ord::detail::simulation_conditions_hold(a, b, f)) ++found;
          return;
        }
        for (std::size_t img = 0; img < b.size(); ++img) {
          f[next] = img;
          go(next + 1);
        }
      };
      if (a.size() == 0)
        found = 1;  // the empty map
      else if (b.size() > 0)
        go(0);
      CHECK(found <= 1);
      CHECK((found == 1) == find_simulation(a, b).has_value());
    }
}

TEST_CASE("constructions") {
  CHECK(rank(ord_zero()) == 0);
  CHECK(rank(ord_succ(ord_zero())) == 1);
  CHECK(is_ordinal(ord_succ(linear(3))));
  CHECK(rank(ord_succ(linear(3))) == 4);

  fin_ord s = ord_sum(linear(2), linear(3));
  CHECK(rank(s) == 5);
  CHECK(is_ordinal(s));
  CHECK(s.rel(0, 2));  // a-block below b-block

  fin_ord p = ord_prod(linear(2), linear(3));
  CHECK(rank(p) == 6);
  CHECK(is_ordinal(p));
  // reverse lexicographic: (1,0) < (0,1)
  CHECK(p.rel(1, 2));

  // closure under validity, exhaustively over valid components of size <= 3
  std::vector<fin_ord> valid;
  for (std::size_t n = 0; n <= 3; ++n)
    for (const fin_ord& a : all_relations(n))
      if (is_ordinal(a)) valid.push_back(a);
  for (const fin_ord& a : valid) {
    CHECK(is_ordinal(ord_succ(a)));
    for (const fin_ord& b : valid) {
      CHECK(is_ordinal(ord_sum(a, b)));
      CHECK(is_ordinal(ord_prod(a, b)));
      CHECK(rank(ord_sum(a, b)) == rank(a) + rank(b));
      CHECK(rank(ord_prod(a, b)) == rank(a) * rank(b));
    }
  }
}

TEST_CASE("supremum") {
  CHECK(rank(ord_sup({})) == 0);
  CHECK(rank(ord_sup({linear(2), linear(5), linear(3)})) == 5);
  CHECK(ord_sup({linear(3), linear(3)}) == linear(3));
  CHECK(is_ordinal(ord_sup({linear(1), linear(4)})));
  CHECK_THROWS_AS(ord_sup({fin_ord(2)}), invalid_order_error);

  // agreement with the max-rank oracle over families of small orders
  std::vector<fin_ord> pool = {linear(0), linear(1), linear(2), linear(3), linear(4)};
  for (const fin_ord& a : pool)
    for (const fin_ord& b : pool)
      for (const fin_ord& x : pool) {
        std::size_t expect = std::max({rank(a), rank(b), rank(x)});
        CHECK(rank(ord_sup({a, b, x})) == expect);
      }
}

TEST_CASE("segment isomorphism cross-check") {
  // in linear orders, segments are isomorphic exactly when ranks agree
  fin_ord a = linear(4);
  fin_ord b = linear_permuted({3, 1, 0, 2});
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      CHECK(segments_isomorphic(a, x, b, y) == (pred_count(a, x) == pred_count(b, y)));
}

TEST_CASE("no cycles in valid orders") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const fin_ord& a : all_relations(n)) {
      if (!is_ordinal(a)) continue;
      for (std::size_t i = 0; i < n; ++i) CHECK(!a.rel(i, i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(!(a.rel(i, j) && a.rel(j, i)));
    }
}

TEST_CASE("text format round trip") {
  fin_ord a = linear_permuted({1, 0, 2});
  std::string text = a.to_text();
  CHECK(text.substr(0, 4) == "n=3\n");
  CHECK(fin_ord::from_text(text) == a);
  CHECK(fin_ord::from_text("n=0\n") == fin_ord(0));
  CHECK_THROWS_AS(fin_ord::from_text("3\n"), syntax_error);
  CHECK_THROWS_AS(fin_ord::from_text("n=2\n01\n"), syntax_error);
  CHECK_THROWS_AS(fin_ord::from_text("n=2\n01\n2x\n"), syntax_error);
}
