#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ord/bench.hpp"

using namespace ord;

TEST_CASE("bench rows carry the invariant result 2") {
  auto rows = run_bench({"cnf", "brw"}, {0, 1, 5}, 1, 3);
  REQUIRE(rows.size() == 6);
  for (const bench_row& r : rows) {
    CHECK(r.result == 2);
    CHECK(r.seconds >= 0.0);
  }
  // rows come out in input order: reps outer, ns inner
  CHECK(rows[0].rep == "cnf");
  CHECK(rows[0].n == 0);
  CHECK(rows[3].rep == "brw");
  CHECK(rows[5].n == 5);
}

TEST_CASE("csv format") {
  bench_row r;
  r.rep = "cnf";
  r.n = 50;
  r.result = 2;
  r.seconds = 0.25;
  r.steps = 51;
  CHECK(csv_line(r) == "cnf,50,2,0.250000000,51");

  std::ostringstream os;
  write_csv(os, {r});
  CHECK(os.str() == "rep,n,result,seconds,steps\ncnf,50,2,0.250000000,51\n");
}

TEST_CASE("completed rows are flushed before a budget abort") {
  std::vector<bench_row> seen;
  auto sink = [&seen](const bench_row& r) { seen.push_back(r); };
  // w^3 at n=3 blows a tiny budget; n=0 completes first
  CHECK_THROWS_AS(run_bench({"cnf"}, {0, 50}, 0, 1, 10, sink), budget_exceeded_error);
  REQUIRE(seen.size() == 1);
  CHECK(seen[0].n == 0);
  CHECK(seen[0].result == 2);
}
