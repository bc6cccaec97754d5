#ifndef ORD_BENCH_HPP
#define ORD_BENCH_HPP

// Benchmark harness: times H_(w^n)(1) for growing n in both
// representations and emits CSV rows.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ord/brw.hpp"
#include "ord/cnf.hpp"
#include "ord/errors.hpp"
#include "ord/hierarchy.hpp"

namespace ord {

struct bench_row {
  std::string rep;  // "cnf" or "brw"
  std::uint64_t n = 0;
  std::uint64_t result = 0;
  double seconds = 0.0;  // median wall-clock time of the timed samples
  std::uint64_t steps = 0;
};

inline constexpr std::uint64_t default_bench_budget = 100000000ull;  // 1e8

inline const char* bench_csv_header = "rep,n,result,seconds,steps";

inline std::string csv_line(const bench_row& r) {
  char sec[64];
  std::snprintf(sec, sizeof sec, "%.9f", r.seconds);  // '.' separator, no locale
  return r.rep + "," + std::to_string(r.n) + "," + std::to_string(r.result) + "," + sec + "," +
         std::to_string(r.steps);
}

inline void write_csv(std::ostream& os, const std::vector<bench_row>& rows) {
  os << bench_csv_header << "\n";
  for (const bench_row& r : rows) os << csv_line(r) << "\n";
}

namespace detail {

inline double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t m = xs.size() / 2;
  if (xs.size() % 2 == 1) return xs[m];
  return (xs[m - 1] + xs[m]) / 2.0;
}

}  // namespace detail

// Measures H_(w^n)(1) for each requested representation and n.  One
// warmup batch is discarded, then `samples` runs are timed and the
// median reported.  Measurements are strictly sequential.  The Brouwer
// tree is rebuilt for every run so that per-index sequence memoization
// cannot carry work across samples.  Completed rows are handed to
// on_row before the next measurement starts, so a budget abort still
// leaves the finished rows flushed.
inline std::vector<bench_row> run_bench(
    const std::vector<std::string>& reps, const std::vector<std::uint64_t>& ns, int warmup = 1,
    int samples = 5, std::uint64_t budget = default_bench_budget,
    const std::function<void(const bench_row&)>& on_row = {}) {
  std::vector<bench_row> rows;
  for (const std::string& rep : reps) {
    for (std::uint64_t n : ns) {
      bench_row row;
      row.rep = rep;
      row.n = n;
      std::vector<double> times;
      for (int run = 0; run < warmup + samples; ++run) {
        hardy_result h;
        if (rep == "cnf") {
          cnf a = omega_pow(nat(n));
          auto t0 = std::chrono::steady_clock::now();
          h = hardy_cnf(a, 1, budget);
          auto t1 = std::chrono::steady_clock::now();
          if (run >= warmup) times.push_back(std::chrono::duration<double>(t1 - t0).count());
        } else {
          brw x = exp(omega(), from_nat(n));  // fresh tree: empty memo tables
          auto t0 = std::chrono::steady_clock::now();
          h = hardy_brw(x, 1, budget);
          auto t1 = std::chrono::steady_clock::now();
          if (run >= warmup) times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        row.result = h.value;
        row.steps = h.steps;
      }
      row.seconds = detail::median(times);
      rows.push_back(row);
      if (on_row) on_row(rows.back());
    }
  }
  return rows;
}

}  // namespace ord

#endif  // ORD_BENCH_HPP
