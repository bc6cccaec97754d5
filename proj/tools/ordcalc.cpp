// ordcalc: command-line front end for ordinal arithmetic below epsilon_0.
//
// Expressions use the grammar 0 | nat | w | A+B | A*B | w^A with the
// usual precedence (+ < * < ^, ^ right-associative).  Exit codes:
//   0 success, 1 expression syntax error, 2 domain error,
//   3 refutation found by check-embed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ord/ord.hpp"

namespace {

std::string cmp_name(std::strong_ordering c) {
  if (c == std::strong_ordering::less) return "LT";
  if (c == std::strong_ordering::greater) return "GT";
  return "EQ";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ord::domain_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint64_t> parse_n_list(const std::string& csv) {
  std::vector<std::uint64_t> ns;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) ns.push_back(std::stoull(item));
  return ns;
}

std::vector<std::string> parse_rep_list(const std::string& csv) {
  std::vector<std::string> reps;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "cnf" && item != "brw")
      throw ord::domain_error("unknown representation: " + item);
    reps.push_back(item);
  }
  return reps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal arithmetic below epsilon_0"};
  app.require_subcommand(1);

  ord::fuel_t fuel = ord::default_fuel;
  std::uint64_t budget = ord::default_bench_budget;
  app.add_option("--fuel", fuel, "search budget for tree comparisons");
  app.add_option("--budget", budget, "step budget for hierarchy evaluation");

  std::string arg_a, arg_b, arg_rep = "cnf", arg_out;
  std::uint64_t arg_k = 0, arg_n = 0;
  std::size_t arg_bound = 3;
  std::string arg_reps = "cnf,brw", arg_ns = "500,1000";
  int arg_samples = 5, arg_warmup = 1;
  std::string file1, file2;

  auto* cmd_cmp = app.add_subcommand("cmp", "compare two ordinals");
  cmd_cmp->add_option("a", arg_a)->required();
  cmd_cmp->add_option("b", arg_b)->required();

  auto* cmd_add = app.add_subcommand("add", "sum of two ordinals");
  cmd_add->add_option("a", arg_a)->required();
  cmd_add->add_option("b", arg_b)->required();

  auto* cmd_mul = app.add_subcommand("mul", "product of two ordinals");
  cmd_mul->add_option("a", arg_a)->required();
  cmd_mul->add_option("b", arg_b)->required();

  auto* cmd_sub = app.add_subcommand("sub", "difference a - b (requires b <= a)");
  cmd_sub->add_option("a", arg_a)->required();
  cmd_sub->add_option("b", arg_b)->required();

  auto* cmd_divmod = app.add_subcommand("divmod", "euclidean division a = b*q + r");
  cmd_divmod->add_option("a", arg_a)->required();
  cmd_divmod->add_option("b", arg_b)->required();

  auto* cmd_classify = app.add_subcommand("classify", "zero, successor, or limit");
  cmd_classify->add_option("a", arg_a)->required();

  auto* cmd_fundseq = app.add_subcommand("fundseq", "fundamental sequence prefix of a limit");
  cmd_fundseq->add_option("a", arg_a)->required();
  cmd_fundseq->add_option("k", arg_k, "number of elements")->required();

  auto* cmd_hardy = app.add_subcommand("hardy", "Hardy hierarchy value H_a(n)");
  cmd_hardy->add_option("--rep", arg_rep, "cnf or brw")->check(CLI::IsMember({"cnf", "brw"}));
  cmd_hardy->add_option("a", arg_a)->required();
  cmd_hardy->add_option("n", arg_n)->required();

  auto* cmd_check = app.add_subcommand("check-embed", "check embedding preservation");
  cmd_check->add_option("--bound", arg_bound, "enumeration bound");

  auto* cmd_bench = app.add_subcommand("bench", "time H_(w^n)(1) per representation");
  cmd_bench->add_option("--reps", arg_reps, "comma-separated: cnf,brw");
  cmd_bench->add_option("--ns", arg_ns, "comma-separated exponents");
  cmd_bench->add_option("--samples", arg_samples, "timed runs per point");
  cmd_bench->add_option("--warmup", arg_warmup, "discarded runs per point");
  cmd_bench->add_option("--out", arg_out, "CSV output file (default stdout)");

  auto* cmd_fcheck = app.add_subcommand("finord-check", "validate a finite order file");
  cmd_fcheck->add_option("file", file1)->required();

  auto* cmd_fsim = app.add_subcommand("finord-sim", "search a simulation between two orders");
  cmd_fsim->add_option("file1", file1)->required();
  cmd_fsim->add_option("file2", file2)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*cmd_cmp) {
      std::cout << cmp_name(ord::compare(ord::parse_cnf(arg_a), ord::parse_cnf(arg_b))) << "\n";
    } else if (*cmd_add) {
      std::cout << ord::print_cnf(ord::add(ord::parse_cnf(arg_a), ord::parse_cnf(arg_b))) << "\n";
    } else if (*cmd_mul) {
      std::cout << ord::print_cnf(ord::mul(ord::parse_cnf(arg_a), ord::parse_cnf(arg_b))) << "\n";
    } else if (*cmd_sub) {
      std::cout << ord::print_cnf(ord::sub(ord::parse_cnf(arg_a), ord::parse_cnf(arg_b))) << "\n";
    } else if (*cmd_divmod) {
      auto [q, r] = ord::divmod(ord::parse_cnf(arg_a), ord::parse_cnf(arg_b));
      std::cout << "q=" << ord::print_cnf(q) << " r=" << ord::print_cnf(r) << "\n";
    } else if (*cmd_classify) {
      ord::cnf_class cls = ord::classify(ord::parse_cnf(arg_a));
      switch (cls.kind()) {
        case ord::cnf_kind::zero:
          std::cout << "zero\n";
          break;
        case ord::cnf_kind::successor:
          std::cout << "succ " << ord::print_cnf(cls.pred()) << "\n";
          break;
        default:
          std::cout << "limit\n";
      }
    } else if (*cmd_fundseq) {
      ord::cnf a = ord::parse_cnf(arg_a);
      if (ord::classify(a).kind() != ord::cnf_kind::limit) throw ord::not_a_limit_error();
      for (std::uint64_t i = 0; i < arg_k; ++i)
        std::cout << (i ? " " : "") << ord::print_cnf(ord::fund_at(a, i));
      std::cout << "\n";
    } else if (*cmd_hardy) {
      ord::cnf a = ord::parse_cnf(arg_a);
      ord::hardy_result h = arg_rep == "cnf" ? ord::hardy_cnf(a, arg_n, budget)
                                             : ord::hardy_brw(ord::ctob(a), arg_n, budget);
      std::cout << h.value << "\n";
    } else if (*cmd_check) {
      ord::embed_report order = ord::check_order_preservation(arg_bound, fuel);
      ord::embed_report arith = ord::check_arith_preservation(arg_bound, fuel);
      ord::embed_report total = order;
      total.pairs_checked += arith.pairs_checked;
      total.definitive_agreements += arith.definitive_agreements;
      total.unknowns += arith.unknowns;
      total.refutations += arith.refutations;
      for (const ord::cnf& a : ord::enumerate(arg_bound)) {
        if (ord::classify(a).kind() != ord::cnf_kind::limit) continue;
        ord::embed_report f = ord::check_fundseq_preservation(a, 4, fuel);
        total.pairs_checked += f.pairs_checked;
        total.definitive_agreements += f.definitive_agreements;
        total.unknowns += f.unknowns;
        total.refutations += f.refutations;
      }
      std::cout << total.to_string() << "\n";
      if (total.refutations > 0) return 3;
    } else if (*cmd_bench) {
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!arg_out.empty()) {
        file.open(arg_out, std::ios::trunc);
        if (!file) throw ord::domain_error("cannot open output file: " + arg_out);
        os = &file;
      }
      *os << ord::bench_csv_header << "\n";
      os->flush();
      auto sink = [os](const ord::bench_row& row) {
        *os << ord::csv_line(row) << "\n";
        os->flush();  // keep completed rows on disk if a later one aborts
      };
      ord::run_bench(parse_rep_list(arg_reps), parse_n_list(arg_ns), arg_warmup, arg_samples,
                     budget, sink);
    } else if (*cmd_fcheck) {
      ord::fin_ord a = ord::fin_ord::from_text(read_file(file1));
      std::cout << "transitive=" << check_transitive(a) << " extensional=" << check_extensional(a)
                << " wellfounded=" << check_wellfounded(a) << " ordinal=" << is_ordinal(a)
                << "\n";
    } else if (*cmd_fsim) {
      ord::fin_ord a = ord::fin_ord::from_text(read_file(file1));
      ord::fin_ord b = ord::fin_ord::from_text(read_file(file2));
      auto w = ord::find_simulation(a, b);
      if (!w) {
        std::cout << "none\n";
      } else {
        std::cout << "map=";
        for (std::size_t i = 0; i < w->map.size(); ++i)
          std::cout << (i ? "," : "") << w->map[i];
        if (w->bounded) std::cout << " bounded=" << *w->bounded;
        std::cout << "\n";
      }
    }
  } catch (const ord::syntax_error& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 1;
  } catch (const ord::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
