#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nsq/explore.hpp"
#include "nsq/families.hpp"
#include "nsq/json_io.hpp"
#include "nsq/quotient.hpp"
#include "nsq/rank.hpp"
#include "nsq/semigroup.hpp"

namespace {

using nsq::i64;

// 0 success, 2 usage, 3 verification failure, 4 budget exhaustion, 1 other.
int exit_code_for(const nsq::Error& e) {
  switch (e.code()) {
    case nsq::errc::empty_input:
    case nsq::errc::non_positive_generator:
    case nsq::errc::not_coprime:
    case nsq::errc::parameter_too_small:
    case nsq::errc::not_an_element:
    case nsq::errc::not_med:
      return 2;
    case nsq::errc::verification_failed:
      return 3;
    case nsq::errc::budget_exceeded:
    case nsq::errc::search_exhausted:
    case nsq::errc::input_too_large:
      return 4;
    case nsq::errc::overflow:
    case nsq::errc::infinite_complement:
      return 1;
  }
  return 1;
}

std::string comma_list(std::span<const i64> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

nsq::SearchBudgets budgets_from_env() {
  nsq::SearchBudgets b;
  if (const char* ms = std::getenv("NSQ_BUDGET_MS")) b.budget_ms = std::atoll(ms);
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup quotients: exact membership, quotient-rank certificates,\n"
               "counterexample families and randomized censuses"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 1;
  std::uint64_t seed = 0;
  app.add_option("--threads", threads, "worker threads (1 = sequential)");
  app.add_option("--seed", seed, "RNG seed for experiments");

  nsq::SearchBudgets budgets = budgets_from_env();

  // ---- analyze / quotient / scale / sum ----
  std::string gens_text, gens_text_b;
  bool as_json = false;
  i64 div = 1, by = 1;

  auto* analyze = app.add_subcommand("analyze", "canonical data of <gens>");
  analyze->add_option("gens", gens_text)->required();
  analyze->add_flag("--json", as_json);

  auto* quot = app.add_subcommand("quotient", "compute <gens>/d");
  quot->add_option("gens", gens_text)->required();
  quot->add_option("--div", div, "denominator d")->required();
  quot->add_flag("--json", as_json);

  auto* scale_cmd = app.add_subcommand("scale", "compute c*<gens>");
  scale_cmd->add_option("gens", gens_text)->required();
  scale_cmd->add_option("--by", by, "factor c")->required();
  scale_cmd->add_flag("--json", as_json);

  auto* sum_cmd = app.add_subcommand("sum", "sumset of two semigroups");
  sum_cmd->add_option("gensA", gens_text)->required();
  sum_cmd->add_option("gensB", gens_text_b)->required();
  sum_cmd->add_flag("--json", as_json);

  // ---- qsum / verify-rep ----
  std::string rep_a, rep_b, rep_text;
  i64 rep_scale = 1;

  auto* qsum = app.add_subcommand("qsum", "coprime quotient sum (A/c + B/d as one rep)");
  qsum->add_option("--a", rep_a, "gens:den")->required();
  qsum->add_option("--b", rep_b, "gens:den")->required();
  qsum->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify-rep", "check that a rep denotes <gens>");
  verify->add_option("gens", gens_text)->required();
  verify->add_option("--rep", rep_text, "num1,num2,...:den")->required();
  verify->add_option("--scale", rep_scale, "rep scale (default 1)");
  verify->add_flag("--json", as_json);

  // ---- rank ----
  auto* rank = app.add_subcommand("rank", "quotient-rank bounds with certificates");
  rank->add_option("gens", gens_text)->required();
  rank->add_option("--dmax", budgets.d_max, "max denominator for rep search");
  rank->add_option("--genbound", budgets.gen_bound, "max numerator generator");
  rank->add_option("--pool", budgets.pool_limit, "witness pool cap");
  rank->add_option("--max-nodes", budgets.max_nodes, "search node budget");
  rank->add_flag("--json", as_json);

  // ---- family ----
  auto* family = app.add_subcommand("family", "construct the counterexample families");
  family->require_subcommand(1);
  int fam_k = 1;
  i64 fam_a = 1, fam_d = 1, fam_h = 1;
  bool fam_verify = false, allow_boundary = false;

  auto* noq = family->add_subcommand("noquotient", "gens 2a+2^i (not a k-quotient)");
  noq->add_option("--k", fam_k)->required();
  noq->add_option("--a", fam_a)->required();
  noq->add_flag("--verify", fam_verify);
  noq->add_flag("--json", as_json);

  auto* noint = family->add_subcommand("nointersection", "not an intersection of k-quotients");
  noint->add_option("--k", fam_k)->required();
  noint->add_option("--a", fam_a)->required();
  noint->add_flag("--verify", fam_verify);
  noint->add_flag("--allow-boundary", allow_boundary, "permit a = k*2^k (fails verification)");
  noint->add_flag("--json", as_json);

  auto* arith = family->add_subcommand("arithmetical", "a, a+d, ..., a+kd");
  arith->add_option("--a", fam_a)->required();
  arith->add_option("--d", fam_d)->required();
  arith->add_option("--k", fam_k)->required();
  arith->add_flag("--json", as_json);

  auto* genarith = family->add_subcommand("generalized", "a, ah+d, ..., ah+kd");
  genarith->add_option("--a", fam_a)->required();
  genarith->add_option("--hmul", fam_h, "the factor h")->required();
  genarith->add_option("--d", fam_d)->required();
  genarith->add_option("--k", fam_k)->required();
  genarith->add_flag("--json", as_json);

  // ---- enumerate / census ----
  int genus = 0, multiplicity = 0, ceiling = nsq::kDefaultGenusCeiling;
  auto* enumerate = app.add_subcommand("enumerate", "genus-tree enumeration");
  enumerate->add_option("--genus", genus)->required();
  enumerate->add_option("--multiplicity", multiplicity, "list semigroups with this multiplicity");
  enumerate->add_option("--ceiling", ceiling, "genus ceiling guard");
  enumerate->add_flag("--json", as_json);

  auto* census = app.add_subcommand("census", "rank census over fixed (m, g)");
  census->add_option("--multiplicity", multiplicity)->required();
  census->add_option("--genus", genus)->required();
  census->add_option("--dmax", budgets.d_max);
  census->add_option("--genbound", budgets.gen_bound);
  census->add_option("--max-nodes", budgets.max_nodes);
  census->add_flag("--json", as_json);

  // ---- experiment ----
  auto* experiment = app.add_subcommand("experiment", "randomized models");
  experiment->require_subcommand(1);
  auto* box = experiment->add_subcommand("box", "n generators uniform on [1, M]");
  std::string m_list;
  i64 trials = 1000;
  std::string csv_path;
  bool coprime = false, exhaustive = false;
  box->add_option("--n", multiplicity, "number of generators")->required();
  box->add_option("--M", m_list, "comma-separated box bounds")->required();
  box->add_option("--trials", trials);
  box->add_option("--csv", csv_path, "write CSV here ('-' for stdout)");
  box->add_flag("--coprime", coprime, "condition on gcd = 1");
  box->add_flag("--exhaustive", exhaustive, "iterate all M^n tuples instead of sampling");
  box->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      if (as_json)
        std::cout << nsq::to_json(s).dump(2) << "\n";
      else
        std::cout << nsq::render_semigroup(s) << "\n";
    } else if (*quot) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      const auto q = nsq::quotient(s, div);
      if (as_json)
        std::cout << nsq::to_json(q).dump(2) << "\n";
      else
        std::cout << comma_list(q.min_gens()) << "\n";
    } else if (*scale_cmd) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      const auto q = nsq::scale(s, by);
      if (as_json)
        std::cout << nsq::to_json(q).dump(2) << "\n";
      else
        std::cout << comma_list(q.min_gens()) << "\n";
    } else if (*sum_cmd) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      const auto t = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text_b));
      const auto q = nsq::add(s, t);
      if (as_json)
        std::cout << nsq::to_json(q).dump(2) << "\n";
      else
        std::cout << comma_list(q.min_gens()) << "\n";
    } else if (*qsum) {
      const auto rep = nsq::quotient_sum_coprime(nsq::parse_rep(rep_a), nsq::parse_rep(rep_b));
      if (as_json)
        std::cout << nsq::to_json(rep).dump(2) << "\n";
      else
        std::cout << nsq::render_rep(rep) << "\n";
    } else if (*verify) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      auto rep = nsq::parse_rep(rep_text);
      rep.scale = rep_scale;
      const bool ok = nsq::verify_rep(s, rep);
      if (as_json)
        std::cout << nsq::json{{"gens", s.min_gens()}, {"rep", nsq::to_json(rep)}, {"verified", ok}}
                         .dump(2)
                  << "\n";
      else
        std::cout << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 3;
    } else if (*rank) {
      const auto s = nsq::NumericalSemigroup::from_generators(nsq::parse_gen_list(gens_text));
      const auto b = nsq::quotient_rank_bounds(s, budgets);
      if (as_json) {
        std::cout << nsq::to_json(b, s).dump(2) << "\n";
      } else {
        std::cout << nsq::render_gens(s.min_gens()) << "  rank in [" << b.lower << ", " << b.upper
                  << "]" << (b.exact ? " (exact)" : "") << "\n"
                  << "  lower: " << b.lower_reason << "\n"
                  << "  upper: " << b.upper_reason << "\n";
      }
    } else if (*family) {
      std::optional<nsq::FamilyInstance> inst;
      std::optional<nsq::NumericalSemigroup> plain;
      if (*noq) inst = nsq::noquotient_family(fam_k, fam_a);
      if (*noint) inst = nsq::nointersection_family(fam_k, fam_a, allow_boundary);
      if (*arith) plain = nsq::arithmetical_family(fam_a, fam_d, fam_k);
      if (*genarith) plain = nsq::generalized_arithmetical_family(fam_a, fam_h, fam_d, fam_k);
      if (inst) {
        nsq::json out = nsq::to_json(*inst);
        if (fam_verify) {
          const auto proof = inst->kind == nsq::FamilyKind::NoQuotient
                                 ? nsq::verify_noquotient_instance(*inst)
                                 : nsq::verify_nointersection_instance(*inst);
          out["verification"] = nsq::to_json(proof);
          if (!as_json) std::cout << "verified: all " << proof.rows.size() << " refutations hold\n";
        }
        if (as_json)
          std::cout << out.dump(2) << "\n";
        else
          std::cout << comma_list(inst->gens) << "\n";
      } else if (plain) {
        if (as_json)
          std::cout << nsq::to_json(*plain).dump(2) << "\n";
        else
          std::cout << comma_list(plain->min_gens()) << "\n";
      }
    } else if (*enumerate) {
      if (multiplicity > 0) {
        const auto all = nsq::enumerate_fixed(multiplicity, genus, ceiling);
        if (as_json) {
          nsq::json arr = nsq::json::array();
          for (const auto& s : all) arr.push_back(nsq::to_json(s));
          std::cout << nsq::json{{"multiplicity", multiplicity}, {"genus", genus},
                                 {"count", all.size()}, {"semigroups", arr}}
                           .dump(2)
                    << "\n";
        } else {
          for (const auto& s : all) std::cout << nsq::render_semigroup(s) << "\n";
          std::cerr << all.size() << " semigroups\n";
        }
      } else {
        const auto counts = nsq::genus_counts(genus, ceiling);
        if (as_json) {
          std::cout << nsq::json{{"genus_counts", counts}}.dump(2) << "\n";
        } else {
          for (std::size_t g = 0; g < counts.size(); ++g)
            std::cout << "g=" << g << " " << counts[g] << "\n";
        }
      }
    } else if (*census) {
      const auto population = nsq::enumerate_fixed(multiplicity, genus, ceiling);
      const auto table = nsq::rank_census(population, budgets, threads);
      if (as_json) {
        std::cout << nsq::to_json(table).dump(2) << "\n";
      } else {
        for (const auto& row : table.rows) {
          std::cout << nsq::render_gens(row.gens) << "  rank in [" << row.lower << ", "
                    << row.upper << "]" << (row.med ? "  MED" : "");
          if (!row.med_status.empty()) std::cout << " (" << row.med_status << ")";
          if (!row.error.empty()) std::cout << "  error: " << row.error;
          std::cout << "\n";
        }
        std::cout << "total " << table.rows.size() << "  med " << table.frac_med
                  << "  full-rank " << table.frac_full_rank << "  rank<=2 " << table.frac_rank_le_2
                  << "\n";
      }
    } else if (*box) {
      std::vector<i64> ms = nsq::parse_gen_list(m_list);
      std::vector<nsq::ExperimentRecord> records;
      if (exhaustive) {
        for (i64 m : ms) records.push_back(nsq::box_exhaustive(multiplicity, m));
      } else {
        nsq::BoxModelParams base;
        base.n = multiplicity;
        base.trials = trials;
        base.seed = seed;
        base.coprime_filter = coprime;
        records = nsq::box_experiment(base, ms, threads);
      }
      std::ostringstream csv;
      csv << nsq::csv_header() << "\n";
      for (const auto& rec : records) csv << nsq::csv_line(rec) << "\n";
      if (!csv_path.empty() && csv_path != "-") {
        std::ofstream f(csv_path);
        f << csv.str();
      }
      if (as_json) {
        nsq::json arr = nsq::json::array();
        for (const auto& rec : records) arr.push_back(nsq::to_json(rec));
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << csv.str();
      }
    }
  } catch (const nsq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
