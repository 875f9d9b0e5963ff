#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "commands.hpp"
#include "report.hpp"
#include "sunitcount/errors.hpp"

namespace {

void add_common(CLI::App* cmd, cli::CommonOptions& opts, bool with_triple = true) {
  if (with_triple) {
    cmd->add_option("--a", opts.a, "coefficient a (positive integer)");
    cmd->add_option("--b", opts.b, "coefficient b (positive integer)");
    cmd->add_option("--c", opts.c, "coefficient c (positive integer)");
  }
  cmd->add_option("--height-cap", opts.height_cap, "max value of u, v, w (default from config)");
  cmd->add_option("--exponent-cap", opts.exponent_cap, "max exponent per prime");
  cmd->add_option("--jobs", opts.jobs, "worker count; results are independent of it")
      ->default_val(1);
  cmd->add_option("--config", opts.config_path,
                  "key = value config file (default: $SUNITCOUNT_CONFIG)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and counting engine for the S-unit equation a*u + b*v = c*w"};
  app.require_subcommand(1);

  cli::SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "enumerate coprime positive solutions over S");
  add_common(solve, solve_opts);
  auto* primes_opt =
      solve->add_option("--primes", solve_opts.primes_csv, "comma list of primes for S");
  solve->add_option("--prime-bound", solve_opts.prime_bound,
                    "use the eligible primes up to H instead of --primes")
      ->excludes(primes_opt);
  solve->add_option("--set-size", solve_opts.set_size,
                    "with --prime-bound: keep only the first s eligible primes");
  solve->add_option("--delta", solve_opts.delta, "exact rational p/q filter: keep v <= u^(p/q)");
  solve->add_flag("--full-rank", solve_opts.full_rank, "keep only solutions with omega(uvw) = s");

  cli::CountOptions count_opts;
  auto* count = app.add_subcommand("count", "count solvable s-subsets of the primes up to H");
  add_common(count, count_opts);
  count->add_option("--variant", count_opts.variant, "N | Ndelta | M | Mdelta")->required();
  count->add_option("--set-size", count_opts.set_size, "subset size s")->required();
  count->add_option("--prime-bound", count_opts.prime_bound, "prime bound H")->required();
  count->add_option("--delta", count_opts.delta, "exact rational p/q for the delta variants");
  count->add_option("--algorithm", count_opts.algorithm, "naive | supports | both")
      ->default_val("supports");
  count->add_flag("--csv", count_opts.csv, "CSV output with a fixed header");
  count->add_option("--max-subsets", count_opts.max_subsets, "naive enumeration guard override");
  count->add_option("--max-family", count_opts.max_family, "support family guard override");

  cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "run the identity and invariant suites");
  add_common(verify, verify_opts, /*with_triple=*/false);
  verify->add_option("--suite", verify_opts.suites,
                     "closed-form | parity | monotonicity | evertse | pp4 (default: all)");
  verify->add_option("--max-H", verify_opts.max_H, "largest prime bound")->default_val(30);
  verify->add_option("--max-s", verify_opts.max_s, "largest subset size")->default_val(3);
  verify->add_option("--seed", verify_opts.seed, "seed for the randomized suites")
      ->default_val(20250401);
  verify->add_option("--triples", verify_opts.triples_file,
                     "file of 'a b c' lines (default: built-in list)");

  cli::DiagnoseOptions diagnose_opts;
  auto* diagnose = app.add_subcommand("diagnose", "observed counts against a bound envelope");
  add_common(diagnose, diagnose_opts);
  diagnose->add_option("--envelope", diagnose_opts.envelope, "PP6 | PP7 | PP9 | PP10 | PP11 | PP12")
      ->required();
  diagnose->add_option("--set-size", diagnose_opts.set_size, "subset size s")->required();
  diagnose->add_option("--H-grid", diagnose_opts.grid_csv, "comma list of prime bounds")
      ->default_val("16,32,64");
  diagnose->add_option("--delta", diagnose_opts.delta,
                       "exact rational p/q (PP6 and PP10; default 1/2)");
  diagnose->add_option("--constants", diagnose_opts.constants_path,
                       "key = value file of bound constants");
  diagnose->add_flag("--csv", diagnose_opts.csv, "CSV output with a fixed header");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    if (*solve) return cli::run_solve(solve_opts);
    if (*count) return cli::run_count(count_opts);
    if (*verify) return cli::run_verify(verify_opts);
    if (*diagnose) return cli::run_diagnose(diagnose_opts);
  } catch (const sunit::GuardLimitError& e) {
    std::cerr << "[sunitcount] guard: " << e.what() << "\n";
    return cli::kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "[sunitcount] usage: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "[sunitcount] usage: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "[sunitcount] usage: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "[sunitcount] internal error: " << e.what() << "\n";
    return cli::kExitSelfCheck;
  }
  return cli::kExitUsage;
}
