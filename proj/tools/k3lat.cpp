#include "k3lat/commands.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <string>

namespace {

struct Args {
  long d = 4;
  std::int64_t p = 23;
  std::string epsilon = "1/100";
  long trials = 100;
  std::uint64_t seed = 0;
  std::string in_path;
  std::string out_path;
  std::int64_t p_max = 23;
  bool require_posdef = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3lat: exact arithmetic for the rank-21 polarized K3 lattice Lambda_d —\n"
               "plane discriminant checks mod p, certified perturbation to Property R,\n"
               "residue-lemma sweeps and density sampling"};
  app.require_subcommand(1);
  Args args;

  CLI::App* info = app.add_subcommand("lattice-info", "Rank, determinant, signature and Gram matrix of Lambda_d");
  info->add_option("--d", args.d, "even polarization degree, >= 2")->required();

  CLI::App* check = app.add_subcommand("check", "Property R verdicts (stored and saturated basis) for a plane file");
  check->add_option("--in", args.in_path, "plane JSON file {d, omega1, omega2}")->required();
  check->add_option("--p", args.p, "odd prime")->required();

  CLI::App* perturb = app.add_subcommand("perturb", "Perturb a plane to Property R and emit a replayable certificate");
  perturb->add_option("--in", args.in_path, "plane JSON file")->required();
  perturb->add_option("--p", args.p, "odd prime >= 5, not dividing d")->required();
  perturb->add_option("--epsilon", args.epsilon, "distance budget, rational like 1/100");
  perturb->add_option("--out", args.out_path, "certificate file (stdout when omitted)");

  CLI::App* verify = app.add_subcommand("verify", "Re-audit an existing certificate file");
  verify->add_option("--in", args.in_path, "certificate JSON file")->required();

  CLI::App* sweep = app.add_subcommand("lemma-sweep", "Exhaust A - B*y^2 solvability for all odd primes 5 <= p <= p_max (CSV)");
  sweep->add_option("--p-max", args.p_max, "largest prime to sweep")->required();

  CLI::App* sample = app.add_subcommand("sample-density", "Run the engine on seeded random planes and report exact distance stats");
  sample->add_option("--d", args.d, "even polarization degree, >= 2")->required();
  sample->add_option("--p", args.p, "odd prime >= 5, not dividing d")->required();
  sample->add_option("--trials", args.trials, "number of random planes");
  sample->add_option("--epsilon", args.epsilon, "distance budget, rational like 1/100");
  sample->add_option("--seed", args.seed, "64-bit RNG seed");
  sample->add_option("--out", args.out_path, "also write the report to this file");
  sample->add_flag("--require-posdef", args.require_posdef,
                   "rejection-sample inputs until the restricted form is positive definite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return k3lat::cli::kExitUsage;
  }

  try {
    if (info->parsed()) return k3lat::cli::run_lattice_info(args.d, std::cout);
    if (check->parsed()) return k3lat::cli::run_check(args.in_path, args.p, std::cout);
    if (perturb->parsed()) {
      return k3lat::cli::run_perturb(args.in_path, args.p, args.epsilon, args.out_path, std::cout);
    }
    if (verify->parsed()) return k3lat::cli::run_verify(args.in_path, std::cout);
    if (sweep->parsed()) return k3lat::cli::run_lemma_sweep(args.p_max, std::cout);
    if (sample->parsed()) {
      return k3lat::cli::run_sample_density(args.d, args.p, args.trials, args.epsilon, args.seed,
                                            args.require_posdef, args.out_path, std::cout);
    }
  } catch (const k3lat::Error& e) {
    std::cerr << "k3lat: error (" << k3lat::error_code_name(e.code()) << "): " << e.what() << "\n";
    return k3lat::cli::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "k3lat: error: " << e.what() << "\n";
    return k3lat::cli::kExitPrecondition;
  }
  return k3lat::cli::kExitUsage;
}
