#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "lcaforge/cli.hpp"

using namespace lcaforge;

int main(int argc, char** argv) {
  CLI::App app{"Decide realizability of required/forbidden LCA-constraints and "
               "construct witness networks"};
  app.require_subcommand(1);

  DecideArgs decide_args;
  std::string mode_flag = "rf";
  auto* decide = app.add_subcommand("decide", "Decide a constraint problem");
  decide->add_option("problem", decide_args.problem_path, "problem file")->required();
  decide->add_option("--mode", mode_flag, "rf|strict|npreceq|lca")
      ->check(CLI::IsMember({"rf", "strict", "npreceq", "lca"}));
  std::string dot_prefix;
  auto* dot_opt = decide->add_option("--dot", dot_prefix,
                                     "write <prefix>.dag.dot and <prefix>.net.dot");
  decide->add_flag("--closure", decide_args.embed_closure,
                   "embed cl_F(R) in the JSON output");

  ClosureArgs closure_args;
  auto* closure = app.add_subcommand("closure", "Print cl_F(R)");
  closure->add_option("problem", closure_args.problem_path, "problem file")->required();
  closure->add_flag("--trace", closure_args.trace, "annotate added constraints with their rule");

  VerifyArgs verify_args;
  std::string flavor_flag = "f";
  std::string dag_path;
  int fuzz_count = 0;
  auto* verify = app.add_subcommand("verify", "Check a DAG against a problem");
  verify->add_option("problem", verify_args.problem_path, "problem file")->required();
  auto* dag_opt = verify->add_option("dag", dag_path, "dag json file");
  verify->add_option("--flavor", flavor_flag, "f|npreceq|lca")
      ->check(CLI::IsMember({"f", "npreceq", "lca"}));
  auto* fuzz_opt = verify->add_option("--fuzz", fuzz_count,
                                      "sample this many seeded random DAGs instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (decide->parsed()) {
      static const std::map<std::string, Mode> modes{{"rf", Mode::RF},
                                                     {"strict", Mode::STRICT_RF},
                                                     {"npreceq", Mode::RF_NPRECEQ},
                                                     {"lca", Mode::RF_LCA}};
      decide_args.mode = modes.at(mode_flag);
      if (dot_opt->count()) decide_args.dot_prefix = dot_prefix;
      return cmd_decide(decide_args, std::cout, std::cerr);
    }
    if (closure->parsed()) return cmd_closure(closure_args, std::cout, std::cerr);
    if (verify->parsed()) {
      static const std::map<std::string, ForbidFlavor> flavors{
          {"f", ForbidFlavor::F},
          {"npreceq", ForbidFlavor::NPRECEQ},
          {"lca", ForbidFlavor::LCA}};
      verify_args.flavor = flavors.at(flavor_flag);
      if (dag_opt->count()) verify_args.dag_path = dag_path;
      if (fuzz_opt->count()) verify_args.fuzz = fuzz_count;
      return cmd_verify(verify_args, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
