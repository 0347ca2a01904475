#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lcaforge/decide.hpp"
#include "lcaforge/verify.hpp"

namespace lcaforge {

// Command implementations behind the lcaforge binary. Each returns the
// process exit code: 0 success / realizable / verdict ok, 1 negative verdict,
// 2 usage or input error.

struct DecideArgs {
  std::string problem_path;
  Mode mode = Mode::RF;
  std::optional<std::string> dot_prefix;  // writes <prefix>.dag.dot / .net.dot
  bool embed_closure = false;
};
int cmd_decide(const DecideArgs& args, std::ostream& out, std::ostream& err);

struct ClosureArgs {
  std::string problem_path;
  bool trace = false;
};
int cmd_closure(const ClosureArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string problem_path;
  std::optional<std::string> dag_path;
  ForbidFlavor flavor = ForbidFlavor::F;
  std::optional<int> fuzz;             // sample this many random DAGs instead
  std::optional<std::uint64_t> seed;   // sampler seed; LCA_FORGE_SEED overrides
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace lcaforge
