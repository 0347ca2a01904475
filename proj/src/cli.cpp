#include "lcaforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "lcaforge/closure.hpp"
#include "lcaforge/dot.hpp"
#include "lcaforge/graph_json.hpp"
#include "lcaforge/problem.hpp"

namespace lcaforge {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultFuzzSeed = 20250809;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

json certificate_json(const Problem& p, const FailureCert& cert) {
  return json{{"condition", failed_condition_name(cert.failed_condition)},
              {"constraint", p.universe.constraint_name(cert.witness)}};
}

Decision run_decision(const Problem& p, Mode mode) {
  switch (mode) {
    case Mode::RF: return decide_rf(p.required, p.forbidden, false);
    case Mode::STRICT_RF: return decide_rf(p.required, p.forbidden, true);
    case Mode::RF_NPRECEQ: return decide_npreceq(p.required, p.forbidden);
    case Mode::RF_LCA: return decide_lca(p.required, p.forbidden);
  }
  throw std::logic_error("unreachable");
}

std::optional<Problem> load_problem(const std::string& path, std::ostream& err) {
  try {
    return parse_problem(read_file(path));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

}  // namespace

int cmd_decide(const DecideArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load_problem(args.problem_path, err);
  if (!loaded) return 2;
  const Problem& p = *loaded;

  Decision d = run_decision(p, args.mode);
  json j{{"mode", mode_name(d.mode)}, {"realizable", d.realizable}};
  if (d.certificate) j["certificate"] = certificate_json(p, *d.certificate);
  if (d.witness_dag) j["witness_dag"] = dag_to_json(*d.witness_dag);
  if (d.witness_network) j["witness_network"] = dag_to_json(*d.witness_network);
  if (args.embed_closure) {
    json closure = json::array();
    for (const auto& c :
         cl_f(p.required, p.forbidden, ClosureOptions{.record_trace = false})
             .closure.constraints())
      closure.push_back(p.universe.constraint_name(c));
    j["closure"] = std::move(closure);
  }
  out << j.dump(2) << '\n';

  if (args.dot_prefix && d.witness_dag) {
    try {
      write_file(*args.dot_prefix + ".dag.dot", emit_dot(*d.witness_dag));
      write_file(*args.dot_prefix + ".net.dot", emit_dot(*d.witness_network));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return d.realizable ? 0 : 1;
}

int cmd_closure(const ClosureArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load_problem(args.problem_path, err);
  if (!loaded) return 2;
  const Problem& p = *loaded;

  ClosureResult cl = cl_f(p.required, p.forbidden);
  std::map<Constraint, Rule> added;
  for (const auto& entry : cl.trace) added.emplace(entry.added, entry.rule);
  for (const auto& c : cl.closure.constraints()) {
    out << p.universe.constraint_name(c);
    if (args.trace) {
      auto it = added.find(c);
      if (it != added.end()) out << "  # " << rule_name(it->second);
    }
    out << '\n';
  }
  return 0;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  auto loaded = load_problem(args.problem_path, err);
  if (!loaded) return 2;
  const Problem& p = *loaded;

  if (args.fuzz) {
    std::uint64_t seed = args.seed.value_or(kDefaultFuzzSeed);
    if (const char* env = std::getenv("LCA_FORGE_SEED")) seed = std::strtoull(env, nullptr, 10);
    int budget = std::max(3, p.universe.size());
    int realizing = 0;
    json first_hit;
    for (int i = 0; i < *args.fuzz; ++i) {
      Dag g = random_dag_sampler(p.universe, budget, seed + i);
      if (verify_rf(g, p.required, p.forbidden, args.flavor).ok()) {
        if (realizing == 0) first_hit = dag_to_json(g);
        ++realizing;
      }
    }
    json j{{"samples", *args.fuzz}, {"seed", seed}, {"realizing", realizing}};
    if (realizing > 0) j["first_realizing_dag"] = std::move(first_hit);
    out << j.dump(2) << '\n';
    return 0;
  }

  if (!args.dag_path) {
    err << "error: verify needs a dag file or --fuzz\n";
    return 2;
  }
  Verdict verdict;
  try {
    json jg = json::parse(read_file(*args.dag_path));
    Dag g = dag_from_json(jg, p.universe);
    verdict = verify_rf(g, p.required, p.forbidden, args.flavor);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  json violations = json::array();
  for (const auto& v : verdict.violations)
    violations.push_back(json{{"axiom", axiom_name(v.axiom)},
                              {"constraint", p.universe.constraint_name(v.constraint)},
                              {"explanation", v.explanation}});
  out << json{{"ok", verdict.ok()}, {"violations", std::move(violations)}}.dump(2)
      << '\n';
  return verdict.ok() ? 0 : 1;
}

}  // namespace lcaforge
