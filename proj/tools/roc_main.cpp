#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "roc/families.hpp"
#include "roc/formula.hpp"
#include "roc/hardness.hpp"
#include "roc/io.hpp"
#include "roc/read2.hpp"
#include "roc/recognizer.hpp"
#include "roc/terms.hpp"

namespace {

using nlohmann::json;

json step_json(roc::Step step) {
  if (step == roc::Step::Final) return "final";
  return static_cast<int>(step);
}

json witness_json(const std::optional<std::pair<roc::VarSet, roc::VarSet>>& w,
                  const roc::VarRegistry& reg, bool minterm_side) {
  if (!w) return nullptr;
  return roc::sorted_names(minterm_side ? w->first : w->second, reg);
}

void print_witness(const roc::VarSet& s, const roc::VarRegistry& reg,
                   std::ostream& out) {
  out << '{';
  bool first = true;
  for (const auto& name : roc::sorted_names(s, reg)) {
    if (!first) out << ", ";
    first = false;
    out << name;
  }
  out << '}';
}

int cmd_check(const std::string& cnf_path, const std::string& dnf_path,
              bool as_json) {
  roc::VarRegistry reg;
  auto clauses = roc::parse_set_file(cnf_path, reg);
  auto terms = roc::parse_set_file(dnf_path, reg);
  roc::Instance inst = roc::validate(std::move(clauses), std::move(terms), reg);
  roc::RecognitionResult res = roc::recognize(inst);
  bool read_once = res.verdict == roc::Verdict::ReadOnce;
  if (as_json) {
    json out{{"verdict", read_once ? "READ_ONCE" : "NOT_READ_ONCE"},
             {"step", step_json(res.step)},
             {"minterm", witness_json(res.witness, reg, true)},
             {"maxterm", witness_json(res.witness, reg, false)}};
    std::cout << out.dump() << '\n';
  } else if (read_once) {
    std::cout << "READ_ONCE (decided at step "
              << (res.step == roc::Step::Final
                      ? std::string("final")
                      : std::to_string(static_cast<int>(res.step)))
              << ")\n";
  } else {
    std::cout << "NOT_READ_ONCE (decided at step "
              << static_cast<int>(res.step) << ")\n";
    std::cout << "minterm: ";
    print_witness(res.witness->first, reg, std::cout);
    std::cout << "\nmaxterm: ";
    print_witness(res.witness->second, reg, std::cout);
    std::cout << '\n';
  }
  return read_once ? 0 : 1;
}

int cmd_oracle(const std::string& formula_path, std::size_t max_vars,
               bool as_json) {
  roc::VarRegistry reg;
  roc::FormulaPtr f = roc::parse_formula_file(formula_path, reg);
  roc::ReadOnceVerdict v = roc::is_read_once_oracle(*f, reg.size(), max_vars);
  if (as_json) {
    json out{{"verdict", v.read_once ? "READ_ONCE" : "NOT_READ_ONCE"},
             {"step", nullptr},
             {"minterm", witness_json(v.witness, reg, true)},
             {"maxterm", witness_json(v.witness, reg, false)}};
    std::cout << out.dump() << '\n';
  } else if (v.read_once) {
    std::cout << "READ_ONCE\n";
  } else {
    std::cout << "NOT_READ_ONCE\nminterm: ";
    print_witness(v.witness->first, reg, std::cout);
    std::cout << "\nmaxterm: ";
    print_witness(v.witness->second, reg, std::cout);
    std::cout << '\n';
  }
  return v.read_once ? 0 : 1;
}

int cmd_taut(const std::string& cnf_path, const std::string& dnf_path,
             bool as_json) {
  roc::VarRegistry reg;
  auto clauses = roc::parse_set_file(cnf_path, reg);
  auto terms = roc::parse_set_file(dnf_path, reg);
  roc::check_disjoint_family(clauses, "clause");
  roc::check_disjoint_family(terms, "term");
  if (clauses.empty()) throw roc::ValidationError("empty clause");
  if (terms.empty()) throw roc::ValidationError("empty term");
  auto [taut, s0] =
      roc::implies_tautology(roc::ReadOnceCnf{clauses}, roc::ReadOnceDnf{terms});
  if (as_json) {
    json out{{"tautology", taut},
             {"counterexample", taut ? json(nullptr)
                                     : json(roc::sorted_names(*s0, reg))}};
    std::cout << out.dump() << '\n';
  } else if (taut) {
    std::cout << "TAUTOLOGY\n";
  } else {
    std::cout << "NOT_TAUTOLOGY\ncounterexample set: ";
    print_witness(*s0, reg, std::cout);
    std::cout << '\n';
  }
  return taut ? 0 : 1;
}

int cmd_reduce(const std::string& graph_path, int k, bool with_wrapper,
               const std::string& out_dir) {
  roc::Graph g = roc::parse_graph_file(graph_path);
  roc::ReductionOutput red = roc::build_reduction(g, k);
  std::filesystem::create_directories(out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(out_dir) / name).string();
  };

  roc::write_file(path("psi.formula"),
                  roc::render(*red.psi, *red.registry) + "\n");
  roc::write_file(path("dn.dnf"),
                  roc::render_set_file(red.dn.terms, *red.registry));

  json manifest{{"n_vars", red.registry->size()},
                {"conf_size", red.conf.size()}};
  json names = json::array();
  for (std::size_t v = 0; v < red.registry->size(); ++v)
    names.push_back(red.registry->name(static_cast<int>(v)));
  manifest["variable_names"] = names;

  if (with_wrapper) {
    roc::FormulaPtr wrapper =
        roc::read2_wrapper(red.psi, red.dn, *red.registry);
    roc::write_file(path("wrapper.formula"),
                    roc::render(*wrapper, *red.registry) + "\n");
  }
  roc::write_file(path("manifest.json"), manifest.dump(2) + "\n");

  std::cout << "wrote " << path("psi.formula") << ", " << path("dn.dnf");
  if (with_wrapper) std::cout << ", " << path("wrapper.formula");
  std::cout << ", " << path("manifest.json") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"read-once recognition for C|D expressions, ground-truth "
               "oracle, and coNP-hard instance generation"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized tooling (reserved)");

  std::string cnf_path, dnf_path, formula_path, graph_path;
  std::string out_dir = ".";
  std::size_t max_vars = 24;
  bool as_json = false;
  bool with_wrapper = false;
  int k = 2;

  CLI::App* check = app.add_subcommand(
      "check", "decide whether CNF|DNF computes a read-once function");
  check->add_option("cnf", cnf_path, "read-once CNF file")->required();
  check->add_option("dnf", dnf_path, "read-once DNF file")->required();
  check->add_flag("--json", as_json, "machine-readable output");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force read-once test for a monotone formula");
  oracle->add_option("formula", formula_path, "formula file")->required();
  oracle->add_option("--max-vars", max_vars, "variable-count guard");
  oracle->add_flag("--json", as_json, "machine-readable output");

  CLI::App* taut = app.add_subcommand(
      "taut", "decide whether CNF -> DNF is a tautology");
  taut->add_option("cnf", cnf_path, "read-once CNF file")->required();
  taut->add_option("dnf", dnf_path, "read-once DNF file")->required();
  taut->add_flag("--json", as_json, "machine-readable output");

  CLI::App* reduce = app.add_subcommand(
      "reduce", "build the clique-game formula pair from a graph");
  reduce->add_option("graph", graph_path, "graph file")->required();
  reduce->add_option("-k,--k", k, "number of cells")->required();
  reduce->add_flag("--wrapper", with_wrapper, "also emit the read-2 wrapper");
  reduce->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(cnf_path, dnf_path, as_json);
    if (oracle->parsed()) return cmd_oracle(formula_path, max_vars, as_json);
    if (taut->parsed()) return cmd_taut(cnf_path, dnf_path, as_json);
    if (reduce->parsed()) return cmd_reduce(graph_path, k, with_wrapper, out_dir);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}
