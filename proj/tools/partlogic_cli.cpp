//  Copyright 2026 The partlogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Command-line front end. Talks to the library only through partlogic.h.
//
// Exit codes: 0 success / valid, 1 invalid with counterexample, 2 usage or
// parse error, 3 evaluation or domain error, 4 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "partlogic/partlogic.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
};

/// Prints the library's last error as one JSON line on stderr and unwinds.
[[noreturn]] void raise_error(pl_status status) {
  nlohmann::ordered_json j;
  j["error"] = pl_last_error_name();
  j["message"] = pl_last_error_message();
  if (pl_last_error_position() != SIZE_MAX) j["position"] = pl_last_error_position();
  std::cerr << j.dump() << "\n";
  throw Failure{static_cast<int>(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  nlohmann::ordered_json j{{"error", "Usage"}, {"message", message}};
  std::cerr << j.dump() << "\n";
  throw Failure{kExitUsage};
}

void check(pl_status status) {
  if (status != PL_OK) raise_error(status);
}

struct StringDeleter {
  void operator()(char* s) const { pl_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
using Names = std::unique_ptr<pl_names, HandleDeleter<pl_names, pl_names_free>>;
using Formula = std::unique_ptr<pl_formula, HandleDeleter<pl_formula, pl_formula_free>>;
using Verdict = std::unique_ptr<pl_verdict, HandleDeleter<pl_verdict, pl_verdict_free>>;
using Trace = std::unique_ptr<pl_trace, HandleDeleter<pl_trace, pl_trace_free>>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned.get();
}

Names load_names(const std::string& list) {
  if (list.empty()) return nullptr;
  pl_names* raw = nullptr;
  check(pl_names_parse(list.c_str(), &raw));
  return Names(raw);
}

Formula load_formula(const std::string& text) {
  pl_formula* raw = nullptr;
  check(pl_formula_parse(text.c_str(), &raw));
  return Formula(raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_trace(pl_trace* raw) {
  Trace trace(raw);
  char* json = nullptr;
  check(pl_trace_to_json(trace.get(), &json));
  std::cout << take(json) << "\n";
}

struct Options {
  pl_limits limits = pl_limits_default();

  std::string formula;
  std::string eval_logic;
  std::string taut_logic;
  std::size_t n = 0;
  std::size_t max_n = 0;
  std::vector<std::string> assignments;
  std::string names;
  bool json = false;
  bool dot = false;
  std::string kind = "partition";

  std::size_t k = 0;
  std::string fitness;
  double threshold = 0;
  std::size_t max_steps = 0;
  std::string events;
  bool overwrite = false;
  std::string pairs;
  std::string elements;
  std::string answers;
  std::string target;
  double margin = 1.0;
};

int cmd_eval(const Options& o) {
  pl_logic logic = PL_LOGIC_SUBSET;
  if (o.eval_logic == "partition") {
    logic = PL_LOGIC_PARTITION;
  } else if (o.eval_logic != "subset") {
    usage_error("eval supports --logic subset|partition");
  }
  const auto names = load_names(o.names);
  const auto formula = load_formula(o.formula);
  std::vector<std::string> vars, values;
  for (const auto& a : o.assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) usage_error("--assign expects var=value, got '" + a + "'");
    vars.push_back(a.substr(0, eq));
    values.push_back(a.substr(eq + 1));
  }
  std::vector<pl_binding> bindings;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    bindings.push_back({vars[i].c_str(), values[i].c_str()});
  }
  char* out = nullptr;
  check(pl_eval(formula.get(), logic, o.n, bindings.data(), bindings.size(), names.get(),
                &o.limits, &out));
  std::cout << take(out) << "\n";
  return 0;
}

int cmd_taut(const Options& o) {
  pl_logic logic = PL_LOGIC_TRUTH_TABLE;
  std::size_t max_n = o.max_n;
  if (o.taut_logic == "subset") {
    logic = PL_LOGIC_SUBSET;
    if (max_n == 0) max_n = 3;
  } else if (o.taut_logic == "partition") {
    logic = PL_LOGIC_PARTITION;
    if (max_n == 0) max_n = 4;
  } else if (o.taut_logic != "truth") {
    usage_error("taut supports --logic truth|subset|partition");
  }
  const auto names = load_names(o.names);
  const auto formula = load_formula(o.formula);
  pl_verdict* raw = nullptr;
  check(pl_check(formula.get(), logic, max_n, &o.limits, &raw));
  Verdict verdict(raw);
  char* json = nullptr;
  check(pl_verdict_to_json(verdict.get(), names.get(), &json));
  const auto doc = take(json);
  const bool valid = pl_verdict_valid(verdict.get()) != 0;
  if (o.json) {
    std::cout << doc << "\n";
  } else {
    const auto j = nlohmann::ordered_json::parse(doc);
    if (valid) {
      std::cout << "valid";
      if (logic != PL_LOGIC_TRUTH_TABLE) {
        std::cout << " (up to n=" << j["n_checked"].get<std::size_t>() << ")";
      }
      std::cout << "\n";
    } else {
      const auto& cx = j["counterexample"];
      std::cout << "invalid\ncounterexample n=" << cx["n"].get<std::size_t>() << ":";
      for (const auto& [var, value] : cx["assignment"].items()) {
        std::cout << " " << var << "=\"" << value.get<std::string>() << "\"";
      }
      std::cout << "\nvalue: " << cx["value"].get<std::string>() << "\n";
    }
  }
  return valid ? 0 : kExitInvalid;
}

int cmd_lattice(const Options& o) {
  pl_lattice_kind kind = PL_LATTICE_PARTITION;
  if (o.kind == "subset") {
    kind = PL_LATTICE_SUBSET;
  } else if (o.kind != "partition") {
    usage_error("--kind must be subset or partition");
  }
  const auto names = load_names(o.names);
  char* out = nullptr;
  check(pl_lattice_export(kind, o.n, o.dot ? PL_EXPORT_DOT : PL_EXPORT_JSON, names.get(),
                          &o.limits, &out));
  std::cout << take(out);
  if (!o.dot) std::cout << "\n";
  return 0;
}

int cmd_select(const Options& o) {
  pl_trace* raw = nullptr;
  if (o.fitness.rfind("peak@", 0) == 0) {
    auto peak = o.fitness.substr(5);
    double margin = 1.0;
    if (const auto colon = peak.find(':'); colon != std::string::npos) {
      try {
        margin = std::stod(peak.substr(colon + 1));
      } catch (const std::exception&) {
        usage_error("bad margin in '" + o.fitness + "'");
      }
      peak = peak.substr(0, colon);
    }
    check(pl_sim_select_peaked(o.k, peak.c_str(), margin, o.threshold, o.max_steps, &o.limits,
                               &raw));
  } else {
    const auto table = read_file(o.fitness);
    check(pl_sim_select(o.k, table.c_str(), o.threshold, o.max_steps, &o.limits, &raw));
  }
  print_trace(raw);
  return 0;
}

int cmd_generate(const Options& o) {
  pl_trace* raw = nullptr;
  check(pl_sim_generate(o.k, o.events.c_str(), o.overwrite ? 1 : 0, &raw));
  print_trace(raw);
  return 0;
}

int cmd_identify(const Options& o) {
  const auto names = load_names(o.names);
  pl_trace* raw = nullptr;
  check(pl_sim_identify(o.n, o.pairs.c_str(), names.get(), &raw));
  print_trace(raw);
  return 0;
}

int cmd_create(const Options& o) {
  const auto names = load_names(o.names);
  pl_trace* raw = nullptr;
  check(pl_sim_create(o.n, o.elements.c_str(), names.get(), &raw));
  print_trace(raw);
  return 0;
}

int cmd_twentyq(const Options& o) {
  pl_trace* raw = nullptr;
  check(pl_sim_twentyq(o.k, o.answers.c_str(), &o.limits, &raw));
  print_trace(raw);
  return 0;
}

int cmd_compare(const Options& o) {
  char* json = nullptr;
  int agreement = 0;
  check(pl_compare(o.k, o.target.c_str(), o.margin, &o.limits, &json, &agreement));
  std::cout << take(json) << "\n";
  return 0;
}

int cmd_schemes() {
  char* json = nullptr;
  check(pl_scheme_relations(&json));
  std::cout << take(json) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset and partition logic toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI or TOML file with option defaults; flags take precedence");

  Options o;
  auto& l = o.limits;
  app.add_option("--max-relation-n", l.max_relation_n, "Largest universe for relation work")
      ->capture_default_str();
  app.add_option("--max-lattice-n", l.max_lattice_n, "Largest universe for lattice enumeration")
      ->capture_default_str();
  app.add_option("--max-universe", l.max_universe, "Largest universe for a single partition")
      ->capture_default_str();
  app.add_option("--max-vars", l.max_truth_table_vars, "Variable cap for truth tables")
      ->capture_default_str();
  app.add_option("--partition-budget", l.partition_assignment_budget,
                 "Largest Bell(n)^vars per universe in partition search")
      ->capture_default_str();
  app.add_option("--subset-budget", l.subset_assignment_budget,
                 "Largest (2^n)^vars per universe in subset search")
      ->capture_default_str();
  app.add_option("--step-cap", l.max_steps, "Cap on selectionist steps")->capture_default_str();
  app.add_option("--threads", l.threads, "Worker threads for tautology search")
      ->capture_default_str();

  int exit_code = 0;
  auto dispatch = [&](auto fn) { return [&, fn] { exit_code = fn(); }; };

  auto* eval = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  eval->add_option("formula", o.formula, "Formula text")->required();
  eval->add_option("--logic", o.eval_logic, "subset or partition")->default_val("subset");
  eval->add_option("--n", o.n, "Universe size")->required();
  eval->add_option("--assign", o.assignments, "var=value (repeatable)");
  eval->add_option("--names", o.names, "Element names, e.g. a,b,c");
  eval->callback(dispatch([&] { return cmd_eval(o); }));

  auto* taut = app.add_subcommand("taut", "Check validity; exit 1 with a counterexample if invalid");
  taut->add_option("formula", o.formula, "Formula text")->required();
  taut->add_option("--logic", o.taut_logic, "truth, subset or partition")->default_val("truth");
  taut->add_option("--max-n", o.max_n, "Largest universe checked (subset 3, partition 4)");
  taut->add_option("--names", o.names, "Element names, e.g. a,b,c");
  taut->add_flag("--json", o.json, "Print the verdict as JSON");
  taut->callback(dispatch([&] { return cmd_taut(o); }));

  auto* lattice = app.add_subcommand("lattice", "Export a subset or partition lattice");
  lattice->add_option("--kind", o.kind, "subset or partition")->default_val("partition");
  lattice->add_option("--n", o.n, "Universe size")->required();
  lattice->add_option("--names", o.names, "Element names, e.g. a,b,c");
  auto* dot = lattice->add_flag("--dot", o.dot, "Graphviz output");
  lattice->add_flag("--json", o.json, "JSON output (default)")->excludes(dot);
  lattice->callback(dispatch([&] { return cmd_lattice(o); }));

  auto* sim = app.add_subcommand("sim", "Simulate one mechanism and print its trace");
  sim->require_subcommand(1);
  auto* select = sim->add_subcommand("select", "Selectionist U -> S");
  select->add_option("--k", o.k, "Number of switches / digits")->required();
  select->add_option("--fitness", o.fitness, "File of 'variant score' lines, or peak@BITS[:margin]")
      ->required();
  select->add_option("--threshold", o.threshold, "Extinction threshold (default 1/(100*2^k))");
  select->add_option("--max-steps", o.max_steps, "Step limit for this run");
  select->callback(dispatch([&] { return cmd_select(o); }));

  auto* generate = sim->add_subcommand("generate", "Generative 0 -> pi by setting switches");
  generate->add_option("--k", o.k, "Number of switches")->required();
  generate->add_option("--events", o.events, "switch=side list, e.g. 1=0,2=1,3=0")
      ->default_val("");
  generate->add_flag("--overwrite", o.overwrite, "Allow re-setting a switch");
  generate->callback(dispatch([&] { return cmd_generate(o); }));

  auto* ident = sim->add_subcommand("identify", "Identification 1 -> pi by merging elements");
  ident->add_option("--n", o.n, "Universe size")->required();
  ident->add_option("--pairs", o.pairs, "u-v list, e.g. 0-1,1-2")->default_val("");
  ident->add_option("--names", o.names, "Element names, e.g. a,b,c");
  ident->callback(dispatch([&] { return cmd_identify(o); }));

  auto* creat = sim->add_subcommand("create", "Creationist empty set -> S");
  creat->add_option("--n", o.n, "Universe size")->required();
  creat->add_option("--elements", o.elements, "Element list, e.g. 2,0")->default_val("");
  creat->add_option("--names", o.names, "Element names, e.g. a,b,c");
  creat->callback(dispatch([&] { return cmd_create(o); }));

  auto* twentyq = sim->add_subcommand("twentyq", "Designate blocks digit by digit");
  twentyq->add_option("--k", o.k, "Number of switches")->required();
  twentyq->add_option("--answers", o.answers, "Sides for switch 1, 2, ..., e.g. 0,1,0")
      ->default_val("");
  twentyq->callback(dispatch([&] { return cmd_twentyq(o); }));

  auto* compare = app.add_subcommand("compare", "Run both mechanisms towards one target");
  compare->add_option("--k", o.k, "Number of switches")->required();
  compare->add_option("--target", o.target, "Target variant, e.g. 010")->required();
  compare->add_option("--margin", o.margin, "Fitness advantage of the target")
      ->capture_default_str();
  compare->callback(dispatch([&] { return cmd_compare(o); }));

  auto* schemes = app.add_subcommand("schemes", "Print the four schemes with their dual and opposite");
  schemes->callback(dispatch([&] { return cmd_schemes(); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::ordered_json j{{"error", "Usage"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return kExitUsage;
  } catch (const Failure& f) {
    return f.code;
  }
  return exit_code;
}
