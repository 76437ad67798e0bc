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

#include "partlogic/partlogic.h"

#include <cstdint>
#include <cstring>
#include <functional>
#include <new>
#include <string>

#include "partlogic/error.hpp"
#include "partlogic/formula.hpp"
#include "partlogic/lattice.hpp"
#include "partlogic/mechanisms.hpp"
#include "partlogic/serialize.hpp"
#include "partlogic/text_format.hpp"
#include "partlogic/validity.hpp"

struct pl_names {
  partlogic::ElementNames names;
};

struct pl_partition {
  partlogic::Partition value;
};

struct pl_formula {
  partlogic::Formula value;
};

struct pl_verdict {
  partlogic::Verdict value;
};

struct pl_trace {
  partlogic::Json json;
  std::size_t steps = 0;
  std::function<bool()> replays;
};

namespace {

using namespace partlogic;

struct LastError {
  pl_error_code code = PL_E_NONE;
  std::string name = "None";
  std::string message;
  std::size_t position = SIZE_MAX;
};

thread_local LastError last_error;

pl_error_code to_c(ErrorCode code) {
  // pl_error_code lists the same codes in the same order, offset by PL_E_NONE.
  return static_cast<pl_error_code>(static_cast<int>(code) + 1);
}

pl_status status_of(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Usage: return PL_ERR_USAGE;
    case ErrorCategory::Resource: return PL_ERR_RESOURCE;
    case ErrorCategory::Domain: return PL_ERR_DOMAIN;
  }
  return PL_ERR_INTERNAL;
}

pl_status fail(pl_error_code code, std::string name, std::string message, pl_status status,
               std::size_t position = SIZE_MAX) {
  last_error = {code, std::move(name), std::move(message), position};
  return status;
}

pl_status fail_null(const char* what) {
  return fail(PL_E_INVALID_ARGUMENT, "InvalidArgument", std::string(what) + " must not be NULL",
              PL_ERR_USAGE);
}

template <class F>
pl_status guard(F&& body) {
  try {
    body();
    last_error = {};
    return PL_OK;
  } catch (const partlogic::SyntaxError& e) {
    return fail(to_c(e.code()), to_string(e.code()), e.what(), status_of(e.category()),
                e.position());
  } catch (const partlogic::Error& e) {
    return fail(to_c(e.code()), to_string(e.code()), e.what(), status_of(e.category()));
  } catch (const std::bad_alloc&) {
    return fail(PL_E_RESOURCE_LIMIT, "ResourceLimit", "out of memory", PL_ERR_RESOURCE);
  } catch (const std::exception& e) {
    return fail(PL_E_INTERNAL, "Internal", e.what(), PL_ERR_INTERNAL);
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const ElementNames& names_of(const pl_names* names) {
  static const ElementNames kNone;
  return names ? names->names : kNone;
}

Limits limits_of(const pl_limits* l) {
  if (!l) return Limits{};
  Limits out;
  out.max_relation_n = l->max_relation_n;
  out.max_lattice_n = l->max_lattice_n;
  out.max_universe = l->max_universe;
  out.max_truth_table_vars = l->max_truth_table_vars;
  out.partition_assignment_budget = l->partition_assignment_budget;
  out.subset_assignment_budget = l->subset_assignment_budget;
  out.max_steps = l->max_steps;
  out.threads = l->threads;
  return out;
}

std::string text_or_empty(const char* s) { return s ? std::string(s) : std::string(); }

void check_relation_size(std::size_t n, const Limits& limits) {
  if (n > limits.max_relation_n) {
    throw Error(ErrorCode::ResourceLimit, "relation work on n=" + std::to_string(n) +
                                              " exceeds cap n<=" +
                                              std::to_string(limits.max_relation_n));
  }
}

pl_status emit_trace(pl_trace** out, Json json, std::size_t steps, std::function<bool()> replays) {
  *out = new pl_trace{std::move(json), steps, std::move(replays)};
  return PL_OK;
}

}  // namespace

extern "C" {

const char* pl_version(void) { return "0.1.0"; }

pl_limits pl_limits_default(void) {
  const Limits d;
  return {d.max_relation_n, d.max_lattice_n, d.max_universe, d.max_truth_table_vars,
          d.partition_assignment_budget, d.subset_assignment_budget, d.max_steps, d.threads};
}

pl_error_code pl_last_error_code(void) { return last_error.code; }
const char* pl_last_error_name(void) { return last_error.name.c_str(); }
const char* pl_last_error_message(void) { return last_error.message.c_str(); }
size_t pl_last_error_position(void) { return last_error.position; }

void pl_string_free(char* s) { std::free(s); }

pl_status pl_names_parse(const char* list, pl_names** out) {
  if (!list || !out) return fail_null("list and out");
  return guard([&] { *out = new pl_names{ElementNames::parse(list)}; });
}

void pl_names_free(pl_names* names) { delete names; }

// partitions

pl_status pl_partition_parse(size_t n, const char* text, const pl_names* names,
                             pl_partition** out) {
  if (!text || !out) return fail_null("text and out");
  return guard([&] { *out = new pl_partition{parse_partition(n, text, names_of(names))}; });
}

pl_status pl_partition_discrete(size_t n, pl_partition** out) {
  if (!out) return fail_null("out");
  return guard([&] { *out = new pl_partition{Partition::discrete(n)}; });
}

pl_status pl_partition_indiscrete(size_t n, pl_partition** out) {
  if (!out) return fail_null("out");
  return guard([&] { *out = new pl_partition{Partition::indiscrete(n)}; });
}

void pl_partition_free(pl_partition* p) { delete p; }

size_t pl_partition_size(const pl_partition* p) { return p ? p->value.universe_size() : 0; }
size_t pl_partition_block_count(const pl_partition* p) { return p ? p->value.block_count() : 0; }
size_t pl_partition_dit_count(const pl_partition* p) { return p ? p->value.dit_count() : 0; }

pl_status pl_partition_format(const pl_partition* p, const pl_names* names, int rgs_form,
                              char** out) {
  if (!p || !out) return fail_null("p and out");
  return guard([&] {
    *out = dup(rgs_form ? format_partition_rgs(p->value) : format_partition(p->value, names_of(names)));
  });
}

int pl_partition_equal(const pl_partition* a, const pl_partition* b) {
  return a && b && a->value == b->value;
}

pl_status pl_partition_refines(const pl_partition* p, const pl_partition* q, int* out) {
  if (!p || !q || !out) return fail_null("p, q and out");
  return guard([&] { *out = refines(p->value, q->value) ? 1 : 0; });
}

pl_status pl_partition_join(const pl_partition* p, const pl_partition* q, pl_partition** out) {
  if (!p || !q || !out) return fail_null("p, q and out");
  return guard([&] { *out = new pl_partition{join(p->value, q->value)}; });
}

pl_status pl_partition_meet(const pl_partition* p, const pl_partition* q, pl_partition** out) {
  if (!p || !q || !out) return fail_null("p, q and out");
  return guard([&] { *out = new pl_partition{meet(p->value, q->value)}; });
}

pl_status pl_partition_lift(const char* connective, size_t n,
                            const pl_partition* const* operands, size_t count,
                            pl_partition** out) {
  if (!connective || !out || (count > 0 && !operands)) return fail_null("arguments");
  return guard([&] {
    std::vector<Partition> values;
    for (size_t i = 0; i < count; ++i) {
      if (!operands[i]) throw Error(ErrorCode::InvalidArgument, "operand must not be NULL");
      values.push_back(operands[i]->value);
    }
    *out = new pl_partition{lift_connective(connective_from_name(connective), n, values)};
  });
}

pl_status pl_partition_ditset(const pl_partition* p, const pl_names* names, char** out) {
  if (!p || !out) return fail_null("p and out");
  return guard([&] { *out = dup(format_relation(dit(p->value), names_of(names))); });
}

// relations

pl_status pl_relation_closure(size_t n, const char* pairs, const pl_names* names,
                              const pl_limits* limits, char** out) {
  if (!pairs || !out) return fail_null("pairs and out");
  return guard([&] {
    check_relation_size(n, limits_of(limits));
    *out = dup(format_relation(rst_closure(parse_relation(n, pairs, names_of(names))),
                               names_of(names)));
  });
}

pl_status pl_relation_interior(size_t n, const char* pairs, const pl_names* names,
                               const pl_limits* limits, char** out) {
  if (!pairs || !out) return fail_null("pairs and out");
  return guard([&] {
    check_relation_size(n, limits_of(limits));
    *out = dup(format_relation(interior(parse_relation(n, pairs, names_of(names))),
                               names_of(names)));
  });
}

// formulas

pl_status pl_formula_parse(const char* text, pl_formula** out) {
  if (!text || !out) return fail_null("text and out");
  return guard([&] { *out = new pl_formula{parse(text)}; });
}

void pl_formula_free(pl_formula* f) { delete f; }

pl_status pl_formula_format(const pl_formula* f, char** out) {
  if (!f || !out) return fail_null("f and out");
  return guard([&] { *out = dup(format(f->value)); });
}

pl_status pl_formula_to_json(const pl_formula* f, char** out) {
  if (!f || !out) return fail_null("f and out");
  return guard([&] { *out = dup(to_json(f->value).dump()); });
}

pl_status pl_eval(const pl_formula* f, pl_logic logic, size_t n, const pl_binding* bindings,
                  size_t count, const pl_names* names, const pl_limits* limits, char** out) {
  if (!f || !out || (count > 0 && !bindings)) return fail_null("arguments");
  return guard([&] {
    const auto& table = names_of(names);
    check_relation_size(n, limits_of(limits));
    if (logic == PL_LOGIC_SUBSET) {
      SubsetAssignment a;
      a.n = n;
      for (size_t i = 0; i < count; ++i) {
        a.values.insert_or_assign(text_or_empty(bindings[i].variable),
                                  parse_subset(n, text_or_empty(bindings[i].value), table));
      }
      *out = dup(format_subset(eval_subset(f->value, a), table));
    } else if (logic == PL_LOGIC_PARTITION) {
      PartitionAssignment a;
      a.n = n;
      for (size_t i = 0; i < count; ++i) {
        a.values.insert_or_assign(text_or_empty(bindings[i].variable),
                                  parse_partition(n, text_or_empty(bindings[i].value), table));
      }
      *out = dup(format_partition(eval_partition(f->value, a), table));
    } else {
      throw Error(ErrorCode::InvalidArgument, "evaluation needs the subset or partition logic");
    }
  });
}

// validity

pl_status pl_check(const pl_formula* f, pl_logic logic, size_t n_max, const pl_limits* limits,
                   pl_verdict** out) {
  if (!f || !out) return fail_null("f and out");
  return guard([&] {
    const auto l = limits_of(limits);
    switch (logic) {
      case PL_LOGIC_TRUTH_TABLE:
        *out = new pl_verdict{truth_table_tautology(f->value, l)};
        return;
      case PL_LOGIC_SUBSET:
        *out = new pl_verdict{subset_valid(f->value, n_max, l)};
        return;
      case PL_LOGIC_PARTITION:
        *out = new pl_verdict{partition_tautology(f->value, n_max, l)};
        return;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown logic");
  });
}

int pl_verdict_valid(const pl_verdict* v) { return v && v->value.valid; }

pl_status pl_verdict_to_json(const pl_verdict* v, const pl_names* names, char** out) {
  if (!v || !out) return fail_null("v and out");
  return guard([&] { *out = dup(to_json(v->value, names_of(names)).dump()); });
}

void pl_verdict_free(pl_verdict* v) { delete v; }

// lattices

pl_status pl_lattice_export(pl_lattice_kind kind, size_t n, pl_export_format format,
                            const pl_names* names, const pl_limits* limits, char** out) {
  if (!out) return fail_null("out");
  return guard([&] {
    const auto k = kind == PL_LATTICE_SUBSET ? LatticeKind::Subset : LatticeKind::Partition;
    const auto l = limits_of(limits);
    *out = dup(format == PL_EXPORT_DOT ? lattice_dot(k, n, l, names_of(names))
                                       : lattice_json(k, n, l, names_of(names)).dump());
  });
}

// mechanisms

namespace {

pl_status run_select(const mech::Fitness& fitness, double threshold, size_t max_steps,
                     const Limits& l, pl_trace** out) {
  mech::SelectionOptions options;
  options.extinction_threshold = threshold > 0 ? threshold : mech::default_threshold(fitness.k());
  options.max_steps = max_steps ? max_steps : l.max_steps;
  if (options.max_steps > l.max_steps) {
    throw Error(ErrorCode::ResourceLimit, "max_steps " + std::to_string(options.max_steps) +
                                              " exceeds cap " + std::to_string(l.max_steps));
  }
  auto trace = mech::run_selectionist(fitness, options);
  auto json = mech::to_json(trace, fitness.k());
  const auto steps = trace.steps.size();
  const double th = options.extinction_threshold;
  return emit_trace(out, std::move(json), steps, [trace, fitness, th] {
    return mech::replay(trace, fitness, th) == trace;
  });
}

}  // namespace

pl_status pl_sim_select(size_t k, const char* fitness_table, double threshold,
                        size_t max_steps, const pl_limits* limits, pl_trace** out) {
  if (!fitness_table || !out) return fail_null("fitness_table and out");
  return guard([&] {
    run_select(mech::Fitness::parse(k, fitness_table), threshold, max_steps, limits_of(limits), out);
  });
}

pl_status pl_sim_select_peaked(size_t k, const char* target, double margin, double threshold,
                               size_t max_steps, const pl_limits* limits, pl_trace** out) {
  if (!target || !out) return fail_null("target and out");
  return guard([&] {
    const mech::VariantSpace space(k);
    run_select(mech::Fitness::peaked(k, space.parse(target), margin), threshold, max_steps,
               limits_of(limits), out);
  });
}

pl_status pl_sim_generate(size_t k, const char* events, int overwrite, pl_trace** out) {
  if (!events || !out) return fail_null("events and out");
  return guard([&] {
    const auto experience = mech::parse_events(events);
    auto trace = mech::run_generative(k, experience, overwrite != 0);
    const bool ow = overwrite != 0;
    emit_trace(out, mech::to_json(trace), trace.steps.size(),
               [trace, ow] { return mech::replay(trace, ow) == trace; });
  });
}

pl_status pl_sim_identify(size_t n, const char* pairs, const pl_names* names, pl_trace** out) {
  if (!pairs || !out) return fail_null("pairs and out");
  return guard([&] {
    const auto list = mech::parse_pairs(pairs, names_of(names));
    auto trace = mech::run_identification(n, list);
    emit_trace(out, mech::to_json(trace, names_of(names)), trace.steps.size(),
               [trace] { return mech::replay(trace) == trace; });
  });
}

pl_status pl_sim_create(size_t n, const char* elements, const pl_names* names, pl_trace** out) {
  if (!elements || !out) return fail_null("elements and out");
  return guard([&] {
    const auto list = mech::parse_elements(elements, names_of(names));
    auto trace = mech::create(n, list);
    emit_trace(out, mech::to_json(trace, names_of(names)), trace.steps.size(),
               [trace] { return mech::replay(trace) == trace; });
  });
}

pl_status pl_sim_twentyq(size_t k, const char* answers, const pl_limits* limits, pl_trace** out) {
  if (!answers || !out) return fail_null("answers and out");
  return guard([&] {
    const auto list = mech::parse_answers(answers);
    auto trace = mech::twenty_questions(k, list, limits_of(limits));
    emit_trace(out, mech::to_json(trace, k), trace.steps.size(),
               [trace] { return mech::replay(trace) == trace; });
  });
}

pl_status pl_trace_to_json(const pl_trace* t, char** out) {
  if (!t || !out) return fail_null("t and out");
  return guard([&] { *out = dup(t->json.dump()); });
}

size_t pl_trace_step_count(const pl_trace* t) { return t ? t->steps : 0; }

pl_status pl_trace_replays(const pl_trace* t, int* out) {
  if (!t || !out) return fail_null("t and out");
  return guard([&] { *out = t->replays() ? 1 : 0; });
}

void pl_trace_free(pl_trace* t) { delete t; }

pl_status pl_compare(size_t k, const char* target, double margin, const pl_limits* limits,
                     char** json, int* agreement) {
  if (!target || !json) return fail_null("target and json");
  return guard([&] {
    const mech::VariantSpace space(k);
    const auto c = mech::compare_mechanisms(k, space.parse(target), margin, limits_of(limits));
    *json = dup(mech::to_json(c).dump());
    if (agreement) *agreement = c.agreement ? 1 : 0;
  });
}

pl_status pl_scheme_relations(char** json) {
  if (!json) return fail_null("json");
  return guard([&] { *json = dup(mech::scheme_relations_json().dump()); });
}

}  // extern "C"
