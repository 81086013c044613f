#include "virmod.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "virmod/runner.hpp"
#include "virmod/version.hpp"

using namespace virmod;

struct vm_instance_s {
  InstanceSpec spec;
};

struct vm_vector_s {
  WeightVector vec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
vm_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return VM_ERR_PARSE;
  } catch (const ConfigError& e) {
    g_last_error = e.what();
    return VM_ERR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return VM_ERR_MISMATCH;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return VM_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* vm_version(void) { return kVersion; }

const char* vm_last_error(void) { return g_last_error.c_str(); }

void vm_string_free(char* s) { std::free(s); }

vm_status vm_instance_from_string(const char* json_text, vm_instance_t** out) {
  if (!json_text || !out) return VM_ERR_PARSE;
  return guarded([&] {
    *out = new vm_instance_s{parse_instance_spec(json_text)};
    return VM_OK;
  });
}

vm_status vm_instance_from_file(const char* path, vm_instance_t** out) {
  if (!path || !out) return VM_ERR_PARSE;
  return guarded([&] {
    *out = new vm_instance_s{load_instance_spec(path)};
    return VM_OK;
  });
}

void vm_instance_free(vm_instance_t* inst) { delete inst; }

vm_status vm_instance_describe(const vm_instance_t* inst, char** out) {
  if (!inst || !out) return VM_ERR_PARSE;
  return guarded([&] {
    *out = dup_string(describe(inst->spec));
    return VM_OK;
  });
}

vm_status vm_instance_canonical(const vm_instance_t* inst, char** out) {
  if (!inst || !out) return VM_ERR_PARSE;
  return guarded([&] {
    *out = dup_string(canonical_json(inst->spec).dump(2) + "\n");
    return VM_OK;
  });
}

vm_status vm_vector_parse(const vm_instance_t* inst, const char* literal,
                          vm_vector_t** out) {
  if (!inst || !literal || !out) return VM_ERR_PARSE;
  return guarded([&] {
    *out = new vm_vector_s{parse_weight_vector(inst->spec.desc, literal)};
    return VM_OK;
  });
}

vm_status vm_vector_format(const vm_vector_t* vec, char** out) {
  if (!vec || !out) return VM_ERR_PARSE;
  *out = dup_string(vec->vec.str());
  return VM_OK;
}

void vm_vector_free(vm_vector_t* vec) { delete vec; }

vm_status vm_apply(const vm_instance_t* inst, const char* op_spec,
                   const vm_vector_t* vec, vm_vector_t** out) {
  if (!inst || !op_spec || !vec || !out) return VM_ERR_PARSE;
  return guarded([&] {
    OperatorSpec op = parse_operator(op_spec);
    *out = new vm_vector_s{apply_operator(inst->spec, op, vec->vec)};
    return VM_OK;
  });
}

void vm_verify_options_init(vm_verify_options* opts) {
  if (!opts) return;
  std::memset(opts, 0, sizeof(*opts));
  opts->seed = 1;
  opts->window = 5;
  opts->samples = 20;
  opts->degree_cap = 4;
}

vm_status vm_verify(const vm_instance_t* inst, const char* suites,
                    const vm_verify_options* opts, char** report_out,
                    int* all_passed) {
  if (!inst || !suites || !report_out || !all_passed) return VM_ERR_PARSE;
  return guarded([&] {
    RunOptions ro;
    if (opts) {
      ro.seed = opts->seed;
      ro.window = opts->window;
      ro.samples = opts->samples;
      ro.degree_cap = opts->degree_cap;
      if (opts->mw_z || opts->mw_m2 || opts->mw_m3 || opts->mw_m4) {
        if (!(opts->mw_z && opts->mw_m2 && opts->mw_m3 && opts->mw_m4))
          throw ConfigError("mw override needs all of z, m2, m3, m4");
        ro.mw = MWOracleConfig{rat_parse(opts->mw_z), rat_parse(opts->mw_m2),
                               rat_parse(opts->mw_m3), rat_parse(opts->mw_m4)};
      }
      if (opts->ab_b) ro.ab_b = rat_parse(opts->ab_b);
    }
    std::set<std::string> sel;
    std::stringstream ss(suites);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) sel.insert(tok);
    if (sel.empty()) throw ConfigError("no suites selected");
    ReportDocument doc = run_suites(inst->spec, sel, ro);
    *report_out = dup_string(doc.dump());
    *all_passed = doc.all_passed() ? 1 : 0;
    return VM_OK;
  });
}

vm_status vm_probe(const vm_instance_t* inst, const char* seed_literal,
                   int degree_cap, long grade_lo, long grade_hi, int op_window,
                   int max_len, char** report_out, int* full) {
  if (!inst || !seed_literal || !report_out || !full) return VM_ERR_PARSE;
  return guarded([&] {
    WeightVector seed = parse_weight_vector(inst->spec.desc, seed_literal);
    ModuleInstance mi = inst->spec.twisted() ? inst->spec.at_zero()
                                             : inst->spec.plain();
    ProbeResult res = reachability_probe(mi, seed, degree_cap, grade_lo,
                                         grade_hi, op_window, max_len);
    ReportDocument doc;
    doc.seed = 0;
    doc.suites.push_back(res.report);
    *report_out = dup_string(doc.dump());
    *full = res.full ? 1 : 0;
    return VM_OK;
  });
}

}  // extern "C"
