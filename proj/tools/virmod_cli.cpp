// Command-line front end. Deliberately speaks only the public C API so the
// shared library surface stays exercised end to end.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "virmod.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfig = 2;

struct StringOut {
  char* p = nullptr;
  ~StringOut() { vm_string_free(p); }
};

struct InstanceHandle {
  vm_instance_t* p = nullptr;
  ~InstanceHandle() { vm_instance_free(p); }
};

struct VectorHandle {
  vm_vector_t* p = nullptr;
  ~VectorHandle() { vm_vector_free(p); }
};

int fail(vm_status st) {
  std::cerr << "error: " << vm_last_error() << "\n";
  (void)st;
  return kExitConfig;
}

int open_instance(const std::string& path, InstanceHandle& inst) {
  vm_status st = vm_instance_from_file(path.c_str(), &inst.p);
  if (st != VM_OK) return fail(st);
  return kExitOk;
}

bool write_out(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << text;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of weight Virasoro modules"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vm_version());

  std::string path, out_path, op_spec, vec_literal, suites = "all";
  std::uint64_t seed = 1;
  int window = 5, samples = 20, degree_cap = 4;
  std::string mw_z, mw_m2, mw_m3, mw_m4, ab_b;
  std::string probe_seed;
  int probe_cap = 3, probe_ops = 6, probe_len = 4;
  long grade_lo = -2, grade_hi = 2;

  auto* describe = app.add_subcommand("describe", "print an instance summary");
  describe->add_option("file", path, "descriptor file")->required();

  auto* act = app.add_subcommand("act", "apply an operator to a vector");
  act->add_option("file", path, "descriptor file")->required();
  act->add_option("--op", op_spec, "operator: d(m), t(k), c, omega(l,m,s)")
      ->required();
  act->add_option("--vec", vec_literal, "vector literal 'component @ grade; ...'")
      ->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("file", path, "descriptor file")->required();
  verify->add_option("--suite", suites, "comma-separated selectors (default all)");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--window", window, "operator index window");
  verify->add_option("--samples", samples, "random vectors per check");
  verify->add_option("--degree-cap", degree_cap, "sampled vector degree cap");
  verify->add_option("--out", out_path, "write the report document here");
  verify->add_option("--mw-z", mw_z, "mw oracle z (p/q)");
  verify->add_option("--mw-m2", mw_m2, "mw oracle m2 (p/q)");
  verify->add_option("--mw-m3", mw_m3, "mw oracle m3 (p/q)");
  verify->add_option("--mw-m4", mw_m4, "mw oracle m4 (p/q)");
  verify->add_option("--ab-b", ab_b, "ab oracle b (p/q), b != 1");

  auto* probe = app.add_subcommand("probe", "reachability probe");
  probe->add_option("file", path, "descriptor file")->required();
  probe->add_option("--seed-vec", probe_seed, "seed vector literal")->required();
  probe->add_option("--degree-cap", probe_cap, "slice degree cap");
  probe->add_option("--grade-lo", grade_lo, "slice lowest grade");
  probe->add_option("--grade-hi", grade_hi, "slice highest grade");
  probe->add_option("--op-window", probe_ops, "|m| bound for generators");
  probe->add_option("--max-len", probe_len, "operator word length bound");
  probe->add_option("--out", out_path, "write the report document here");

  CLI11_PARSE(app, argc, argv);

  InstanceHandle inst;
  if (int rc = open_instance(path, inst)) return rc;

  if (describe->parsed()) {
    StringOut s;
    if (vm_instance_describe(inst.p, &s.p) != VM_OK) return fail(VM_ERR_PARSE);
    std::cout << s.p << "\n";
    return kExitOk;
  }

  if (act->parsed()) {
    VectorHandle in, out;
    if (vm_vector_parse(inst.p, vec_literal.c_str(), &in.p) != VM_OK)
      return fail(VM_ERR_PARSE);
    if (vm_apply(inst.p, op_spec.c_str(), in.p, &out.p) != VM_OK)
      return fail(VM_ERR_PARSE);
    StringOut s;
    vm_vector_format(out.p, &s.p);
    std::cout << s.p << "\n";
    return kExitOk;
  }

  if (verify->parsed()) {
    vm_verify_options opts;
    vm_verify_options_init(&opts);
    opts.seed = seed;
    opts.window = window;
    opts.samples = samples;
    opts.degree_cap = degree_cap;
    if (!mw_z.empty()) opts.mw_z = mw_z.c_str();
    if (!mw_m2.empty()) opts.mw_m2 = mw_m2.c_str();
    if (!mw_m3.empty()) opts.mw_m3 = mw_m3.c_str();
    if (!mw_m4.empty()) opts.mw_m4 = mw_m4.c_str();
    if (!ab_b.empty()) opts.ab_b = ab_b.c_str();
    StringOut report;
    int all_passed = 0;
    vm_status st =
        vm_verify(inst.p, suites.c_str(), &opts, &report.p, &all_passed);
    if (st != VM_OK) return fail(st);
    if (!write_out(out_path, report.p)) return kExitConfig;
    if (!out_path.empty())
      std::cout << (all_passed ? "all suites passed" : "suite failures; see report")
                << "\n";
    return all_passed ? kExitOk : kExitSuiteFailure;
  }

  if (probe->parsed()) {
    StringOut report;
    int full = 0;
    vm_status st = vm_probe(inst.p, probe_seed.c_str(), probe_cap, grade_lo,
                            grade_hi, probe_ops, probe_len, &report.p, &full);
    if (st != VM_OK) return fail(st);
    if (!write_out(out_path, report.p)) return kExitConfig;
    return kExitOk;
  }

  return kExitConfig;
}
