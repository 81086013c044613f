#include <doctest.h>

#include <virmod.h>

#include <cstring>
#include <string>

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { vm_string_free(p); }
  std::string get() const { return p ? p : ""; }
};

struct Inst {
  vm_instance_t* h = nullptr;
  ~Inst() { vm_instance_free(h); }
};

struct Vec {
  vm_vector_t* h = nullptr;
  ~Vec() { vm_vector_free(h); }
};

const char* kGamma =
    "{\"family\": \"gamma\", \"parameters\": {\"alpha1\": \"1/2\", "
    "\"lambda1\": \"1/3\", \"lambda2\": \"2\"}, \"mode\": {\"plain\": "
    "\"1/4\"}}";

}  // namespace

TEST_CASE("version string") {
  REQUIRE(vm_version() != nullptr);
  CHECK(std::strlen(vm_version()) > 0);
}

TEST_CASE("instance lifecycle and describe") {
  Inst inst;
  REQUIRE(vm_instance_from_string(kGamma, &inst.h) == VM_OK);
  Str desc;
  REQUIRE(vm_instance_describe(inst.h, &desc.p) == VM_OK);
  CHECK(desc.get().find("gamma") != std::string::npos);
  CHECK(desc.get().find("rank 2") != std::string::npos);

  Str canon;
  REQUIRE(vm_instance_canonical(inst.h, &canon.p) == VM_OK);
  Inst again;
  REQUIRE(vm_instance_from_string(canon.p, &again.h) == VM_OK);
  Str canon2;
  REQUIRE(vm_instance_canonical(again.h, &canon2.p) == VM_OK);
  CHECK(canon.get() == canon2.get());
}

TEST_CASE("error codes and last_error") {
  vm_instance_t* out = nullptr;
  CHECK(vm_instance_from_string("not json", &out) == VM_ERR_PARSE);
  CHECK(std::strlen(vm_last_error()) > 0);
  CHECK(vm_instance_from_string(
            "{\"family\": \"gamma\", \"parameters\": {\"alpha1\": \"0\", "
            "\"lambda1\": \"0\", \"lambda2\": \"0\"}}",
            &out) == VM_ERR_CONFIG);
  CHECK(vm_instance_from_file("/nonexistent/file.json", &out) == VM_ERR_PARSE);
}

TEST_CASE("vectors and operator application") {
  Inst inst;
  REQUIRE(vm_instance_from_string(kGamma, &inst.h) == VM_OK);
  Vec v;
  REQUIRE(vm_vector_parse(inst.h, "x^2 - 1 @ 0", &v.h) == VM_OK);
  Str fmt;
  REQUIRE(vm_vector_format(v.h, &fmt.p) == VM_OK);
  CHECK(!fmt.get().empty());

  Vec dv;
  REQUIRE(vm_apply(inst.h, "d(0)", v.h, &dv.h) == VM_OK);
  Str dfmt;
  REQUIRE(vm_vector_format(dv.h, &dfmt.p) == VM_OK);
  // d_0 scales by the weight alpha + 0 = 1/4
  CHECK(dfmt.get().find("1/4") != std::string::npos);

  Vec cv;
  REQUIRE(vm_apply(inst.h, "c", v.h, &cv.h) == VM_OK);
  Str cfmt;
  REQUIRE(vm_vector_format(cv.h, &cfmt.p) == VM_OK);
  CHECK(cfmt.get() == "0");

  vm_vector_t* bad = nullptr;
  CHECK(vm_vector_parse(inst.h, "nonsense", &bad) == VM_ERR_PARSE);
  CHECK(vm_apply(inst.h, "frob(1)", v.h, &bad) == VM_ERR_PARSE);
}

TEST_CASE("verify through the C boundary") {
  Inst inst;
  REQUIRE(vm_instance_from_string(kGamma, &inst.h) == VM_OK);
  vm_verify_options opts;
  vm_verify_options_init(&opts);
  opts.samples = 4;
  opts.window = 3;

  Str report;
  int all_passed = -1;
  REQUIRE(vm_verify(inst.h, "bracket,lemma3", &opts, &report.p, &all_passed) ==
          VM_OK);
  CHECK(all_passed == 1);
  CHECK(report.get().find("\"suite\"") != std::string::npos);

  // identical options give a byte-identical report
  Str report2;
  int again = -1;
  REQUIRE(vm_verify(inst.h, "bracket,lemma3", &opts, &report2.p, &again) ==
          VM_OK);
  CHECK(report.get() == report2.get());

  Str bogus;
  CHECK(vm_verify(inst.h, "bogus", &opts, &bogus.p, &all_passed) ==
        VM_ERR_CONFIG);

  // a degenerate oracle config is a configuration error, not a suite failure
  opts.mw_z = "2";
  opts.mw_m2 = "1";
  opts.mw_m3 = "3";
  opts.mw_m4 = "6"; /* z m3 = m4 */
  Str degen;
  CHECK(vm_verify(inst.h, "mw", &opts, &degen.p, &all_passed) == VM_ERR_CONFIG);
}

TEST_CASE("probe through the C boundary") {
  Inst inst;
  REQUIRE(vm_instance_from_string(
              "{\"family\": \"onedim\", \"parameters\": {\"b\": \"0\"}, "
              "\"mode\": {\"plain\": \"0\"}}",
              &inst.h) == VM_OK);
  Str report;
  int full = -1;
  REQUIRE(vm_probe(inst.h, "1 @ 0", 0, -2, 2, 4, 3, &report.p, &full) == VM_OK);
  CHECK(full == 0);
  CHECK(report.get().find("slice_rank") != std::string::npos);
}
