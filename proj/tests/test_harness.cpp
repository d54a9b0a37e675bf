#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hyperg/harness.hpp"
#include "hyperg/support.hpp"

using namespace hyperg;

namespace {
const std::string kCasesM = std::string(HYPERG_DATA_DIR) + "/cases_m.csv";
const std::string kCasesF = std::string(HYPERG_DATA_DIR) + "/cases_f.csv";
const std::string kRefs = std::string(HYPERG_DATA_DIR) + "/refs.csv";
}  // namespace

TEST_CASE("case and reference files parse with the expected shape") {
  auto cm = load_cases(kCasesM);
  auto cf = load_cases(kCasesF);
  auto refs = load_refs(kRefs);
  REQUIRE(cm.size() == 40);
  REQUIRE(cf.size() == 30);
  REQUIRE(refs.size() == 70);
  for (std::size_t i = 0; i < cm.size(); ++i) {
    CHECK(cm[i].id == int(i) + 1);
    CHECK(cm[i].kind == 'M');
  }
  for (std::size_t i = 0; i < cf.size(); ++i) {
    CHECK(cf[i].id == int(i) + 1);
    CHECK(cf[i].kind == 'F');
  }
  // spot-check a few known tuples
  CHECK(cm[0].params.a == Cplx{0.1, 0});
  CHECK(cm[38].params.a == Cplx{-10, 500});
  CHECK(cf[24].params.z.real() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("digits_of_accuracy") {
  ReferenceRecord ref;
  ref.value = {2.0, 0};
  CHECK(digits_of_accuracy({2.0, 0}, ref) == 16);
  CHECK(digits_of_accuracy({2.0 * (1 + 1e-8), 0}, ref) == 8);
  CHECK(digits_of_accuracy({std::nan(""), 0}, ref) == 0);
  CHECK(digits_of_accuracy({-2.0, 0}, ref) == 0);
}

TEST_CASE("malformed files raise errors naming the line") {
  {
    std::ofstream f("/tmp/hyp_bad_cases.csv");
    f << "id,kind,a_re,a_im,b_re,b_im,c_re,c_im,z_re,z_im\n";
    f << "1,M,0.1,0,0.2,0,,,0.5,0\n";
    f << "2,M,zzz,0,0.2,0,,,0.5,0\n";
  }
  try {
    load_cases("/tmp/hyp_bad_cases.csv");
    CHECK(false);
  } catch (const std::exception& ex) {
    CHECK(std::string(ex.what()).find("line 3") != std::string::npos);
  }
  // empty case file: header only, no rows, no error
  {
    std::ofstream f("/tmp/hyp_empty_cases.csv");
    f << "id,kind,a_re,a_im,b_re,b_im,c_re,c_im,z_re,z_im\n";
  }
  CHECK(load_cases("/tmp/hyp_empty_cases.csv").empty());
}

TEST_CASE("complex literal parsing round-trips") {
  CHECK(*parse_complex("-0.5+1i") == Cplx{-0.5, 1});
  CHECK(*parse_complex("2.5") == Cplx{2.5, 0});
  CHECK(*parse_complex("1e-3-2e2i") == Cplx{1e-3, -200});
  CHECK(*parse_complex("-1i") == Cplx{0, -1});
  CHECK(!parse_complex("quux").has_value());
  // formatted output parses back to the same value
  Cplx v{-0.123456789012345678, 3.5e-9};
  CHECK(*parse_complex(format_complex(v)) == v);
}

TEST_CASE("per-method cell honors the reference regularization flag") {
  auto cm = load_cases(kCasesM);
  auto refs = load_refs(kRefs);
  const ReferenceRecord* r9 = nullptr;
  for (const auto& r : refs) {
    if (r.kind == 'M' && r.id == 9) r9 = &r;
  }
  REQUIRE(r9 != nullptr);
  CHECK(r9->unregularized);
  Cell cell = run_method_cell(cm[8], "taylor-a", *r9);
  CHECK(cell.status == Status::Converged);
  CHECK(cell.digits >= 14);
}

TEST_CASE("per-method suite emits the table shape") {
  SuiteReport rep = run_suite(kCasesM, kRefs, SuiteMode::PerMethod);
  REQUIRE(rep.rows.size() == 40);
  REQUIRE(rep.columns.size() == 7);
  for (const auto& row : rep.rows) {
    CHECK(row.cells.size() == 7);
  }
  std::string text = format_report(rep, SuiteMode::PerMethod);
  CHECK(text.find("case,taylor-a") == 0);
}

TEST_CASE("auto suite runs the dispatcher on every case") {
  SuiteReport rep = run_suite(kCasesF, kRefs, SuiteMode::Auto);
  REQUIRE(rep.rows.size() == 30);
  int converged = 0;
  for (const auto& row : rep.rows) {
    if (row.auto_status == Status::Converged) ++converged;
  }
  CHECK(converged >= 23);
}
