#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperg/dispatch.hpp"
#include "hyperg/types.hpp"

namespace hyperg {

struct TestCase {
  int id = 0;
  char kind = 'M';
  ParamsF params;  // c unused for kind == 'M'
};

struct ReferenceRecord {
  int id = 0;
  char kind = 'M';
  Cplx value{0, 0};
  std::string provenance;
  bool unregularized = false;  // provenance marks values stored as 1F1/2F1
};

// CSV loaders; throw std::runtime_error naming the offending line.
std::vector<TestCase> load_cases(const std::string& path);
std::vector<ReferenceRecord> load_refs(const std::string& path);

// floor(-log10(relative error)), clamped to [0,16]; non-finite computed
// values score 0; a zero reference compares absolutely against 1e-16.
int digits_of_accuracy(Cplx computed, const ReferenceRecord& ref);

// One per-method grid cell: either a digit count or a status letter.
struct Cell {
  Status status = Status::NotApplicable;
  int digits = 0;
  Cplx value{0, 0};
  bool is_letter() const { return status != Status::Converged; }
  std::string text() const;
};

struct SuiteRow {
  int id = 0;
  char kind = 'M';
  std::vector<Cell> cells;        // per-method mode
  int auto_digits = 0;            // auto mode
  int auto_est_digits = 0;
  Status auto_status = Status::NoConvergence;
  double wall_ms = 0.0;
  std::string auto_trace;
};

struct SuiteReport {
  char kind = 'M';
  std::vector<std::string> columns;
  std::vector<SuiteRow> rows;
};

enum class SuiteMode { PerMethod, Auto };

extern const std::vector<std::string> kMethodColumnsM;
extern const std::vector<std::string> kMethodColumnsF;

// Evaluates one engine column for one case, honoring the reference's
// regularization convention.
Cell run_method_cell(const TestCase& tc, const std::string& column, const ReferenceRecord& ref);

SuiteReport run_suite(const std::string& cases_path, const std::string& refs_path,
                      SuiteMode mode, const Policy& policy = {});

std::string format_report(const SuiteReport& report, SuiteMode mode);

// 17-significant-digit, locale-independent formatting shared by the CLI.
std::string format_double(double v);
std::string format_complex(Cplx v);
std::optional<Cplx> parse_complex(const std::string& text);

}  // namespace hyperg
