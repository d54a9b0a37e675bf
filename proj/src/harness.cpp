#include "hyperg/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyperg/confluent.hpp"
#include "hyperg/gauss.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/support.hpp"

namespace hyperg {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& s, const char* what, int lineno) {
  if (s.empty()) return 0.0;
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("bad ") + what + " at line " + std::to_string(lineno));
  }
}

}  // namespace

std::vector<TestCase> load_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open case file: " + path);
  std::vector<TestCase> cases;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;  // header
    auto f = split_csv_line(line);
    if (f.size() != 10) {
      throw std::runtime_error("case file: expected 10 fields at line " + std::to_string(lineno));
    }
    TestCase tc;
    tc.id = int(parse_field(f[0], "id", lineno));
    if (f[1] != "M" && f[1] != "F") {
      throw std::runtime_error("case file: bad kind at line " + std::to_string(lineno));
    }
    tc.kind = f[1][0];
    tc.params.a = {parse_field(f[2], "a_re", lineno), parse_field(f[3], "a_im", lineno)};
    tc.params.b = {parse_field(f[4], "b_re", lineno), parse_field(f[5], "b_im", lineno)};
    tc.params.c = {parse_field(f[6], "c_re", lineno), parse_field(f[7], "c_im", lineno)};
    tc.params.z = {parse_field(f[8], "z_re", lineno), parse_field(f[9], "z_im", lineno)};
    cases.push_back(tc);
  }
  return cases;
}

std::vector<ReferenceRecord> load_refs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open refs file: " + path);
  std::vector<ReferenceRecord> refs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 5) {
      throw std::runtime_error("refs file: expected 5 fields at line " + std::to_string(lineno));
    }
    ReferenceRecord r;
    r.id = int(parse_field(f[0], "id", lineno));
    r.kind = f[1].empty() ? '?' : f[1][0];
    r.value = {parse_field(f[2], "value_re", lineno), parse_field(f[3], "value_im", lineno)};
    r.provenance = f[4];
    r.unregularized = r.provenance.find("unregularized") != std::string::npos;
    if (!is_finite(r.value)) {
      throw std::runtime_error("refs file: non-finite value at line " + std::to_string(lineno));
    }
    refs.push_back(r);
  }
  return refs;
}

int digits_of_accuracy(Cplx computed, const ReferenceRecord& ref) {
  if (!is_finite(computed)) return 0;
  double scale = std::abs(ref.value);
  double err;
  if (scale == 0.0) {
    err = std::abs(computed) / 1e-16;
  } else {
    err = std::abs(computed - ref.value) / scale;
  }
  if (err == 0.0) return 16;
  return int(std::clamp(std::floor(-std::log10(err)), 0.0, 16.0));
}

std::string Cell::text() const {
  switch (status) {
    case Status::NoConvergence: return "A";
    case Status::Overflow: return "B";
    case Status::NotApplicable: return "C";
    case Status::Converged: return std::to_string(digits);
  }
  return "?";
}

const std::vector<std::string> kMethodColumnsM = {
    "taylor-a", "taylor-b", "single-fraction", "buchholz",
    "asymptotic-a", "asymptotic-b", "gauss-jacobi"};
const std::vector<std::string> kMethodColumnsF = {
    "taylor-a", "taylor-b", "single-fraction", "gauss-jacobi", "buhring"};

Cell run_method_cell(const TestCase& tc, const std::string& column,
                     const ReferenceRecord& ref) {
  EngineOptions opt;
  opt.regularized = !ref.unregularized;
  MethodResult r;
  if (tc.kind == 'M') {
    ParamsM p{tc.params.a, tc.params.b, tc.params.z};
    if (column == "taylor-a") {
      r = m_taylor_a(p, opt);
    } else if (column == "taylor-b") {
      r = m_taylor_b(p, opt);
    } else if (column == "single-fraction") {
      r = m_single_fraction(p, opt);
    } else if (column == "buchholz") {
      r = m_buchholz(p, opt);
    } else if (column == "asymptotic-a") {
      r = m_asymptotic(p, AsymVariant::TermRecursion, opt);
    } else if (column == "asymptotic-b") {
      r = m_asymptotic(p, AsymVariant::IterativeSum, opt);
    } else if (column == "gauss-jacobi") {
      r = m_gauss_jacobi_auto(p, opt);
    } else {
      throw std::runtime_error("unknown M column: " + column);
    }
  } else {
    const ParamsF& p = tc.params;
    if (column == "taylor-a") {
      r = f_taylor_a(p, opt);
    } else if (column == "taylor-b") {
      r = f_taylor_b(p, opt);
    } else if (column == "single-fraction") {
      r = f_single_fraction(p, opt);
    } else if (column == "gauss-jacobi") {
      if (p.c.real() > p.b.real() && p.b.real() > 0.0) {
        r = f_gauss_jacobi_auto(p, opt);
      } else if (p.c.real() > p.a.real() && p.a.real() > 0.0) {
        r = f_gauss_jacobi_auto({p.b, p.a, p.c, p.z}, opt);
      } else {
        r = MethodResult::failed(Status::NotApplicable);
      }
    } else if (column == "buhring") {
      r = f_buhring(p, Cplx{0.5, 0.0}, opt);
    } else {
      throw std::runtime_error("unknown F column: " + column);
    }
  }
  Cell cell;
  cell.status = r.status;
  cell.value = r.value;
  if (r.ok()) cell.digits = digits_of_accuracy(r.value, ref);
  return cell;
}

SuiteReport run_suite(const std::string& cases_path, const std::string& refs_path,
                      SuiteMode mode, const Policy& policy) {
  auto cases = load_cases(cases_path);
  auto refs = load_refs(refs_path);
  std::map<std::pair<char, int>, const ReferenceRecord*> ref_index;
  for (const auto& r : refs) ref_index[{r.kind, r.id}] = &r;

  SuiteReport report;
  if (!cases.empty()) report.kind = cases.front().kind;
  report.columns = (report.kind == 'M') ? kMethodColumnsM : kMethodColumnsF;

  for (const auto& tc : cases) {
    auto it = ref_index.find({tc.kind, tc.id});
    if (it == ref_index.end()) {
      throw std::runtime_error("no reference for case " + std::to_string(tc.id));
    }
    const ReferenceRecord& ref = *it->second;
    SuiteRow row;
    row.id = tc.id;
    row.kind = tc.kind;
    if (mode == SuiteMode::PerMethod) {
      const auto& cols = (tc.kind == 'M') ? kMethodColumnsM : kMethodColumnsF;
      for (const auto& col : cols) row.cells.push_back(run_method_cell(tc, col, ref));
    } else {
      auto t0 = std::chrono::steady_clock::now();
      EvalResult ev = (tc.kind == 'M')
                          ? eval_m(tc.params.a, tc.params.b, tc.params.z, policy)
                          : eval_f(tc.params.a, tc.params.b, tc.params.c, tc.params.z, policy);
      auto t1 = std::chrono::steady_clock::now();
      row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      row.auto_status = ev.status;
      row.auto_est_digits = ev.est_digits;
      Cplx compare = ev.value;
      if (ev.status == Status::Converged && ref.unregularized) {
        // dispatcher output is regularized; convert for comparison
        Cplx g = tc.kind == 'M' ? tc.params.b : tc.params.c;
        ExpCombine e = exp_scaled(log_gamma(g), compare);
        compare = e.overflow ? Cplx{std::numeric_limits<double>::infinity(), 0} : e.value;
      }
      row.auto_digits = (ev.status == Status::Converged) ? digits_of_accuracy(compare, ref) : 0;
      for (std::size_t i = 0; i < ev.trace.size(); ++i) {
        if (i) row.auto_trace += ">";
        row.auto_trace += ev.trace[i].method;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_report(const SuiteReport& report, SuiteMode mode) {
  std::ostringstream os;
  if (mode == SuiteMode::PerMethod) {
    os << "case";
    for (const auto& c : report.columns) os << "," << c;
    os << "\n";
    for (const auto& row : report.rows) {
      os << row.id;
      for (const auto& cell : row.cells) os << "," << cell.text();
      os << "\n";
    }
  } else {
    os << "case,digits,est_digits,status,ms,trace\n";
    for (const auto& row : report.rows) {
      os << row.id << "," << row.auto_digits << "," << row.auto_est_digits << ","
         << status_name(row.auto_status) << "," << format_double(row.wall_ms) << ","
         << row.auto_trace << "\n";
    }
  }
  return os.str();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(Cplx v) {
  std::string s = format_double(v.real());
  if (v.imag() != 0.0 || std::signbit(v.imag())) {
    s += (std::signbit(v.imag()) ? "-" : "+");
    s += format_double(std::abs(v.imag()));
    s += "i";
  }
  return s;
}

std::optional<Cplx> parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) return std::nullopt;
  // split at the last +/- that is not an exponent sign and not leading
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
    }
  }
  try {
    if (!s.empty() && (s.back() == 'i' || s.back() == 'I')) {
      if (split == std::string::npos) {  // pure imaginary, e.g. "2i"
        std::string im = s.substr(0, s.size() - 1);
        if (im.empty() || im == "+" || im == "-") im += "1";
        return Cplx(0.0, std::stod(im));
      }
      std::string re = s.substr(0, split);
      std::string im = s.substr(split, s.size() - split - 1);
      if (im == "+" || im == "-") im += "1";
      return Cplx(std::stod(re), std::stod(im));
    }
    std::size_t pos = 0;
    double re = std::stod(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return Cplx(re, 0.0);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace hyperg
