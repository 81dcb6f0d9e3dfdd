// stirling: exact values, approximants and verification suites from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirling/stirling.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace stirling;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr unsigned long kNMaxGuard = 5000;
constexpr unsigned kMinDigits = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind = "stirling";
  std::optional<std::string> gamma;
  std::optional<unsigned long> n;
  std::optional<long> j;
  std::optional<unsigned long> n_max;
  std::optional<unsigned long> order;
  unsigned precision_digits = 100;
  std::string suite;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

unsigned default_precision_digits() {
  const char* env = std::getenv("STIRLING_PRECISION_DIGITS");
  if (env == nullptr || *env == '\0') return 100;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("STIRLING_PRECISION_DIGITS is not a number: ") + env);
  }
}

// Data goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::optional<std::string>& path) {
    if (path) {
      file_.open(*path);
      if (!file_) throw UsageError("cannot open output file: " + *path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

unsigned long require_n(const RunConfig& cfg) {
  if (!cfg.n) throw UsageError("--n is required");
  if (*cfg.n > kNMaxGuard) throw UsageError("--n exceeds the 5000 guard");
  return *cfg.n;
}

std::string format_of(const RunConfig& cfg, const char* fallback) {
  const std::string f = cfg.format.value_or(fallback);
  if (f != "json" && f != "csv" && f != "plain") throw UsageError("--format must be json, csv or plain");
  return f;
}

Kind kind_of(const RunConfig& cfg) {
  if (cfg.kind == "bell") throw UsageError("--kind bell is only valid for exact and table");
  try {
    return parse_kind(cfg.kind);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// 2 gamma for jacobi; chebyshev and stirling ignore --gamma.
ExactRational two_gamma_of(const RunConfig& cfg, Kind kind) {
  if (kind != Kind::jacobi) return ExactRational(1);
  if (!cfg.gamma) throw UsageError("--gamma is required for --kind jacobi");
  ExactRational g;
  try {
    g = parse_rational(*cfg.gamma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g <= 0) throw UsageError("--gamma must be positive");
  return ExactRational(2 * g);
}

void emit_value_rows(std::ostream& os, const std::string& fmt, const std::string& kind,
                     const std::vector<std::tuple<unsigned long, std::optional<long>, std::string>>& rows) {
  if (fmt == "csv") {
    os << "n,j,value\n";
    for (const auto& [n, j, v] : rows) os << n << ',' << (j ? std::to_string(*j) : "") << ',' << v << '\n';
  } else if (fmt == "json") {
    json arr = json::array();
    for (const auto& [n, j, v] : rows) {
      json e{{"n", n}};
      e["j"] = j ? json(*j) : json(nullptr);
      e["value"] = v;
      arr.push_back(std::move(e));
    }
    os << json{{"kind", kind}, {"numeric_encoding", "string"}, {"values", arr}}.dump(2) << '\n';
  } else {
    for (const auto& [n, j, v] : rows) {
      if (rows.size() == 1) {
        os << v << '\n';
      } else {
        os << n << ' ' << (j ? std::to_string(*j) : "-") << ' ' << v << '\n';
      }
    }
  }
}

int cmd_exact(const RunConfig& cfg) {
  const unsigned long n = require_n(cfg);
  const std::string fmt = format_of(cfg, "plain");
  std::vector<std::tuple<unsigned long, std::optional<long>, std::string>> rows;
  if (cfg.kind == "bell") {
    rows.emplace_back(n, std::nullopt, row_sum(RowSumKind::bell, n).get_str());
  } else {
    if (!cfg.j) throw UsageError("--j is required");
    const Kind kind = kind_of(cfg);
    const long j = *cfg.j;
    ExactRational value(0);
    if (j >= 0 && static_cast<unsigned long>(j) <= n) {
      if (kind == Kind::jacobi) {
        value = build_triangle(kind, two_gamma_of(cfg, kind), n).at(n, j);
      } else {
        value = integer_row(kind, n)[static_cast<std::size_t>(j)];
      }
    }
    rows.emplace_back(n, j, value.get_str());
  }
  Output out(cfg.out);
  emit_value_rows(out.stream(), fmt, cfg.kind, rows);
  return kExitOk;
}

int cmd_table(const RunConfig& cfg) {
  if (!cfg.n_max) throw UsageError("--n-max is required");
  const unsigned long n_max = *cfg.n_max;
  if (n_max > kNMaxGuard) throw UsageError("--n-max exceeds the 5000 guard");
  const std::string fmt = format_of(cfg, "csv");
  std::vector<std::tuple<unsigned long, std::optional<long>, std::string>> rows;
  if (cfg.kind == "bell") {
    for (unsigned long n = 0; n <= n_max; ++n) rows.emplace_back(n, std::nullopt, row_sum(RowSumKind::bell, n).get_str());
  } else {
    const Kind kind = kind_of(cfg);
    const Triangle t = build_triangle(kind, two_gamma_of(cfg, kind), n_max);
    for (unsigned long n = 0; n <= n_max; ++n) {
      const auto row = t.row(n);
      for (std::size_t j = 0; j < row.size(); ++j) rows.emplace_back(n, static_cast<long>(j), row[j].get_str());
    }
  }
  Output out(cfg.out);
  emit_value_rows(out.stream(), fmt, cfg.kind, rows);
  return kExitOk;
}

int cmd_approx(const RunConfig& cfg) {
  const Kind kind = kind_of(cfg);
  if (kind == Kind::jacobi) throw UsageError("approx supports stirling and chebyshev");
  const unsigned long n = require_n(cfg);
  if (n < 1) throw UsageError("approx needs --n >= 1");
  if (!cfg.j) throw UsageError("--j is required");
  if (*cfg.j < 0) throw UsageError("approx needs --j >= 0");
  const std::string fmt = format_of(cfg, "json");
  const Precision prec = bits_for_digits(cfg.precision_digits);

  const ApproxReport r = ratio_report(kind, n, *cfg.j, prec);
  if (!r.valid)
    throw DomainError("Edgeworth factor 1 + c(x^3 - 3x)/(6 sqrt n) is not positive at n=" + std::to_string(n) +
                      ", j=" + std::to_string(*cfg.j));

  const int digits = static_cast<int>(cfg.precision_digits);
  Output out(cfg.out);
  std::ostream& os = out.stream();
  if (fmt == "json") {
    json j{{"kind", std::string(to_string(kind))},
           {"n", n},
           {"j", *cfg.j},
           {"exact", r.exact.get_str()},
           {"approx", r.approx.to_string(digits)},
           {"ratio", r.ratio.to_double()},
           {"ratio_text", r.ratio.to_string(digits)},
           {"x", r.x.to_double()},
           {"correction", r.correction_term.to_double()},
           {"precision_digits", cfg.precision_digits},
           {"numeric_encoding", "string"}};
    os << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "kind,n,j,exact,approx,ratio,x,correction,precision_digits\n"
       << to_string(kind) << ',' << n << ',' << *cfg.j << ',' << r.exact.get_str() << ',' << r.approx.to_string(digits)
       << ',' << r.ratio.to_string(digits) << ',' << r.x.to_string(20) << ',' << r.correction_term.to_string(20) << ','
       << cfg.precision_digits << '\n';
  } else {
    os << "kind " << to_string(kind) << "\nn " << n << "\nj " << *cfg.j << "\nexact " << r.exact.get_str()
       << "\napprox " << r.approx.to_string(digits) << "\nratio " << r.ratio.to_string(digits) << "\nx "
       << r.x.to_string(20) << "\ncorrection " << r.correction_term.to_string(20) << "\nprecision_digits "
       << cfg.precision_digits << '\n';
  }
  return kExitOk;
}

int cmd_moments(const RunConfig& cfg) {
  const Kind kind = kind_of(cfg);
  if (kind == Kind::jacobi) throw UsageError("moments supports stirling and chebyshev");
  const unsigned long n = require_n(cfg);
  if (n < 2) throw UsageError("moments needs --n >= 2");
  const std::string fmt = format_of(cfg, "plain");
  const Precision prec = bits_for_digits(cfg.precision_digits);
  const int digits = static_cast<int>(cfg.precision_digits);

  const MomentSet m = moments_exact(kind, n, prec);
  const SeqParams p = abc(kind, n, prec);
  const MomentGap g = moment_gap(kind, n, prec);

  Output out(cfg.out);
  std::ostream& os = out.stream();
  const std::vector<std::pair<std::string, std::string>> fields{
      {"kind", std::string(to_string(kind))},
      {"n", std::to_string(n)},
      {"mean", m.mean.get_str()},
      {"variance", m.variance.get_str()},
      {"lambda3", m.lambda3.to_string(digits)},
      {"a", p.a.to_string(digits)},
      {"b", p.b.to_string(digits)},
      {"c", p.c.to_string(digits)},
      {"gap_mean", g.mean.to_string(10)},
      {"gap_variance", g.variance.to_string(10)},
      {"gap_lambda3", g.lambda3.to_string(10)},
      {"precision_digits", std::to_string(cfg.precision_digits)}};
  if (fmt == "json") {
    json j;
    for (const auto& [k, v] : fields) j[k] = v;
    j["n"] = n;
    j["precision_digits"] = cfg.precision_digits;
    j["numeric_encoding"] = "string";
    os << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) os << fields[i].first << (i + 1 < fields.size() ? "," : "\n");
    for (std::size_t i = 0; i < fields.size(); ++i) os << fields[i].second << (i + 1 < fields.size() ? "," : "\n");
  } else {
    for (const auto& [k, v] : fields) os << k << ' ' << v << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw UsageError("unknown suite: " + cfg.suite);
  if (cfg.n_max && *cfg.n_max > kNMaxGuard) throw UsageError("--n-max exceeds the 5000 guard");
  const std::string fmt = format_of(cfg, "json");

  SuiteOptions opt;
  opt.n_max = cfg.n_max;
  opt.order = cfg.order;
  opt.precision_digits = cfg.precision_digits;
  const SuiteReport r = run_named_suite(cfg.suite, opt);

  Output out(cfg.out);
  std::ostream& os = out.stream();
  if (fmt == "json") {
    json failures = json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"inputs", f.case_name}, {"expected", f.expected}, {"got", f.got}, {"tolerance", f.tolerance}});
    json j{{"suite", r.suite},
           {"cases_run", r.cases_run},
           {"failures", failures},
           {"precision_digits", r.precision_digits},
           {"wall_time_s", r.wall_time_s}};
    os << j.dump(2) << '\n';
  } else if (fmt == "csv") {
    os << "suite,inputs,expected,got,tolerance\n";
    for (const auto& f : r.failures)
      os << r.suite << ",\"" << f.case_name << "\",\"" << f.expected << "\",\"" << f.got << "\",\"" << f.tolerance << "\"\n";
  } else {
    os << r.suite << ": " << r.cases_run << " cases, " << r.failures.size() << " failures\n";
    for (const auto& f : r.failures)
      os << "  " << f.case_name << ": expected " << f.expected << ", got " << f.got << " (" << f.tolerance << ")\n";
  }
  std::cerr << r.suite << ": " << r.cases_run << " cases, " << r.failures.size() << " failures, " << r.wall_time_s
            << " s\n";
  return r.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg.precision_digits = default_precision_digits();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Exact and asymptotic Stirling, Jacobi-Stirling and Chebyshev-Stirling numbers"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.kind, "stirling | chebyshev | jacobi | bell")
        ->check(CLI::IsMember({"stirling", "chebyshev", "jacobi", "bell"}));
    sub->add_option("--gamma", cfg.gamma, "jacobi parameter gamma as p/q");
    sub->add_option("--n", cfg.n, "row index");
    sub->add_option("--j", cfg.j, "column index");
    sub->add_option("--n-max", cfg.n_max, "largest row (table) or suite range override (verify)");
    sub->add_option("--precision-digits", cfg.precision_digits, "working precision in decimal digits");
    sub->add_option("--format", cfg.format, "json | csv | plain");
    sub->add_option("--out", cfg.out, "write data to this file instead of stdout");
  };

  CLI::App* exact = app.add_subcommand("exact", "print one exact value");
  CLI::App* table = app.add_subcommand("table", "print rows 0..n-max of a triangle");
  CLI::App* approx = app.add_subcommand("approx", "compare an exact value with its approximant");
  CLI::App* moments = app.add_subcommand("moments", "exact moments against the closed-form sequences");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  for (CLI::App* sub : {exact, table, approx, moments, verify}) add_common(sub);
  verify->add_option("--suite", cfg.suite, "suite name")->required();
  verify->add_option("--order", cfg.order, "series order for the egf suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.precision_digits < kMinDigits) throw UsageError("--precision-digits must be at least 20");
    if (*exact) return cmd_exact(cfg);
    if (*table) return cmd_table(cfg);
    if (*approx) return cmd_approx(cfg);
    if (*moments) return cmd_moments(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
