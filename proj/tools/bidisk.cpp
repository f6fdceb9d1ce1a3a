// bidisk: exact tables and verification suites for Toeplitz-determinant
// submodule invariants over the bidisk Hardy space.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "bidisk/asymptotics.hpp"
#include "bidisk/errors.hpp"
#include "bidisk/invariants.hpp"
#include "bidisk/toeplitz.hpp"
#include "bidisk/verify.hpp"
#include "json.hpp"

namespace {

using bidisk::HomogeneousSymbol;
using bidisk::Rational;
using bidisk::Submodule;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSingularGram = 3;

// Empty cells stay empty in CSV and null in JSON; exact columns carry
// "num/den" strings, never floats.
using Cell = std::variant<std::monostate, std::string, double, unsigned long>;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      if (std::holds_alternative<std::string>(row[c]))
        os << std::get<std::string>(row[c]);
      else if (std::holds_alternative<double>(row[c]))
        os << format_double(std::get<double>(row[c]));
      else if (std::holds_alternative<unsigned long>(row[c]))
        os << std::get<unsigned long>(row[c]);
    }
    os << "\n";
  }
}

void write_json(const Table& table, std::ostream& os) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& name = table.columns[c];
      if (std::holds_alternative<std::string>(row[c]))
        obj[name] = std::get<std::string>(row[c]);
      else if (std::holds_alternative<double>(row[c]))
        obj[name] = std::get<double>(row[c]);
      else if (std::holds_alternative<unsigned long>(row[c]))
        obj[name] = std::get<unsigned long>(row[c]);
      else
        obj[name] = nullptr;
    }
    rows.push_back(std::move(obj));
  }
  os << rows.dump(2) << "\n";
}

struct OutputConfig {
  std::string format = "csv";
  std::string out_path;  // empty: standard output

  void emit(const Table& table) const {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw bidisk::domain_error("cannot open output file: " + out_path);
      os = &file;
    }
    if (format == "json")
      write_json(table, *os);
    else
      write_csv(table, *os);
  }
};

struct TargetConfig {
  std::string submodule;  // "zw", "zw2" or empty
  std::string symbol;     // raw coefficients or empty

  bool is_named() const { return !submodule.empty(); }
  Submodule named() const { return submodule == "zw" ? Submodule::zw : Submodule::zw2; }
  HomogeneousSymbol parse_symbol() const {
    return is_named() ? bidisk::symbol_for(named()) : HomogeneousSymbol::parse(symbol);
  }
};

void add_target_options(CLI::App* cmd, TargetConfig& target) {
  auto* sub = cmd->add_option("--submodule", target.submodule, "named submodule")
                  ->check(CLI::IsMember({"zw", "zw2"}));
  auto* sym = cmd->add_option("--symbol", target.symbol,
                              "homogeneous symbol coefficients \"c_0,...,c_k\"");
  sub->excludes(sym);
  sym->excludes(sub);
  cmd->callback([&target]() {
    if (target.submodule.empty() && target.symbol.empty())
      throw CLI::RequiredError("one of --submodule or --symbol");
  });
}

Cell rational_cell(const Rational& r) { return r.to_string(); }

void run_invariants(const TargetConfig& target, unsigned k_max, unsigned long truncation,
                    const OutputConfig& out) {
  Table table;
  table.columns = {"k",          "pi2_coeff",   "const_coeff", "partial_sum",
                   "tail_bound", "float_value", "asymptote",   "residual_k3"};
  std::optional<HomogeneousSymbol> raw;
  if (!target.is_named()) raw = target.parse_symbol();
  for (unsigned k = 0; k <= k_max; ++k) {
    bidisk::InvariantReport r = target.is_named()
                                    ? bidisk::invariant_report(target.named(), k, truncation)
                                    : bidisk::invariant_report(*raw, k, truncation);
    std::vector<Cell> row(8);
    row[0] = static_cast<unsigned long>(k);
    if (r.closed) {
      row[1] = rational_cell(r.closed->pi2_coeff);
      row[2] = rational_cell(r.closed->const_coeff);
    }
    row[3] = rational_cell(r.partial);
    if (r.tail_bound) row[4] = rational_cell(*r.tail_bound);
    row[5] = r.float_value;
    if (r.asymptote) row[6] = *r.asymptote;
    if (r.residual_times_k3) row[7] = *r.residual_times_k3;
    table.rows.push_back(std::move(row));
  }
  out.emit(table);
}

void run_determinants(const TargetConfig& target, unsigned n_max, const OutputConfig& out) {
  bidisk::DetSequence seq = bidisk::det_sequence(target.parse_symbol(), n_max);
  Table table;
  table.columns = {"n", "numerator", "denominator"};
  for (unsigned n = 0; n <= n_max; ++n)
    table.rows.push_back({static_cast<unsigned long>(n), seq.values[n].numerator().get_str(),
                          seq.values[n].denominator().get_str()});
  out.emit(table);
}

void run_cofactors(const TargetConfig& target, unsigned n, const std::string& row_sel,
                   const OutputConfig& out) {
  HomogeneousSymbol p = target.parse_symbol();
  bidisk::CofactorRow row = row_sel == "first" ? bidisk::first_row_cofactors(p, n)
                                               : bidisk::last_row_cofactors(p, n);
  Table table;
  table.columns = {"j", "value"};
  for (unsigned j = 0; j <= n; ++j)
    table.rows.push_back({static_cast<unsigned long>(j), rational_cell(row.values[j])});
  out.emit(table);
}

void run_eigenvalues(const TargetConfig& target, unsigned n_max, const OutputConfig& out) {
  auto rows = target.is_named() ? bidisk::core_eigenvalues(target.named(), n_max)
                                : bidisk::core_eigenvalues(target.parse_symbol(), n_max);
  Table table;
  table.columns = {"n", "lambda_sq", "lambda_float"};
  for (const auto& r : rows) {
    std::vector<Cell> row(3);
    if (r.n) row[0] = static_cast<unsigned long>(*r.n);
    row[1] = rational_cell(r.lambda_sq);
    row[2] = r.lambda;
    table.rows.push_back(std::move(row));
  }
  out.emit(table);
}

int run_verify(const std::string& suite, const bidisk::verify::VerifyOptions& opt,
               const OutputConfig& out) {
  auto results = bidisk::verify::run_suite(suite, opt);
  json doc;
  doc["suite"] = suite;
  doc["passed"] = bidisk::verify::all_passed(results);
  doc["results"] = json::array();
  for (const auto& r : results) {
    std::fprintf(stderr, "[%s] %s/%s (%.2fs) %s\n", r.passed ? "PASS" : "FAIL",
                 r.suite.c_str(), r.property.c_str(), r.seconds, r.detail.c_str());
    json item;
    item["suite"] = r.suite;
    item["property"] = r.property;
    item["status"] = r.passed ? "pass" : "fail";
    item["first_counterexample"] = r.passed ? json(nullptr) : json(r.detail);
    doc["results"].push_back(std::move(item));
  }
  std::fprintf(stderr, "%zu properties, %s\n", results.size(),
               bidisk::verify::all_passed(results) ? "all passed" : "FAILURES present");

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.out_path.empty()) {
    file.open(out.out_path);
    if (!file) throw bidisk::domain_error("cannot open output file: " + out.out_path);
    os = &file;
  }
  *os << doc.dump(2) << "\n";
  return bidisk::verify::all_passed(results) ? kExitOk : kExitVerifyFailure;
}

bool apply_pi2_digits_env() {
  const char* env = std::getenv("BIDISK_PI2_DIGITS");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  long digits = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    std::fprintf(stderr, "BIDISK_PI2_DIGITS is not an integer: %s\n", env);
    return false;
  }
  try {
    bidisk::set_pi2_digits(static_cast<int>(digits));
  } catch (const bidisk::domain_error& e) {
    std::fprintf(stderr, "BIDISK_PI2_DIGITS: %s\n", e.what());
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Toeplitz-determinant invariants for bidisk Hardy submodules"};
  app.require_subcommand(1);

  TargetConfig target;
  OutputConfig out;
  unsigned k_max = 10;
  unsigned n_max = 10;
  unsigned n_index = 0;
  unsigned long truncation = 1000;
  std::string row_sel = "last";
  std::string suite = "all";
  bidisk::verify::VerifyOptions verify_opt;

  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.out_path, "write the table to a file instead of stdout");
  };

  CLI::App* invariants = app.add_subcommand(
      "invariants", "closed forms, partial sums and tail bounds of Sigma_k");
  add_target_options(invariants, target);
  add_output_options(invariants);
  invariants->add_option("--k-max", k_max, "largest k to report");
  CLI::Option* truncation_opt = invariants->add_option(
      "--truncation", truncation, "partial-sum truncation N (default 1000, raw symbols 200)");

  CLI::App* determinants =
      app.add_subcommand("determinants", "exact Gram determinant sequence D_0..D_N");
  add_target_options(determinants, target);
  add_output_options(determinants);
  determinants->add_option("--n-max", n_max, "largest index in the sequence");

  CLI::App* cofactors =
      app.add_subcommand("cofactors", "first or last cofactor row of the Gram matrix");
  add_target_options(cofactors, target);
  add_output_options(cofactors);
  cofactors->add_option("--n", n_index, "Gram matrix index n");
  cofactors->add_option("--row", row_sel, "which cofactor row")
      ->check(CLI::IsMember({"first", "last"}));

  CLI::App* eigenvalues =
      app.add_subcommand("eigenvalues", "core-operator eigenvalue table");
  add_target_options(eigenvalues, target);
  add_output_options(eigenvalues);
  eigenvalues->add_option("--n-max", n_max, "largest eigenvalue index");

  CLI::App* verify = app.add_subcommand("verify", "run exact verification suites");
  add_output_options(verify);
  verify->add_option("--suite", suite, "all, linalg, fh, invariants or asymptotics");
  verify->add_option("--k-max", verify_opt.cert_k_max,
                     "monotonicity certificate range (default 500)");
  verify->add_option("--inject-fault", verify_opt.inject_fault,
                     "testing only: corrupt a named internal value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  if (!apply_pi2_digits_env()) return kExitParseError;

  try {
    if (invariants->parsed()) {
      if (!target.is_named() && truncation_opt->count() == 0) truncation = 200;
      run_invariants(target, k_max, truncation, out);
    }
    if (determinants->parsed()) run_determinants(target, n_max, out);
    if (cofactors->parsed()) run_cofactors(target, n_index, row_sel, out);
    if (eigenvalues->parsed()) run_eigenvalues(target, n_max, out);
    if (verify->parsed()) return run_verify(suite, verify_opt, out);
  } catch (const bidisk::singular_gram_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSingularGram;
  } catch (const bidisk::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  } catch (const bidisk::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerifyFailure;
  }
  return kExitOk;
}
