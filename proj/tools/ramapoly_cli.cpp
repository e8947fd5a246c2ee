#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramapoly/family.hpp"
#include "ramapoly/numtheory.hpp"
#include "ramapoly/ramanujan.hpp"
#include "ramapoly/render.hpp"
#include "ramapoly/theorems.hpp"

namespace {

using ramapoly::Int;
using ramapoly::Rat;

constexpr std::uint64_t kDefaultCap = 10000;

std::uint64_t index_cap() {
  if (const char* env = std::getenv("RAMAPOLY_MAX_N")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return v;
    std::cerr << "warning: ignoring invalid RAMAPOLY_MAX_N value\n";
  }
  return kDefaultCap;
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

std::set<std::string> parse_claims(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_range(std::uint64_t n_min, std::uint64_t n_max) {
  std::uint64_t cap = index_cap();
  if (n_min < 1 || n_min > n_max)
    throw UsageError("requires 1 <= min <= max");
  if (n_max > cap) {
    std::ostringstream os;
    os << "max " << n_max << " exceeds the index cap " << cap
       << " (override with RAMAPOLY_MAX_N)";
    throw UsageError(os.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan-sum and cyclotomic polynomial toolkit"};
  app.require_subcommand(1);

  // table
  std::string tab_family;
  std::uint64_t tab_min = 1, tab_max = 0;
  std::string tab_format = "text";
  auto* table = app.add_subcommand(
      "table", "Print a polynomial family over a range of indices");
  table->add_option("family", tab_family, "one of: r, t, v, phi, psi")
      ->required();
  table->add_option("min,--min", tab_min, "first index");
  table->add_option("max,--max", tab_max, "last index (default: min)");
  table->add_option("--format", tab_format, "text, json or csv");

  // eval
  std::uint64_t eval_n = 0;
  std::int64_t eval_k = 0;
  std::string eval_format = "text";
  bool eval_verbose = false;
  auto* eval = app.add_subcommand("eval", "Evaluate the Ramanujan sum c_n(k)");
  eval->add_option("n", eval_n, "modulus, n >= 1")->required();
  eval->add_option("k", eval_k, "argument (any integer)")->required();
  eval->add_option("--format", eval_format, "text, json or csv");
  eval->add_flag("--verbose", eval_verbose,
                 "also print each algorithm's value");

  // verify
  std::uint64_t ver_min = 1, ver_max = 0;
  std::string ver_format = "text", ver_claims, ver_x0 = "1/2";
  unsigned ver_jobs = 1, ver_terms = 200;
  double ver_tol = 1e-9;
  bool ver_fast = false;
  auto* verify =
      app.add_subcommand("verify", "Run the theorem verification suite");
  verify->add_option("min,--min", ver_min, "first index");
  verify->add_option("max,--max", ver_max, "last index (default: min)");
  verify->add_option("--claims", ver_claims,
                     "comma-separated claim filter, e.g. Thm7 or Thm5.ii-b");
  verify->add_option("--format", ver_format, "text, json or csv");
  verify->add_option("--jobs", ver_jobs, "worker threads (default 1)");
  verify->add_flag("--fast", ver_fast,
                   "skip the triple-algorithm row cross-check");
  verify->add_option("--x0", ver_x0,
                     "rational evaluation point for the log-series check");
  verify->add_option("--terms", ver_terms, "log-series truncation length");
  verify->add_option("--tol", ver_tol, "log-series tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table) {
      if (tab_max == 0) tab_max = tab_min;
      check_range(tab_min, tab_max);
      ramapoly::Family fam = ramapoly::family_from_name(tab_family);
      ramapoly::OutputFormat fmt = ramapoly::format_from_name(tab_format);
      ramapoly::FamilyCache cache;
      std::cout << ramapoly::render_table(fam, tab_min, tab_max, fmt, cache);
      return 0;
    }

    if (*eval) {
      if (eval_n == 0) throw UsageError("n must be >= 1");
      Int value = ramapoly::c_multiplicative(eval_n, eval_k);
      Int via_mobius = ramapoly::c_mobius(eval_n, eval_k);
      Int via_holder = ramapoly::c_holder(eval_n, eval_k);
      if (value != via_mobius || value != via_holder)
        throw std::logic_error("algorithm disagreement in eval");
      ramapoly::OutputFormat fmt = ramapoly::format_from_name(eval_format);
      switch (fmt) {
        case ramapoly::OutputFormat::Text:
          std::cout << "c_" << eval_n << "(" << eval_k << ") = " << value
                    << "\n";
          if (eval_verbose) {
            std::cout << "  mobius:         " << via_mobius << "\n"
                      << "  holder:         " << via_holder << "\n"
                      << "  multiplicative: " << value << "\n";
          }
          break;
        case ramapoly::OutputFormat::Json: {
          nlohmann::ordered_json j;
          j["n"] = eval_n;
          j["k"] = eval_k;
          j["value"] = value.convert_to<std::int64_t>();
          if (eval_verbose) {
            j["algorithms"] = {
                {"mobius", via_mobius.convert_to<std::int64_t>()},
                {"holder", via_holder.convert_to<std::int64_t>()},
                {"multiplicative", value.convert_to<std::int64_t>()}};
          }
          std::cout << j.dump() << "\n";
          break;
        }
        case ramapoly::OutputFormat::Csv:
          std::cout << eval_n << "," << eval_k << "," << value << "\n";
          break;
      }
      return 0;
    }

    // verify
    if (ver_max == 0) ver_max = ver_min;
    check_range(ver_min, ver_max);
    ramapoly::SuiteConfig cfg;
    cfg.jobs = ver_jobs == 0 ? 1 : ver_jobs;
    cfg.cross_check = !ver_fast;
    cfg.log_x0 = parse_rational(ver_x0);
    cfg.log_terms = ver_terms;
    cfg.log_tol = ver_tol;
    std::set<std::string> filter = parse_claims(ver_claims);
    ramapoly::OutputFormat fmt = ramapoly::format_from_name(ver_format);
    ramapoly::VerificationReport rep =
        ramapoly::run_suite(ver_min, ver_max, cfg, filter);
    std::cout << ramapoly::render_report(rep, fmt);
    return rep.failures() == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
