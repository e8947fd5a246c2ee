#include "ramapoly/render.hpp"

#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ramapoly {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
  if (v >= Int(std::numeric_limits<std::int64_t>::min()) &&
      v <= Int(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

// R, T and V rows have natural length n; the canonical form may be shorter.
bool padded_family(Family f) {
  return f == Family::R || f == Family::T || f == Family::V;
}

std::vector<Int> csv_coefficients(Family f, std::uint64_t n,
                                  const IntPoly& p) {
  std::vector<Int> c = p.coefficients();
  if (padded_family(f)) c.resize(n, Int(0));
  return c;
}

}  // namespace

OutputFormat format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format: " + name);
}

std::string poly_to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Int mag = c[i] < 0 ? Int(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) os << "-";
      first = false;
    } else {
      os << (c[i] < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i == 1) os << "x";
    if (i > 1) os << "x^" << i;
  }
  return os.str();
}

std::string table_row_text(Family f, std::uint64_t n, const IntPoly& p) {
  std::ostringstream os;
  os << family_symbol(f) << "_" << n << "(x) = " << poly_to_text(p);
  return os.str();
}

std::string table_row_csv(Family f, std::uint64_t n, const IntPoly& p) {
  std::ostringstream os;
  os << n;
  for (const Int& c : csv_coefficients(f, n, p)) os << "," << c;
  return os.str();
}

std::string render_table(Family f, std::uint64_t n_min, std::uint64_t n_max,
                         OutputFormat fmt, FamilyCache& cache) {
  std::ostringstream os;
  if (fmt == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
      ordered_json row;
      row["n"] = n;
      ordered_json coeffs = ordered_json::array();
      IntPoly p = cache.get(f, n);
      for (const Int& c : p.coefficients())
        coeffs.push_back(json_int(c));
      row["coefficients"] = std::move(coeffs);
      arr.push_back(std::move(row));
    }
    os << arr.dump() << "\n";
    return os.str();
  }
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    IntPoly p = cache.get(f, n);
    os << (fmt == OutputFormat::Text ? table_row_text(f, n, p)
                                     : table_row_csv(f, n, p))
       << "\n";
  }
  return os.str();
}

namespace {

std::string params_text(const CheckResult& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.params.size(); ++i) {
    if (i) os << ";";
    os << r.params[i].first << "=" << r.params[i].second;
  }
  return os.str();
}

}  // namespace

std::string render_report(const VerificationReport& rep, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json: {
      ordered_json root;
      root["range"] = {rep.n_min, rep.n_max};
      ordered_json results = ordered_json::array();
      for (const CheckResult& r : rep.results) {
        ordered_json item;
        item["claim"] = r.claim;
        item["n"] = r.n;
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        item["params"] = std::move(params);
        item["status"] = status_name(r.status);
        if (r.status == Status::Fail)
          item["witness"] = r.witness;
        else
          item["witness"] = nullptr;
        results.push_back(std::move(item));
      }
      root["results"] = std::move(results);
      ordered_json summary = ordered_json::object();
      for (const auto& [claim, s] : rep.summary) {
        summary[claim] = {{"pass", s.pass}, {"fail", s.fail}, {"na", s.na}};
      }
      root["summary"] = std::move(summary);
      os << root.dump() << "\n";
      break;
    }
    case OutputFormat::Csv: {
      os << "claim,n,params,status\n";
      for (const CheckResult& r : rep.results) {
        os << r.claim << "," << r.n << "," << params_text(r) << ","
           << status_name(r.status) << "\n";
      }
      break;
    }
    case OutputFormat::Text: {
      os << "verify range [" << rep.n_min << ", " << rep.n_max << "]\n";
      os << "claim            pass    fail     n/a\n";
      std::uint64_t checks = 0;
      for (const auto& [claim, s] : rep.summary) {
        checks += s.pass + s.fail;
        os << claim;
        for (std::size_t i = claim.size(); i < 14; ++i) os << ' ';
        char buf[64];
        std::snprintf(buf, sizeof buf, "%8llu%8llu%8llu",
                      static_cast<unsigned long long>(s.pass),
                      static_cast<unsigned long long>(s.fail),
                      static_cast<unsigned long long>(s.na));
        os << buf << "\n";
      }
      os << "total: " << checks << " checks, " << rep.failures()
         << " failures\n";
      for (const CheckResult& r : rep.results) {
        if (r.status != Status::Fail) continue;
        os << "FAIL " << r.claim << " n=" << r.n;
        if (!r.params.empty()) os << " [" << params_text(r) << "]";
        os << ": " << r.witness << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace ramapoly
