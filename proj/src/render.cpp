#include "kgamma/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "kgamma/exact_value.hpp"

namespace kgamma {

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

namespace {

constexpr const char* kCsvHeader = "d,n,k_exact,k_float,bound,is_integer,verdict";

std::string float_str(const Rational& k, int digits) {
  return to_decimal_string(ExactValue(k), digits);
}

nlohmann::json report_obj(const KReport& r) {
  return nlohmann::json{{"d", r.d},
                        {"n", r.n},
                        {"k_exact", r.k_exact.to_string()},
                        {"k_float", r.k_float},
                        {"bound", r.bound},
                        {"is_integer", r.is_integer},
                        {"verdict", to_string(r.verdict)}};
}

std::string csv_row(const KReport& r, int digits) {
  std::ostringstream os;
  os << r.d << ',' << r.n << ',' << r.k_exact.to_string() << ',' << float_str(r.k_exact, digits)
     << ',' << r.bound << ',' << (r.is_integer ? "true" : "false") << ',' << to_string(r.verdict);
  return os.str();
}

}  // namespace

std::string render_report(const KReport& r, OutputFormat f, int digits) {
  switch (f) {
    case OutputFormat::Json:
      return report_obj(r).dump() + "\n";
    case OutputFormat::Csv:
      return std::string(kCsvHeader) + "\n" + csv_row(r, digits) + "\n";
    case OutputFormat::Text:
      break;
  }
  std::ostringstream os;
  os << "d = " << r.d << "\n"
     << "n = " << r.n << "\n"
     << "K = " << r.k_exact.to_string() << "\n"
     << "K ~ " << float_str(r.k_exact, digits) << "\n"
     << "bound = " << r.bound << " (" << (r.d == 3 ? "7n+7" : "2n+2") << ")\n"
     << "integer = " << (r.is_integer ? "yes" : "no") << "\n";
  if (r.congruence_ok.has_value())
    os << "congruence K = n+1 (mod 6): " << (*r.congruence_ok ? "yes" : "no") << "\n";
  os << "verdict = " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string render_table(const VerdictTable& t, OutputFormat f, int digits) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json: {
      nlohmann::json j;
      j["reports"] = nlohmann::json::array();
      for (const KReport& r : t.reports) j["reports"].push_back(report_obj(r));
      j["summary"] = t.summary;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      os << kCsvHeader << "\n";
      for (const KReport& r : t.reports) os << csv_row(r, digits) << "\n";
      return os.str();
    }
    case OutputFormat::Text:
      break;
  }
  size_t k_w = 1, f_w = 2;
  std::vector<std::string> k_strs, f_strs;
  for (const KReport& r : t.reports) {
    k_strs.push_back(r.k_exact.to_string());
    f_strs.push_back(float_str(r.k_exact, digits));
    k_w = std::max(k_w, k_strs.back().size());
    f_w = std::max(f_w, f_strs.back().size());
  }
  os << std::setw(5) << "d" << std::setw(5) << "n" << "  " << std::setw(static_cast<int>(k_w)) << "K"
     << "  " << std::setw(static_cast<int>(f_w)) << "~K" << std::setw(7) << "bound"
     << std::setw(9) << "integer" << "  " << "verdict" << "\n";
  for (size_t i = 0; i < t.reports.size(); ++i) {
    const KReport& r = t.reports[i];
    os << std::setw(5) << r.d << std::setw(5) << r.n << "  " << std::setw(static_cast<int>(k_w))
       << k_strs[i] << "  " << std::setw(static_cast<int>(f_w)) << f_strs[i] << std::setw(7)
       << r.bound << std::setw(9) << (r.is_integer ? "yes" : "no") << "  " << to_string(r.verdict)
       << "\n";
  }
  if (!t.summary.empty()) {
    os << "\n";
    for (const std::string& line : t.summary) os << line << "\n";
  }
  return os.str();
}

KReport parse_report_json(const std::string& s) {
  const nlohmann::json j = nlohmann::json::parse(s);
  KReport r;
  r.d = j.at("d").get<long>();
  r.n = j.at("n").get<int>();
  r.k_exact = Rational::from_string(j.at("k_exact").get<std::string>());
  r.k_float = j.at("k_float").get<double>();
  r.bound = j.at("bound").get<int>();
  r.is_integer = j.at("is_integer").get<bool>();
  const std::string v = j.at("verdict").get<std::string>();
  if (v == to_string(Verdict::PossiblyFree))
    r.verdict = Verdict::PossiblyFree;
  else if (v == to_string(Verdict::NotFree))
    r.verdict = Verdict::NotFree;
  else
    throw std::invalid_argument("unknown verdict '" + v + "'");
  r.passes_bound = r.k_exact >= Rational(r.bound);
  return r;
}

}  // namespace kgamma
