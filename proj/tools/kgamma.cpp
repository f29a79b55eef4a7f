// kgamma: Bruinier invariant K(Gamma) for U(L_n) over Q(sqrt(-d)), exact
// Hirzebruch-Mumford covolumes, Dirichlet L-values and freeness verdicts.
//
// Exit codes: 0 ok, 2 usage error, 3 unsupported field, 4 no closed form.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kgamma/bruinier.hpp"
#include "kgamma/covolumes.hpp"
#include "kgamma/render.hpp"
#include "kgamma/special_values.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedField = 3;
constexpr int kExitNoClosedForm = 4;

bool require_supported(long d) {
  if (kgamma::is_supported_field(d)) return true;
  std::cerr << "unsupported d = " << d << "; supported d: 3 7 11 19 43 67 163\n";
  return false;
}

std::string default_format() {
  if (const char* env = std::getenv("KGAMMA_FORMAT")) return env;
  return "text";
}

bool parse_d_list(const std::string& spec, std::vector<long>& out) {
  if (spec == "all") {
    out.assign(kgamma::supported_fields().begin(), kgamma::supported_fields().end());
    return true;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const long d = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(d);
    } catch (const std::exception&) {
      std::cerr << "bad --d-list entry '" << item << "'\n";
      return false;
    }
  }
  if (out.empty()) {
    std::cerr << "--d-list is empty\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace kgamma;

  CLI::App app{"Bruinier invariant K(Gamma), Hirzebruch-Mumford covolumes and exact L-values\n"
               "for unitary groups of the lattices diag(1,...,1,-1) over Q(sqrt(-d))"};
  app.require_subcommand(1);

  std::string format_name = default_format();
  int digits = 6;
  long arg_d = 0, arg_k = 0, arg_terms = 100000;
  int arg_n = 0, n_max = 12;
  bool congruence = false, verify = false;
  std::string lattice_name, d_list_spec = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--digits", digits, "significant digits for printed floats")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();
  };

  CLI::App* kvalue = app.add_subcommand("kvalue", "K(Gamma) and the freeness verdict for one (d, n)");
  kvalue->add_option("--d", arg_d, "field parameter d of Q(sqrt(-d))")->required();
  kvalue->add_option("--n", arg_n, "ball dimension n")->required()->check(CLI::Range(2, 10000));
  kvalue->add_flag("--congruence", congruence, "also require K = n+1 (mod 6) when d = 3");
  add_common(kvalue);

  CLI::App* lvalue = app.add_subcommand("lvalue", "exact L(k, chi_D) for odd k >= 3");
  lvalue->add_option("--d", arg_d, "field parameter d of Q(sqrt(-d))")->required();
  lvalue->add_option("--k", arg_k, "argument of the L-function")->required();
  lvalue->add_flag("--verify", verify, "also print the relative deviation from the Dirichlet-series oracle");
  lvalue->add_option("--terms", arg_terms, "oracle series length")->check(CLI::Range(1000L, 100000000L));
  add_common(lvalue);

  CLI::App* vol = app.add_subcommand("vol", "Hirzebruch-Mumford covolume of B^n/SU(lattice, O_K)");
  vol->add_option("--lattice", lattice_name, "L = diag(1,..,1,-1) or M = diag(1,..,1,-2)")
      ->required()
      ->check(CLI::IsMember({"L", "M"}));
  vol->add_option("--d", arg_d, "field parameter d of Q(sqrt(-d))")->required();
  vol->add_option("--n", arg_n, "ball dimension n")->required()->check(CLI::Range(1, 10000));
  add_common(vol);

  CLI::App* table = app.add_subcommand("table", "verdict sweep over (d, n) ranges");
  table->add_option("--d-list", d_list_spec, "comma-separated d values, or 'all'")->capture_default_str();
  table->add_option("--n-max", n_max, "largest n to include")->check(CLI::Range(2, 10000))->capture_default_str();
  table->add_flag("--congruence", congruence, "also require K = n+1 (mod 6) when d = 3");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const OutputFormat format = parse_format(format_name);

    if (kvalue->parsed()) {
      if (!require_supported(arg_d)) return kExitUnsupportedField;
      std::cout << render_report(verdict(arg_d, arg_n, congruence), format, digits);
      return 0;
    }

    if (lvalue->parsed()) {
      if (!require_supported(arg_d)) return kExitUnsupportedField;
      if (arg_k < 3) {
        std::cerr << "--k must be >= 3\n";
        return kExitUsage;
      }
      if (arg_k % 2 == 0) {
        std::cerr << "no closed form: L(k, chi_D) is only algebraic at odd k (try --k " << arg_k + 1
                  << " or --k " << arg_k - 1 << ")\n";
        return kExitNoClosedForm;
      }
      const LValueExact lv = l_odd_exact(arg_k, arg_d);
      double rel_dev = 0;
      if (verify) {
        const DirichletSum oracle = l_numeric(arg_k, arg_d, arg_terms);
        rel_dev = std::abs(oracle.value - to_double(lv.value)) / std::abs(oracle.value);
      }
      if (format == OutputFormat::Json) {
        nlohmann::json j{{"d", lv.d},
                         {"k", lv.k},
                         {"value", lv.value.to_string()},
                         {"float", to_double(lv.value)}};
        if (verify) {
          j["oracle_rel_dev"] = rel_dev;
          j["oracle_terms"] = arg_terms;
        }
        std::cout << j.dump() << "\n";
      } else if (format == OutputFormat::Csv) {
        std::cout << "d,k,value,float" << (verify ? ",oracle_rel_dev" : "") << "\n"
                  << lv.d << ',' << lv.k << ',' << lv.value.to_string() << ','
                  << to_decimal_string(lv.value, digits);
        if (verify) std::cout << ',' << rel_dev;
        std::cout << "\n";
      } else {
        std::cout << lv.value.to_string() << "\n"
                  << "float ~ " << to_decimal_string(lv.value, digits) << "\n";
        if (verify)
          std::cout << "oracle rel dev = " << rel_dev << " (" << arg_terms << " terms)\n";
      }
      return 0;
    }

    if (vol->parsed()) {
      if (!require_supported(arg_d)) return kExitUnsupportedField;
      const Covolume c = lattice_name == "L" ? vol_L(arg_n, arg_d, DiscCase::MinusD)
                                             : vol_M(arg_n, arg_d, DiscCase::MinusD);
      if (format == OutputFormat::Json) {
        nlohmann::json j{{"lattice", lattice_name},
                         {"n", c.n},
                         {"d", c.d},
                         {"disc_case", "-d"},
                         {"value", c.value.to_string()},
                         {"float", to_double(c.value)}};
        std::cout << j.dump() << "\n";
      } else if (format == OutputFormat::Csv) {
        std::cout << "lattice,n,d,value,float\n"
                  << lattice_name << ',' << c.n << ',' << c.d << ',' << c.value.to_string() << ','
                  << to_decimal_string(c.value, digits) << "\n";
      } else {
        std::cout << "Vol(" << lattice_name << "_" << c.n << ", d = " << c.d
                  << ") = " << c.value.to_string() << "\n"
                  << "float ~ " << to_decimal_string(c.value, digits) << "\n";
      }
      return 0;
    }

    // table
    std::vector<long> d_list;
    if (!parse_d_list(d_list_spec, d_list)) return kExitUsage;
    for (long d : d_list)
      if (!require_supported(d)) return kExitUnsupportedField;
    std::cout << render_table(sweep(std::move(d_list), n_max, congruence), format, digits);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
