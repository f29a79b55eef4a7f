// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance <golden-dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kgamma/bruinier.hpp"
#include "kgamma/special_values.hpp"

using namespace kgamma;

namespace {

int failures = 0;
std::vector<std::string> details;

void note(const std::string& s) { details.push_back(s); }

void report(int idx, bool ok, const std::string& what) {
  std::printf("criterion %d: %-4s %s\n", idx, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) {
    ++failures;
    for (const std::string& d : details) std::printf("    %s\n", d.c_str());
  }
  details.clear();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<std::pair<long, int>, Rational> load_golden_k(const std::string& dir) {
  std::map<std::pair<long, int>, Rational> out;
  std::ifstream f(dir + "/k_values_derived.csv");
  std::string line;
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string d_s, n_s, k_s;
    std::getline(ss, d_s, ',');
    std::getline(ss, n_s, ',');
    std::getline(ss, k_s, ',');
    out.emplace(std::make_pair(std::stol(d_s), std::stoi(n_s)), Rational::from_string(k_s));
  }
  return out;
}

// 1. the fifteen exact K values printed in the tables, under 1 s
void criterion_exact_k() {
  struct Row {
    long d;
    int n;
    const char* k;
  };
  static constexpr Row rows[] = {
      {7, 2, "14"},      {7, 3, "20"},      {7, 4, "24"},      {3, 2, "39"},
      {3, 3, "70"},      {3, 4, "95"},      {3, 5, "114"},     {3, 6, "127"},
      {3, 7, "134"},     {3, 9, "5698/61"}, {11, 2, "11/3"},   {19, 2, "19/11"},
      {43, 2, "43/83"},  {67, 2, "67/251"}, {163, 2, "163/2315"},
  };
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (const Row& r : rows) {
    const Rational got = k_raw(r.d, r.n);
    if (got != Rational::from_string(r.k)) {
      ok = false;
      note("K(" + std::to_string(r.d) + "," + std::to_string(r.n) + ") = " + got.to_string() +
           ", expected " + r.k);
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    ok = false;
    note("took " + std::to_string(dt) + " s, budget 1 s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "exact K reproduction, 15 values in %.3f s", dt);
  report(1, ok, buf);
}

// 2. the four approximate K values at printed precision; exact golden values
void criterion_approx_k(const std::string& golden_dir) {
  struct Row {
    long d;
    int n;
    double printed;
  };
  static constexpr Row rows[] = {{7, 5, 23.4}, {7, 6, 18.8}, {3, 8, 118.5}, {3, 10, 67.3}};
  bool ok = true;
  for (const Row& r : rows) {
    const double k = to_double(ExactValue(k_raw(r.d, r.n)));
    if (std::abs(k - r.printed) > 0.05) {
      ok = false;
      note("K(" + std::to_string(r.d) + "," + std::to_string(r.n) + ") ~ " + std::to_string(k) +
           " does not round to " + std::to_string(r.printed));
    }
  }
  const auto golden = load_golden_k(golden_dir);
  if (golden.size() < 14) {
    ok = false;
    note("golden file incomplete: " + std::to_string(golden.size()) + " rows");
  }
  for (const auto& [key, expect] : golden) {
    const Rational got = k_raw(key.first, key.second);
    if (got != expect) {
      ok = false;
      note("golden K(" + std::to_string(key.first) + "," + std::to_string(key.second) + ") = " +
           got.to_string() + ", recorded " + expect.to_string());
    }
  }
  report(2, ok, "approximate K values at printed precision + " +
                    std::to_string(golden.size()) + " golden exact values");
}

// 3. the thirteen known L-value coefficients, exactly
void criterion_l_values() {
  struct Row {
    long d, k;
    const char* coeff;
  };
  static constexpr Row rows[] = {
      {7, 3, "32/2401"},     {7, 5, "64/50421"},        {7, 7, "4672/37059435"},
      {3, 3, "4/243"},       {3, 5, "4/2187"},          {3, 7, "56/295245"},
      {3, 9, "3236/167403915"}, {3, 11, "14776/7533176175"}, {11, 3, "12/1331"},
      {19, 3, "44/6859"},    {43, 3, "332/79507"},      {67, 3, "1004/300763"},
      {163, 3, "9260/4330747"},
  };
  bool ok = true;
  for (const Row& r : rows) {
    const ExactValue expect(Rational::from_string(r.coeff), r.k, 1, r.d);
    const ExactValue got = l_odd_exact(r.k, r.d).value;
    if (got != expect) {
      ok = false;
      note("L(" + std::to_string(r.k) + ") for d=" + std::to_string(r.d) + " = " +
           got.to_string() + ", expected " + expect.to_string());
    }
  }
  report(3, ok, "exact reproduction of the 13 known L-values");
}

// 4. the four known zeta values
void criterion_zeta() {
  struct Row {
    long k;
    long den;
  };
  static constexpr Row rows[] = {{4, 90}, {6, 945}, {8, 9450}, {10, 93555}};
  bool ok = true;
  for (const Row& r : rows) {
    if (zeta_even_exact(r.k) != ExactValue(Rational(1, r.den), r.k)) {
      ok = false;
      note("zeta(" + std::to_string(r.k) + ") mismatch");
    }
  }
  report(4, ok, "zeta(4), zeta(6), zeta(8), zeta(10) exactly");
}

// 5. volume-ratio route == closed-form route, 7 x 19 = 133 pairs
void criterion_path_equality() {
  bool ok = true;
  int cases = 0;
  for (long d : supported_fields()) {
    for (int n = 2; n <= 20; ++n) {
      ++cases;
      const Rational raw = k_raw(d, n), closed = k_closed(d, n);
      if (raw != closed) {
        ok = false;
        note("d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + raw.to_string() +
             " vs " + closed.to_string());
      }
    }
  }
  if (cases != 133) {
    ok = false;
    note("expected 133 cases, ran " + std::to_string(cases));
  }
  report(5, ok, "k_raw = k_closed on all 133 (d, n) pairs, n <= 20");
}

// 6. the survivor set of the theorem over n = 2..12
void criterion_verdicts() {
  bool ok = true;
  std::set<std::pair<long, int>> survivors;
  for (long d : supported_fields())
    for (int n = 2; n <= 12; ++n)
      if (verdict(d, n).verdict == Verdict::PossiblyFree) survivors.emplace(d, n);
  const std::set<std::pair<long, int>> expected = {
      {7, 2}, {7, 3}, {7, 4}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7}};
  if (survivors != expected) {
    ok = false;
    for (const auto& [d, n] : survivors)
      if (!expected.count({d, n}))
        note("unexpected survivor d=" + std::to_string(d) + " n=" + std::to_string(n));
    for (const auto& [d, n] : expected)
      if (!survivors.count({d, n}))
        note("missing survivor d=" + std::to_string(d) + " n=" + std::to_string(n));
  }
  report(6, ok, "PossiblyFree exactly at d=7, n=2..4 and d=3, n=2..7 over n <= 12");
}

// 7. every exact value used above agrees with the Dirichlet oracle
void criterion_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr long kTerms = 100000;
  bool ok = true;
  for (long k = 2; k <= 20; k += 2) {
    const double exact = to_double(zeta_even_exact(k));
    const double num = zeta_numeric(k, kTerms).value;
    if (std::abs(num - exact) / num > 1e-8) {
      ok = false;
      note("zeta(" + std::to_string(k) + ") oracle deviation");
    }
  }
  for (long d : supported_fields()) {
    for (long k = 3; k <= 21; k += 2) {
      const double exact = to_double(l_odd_exact(k, d).value);
      const double num = l_numeric(k, d, kTerms).value;
      if (std::abs(num - exact) / std::abs(num) > 1e-8) {
        ok = false;
        note("L(" + std::to_string(k) + "), d=" + std::to_string(d) + " oracle deviation");
      }
    }
    for (int n = 1; n <= 20; ++n) {
      const CovolumeNumeric vl = vol_numeric(vol_L(n, d, DiscCase::MinusD), kTerms);
      if (vl.rel_dev > 1e-8) {
        ok = false;
        note("Vol(L_" + std::to_string(n) + "), d=" + std::to_string(d) + " deviation " +
             std::to_string(vl.rel_dev));
      }
      if (n <= 19) {
        const CovolumeNumeric vm = vol_numeric(vol_M(n, d, DiscCase::MinusD), kTerms);
        if (vm.rel_dev > 1e-8) {
          ok = false;
          note("Vol(M_" + std::to_string(n) + "), d=" + std::to_string(d) + " deviation " +
               std::to_string(vm.rel_dev));
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 30.0) {
    ok = false;
    note("oracle suite took " + std::to_string(dt) + " s, budget 30 s");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "zeta, L and covolume values vs Dirichlet oracle at 1e-8 (1e5 terms, %.1f s)", dt);
  report(7, ok, buf);
}

// 8. the generated property suites, >= 1e3 cases each
void criterion_properties() {
  bool ok = true;

  // characters: multiplicativity, periodicity, oddness
  {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long long> dist(-2000, 2000);
    int cases = 0;
    while (cases < 2000) {
      const long long a = dist(rng), m = dist(rng), n = dist(rng);
      if (m == 0 || n == 0) continue;
      ++cases;
      if (kronecker_symbol(a, m * n) != kronecker_symbol(a, m) * kronecker_symbol(a, n)) {
        ok = false;
        note("multiplicativity failure at a=" + std::to_string(a));
      }
    }
    int periodic_cases = 0;
    for (long d : supported_fields()) {
      const QuadChar chi = QuadChar::for_d(d);
      const long f = chi.params().conductor;
      for (long m = 1; m <= 200; ++m, ++periodic_cases)
        if (chi(m) != chi(m + f)) {
          ok = false;
          note("periodicity failure at d=" + std::to_string(d));
        }
      if (chi(-1) != -1) {
        ok = false;
        note("chi(-1) != -1 at d=" + std::to_string(d));
      }
    }
    if (cases < 1000 || periodic_cases < 1000) {
      ok = false;
      note("character property suite undersized");
    }
  }

  // exact value algebra laws
  {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 500), pi(-5, 5);
    std::uniform_int_distribution<int> se(0, 1), di(0, 3);
    constexpr long ds[4] = {1, 3, 7, 163};
    for (int i = 0; i < 2000; ++i) {
      const long d = ds[di(rng)];
      const auto rnd = [&](bool nonzero) {
        Rational c(num(rng), den(rng));
        while (nonzero && c.is_zero()) c = Rational(num(rng), den(rng));
        return ExactValue(c, pi(rng), se(rng), d);
      };
      const ExactValue x = rnd(false), y = rnd(false), z = rnd(false), w = rnd(true);
      if (x * y != y * x || (x * y) * z != x * (y * z) || (x * w) / w != x) {
        ok = false;
        note("algebra law failure at case " + std::to_string(i));
      }
    }
  }

  // generalized Bernoulli parity vanishing
  {
    int cases = 0;
    for (long d = 1; d <= 165; ++d) {
      if (!is_squarefree(d)) continue;
      const QuadChar chi = QuadChar::for_d(d);
      for (unsigned n = 2; n <= 12; n += 2) {
        ++cases;
        if (gen_bernoulli(n, chi) != Rational()) {
          ok = false;
          note("B_{n,chi} != 0 at d=" + std::to_string(d) + ", n=" + std::to_string(n));
        }
      }
      for (unsigned n = 3; n <= 11; n += 2) {
        ++cases;
        if (gen_bernoulli(n, chi) == Rational()) {
          ok = false;
          note("B_{n,chi} = 0 at odd n, d=" + std::to_string(d));
        }
      }
    }
    if (cases < 1000) {
      ok = false;
      note("parity suite undersized: " + std::to_string(cases));
    }
  }

  report(8, ok, "property suites: characters, exact-value algebra, Bernoulli parity (>= 1e3 cases each)");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : "tests/golden";
  criterion_exact_k();
  criterion_approx_k(golden_dir);
  criterion_l_values();
  criterion_zeta();
  criterion_path_equality();
  criterion_verdicts();
  criterion_oracle();
  criterion_properties();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
