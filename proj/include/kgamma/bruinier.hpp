#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kgamma/covolumes.hpp"
#include "kgamma/rational.hpp"

namespace kgamma {

/// The seven d for which O_K is a p.i.d. and 2 is unramified.
const std::array<long, 7>& supported_fields();
bool is_supported_field(long d);

/// One conjugacy class of mirrors: the rank-(n-1) stabilizer lattice type,
/// the reflection order n_pi, and the weight (n_pi - 1)/n_pi it contributes.
struct MirrorClass {
  Lattice stabilizer;
  int reflection_order;
  Rational weight;
};

/// The two root orbits of L_n (lengths 1 and 2, one orbit each by James's
/// theorem). Reflections in length-1 roots have order 6 for d = 3 (the sixth
/// roots of unity act on the lattice) and order 2 otherwise.
struct ReflectionData {
  MirrorClass root_length_1;  // stabilizer U(L_{n-1})
  MirrorClass root_length_2;  // stabilizer U(M_{n-1})
};

ReflectionData reflection_data(long d);

/// K(Gamma) for Gamma = U(L_n) via the covolume ratio
///   (w1 Vol(L_{n-1}) + w2 Vol(M_{n-1})) / Vol(L_n),
/// weights from reflection_data, everything in the D = -d case. Exact: all
/// pi and sqrt(d) factors must cancel, anything left is std::logic_error.
/// Requires n >= 2 (James needs dimension >= 3) and a supported d.
Rational k_raw(long d, int n);

/// K(Gamma) from the specialized single-row closed forms (selected by
/// d = 3 / d = 7 / d >= 11 and n mod 4), substituting exact zeta/L values.
/// Fully independent route; must agree with k_raw exactly.
Rational k_closed(long d, int n);

/// Lower bound for the weight of the reflective form when the algebra is
/// free: 7n+7 for d = 3 (all weights divisible by 6), else 2n+2.
int freeness_bound(long d, int n);

enum class Verdict { NotFree, PossiblyFree };
const char* to_string(Verdict v);

struct KReport {
  long d = 0;
  int n = 0;
  Rational k_exact;
  double k_float = 0;
  int bound = 0;
  bool is_integer = false;
  bool passes_bound = false;
  std::optional<bool> congruence_ok;  // only set for d = 3 with the check enabled
  Verdict verdict = Verdict::NotFree;

  bool operator==(const KReport&) const = default;
};

/// Runs both K routes (throws std::logic_error if they disagree) and applies
/// the necessary conditions: NotFree when K < bound, K is not an integer, or
/// (d = 3, check enabled) K != n+1 (mod 6); PossiblyFree otherwise. The
/// conditions are necessary only, so freeness itself is never asserted.
KReport verdict(long d, int n, bool enable_congruence = false);

struct VerdictTable {
  std::vector<KReport> reports;      // sorted by d, then n
  std::vector<std::string> summary;  // per-d outcome lines over the range
};

/// Reports for every (d, n) with d in d_list and 2 <= n <= n_max.
VerdictTable sweep(std::vector<long> d_list, int n_max, bool enable_congruence = false);

}  // namespace kgamma
