#pragma once

#include "kgamma/characters.hpp"
#include "kgamma/exact_value.hpp"

namespace kgamma {

enum class Lattice { L, M };  // diag(1,...,1,-1) and diag(1,...,1,-2)

/// Discriminant case of the field: D = -d (d = 3 mod 4) or D = -4d.
enum class DiscCase { MinusD, Minus4D };

/// Hirzebruch-Mumford covolume of B^n / SU(lattice_n, O_K), exact.
struct Covolume {
  Lattice lattice = Lattice::L;
  int n = 0;
  long d = 0;
  DiscCase disc_case = DiscCase::MinusD;
  ExactValue value;
};

/// Vol(L_n). Requires n >= 1 and a disc_case consistent with d mod 4.
/// The value is assembled as
///   |D|^{(n^2+3n)/4} * prod_{j=1}^{n} j!/(2 pi)^{j+1} * [zeta/L chain] * [local factors]
/// with the chain zeta(2) L(3) zeta(4) ... up to index n+1; the odd-n
/// D = -4d row carries the even-argument-only chain and the extra
/// (1 - 2^{-(n+1)}) factor. Local factors run over the primes dividing d.
Covolume vol_L(int n, long d, DiscCase disc_case);

/// Vol(M_n): the vol_L assembly with the extra 2-adic factor
/// 2^n (1 - (-d/2)^{n+1} 2^{-(n+1)}) / (1 - (-d/2) 2^{-1})  (D = -d rows),
/// (2^n - 1) or 2^n respectively (even/odd D = -4d rows), and the
/// (+-2/p) variant of the local factors.
Covolume vol_M(int n, long d, DiscCase disc_case);

struct CovolumeNumeric {
  double value = 0;    // same product, closed forms replaced by Dirichlet sums
  double rel_dev = 0;  // relative deviation from float(covolume.value)
};

/// Recomputes the covolume with zeta_numeric/l_numeric in place of the
/// closed forms; oracle for the exact assembly.
CovolumeNumeric vol_numeric(const Covolume& c, long terms);

}  // namespace kgamma
