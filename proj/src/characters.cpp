#include "kgamma/characters.hpp"

#include <array>
#include <limits>
#include <utility>

#include "kgamma/rational.hpp"

namespace kgamma {

int kronecker_symbol(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (n == std::numeric_limits<long long>::min())
    throw std::invalid_argument("kronecker_symbol: |n| out of range");
  int result = 1;
  if (n < 0) {
    if (a < 0) result = -result;  // (a/-1) = sign(a)
    n = -n;
  }
  if (a % 2 == 0 && n % 2 == 0) return 0;
  while (n % 2 == 0) {
    n /= 2;
    const int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if (am8 == 3 || am8 == 5) result = -result;  // (a/2) supplement
  }
  if (n == 1) return result;
  // Jacobi symbol on odd n > 1 via reciprocity
  long long x = a % n;
  if (x < 0) x += n;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const int nm8 = static_cast<int>(n % 8);
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

FieldParams field_params(long d) {
  if (d < 1) throw std::invalid_argument("field_params: d must be positive");
  if (!is_squarefree(d)) throw std::domain_error("field_params: d must be squarefree");
  static constexpr std::array<long, 9> kClassNumberOne = {1, 2, 3, 7, 11, 19, 43, 67, 163};
  FieldParams p;
  p.d = d;
  p.two_unramified = d % 4 == 3;
  p.discriminant = p.two_unramified ? -d : -4 * d;
  p.conductor = -p.discriminant;
  p.class_number_one = false;
  for (long v : kClassNumberOne)
    if (v == d) p.class_number_one = true;
  return p;
}

}  // namespace kgamma
