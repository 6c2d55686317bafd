#include "zeta.hpp"

#include <cmath>

#include "errors.hpp"

namespace heiscount::zeta {

namespace {

// Kronecker symbol (a/b) for b >= 0, following the classical algorithm
// (Cohen, "A Course in Computational Algebraic Number Theory", 1.4.10).
int kronecker(long long a, long long b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (b & 1) == 0) return 0;
  int v = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++v;
  }
  int k = 1;
  if (v & 1) {
    long long am8 = ((a % 8) + 8) % 8;
    if (am8 == 3 || am8 == 5) k = -1;
  }
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  while (a != 0) {
    v = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v;
    }
    if (v & 1) {
      long long bm8 = b % 8;
      if (bm8 == 3 || bm8 == 5) k = -k;
    }
    // Quadratic reciprocity for odd a, b (a may be negative).
    if ((a & b & 2) != 0) k = -k;  // both = 3 mod 4
    long long r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
  return b > 1 ? 0 : k;
}

}  // namespace

int kronecker_chi(long D, long long n) {
  require(n >= 1, ErrorCode::InvalidInput, "kronecker_chi needs n >= 1");
  return kronecker(D, n);
}

double zeta3() {
  const long long N = 20000;
  double s = 0.0;
  for (long long n = N; n >= 1; --n) {
    double x = static_cast<double>(n);
    s += 1.0 / (x * x * x);
  }
  // Euler-Maclaurin tail for f(x) = x^-3.
  double N1 = static_cast<double>(N);
  s += 1.0 / (2.0 * N1 * N1) - 1.0 / (2.0 * N1 * N1 * N1) +
       1.0 / (4.0 * N1 * N1 * N1 * N1);
  return s;
}

double dirichlet_L3(long D) {
  std::string why;
  require(quadint::is_fundamental_discriminant(D, &why), ErrorCode::InvalidInput,
          "dirichlet_L3: " + why);
  const long long N = 1000000;
  double s = 0.0;
  for (long long n = N; n >= 1; --n) {
    int chi = kronecker(D, n);
    if (chi == 0) continue;
    double x = static_cast<double>(n);
    s += chi / (x * x * x);
  }
  return s;
}

ConstantBundle constants(const FieldSpec& F) {
  ConstantBundle c;
  const double pi = 4.0 * std::atan(1.0);
  double aD = static_cast<double>(-F.disc);
  double delta3 = F.disc == -3 ? 1.0 : 0.0;
  c.zeta3 = zeta3();
  c.L_chi_3 = dirichlet_L3(F.disc);
  c.zetaK3 = c.zeta3 * c.L_chi_3;
  c.mertens_C = c.zeta3 / (2.0 * pi * std::sqrt(aD) * c.zetaK3);
  c.equidist_C = pi * std::pow(aD, 1.5) * c.zetaK3 / c.zeta3;
  c.cusp_volume = (1.0 + 2.0 * delta3) * aD / (8.0 * F.units.size());
  c.picard_covolume =
      (1.0 + 2.0 * delta3) * std::pow(aD, 2.5) * c.zetaK3 / (48.0 * pi * c.zeta3);
  if (F.disc == -4) {
    // Seed chain z_1 = 0 over Q(i): Covol = pi/3, pointwise stabiliser 4.
    c.chain_C = 16.0 * pi * c.zeta3 / (3.0 * c.zetaK3);
  }
  return c;
}

}  // namespace heiscount::zeta
