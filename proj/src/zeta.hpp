#ifndef HEISCOUNT_ZETA_HPP
#define HEISCOUNT_ZETA_HPP

#include <optional>

#include "quadint.hpp"

namespace heiscount::zeta {

using quadint::FieldSpec;

// Kronecker symbol (D/n) for a fundamental discriminant D and n >= 1.
int kronecker_chi(long D, long long n);

// zeta(3) by series with Euler-Maclaurin tail.
double zeta3();

// L(3, chi_D) by direct series; truncation error below 1e-12 for |D| < 500.
double dirichlet_L3(long D);

// Every closed-form theorem constant, field by field.
struct ConstantBundle {
  double zeta3 = 0.0;
  double L_chi_3 = 0.0;
  double zetaK3 = 0.0;           // zeta(3) * L(3, chi_D)
  double mertens_C = 0.0;        // zeta(3) / (2 pi |D|^{1/2} zeta_K(3))
  double equidist_C = 0.0;       // pi |D|^{3/2} zeta_K(3) / zeta(3)
  double cusp_volume = 0.0;      // (1+2[D=-3]) |D| / (8 |O_K^x|)
  double picard_covolume = 0.0;  // (1+2[D=-3]) |D|^{5/2} zeta_K(3) / (48 pi zeta(3))
  std::optional<double> chain_C; // D = -4 only: 16 pi zeta(3) / (3 zeta_K(3))
};

ConstantBundle constants(const FieldSpec& F);

}  // namespace heiscount::zeta

#endif
