#ifndef HEISCOUNT_CHAINS_HPP
#define HEISCOUNT_CHAINS_HPP

#include <array>
#include <complex>
#include <vector>

#include "heis.hpp"

namespace heiscount::chains {

using heis::HeisPt;
using quadint::FieldSpec;
using quadint::Int;
using quadint::QuadInt;

using CVec3 = std::array<std::complex<double>, 3>;

// Value of q = -z0 conj(z2) - z2 conj(z0) + |z1|^2 on an integral vector.
Int herm_q(const std::array<QuadInt, 3>& v);
// Hermitian polarization B(z, w) on complex vectors (linear in z).
std::complex<double> herm_pairing(const CVec3& z, const CVec3& w);
double herm_q(const CVec3& z);

// q-positive vector defining a chain.
struct PolarPoint {
  std::array<QuadInt, 3> v;
  Int qval;  // q(v), computed at construction
};

PolarPoint make_polar(const std::array<QuadInt, 3>& v);

// Derived geometry of a finite chain.
struct ChainGeom {
  HeisPt center;
  double R = 0.0;
  double diam = 0.0;         // 2R
  double diam_prime = 0.0;   // 2 sqrt2 R
  double diam_second = 0.0;  // sqrt2 R
  HeisPt translation;        // Heisenberg translation taking the chain to
                             // the standard circle u = 0, |zeta| = R
};

// Requires q(P) > 0 (NotAChain otherwise) and z2 != 0 (InfiniteChain).
ChainGeom chain_from_polar(const PolarPoint& P);

// Center via the reflexion route: image of [1:0:0] under the q-reflexion
// fixing the projective line polar to P.
HeisPt chain_center(const PolarPoint& P);

// The q-orthogonal involution with fixed line P^perp, applied to a vector.
CVec3 reflexion(const PolarPoint& P, const CVec3& z);

// k >= 3 sample points of the chain.
std::vector<HeisPt> sample_chain(const PolarPoint& P, int k);

// The standard arithmetic seed: polar point (0, 1, 0) of the chain cut out
// by z1 = 0 (infinite in this position; group images with z2 != 0 are the
// finite chains fed to chain_from_polar).
PolarPoint seed_chain(const FieldSpec& F);

CVec3 embed(const std::array<QuadInt, 3>& v);

}  // namespace heiscount::chains

#endif
