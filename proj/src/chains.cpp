#include "chains.hpp"

#include <cmath>

#include "errors.hpp"

namespace heiscount::chains {

using quadint::conj;
using quadint::norm;
using quadint::trace;

Int herm_q(const std::array<QuadInt, 3>& v) {
  return norm(v[1]) - trace(v[0] * conj(v[2]));
}

std::complex<double> herm_pairing(const CVec3& z, const CVec3& w) {
  return -z[0] * std::conj(w[2]) - z[2] * std::conj(w[0]) + z[1] * std::conj(w[1]);
}

double herm_q(const CVec3& z) { return herm_pairing(z, z).real(); }

CVec3 embed(const std::array<QuadInt, 3>& v) {
  return {quadint::embed(v[0]), quadint::embed(v[1]), quadint::embed(v[2])};
}

PolarPoint make_polar(const std::array<QuadInt, 3>& v) {
  return {v, herm_q(v)};
}

namespace {

void check_finite_chain(const PolarPoint& P) {
  require(P.qval > 0, ErrorCode::NotAChain,
          "polar point must be q-positive (q = " + P.qval.str() + ")");
  require(!P.v[2].is_zero(), ErrorCode::InfiniteChain,
          "infinite chain: last coordinate of the polar point vanishes");
}

// The Heisenberg translation sending the chain of P to the standard circle
// u = 0, |zeta| = R: boundary point with w = -z1/z2 and
// w0 = |z1|^2/(2|z2|^2) - i Im(z0/z2) (the imaginary part cancels the
// vertical position of the chain; checked by g P = [-q(P) : 0 : 2|z2|^2]).
HeisPt reducing_translation(const PolarPoint& P) {
  CVec3 z = embed(P.v);
  double n2 = std::norm(z[2]);
  std::complex<double> w = -z[1] / z[2];
  std::complex<double> w0(std::norm(z[1]) / (2.0 * n2), -(z[0] / z[2]).imag());
  return heis::from_w(w0, w);
}

}  // namespace

ChainGeom chain_from_polar(const PolarPoint& P) {
  check_finite_chain(P);
  ChainGeom g;
  // R^2 = q(P)/n(z2), exact rational before the single square root.
  double r2 = P.qval.convert_to<double>() / norm(P.v[2]).convert_to<double>();
  g.R = std::sqrt(r2);
  g.diam = 2.0 * g.R;
  g.diam_second = g.R * std::sqrt(2.0);
  g.diam_prime = 2.0 * g.diam_second;
  g.translation = reducing_translation(P);
  g.center = heis::inv(g.translation);
  return g;
}

HeisPt chain_center(const PolarPoint& P) {
  check_finite_chain(P);
  CVec3 inf = {std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 0.0),
               std::complex<double>(0.0, 0.0)};
  CVec3 r = reflexion(P, inf);
  require(std::abs(r[2]) > 1e-14 * (std::abs(r[0]) + std::abs(r[1]) + 1.0),
          ErrorCode::Degenerate, "reflexion of infinity landed at infinity");
  return heis::from_w(r[0] / r[2], r[1] / r[2]);
}

CVec3 reflexion(const PolarPoint& P, const CVec3& z) {
  require(P.qval != 0, ErrorCode::NotAChain, "reflexion needs q(P) != 0");
  CVec3 p = embed(P.v);
  std::complex<double> scale = 2.0 * herm_pairing(z, p) / herm_q(p);
  return {z[0] - scale * p[0], z[1] - scale * p[1], z[2] - scale * p[2]};
}

std::vector<HeisPt> sample_chain(const PolarPoint& P, int k) {
  require(k >= 3, ErrorCode::InvalidInput, "sample_chain needs k >= 3");
  ChainGeom g = chain_from_polar(P);
  HeisPt back = heis::inv(g.translation);
  std::vector<HeisPt> out;
  out.reserve(k);
  const double two_pi = 8.0 * std::atan(1.0);
  for (int j = 0; j < k; ++j) {
    double th = two_pi * j / k;
    HeisPt circle{{g.R * std::cos(th), g.R * std::sin(th)}, 0.0};
    out.push_back(heis::mul(back, circle));
  }
  return out;
}

PolarPoint seed_chain(const FieldSpec& F) {
  return make_polar({F.zero(), F.one(), F.zero()});
}

}  // namespace heiscount::chains
