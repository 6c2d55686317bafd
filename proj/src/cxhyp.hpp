#ifndef HEISCOUNT_CXHYP_HPP
#define HEISCOUNT_CXHYP_HPP

#include <complex>
#include <utility>

#include "heis.hpp"

namespace heiscount::cxhyp {

using heis::HeisPt;
using quadint::QuadInt;

// Horospherical coordinates (zeta, u, t), t > 0, of a point of the Siegel
// domain; (w0, w) = ((|zeta|^2 + t - iu)/2, zeta).
struct SiegelPt {
  std::complex<double> zeta{0.0, 0.0};
  double u = 0.0;
  double t = 1.0;
};

SiegelPt make_siegel(std::complex<double> zeta, double u, double t);
std::pair<std::complex<double>, std::complex<double>> siegel_pair(const SiegelPt& x);
std::pair<std::complex<double>, std::complex<double>> siegel_pair(const HeisPt& x);
SiegelPt from_siegel_pair(std::complex<double> w0, std::complex<double> w);

// Cygan distance extended to the Siegel domain; restricts to heis::cygan on
// the boundary (t = 0).
double cygan_siegel(const SiegelPt& x, const SiegelPt& y);
double cygan_siegel(const SiegelPt& x, const HeisPt& y);
double cygan_siegel(const HeisPt& x, const SiegelPt& y);
double cygan_siegel(const HeisPt& x, const HeisPt& y);

// Heisenberg translations act on the Siegel domain preserving t.
SiegelPt heis_translate(const HeisPt& g, const SiegelPt& x);

// Busemann cocycle based at xi (resp. at infinity).
double busemann(const HeisPt& xi, const SiegelPt& x, const SiegelPt& y);
double busemann_inf(const SiegelPt& x, const SiegelPt& y);

// The isometric involution (w0, w) -> (1/w0, w/w0) swapping (0,0) and infinity.
SiegelPt involution(const SiegelPt& x);

// Orthogonal projection of a boundary point onto the vertical geodesic
// (0,0) -- infinity: (zeta, u) -> (0, 0, (|zeta|^4 + u^2)^{1/2}).
SiegelPt project_to_vertical_geodesic(const HeisPt& p);

struct QuadratureResult {
  double numeric = 0.0;
  double closed = 0.0;
  double err_estimate = 0.0;  // quadrature + tail bound
  bool converged = false;
};

// 2 Int_{[0,inf)^2} s^{n-2} ds dr / (s^2+r^2+2s+1)^n  vs  (2n-1) pi / (2^{2n-1}(n-1)).
QuadratureResult verify_mu_integral(int n);

// Int_{-pi/2}^{pi/2} cos^{n-2}t/(1+cos t)^n dt  vs  2^{n+1}(n!)^2/((n-1)(2n)!).
QuadratureResult verify_cprime(int n);

// Finite-difference check of the geodesic-chart change of variables at
// (xi, r, s) = (0, 1, 0) for n = 2.
struct JacobianReport {
  double det = 0.0;      // expected 1/4
  double du_ds = 0.0;    // expected -1
  double dt_dr = 0.0;    // expected 1/2
};
JacobianReport jacobian_of_F();

// Prefactors of the common-perpendicular counting constants (the volume
// ratios are not included).
struct GeomConstants {
  int n = 2;
  double c_horo_horo = 0.0;    // 4^n n! / ((2n-1) pi^n)
  double c_horo_geod = 0.0;    // 4^n (n!)^2 / ((2n)! (2n-1) pi)
  double c_horo_cxgeod = 0.0;  // 4(n-1) / ((2n-1) pi)
};
GeomConstants geometric_constants(int n);

// Length of the common perpendicular between H_1 and g H_1: ln|c_g| - ln 2.
double common_perp_length(const QuadInt& c_g);

// d(boundary H_1, boundary H_s) = (ln s)/2 for s >= 1.
double horoball_gap(double s);

}  // namespace heiscount::cxhyp

#endif
