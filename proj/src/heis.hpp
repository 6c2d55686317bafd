#ifndef HEISCOUNT_HEIS_HPP
#define HEISCOUNT_HEIS_HPP

#include <array>
#include <complex>

#include "quadint.hpp"

namespace heiscount::heis {

using quadint::FieldSpec;
using quadint::Int;
using quadint::QuadInt;
using quadint::ZLattice2;

// Point (zeta, u) of Heis_3 = boundary of the Siegel domain minus infinity,
// with group law (z,u)(z',u') = (z+z', u+u'+2 Im z conj(z')).
struct HeisPt {
  std::complex<double> zeta{0.0, 0.0};
  double u = 0.0;
};

HeisPt mul(const HeisPt& p, const HeisPt& q);
HeisPt inv(const HeisPt& p);
HeisPt dilate(const HeisPt& p, double lambda);

// Gauges at the identity; the distances are the left-invariant extensions.
double cygan_gauge(const HeisPt& p);
double cygan_prime_gauge(const HeisPt& p);
double cygan(const HeisPt& p, const HeisPt& q);
double cygan_prime(const HeisPt& p, const HeisPt& q);
double cygan_second(const HeisPt& p, const HeisPt& q);

// (w0, w) coordinates: w0 = (|zeta|^2 - i u)/2 on the boundary.
std::complex<double> w0_of(const HeisPt& p);
HeisPt from_w(const std::complex<double>& w0, const std::complex<double>& w);

// Integer point (w0, w) with tr(w0) = n(w).
class HeisIntElem {
 public:
  HeisIntElem(QuadInt w0, QuadInt w);
  const QuadInt& w0() const { return w0_; }
  const QuadInt& w() const { return w_; }
  bool operator==(const HeisIntElem& o) const { return w0_ == o.w0_ && w_ == o.w_; }

 private:
  QuadInt w0_, w_;
};

HeisIntElem mul(const HeisIntElem& g, const HeisIntElem& h);
HeisIntElem inv(const HeisIntElem& g);
HeisIntElem identity_elem(const FieldSpec& F);
HeisPt to_point(const HeisIntElem& g);

// (a, alpha, c) with tr(a conj(c)) = n(alpha); a lift of a rational point of
// the hypersphere.
class Triple {
 public:
  Triple(QuadInt a, QuadInt alpha, QuadInt c);
  const QuadInt& a() const { return a_; }
  const QuadInt& alpha() const { return alpha_; }
  const QuadInt& c() const { return c_; }
  bool operator==(const Triple& o) const {
    return a_ == o.a_ && alpha_ == o.alpha_ && c_ == o.c_;
  }

 private:
  QuadInt a_, alpha_, c_;
};

// (w0,w).(a,alpha,c) = (a + conj(w) alpha + w0 c, alpha + w c, c).
Triple shear(const HeisIntElem& g, const Triple& t);

// Pi = n^{-1}(tr O_K), the lattice of horizontal parts, with coset
// representatives of Pi in O_K.
struct PiLattice {
  ZLattice2 lattice;
  std::vector<QuadInt> coset_reps;  // 0 first
};
PiLattice pi_lattice(const FieldSpec& F);

// Solve tr(w0) = n for the deterministic w0 used by canonical forms.
QuadInt solve_trace_w0(const FieldSpec& F, const Int& n);

// Canonical representative of (a, alpha, c), c != 0, under the shear action
// of Heis_3(O_K); constant on orbits and idempotent.  Works for any triple
// of ring elements (the constraint is not needed by the reduction).
struct RawTriple {
  QuadInt a, alpha, c;
  bool operator==(const RawTriple&) const = default;
};
RawTriple canonical_shear_raw(const FieldSpec& F, const RawTriple& t);
Triple canonical_triple(const FieldSpec& F, const Triple& t);

}  // namespace heiscount::heis

#endif
