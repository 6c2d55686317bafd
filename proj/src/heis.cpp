#include "heis.hpp"

#include <cmath>

namespace heiscount::heis {

using quadint::BasisCase;
using quadint::conj;
using quadint::norm;
using quadint::trace;

HeisPt mul(const HeisPt& p, const HeisPt& q) {
  double twist = 2.0 * std::imag(p.zeta * std::conj(q.zeta));
  return {p.zeta + q.zeta, p.u + q.u + twist};
}

HeisPt inv(const HeisPt& p) { return {-p.zeta, -p.u}; }

HeisPt dilate(const HeisPt& p, double lambda) {
  require(lambda > 0.0, ErrorCode::InvalidInput, "dilation ratio must be positive");
  return {lambda * p.zeta, lambda * lambda * p.u};
}

double cygan_gauge(const HeisPt& p) {
  double z2 = std::norm(p.zeta);
  return std::pow(z2 * z2 + p.u * p.u, 0.25);
}

double cygan_prime_gauge(const HeisPt& p) {
  double z2 = std::norm(p.zeta);
  return std::sqrt(std::sqrt(z2 * z2 + p.u * p.u) + z2);
}

double cygan(const HeisPt& p, const HeisPt& q) {
  return cygan_gauge(mul(inv(p), q));
}

double cygan_prime(const HeisPt& p, const HeisPt& q) {
  return cygan_prime_gauge(mul(inv(p), q));
}

double cygan_second(const HeisPt& p, const HeisPt& q) {
  HeisPt d = mul(inv(p), q);
  double dc = cygan_gauge(d);
  if (dc == 0.0) return 0.0;
  return dc * dc / cygan_prime_gauge(d);
}

std::complex<double> w0_of(const HeisPt& p) {
  return {std::norm(p.zeta) / 2.0, -p.u / 2.0};
}

HeisPt from_w(const std::complex<double>& w0, const std::complex<double>& w) {
  return {w, -2.0 * std::imag(w0)};
}

HeisIntElem::HeisIntElem(QuadInt w0, QuadInt w) : w0_(std::move(w0)), w_(std::move(w)) {
  require(trace(w0_) == norm(w_), ErrorCode::InvalidInput,
          "Heis_3(O_K) element needs tr(w0) = n(w); got tr=" + trace(w0_).str() +
              " n=" + norm(w_).str());
}

HeisIntElem mul(const HeisIntElem& g, const HeisIntElem& h) {
  return HeisIntElem(g.w0() + h.w0() + h.w() * conj(g.w()), g.w() + h.w());
}

HeisIntElem inv(const HeisIntElem& g) { return HeisIntElem(conj(g.w0()), -g.w()); }

HeisIntElem identity_elem(const FieldSpec& F) {
  return HeisIntElem(F.zero(), F.zero());
}

HeisPt to_point(const HeisIntElem& g) {
  std::complex<double> w0 = quadint::embed(g.w0());
  return from_w(w0, quadint::embed(g.w()));
}

Triple::Triple(QuadInt a, QuadInt alpha, QuadInt c)
    : a_(std::move(a)), alpha_(std::move(alpha)), c_(std::move(c)) {
  require(trace(a_ * conj(c_)) == norm(alpha_), ErrorCode::InvalidInput,
          "triple needs tr(a conj c) = n(alpha)");
}

Triple shear(const HeisIntElem& g, const Triple& t) {
  return Triple(t.a() + conj(g.w()) * t.alpha() + g.w0() * t.c(),
                t.alpha() + g.w() * t.c(), t.c());
}

PiLattice pi_lattice(const FieldSpec& F) {
  PiLattice P;
  P.lattice = ZLattice2(F.disc);
  if (F.basis_case == BasisCase::OneMod4) {
    P.lattice.insert(F.one());
    P.lattice.insert(F.omega());
    P.coset_reps = {F.zero()};
    return P;
  }
  // D = 0 mod 4: n(x + y w) = x^2 + (|D|/4) y^2 must be even.
  long long q0 = quadint::omega_param(F.disc);
  P.lattice.insert(F.from_coords(2, 0));
  if (q0 % 2 == 0) {
    P.lattice.insert(F.omega());
  } else {
    P.lattice.insert(F.from_coords(1, 1));
  }
  P.coset_reps = {F.zero(), F.one()};
  return P;
}

QuadInt solve_trace_w0(const FieldSpec& F, const Int& n) {
  if (F.basis_case == BasisCase::ZeroMod4) {
    require(n % 2 == 0, ErrorCode::Internal,
            "tr(w0) = n unsolvable: odd norm outside Pi");
    return F.from_coords(n / 2, 0);
  }
  if (n % 2 == 0) return F.from_coords(n / 2, 0);
  return F.from_coords((n - 1) / 2, 1);
}

RawTriple canonical_shear_raw(const FieldSpec& F, const RawTriple& t) {
  require(!t.c.is_zero(), ErrorCode::InvalidInput,
          "canonical form needs c != 0 (infinite stabiliser direction)");
  PiLattice Pi = pi_lattice(F);
  ZLattice2 cpi = quadint::scale_lattice(t.c, Pi.lattice);

  // (1) alpha to its fundamental-domain representative modulo c*Pi.
  QuadInt alpha0 = quadint::reduce_mod_sublattice(t.alpha, cpi);
  QuadInt w = quadint::exact_div(alpha0 - t.alpha, t.c);
  // (2) transport a by the unique shear realizing step (1).
  QuadInt w0 = solve_trace_w0(F, norm(w));
  QuadInt a1 = t.a + conj(w) * t.alpha + w0 * t.c;
  // (3) reduce a along the rank-1 lattice Z (nu c): representative with
  // projection coefficient onto nu*c in [0, 1).
  QuadInt g = imaginary_generator(F) * t.c;
  Int gg = g.x() * g.x() + g.y() * g.y();
  Int dot = a1.x() * g.x() + a1.y() * g.y();
  Int k = ringkernel::floordiv(dot, gg);
  QuadInt a2 = a1 - k * g;
  return {a2, alpha0, t.c};
}

Triple canonical_triple(const FieldSpec& F, const Triple& t) {
  RawTriple r = canonical_shear_raw(F, {t.a(), t.alpha(), t.c()});
  return Triple(r.a, r.alpha, r.c);
}

}  // namespace heiscount::heis
