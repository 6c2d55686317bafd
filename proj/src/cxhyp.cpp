#include "cxhyp.hpp"

#include <array>
#include <cmath>
#include <functional>

#include "errors.hpp"

namespace heiscount::cxhyp {

namespace {

const double kPi = 4.0 * std::atan(1.0);

// Cygan distance on coordinates (zeta, u, t), t >= 0.
double cygan_coords(const std::complex<double>& z1, double u1, double t1,
                    const std::complex<double>& z2, double u2, double t2) {
  std::complex<double> dz = z1 - z2;
  double re = std::norm(dz) + std::abs(t1 - t2);
  double im = u1 - u2 + 2.0 * std::imag(z1 * std::conj(z2));
  return std::sqrt(std::hypot(re, im));
}

// Adaptive Gauss-Kronrod (G7, K15) panel integration.
struct GK15 {
  static constexpr std::array<double, 8> xk = {
      0.0,
      0.2077849550078985,
      0.4058451513773972,
      0.5860872354676911,
      0.7415311855993944,
      0.8648644233597691,
      0.9491079123427585,
      0.9914553711208126,
  };
  static constexpr std::array<double, 8> wk = {
      0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
      0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
      0.0630920926299786, 0.0229353220105292,
  };
  static constexpr std::array<double, 4> wg = {
      0.4179591836734694,
      0.3818300505051189,
      0.2797053914892767,
      0.1294849661688697,
  };
};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = 0.0, fg = 0.0;
  double f0 = f(c);
  fk += GK15::wk[0] * f0;
  fg += GK15::wg[0] * f0;
  for (int i = 1; i < 8; ++i) {
    double fl = f(c - h * GK15::xk[i]);
    double fr = f(c + h * GK15::xk[i]);
    fk += GK15::wk[i] * (fl + fr);
    if (i % 2 == 0) fg += GK15::wg[i / 2] * (fl + fr);
  }
  double k = fk * h, g = fg * h;
  return {k, std::abs(k - g)};
}

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                  double b, double abs_tol, int max_panels = 4000) {
  struct Seg {
    double a, b, value, error;
  };
  PanelResult whole = gk15(f, a, b);
  std::vector<Seg> segs = {{a, b, whole.value, whole.error}};
  int panels = 1;
  for (;;) {
    double total_err = 0.0;
    int worst = -1;
    double worst_err = 0.0;
    for (size_t i = 0; i < segs.size(); ++i) {
      total_err += segs[i].error;
      if (segs[i].error > worst_err) {
        worst_err = segs[i].error;
        worst = static_cast<int>(i);
      }
    }
    if (total_err <= abs_tol || worst < 0) {
      AdaptiveResult out;
      for (const auto& s : segs) out.value += s.value;
      out.error = total_err;
      return out;
    }
    if (panels >= max_panels) {
      AdaptiveResult out;
      for (const auto& s : segs) out.value += s.value;
      out.error = total_err;
      out.converged = false;
      return out;
    }
    Seg s = segs[worst];
    double m = 0.5 * (s.a + s.b);
    PanelResult left = gk15(f, s.a, m);
    PanelResult right = gk15(f, m, s.b);
    segs[worst] = {s.a, m, left.value, left.error};
    segs.push_back({m, s.b, right.value, right.error});
    ++panels;
  }
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

SiegelPt make_siegel(std::complex<double> zeta, double u, double t) {
  require(t > 0.0, ErrorCode::InvalidInput, "Siegel point needs t > 0");
  return {zeta, u, t};
}

std::pair<std::complex<double>, std::complex<double>> siegel_pair(const SiegelPt& x) {
  return {{(std::norm(x.zeta) + x.t) / 2.0, -x.u / 2.0}, x.zeta};
}

std::pair<std::complex<double>, std::complex<double>> siegel_pair(const HeisPt& x) {
  return {heis::w0_of(x), x.zeta};
}

SiegelPt from_siegel_pair(std::complex<double> w0, std::complex<double> w) {
  double t = 2.0 * w0.real() - std::norm(w);
  return make_siegel(w, -2.0 * w0.imag(), t);
}

double cygan_siegel(const SiegelPt& x, const SiegelPt& y) {
  return cygan_coords(x.zeta, x.u, x.t, y.zeta, y.u, y.t);
}
double cygan_siegel(const SiegelPt& x, const HeisPt& y) {
  return cygan_coords(x.zeta, x.u, x.t, y.zeta, y.u, 0.0);
}
double cygan_siegel(const HeisPt& x, const SiegelPt& y) {
  return cygan_coords(x.zeta, x.u, 0.0, y.zeta, y.u, y.t);
}
double cygan_siegel(const HeisPt& x, const HeisPt& y) {
  return cygan_coords(x.zeta, x.u, 0.0, y.zeta, y.u, 0.0);
}

SiegelPt heis_translate(const HeisPt& g, const SiegelPt& x) {
  heis::HeisPt moved = heis::mul(g, heis::HeisPt{x.zeta, x.u});
  return {moved.zeta, moved.u, x.t};
}

SiegelPt involution(const SiegelPt& x) {
  auto [w0, w] = siegel_pair(x);
  require(std::abs(w0) > 0.0, ErrorCode::Degenerate, "involution pole at w0 = 0");
  return from_siegel_pair(1.0 / w0, w / w0);
}

double busemann(const HeisPt& xi, const SiegelPt& x, const SiegelPt& y) {
  double dx = cygan_siegel(x, xi);
  double dy = cygan_siegel(y, xi);
  require(dx > 0.0 && dy > 0.0, ErrorCode::Degenerate,
          "busemann: base point coincides with an argument");
  return 0.5 * std::log(y.t / x.t) + 2.0 * (std::log(dx) - std::log(dy));
}

double busemann_inf(const SiegelPt& x, const SiegelPt& y) {
  return 0.5 * std::log(y.t / x.t);
}

SiegelPt project_to_vertical_geodesic(const HeisPt& p) {
  double rho = std::hypot(std::norm(p.zeta), p.u);
  require(rho > 0.0, ErrorCode::Degenerate,
          "projection undefined at the base point of the geodesic");
  return make_siegel({0.0, 0.0}, 0.0, rho);
}

QuadratureResult verify_mu_integral(int n) {
  require(n >= 2 && n <= 4, ErrorCode::InvalidInput, "verify_mu_integral: n in {2,3,4}");
  QuadratureResult out;
  out.closed = (2.0 * n - 1.0) * kPi / (std::pow(2.0, 2 * n - 1) * (n - 1.0));

  // Truncation radius: outside [0,R]^2 the integrand is bounded by
  // s^{n-2}/(s^2+r^2)^n <= rho^{-n-1} in polar coordinates, so the tail is
  // at most (pi/2) R^{-n}/n; pick R making that < 1e-9.
  double R = std::pow((kPi / 2.0) / (n * 1e-9), 1.0 / n);
  double tail = (kPi / 2.0) * std::pow(R, -static_cast<double>(n)) / n;

  bool converged = true;
  const double inner_tol = 1e-13;
  auto inner = [&](double s) {
    auto f = [&](double r) {
      double base = (s + 1.0) * (s + 1.0) + r * r;
      return std::pow(s, n - 2) / std::pow(base, n);
    };
    AdaptiveResult res = integrate_adaptive(f, 0.0, R, inner_tol);
    if (!res.converged) converged = false;
    return res.value;
  };
  AdaptiveResult outer = integrate_adaptive(inner, 0.0, R, 5e-9);
  out.numeric = 2.0 * outer.value;
  out.err_estimate = 2.0 * (outer.error + tail + inner_tol * R);
  out.converged = converged && outer.converged;
  require(out.converged, ErrorCode::Verification,
          "mu-integral quadrature did not converge; achieved error " +
              std::to_string(out.err_estimate));
  return out;
}

QuadratureResult verify_cprime(int n) {
  require(n >= 2 && n <= 4, ErrorCode::InvalidInput, "verify_cprime: n in {2,3,4}");
  QuadratureResult out;
  // 2^{1-n} sqrt(pi) n! / ((n-1) Gamma(n+1/2)) simplified with
  // Gamma(n+1/2) = (2n)! sqrt(pi) / (4^n n!).
  out.closed =
      std::pow(2.0, n + 1) * factorial(n) * factorial(n) / ((n - 1.0) * factorial(2 * n));
  auto f = [&](double th) {
    double c = std::cos(th);
    return std::pow(c, n - 2) / std::pow(1.0 + c, n);
  };
  AdaptiveResult res = integrate_adaptive(f, -kPi / 2.0, kPi / 2.0, 1e-12);
  out.numeric = res.value;
  out.err_estimate = res.error;
  out.converged = res.converged;
  require(out.converged, ErrorCode::Verification,
          "c'_n quadrature did not converge; achieved error " +
              std::to_string(out.err_estimate));
  return out;
}

namespace {

// The geodesic chart (xi, r, s) -> (zeta, u, t) for n = 2.
std::array<double, 4> map_F(double xi_re, double xi_im, double r, double s) {
  std::complex<double> xi(xi_re, xi_im);
  std::complex<double> zc(std::norm(xi), -r);  // |xi|^2 - i r
  std::complex<double> den = 1.0 + zc * std::exp(2.0 * s);
  std::complex<double> zeta = xi / den;
  double u = -std::imag(zc / den);
  double t = std::exp(2.0 * s) * std::norm(zc) / std::norm(den);
  return {zeta.real(), zeta.imag(), u, t};
}

double det4(const std::array<std::array<double, 4>, 4>& m) {
  // Expansion by LU without pivot-safety concerns; the matrix at the base
  // point is well conditioned.
  std::array<std::array<double, 4>, 4> a = m;
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int rr = col + 1; rr < 4; ++rr)
      if (std::abs(a[rr][col]) > std::abs(a[piv][col])) piv = rr;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    if (a[col][col] == 0.0) return 0.0;
    for (int rr = col + 1; rr < 4; ++rr) {
      double f = a[rr][col] / a[col][col];
      for (int cc = col; cc < 4; ++cc) a[rr][cc] -= f * a[col][cc];
    }
  }
  return det;
}

std::array<std::array<double, 4>, 4> jacobian_fd(double h) {
  const double base[4] = {0.0, 0.0, 1.0, 0.0};  // (xi, r, s) = (0, 1, 0)
  std::array<std::array<double, 4>, 4> J{};
  for (int j = 0; j < 4; ++j) {
    double plus[4] = {base[0], base[1], base[2], base[3]};
    double minus[4] = {base[0], base[1], base[2], base[3]};
    plus[j] += h;
    minus[j] -= h;
    auto fp = map_F(plus[0], plus[1], plus[2], plus[3]);
    auto fm = map_F(minus[0], minus[1], minus[2], minus[3]);
    for (int i = 0; i < 4; ++i) J[i][j] = (fp[i] - fm[i]) / (2.0 * h);
  }
  return J;
}

}  // namespace

JacobianReport jacobian_of_F() {
  const double h = 1e-5;
  auto J1 = jacobian_fd(h);
  auto J2 = jacobian_fd(h / 2.0);
  std::array<std::array<double, 4>, 4> J{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) J[i][j] = (4.0 * J2[i][j] - J1[i][j]) / 3.0;
  JacobianReport rep;
  rep.det = det4(J);
  rep.du_ds = J[2][3];
  rep.dt_dr = J[3][2];
  require(std::isfinite(rep.det), ErrorCode::Verification,
          "finite-difference Jacobian failed at step " + std::to_string(h));
  return rep;
}

GeomConstants geometric_constants(int n) {
  require(n >= 2, ErrorCode::InvalidInput, "geometric_constants: n >= 2");
  GeomConstants g;
  g.n = n;
  g.c_horo_horo = std::pow(4.0, n) * factorial(n) / ((2.0 * n - 1.0) * std::pow(kPi, n));
  g.c_horo_geod = std::pow(4.0, n) * factorial(n) * factorial(n) /
                  (factorial(2 * n) * (2.0 * n - 1.0) * kPi);
  g.c_horo_cxgeod = 4.0 * (n - 1.0) / ((2.0 * n - 1.0) * kPi);
  return g;
}

double common_perp_length(const QuadInt& c_g) {
  require(!c_g.is_zero(), ErrorCode::Degenerate,
          "common perpendicular undefined: c = 0 (horoballs not disjoint)");
  return 0.5 * std::log(norm(c_g).convert_to<double>()) - std::log(2.0);
}

double horoball_gap(double s) {
  require(s >= 1.0, ErrorCode::InvalidInput, "horoball_gap needs s >= 1");
  return 0.5 * std::log(s);
}

}  // namespace heiscount::cxhyp
