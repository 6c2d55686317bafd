#include "quadint.hpp"

#include <cmath>
#include <sstream>

namespace heiscount::quadint {

namespace rk = heiscount::ringkernel;

BasisCase basis_case_of(long disc) {
  long m = ((disc % 4) + 4) % 4;
  return m == 0 ? BasisCase::ZeroMod4 : BasisCase::OneMod4;
}

long long omega_param(long disc) {
  long long ad = -static_cast<long long>(disc);
  return basis_case_of(disc) == BasisCase::ZeroMod4 ? ad / 4 : (1 + ad) / 4;
}

rk::RingParams ring_params(long disc) {
  return {basis_case_of(disc) == BasisCase::OneMod4, omega_param(disc)};
}

namespace {

void check_same_field(const QuadInt& a, const QuadInt& b) {
  require(a.disc() == b.disc(), ErrorCode::InvalidInput,
          "mixed-field operands: D=" + std::to_string(a.disc()) + " vs D=" +
              std::to_string(b.disc()));
}

rk::QI<Int> raw(const QuadInt& a) { return {a.x(), a.y()}; }

QuadInt wrap(long disc, const rk::QI<Int>& v) { return QuadInt(disc, v.x, v.y); }

}  // namespace

std::string QuadInt::str() const {
  std::ostringstream os;
  os << "(" << x_ << "," << y_ << ")";
  return os.str();
}

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
  check_same_field(a, b);
  return wrap(a.disc(), rk::add(raw(a), raw(b)));
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
  check_same_field(a, b);
  return wrap(a.disc(), rk::sub(raw(a), raw(b)));
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
  check_same_field(a, b);
  return wrap(a.disc(), rk::mul(ring_params(a.disc()), raw(a), raw(b)));
}

QuadInt operator-(const QuadInt& a) { return wrap(a.disc(), rk::neg(raw(a))); }

QuadInt operator*(const Int& k, const QuadInt& a) {
  return QuadInt(a.disc(), k * a.x(), k * a.y());
}

QuadInt conj(const QuadInt& a) {
  return wrap(a.disc(), rk::conj(ring_params(a.disc()), raw(a)));
}

Int trace(const QuadInt& a) { return rk::trace(ring_params(a.disc()), raw(a)); }

Int norm(const QuadInt& a) { return rk::norm(ring_params(a.disc()), raw(a)); }

std::complex<double> embed(const QuadInt& a) {
  double ad = static_cast<double>(-a.disc());
  double im = a.y().convert_to<double>() * std::sqrt(ad) / 2.0;
  double re = a.x().convert_to<double>();
  if (basis_case_of(a.disc()) == BasisCase::OneMod4)
    re += a.y().convert_to<double>() / 2.0;
  return {re, im};
}

QuadInt exact_div(const QuadInt& a, const QuadInt& b) {
  check_same_field(a, b);
  require(!b.is_zero(), ErrorCode::InvalidInput, "division by zero in O_K");
  QuadInt num = a * conj(b);
  Int den = norm(b);
  require(num.x() % den == 0 && num.y() % den == 0, ErrorCode::InvalidInput,
          "exact_div: " + b.str() + " does not divide " + a.str());
  return QuadInt(a.disc(), num.x() / den, num.y() / den);
}

double FieldSpec::tK() const {
  return tK_mult * std::sqrt(static_cast<double>(-disc));
}

bool is_fundamental_discriminant(long D, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (D >= 0) return fail("discriminant must be negative");
  long m4 = ((D % 4) + 4) % 4;
  auto squarefree = [](long n) {
    if (n < 0) n = -n;
    for (long p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  if (m4 == 1) {
    if (!squarefree(D)) return fail("D = 1 mod 4 but not squarefree");
    return true;
  }
  if (m4 == 0) {
    long m = D / 4;
    long mm4 = ((m % 4) + 4) % 4;
    if (mm4 != 2 && mm4 != 3) return fail("D/4 = " + std::to_string(mm4) + " mod 4, need 2 or 3");
    if (!squarefree(m)) return fail("D/4 not squarefree");
    return true;
  }
  return fail("D = " + std::to_string(m4) + " mod 4, not a discriminant");
}

FieldSpec make_field(long D) {
  std::string why;
  require(is_fundamental_discriminant(D, &why), ErrorCode::InvalidInput,
          "not a fundamental discriminant: D=" + std::to_string(D) + " (" + why + ")");
  FieldSpec F;
  F.disc = D;
  F.basis_case = basis_case_of(D);
  F.tK_mult = F.basis_case == BasisCase::ZeroMod4 ? 1 : 2;
  F.pi_index = F.basis_case == BasisCase::ZeroMod4 ? 2 : 1;
  QuadInt one = F.one(), w = F.omega();
  F.units = {one, -one};
  if (D == -4) {
    F.units.push_back(w);
    F.units.push_back(-w);
  } else if (D == -3) {
    // Sixth roots of unity: +-1, +-w, +-(w - 1).
    QuadInt w1 = w - one;
    F.units.push_back(w);
    F.units.push_back(-w);
    F.units.push_back(w1);
    F.units.push_back(-w1);
  }
  return F;
}

QuadInt imaginary_generator(const FieldSpec& F) {
  if (F.basis_case == BasisCase::ZeroMod4) return F.omega();
  return F.from_coords(-1, 2);
}

ZLattice2::ZLattice2(long disc, Int d0, Int b, Int d1) : disc_(disc) {
  lat_.d0 = std::move(d0);
  lat_.b = std::move(b);
  lat_.d1 = std::move(d1);
  require(lat_.d0 >= 0 && lat_.d1 >= 0, ErrorCode::InvalidInput,
          "HNF diagonal entries must be nonnegative");
  lat_.normalize_b();
}

void ZLattice2::insert(const QuadInt& g) {
  require(g.disc() == disc_, ErrorCode::InvalidInput, "lattice/element field mismatch");
  lat_.insert(g.x(), g.y());
}

bool ZLattice2::contains(const QuadInt& z) const {
  require(z.disc() == disc_, ErrorCode::InvalidInput, "lattice/element field mismatch");
  return lat_.contains(z.x(), z.y());
}

ZLattice2 ideal_span(const std::vector<QuadInt>& gens) {
  require(!gens.empty(), ErrorCode::InvalidInput, "ideal_span: no generators");
  ZLattice2 L(gens.front().disc());
  QuadInt w(gens.front().disc(), 0, 1);
  for (const auto& g : gens) {
    L.insert(g);
    L.insert(g * w);
  }
  return L;
}

bool is_coprime_triple(const QuadInt& a, const QuadInt& alpha, const QuadInt& c) {
  ZLattice2 L(a.disc());
  QuadInt w(a.disc(), 0, 1);
  for (const QuadInt* g : {&c, &alpha, &a}) {
    L.insert(*g);
    if (L.d0() == 1 && L.d1() == 1) return true;
    L.insert(*g * w);
    if (L.d0() == 1 && L.d1() == 1) return true;
  }
  return false;
}

QuadInt reduce_mod_sublattice(const QuadInt& z, const ZLattice2& L) {
  require(z.disc() == L.disc(), ErrorCode::InvalidInput, "lattice/element field mismatch");
  require(L.full_rank(), ErrorCode::InvalidInput,
          "reduce_mod_sublattice needs a finite-index lattice");
  auto r = L.lat_.reduce(z.x(), z.y());
  return QuadInt(z.disc(), r.x, r.y);
}

ZLattice2 scale_lattice(const QuadInt& c, const ZLattice2& L) {
  ZLattice2 out(L.disc());
  out.insert(c * L.col0());
  out.insert(c * L.col1());
  return out;
}

Int gcd(Int a, Int b) { return rk::gcd_nonneg(std::move(a), std::move(b)); }

KNum::KNum(QuadInt num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  require(den_ != 0, ErrorCode::InvalidInput, "KNum: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  Int g = quadint::gcd(quadint::gcd(num_.x(), num_.y()), den_);
  if (g > 1) {
    num_ = QuadInt(num_.disc(), num_.x() / g, num_.y() / g);
    den_ /= g;
  }
}

KNum KNum::quotient(const QuadInt& a, const QuadInt& c) {
  require(!c.is_zero(), ErrorCode::InvalidInput, "KNum: division by zero");
  return KNum(a * conj(c), norm(c));
}

std::complex<double> KNum::embed() const {
  return quadint::embed(num_) / den_.convert_to<double>();
}

}  // namespace heiscount::quadint
