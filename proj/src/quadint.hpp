#ifndef HEISCOUNT_QUADINT_HPP
#define HEISCOUNT_QUADINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ringkernel.hpp"

namespace heiscount::quadint {

using Int = boost::multiprecision::cpp_int;

enum class BasisCase { ZeroMod4, OneMod4 };

// The case tag and the w^2 parameter are functions of the discriminant, so
// elements only need to carry the discriminant itself.
BasisCase basis_case_of(long disc);
long long omega_param(long disc);
ringkernel::RingParams ring_params(long disc);

// x + y*w in the integral basis of the field with the given discriminant.
class QuadInt {
 public:
  QuadInt() : x_(0), y_(0), disc_(-4) {}
  QuadInt(long disc, Int x, Int y) : x_(std::move(x)), y_(std::move(y)), disc_(disc) {}

  const Int& x() const { return x_; }
  const Int& y() const { return y_; }
  long disc() const { return disc_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  bool operator==(const QuadInt& o) const {
    return disc_ == o.disc_ && x_ == o.x_ && y_ == o.y_;
  }
  bool operator!=(const QuadInt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Int x_, y_;
  long disc_;
};

QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);
QuadInt operator*(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a);
QuadInt operator*(const Int& k, const QuadInt& a);

QuadInt conj(const QuadInt& a);
Int trace(const QuadInt& a);
Int norm(const QuadInt& a);
std::complex<double> embed(const QuadInt& a);

// Exact division in O_K; throws if b does not divide a.
QuadInt exact_div(const QuadInt& a, const QuadInt& b);

struct FieldSpec {
  long disc;                    // fundamental discriminant, < 0
  BasisCase basis_case;
  std::vector<QuadInt> units;   // the group O_K^x
  int tK_mult;                  // t_K = tK_mult * sqrt|D|
  int pi_index;                 // [O_K : Pi]

  double tK() const;
  QuadInt omega() const { return QuadInt(disc, 0, 1); }
  QuadInt one() const { return QuadInt(disc, 1, 0); }
  QuadInt zero() const { return QuadInt(disc, 0, 0); }
  QuadInt from_coords(const Int& x, const Int& y) const { return QuadInt(disc, x, y); }
};

bool is_fundamental_discriminant(long D, std::string* why = nullptr);
FieldSpec make_field(long D);

// Trace-zero generator: nu spans {z in O_K : tr z = 0}, embed(nu) = i t_K / 2.
QuadInt imaginary_generator(const FieldSpec& F);

// Z-sublattice of O_K in column HNF, coordinates in the (1, w) basis.
class ZLattice2 {
 public:
  ZLattice2() = default;
  explicit ZLattice2(long disc) : disc_(disc) {}
  ZLattice2(long disc, Int d0, Int b, Int d1);

  long disc() const { return disc_; }
  const Int& d0() const { return lat_.d0; }
  const Int& b() const { return lat_.b; }
  const Int& d1() const { return lat_.d1; }

  bool is_zero() const { return lat_.is_zero(); }
  bool full_rank() const { return lat_.full_rank(); }
  Int index() const { return lat_.index(); }

  void insert(const QuadInt& g);
  bool contains(const QuadInt& z) const;

  QuadInt col0() const { return QuadInt(disc_, lat_.d0, 0); }
  QuadInt col1() const { return QuadInt(disc_, lat_.b, lat_.d1); }

  bool operator==(const ZLattice2& o) const {
    return disc_ == o.disc_ && lat_.d0 == o.lat_.d0 && lat_.b == o.lat_.b &&
           lat_.d1 == o.lat_.d1;
  }

 private:
  long disc_ = -4;
  ringkernel::Lat2<Int> lat_;
  friend QuadInt reduce_mod_sublattice(const QuadInt&, const ZLattice2&);
};

// HNF of the O_K-module generated by gens (Z-span of {g, g*w}).
ZLattice2 ideal_span(const std::vector<QuadInt>& gens);

// <a, alpha, c> = O_K?
bool is_coprime_triple(const QuadInt& a, const QuadInt& alpha, const QuadInt& c);

// Fundamental-domain representative: z - r in L, L-coordinates of r in [0,1).
QuadInt reduce_mod_sublattice(const QuadInt& z, const ZLattice2& L);

// c * L as a sublattice.
ZLattice2 scale_lattice(const QuadInt& c, const ZLattice2& L);

// Reduced fraction num/den of elements of K, den > 0.
class KNum {
 public:
  KNum(QuadInt num, Int den);
  static KNum quotient(const QuadInt& a, const QuadInt& c);

  const QuadInt& num() const { return num_; }
  const Int& den() const { return den_; }
  std::complex<double> embed() const;

  bool operator==(const KNum& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  QuadInt num_;
  Int den_;
};

Int gcd(Int a, Int b);

}  // namespace heiscount::quadint

#endif
