#ifndef HEISCOUNT_RINGKERNEL_HPP
#define HEISCOUNT_RINGKERNEL_HPP

#include <cstdint>
#include <utility>

namespace heiscount::ringkernel {

// Arithmetic in O_K written on raw coordinate pairs (x, y) for the integral
// basis (1, w), where
//   D == 0 mod 4:  w = i sqrt|D|/2,        w^2 = -q       with q = |D|/4,
//   D == 1 mod 4:  w = (1 + i sqrt|D|)/2,  w^2 = w - q    with q = (1+|D|)/4.
// Templated on the integer type so the same formulas serve the exact
// arbitrary-precision path and the bounded fast path of the enumerations.

struct RingParams {
  bool one_mod_4;  // basis case
  long long q;     // q0 = |D|/4 or q1 = (1+|D|)/4
};

template <class I>
struct QI {
  I x{}, y{};
  bool operator==(const QI&) const = default;
};

template <class I>
QI<I> add(const QI<I>& a, const QI<I>& b) {
  return {a.x + b.x, a.y + b.y};
}

template <class I>
QI<I> sub(const QI<I>& a, const QI<I>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <class I>
QI<I> neg(const QI<I>& a) {
  return {-a.x, -a.y};
}

template <class I>
QI<I> mul(const RingParams& p, const QI<I>& a, const QI<I>& b) {
  I cross = a.x * b.y + a.y * b.x;
  I yy = a.y * b.y;
  if (p.one_mod_4) return {a.x * b.x - yy * p.q, cross + yy};
  return {a.x * b.x - yy * p.q, cross};
}

template <class I>
QI<I> conj(const RingParams& p, const QI<I>& a) {
  if (p.one_mod_4) return {a.x + a.y, -a.y};
  return {a.x, -a.y};
}

template <class I>
I trace(const RingParams& p, const QI<I>& a) {
  if (p.one_mod_4) return 2 * a.x + a.y;
  return 2 * a.x;
}

template <class I>
I norm(const RingParams& p, const QI<I>& a) {
  if (p.one_mod_4) return a.x * a.x + a.x * a.y + I(p.q) * a.y * a.y;
  return a.x * a.x + I(p.q) * a.y * a.y;
}

template <class I>
bool is_zero(const QI<I>& a) {
  return a.x == 0 && a.y == 0;
}

// Floored division (quotient rounded toward -infinity) for signed I.
template <class I>
I floordiv(const I& a, const I& b) {
  I q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class I>
I gcd_nonneg(I a, I b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    I r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Extended gcd: returns g >= 0 and (u, v) with u*a + v*b = g.
template <class I>
void ext_gcd(I a, I b, I& g, I& u, I& v) {
  I old_r = a, r = b;
  I old_u = 1, uu = 0;
  I old_v = 0, vv = 1;
  while (r != 0) {
    I q = old_r / r;
    I t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * uu;
    old_u = uu;
    uu = t;
    t = old_v - q * vv;
    old_v = vv;
    vv = t;
  }
  g = old_r;
  u = old_u;
  v = old_v;
  if (g < 0) {
    g = -g;
    u = -u;
    v = -v;
  }
}

// Rank <= 2 sublattice of Z^2 in column Hermite normal form.  Columns are
// (d0, 0) and (b, d1) in (1, w) coordinates; d0, d1 >= 0 and 0 <= b < d0
// whenever both diagonal entries are positive.  The zero lattice has all
// entries zero.
template <class I>
struct Lat2 {
  I d0{}, b{}, d1{};

  bool is_zero() const { return d0 == 0 && b == 0 && d1 == 0; }
  bool full_rank() const { return d0 > 0 && d1 > 0; }
  I index() const { return d0 * d1; }
  bool is_unit() const { return d0 == 1 && d1 == 1; }

  void normalize_b() {
    if (d0 > 0 && d1 > 0) {
      b -= floordiv(b, d0) * d0;
    } else if (d1 == 0) {
      b = 0;
    }
  }

  // Adjoin the vector (x, y), keeping HNF.
  void insert(I x, I y) {
    if (x == 0 && y == 0) return;
    if (y != 0) {
      if (d1 == 0) {
        if (y < 0) {
          x = -x;
          y = -y;
        }
        b = x;
        d1 = y;
      } else {
        I g, u, v;
        ext_gcd(d1, y, g, u, v);
        // Leftover vector with vanishing second coordinate.
        I leftover = (d1 / g) * x - (y / g) * b;
        I nb = u * b + v * x;
        b = nb;
        d1 = g;
        d0 = gcd_nonneg(d0, leftover);
      }
    } else {
      d0 = gcd_nonneg(d0, x);
    }
    normalize_b();
  }

  bool contains(const I& x, const I& y) const {
    if (is_zero()) return x == 0 && y == 0;
    if (d1 == 0) {
      if (y != 0) return false;
      if (d0 == 0) return x == 0;
      return x % d0 == 0;
    }
    if (y % d1 != 0) return false;
    I k = y / d1;
    I r = x - k * b;
    if (d0 == 0) return r == 0;
    return r % d0 == 0;
  }

  // Representative of (x, y) modulo the lattice with both lattice-basis
  // coordinates in [0, 1).  Requires full rank.
  QI<I> reduce(const I& x, const I& y) const {
    I t1 = floordiv(y, d1);
    I ry = y - t1 * d1;
    I x2 = x - t1 * b;
    I t0 = floordiv(x2, d0);
    return {x2 - t0 * d0, ry};
  }
};

}  // namespace heiscount::ringkernel

#endif
