#ifndef HEISCOUNT_TEST_UTIL_HPP
#define HEISCOUNT_TEST_UTIL_HPP

#include <complex>
#include <random>

#include "heis.hpp"
#include "quadint.hpp"

namespace testutil {

using heiscount::heis::HeisPt;
using heiscount::quadint::FieldSpec;
using heiscount::quadint::Int;
using heiscount::quadint::QuadInt;

inline QuadInt random_quadint(std::mt19937_64& rng, const FieldSpec& F, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return F.from_coords(d(rng), d(rng));
}

inline QuadInt random_nonzero_quadint(std::mt19937_64& rng, const FieldSpec& F,
                                      long bound) {
  for (;;) {
    QuadInt z = random_quadint(rng, F, bound);
    if (!z.is_zero()) return z;
  }
}

inline HeisPt random_heis_pt(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {{d(rng), d(rng)}, d(rng)};
}

inline heiscount::heis::HeisIntElem random_heis_elem(std::mt19937_64& rng,
                                                     const FieldSpec& F, long bound) {
  using heiscount::heis::pi_lattice;
  auto Pi = pi_lattice(F);
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    QuadInt w = F.from_coords(d(rng), d(rng));
    if (!Pi.lattice.contains(w)) continue;
    QuadInt w0 = heiscount::heis::solve_trace_w0(F, norm(w));
    // Randomize the vertical part.
    QuadInt nu = heiscount::quadint::imaginary_generator(F);
    w0 = w0 + Int(d(rng)) * nu;
    return heiscount::heis::HeisIntElem(w0, w);
  }
}

}  // namespace testutil

#endif
