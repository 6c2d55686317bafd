#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "heis.hpp"
#include "test_util.hpp"

using namespace heiscount;
using namespace heiscount::heis;
using quadint::FieldSpec;
using quadint::QuadInt;
using quadint::make_field;

namespace {
double dist(const HeisPt& p, const HeisPt& q) {
  return std::abs(p.zeta - q.zeta) + std::abs(p.u - q.u);
}
}  // namespace

TEST_CASE("group law on float points") {
  HeisPt p{{1.0, 0.0}, 0.0}, q{{0.0, 1.0}, 0.0};
  HeisPt r = mul(p, q);
  CHECK(r.zeta == std::complex<double>(1.0, 1.0));
  CHECK(r.u == doctest::Approx(-2.0));  // 2 Im(1 * conj(i)) = -2

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    HeisPt a = testutil::random_heis_pt(rng);
    HeisPt b = testutil::random_heis_pt(rng);
    HeisPt c = testutil::random_heis_pt(rng);
    CHECK(dist(mul(a, inv(a)), HeisPt{}) < 1e-12);
    CHECK(dist(mul(mul(a, b), c), mul(a, mul(b, c))) < 1e-12);
  }
}

TEST_CASE("integral points: constraint and exact group axioms") {
  FieldSpec F = make_field(-4);
  CHECK_NOTHROW(HeisIntElem(F.one(), F.from_coords(1, 1)));  // tr 2 = n 2
  CHECK_THROWS_AS(HeisIntElem(F.one(), F.zero()), Error);

  std::mt19937_64 rng(5);
  for (long D : {-3L, -4L, -8L}) {
    FieldSpec G = make_field(D);
    for (int i = 0; i < 200; ++i) {
      auto a = testutil::random_heis_elem(rng, G, 8);
      auto b = testutil::random_heis_elem(rng, G, 8);
      auto c = testutil::random_heis_elem(rng, G, 8);
      CHECK(mul(a, inv(a)) == identity_elem(G));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      // Embedding to float points is a homomorphism.
      HeisPt lhs = to_point(mul(a, b));
      HeisPt rhs = mul(to_point(a), to_point(b));
      CHECK(dist(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("Cygan distance examples") {
  HeisPt o{}, e1{{1.0, 0.0}, 0.0}, v{{0.0, 0.0}, 1.0};
  CHECK(cygan(e1, o) == doctest::Approx(1.0));
  CHECK(cygan_prime(e1, o) == doctest::Approx(std::sqrt(2.0)));
  CHECK(cygan_second(e1, o) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(cygan(v, o) == doctest::Approx(1.0));
  CHECK(cygan_prime(v, o) == doctest::Approx(1.0));
  CHECK(cygan_second(v, o) == doctest::Approx(1.0));
  HeisPt p{{0.3, -0.7}, 0.4};
  CHECK(cygan(p, p) == 0.0);
  CHECK(cygan_prime(p, p) == 0.0);
  CHECK(cygan_second(p, p) == 0.0);
}

TEST_CASE("sandwich inequality on 10^4 random pairs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    HeisPt p = testutil::random_heis_pt(rng, 3.0);
    HeisPt q = testutil::random_heis_pt(rng, 3.0);
    double d = cygan(p, q), dpp = cygan_second(p, q);
    CHECK(dpp <= d + 1e-12);
    CHECK(d / std::sqrt(2.0) <= dpp + 1e-12);
  }
}

TEST_CASE("left-invariance of the three distances") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    HeisPt g = testutil::random_heis_pt(rng, 4.0);
    HeisPt p = testutil::random_heis_pt(rng, 4.0);
    HeisPt q = testutil::random_heis_pt(rng, 4.0);
    CHECK(cygan(mul(g, p), mul(g, q)) == doctest::Approx(cygan(p, q)).epsilon(1e-9));
    CHECK(cygan_prime(mul(g, p), mul(g, q)) ==
          doctest::Approx(cygan_prime(p, q)).epsilon(1e-9));
    CHECK(cygan_second(mul(g, p), mul(g, q)) ==
          doctest::Approx(cygan_second(p, q)).epsilon(1e-9));
  }
}

TEST_CASE("triangle inequality holds for d and d' (not asserted for d'')") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    HeisPt p = testutil::random_heis_pt(rng, 3.0);
    HeisPt q = testutil::random_heis_pt(rng, 3.0);
    HeisPt r = testutil::random_heis_pt(rng, 3.0);
    CHECK(cygan(p, r) <= cygan(p, q) + cygan(q, r) + 1e-12);
    CHECK(cygan_prime(p, r) <= cygan_prime(p, q) + cygan_prime(q, r) + 1e-12);
  }
}

TEST_CASE("dilations") {
  HeisPt e1{{1.0, 0.0}, 0.0}, o{};
  CHECK(dist(dilate(e1, 1.0), e1) == 0.0);
  CHECK(cygan(dilate(e1, 2.0), o) == doctest::Approx(2.0));
  CHECK_THROWS_AS(dilate(e1, 0.0), Error);
  CHECK_THROWS_AS(dilate(e1, -1.0), Error);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    HeisPt p = testutil::random_heis_pt(rng);
    HeisPt q = testutil::random_heis_pt(rng);
    std::uniform_real_distribution<double> dl(0.1, 3.0);
    double l1 = dl(rng), l2 = dl(rng);
    CHECK(dist(dilate(dilate(p, l1), l2), dilate(p, l1 * l2)) < 1e-12);
    CHECK(cygan(dilate(p, l1), dilate(q, l1)) ==
          doctest::Approx(l1 * cygan(p, q)).epsilon(1e-9));
    CHECK(cygan_prime(dilate(p, l1), dilate(q, l1)) ==
          doctest::Approx(l1 * cygan_prime(p, q)).epsilon(1e-9));
    CHECK(cygan_second(dilate(p, l1), dilate(q, l1)) ==
          doctest::Approx(l1 * cygan_second(p, q)).epsilon(1e-9));
  }
}

TEST_CASE("shear action examples") {
  FieldSpec F = make_field(-4);
  Triple t(F.zero(), F.zero(), F.one());
  HeisIntElem g(F.one(), F.from_coords(1, 1));
  Triple s = shear(g, t);
  CHECK(s.a() == F.one());
  CHECK(s.alpha() == F.from_coords(1, 1));
  CHECK(s.c() == F.one());
  CHECK(shear(identity_elem(F), t) == t);
}

TEST_CASE("shear is a left action and preserves the ideal") {
  std::mt19937_64 rng(17);
  for (long D : {-3L, -4L, -7L}) {
    FieldSpec F = make_field(D);
    for (int i = 0; i < 300; ++i) {
      auto g = testutil::random_heis_elem(rng, F, 5);
      auto h = testutil::random_heis_elem(rng, F, 5);
      QuadInt c = testutil::random_nonzero_quadint(rng, F, 8);
      QuadInt alpha = testutil::random_quadint(rng, F, 8);
      // Build a valid triple: need tr(a conj c) = n(alpha); use the shear of
      // a base triple (x, 0, c) with tr(x conj c) = 0.
      QuadInt nu = quadint::imaginary_generator(F);
      Triple base(nu * c, F.zero(), c);
      Triple t = shear(testutil::random_heis_elem(rng, F, 5), base);
      (void)alpha;
      CHECK(shear(mul(g, h), t) == shear(g, shear(h, t)));
      CHECK(quadint::ideal_span({t.a(), t.alpha(), t.c()}) ==
            quadint::ideal_span({shear(g, t).a(), shear(g, t).alpha(), shear(g, t).c()}));
    }
  }
}

TEST_CASE("pi_lattice") {
  for (long D : {-3L, -4L, -7L, -8L, -11L}) {
    FieldSpec F = make_field(D);
    PiLattice Pi = pi_lattice(F);
    CHECK(Pi.lattice.index() == F.pi_index);
    CHECK(Pi.coset_reps.front() == F.zero());
    CHECK(static_cast<long>(Pi.coset_reps.size()) == F.pi_index);
    std::mt19937_64 rng(19);
    for (int i = 0; i < 200; ++i) {
      QuadInt w = testutil::random_quadint(rng, F, 30);
      bool in_pi = Pi.lattice.contains(w);
      bool trace_hits = (F.basis_case == quadint::BasisCase::OneMod4) ||
                        (norm(w) % 2 == 0);
      CHECK(in_pi == trace_hits);
    }
  }
}

TEST_CASE("canonical_triple: idempotent, orbit-constant") {
  std::mt19937_64 rng(23);
  for (long D : {-3L, -4L, -8L}) {
    FieldSpec F = make_field(D);
    for (int i = 0; i < 1000; ++i) {
      QuadInt c = testutil::random_nonzero_quadint(rng, F, 6);
      QuadInt nu = quadint::imaginary_generator(F);
      Triple base(nu * c, F.zero(), c);
      Triple t = shear(testutil::random_heis_elem(rng, F, 6), base);
      auto g = testutil::random_heis_elem(rng, F, 6);
      Triple ct = canonical_triple(F, t);
      CHECK(canonical_triple(F, shear(g, t)) == ct);
      CHECK(canonical_triple(F, ct) == ct);
    }
  }
}

TEST_CASE("canonical_triple: the c=1 orbit over Z[i] is (0,0,1)") {
  FieldSpec F = make_field(-4);
  PiLattice Pi = pi_lattice(F);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 500; ++i) {
    // All valid triples with c = 1 have alpha in Pi (trace is even).
    QuadInt alpha = testutil::random_quadint(rng, F, 10);
    if (!Pi.lattice.contains(alpha)) continue;
    std::uniform_int_distribution<long> d(-10, 10);
    QuadInt a = F.from_coords(norm(alpha) / 2, d(rng));
    Triple t(a, alpha, F.one());
    Triple ct = canonical_triple(F, t);
    CHECK(ct == Triple(F.zero(), F.zero(), F.one()));
  }
  CHECK_THROWS_AS(canonical_triple(F, Triple(F.zero(), F.zero(), F.zero())), Error);
}
