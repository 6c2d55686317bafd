#ifndef HEISCOUNT_PICARD_HPP
#define HEISCOUNT_PICARD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heis.hpp"

namespace heiscount::picard {

using heis::HeisIntElem;
using heis::HeisPt;
using quadint::FieldSpec;
using quadint::Int;
using quadint::QuadInt;

// 3x3 matrix over O_K, row-major.  SU_q members satisfy M^H J M = J and
// det M = 1, where J is the matrix of q = -z0 conj(z2) - z2 conj(z0) + |z1|^2.
struct SUqMat {
  std::array<QuadInt, 9> m;

  const QuadInt& at(int r, int c) const { return m[3 * r + c]; }
  QuadInt& at(int r, int c) { return m[3 * r + c]; }
  bool operator==(const SUqMat& o) const { return m == o.m; }
  std::string str() const;
};

using Column = std::array<QuadInt, 3>;

SUqMat identity_matrix(const FieldSpec& F);
SUqMat mul(const SUqMat& A, const SUqMat& B);
SUqMat conj_transpose(const SUqMat& A);
QuadInt det(const SUqMat& A);
QuadInt second_elementary_symmetric(const SUqMat& A);  // sum of principal 2x2 minors
// Inverse inside SU_q: J A^H J (no division needed).
SUqMat inverse(const SUqMat& A);
Column act(const SUqMat& A, const Column& v);

bool check_membership(const SUqMat& M);

SUqMat heis_to_matrix(const HeisIntElem& g);
// z -> (z2, -z1, z0); swaps 0 and infinity.
SUqMat sigma_involution(const FieldSpec& F);
// diag(a1, 1/(a1 a3), 1/conj(a1)) for a unit a1.
SUqMat diag_unit(const FieldSpec& F, const QuadInt& a1);
// The diagonal-unit subgroup of the stabiliser of infinity (one matrix per unit).
std::vector<SUqMat> diag_subgroup(const FieldSpec& F);

// Built-in generating set for D = -4 (Heisenberg translations, sigma, a
// diagonal unit, and inverses); other fields need user-supplied generators.
std::vector<SUqMat> default_generators(const FieldSpec& F);

// JSON (de)serialization: {"schema":"heiscount/v1","D":-4,
//   "generators":[ [[[x,y],[x,y],[x,y]], ...3 rows... ], ...]} and
//   {"matrix": ...} for a single matrix.
std::vector<SUqMat> generators_from_json(const FieldSpec& F, const std::string& text);
SUqMat matrix_from_json(const FieldSpec& F, const std::string& text);
std::string matrix_to_json(const FieldSpec& F, const SUqMat& M);

// Canonical representative of a column under the stabiliser of infinity
// (shears + diagonal units, and the projective kernel when D = -3).
// Public form: third coordinate nonzero and v primitive.
Column canonical_column(const FieldSpec& F, const Column& v);
// Internal form used by the BFS: any nonzero column, all strata.
Column canonical_column_any(const FieldSpec& F, const Column& v);

struct OrbitRecord {
  Column v;       // canonical form
  Int norm_c;     // n(third coordinate)
  int depth = 0;  // first-seen BFS depth
};

struct OrbitSet {
  std::vector<OrbitRecord> records;  // canonical vectors with n(z2) <= bound
  bool saturated = false;  // last 3 executed levels added nothing under bound
  bool complete = true;    // no memory/size guard tripped
  int levels_run = 0;
  std::vector<long> new_under_bound_per_level;  // index 0 = depth 0
};

enum class BfsMode {
  // Expand canonical representatives; besides plain generator hops, add the
  // exhaustive bounded sigma-neighbor edges canon(sigma u v) over all
  // Heisenberg twists u keeping the new third coordinate under the cap
  // (requires sigma and the Heisenberg generators in the span of gens).
  Reduced,
  // Expand raw generator words (exponential; for shallow-depth oracles).
  ExactWords,
};

struct BfsOptions {
  BfsMode mode = BfsMode::Reduced;
  // Exploration is pruned at explore_factor * norm_bound on n(z2); counts
  // under norm_bound stay saturation-guarded.
  double explore_factor = 4.0;
  std::size_t max_nodes = 4000000;
  bool sigma_neighbor_edges = true;
};

OrbitSet orbit_bfs(const FieldSpec& F, const Column& seed,
                   const std::vector<SUqMat>& gens, int max_depth,
                   const Int& norm_bound, const BfsOptions& opts = {});

enum class IsomClass { Loxodromic, Other };

struct Classification {
  IsomClass cls = IsomClass::Other;
  std::complex<double> lambda;  // eigenvalue of modulus > 1 when loxodromic
  std::array<std::complex<double>, 3> eigenvalues;
};

Classification classify(const SUqMat& M);
double translation_length(const SUqMat& M);
bool is_K_irreducible(const SUqMat& M);

struct BoundaryPt {
  bool at_infinity = false;
  HeisPt p;
};

std::pair<BoundaryPt, BoundaryPt> fixed_boundary_points(const SUqMat& M);

// Projective action on the boundary (float); infinity when the last
// coordinate vanishes.
BoundaryPt boundary_action(const SUqMat& M, const HeisPt& p);

// Deterministic search for a loxodromic, K-irreducible word in the
// generators; breadth-first over products of length <= max_len.
std::optional<SUqMat> find_loxodromic_word(const FieldSpec& F,
                                           const std::vector<SUqMat>& gens,
                                           int max_len);

}  // namespace heiscount::picard

#endif
