#include "picard.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "errors.hpp"

namespace heiscount::picard {

using quadint::conj;
using quadint::ideal_span;
using quadint::is_coprime_triple;
using quadint::norm;
using quadint::reduce_mod_sublattice;
using quadint::scale_lattice;
using quadint::trace;
using quadint::ZLattice2;

std::string SUqMat::str() const {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    os << (r == 0 ? "[" : " ");
    for (int c = 0; c < 3; ++c) os << at(r, c).str() << (c < 2 ? " " : "");
    os << (r == 2 ? "]" : ";");
  }
  return os.str();
}

SUqMat identity_matrix(const FieldSpec& F) {
  SUqMat I{{F.one(), F.zero(), F.zero(), F.zero(), F.one(), F.zero(), F.zero(),
            F.zero(), F.one()}};
  return I;
}

SUqMat mul(const SUqMat& A, const SUqMat& B) {
  SUqMat C{{}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      C.at(r, c) = A.at(r, 0) * B.at(0, c) + A.at(r, 1) * B.at(1, c) +
                   A.at(r, 2) * B.at(2, c);
  return C;
}

SUqMat conj_transpose(const SUqMat& A) {
  SUqMat C{{}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) C.at(r, c) = conj(A.at(c, r));
  return C;
}

QuadInt det(const SUqMat& A) {
  return A.at(0, 0) * (A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1)) -
         A.at(0, 1) * (A.at(1, 0) * A.at(2, 2) - A.at(1, 2) * A.at(2, 0)) +
         A.at(0, 2) * (A.at(1, 0) * A.at(2, 1) - A.at(1, 1) * A.at(2, 0));
}

QuadInt second_elementary_symmetric(const SUqMat& A) {
  QuadInt m01 = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
  QuadInt m02 = A.at(0, 0) * A.at(2, 2) - A.at(0, 2) * A.at(2, 0);
  QuadInt m12 = A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1);
  return m01 + m02 + m12;
}

namespace {

// J has -1 at (0,2) and (2,0), +1 at (1,1).
SUqMat form_matrix(long disc) {
  QuadInt z(disc, 0, 0), one(disc, 1, 0), mone(disc, -1, 0);
  return SUqMat{{z, z, mone, z, one, z, mone, z, z}};
}

}  // namespace

SUqMat inverse(const SUqMat& A) {
  long disc = A.at(0, 0).disc();
  SUqMat J = form_matrix(disc);
  return mul(mul(J, conj_transpose(A)), J);
}

Column act(const SUqMat& A, const Column& v) {
  Column out{};
  for (int r = 0; r < 3; ++r)
    out[r] = A.at(r, 0) * v[0] + A.at(r, 1) * v[1] + A.at(r, 2) * v[2];
  return out;
}

bool check_membership(const SUqMat& M) {
  long disc = M.at(0, 0).disc();
  SUqMat J = form_matrix(disc);
  if (!(mul(mul(conj_transpose(M), J), M) == J)) return false;
  return det(M) == QuadInt(disc, 1, 0);
}

SUqMat heis_to_matrix(const HeisIntElem& g) {
  long disc = g.w().disc();
  QuadInt z(disc, 0, 0), one(disc, 1, 0);
  return SUqMat{{one, conj(g.w()), g.w0(), z, one, g.w(), z, z, one}};
}

SUqMat sigma_involution(const FieldSpec& F) {
  QuadInt z = F.zero(), one = F.one();
  return SUqMat{{z, z, one, z, -one, z, one, z, z}};
}

SUqMat diag_unit(const FieldSpec& F, const QuadInt& a1) {
  require(norm(a1) == 1, ErrorCode::InvalidInput,
          "diag_unit needs a unit, got " + a1.str());
  QuadInt a3 = a1;                  // 1/conj(a1) for a unit
  QuadInt a2 = conj(a1) * conj(a1); // 1/(a1 a3)
  QuadInt z = F.zero();
  return SUqMat{{a1, z, z, z, a2, z, z, z, a3}};
}

std::vector<SUqMat> diag_subgroup(const FieldSpec& F) {
  std::vector<SUqMat> out;
  for (const auto& u : F.units) out.push_back(diag_unit(F, u));
  return out;
}

std::vector<SUqMat> default_generators(const FieldSpec& F) {
  require(F.disc == -4, ErrorCode::Unsupported,
          "built-in generators exist only for D = -4; supply a generator file");
  std::vector<SUqMat> gens;
  auto add = [&](const SUqMat& M) {
    SUqMat Mi = inverse(M);
    if (std::find(gens.begin(), gens.end(), M) == gens.end()) gens.push_back(M);
    if (std::find(gens.begin(), gens.end(), Mi) == gens.end()) gens.push_back(Mi);
  };
  QuadInt i = F.omega();
  add(heis_to_matrix(HeisIntElem(F.one(), F.from_coords(1, 1))));
  add(heis_to_matrix(HeisIntElem(F.one(), F.from_coords(1, -1))));
  add(heis_to_matrix(HeisIntElem(i, F.zero())));
  add(sigma_involution(F));
  add(diag_unit(F, i));
  for (const auto& g : gens)
    require(check_membership(g), ErrorCode::Internal, "generator failed membership");
  return gens;
}

namespace {

QuadInt json_entry(const FieldSpec& F, const nlohmann::json& e) {
  require(e.is_array() && e.size() == 2, ErrorCode::InvalidInput,
          "matrix entry must be [x, y]");
  return F.from_coords(Int(e[0].get<long long>()), Int(e[1].get<long long>()));
}

SUqMat json_matrix(const FieldSpec& F, const nlohmann::json& rows) {
  require(rows.is_array() && rows.size() == 3, ErrorCode::InvalidInput,
          "matrix must have 3 rows");
  SUqMat M{{}};
  for (int r = 0; r < 3; ++r) {
    require(rows[r].is_array() && rows[r].size() == 3, ErrorCode::InvalidInput,
            "matrix row must have 3 entries");
    for (int c = 0; c < 3; ++c) M.at(r, c) = json_entry(F, rows[r][c]);
  }
  require(check_membership(M), ErrorCode::InvalidInput,
          "matrix is not in SU_q(O_K): " + M.str());
  return M;
}

nlohmann::json matrix_json(const SUqMat& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 3; ++c)
      row.push_back({M.at(r, c).x().convert_to<long long>(),
                     M.at(r, c).y().convert_to<long long>()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<SUqMat> generators_from_json(const FieldSpec& F, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::InvalidInput, "generator file: invalid JSON");
  require(j.contains("D") && j["D"].get<long>() == F.disc, ErrorCode::InvalidInput,
          "generator file discriminant does not match the requested field");
  require(j.contains("generators") && j["generators"].is_array(),
          ErrorCode::InvalidInput, "generator file needs a \"generators\" array");
  std::vector<SUqMat> gens;
  for (const auto& rows : j["generators"]) {
    SUqMat M = json_matrix(F, rows);
    SUqMat Mi = inverse(M);
    if (std::find(gens.begin(), gens.end(), M) == gens.end()) gens.push_back(M);
    if (std::find(gens.begin(), gens.end(), Mi) == gens.end()) gens.push_back(Mi);
  }
  require(!gens.empty(), ErrorCode::InvalidInput, "generator file lists no generators");
  return gens;
}

SUqMat matrix_from_json(const FieldSpec& F, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::InvalidInput, "matrix file: invalid JSON");
  require(j.contains("D") && j["D"].get<long>() == F.disc, ErrorCode::InvalidInput,
          "matrix file discriminant does not match the requested field");
  require(j.contains("matrix"), ErrorCode::InvalidInput,
          "matrix file needs a \"matrix\" entry");
  return json_matrix(F, j["matrix"]);
}

std::string matrix_to_json(const FieldSpec& F, const SUqMat& M) {
  nlohmann::json j;
  j["schema"] = "heiscount/v1";
  j["D"] = F.disc;
  j["matrix"] = matrix_json(M);
  return j.dump(2);
}

namespace {

using KeyInts = std::array<Int, 6>;

KeyInts column_key(const Column& v) {
  return {v[0].x(), v[0].y(), v[1].x(), v[1].y(), v[2].x(), v[2].y()};
}

bool key_less(const KeyInts& a, const KeyInts& b) {
  for (int i = 0; i < 6; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Column canonicalizer with per-multiplier lattice caching (the BFS
// canonicalizes millions of columns whose third coordinates repeat).
class Canonicalizer {
 public:
  explicit Canonicalizer(const FieldSpec& F)
      : F_(F), Pi_(heis::pi_lattice(F)), nu_(quadint::imaginary_generator(F)) {
    for (const auto& u : F.units) {
      QuadInt a1 = u, a2 = conj(u) * conj(u), a3 = u;
      diag_.push_back({a1, a2, a3});
    }
  }

  Column reduce_any(const Column& v) {
    require(!(v[0].is_zero() && v[1].is_zero() && v[2].is_zero()),
            ErrorCode::InvalidInput, "cannot canonicalize the zero column");
    bool have = false;
    Column best{};
    KeyInts best_key{};
    for (const auto& d : diag_) {
      Column u = {d[0] * v[0], d[1] * v[1], d[2] * v[2]};
      Column r = unipotent_reduce(u);
      KeyInts k = column_key(r);
      if (!have || key_less(k, best_key)) {
        have = true;
        best = r;
        best_key = k;
      }
    }
    return best;
  }

 private:
  struct LatData {
    ZLattice2 lat;   // c*Pi (or alpha*Pi in the c = 0 stratum)
    QuadInt nuc;     // nu * c
    Int gg;          // |nuc|^2 in coordinates
  };

  const LatData& lattice_for(const QuadInt& c) {
    auto key = c.str();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    LatData d;
    d.lat = scale_lattice(c, Pi_.lattice);
    d.nuc = nu_ * c;
    d.gg = d.nuc.x() * d.nuc.x() + d.nuc.y() * d.nuc.y();
    return cache_.emplace(std::move(key), std::move(d)).first->second;
  }

  Column unipotent_reduce(const Column& v) {
    const QuadInt &a = v[0], &alpha = v[1], &c = v[2];
    if (!c.is_zero()) {
      const LatData& L = lattice_for(c);
      QuadInt alpha0 = reduce_mod_sublattice(alpha, L.lat);
      QuadInt w = quadint::exact_div(alpha0 - alpha, c);
      QuadInt w0 = heis::solve_trace_w0(F_, norm(w));
      QuadInt a1 = a + conj(w) * alpha + w0 * c;
      Int dot = a1.x() * L.nuc.x() + a1.y() * L.nuc.y();
      Int k = ringkernel::floordiv(dot, L.gg);
      return {a1 - k * L.nuc, alpha0, c};
    }
    if (!alpha.is_zero()) {
      // Shears move a by conj(w) alpha, w in Pi; Pi is conjugation-stable.
      const LatData& L = lattice_for(alpha);
      return {reduce_mod_sublattice(a, L.lat), alpha, c};
    }
    return v;
  }

  FieldSpec F_;
  heis::PiLattice Pi_;
  QuadInt nu_;
  std::vector<std::array<QuadInt, 3>> diag_;
  std::unordered_map<std::string, LatData> cache_;
};

// Packed key for the BFS visited set; canonical coordinates stay far below
// the int64 range for any bound the guards admit.
struct PackedKey {
  std::array<long long, 6> k;
  bool operator==(const PackedKey&) const = default;
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& p) const {
    std::size_t h = 1469598103934665603ull;
    for (long long v : p.k) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool try_pack_column(const Column& v, PackedKey& p) {
  static const Int lim = Int(1) << 62;
  int i = 0;
  for (const auto& q : v) {
    for (const Int* x : {&q.x(), &q.y()}) {
      if (!(*x < lim && *x > -lim)) return false;
      p.k[i++] = x->convert_to<long long>();
    }
  }
  return true;
}

}  // namespace

Column canonical_column_any(const FieldSpec& F, const Column& v) {
  Canonicalizer C(F);
  return C.reduce_any(v);
}

Column canonical_column(const FieldSpec& F, const Column& v) {
  require(!v[2].is_zero(), ErrorCode::InfiniteChain,
          "canonical_column: third coordinate is zero (infinity direction)");
  require(is_coprime_triple(v[0], v[1], v[2]), ErrorCode::InvalidInput,
          "canonical_column needs a primitive column");
  return canonical_column_any(F, v);
}

namespace {

// All points z in the coset center + L with n(z) <= B, for a full-rank
// sublattice L; used by the sigma-neighbor edge enumeration.
std::vector<QuadInt> coset_points_in_ball(const FieldSpec& F, const QuadInt& center,
                                          const ZLattice2& L, const Int& B) {
  std::vector<QuadInt> out;
  if (B < 0) return out;
  double Bd = B.convert_to<double>();
  double aD = static_cast<double>(-F.disc);
  bool one4 = F.basis_case == quadint::BasisCase::OneMod4;
  long long d1 = L.d1().convert_to<long long>();
  long long d0 = L.d0().convert_to<long long>();
  Int bb = L.b();
  // y = center.y mod d1, |y| <= 2 sqrt(B/|D|).
  long long ymax = static_cast<long long>(std::floor(2.0 * std::sqrt(Bd / aD))) + 1;
  long long cy = center.y().convert_to<long long>();
  long long ystart = cy - ((cy - (-ymax)) / d1) * d1;
  while (ystart > -ymax - d1) ystart -= d1;
  while (ystart < -ymax) ystart += d1;
  for (long long y = ystart; y <= ymax; y += d1) {
    double yd = static_cast<double>(y);
    double disc_x = one4 ? Bd - aD * yd * yd / 4.0 : Bd - (aD / 4.0) * yd * yd;
    if (disc_x < 0) continue;
    double halfw = std::sqrt(disc_x);
    double xc = one4 ? -yd / 2.0 : 0.0;
    long long xlo = static_cast<long long>(std::floor(xc - halfw)) - 1;
    long long xhi = static_cast<long long>(std::ceil(xc + halfw)) + 1;
    // x congruence: x = center.x + ((y - center.y)/d1) * b (mod d0).
    Int t1 = (Int(y) - center.y()) / d1;
    long long xres = ((center.x() + t1 * bb) % d0).convert_to<long long>();
    if (xres < 0) xres += d0;
    long long x0 = xlo + ((xres - xlo) % d0 + d0) % d0;
    for (long long x = x0; x <= xhi; x += d0) {
      QuadInt z = F.from_coords(x, y);
      if (norm(z) <= B) out.push_back(z);
    }
  }
  return out;
}

// Integer window [klo, khi] with a k^2 + b k + c <= B (a > 0); exact check
// is left to the caller.
bool quadratic_window(const Int& a, const Int& b, const Int& c, const Int& B,
                      long long& klo, long long& khi) {
  double ad = a.convert_to<double>(), bd = b.convert_to<double>(),
         cd = (c - B).convert_to<double>();
  double disc = bd * bd - 4.0 * ad * cd;
  if (disc < 0) return false;
  double sq = std::sqrt(disc);
  klo = static_cast<long long>(std::floor((-bd - sq) / (2.0 * ad))) - 1;
  khi = static_cast<long long>(std::ceil((-bd + sq) / (2.0 * ad))) + 1;
  return true;
}

// Children of a canonical node across all sigma-twisted unipotent moves
// keeping n(new third coordinate) <= cap: sigma (w0,w) v for (w0,w) in
// Heis_3(O_K).  The new third coordinate is a' = a + conj(w) alpha + w0 c.
class SigmaNeighbors {
 public:
  SigmaNeighbors(const FieldSpec& F) : F_(F), Pi_(heis::pi_lattice(F)) {
    nu_ = quadint::imaginary_generator(F);
  }

  void expand(const Column& v, const Int& cap, std::vector<Column>& out) {
    const QuadInt &a = v[0], &alpha = v[1], &c = v[2];
    out.clear();
    if (c.is_zero()) {
      if (alpha.is_zero()) {
        if (norm(a) <= cap) out.push_back({c, -alpha, a});
        return;
      }
      // a' ranges over a + alpha*conj(Pi) = a + alpha*Pi.
      ZLattice2 L = scale_lattice(alpha, Pi_.lattice);
      for (const auto& ap : coset_points_in_ball(F_, a, L, cap))
        out.push_back({c, -alpha, ap});
      return;
    }
    // w-range from n(c) n(w) <= tr(a' conj c) bound (k-independent):
    //   n(c) n(w) - 2 sqrt(n(w)) |alpha||c| - (2 sqrt(B n(c)) + |tr(a conj c)|) <= 0.
    double nc = norm(c).convert_to<double>();
    double na = norm(alpha).convert_to<double>();
    double Bd = cap.convert_to<double>();
    double tr_ac = quadint::trace(a * conj(c)).convert_to<double>();
    double rhs = 2.0 * std::sqrt(Bd * nc) + std::abs(tr_ac);
    double root = (std::sqrt(na * nc) + std::sqrt(na * nc + nc * rhs)) / nc;
    Int W(static_cast<long long>(std::ceil(root * root)) + 2);
    QuadInt nuc = nu_ * c;
    Int a_q = norm(nuc);
    for (const auto& w : coset_points_in_ball(F_, F_.zero(), Pi_.lattice, W)) {
      QuadInt w0 = heis::solve_trace_w0(F_, norm(w));
      QuadInt base = a + conj(w) * alpha + w0 * c;
      QuadInt alpha2 = alpha + w * c;
      Int b_q = quadint::trace(base * conj(nuc));
      long long klo, khi;
      if (!quadratic_window(a_q, b_q, norm(base), cap, klo, khi)) continue;
      for (long long k = klo; k <= khi; ++k) {
        QuadInt ap = base + Int(k) * nuc;
        if (norm(ap) > cap) continue;
        out.push_back({c, -alpha2, ap});
      }
    }
  }

 private:
  FieldSpec F_;
  heis::PiLattice Pi_;
  QuadInt nu_;
};

}  // namespace

OrbitSet orbit_bfs(const FieldSpec& F, const Column& seed,
                   const std::vector<SUqMat>& gens, int max_depth,
                   const Int& norm_bound, const BfsOptions& opts) {
  require(max_depth >= 0, ErrorCode::InvalidInput, "orbit_bfs: negative depth");
  require(!gens.empty(), ErrorCode::InvalidInput, "orbit_bfs: no generators");
  for (const auto& g : gens)
    require(check_membership(g), ErrorCode::InvalidInput,
            "orbit_bfs: generator fails the SU_q membership check");
  require(is_coprime_triple(seed[0], seed[1], seed[2]), ErrorCode::InvalidInput,
          "orbit_bfs: seed must be primitive");

  Canonicalizer canon(F);
  OrbitSet out;

  Int cap = norm_bound;
  if (opts.explore_factor > 1.0) {
    double nb = norm_bound.convert_to<double>();
    double capd = std::ceil(opts.explore_factor * nb);
    if (capd < 9e18) {
      cap = Int(static_cast<long long>(capd));
    } else {
      cap = norm_bound * 8;
    }
  }
  if (cap < norm_bound) cap = norm_bound;

  // Sigma-neighbor edges are genuine group moves only when sigma itself is
  // among the generators (the Heisenberg part is a lattice move by design).
  bool use_sigma = false;
  if (opts.mode == BfsMode::Reduced && opts.sigma_neighbor_edges) {
    SUqMat sig = sigma_involution(F);
    for (const auto& g : gens)
      if (g == sig) use_sigma = true;
  }
  SigmaNeighbors sigma_edges(F);

  std::unordered_set<PackedKey, PackedKeyHash> visited;        // canonical keys
  std::unordered_set<PackedKey, PackedKeyHash> visited_words;  // ExactWords mode
  std::vector<Column> frontier;

  auto record_if_new = [&](const Column& cu, const Int& nc, int depth,
                           long& added) -> bool {
    PackedKey key{};
    if (!try_pack_column(cu, key)) {
      out.complete = false;
      return false;
    }
    if (!visited.insert(key).second) return false;
    if (nc <= norm_bound) {
      out.records.push_back({cu, nc, depth});
      ++added;
    }
    return true;
  };

  Column cs = canon.reduce_any(seed);
  {
    long level0 = 0;
    record_if_new(cs, norm(cs[2]), 0, level0);
    out.new_under_bound_per_level.push_back(level0);
  }
  if (opts.mode == BfsMode::ExactWords) {
    PackedKey k{};
    require(try_pack_column(seed, k), ErrorCode::LimitExceeded,
            "orbit_bfs: seed exceeds the packed-key range");
    visited_words.insert(k);
    frontier.push_back(seed);
  } else {
    frontier.push_back(cs);
  }

  std::vector<Column> scratch;
  bool closed = false;
  for (int depth = 1; depth <= max_depth && out.complete; ++depth) {
    std::vector<Column> next;
    long added = 0;
    for (const auto& v : frontier) {
      if (opts.mode == BfsMode::ExactWords) {
        for (const auto& g : gens) {
          Column u = act(g, v);
          PackedKey wkey{};
          if (!try_pack_column(u, wkey)) {
            out.complete = false;
            continue;
          }
          if (!visited_words.insert(wkey).second) continue;
          next.push_back(u);
          Column cu = canon.reduce_any(u);
          record_if_new(cu, norm(cu[2]), depth, added);
        }
        if (visited_words.size() > opts.max_nodes) out.complete = false;
      } else {
        for (const auto& g : gens) {
          Column u = act(g, v);
          Column cu = canon.reduce_any(u);
          Int nc = norm(cu[2]);
          if (nc > cap) continue;
          if (record_if_new(cu, nc, depth, added)) next.push_back(cu);
        }
        if (use_sigma) {
          sigma_edges.expand(v, cap, scratch);
          for (const auto& u : scratch) {
            Column cu = canon.reduce_any(u);
            Int nc = norm(cu[2]);
            if (nc > cap) continue;
            if (record_if_new(cu, nc, depth, added)) next.push_back(cu);
          }
        }
        if (visited.size() > opts.max_nodes) out.complete = false;
      }
      if (!out.complete) break;
    }
    out.new_under_bound_per_level.push_back(added);
    out.levels_run = depth;
    if (!out.complete) break;
    if (next.empty()) {
      closed = true;
      break;
    }
    frontier = std::move(next);
  }

  if (!out.complete) {
    out.saturated = false;
  } else if (closed) {
    out.saturated = true;
  } else {
    const auto& pl = out.new_under_bound_per_level;
    out.saturated = out.levels_run >= 3;
    for (std::size_t i = pl.size() >= 3 ? pl.size() - 3 : 0; i < pl.size(); ++i)
      if (pl[i] != 0) out.saturated = false;
  }
  return out;
}

namespace {

std::array<std::complex<double>, 3> cubic_roots(std::complex<double> t,
                                                std::complex<double> s) {
  // lambda^3 - t lambda^2 + s lambda - 1 = 0.
  const std::complex<double> b = -t, c = s, d = -1.0;
  std::complex<double> d0 = b * b - 3.0 * c;
  std::complex<double> d1 = 2.0 * b * b * b - 9.0 * b * c + 27.0 * d;
  std::complex<double> inner = std::sqrt(d1 * d1 - 4.0 * d0 * d0 * d0);
  std::complex<double> Cc = std::pow((d1 + inner) / 2.0, 1.0 / 3.0);
  if (std::abs(Cc) < 1e-12) Cc = std::pow((d1 - inner) / 2.0, 1.0 / 3.0);
  std::array<std::complex<double>, 3> roots;
  if (std::abs(Cc) < 1e-12) {
    roots.fill(-b / 3.0);
  } else {
    const std::complex<double> xi(-0.5, std::sqrt(3.0) / 2.0);
    std::complex<double> w = Cc;
    for (int k = 0; k < 3; ++k) {
      roots[k] = -(b + w + d0 / w) / 3.0;
      w *= xi;
    }
  }
  // One Newton polish per root.
  for (auto& L : roots) {
    for (int it = 0; it < 2; ++it) {
      std::complex<double> f = ((L + b) * L + c) * L + d;
      std::complex<double> fp = (3.0 * L + 2.0 * b) * L + c;
      if (std::abs(fp) < 1e-14) break;
      L -= f / fp;
    }
  }
  return roots;
}

}  // namespace

Classification classify(const SUqMat& M) {
  QuadInt t = M.at(0, 0) + M.at(1, 1) + M.at(2, 2);
  QuadInt s = second_elementary_symmetric(M);
  Classification out;
  out.eigenvalues = cubic_roots(quadint::embed(t), quadint::embed(s));
  double rad = 0.0;
  for (const auto& L : out.eigenvalues) {
    if (std::abs(L) > rad) {
      rad = std::abs(L);
      out.lambda = L;
    }
  }
  out.cls = rad > 1.0 + 1e-9 ? IsomClass::Loxodromic : IsomClass::Other;
  return out;
}

double translation_length(const SUqMat& M) {
  Classification c = classify(M);
  require(c.cls == IsomClass::Loxodromic, ErrorCode::InvalidInput,
          "translation_length needs a loxodromic element (spectral radius " +
              std::to_string(std::abs(c.lambda)) + ")");
  return std::log(std::abs(c.lambda));
}

bool is_K_irreducible(const SUqMat& M) {
  // The characteristic cubic is monic with constant term -1, so a root in K
  // is an integral divisor of 1: a unit.
  long disc = M.at(0, 0).disc();
  FieldSpec F = quadint::make_field(disc);
  QuadInt t = M.at(0, 0) + M.at(1, 1) + M.at(2, 2);
  QuadInt s = second_elementary_symmetric(M);
  QuadInt one = F.one();
  for (const auto& u : F.units) {
    QuadInt chi = u * u * u - t * u * u + s * u - one;
    if (chi.is_zero()) return false;
  }
  return true;
}

std::pair<BoundaryPt, BoundaryPt> fixed_boundary_points(const SUqMat& M) {
  Classification c = classify(M);
  require(c.cls == IsomClass::Loxodromic, ErrorCode::InvalidInput,
          "fixed boundary points computed for loxodromic elements only "
          "(spectral radius " +
              std::to_string(std::abs(c.lambda)) + ")");
  std::array<std::array<std::complex<double>, 3>, 3> A;
  for (int r = 0; r < 3; ++r)
    for (int cc = 0; cc < 3; ++cc) A[r][cc] = quadint::embed(M.at(r, cc));

  auto eigvec = [&](std::complex<double> lam) {
    std::array<std::array<std::complex<double>, 3>, 3> B = A;
    for (int i = 0; i < 3; ++i) B[i][i] -= lam;
    auto cross = [](const std::array<std::complex<double>, 3>& u,
                    const std::array<std::complex<double>, 3>& v) {
      // Kernel vector of the two rows: conjugate-free cross product works
      // because the rows annihilate the kernel linearly.
      return std::array<std::complex<double>, 3>{
          u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
    };
    std::array<std::complex<double>, 3> best{};
    double best_n = -1.0;
    int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto& pr : pairs) {
      auto v = cross(B[pr[0]], B[pr[1]]);
      double n = std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
      if (n > best_n) {
        best_n = n;
        best = v;
      }
    }
    return best;
  };

  // Attracting fixed point for lambda, repelling for 1/conj(lambda).
  std::complex<double> lam_att = c.lambda;
  std::complex<double> lam_rep = 1.0 / std::conj(c.lambda);

  auto to_boundary = [](const std::array<std::complex<double>, 3>& v) {
    BoundaryPt b;
    double scale = std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
    if (std::abs(v[2]) < 1e-12 * scale) {
      b.at_infinity = true;
      return b;
    }
    std::complex<double> w0 = v[0] / v[2];
    std::complex<double> w = v[1] / v[2];
    b.p = heis::from_w(w0, w);
    return b;
  };

  return {to_boundary(eigvec(lam_att)), to_boundary(eigvec(lam_rep))};
}

BoundaryPt boundary_action(const SUqMat& M, const HeisPt& p) {
  std::complex<double> w0 = heis::w0_of(p);
  std::array<std::complex<double>, 3> v{w0, p.zeta, {1.0, 0.0}};
  std::array<std::complex<double>, 3> out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += quadint::embed(M.at(r, c)) * v[c];
  BoundaryPt b;
  double scale = std::abs(out[0]) + std::abs(out[1]) + std::abs(out[2]);
  if (std::abs(out[2]) < 1e-12 * scale) {
    b.at_infinity = true;
    return b;
  }
  b.p = heis::from_w(out[0] / out[2], out[1] / out[2]);
  return b;
}

std::optional<SUqMat> find_loxodromic_word(const FieldSpec& F,
                                           const std::vector<SUqMat>& gens,
                                           int max_len) {
  std::unordered_set<std::string> seen;
  std::deque<SUqMat> frontier;
  SUqMat id = identity_matrix(F);
  seen.insert(id.str());
  frontier.push_back(id);
  for (int len = 1; len <= max_len; ++len) {
    std::deque<SUqMat> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        SUqMat p = mul(w, g);
        if (!seen.insert(p.str()).second) continue;
        Classification c = classify(p);
        if (c.cls == IsomClass::Loxodromic && is_K_irreducible(p)) return p;
        next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace heiscount::picard
