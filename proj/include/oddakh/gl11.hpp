#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddakh/algebra.hpp"
#include "oddakh/homology.hpp"
#include "oddakh/report.hpp"
#include "oddakh/sparse_matrix.hpp"

namespace oddakh {

/// Homogeneous linear map between superspaces. `degree` is its parity.
struct SuperMap {
  Matrix matrix;
  int degree = 0;
};

/// A gl(1|1) representation given by the matrices of e, f, h+, h-.
struct SuperRep {
  std::vector<int> parity;  // superdegree of each basis vector
  Matrix e, f, hplus, hminus;

  std::size_t dim() const { return parity.size(); }
  Matrix h1() const;  // (h+ + h-)/2
  Matrix h2() const;  // (h+ - h-)/2
};

enum class Gl11 { e, f, h1, h2 };
inline constexpr std::array<Gl11, 4> kGl11Basis{Gl11::e, Gl11::f, Gl11::h1, Gl11::h2};
const char* name(Gl11 x);
Matrix action(const SuperRep& rep, Gl11 x);
inline int parity_of(Gl11 x) { return (x == Gl11::e || x == Gl11::f) ? 1 : 0; }

/// [a, b]_s = ab - (-1)^(|a||b|) ba.
Matrix supercommutator(const Matrix& a, int pa, const Matrix& b, int pb);
/// True if every nonzero entry of `m` maps a basis vector of parity p to one of parity p + degree.
bool is_homogeneous(const Matrix& m, std::span<const int> domain, std::span<const int> codomain, int degree);
std::vector<int> popcount_parities(std::size_t factors);

/// L(m,n): basis (v+, v-) when m + n != 0, a single vector otherwise.
SuperRep irreducible(int m, int n);
inline SuperRep fundamental() { return irreducible(1, 0); }
SuperRep trivial_rep(std::vector<int> parity);

/// Full bracket table, parities of e, f, h1, h2, and centrality of h+.
CheckReport verify_superalgebra(const SuperRep& rep);

// Tensor products index v_a (x) w_b as a + dim(V) * b, so the first factor is the
// least significant digit.

/// (f (x) g)(v (x) w) = (-1)^(|g||v|) f(v) (x) g(w). `f_domain` holds the parities of
/// the domain of f.
SuperMap tensor_maps(const SuperMap& f, std::span<const int> f_domain, const SuperMap& g);
/// tau(v (x) w) = (-1)^(|v||w|) w (x) v, from V (x) W to W (x) V.
Matrix twist(std::span<const int> v, std::span<const int> w);
/// x(v (x) w) = (-1)^(|w||x|) x(v) (x) w + v (x) x(w).
SuperRep tensor(const SuperRep& v, const SuperRep& w);
SuperRep dual(const SuperRep& v);
SuperRep shift(const SuperRep& v, int n = 1);
/// Rewrites the action in a new basis whose vectors are the columns of the signed
/// permutation matrix `p` (in old coordinates).
SuperRep change_basis(const SuperRep& v, const Matrix& p);
/// V*<1> presented in the basis v+ = v-^*, v- = -v+^*.
SuperRep shifted_dual_fundamental();

/// Generic exterior-algebra action on Lambda^*(Q^n) with the orthonormal form:
/// left-handed e(v) = a -| v, f(v) = b ^ v; right-handed e(v) = v |-' a, f(v) = v ^ b;
/// h+ = <a,b>, h- = N - 2 deg.
enum class Handedness { left, right };
SuperRep exterior_rep(const std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& n,
                      Handedness hand);

/// gl(1|1) action on F(I) in the wedge basis: identity on the trivial factor
/// (ungraded tensor) and the right-handed action with a_I, b_I on the essential one.
/// Parities are l + shift (quantum) or l_e + shift (kshift).
SuperRep exterior_action(const Resolution& res, int shift = 0, Supergrading mode = Supergrading::quantum);
/// Tensor description on V^(x)n: trivial factors trivial, essential factors alternating
/// L(1,0) and V*<1>, combined by the tensor rule. Parities as for exterior_action.
SuperRep tensor_action(const Resolution& res, int shift = 0, Supergrading mode = Supergrading::quantum);

/// alpha: F(I) -> V^(x)n with tensor position p holding circle order[p]; the rows are
/// indexed like tensor(), bit p for position p. The identity for the canonical order.
Matrix alpha_iso(std::size_t circles, std::span<const std::size_t> order);
Matrix alpha_iso(std::size_t circles);

CheckReport check_alpha_intertwines(const Resolution& res);

/// Khovanov's m: V (x) V -> V and Delta: V -> V (x) V.
SuperMap khovanov_m();
SuperMap khovanov_delta();
/// Conjugates the edge map into tensor coordinates with the two circles involved
/// adjacent and compares it with id (x) m (x) id or id (x) Delta (x) id.
CheckReport check_edge_conjugation(const Cube& cube, const CubeEdge& edge);

struct KParts {
  Matrix zero;   // k-degree 0
  Matrix minus;  // k-degree -2
};
KParts k_parts(const Cube& cube, const CubeEdge& edge, const Matrix& map);
/// Compares the k-degree 0 part of the edge map, in adjacent tensor coordinates,
/// against the local table of m0 / Delta0 for the classes of the circles involved.
CheckReport check_k_parts(const Cube& cube, const CubeEdge& edge);

/// Chain-level action on the whole complex, block diagonal over vertices.
SuperRep complex_action(const ChainComplex& c);
/// d0 commutes with e, f, h1, h2.
CheckReport check_d0_intertwines(const ChainComplex& c, const SuperRep& rho);
/// h- = k, h+ = m, e/f shift (j, k) by +-2 and fix i; parities flip for e, f only.
CheckReport check_gradings(const ChainComplex& c, const SuperRep& rho);

struct HomologyRep {
  SuperRep rep;
  std::vector<TriDegree> degree;  // per basis vector
  std::vector<std::size_t> block; // index into Homology::blocks per basis vector
};
/// Induced action on d0-homology. Throws InvariantError if the action of some x moves
/// a boundary out of the image or a cycle out of the cycles.
HomologyRep action_on_homology(const ChainComplex& c, const SuperRep& rho, const Homology& h);

struct WeightData {
  std::size_t dim = 0;
  std::size_t rank_e = 0;   // W_k -> W_{k+2}
  std::size_t rank_f = 0;   // W_k -> W_{k-2}
  std::size_t rank_ef = 0;  // on W_k
  std::size_t rank_fe = 0;
  friend bool operator==(const WeightData&, const WeightData&) = default;
};
/// Keyed by (i, j - k), then by the weight k.
using RepFingerprint = std::map<std::pair<int, int>, std::map<int, WeightData>>;

RepFingerprint rep_fingerprint(const HomologyRep& rep);
/// For a bare representation with diagonal h-: a single sector (0, 0).
RepFingerprint rep_fingerprint(const SuperRep& rep);

std::string to_string(const RepFingerprint& fp);

}  // namespace oddakh
