#pragma once

#include "sg/minsimplex.hpp"

namespace sg {

// --- Hesse configuration (nine inflection points of a cubic) -------------

// The nine points [0,1,c], [1,0,c], [1,c,0] with c^3 = -1 in P^2 over
// Q(sqrt(-3)).  Every line through two of them carries a third.
Configuration<Quad> hesse_points();

// --- skew triangular lattice truncation ----------------------------------

// Lines x_i = m (i in {1,2,3}, |m| <= M) in the barycentric plane
// x1+x2+x3 = 1, homogenized over the rationals; infinity is the all-ones
// covector.
Arrangement<Rat> tri_lattice(int M);

struct InteriorReport {
  int pairs_checked = 0;
  int interior_pairs = 0;
  int interior_violations = 0;    // must stay 0
  bool boundary_violation_found = false;
  bool ok() const { return interior_violations == 0; }
};

// Exhaustive dual-SG check on the truncation, restricted to interior
// intersection points (all barycentric coordinates of absolute value less
// than M-1); also reports whether some boundary pair lacks a third line.
InteriorReport tri_lattice_interior_check(int M);

// --- Eisenstein plane arrangement ----------------------------------------

// Eisenstein integer m = u + v*rho as an element of Q(sqrt(-3)).
Quad eisenstein(long u, long v);
// |m|^2 = u^2 - uv + v^2 for m = u + v*rho.
Rat eisenstein_norm(long u, long v);

// Planes x1 - rho^c x2 = m, x2 - rho^c x3 = m, x3 - rho^c x1 = m in the
// affine chart x4 = 1 of P^3 over Q(sqrt(-3)), with c in {0,1,2} and m an
// Eisenstein integer of norm at most M; infinity is x4 = 0.
Arrangement<Quad> eisenstein_planes(int M);

// Covector of one such plane: family f in {0,1,2} relates (x_{f+1}, x_{f+2 mod 3}).
Hyperplane<Quad> eisenstein_plane(int family, int c, const Quad& m);

struct EisensteinPartner {
  int family;
  int c;
  Quad m;
};

// The third plane through the intersection of two non-parallel planes of
// the family, from the two closure identities: eliminating the shared
// variable of planes from different families lands in the remaining
// family, and two planes of one family with different twists c land on the
// third twist.  Parallel pairs (same family, same c) return nullopt.
std::optional<EisensteinPartner> eisenstein_closure_partner(int f1, int c1, const Quad& m1,
                                                            int f2, int c2, const Quad& m2);

InteriorReport eisenstein_interior_check(int M);

// --- dodecahedron quaternion system ---------------------------------------

struct DodecaSystem {
  // 20 dodecahedron vertices in Q(sqrt5)^3, circumradius sqrt(3)/2.
  std::vector<std::array<Quad, 3>> vertices;
  // labeling[(p,q)] = index into vertices, for all ordered distinct p,q in 1..5
  std::map<std::pair<int, int>, int> labeling;
  std::map<std::pair<int, int>, Quat> alpha;  // 1/2 + v_pq

  const std::array<Quad, 3>& v(int p, int q) const {
    return vertices[labeling.at({p, q})];
  }
};

// Constructs the vertices, searches for the labeling satisfying
// alpha_pq + alpha_qp = 1 and |alpha_pq - alpha_qr| = 1 (exhaustive over
// assignments of the ten antipodal vertex pairs to the ten index pairs,
// pruned by the inner-product constraints), and certifies the v-vector
// identities.  The first labeling in scan order is returned, which makes
// the result canonical.
DodecaSystem dodeca_system();

// The local arrangement of the equality configuration: the five coordinate
// hyperplanes of P^4(H) followed by the ten planes alpha_pq x_p + x_q = 0
// in lexicographic (p,q) order, with barycentric infinity.
Arrangement<Quat> dodeca_arrangement(const DodecaSystem& sys);

}  // namespace sg
