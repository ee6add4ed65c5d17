#include <doctest.h>

#include <set>

#include "sg/extremal.hpp"

using namespace sg;

TEST_CASE("hesse configuration: SG, planar, 12 lines of 3 points") {
  Configuration<Quad> hesse = hesse_points();
  REQUIRE(hesse.points.size() == 9);
  CHECK(span_dim(hesse) == 2);

  SGReport rep = verify_sg(hesse);
  CHECK(rep.is_sg);
  CHECK(rep.span == 2);
  CHECK(rep.violations.empty());

  // count distinct lines through pairs by exhaustive triple bucketing: a
  // line is identified by the set of member points on it
  std::set<std::vector<int>> lines;
  for (int i = 0; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) {
      std::vector<int> on;
      for (int k = 0; k < 9; ++k) {
        if (k == i || k == j) {
          on.push_back(k);
          continue;
        }
        if (right_rank<Quad>({hesse.points[i].coords, hesse.points[j].coords,
                              hesse.points[k].coords}) == 2)
          on.push_back(k);
      }
      lines.insert(on);
    }
  CHECK(lines.size() == 12);
  for (const auto& line : lines) CHECK(line.size() == 3);
}

TEST_CASE("hesse incidence example with rho") {
  // h: -rho*x1 + x2 = 0 passes through [1, rho, 0]
  Quad rho(Rat(-1, 2), Rat(1, 2), -3);
  Hyperplane<Quad> h({-rho, Quad(1), Quad(0), Quad(0)});
  ProjPoint<Quad> p({Quad(1), rho, Quad(0), Quad(0)});
  CHECK(incident(h, p));
}

TEST_CASE("tri_lattice sizes and interior dual-SG") {
  CHECK(tri_lattice(1).planes.size() == 9);
  CHECK(tri_lattice(2).planes.size() == 15);
  CHECK_THROWS_AS(tri_lattice(0), error);

  for (int M = 2; M <= 6; ++M) {
    InteriorReport rep = tri_lattice_interior_check(M);
    CHECK(rep.ok());
    CHECK(rep.boundary_violation_found);  // the truncation is not globally dual-SG
    if (M >= 3) CHECK(rep.interior_pairs > 0);
  }
}

TEST_CASE("tri_lattice: interior vertex lies on exactly 3 lines") {
  Arrangement<Rat> arr = tri_lattice(2);
  // barycentric point with (x1,x2) = (0,0): [0,0,1]
  ProjPoint<Rat> origin({Rat(0), Rat(0), Rat(1)});
  int through = 0;
  for (const auto& h : arr.planes)
    if (incident(h, origin)) ++through;
  CHECK(through == 3);
}

TEST_CASE("eisenstein arrangement: counts and closure identities") {
  CHECK(eisenstein_planes(0).planes.size() == 9);
  CHECK(eisenstein_planes(1).planes.size() == 63);

  // paper instance: x1 - x2 = 0 and x1 - rho*x2 = 0 meet inside
  // x1 - conj(rho)*x2 = 0, i.e. family 0, c = 2, m = 0
  auto p = eisenstein_closure_partner(0, 0, Quad(0), 0, 1, Quad(0));
  REQUIRE(p.has_value());
  CHECK(p->family == 0);
  CHECK(p->c == 2);
  CHECK(p->m == Quad(0));

  // and symbolically: m'' = -rho*m - rho^2*m' for c=0, c'=1
  Quad rho(Rat(-1, 2), Rat(1, 2), -3);
  for (long u = -2; u <= 2; ++u)
    for (long v = -2; v <= 2; ++v) {
      Quad m = eisenstein(u, v), mp = eisenstein(v, u);
      auto q = eisenstein_closure_partner(0, 0, m, 0, 1, mp);
      REQUIRE(q.has_value());
      CHECK(q->m == -(rho * m) - rho * rho * mp);
    }

  // both identities as exact containments for all (c, c') and random m, m'
  std::mt19937_64 rng(7);
  auto rand_eis = [&] {
    return std::pair<long, long>(long(rng() % 9) - 4, long(rng() % 9) - 4);
  };
  int checked = 0;
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2)
      for (int rep = 0; rep < 12; ++rep) {
        auto [u1, v1] = rand_eis();
        auto [u2, v2] = rand_eis();
        Quad m1 = eisenstein(u1, v1), m2 = eisenstein(u2, v2);
        // cyclic identity across families
        for (int f1 = 0; f1 < 3; ++f1) {
          int f2 = (f1 + 1) % 3;
          auto partner = eisenstein_closure_partner(f1, c1, m1, f2, c2, m2);
          REQUIRE(partner.has_value());
          auto h1 = eisenstein_plane(f1, c1, m1);
          auto h2 = eisenstein_plane(f2, c2, m2);
          auto h3 = eisenstein_plane(partner->family, partner->c, partner->m);
          CHECK(left_rank<Quad>({h1.covector, h2.covector, h3.covector}) == 2);
          ++checked;
        }
        // same-family identity across twists
        if (c1 != c2) {
          auto partner = eisenstein_closure_partner(1, c1, m1, 1, c2, m2);
          REQUIRE(partner.has_value());
          auto h1 = eisenstein_plane(1, c1, m1);
          auto h2 = eisenstein_plane(1, c2, m2);
          auto h3 = eisenstein_plane(partner->family, partner->c, partner->m);
          CHECK(left_rank<Quad>({h1.covector, h2.covector, h3.covector}) == 2);
          ++checked;
        }
      }
  CHECK(checked >= 100);
}

TEST_CASE("eisenstein interior dual-SG holds for M in {1,3}") {
  for (int M : {1, 3}) {
    InteriorReport rep = eisenstein_interior_check(M);
    CHECK(rep.ok());
    CHECK(rep.interior_pairs > 0);
    CHECK(rep.boundary_violation_found);
  }
}

TEST_CASE("dodeca system: vertices, labeling, invariants") {
  DodecaSystem sys = dodeca_system();
  CHECK(sys.vertices.size() == 20);
  CHECK(sys.labeling.size() == 20);

  Quad three_quarters(Rat(3, 4));
  Quad minus_quarter(Rat(-1, 4));
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      if (p == q) continue;
      const auto& v = sys.v(p, q);
      CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == three_quarters);
      for (int r = 1; r <= 5; ++r)
        if (r != p && r != q) {
          const auto& w = sys.v(p, r);
          CHECK(v[0] * w[0] + v[1] * w[1] + v[2] * w[2] == minus_quarter);
          // tetrahedron condition: pairwise squared distances all equal 2
          Quad d2(0);
          for (int t = 0; t < 3; ++t) d2 += (v[t] - w[t]) * (v[t] - w[t]);
          CHECK(d2 == Quad(2));
        }
    }

  // each alpha is a unit quaternion, so sum |alpha_pq| = 20 exactly
  int units = 0;
  for (const auto& [pq, a] : sys.alpha)
    if (a.norm_sq() == Quad(1)) ++units;
  CHECK(units == 20);
}

TEST_CASE("dodeca arrangement: equality in all 75 inequalities") {
  DodecaSystem sys = dodeca_system();
  Arrangement<Quat> arr = dodeca_arrangement(sys);
  REQUIRE(arr.planes.size() == 15);

  auto simplices = enumerate_simplices(arr);
  auto base = find_min_alpha_base(arr, simplices);
  REQUIRE(base.has_value());
  // the coordinate simplex is the unique alpha-admissible one here
  CHECK(base->min.plane_indices == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(base->min.measure.has_value());
  CHECK(*base->min.measure == Quad(1));

  AlphaSystem<Quat> sys_a =
      derive_alpha_system(arr, base->min, arr.infinity_or_barycentric());
  CHECK(sys_a.ineqs.size() == 75);
  CHECK(sys_a.family_count.at(1) == 20);
  CHECK(sys_a.family_count.at(2) == 30);
  CHECK(sys_a.family_count.at(3) == 20);
  CHECK(sys_a.family_count.at(4) == 5);
  CHECK(sys_a.all_hold());
  CHECK(sys_a.all_equal());
  CHECK(sys_a.agm_holds());
  CHECK(sys_a.all_unit_norm());

  // extracted alphas agree with the constructed ones
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q)
      if (p != q) CHECK(sys_a.alpha.at({p, q}) == sys.alpha.at({p, q}));
}

TEST_CASE("dodeca arrangement: global minimum is phi^-4, below the base simplex") {
  DodecaSystem sys = dodeca_system();
  Arrangement<Quat> arr = dodeca_arrangement(sys);
  auto simplices = enumerate_simplices(arr);
  auto min = find_min_simplex(simplices);
  REQUIRE(min.min.measure.has_value());
  // phi^-4 = (7 - 3 sqrt5)/2
  CHECK(*min.min.measure == Quad(Rat(7, 2), Rat(-3, 2), 5));
  CHECK(min.tied());
  // every simplex measure is strictly positive
  for (const auto& s : simplices)
    if (s.measure) CHECK(s.measure->sign() > 0);
}

TEST_CASE("dodeca arrangement: ties persist under random infinities") {
  DodecaSystem sys = dodeca_system();
  Arrangement<Quat> arr = dodeca_arrangement(sys);
  CHECK_THROWS_AS(generic_infinity(arr, 0, 2), error);
}
