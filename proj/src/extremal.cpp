#include "sg/extremal.hpp"

namespace sg {

namespace {

Quad rho() { return Quad(Rat(-1, 2), Rat(1, 2), -3); }

Quad rho_pow(int c) {
  c = ((c % 3) + 3) % 3;
  Quad r(1);
  for (int i = 0; i < c; ++i) r *= rho();
  return r;
}

}  // namespace

Configuration<Quad> hesse_points() {
  // c runs over the cube roots of -1: -1, -rho, -rho^2.
  std::vector<Quad> roots{Quad(-1), -rho(), -(rho() * rho())};
  Configuration<Quad> cfg;
  cfg.n = 2;
  for (const Quad& c : roots) cfg.points.push_back(ProjPoint<Quad>({Quad(0), Quad(1), c}));
  for (const Quad& c : roots) cfg.points.push_back(ProjPoint<Quad>({Quad(1), Quad(0), c}));
  for (const Quad& c : roots) cfg.points.push_back(ProjPoint<Quad>({Quad(1), c, Quad(0)}));
  cfg.validate();
  return cfg;
}

Arrangement<Rat> tri_lattice(int M) {
  if (M < 1) throw error(errc::input, "tri_lattice needs M >= 1");
  Arrangement<Rat> arr;
  arr.n = 2;
  for (int i = 0; i < 3; ++i)
    for (int m = -M; m <= M; ++m) {
      // x_i = m homogenized against the barycentric chart: x_i - m*(x1+x2+x3) = 0
      Vec<Rat> cov(3, Rat(-m));
      cov[i] += Rat(1);
      arr.planes.push_back(Hyperplane<Rat>(std::move(cov)));
    }
  arr.infinity = Hyperplane<Rat>(Vec<Rat>(3, Rat(1)));
  arr.validate();
  return arr;
}

InteriorReport tri_lattice_interior_check(int M) {
  Arrangement<Rat> arr = tri_lattice(M);
  InteriorReport rep;
  int count = 2 * M + 1;
  auto family = [&](int idx) { return idx / count; };
  auto value = [&](int idx) { return idx % count - M; };
  Rat bound(M - 1);
  for (int a = 0; a < int(arr.planes.size()); ++a)
    for (int b = a + 1; b < int(arr.planes.size()); ++b) {
      ++rep.pairs_checked;
      if (family(a) == family(b)) {
        // parallel lines meet at infinity; any third value of m serves
        check_internal(count >= 3, "lattice family too small for a third parallel");
        continue;
      }
      int i = family(a), j = family(b);
      int k = 3 - i - j;
      Rat m(value(a)), mp(value(b));
      Vec<Rat> coords(3);
      coords[i] = m;
      coords[j] = mp;
      coords[k] = Rat(1) - m - mp;
      ProjPoint<Rat> pt(coords);
      bool interior = coords[0].abs() < bound && coords[1].abs() < bound &&
                      coords[2].abs() < bound;
      int through = 0;
      for (const auto& h : arr.planes)
        if (incident(h, pt)) ++through;
      check_internal(through >= 2, "defining lines miss their own intersection");
      if (interior) {
        ++rep.interior_pairs;
        if (through < 3) ++rep.interior_violations;
      } else if (through < 3) {
        rep.boundary_violation_found = true;
      }
    }
  return rep;
}

Quad eisenstein(long u, long v) {
  // u + v*rho = (u - v/2) + (v/2) sqrt(-3)
  return Quad(Rat(2 * u - v, 2), Rat(v, 2), -3);
}

Rat eisenstein_norm(long u, long v) { return Rat(u * u - u * v + v * v); }

Hyperplane<Quad> eisenstein_plane(int family, int c, const Quad& m) {
  if (family < 0 || family > 2 || c < 0 || c > 2)
    throw error(errc::input, "eisenstein_plane: family and c must lie in {0,1,2}");
  // family f: x_{f+1} - rho^c x_{f+2 mod 3} = m, homogenized with x4
  Vec<Quad> cov(4, Quad(0));
  cov[family] = Quad(1);
  cov[(family + 1) % 3] = -rho_pow(c);
  cov[3] = -m;
  return Hyperplane<Quad>(std::move(cov));
}

namespace {

struct EisensteinInfo {
  int family, c;
  long u, v;
};

std::vector<std::pair<long, long>> eisenstein_values(int M) {
  std::vector<std::pair<long, long>> vals;
  long B = 1;
  while (3 * B * B <= 4 * long(M)) ++B;
  for (long u = -B; u <= B; ++u)
    for (long v = -B; v <= B; ++v)
      if (eisenstein_norm(u, v) <= Rat(M)) vals.emplace_back(u, v);
  return vals;
}

std::vector<EisensteinInfo> eisenstein_index(int M) {
  std::vector<EisensteinInfo> idx;
  auto vals = eisenstein_values(M);
  for (int f = 0; f < 3; ++f)
    for (int c = 0; c < 3; ++c)
      for (auto [u, v] : vals) idx.push_back({f, c, u, v});
  return idx;
}

}  // namespace

Arrangement<Quad> eisenstein_planes(int M) {
  if (M < 0) throw error(errc::input, "eisenstein_planes needs M >= 0");
  Arrangement<Quad> arr;
  arr.n = 3;
  for (const auto& info : eisenstein_index(M))
    arr.planes.push_back(eisenstein_plane(info.family, info.c, eisenstein(info.u, info.v)));
  Vec<Quad> inf(4, Quad(0));
  inf[3] = Quad(1);
  arr.infinity = Hyperplane<Quad>(std::move(inf));
  arr.validate();
  return arr;
}

std::optional<EisensteinPartner> eisenstein_closure_partner(int f1, int c1, const Quad& m1,
                                                            int f2, int c2, const Quad& m2) {
  if (f1 == f2) {
    if (c1 == c2) {
      if (m1 == m2) throw error(errc::input, "closure partner of a plane with itself");
      return std::nullopt;  // parallel
    }
    // x_a - rho^c1 x_b = m1 and x_a - rho^c2 x_b = m2 meet inside the third
    // twist of the same family.
    int c3 = (6 - c1 - c2) % 3;
    Quad xb = (m1 - m2) / (rho_pow(c2) - rho_pow(c1));
    Quad m3 = m1 + (rho_pow(c1) - rho_pow(c3)) * xb;
    return EisensteinPartner{f1, c3, m3};
  }
  if ((f1 + 1) % 3 != f2) {
    // the cyclic elimination assumes f2 = f1 + 1; otherwise swap roles
    return eisenstein_closure_partner(f2, c2, m2, f1, c1, m1);
  }
  // x_f - rho^c1 x_{f+1} = m1, x_{f+1} - rho^c2 x_{f+2} = m2 eliminate
  // x_{f+1} into x_{f+2} - rho^c3 x_f = -(rho^c3 m1 + rho^{-c2} m2).
  int c3 = (6 - c1 - c2) % 3;
  Quad m3 = -(rho_pow(c3) * m1 + rho_pow(3 - c2) * m2);
  return EisensteinPartner{(f1 + 2) % 3, c3, m3};
}

InteriorReport eisenstein_interior_check(int M) {
  Arrangement<Quad> arr = eisenstein_planes(M);
  auto idx = eisenstein_index(M);
  InteriorReport rep;
  auto find_plane = [&](int f, int c, const Quad& m) -> int {
    for (int k = 0; k < int(idx.size()); ++k)
      if (idx[k].family == f && idx[k].c == c && eisenstein(idx[k].u, idx[k].v) == m)
        return k;
    return -1;
  };
  for (int a = 0; a < int(idx.size()); ++a)
    for (int b = a + 1; b < int(idx.size()); ++b) {
      ++rep.pairs_checked;
      auto partner = eisenstein_closure_partner(idx[a].family, idx[a].c,
                                                eisenstein(idx[a].u, idx[a].v),
                                                idx[b].family, idx[b].c,
                                                eisenstein(idx[b].u, idx[b].v));
      if (!partner) {
        // parallel pair: its infinity line is shared by every plane of the
        // same family and twist, of which the truncation has at least three
        // for M >= 1
        continue;
      }
      Quad norm = partner->m.norm_sq();
      check_internal(norm.is_rational(), "Eisenstein norm must be rational");
      bool interior = norm.a() <= Rat(M);
      int third = find_plane(partner->family, partner->c, partner->m);
      if (interior) {
        ++rep.interior_pairs;
        bool ok = third >= 0 &&
                  left_rank<Quad>({arr.planes[a].covector, arr.planes[b].covector,
                                   arr.planes[third].covector}) == 2;
        if (!ok) ++rep.interior_violations;
      } else {
        check_internal(third < 0, "partner outside truncation bound yet present");
        bool found = false;
        for (int k = 0; k < int(idx.size()) && !found; ++k) {
          if (k == a || k == b) continue;
          if (in_left_span<Quad>({arr.planes[a].covector, arr.planes[b].covector},
                                 arr.planes[k].covector))
            found = true;
        }
        if (!found) rep.boundary_violation_found = true;
      }
    }
  return rep;
}

// --- dodecahedron ---------------------------------------------------------

namespace {

using V3 = std::array<Quad, 3>;

Quad dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
V3 neg3(const V3& a) { return {-a[0], -a[1], -a[2]}; }

std::vector<V3> dodeca_vertices() {
  std::vector<V3> vs;
  Quad half(Rat(1, 2));
  Quad phi_half(Rat(1, 4), Rat(1, 4), 5);    // phi/2
  Quad iphi_half(Rat(-1, 4), Rat(1, 4), 5);  // 1/(2 phi) = (phi-1)/2
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        vs.push_back({Quad(Rat(sx)) * half, Quad(Rat(sy)) * half, Quad(Rat(sz)) * half});
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Quad a = Quad(Rat(s1)) * iphi_half;
      Quad b = Quad(Rat(s2)) * phi_half;
      vs.push_back({Quad(0), a, b});
      vs.push_back({a, b, Quad(0)});
      vs.push_back({b, Quad(0), a});
    }
  return vs;
}

// Inner-product constraint between two ordered labels sharing an index:
// same first or same second index forces -1/4, crossed indices force +1/4.
std::optional<Rat> required_dot(std::pair<int, int> l1, std::pair<int, int> l2) {
  auto [a, b] = l1;
  auto [c, d] = l2;
  if (a == c || b == d) return Rat(-1, 4);
  if (b == c || a == d) return Rat(1, 4);
  return std::nullopt;
}

struct LabelSearch {
  const std::vector<V3>& verts;
  const std::vector<std::pair<int, int>>& vertex_pairs;  // antipodal pairs
  std::vector<std::pair<int, int>> index_pairs;
  std::map<std::pair<int, int>, int> assign;
  std::vector<bool> used;

  bool consistent(std::pair<int, int> label, int vi) const {
    for (const auto& [lab, wi] : assign) {
      auto need = required_dot(lab, label);
      if (!need) continue;
      if (dot3(verts[wi], verts[vi]) != Quad(*need)) return false;
    }
    return true;
  }

  bool rec(size_t k) {
    if (k == index_pairs.size()) return true;
    auto [p, q] = index_pairs[k];
    for (size_t pi = 0; pi < vertex_pairs.size(); ++pi) {
      if (used[pi]) continue;
      auto [i, j] = vertex_pairs[pi];
      for (auto [vp, vq] : {std::pair{i, j}, std::pair{j, i}}) {
        if (!consistent({p, q}, vp) || !consistent({q, p}, vq)) continue;
        used[pi] = true;
        assign[{p, q}] = vp;
        assign[{q, p}] = vq;
        if (rec(k + 1)) return true;
        assign.erase({p, q});
        assign.erase({q, p});
        used[pi] = false;
      }
    }
    return false;
  }
};

}  // namespace

DodecaSystem dodeca_system() {
  DodecaSystem sys;
  sys.vertices = dodeca_vertices();
  check_internal(sys.vertices.size() == 20, "dodecahedron must have 20 vertices");
  for (const auto& v : sys.vertices)
    check_internal(dot3(v, v) == Quad(Rat(3, 4)),
                   "vertex off the sphere of radius sqrt(3)/2");

  std::vector<std::pair<int, int>> vertex_pairs;
  for (int i = 0; i < 20; ++i)
    for (int j = i + 1; j < 20; ++j)
      if (sys.vertices[j] == neg3(sys.vertices[i])) vertex_pairs.emplace_back(i, j);
  check_internal(vertex_pairs.size() == 10, "expected 10 antipodal vertex pairs");

  std::vector<std::pair<int, int>> index_pairs;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) index_pairs.emplace_back(p, q);

  LabelSearch search{sys.vertices, vertex_pairs, index_pairs, {},
                     std::vector<bool>(10, false)};
  if (!search.rec(0))
    throw error(errc::search,
                "no labeling of the dodecahedron vertices satisfies the alpha constraints");
  sys.labeling = std::move(search.assign);

  for (const auto& [pq, vi] : sys.labeling) {
    const V3& v = sys.vertices[vi];
    sys.alpha[pq] = Quat(Quad(Rat(1, 2)), v[0], v[1], v[2]);
  }

  // certify the full invariant set
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      if (p == q) continue;
      const V3& vpq = sys.v(p, q);
      check_internal(sys.v(q, p) == neg3(vpq), "v_pq != -v_qp");
      check_internal(dot3(vpq, vpq) == Quad(Rat(3, 4)), "<v_pq,v_pq> != 3/4");
      for (int r = 1; r <= 5; ++r)
        if (r != p && r != q)
          check_internal(dot3(vpq, sys.v(p, r)) == Quad(Rat(-1, 4)), "<v_pq,v_pr> != -1/4");
      const Quat& a = sys.alpha.at({p, q});
      const Quat& b = sys.alpha.at({q, p});
      check_internal(a + b == Quat(1), "alpha_pq + alpha_qp != 1");
      check_internal(a * b == Quat(1), "alpha_pq * alpha_qp != 1");
      check_internal(a.norm_sq() == Quad(1), "alpha_pq is not a unit quaternion");
      for (int r = 1; r <= 5; ++r)
        if (r != p && r != q)
          check_internal((a - sys.alpha.at({q, r})).norm_sq() == Quad(1),
                         "|alpha_pq - alpha_qr| != 1");
    }
  return sys;
}

Arrangement<Quat> dodeca_arrangement(const DodecaSystem& sys) {
  Arrangement<Quat> arr;
  arr.n = 4;
  for (int i = 0; i < 5; ++i) {
    Vec<Quat> cov(5, Quat(0));
    cov[i] = Quat(1);
    arr.planes.push_back(Hyperplane<Quat>(std::move(cov)));
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      Vec<Quat> cov(5, Quat(0));
      cov[p - 1] = sys.alpha.at({p, q});
      cov[q - 1] = Quat(1);
      arr.planes.push_back(Hyperplane<Quat>(std::move(cov)));
    }
  arr.infinity = Hyperplane<Quat>(Vec<Quat>(5, Quat(1)));
  arr.validate();
  return arr;
}

}  // namespace sg
