#pragma once

#include <cstdint>
#include <map>
#include <random>

#include "sg/sg_core.hpp"

namespace sg {

// Measure of a simplex: a non-negative element of the real base field, or
// infinite when some vertex lies on the hyperplane at infinity.
using Measure = std::optional<Quad>;  // nullopt = infinite

inline bool measure_less(const Measure& a, const Measure& b) {
  if (!a) return false;    // infinity is never smaller
  if (!b) return true;
  return cmp(*a, *b) < 0;
}
inline bool measure_eq(const Measure& a, const Measure& b) {
  if (!a || !b) return !a && !b;
  return cmp(*a, *b) == 0;
}

// n+1 hyperplanes of an arrangement with empty common intersection, their
// vertices (vertex i is the common point of all planes but plane i) and the
// measure with respect to the active hyperplane at infinity.
template <class S>
struct Simplex {
  std::vector<int> plane_indices;  // ascending indices into the arrangement
  std::vector<Vec<S>> vertices;
  Measure measure;
};

namespace detail {

// Vertices of an (n+1)-subset of covector rows, or nullopt if they do not
// form a simplex.  Every solved vertex is re-verified against all of its
// defining covectors.
template <class S>
std::optional<std::vector<Vec<S>>> simplex_vertices(const std::vector<Vec<S>>& rows) {
  size_t k = rows.size();
  if (left_rank(rows) != int(k)) return std::nullopt;
  std::vector<Vec<S>> verts;
  verts.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    std::vector<Vec<S>> sub;
    sub.reserve(k - 1);
    for (size_t j = 0; j < k; ++j)
      if (j != i) sub.push_back(rows[j]);
    auto v = intersect_hyperplanes(std::move(sub));
    check_internal(v.has_value(), "full-rank simplex has a degenerate face");
    for (size_t j = 0; j < k; ++j) {
      bool on = pair_dot(rows[j], *v).is_zero();
      check_internal(on == (j != i), "solved vertex fails incidence recheck");
    }
    verts.push_back(std::move(*v));
  }
  return verts;
}

}  // namespace detail

// Measure of known simplex vertices against a given infinity: normalize
// each vertex so that infinity . v = 1 and take the squared-scale
// determinant of the vertex matrix (sdet over H, |det|^2 otherwise).
template <class S>
Measure measure_of_vertices(const std::vector<Vec<S>>& vertices,
                            const Hyperplane<S>& infinity) {
  std::vector<Vec<S>> cols;
  cols.reserve(vertices.size());
  for (const auto& v : vertices) {
    auto nv = normalize_against(v, infinity);
    if (!nv) return std::nullopt;
    cols.push_back(std::move(*nv));
  }
  return abs_det_sq(Matrix<S>::from_columns(cols));
}

// Measure of the simplex formed by the given hyperplanes; throws when they
// do not form one.
template <class S>
Measure measure(const std::vector<Hyperplane<S>>& planes, const Hyperplane<S>& infinity) {
  std::vector<Vec<S>> rows;
  for (const auto& h : planes) rows.push_back(h.covector);
  if (rows.empty() || rows.size() != rows[0].size())
    throw error(errc::input, "a simplex in P^n needs exactly n+1 hyperplanes");
  auto verts = detail::simplex_vertices(rows);
  if (!verts)
    throw error(errc::input, "degenerate selection: hyperplanes have a common point");
  return measure_of_vertices(*verts, infinity);
}

// All (n+1)-subsets of the arrangement with empty common intersection,
// with vertices and measures.  Subsets are emitted in lexicographic order
// of their index tuples.
template <class S>
std::vector<Simplex<S>> enumerate_simplices(const Arrangement<S>& arr,
                                            const Hyperplane<S>& infinity) {
  int m = int(arr.planes.size());
  int k = arr.n + 1;
  if (m < k)
    throw error(errc::input, "arrangement has fewer than n+1 hyperplanes");
  std::vector<Simplex<S>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vec<S>> rows;
    rows.reserve(k);
    for (int i : idx) rows.push_back(arr.planes[i].covector);
    if (auto verts = detail::simplex_vertices(rows)) {
      Simplex<S> s;
      s.plane_indices = idx;
      s.measure = measure_of_vertices(*verts, infinity);
      s.vertices = std::move(*verts);
      out.push_back(std::move(s));
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

template <class S>
std::vector<Simplex<S>> enumerate_simplices(const Arrangement<S>& arr) {
  return enumerate_simplices(arr, arr.infinity_or_barycentric());
}

template <class S>
struct MinSimplexResult {
  Simplex<S> min;                       // lexicographically least among ties
  std::vector<std::vector<int>> ties;   // all index tuples attaining the minimum
  size_t simplex_count = 0;
  bool tied() const { return ties.size() > 1; }
};

template <class S>
MinSimplexResult<S> find_min_simplex(const std::vector<Simplex<S>>& simplices) {
  const Simplex<S>* best = nullptr;
  for (const auto& s : simplices) {
    if (!s.measure) continue;
    if (!best || measure_less(s.measure, best->measure)) best = &s;
  }
  if (!best)
    throw error(errc::search, "no simplex of finite measure");
  MinSimplexResult<S> res;
  res.min = *best;  // enumeration order makes this the lexicographically least
  res.simplex_count = simplices.size();
  for (const auto& s : simplices)
    if (s.measure && measure_eq(s.measure, best->measure))
      res.ties.push_back(s.plane_indices);
  return res;
}

template <class S>
MinSimplexResult<S> find_min_simplex(const Arrangement<S>& arr) {
  return find_min_simplex(enumerate_simplices(arr));
}

// Whether every pair of the simplex's hyperplanes admits a third member of
// the arrangement through its (n-2)-flat, i.e. whether an alpha system can
// be derived from this simplex.
template <class S>
bool alpha_admissible(const Arrangement<S>& arr, const Simplex<S>& s) {
  int k = int(s.plane_indices.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!select_third(arr, s.plane_indices[a], s.plane_indices[b])) return false;
  return true;
}

// Minimal-measure simplex among those from which an alpha system can be
// derived.  In a genuine dual SG arrangement every simplex qualifies and
// this coincides with the global minimum; truncated local configurations
// can have cheaper simplices whose pairwise intersections carry no third
// member, and those cannot anchor the inequality system.
template <class S>
std::optional<MinSimplexResult<S>> find_min_alpha_base(const Arrangement<S>& arr,
                                                       const std::vector<Simplex<S>>& simplices) {
  std::vector<Simplex<S>> admissible;
  for (const auto& s : simplices)
    if (s.measure && alpha_admissible(arr, s)) admissible.push_back(s);
  if (admissible.empty()) return std::nullopt;
  return find_min_simplex(admissible);
}

// --- generic hyperplane at infinity -------------------------------------

template <class S>
struct GenericInfinityResult {
  Hyperplane<S> infinity;
  int attempts = 0;
};

namespace detail {

inline Rat small_rat(std::mt19937_64& rng) {
  long num = long(rng() % 19) - 9;
  long den = long(rng() % 4) + 1;
  return Rat(num, den);
}

// Random scalar with small rational real coordinates, in the quadratic
// extension tagged by d (0 for plain rationals).
template <class S>
S random_scalar(std::mt19937_64& rng, long long d);

template <>
inline Rat random_scalar<Rat>(std::mt19937_64& rng, long long) {
  return small_rat(rng);
}
template <>
inline Quad random_scalar<Quad>(std::mt19937_64& rng, long long d) {
  if (d == 0) return Quad(small_rat(rng));
  return Quad(small_rat(rng), small_rat(rng), d);
}
template <>
inline Quat random_scalar<Quat>(std::mt19937_64& rng, long long d) {
  auto comp = [&] {
    return d == 0 ? Quad(small_rat(rng)) : Quad(small_rat(rng), small_rat(rng), d);
  };
  return Quat(comp(), comp(), comp(), comp());
}

template <class S>
long long discriminant_of(const Arrangement<S>& arr);

template <>
inline long long discriminant_of<Rat>(const Arrangement<Rat>&) {
  return 0;
}
template <>
inline long long discriminant_of<Quad>(const Arrangement<Quad>& arr) {
  for (const auto& h : arr.planes)
    for (const auto& x : h.covector)
      if (x.d() != 0) return x.d();
  return 0;
}
template <>
inline long long discriminant_of<Quat>(const Arrangement<Quat>& arr) {
  for (const auto& h : arr.planes)
    for (const auto& x : h.covector)
      for (const Quad* c : {&x.t(), &x.x(), &x.y(), &x.z()})
        if (c->d() != 0) return c->d();
  return 0;
}

}  // namespace detail

// Rejection-sample a hyperplane at infinity that is not a member of the
// arrangement, avoids every simplex vertex, and separates all simplex
// measures.  Reports the number of attempts; throws after max_attempts.
template <class S>
GenericInfinityResult<S> generic_infinity(const Arrangement<S>& arr, uint64_t seed,
                                          int max_attempts = 1000) {
  auto simplices = enumerate_simplices(arr);  // vertices do not depend on infinity
  std::mt19937_64 rng(seed);
  long long d = detail::discriminant_of(arr);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Vec<S> cov(size_t(arr.n) + 1);
    for (auto& x : cov) x = detail::random_scalar<S>(rng, d);
    if (vec_is_zero(cov)) continue;
    Hyperplane<S> cand(std::move(cov));

    bool ok = true;
    for (const auto& h : arr.planes)
      if (planes_equal(h, cand)) {
        ok = false;
        break;
      }
    for (const auto& s : simplices) {
      if (!ok) break;
      for (const auto& v : s.vertices)
        if (pair_dot(cand.covector, v).is_zero()) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;

    std::vector<Quad> measures;
    for (const auto& s : simplices) {
      auto m = measure_of_vertices(s.vertices, cand);
      check_internal(m.has_value(), "vertex-avoiding infinity yields finite measures");
      measures.push_back(std::move(*m));
    }
    std::sort(measures.begin(), measures.end(),
              [](const Quad& a, const Quad& b) { return cmp(a, b) < 0; });
    bool distinct = true;
    for (size_t i = 0; i + 1 < measures.size(); ++i)
      if (cmp(measures[i], measures[i + 1]) == 0) {
        distinct = false;
        break;
      }
    if (distinct) return {std::move(cand), attempt};
  }
  throw error(errc::search,
              "no measure-separating infinity found in " +
                  std::to_string(max_attempts) + " attempts (degenerate arrangement)");
}

// --- alpha systems -------------------------------------------------------

// One inequality |1 - sum_{q in K} alpha_{pq}| <= 1, evaluated exactly on
// squared norms.
template <class S>
struct AlphaIneq {
  int p;                   // simplex-local index, 1-based
  std::vector<int> ks;     // simplex-local companion indices, 1-based
  S value;                 // 1 - sum of alphas
  Quad value_norm_sq;
  Quad slack;              // 1 - |value|^2
  bool holds;
  bool equality;
};

template <class S>
struct AlphaSystem {
  std::vector<int> base_planes;                 // arrangement indices of the simplex
  std::map<std::pair<int, int>, int> third;     // local (p,q) -> arrangement index
  std::map<std::pair<int, int>, S> alpha;       // local ordered pairs
  std::vector<AlphaIneq<S>> ineqs;              // grouped by |K|, then p, then K
  std::map<int, int> family_count;              // |K| -> number of inequalities

  bool all_hold() const {
    for (const auto& q : ineqs)
      if (!q.holds) return false;
    return true;
  }
  bool all_equal() const {
    for (const auto& q : ineqs)
      if (!q.equality) return false;
    return true;
  }
  // AGM lower bound, decided exactly on squared norms: for every unordered
  // pair, |a_pq|^2 * |a_qp|^2 = 1 and |a_pq|^2 + |a_qp|^2 >= 2, with
  // equality iff both squared norms are 1.
  bool agm_holds() const {
    for (const auto& [pq, a] : alpha) {
      if (pq.first > pq.second) continue;
      Quad n1 = a.norm_sq();
      Quad n2 = alpha.at({pq.second, pq.first}).norm_sq();
      if ((n1 * n2) != Quad(1)) return false;
      if (cmp(n1 + n2, Quad(2)) < 0) return false;
    }
    return true;
  }
  bool all_unit_norm() const {
    for (const auto& [pq, a] : alpha)
      if (a.norm_sq() != Quad(1)) return false;
    return true;
  }
};

// Vector part of alpha - 1/2, meaningful in the quaternion case.
inline std::array<Quad, 3> alpha_vector_part(const Quat& a) {
  return {a.x(), a.y(), a.z()};
}

// Basis change sending the simplex vertices (normalized against the given
// infinity) to the standard unit points: every covector h becomes h * V
// where V has the normalized vertices as columns.  The image of the given
// infinity is the barycentric all-ones covector.
template <class S>
Arrangement<S> simplex_adapted_coordinates(const Arrangement<S>& arr,
                                           const Simplex<S>& s,
                                           const Hyperplane<S>& infinity) {
  int n = arr.n;
  Matrix<S> V(n + 1, n + 1);
  for (int j = 0; j < n + 1; ++j) {
    auto nv = normalize_against(s.vertices[j], infinity);
    if (!nv)
      throw error(errc::input, "base simplex has a vertex at infinity");
    for (int i = 0; i < n + 1; ++i) V(i, j) = (*nv)[i];
  }
  Arrangement<S> out;
  out.n = n;
  for (const auto& h : arr.planes) {
    Vec<S> row(size_t(n) + 1, S(0));
    for (int j = 0; j < n + 1; ++j)
      for (int i = 0; i < n + 1; ++i) row[j] += h.covector[i] * V(i, j);
    out.planes.push_back(Hyperplane<S>(std::move(row)));
  }
  out.infinity = Hyperplane<S>(Vec<S>(size_t(n) + 1, S(1)));
  return out;
}

// Extract the alpha system of a simplex: choose a third hyperplane through
// each pairwise intersection (lowest index), read off the coefficients in
// simplex-adapted coordinates, and evaluate the full inequality family of
// the ambient dimension.
template <class S>
AlphaSystem<S> derive_alpha_system(const Arrangement<S>& arr, const Simplex<S>& s,
                                   const Hyperplane<S>& infinity) {
  int k = arr.n + 1;  // local indices 1..k
  AlphaSystem<S> sys;
  sys.base_planes = s.plane_indices;

  Arrangement<S> adapted = simplex_adapted_coordinates(arr, s, infinity);

  for (int p = 1; p <= k; ++p)
    for (int q = 1; q <= k; ++q) {
      if (p == q) continue;
      if (p < q) {
        auto t = select_third(arr, s.plane_indices[p - 1], s.plane_indices[q - 1]);
        if (!t)
          throw error(errc::search, "no third hyperplane through the intersection of "
                                    "simplex planes " +
                                        std::to_string(p) + " and " + std::to_string(q));
        sys.third[{p, q}] = *t;
        sys.third[{q, p}] = *t;
      }
      int t = sys.third.at({p, q});
      const Vec<S>& w = adapted.planes[t].covector;
      for (int r = 1; r <= k; ++r)
        if (r != p && r != q)
          check_internal(w[r - 1].is_zero(),
                         "third hyperplane misses a base vertex it must contain");
      check_internal(!w[p - 1].is_zero() && !w[q - 1].is_zero(),
                     "third hyperplane coincides with a simplex hyperplane");
      sys.alpha[{p, q}] = w[q - 1].inverse() * w[p - 1];
    }

  for (int p = 1; p <= k; ++p)
    for (int q = p + 1; q <= k; ++q) {
      S prod = sys.alpha.at({p, q}) * sys.alpha.at({q, p});
      if (prod != S(1))
        throw error(errc::internal, "alpha_pq * alpha_qp != 1 for pair (" +
                                        std::to_string(p) + "," + std::to_string(q) + ")");
    }

  // Inequality family |1 - sum_{q in K} alpha_pq| <= 1 over all p and all
  // nonempty K of companions, grouped by |K|.
  for (int size = 1; size <= k - 1; ++size) {
    for (int p = 1; p <= k; ++p) {
      std::vector<int> others;
      for (int q = 1; q <= k; ++q)
        if (q != p) others.push_back(q);
      std::vector<int> sel(size);
      // iterate over size-subsets of `others` in lexicographic order
      std::vector<int> c(size);
      for (int i = 0; i < size; ++i) c[i] = i;
      while (true) {
        AlphaIneq<S> q;
        q.p = p;
        for (int i = 0; i < size; ++i) q.ks.push_back(others[c[i]]);
        S val(1);
        for (int idx : q.ks) val -= sys.alpha.at({p, idx});
        q.value = val;
        q.value_norm_sq = val.norm_sq();
        q.slack = Quad(1) - q.value_norm_sq;
        int sgn = q.slack.sign();
        q.holds = sgn >= 0;
        q.equality = sgn == 0;
        sys.ineqs.push_back(std::move(q));
        sys.family_count[size]++;
        int i = size - 1;
        while (i >= 0 && c[i] == int(others.size()) - size + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
      }
    }
  }
  return sys;
}

}  // namespace sg
