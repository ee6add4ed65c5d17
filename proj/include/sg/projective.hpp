#pragma once

#include <algorithm>
#include <optional>

#include "sg/matrix.hpp"

namespace sg {

// Point of P^n(D): nonzero homogeneous column, defined up to a right scalar.
template <class S>
struct ProjPoint {
  Vec<S> coords;

  explicit ProjPoint(Vec<S> c) : coords(std::move(c)) {
    if (vec_is_zero(coords))
      throw error(errc::input, "projective point needs a nonzero coordinate vector");
  }
  int dim() const { return int(coords.size()) - 1; }
};

// Hyperplane of P^n(D): nonzero covector row, defined up to a left scalar.
template <class S>
struct Hyperplane {
  Vec<S> covector;

  explicit Hyperplane(Vec<S> c) : covector(std::move(c)) {
    if (vec_is_zero(covector))
      throw error(errc::input, "hyperplane needs a nonzero covector");
  }
  int dim() const { return int(covector.size()) - 1; }
};

// Equality as projective points: right-proportionality.
template <class S>
bool points_equal(const ProjPoint<S>& x, const ProjPoint<S>& y) {
  if (x.coords.size() != y.coords.size()) return false;
  return right_rank<S>({x.coords, y.coords}) == 1;
}

// Equality as hyperplanes: left-proportionality.
template <class S>
bool planes_equal(const Hyperplane<S>& g, const Hyperplane<S>& h) {
  if (g.covector.size() != h.covector.size()) return false;
  return left_rank<S>({g.covector, h.covector}) == 1;
}

template <class S>
bool incident(const Hyperplane<S>& h, const ProjPoint<S>& p) {
  if (h.covector.size() != p.coords.size())
    throw error(errc::input, "incidence dimension mismatch");
  return pair_dot(h.covector, p.coords).is_zero();
}

// Finite point set in P^n(D), pairwise distinct as projective points.
template <class S>
struct Configuration {
  int n = 0;
  std::vector<ProjPoint<S>> points;

  void validate() const {
    for (const auto& p : points)
      if (p.dim() != n) throw error(errc::input, "point dimension mismatch");
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        if (points_equal(points[i], points[j]))
          throw error(errc::input, "configuration has coincident points " +
                                       std::to_string(i) + " and " + std::to_string(j));
  }
};

// Finite hyperplane set in P^n(D), with an optional distinguished
// hyperplane at infinity (not itself a member).
template <class S>
struct Arrangement {
  int n = 0;
  std::vector<Hyperplane<S>> planes;
  std::optional<Hyperplane<S>> infinity;

  void validate() const {
    for (const auto& h : planes)
      if (h.dim() != n) throw error(errc::input, "hyperplane dimension mismatch");
    if (infinity && infinity->dim() != n)
      throw error(errc::input, "infinity hyperplane dimension mismatch");
    for (size_t i = 0; i < planes.size(); ++i) {
      for (size_t j = i + 1; j < planes.size(); ++j)
        if (planes_equal(planes[i], planes[j]))
          throw error(errc::input, "arrangement has coincident hyperplanes " +
                                       std::to_string(i) + " and " + std::to_string(j));
      if (infinity && planes_equal(planes[i], *infinity))
        throw error(errc::input, "infinity hyperplane coincides with member " +
                                     std::to_string(i));
    }
  }

  // The barycentric convention: infinity defaults to the all-ones covector.
  Hyperplane<S> infinity_or_barycentric() const {
    if (infinity) return *infinity;
    return Hyperplane<S>(Vec<S>(size_t(n) + 1, S(1)));
  }
};

template <class S>
std::vector<Vec<S>> point_columns(const Configuration<S>& cfg) {
  std::vector<Vec<S>> cols;
  cols.reserve(cfg.points.size());
  for (const auto& p : cfg.points) cols.push_back(p.coords);
  return cols;
}

template <class S>
std::vector<Vec<S>> covector_rows(const Arrangement<S>& arr) {
  std::vector<Vec<S>> rows;
  rows.reserve(arr.planes.size());
  for (const auto& h : arr.planes) rows.push_back(h.covector);
  return rows;
}

// Projective dimension of the flat spanned by a configuration.
template <class S>
int span_dim(const Configuration<S>& cfg) {
  if (cfg.points.empty()) throw error(errc::input, "span of empty configuration");
  return right_rank(point_columns(cfg)) - 1;
}

// Some third point of S collinear with points i and j, lowest index first;
// nullopt when the pair violates the SG condition.
template <class S>
std::optional<int> collinear_third(const Configuration<S>& cfg, int i, int j) {
  int m = int(cfg.points.size());
  if (i < 0 || j < 0 || i >= m || j >= m || i == j)
    throw error(errc::input, "collinear_third needs two distinct member points");
  for (int k = 0; k < m; ++k) {
    if (k == i || k == j) continue;
    if (right_rank<S>({cfg.points[i].coords, cfg.points[j].coords,
                       cfg.points[k].coords}) == 2)
      return k;
  }
  return std::nullopt;
}

template <class S>
std::optional<int> collinear_third(const Configuration<S>& cfg, const ProjPoint<S>& x,
                                   const ProjPoint<S>& y) {
  int ix = -1, iy = -1;
  for (int k = 0; k < int(cfg.points.size()); ++k) {
    if (ix < 0 && points_equal(cfg.points[k], x)) ix = k;
    if (iy < 0 && points_equal(cfg.points[k], y)) iy = k;
  }
  if (ix < 0 || iy < 0 || ix == iy)
    throw error(errc::input, "collinear_third arguments must be distinct members");
  return collinear_third(cfg, ix, iy);
}

// Duality by componentwise conjugation: the covector of the dual hyperplane
// of a point v is conj(v) read as a row.  Conjugation is an
// anti-automorphism, so right spans of columns map to left spans of rows
// and the incidence pairing is preserved with roles swapped; applying the
// map twice returns the original data.  Over the reals this is the plain
// role swap.
template <class S>
Vec<S> conj_vec(const Vec<S>& v) {
  Vec<S> out;
  out.reserve(v.size());
  for (const S& x : v) out.push_back(x.conj());
  return out;
}

template <class S>
Arrangement<S> dualize(const Configuration<S>& cfg) {
  Arrangement<S> arr;
  arr.n = cfg.n;
  for (const auto& p : cfg.points) arr.planes.push_back(Hyperplane<S>(conj_vec(p.coords)));
  return arr;
}

template <class S>
Configuration<S> dualize(const Arrangement<S>& arr) {
  Configuration<S> cfg;
  cfg.n = arr.n;
  for (const auto& h : arr.planes)
    cfg.points.push_back(ProjPoint<S>(conj_vec(h.covector)));
  return cfg;
}

// Whether h1 and h2 meet only at infinity: their common (n-2)-flat is
// contained in the infinity hyperplane, i.e. the infinity covector lies in
// the left span of the two.
template <class S>
bool parallel(const Hyperplane<S>& h1, const Hyperplane<S>& h2,
              const Hyperplane<S>& infinity) {
  if (planes_equal(h1, h2) || planes_equal(h1, infinity) || planes_equal(h2, infinity))
    throw error(errc::input, "parallel() needs two hyperplanes distinct from each other "
                             "and from infinity");
  return in_left_span<S>({h1.covector, h2.covector}, infinity.covector);
}

// Barycentric affine chart: scale so the coordinate sum is 1.  Returns
// nullopt for points at infinity (coordinate sum zero).
template <class S>
std::optional<Vec<S>> to_affine(const ProjPoint<S>& p) {
  S sum(0);
  for (const S& x : p.coords) sum += x;
  if (sum.is_zero()) return std::nullopt;
  return scale_right(p.coords, sum.inverse());
}

// Representative with h . v = 1; nullopt when the point lies on h.
template <class S>
std::optional<Vec<S>> normalize_against(const Vec<S>& coords, const Hyperplane<S>& h) {
  S s = pair_dot(h.covector, coords);
  if (s.is_zero()) return std::nullopt;
  return scale_right(coords, s.inverse());
}

}  // namespace sg
