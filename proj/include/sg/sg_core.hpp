#pragma once

#include <map>
#include <utility>

#include "sg/projective.hpp"

namespace sg {

// Result of an (exhaustive) Sylvester-Gallai check.  For every pair either
// a witness third element is recorded (lowest index) or the pair is listed
// as a violation; is_sg holds exactly when there are no violations.
struct SGReport {
  bool is_sg = false;
  int span = 0;
  std::vector<std::pair<int, int>> violations;
  std::map<std::pair<int, int>, int> witness;
};

template <class S>
SGReport verify_sg(const Configuration<S>& cfg) {
  int m = int(cfg.points.size());
  if (m < 2) throw error(errc::input, "SG check needs at least two points");
  SGReport rep;
  rep.span = span_dim(cfg);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto k = collinear_third(cfg, i, j);
      if (k)
        rep.witness[{i, j}] = *k;
      else
        rep.violations.emplace_back(i, j);
    }
  rep.is_sg = rep.violations.empty();
  return rep;
}

// Lowest-index hyperplane (other than p and q) whose covector lies in the
// left span of the pair's covectors, i.e. a third member containing the
// (n-2)-flat where p and q meet.
template <class S>
std::optional<int> select_third(const Arrangement<S>& arr, int p, int q) {
  int m = int(arr.planes.size());
  if (p < 0 || q < 0 || p >= m || q >= m || p == q)
    throw error(errc::input, "select_third needs two distinct member hyperplanes");
  for (int k = 0; k < m; ++k) {
    if (k == p || k == q) continue;
    if (in_left_span<S>({arr.planes[p].covector, arr.planes[q].covector},
                        arr.planes[k].covector))
      return k;
  }
  return std::nullopt;
}

// Dual SG check: every pair of hyperplanes must share its (n-2)-flat with
// a third member.  The report's span field carries the left rank of all
// covectors minus one.
template <class S>
SGReport verify_dual_sg(const Arrangement<S>& arr) {
  int m = int(arr.planes.size());
  if (m < 2) throw error(errc::input, "dual SG check needs at least two hyperplanes");
  SGReport rep;
  rep.span = left_rank(covector_rows(arr)) - 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto k = select_third(arr, i, j);
      if (k)
        rep.witness[{i, j}] = *k;
      else
        rep.violations.emplace_back(i, j);
    }
  rep.is_sg = rep.violations.empty();
  return rep;
}

}  // namespace sg
