#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "tropgeo/rational.hpp"
#include "tropgeo/weight.hpp"

namespace tropgeo {

/// One half-space constraint normal . x <= offset.
struct Halfspace {
  IntVec normal;
  Rat offset;

  bool operator==(const Halfspace& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

/// Closed parameter interval of a line clipped against a polytope.
struct ClipInterval {
  Rat lo, hi;  // lo <= hi
};

/// A bounded rational convex polytope in H-representation. The simplex
/// constructors below index facets so that facet 0 is the hyperplane
/// sum(x) = 1 (resp. its dilate) and facet i, 1 <= i <= n, is {x_i = 0}
/// (resp. {x_i = -delta}).
class Region {
 public:
  Region(int dim, std::vector<Halfspace> halfspaces)
      : dim_(dim), halfspaces_(std::move(halfspaces)) {
    require(dim_ >= 2, errc::bad_dimension, "ambient dimension must be >= 2");
  }

  int dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool operator==(const Region& o) const {
    return dim_ == o.dim_ && halfspaces_ == o.halfspaces_;
  }

  bool contains(const RatVec& p) const {
    for (const auto& h : halfspaces_)
      if (dot(h.normal, p) > h.offset) return false;
    return true;
  }

  bool strictly_contains(const RatVec& p) const {
    for (const auto& h : halfspaces_)
      if (dot(h.normal, p) >= h.offset) return false;
    return true;
  }

  /// Indices of facet hyperplanes containing p (p need not be inside).
  std::vector<int> tight_facets(const RatVec& p) const {
    std::vector<int> t;
    for (std::size_t i = 0; i < halfspaces_.size(); ++i)
      if (dot(halfspaces_[i].normal, p) == halfspaces_[i].offset) t.push_back(int(i));
    return t;
  }

  bool on_boundary(const RatVec& p) const {
    return contains(p) && !tight_facets(p).empty();
  }

  /// Clips the line base + t*dir, t in [lo, hi] (hi absent = +infinity),
  /// against the polytope. Returns nullopt if the result is empty, and
  /// throws UnboundedExtent if it stays unbounded.
  std::optional<ClipInterval> clip_line(const RatVec& base, const IntVec& dir,
                                        const Rat& lo,
                                        const std::optional<Rat>& hi) const {
    Rat t_lo = lo;
    std::optional<Rat> t_hi = hi;
    for (const auto& h : halfspaces_) {
      Rat a = dot(h.normal, base);
      Int nd = dot(h.normal, dir);
      if (nd == 0) {
        if (a > h.offset) return std::nullopt;
        continue;
      }
      Rat bound = (h.offset - a) / Rat(nd);
      if (nd > 0) {
        if (!t_hi || *t_hi > bound) t_hi = bound;
      } else {
        if (bound > t_lo) t_lo = bound;
      }
    }
    if (!t_hi) fail(errc::unbounded_extent, "line not clipped to a bounded extent");
    if (*t_hi < t_lo) return std::nullopt;
    return ClipInterval{t_lo, *t_hi};
  }

  /// Shifts facet i inward by offsets[i] (in the linear functional of its
  /// normal). Used for collars and shrunken test regions.
  Region shrink(const std::vector<Rat>& offsets) const {
    require(offsets.size() == halfspaces_.size(), errc::bad_dimension,
            "one offset per facet expected");
    std::vector<Halfspace> hs = halfspaces_;
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i].offset -= offsets[i];
    return Region(dim_, hs);
  }

  Region shrink_uniform(const Rat& offset) const {
    return shrink(std::vector<Rat>(halfspaces_.size(), offset));
  }

  /// Exact vertex enumeration: intersects every dim-subset of facet
  /// hyperplanes and keeps feasible solutions. Intended for the small
  /// facet counts of this library's regions.
  std::vector<RatVec> vertices() const {
    std::vector<RatVec> out;
    std::set<RatVec> seen;
    const std::size_t m = halfspaces_.size();
    std::vector<std::size_t> idx(dim_);
    auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
      if (depth == dim_) {
        std::vector<RatVec> mat;
        RatVec rhs;
        for (int k = 0; k < dim_; ++k) {
          RatVec row(dim_);
          for (int c = 0; c < dim_; ++c) row[c] = Rat(halfspaces_[idx[k]].normal[c]);
          mat.push_back(row);
          rhs.push_back(halfspaces_[idx[k]].offset);
        }
        auto x = solve_linear(mat, rhs);
        if (x && contains(*x) && seen.insert(*x).second) out.push_back(*x);
        return;
      }
      for (std::size_t i = start; i + (dim_ - depth - 1) < m; ++i) {
        idx[depth] = i;
        self(self, i + 1, depth + 1);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  /// other is contained in this polytope (checked on other's vertex set).
  bool contains_region(const Region& other) const {
    for (const auto& v : other.vertices())
      if (!contains(v)) return false;
    return true;
  }

  bool strictly_contains_region(const Region& other) const {
    for (const auto& v : other.vertices())
      if (!strictly_contains(v)) return false;
    return true;
  }

 private:
  int dim_;
  std::vector<Halfspace> halfspaces_;
};

/// K = {x_i >= 0 for all i, sum x_i <= 1}. Facet 0 is the sum-facet,
/// facet i is {x_i = 0}.
inline Region standard_simplex(int n) {
  require(n >= 2, errc::bad_dimension, "simplex needs n >= 2");
  std::vector<Halfspace> hs;
  hs.push_back({ones_vec(n), Rat(1)});
  for (int i = 0; i < n; ++i) hs.push_back({unit_vec(n, i, -1), Rat(0)});
  return Region(n, std::move(hs));
}

/// The dilated simplex with vertices (-d,...,-d) and, per coordinate i, the
/// point with entry 1+3d and the others -d. The sum-facet offset is derived
/// from those vertices: 1 + 3d - (n-1)d.
inline Region dilated_simplex(int n, const Rat& delta) {
  require(n >= 2, errc::bad_dimension, "simplex needs n >= 2");
  require(delta > 0, errc::bad_dimension, "delta must be positive");
  std::vector<Halfspace> hs;
  hs.push_back({ones_vec(n), Rat(1) + Rat(3) * delta - Rat(n - 1) * delta});
  for (int i = 0; i < n; ++i) hs.push_back({unit_vec(n, i, -1), delta});
  return Region(n, std::move(hs));
}

/// Axis-aligned box [lo_1,hi_1] x ... x [lo_n,hi_n].
inline Region box_region(const RatVec& lo, const RatVec& hi) {
  const int n = int(lo.size());
  require(n >= 2 && hi.size() == lo.size(), errc::bad_dimension, "box needs n >= 2");
  std::vector<Halfspace> hs;
  for (int i = 0; i < n; ++i) {
    require(lo[i] < hi[i], errc::bad_dimension, "box bounds must satisfy lo < hi");
    hs.push_back({unit_vec(n, i, 1), hi[i]});
    hs.push_back({unit_vec(n, i, -1), -lo[i]});
  }
  return Region(n, std::move(hs));
}

}  // namespace tropgeo
