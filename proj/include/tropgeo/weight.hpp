#pragma once

#include <numeric>

#include "tropgeo/rational.hpp"

namespace tropgeo {

/// An edge weight: an element of (Z^n \ 0)/±1, stored as a primitive integer
/// direction with canonical sign (first nonzero entry positive) times a
/// positive multiplicity. Only the squared norm is ever needed; the norm
/// itself is irrational in general and is never materialized.
struct Weight {
  IntVec direction;  // primitive, canonical sign
  Int multiplicity;  // > 0

  /// The canonical integer representative multiplicity * direction.
  IntVec vec() const {
    IntVec r(direction.size());
    for (std::size_t i = 0; i < direction.size(); ++i) r[i] = multiplicity * direction[i];
    return r;
  }

  /// multiplicity^2 * sum direction[i]^2; always a positive integer.
  Int norm_sq() const {
    Int s = 0;
    for (const auto& d : direction) s += d * d;
    return multiplicity * multiplicity * s;
  }

  bool operator==(const Weight& o) const {
    return direction == o.direction && multiplicity == o.multiplicity;
  }
};

/// Quotient-class weight in W_Q: the class of scale * (multiplicity * direction).
struct QWeight {
  Weight base;
  Rat scale;  // > 0
};

/// Reduces an integer vector to its weight class: primitive direction with
/// canonical sign, multiplicity = gcd of the absolute entries.
inline Weight canonical_weight(const IntVec& v) {
  require(!is_zero(v), errc::zero_vector, "weights live in Z^n \\ 0");
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, int_abs(x));
  IntVec dir(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) dir[i] = v[i] / g;
  for (const auto& x : dir) {
    if (x == 0) continue;
    if (x < 0) dir = negate(dir);
    break;
  }
  return Weight{std::move(dir), g};
}

/// Unit vector e_i (0-based) in dimension n.
inline IntVec unit_vec(int n, int i, const Int& scale = 1) {
  IntVec v(n, 0);
  v[i] = scale;
  return v;
}

/// All-ones vector (1,...,1) in dimension n.
inline IntVec ones_vec(int n, const Int& scale = 1) { return IntVec(n, scale); }

}  // namespace tropgeo
