#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropgeo/error.hpp"

namespace tropgeo {

// Arbitrary-precision integers and rationals. All geometry in this library
// is exact; nothing is ever rounded to floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// Canonical "p/q" string, shortened to "p" when the denominator is 1.
inline std::string format_rat(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

inline std::string format_vec(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_rat(v[i]);
  }
  return s + ")";
}

inline std::string format_ivec(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

/// Parses "p" or "p/q" with optional sign. Rejects zero denominators.
inline Rat parse_rat(const std::string& text) {
  auto bad = [&] { fail(errc::parse_error, "invalid rational '" + text + "'"); };
  auto slash = text.find('/');
  std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(ns) || !is_int(ds)) bad();
  Int n(ns), d(ds);
  if (d == 0) bad();
  return Rat(n, d);
}

inline Rat dot(const IntVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVec negate(const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec axpy(const RatVec& base, const Rat& t, const IntVec& dir) {
  RatVec r(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) r[i] = base[i] + t * Rat(dir[i]);
  return r;
}

/// Solves the square rational system M x = rhs by Gaussian elimination.
/// Returns nullopt when M is singular.
inline std::optional<RatVec> solve_linear(std::vector<RatVec> m, RatVec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rat p = m[col][col];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / p;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace tropgeo
