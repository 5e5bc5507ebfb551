#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>

namespace nbs {

struct vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  vec3 operator+(const vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  vec3 operator-(const vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  vec3& operator+=(const vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline vec3 operator*(double s, const vec3& v) { return v * s; }

inline double dot(const vec3& a, const vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline vec3 cross(const vec3& a, const vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const vec3& v) { return std::sqrt(dot(v, v)); }

// Axis-aligned box, lo < hi componentwise.
struct box3 {
  vec3 lo, hi;

  vec3 extent() const { return hi - lo; }
  bool contains(const vec3& p, double tol = 0.0) const {
    return p.x >= lo.x - tol && p.x <= hi.x + tol && p.y >= lo.y - tol && p.y <= hi.y + tol &&
           p.z >= lo.z - tol && p.z <= hi.z + tol;
  }
  vec3 clamp(const vec3& p) const {
    auto c = [](double v, double a, double b) { return v < a ? a : (v > b ? b : v); };
    return {c(p.x, lo.x, hi.x), c(p.y, lo.y, hi.y), c(p.z, lo.z, hi.z)};
  }
};

using scalar_fn = std::function<double(const vec3&)>;
using vector_fn = std::function<vec3(const vec3&)>;

enum class side : int { minus = 0, plus = 1 };

inline side opposite(side s) { return s == side::minus ? side::plus : side::minus; }

// Sign classification of a level-set value for interior/exterior bookkeeping.
// Exact zeros are pushed into the negative region so the intersection case
// table stays exhaustive.
inline bool is_minus_corner(double phi) { return phi < 0.0 || phi == 0.0; }

// Region a point belongs to for solution evaluation: phi >= 0 is the plus side.
inline side side_of(double phi) { return phi < 0.0 ? side::minus : side::plus; }

}  // namespace nbs
