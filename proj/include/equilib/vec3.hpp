#pragma once

#include <cmath>
#include <ostream>
#include <tuple>

#include "equilib/scalar.hpp"

namespace equilib {

template <class T>
struct BasicVec3 {
  T x{}, y{}, z{};

  BasicVec3() = default;
  BasicVec3(T x_, T y_, T z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  BasicVec3& operator+=(const BasicVec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  BasicVec3& operator-=(const BasicVec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  BasicVec3& operator*=(const T& s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  BasicVec3& operator/=(const T& s) {
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }
  friend BasicVec3 operator+(BasicVec3 a, const BasicVec3& b) { return a += b; }
  friend BasicVec3 operator-(BasicVec3 a, const BasicVec3& b) { return a -= b; }
  friend BasicVec3 operator*(BasicVec3 a, const T& s) { return a *= s; }
  friend BasicVec3 operator*(const T& s, BasicVec3 a) { return a *= s; }
  friend BasicVec3 operator/(BasicVec3 a, const T& s) { return a /= s; }
  friend BasicVec3 operator-(const BasicVec3& a) { return BasicVec3(T(-a.x), T(-a.y), T(-a.z)); }
  friend bool operator==(const BasicVec3& a, const BasicVec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const BasicVec3& a, const BasicVec3& b) { return !(a == b); }
  /// Lexicographic (x, y, z).
  friend bool operator<(const BasicVec3& a, const BasicVec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

template <class T>
T dot(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return T(a.x * b.x + a.y * b.y + a.z * b.z);
}

template <class T>
BasicVec3<T> cross(const BasicVec3<T>& a, const BasicVec3<T>& b) {
  return {T(a.y * b.z - a.z * b.y), T(a.z * b.x - a.x * b.z), T(a.x * b.y - a.y * b.x)};
}

template <class T>
T norm2(const BasicVec3<T>& a) {
  return dot(a, a);
}

/// Scalar triple product (b-a) . ((c-a) x (d-a)).
template <class T>
T orient(const BasicVec3<T>& a, const BasicVec3<T>& b, const BasicVec3<T>& c,
         const BasicVec3<T>& d) {
  return dot(b - a, cross(c - a, d - a));
}

using Vec3 = BasicVec3<Scalar>;
using Vec3d = BasicVec3<double>;

inline Vec3d to_double(const Vec3& v) { return {v.x.get_d(), v.y.get_d(), v.z.get_d()}; }
inline Vec3 from_double(const Vec3d& v) {
  return {from_double(v.x), from_double(v.y), from_double(v.z)};
}
inline double norm(const Vec3d& v) { return std::sqrt(dot(v, v)); }

template <class T>
std::ostream& operator<<(std::ostream& os, const BasicVec3<T>& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace equilib
