#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace acute {

template <typename T, std::size_t N>
struct VecN {
  std::array<T, N> v{};

  constexpr T& operator[](std::size_t i) { return v[i]; }
  constexpr const T& operator[](std::size_t i) const { return v[i]; }

  friend constexpr VecN operator+(VecN a, const VecN& b) {
    for (std::size_t i = 0; i < N; ++i) a.v[i] += b.v[i];
    return a;
  }
  friend constexpr VecN operator-(VecN a, const VecN& b) {
    for (std::size_t i = 0; i < N; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend constexpr VecN operator*(T s, VecN a) {
    for (auto& x : a.v) x *= s;
    return a;
  }
  friend constexpr VecN operator-(VecN a) {
    for (auto& x : a.v) x = -x;
    return a;
  }
  VecN& operator+=(const VecN& b) { return *this = *this + b; }
  VecN& operator-=(const VecN& b) { return *this = *this - b; }
  friend constexpr bool operator==(const VecN&, const VecN&) = default;
  friend constexpr auto operator<=>(const VecN&, const VecN&) = default;
};

using Vec3 = VecN<double, 3>;
using Vec4 = VecN<double, 4>;
using IVec3 = VecN<std::int64_t, 3>;

template <typename T, std::size_t N>
constexpr T dot(const VecN<T, N>& a, const VecN<T, N>& b) {
  T s{};
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <typename T>
constexpr VecN<T, 3> cross(const VecN<T, 3>& a, const VecN<T, 3>& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

template <std::size_t N>
inline double norm(const VecN<double, N>& a) {
  return std::sqrt(dot(a, a));
}

template <std::size_t N>
inline VecN<double, N> normalized(const VecN<double, N>& a) {
  return (1.0 / norm(a)) * a;
}

inline Vec3 to_float(const IVec3& p) {
  return {{static_cast<double>(p[0]), static_cast<double>(p[1]), static_cast<double>(p[2])}};
}

}  // namespace acute
