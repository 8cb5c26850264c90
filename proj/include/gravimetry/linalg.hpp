#pragma once

// Fixed-size 2-vector / 2x2 matrix algebra for single-mode phase space.

#include <algorithm>
#include <cmath>
#include <optional>

namespace gravimetry {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : y; }

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Row-major 2x2 matrix: [[a, b], [c, d]].
struct Mat2 {
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
  static constexpr Mat2 symmetric(double m11, double m12, double m22) {
    return {m11, m12, m12, m22};
  }

  friend constexpr Mat2 operator+(const Mat2& l, const Mat2& r) {
    return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d};
  }
  friend constexpr Mat2 operator-(const Mat2& l, const Mat2& r) {
    return {l.a - r.a, l.b - r.b, l.c - r.c, l.d - r.d};
  }
  friend constexpr Mat2 operator*(double k, const Mat2& m) {
    return {k * m.a, k * m.b, k * m.c, k * m.d};
  }
  friend constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr double det(const Mat2& m) { return m.a * m.d - m.b * m.c; }
constexpr double trace(const Mat2& m) { return m.a + m.d; }
constexpr Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

/// Inverse via the adjugate. Caller guarantees det != 0.
constexpr Mat2 inverse(const Mat2& m) {
  const double inv = 1.0 / det(m);
  return {m.d * inv, -m.b * inv, -m.c * inv, m.a * inv};
}

/// vᵀ M⁻¹ v for symmetric M, without forming the inverse.
constexpr double inverse_quadratic_form(const Mat2& m, Vec2 v) {
  return (m.d * v.x * v.x - (m.b + m.c) * v.x * v.y + m.a * v.y * v.y) / det(m);
}

/// Lower-triangular L with L Lᵀ = M for symmetric positive semi-definite M.
/// Returns nullopt when M is not PSD (negative pivot beyond rounding).
inline std::optional<Mat2> cholesky_lower(const Mat2& m) {
  if (m.a < 0.0) return std::nullopt;
  if (m.a == 0.0) {
    if (m.b != 0.0 || m.d < 0.0) return std::nullopt;
    return Mat2{0.0, 0.0, 0.0, std::sqrt(m.d)};
  }
  const double l11 = std::sqrt(m.a);
  const double l21 = m.c / l11;
  const double pivot = m.d - l21 * l21;
  if (pivot < -1e-12 * std::abs(m.d)) return std::nullopt;
  return Mat2{l11, 0.0, l21, std::sqrt(std::max(pivot, 0.0))};
}

}  // namespace gravimetry
