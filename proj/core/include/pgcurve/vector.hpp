#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <string_view>

namespace pgcurve {

/// Point or vector of the pseudo-Galilean space. x1 is the absolute
/// (affine) component; (x2, x3) carry the Lorentzian part of the metric.
struct PGVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr PGVector() = default;
  constexpr PGVector(double a, double b, double c) : x1(a), x2(b), x3(c) {}

  constexpr PGVector& operator+=(const PGVector& o) {
    x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr PGVector& operator-=(const PGVector& o) {
    x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr PGVector& operator*=(double k) {
    x1 *= k; x2 *= k; x3 *= k;
    return *this;
  }

  friend constexpr PGVector operator+(PGVector a, const PGVector& b) { return a += b; }
  friend constexpr PGVector operator-(PGVector a, const PGVector& b) { return a -= b; }
  friend constexpr PGVector operator-(const PGVector& a) { return {-a.x1, -a.x2, -a.x3}; }
  friend constexpr PGVector operator*(double k, PGVector a) { return a *= k; }
  friend constexpr PGVector operator*(PGVector a, double k) { return a *= k; }
  friend constexpr PGVector operator/(PGVector a, double k) { return a *= (1.0 / k); }
  friend constexpr bool operator==(const PGVector&, const PGVector&) = default;

  [[nodiscard]] bool finite() const noexcept {
    return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
  }
  [[nodiscard]] constexpr bool isotropic() const noexcept { return x1 == 0.0; }
};

std::ostream& operator<<(std::ostream& os, const PGVector& v);

/// Largest absolute component (sup norm in coordinates).
[[nodiscard]] double max_abs(const PGVector& v) noexcept;

/// Scalar product. The case split compares x1 against 0.0 exactly: the first
/// branch applies as soon as either argument has a nonzero absolute component.
[[nodiscard]] constexpr double pg_dot(const PGVector& u, const PGVector& v) noexcept {
  if (u.x1 != 0.0 || v.x1 != 0.0) return u.x1 * v.x1;
  return u.x2 * v.x2 - u.x3 * v.x3;
}

/// Formal determinant with first row (0, -j, k).
[[nodiscard]] constexpr PGVector pg_cross(const PGVector& u, const PGVector& v) noexcept {
  return {0.0, u.x1 * v.x3 - u.x3 * v.x1, u.x1 * v.x2 - u.x2 * v.x1};
}

/// Ordinary 3x3 determinant of the rows (a, b, c).
[[nodiscard]] constexpr double det3(const PGVector& a, const PGVector& b,
                                    const PGVector& c) noexcept {
  return a.x1 * (b.x2 * c.x3 - b.x3 * c.x2) - a.x2 * (b.x1 * c.x3 - b.x3 * c.x1) +
         a.x3 * (b.x1 * c.x2 - b.x2 * c.x1);
}

enum class CausalClass {
  NonIsotropic,
  SpacelikeIsotropic,
  TimelikeIsotropic,
  LightlikeIsotropic,
  Zero,
};

[[nodiscard]] CausalClass causal_class(const PGVector& v) noexcept;
[[nodiscard]] std::string_view to_string(CausalClass c) noexcept;

/// Element of the similarity group acting on point coordinates:
///   x' = a + b x
///   y' = c + d x + r (cosh t y + sinh t z)
///   z' = e + f x + r (sinh t y + cosh t z)
/// Isometries are the subgroup b = r = 1.
struct SimilarityMotion {
  double a = 0.0, b = 1.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;
  double r = 1.0;
  double theta = 0.0;

  [[nodiscard]] constexpr bool is_isometry() const noexcept { return b == 1.0 && r == 1.0; }
};

/// Acts on a point (translation part included).
[[nodiscard]] PGVector apply_similarity(const SimilarityMotion& m, const PGVector& p) noexcept;

/// Acts on a free vector (translation part a, c, e dropped).
[[nodiscard]] PGVector apply_similarity_linear(const SimilarityMotion& m,
                                               const PGVector& v) noexcept;

}  // namespace pgcurve
