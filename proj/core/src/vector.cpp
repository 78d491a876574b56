#include "pgcurve/vector.hpp"

#include <algorithm>
#include <ostream>

namespace pgcurve {

std::ostream& operator<<(std::ostream& os, const PGVector& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

double max_abs(const PGVector& v) noexcept {
  return std::max({std::abs(v.x1), std::abs(v.x2), std::abs(v.x3)});
}

CausalClass causal_class(const PGVector& v) noexcept {
  if (v.x1 != 0.0) return CausalClass::NonIsotropic;
  if (v.x2 == 0.0 && v.x3 == 0.0) return CausalClass::Zero;
  if (std::abs(v.x2) == std::abs(v.x3)) return CausalClass::LightlikeIsotropic;
  const double q = v.x2 * v.x2 - v.x3 * v.x3;
  return q > 0.0 ? CausalClass::SpacelikeIsotropic : CausalClass::TimelikeIsotropic;
}

std::string_view to_string(CausalClass c) noexcept {
  switch (c) {
    case CausalClass::NonIsotropic: return "NonIsotropic";
    case CausalClass::SpacelikeIsotropic: return "SpacelikeIsotropic";
    case CausalClass::TimelikeIsotropic: return "TimelikeIsotropic";
    case CausalClass::LightlikeIsotropic: return "LightlikeIsotropic";
    case CausalClass::Zero: return "Zero";
  }
  return "Unknown";
}

PGVector apply_similarity(const SimilarityMotion& m, const PGVector& p) noexcept {
  return PGVector{m.a, m.c, m.e} + apply_similarity_linear(m, p);
}

PGVector apply_similarity_linear(const SimilarityMotion& m, const PGVector& v) noexcept {
  const double ch = m.r * std::cosh(m.theta);
  const double sh = m.r * std::sinh(m.theta);
  return {m.b * v.x1, m.d * v.x1 + ch * v.x2 + sh * v.x3, m.f * v.x1 + sh * v.x2 + ch * v.x3};
}

}  // namespace pgcurve
