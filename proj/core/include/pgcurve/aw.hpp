#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgcurve/curve.hpp"
#include "pgcurve/equiform.hpp"
#include "pgcurve/vector.hpp"

namespace pgcurve {

/// Scalars the Q-vectors are built from. K_sigma and Tq_sigma are
/// derivatives in the equiform parameter (rho d/ds).
struct EquiformScalars {
  double rho = 1.0;
  double K = 0.0;
  double Tq = 0.0;
  double K_sigma = 0.0;
  double Tq_sigma = 0.0;
  int epsilon = 1;
};

/// Q1 = gamma'', Q2 = gamma''', Q3 = gamma'''' (arc-length derivatives)
/// written in the {N, B} frame.
struct QVectors {
  double s = 0.0;
  PGVector Q1, Q2, Q3;
  double alpha = 0.0;  // a21
  double beta = 0.0;   // a22
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;
  EquiformScalars scalars;
  PGVector N, B;
};

[[nodiscard]] QVectors q_vectors_from(const EquiformScalars& sc, const PGVector& N,
                                      const PGVector& B, double s = 0.0);
[[nodiscard]] QVectors q_vectors_from(const EquiformData& e);
[[nodiscard]] QVectors q_vectors(const CurveJet& c, double s);

struct StarVectors {
  PGVector Q1star;
  std::optional<PGVector> Q2star;  // empty when degenerate
};

/// Throws Q1Lightlike when <Q1, Q1> = 0.
[[nodiscard]] StarVectors star_vectors(const QVectors& q);

enum class AwType { AW1, AW2, AW3, WeakAW2, WeakAW3 };
inline constexpr std::array<AwType, 5> kAllAwTypes{AwType::AW1, AwType::AW2, AwType::AW3,
                                                   AwType::WeakAW2, AwType::WeakAW3};

[[nodiscard]] std::string_view to_string(AwType t) noexcept;
[[nodiscard]] std::optional<AwType> aw_type_from_string(std::string_view name) noexcept;

/// Per-type values indexed by AwType.
template <class T>
struct AwArray {
  std::array<T, 5> v{};
  [[nodiscard]] T& operator[](AwType t) noexcept { return v[static_cast<std::size_t>(t)]; }
  [[nodiscard]] const T& operator[](AwType t) const noexcept {
    return v[static_cast<std::size_t>(t)];
  }
};

/// Scale Omega = max(K^2, Tq^2, |K_sigma|, |Tq_sigma|, 1).
[[nodiscard]] double aw_scale(const EquiformScalars& sc) noexcept;

/// Dimensionless scalar residuals of the five conditions.
[[nodiscard]] AwArray<double> aw_conditions(const QVectors& q);

/// Defects of the vector identities with signed products, measured in
/// frame coordinates and scaled to be comparable with aw_conditions. An
/// empty entry means the identity cannot be evaluated (degenerate Q2*).
[[nodiscard]] AwArray<std::optional<double>> aw_vector_defects(const QVectors& q);

struct AwEntry {
  bool holds = false;
  double sup_residual = 0.0;
  std::size_t grid_size = 0;
};

struct AWReport {
  AwArray<AwEntry> entries;
  double tolerance = 0.0;
  std::vector<double> degenerate_points;
  std::vector<std::string> diagnostics;

  [[nodiscard]] const AwEntry& operator[](AwType t) const noexcept { return entries[t]; }
  [[nodiscard]] std::vector<AwType> holding() const;
};

/// 1e-8 for analytic jets, 1e-5 for finite-difference jets.
[[nodiscard]] double default_aw_tolerance(JetKind kind) noexcept;

[[nodiscard]] AWReport classify(const CurveJet& c, std::span<const double> grid,
                                std::optional<double> tol = std::nullopt);

}  // namespace pgcurve
