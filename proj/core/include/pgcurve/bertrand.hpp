#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgcurve/curve.hpp"

namespace pgcurve {

enum class BertrandNature { CircularHelix, IsotropicCircle, NotBertrand };

[[nodiscard]] std::string_view to_string(BertrandNature n) noexcept;

/// Mate s -> gamma(s) + lambda N(s) at the same parameter. Orders 0..2 are
/// exact in the base jets; orders 3..4 are central differences of the exact
/// second derivative. Throws MateInadmissible when the mate's normal
/// projection degenerates on the domain.
[[nodiscard]] CurveJet bertrand_mate(const CurveJet& c, double lambda);

/// Offset by a parameter-dependent lambda(s); finite-difference jets.
[[nodiscard]] CurveJet offset_curve(const CurveJet& c, std::function<double(double)> lambda);

struct BertrandPair {
  CurveJet base;
  CurveJet mate;
  double lambda = 0.0;  // mean of the recovered offset
  double lambda_spread = 0.0;
  double K_sup = 0.0;
  double K_mate_sup = 0.0;
  double normal_parallel_sup = 0.0;
  double tangent_product_mean = 0.0;
  double tangent_product_var = 0.0;  // max - min of <T_mate, T>
  bool is_pair = false;
  BertrandNature nature = BertrandNature::NotBertrand;
  std::vector<std::string> diagnostics{};
};

/// Checks K = K_mate = 0, parallel normals, constant offset and constant
/// tangent product on the grid. lambda_fn, when given, must agree with the
/// recovered offset.
[[nodiscard]] BertrandPair verify_bertrand_pair(
    const CurveJet& base, const CurveJet& mate, std::span<const double> grid, double tol,
    std::optional<std::function<double(double)>> lambda_fn = std::nullopt);

/// CircularHelix for K = 0 and Tq constant non-zero, IsotropicCircle for
/// K = Tq = 0, NotBertrand otherwise.
[[nodiscard]] BertrandNature bertrand_nature(const CurveJet& c, std::span<const double> grid,
                                             double tol);

}  // namespace pgcurve
