#pragma once

#include <cstdint>
#include <string>

namespace aoisched {

struct BoundInputs {
    double c_min = 1.0;
    double c_max = 1.0;
    double lambda = 1.0;
    double delta_a_max = 0.0;
    double t_off = 0.0;
};

struct BoundValues {
    double finite_ratio = 1.0;
    double asymptotic_ratio = 1.0;
    BoundInputs inputs;
};

/// e^{x}/(e^{x} − 1), written as 1/(1 − e^{−x}) to stay accurate for small x.
double exp_ratio(double x);

/// (1+1/C_m)(1 + 1/θ) with θ = (1+1/C_M)^{C_m} − 1; asymptotically e^{1/R}/(e^{1/R} − 1).
BoundValues cr_bound(double c_min, double c_max);

struct MlBounds {
    BoundValues robustness;
    BoundValues consistency;
};

/// Robustness (1+1/C_m)(1+1/θ_f); consistency
/// max{1 + 1/θ_s, (⌈C_m λ⌉/C_m)(1 + 1/θ_f)}. Throws LambdaOutOfRange.
MlBounds ml_bounds(double c_min, double c_max, double lambda);

/// Finite bound for intermittent opportunities with k = 2⌈√(ΔA_M C_m)⌉:
/// (1+1/C_m)^{1 + k·T_OFF}(1 + 1/θ) + k·T_OFF/C_m.
BoundValues intermittent_bound(double c_min, double c_max, double delta_a_max, double t_off);

/// ((C_M+1)/C_m)(1 + 1/θ') with θ' = (1+1/C_M)^{C_M} − 1; asymptotically (e/(e−1))·R.
BoundValues revised_bound(double c_min, double c_max);

/// 1 + (T_est − 1)·ΔE_M/E_m.
double adaptive_preconstant(std::int64_t t_est, double delta_e_max, double e_min);

} // namespace aoisched
