#include <aoisched/bounds.hpp>

#include <aoisched/error.hpp>
#include <aoisched/fractional.hpp>
#include <aoisched/textio.hpp>

#include <algorithm>
#include <cmath>

namespace aoisched {

namespace {

void check_costs(double c_min, double c_max) {
    require(c_min > 0.0 && c_min <= c_max && std::isfinite(c_max), ErrorCode::InvalidArgument,
            "need 0 < C_m <= C_M");
}

void check_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        fail(ErrorCode::LambdaOutOfRange, "lambda = " + textio::format_double(lambda));
}

} // namespace

double exp_ratio(double x) { return -1.0 / std::expm1(-x); }

BoundValues cr_bound(double c_min, double c_max) {
    check_costs(c_min, c_max);
    const double theta = theta_power(c_max, c_min);
    BoundValues b;
    b.finite_ratio = (1.0 + 1.0 / c_min) * (1.0 + 1.0 / theta);
    b.asymptotic_ratio = exp_ratio(c_min / c_max);
    b.inputs = {c_min, c_max, 1.0, 0.0, 0.0};
    return b;
}

MlBounds ml_bounds(double c_min, double c_max, double lambda) {
    check_costs(c_min, c_max);
    check_lambda(lambda);
    const double theta_f = theta_power(c_max, c_min * lambda);
    const double theta_s = theta_power(c_max, c_min / lambda);
    const double inv_r = c_min / c_max;
    const BoundInputs in{c_min, c_max, lambda, 0.0, 0.0};

    MlBounds out;
    out.robustness.finite_ratio = (1.0 + 1.0 / c_min) * (1.0 + 1.0 / theta_f);
    out.robustness.asymptotic_ratio = exp_ratio(lambda * inv_r);
    out.robustness.inputs = in;
    out.consistency.finite_ratio =
        std::max(1.0 + 1.0 / theta_s, std::ceil(c_min * lambda) / c_min * (1.0 + 1.0 / theta_f));
    out.consistency.asymptotic_ratio = lambda * exp_ratio(lambda * inv_r);
    out.consistency.inputs = in;
    return out;
}

BoundValues intermittent_bound(double c_min, double c_max, double delta_a_max, double t_off) {
    check_costs(c_min, c_max);
    require(delta_a_max >= 0.0 && t_off >= 0.0, ErrorCode::InvalidArgument,
            "ΔA_M and T_OFF must be nonnegative");
    const double theta = theta_power(c_max, c_min);
    const double k = 2.0 * std::ceil(std::sqrt(delta_a_max * c_min)) * t_off;
    BoundValues b;
    b.finite_ratio = std::exp((1.0 + k) * std::log1p(1.0 / c_min)) * (1.0 + 1.0 / theta) + k / c_min;
    b.asymptotic_ratio = exp_ratio(c_min / c_max);
    b.inputs = {c_min, c_max, 1.0, delta_a_max, t_off};
    return b;
}

BoundValues revised_bound(double c_min, double c_max) {
    check_costs(c_min, c_max);
    const double theta = theta_power(c_max, c_max);
    BoundValues b;
    b.finite_ratio = (c_max + 1.0) / c_min * (1.0 + 1.0 / theta);
    b.asymptotic_ratio = exp_ratio(1.0) * (c_max / c_min);
    b.inputs = {c_min, c_max, 1.0, 0.0, 0.0};
    return b;
}

double adaptive_preconstant(std::int64_t t_est, double delta_e_max, double e_min) {
    require(t_est >= 1 && delta_e_max >= 0.0 && e_min > 0.0, ErrorCode::InvalidArgument,
            "need T_est >= 1, ΔE_M >= 0, E_m > 0");
    return 1.0 + static_cast<double>(t_est - 1) * delta_e_max / e_min;
}

} // namespace aoisched
