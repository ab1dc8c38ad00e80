#pragma once

#include <Eigen/Dense>

#include "fxmpc/spacecraft_dynamics.hpp"

namespace fxmpc {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Matrix63 = Eigen::Matrix<double, 6, 3>;

/// Continuous-time reduced model with state (roll, pitch, yaw, wheel rates).
/// Ac couples wheel rates into attitude rates via -Jw_i/J_i and is nilpotent
/// of index 2; Bc carries the wheel acceleration gains J/(J*Jw - Jw^2).
struct LinearModel {
    Matrix6 Ac;
    Matrix63 Bc;
};

/// Exact zero-order-hold discretization of LinearModel at period Ts.
struct DiscreteModel {
    Matrix6 A;
    Matrix63 B;
    double Ts = 0.5;
};

/// Builds the reduced continuous model from the inertias.
/// Throws ParameterError when J_i <= Jw_i for any axis.
LinearModel build_continuous_model(const InertiaParams& params);

/// Exact ZOH discretization; Ac*Ac = 0 truncates the exponential series, so
/// A = I + Ts*Ac and B = Ts*Bc + (Ts^2/2)*Ac*Bc with no numerical tolerance.
DiscreteModel discretize_zoh(const LinearModel& m, double Ts);

} // namespace fxmpc
