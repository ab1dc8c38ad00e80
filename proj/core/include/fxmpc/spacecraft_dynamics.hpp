#pragma once

#include <Eigen/Dense>

#include "fxmpc/errors.hpp"

namespace fxmpc {

using Vector3 = Eigen::Vector3d;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Vector9 = Eigen::Matrix<double, 9, 1>;

/// Principal spacecraft inertias and wheel inertias (kg m^2).
/// Each axis must satisfy J_i > Jw_i > 0 so the reduced-model input gain
/// J_i / (J_i*Jw_i - Jw_i^2) stays finite and positive.
struct InertiaParams {
    Vector3 J = Vector3(3000.0, 1500.0, 2000.0);
    Vector3 Jw = Vector3(50.0, 50.0, 50.0);

    void validate() const; // throws ParameterError
};

/// Wheel motor torques (N m).
struct ControlInput {
    Vector3 u = Vector3::Zero();
};

/// Ninth-order plant state: Euler angles, body angular rates, wheel speeds.
struct PlantState {
    Vector3 attitude = Vector3::Zero();    // roll, pitch, yaw (rad)
    Vector3 omega = Vector3::Zero();       // body rates (rad/s)
    Vector3 wheel_speed = Vector3::Zero(); // wheel rates (rad/s)

    Vector9 as_vector() const;
    static PlantState from_vector(const Vector9& v);

    bool all_finite() const;
};

/// Pitch values with |theta| >= pi/2 - guard are rejected as gimbal lock.
inline constexpr double kDefaultGimbalGuard = 1e-3;

/// State rates of the full nonlinear plant, gyroscopic and wheel-coupling
/// terms included. `disturbance` is a constant body torque (N m) added on
/// the rate equations. Throws GimbalLockError near the pitch singularity.
Vector9 plant_derivative(const PlantState& x, const ControlInput& u,
                         const InertiaParams& params,
                         const Vector3& disturbance = Vector3::Zero(),
                         double gimbal_guard = kDefaultGimbalGuard);

/// One classical RK4 step of length dt with u held constant (zero-order
/// hold). Local truncation error O(dt^5).
PlantState integrate_step(const PlantState& x, const ControlInput& u,
                          const InertiaParams& params, double dt,
                          const Vector3& disturbance = Vector3::Zero(),
                          double gimbal_guard = kDefaultGimbalGuard);

} // namespace fxmpc
