#include "fxmpc/spacecraft_dynamics.hpp"

#include <cmath>
#include <numbers>

namespace fxmpc {

void InertiaParams::validate() const {
    for (int i = 0; i < 3; ++i) {
        if (!(Jw[i] > 0.0))
            throw ParameterError("InertiaParams: wheel inertia must be positive");
        if (!(J[i] > Jw[i]))
            throw ParameterError("InertiaParams: spacecraft inertia must exceed wheel inertia");
    }
}

Vector9 PlantState::as_vector() const {
    Vector9 v;
    v << attitude, omega, wheel_speed;
    return v;
}

PlantState PlantState::from_vector(const Vector9& v) {
    PlantState s;
    s.attitude = v.segment<3>(0);
    s.omega = v.segment<3>(3);
    s.wheel_speed = v.segment<3>(6);
    return s;
}

bool PlantState::all_finite() const { return as_vector().allFinite(); }

Vector9 plant_derivative(const PlantState& x, const ControlInput& input,
                         const InertiaParams& params, const Vector3& disturbance,
                         double gimbal_guard) {
    const double phi = x.attitude[0];
    const double theta = x.attitude[1];

    if (std::abs(theta) >= std::numbers::pi / 2.0 - gimbal_guard)
        throw GimbalLockError("pitch angle at kinematic singularity guard");

    const double cphi = std::cos(phi), sphi = std::sin(phi);
    const double cth = std::cos(theta), sth = std::sin(theta);

    const Vector3& w = x.omega;
    const Vector3& a = x.wheel_speed;
    const Vector3& J = params.J;
    const Vector3& Jw = params.Jw;
    const Vector3& u = input.u;

    Vector9 dx;
    // Euler-angle kinematics (3-2-1 sequence).
    dx[0] = (cth * w[0] + sphi * sth * w[1] + cphi * sth * w[2]) / cth;
    dx[1] = (cphi * cth * w[1] - sphi * cth * w[2]) / cth;
    dx[2] = (sphi * w[1] + cphi * w[2]) / cth;
    // Body rate dynamics: gyroscopic torque, wheel cross-coupling, motor
    // reaction, and optional constant disturbance torque.
    dx[3] = ((J[1] - J[2]) * w[1] * w[2] - Jw[0] * (a[2] * w[1] - a[1] * w[2]) - u[0] +
             disturbance[0]) /
            (J[0] + Jw[0]);
    dx[4] = ((J[2] - J[0]) * w[0] * w[2] - Jw[1] * (a[0] * w[2] - a[2] * w[0]) - u[1] +
             disturbance[1]) /
            (J[1] + Jw[1]);
    dx[5] = ((J[0] - J[1]) * w[0] * w[1] - Jw[2] * (a[1] * w[0] - a[0] * w[1]) - u[2] +
             disturbance[2]) /
            (J[2] + Jw[2]);
    // Wheel accelerations driven directly by the motor torques.
    dx[6] = u[0] / Jw[0];
    dx[7] = u[1] / Jw[1];
    dx[8] = u[2] / Jw[2];
    return dx;
}

PlantState integrate_step(const PlantState& x, const ControlInput& u,
                          const InertiaParams& params, double dt,
                          const Vector3& disturbance, double gimbal_guard) {
    const Vector9 x0 = x.as_vector();
    auto f = [&](const Vector9& v) {
        return plant_derivative(PlantState::from_vector(v), u, params, disturbance,
                                gimbal_guard);
    };
    const Vector9 k1 = f(x0);
    const Vector9 k2 = f(x0 + 0.5 * dt * k1);
    const Vector9 k3 = f(x0 + 0.5 * dt * k2);
    const Vector9 k4 = f(x0 + dt * k3);
    return PlantState::from_vector(x0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

} // namespace fxmpc
