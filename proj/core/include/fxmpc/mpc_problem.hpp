#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fxmpc/control_model.hpp"

namespace fxmpc {

using Matrix3 = Eigen::Matrix3d;

/// Horizons and weights of the tracking problem. Decision variables are the
/// input moves du_k and (when virtual_vars is set) the auxiliary vectors
/// xt_k that let the optimizer trade tracking error against an artificial
/// target. Both du and xt are held at their last value for k >= Nc.
struct MpcConfig {
    int N = 10;              // prediction horizon
    int Nc = 2;              // control horizon
    Matrix6 Q1 = Matrix6::Zero();  // tracking weight on (x_k - xt_k) - r
    Matrix6 Q2 = Matrix6::Zero();  // magnitude weight on xt_k
    Matrix3 R = Matrix3::Zero();   // weight on du_k
    Matrix6 Pf = Matrix6::Zero();  // terminal weight on x_N - r
    double Ts = 0.5;
    bool virtual_vars = true; // false gives the standard tracking baseline

    void validate() const;
};

/// One group of polytopic rows lo <= Cx*x_k + Du*u_k <= hi applied at the
/// prediction steps [first_step, last_step]. When on_rate is set the rows
/// read lo <= Du*du_k <= hi instead and are clipped to the control horizon.
struct ConstraintBlock {
    Eigen::MatrixXd Cx; // rows x 6
    Eigen::MatrixXd Du; // rows x 3
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;
    bool on_rate = false;
    int first_step = 0;
    int last_step = 0; // inclusive
};

/// Constraint description for the whole horizon, assembled from blocks.
struct ConstraintSpec {
    std::vector<ConstraintBlock> blocks;

    /// u_k within [lo, hi] for k = 0..Nc-1.
    static ConstraintBlock input_bounds(const Vector3& lo, const Vector3& hi, int Nc);
    /// du_k within [lo, hi] for k = 0..Nc-1.
    static ConstraintBlock rate_bounds(const Vector3& lo, const Vector3& hi, int Nc);
    /// Attitude angles within [lo, hi] for k = 0..N-1.
    static ConstraintBlock attitude_bounds(const Vector3& lo, const Vector3& hi, int N);
    /// Wheel speeds within [lo, hi] for k = 0..N-1.
    static ConstraintBlock wheel_speed_bounds(const Vector3& lo, const Vector3& hi, int N);
};

/// Dense condensed QP
///   min 1/2 z'Hz + h'z   s.t.  D z <= d
/// with the predicted states eliminated through the dynamics. h and d are
/// affine in the measured state x(t), the lifted reference r(t) and the
/// previously applied input u(t-1); the maps below produce them per sample.
struct CondensedQp {
    Eigen::MatrixXd H; // n x n, positive definite
    Eigen::MatrixXd D; // m x n

    // h(x, r, u_prev) = Hx*x + Hr*r + Hu*u_prev
    Eigen::MatrixXd h_x; // n x 6
    Eigen::MatrixXd h_r; // n x 6
    Eigen::MatrixXd h_u; // n x 3

    // d(x, u_prev) = d0 + Dx*x + Dup*u_prev
    Eigen::VectorXd d0;  // m
    Eigen::MatrixXd d_x; // m x 6
    Eigen::MatrixXd d_u; // m x 3

    int n = 0;  // primal variables: Nc*3 (+ Nc*6 with virtual vars)
    int m = 0;  // constraint rows
    int N = 0;
    int Nc = 0;
    bool virtual_vars = true;
};

/// Terminal weight from the discrete algebraic Riccati equation for
/// (A, B, Q1, R), solved by the Riccati recursion. The residual is checked
/// to 1e-8 * |Pf|_inf; ConvergenceError otherwise.
Matrix6 terminal_weight_dare(const DiscreteModel& model, const Matrix6& Q1,
                             const Matrix3& R);

/// Eliminates the predicted states and assembles (H, D) plus the parametric
/// maps for (h, d). Throws DimensionError on inconsistent block shapes.
CondensedQp condense(const DiscreteModel& model, const MpcConfig& cfg,
                     const ConstraintSpec& cons);

/// Applies the parametric maps for one sample.
std::pair<Eigen::VectorXd, Eigen::VectorXd> update_qp_vectors(
    const CondensedQp& qp, const Vector6& x, const Vector6& r_tilde,
    const Vector3& u_prev);

/// External integrator on the attitude reference: the reference handed to
/// the controller is the true reference minus the accumulated tracking
/// error, which cancels constant offsets without growing the QP.
class ReferenceGovernor {
public:
    ReferenceGovernor(double Ts, const Vector3& windup_limit)
        : Ts_(Ts), windup_limit_(windup_limit) {}

    /// Accumulates Ts*(attitude - r_bar) with clamping anti-windup, then
    /// returns r_bar minus the accumulated error. Call once per sample.
    Vector3 update(const Vector3& attitude, const Vector3& r_bar);

    const Vector3& accumulated_error() const { return accumulated_error_; }
    void reset() { accumulated_error_.setZero(); }

private:
    double Ts_;
    Vector3 windup_limit_;
    Vector3 accumulated_error_ = Vector3::Zero();
};

/// Lifts the governed attitude reference to the model state: wheel-speed
/// reference components are zero (momentum-neutral target).
Vector6 lift_reference(const Vector3& r);

/// First input move applied to the plant: u = u_prev + du_0.
Vector3 extract_control(const Eigen::VectorXd& z_star, const Vector3& u_prev);

} // namespace fxmpc
