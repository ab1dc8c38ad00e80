#include "fxmpc/control_model.hpp"

namespace fxmpc {

LinearModel build_continuous_model(const InertiaParams& params) {
    params.validate();
    LinearModel m;
    m.Ac.setZero();
    m.Bc.setZero();
    for (int i = 0; i < 3; ++i) {
        const double J = params.J[i];
        const double Jw = params.Jw[i];
        m.Ac(i, 3 + i) = -Jw / J;
        m.Bc(3 + i, i) = J / (J * Jw - Jw * Jw);
    }
    return m;
}

DiscreteModel discretize_zoh(const LinearModel& m, double Ts) {
    if (!(Ts > 0.0)) throw ParameterError("discretize_zoh: Ts must be positive");
    DiscreteModel d;
    d.Ts = Ts;
    d.A = Matrix6::Identity() + Ts * m.Ac;
    d.B = Ts * m.Bc + (Ts * Ts / 2.0) * (m.Ac * m.Bc);
    return d;
}

} // namespace fxmpc
