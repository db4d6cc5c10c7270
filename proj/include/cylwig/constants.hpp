#pragma once

#include <vector>

#include "cylwig/common.hpp"

namespace cylwig {

/// One Fourier mode of a real 2pi-periodic potential:
/// U_k(theta) = a_cos * cos(k theta) + b_sin * sin(k theta).
struct PotentialMode {
    int k = 1;
    double a_cos = 0.0;
    double b_sin = 0.0;
};

/// Physical data of a rotor Hamiltonian H = gamma L^2 + U(theta) with
/// gamma = 1/(2 m r0^2). hbar is a runtime parameter so classical-limit
/// sweeps are a plain loop.
class PendulumModel {
public:
    PendulumModel(double inertia, std::vector<PotentialMode> modes, double hbar = 1.0)
        : hbar_(hbar), inertia_(inertia), modes_(std::move(modes)) {
        if (hbar_ <= 0.0) throw ParameterError("hbar must be positive");
        if (inertia_ <= 0.0) throw ParameterError("moment of inertia must be positive");
        for (const auto& m : modes_) {
            if (m.k < 1) throw ParameterError("potential mode index must be >= 1");
        }
    }

    /// U(theta) = -amplitude * cos(k theta); the classic pendulum is k = 1.
    static PendulumModel pendulum(double inertia, double amplitude, double hbar = 1.0, int k = 1) {
        return PendulumModel(inertia, {{k, -amplitude, 0.0}}, hbar);
    }

    static PendulumModel free_rotor(double inertia, double hbar = 1.0) {
        return PendulumModel(inertia, {}, hbar);
    }

    double hbar() const { return hbar_; }
    double inertia() const { return inertia_; }
    double gamma() const { return 1.0 / (2.0 * inertia_); }
    const std::vector<PotentialMode>& modes() const { return modes_; }

    /// Pendulum amplitude A for a single-mode cosine potential U = -A cos(k theta).
    double cosine_amplitude() const {
        return modes_.size() == 1 && modes_[0].b_sin == 0.0 ? -modes_[0].a_cos : 0.0;
    }

    double potential(double theta) const;
    double potential_gradient(double theta) const;

private:
    double hbar_;
    double inertia_;
    std::vector<PotentialMode> modes_;
};

}  // namespace cylwig
