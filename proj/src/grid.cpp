#include "cylwig/grid.hpp"

namespace cylwig {

namespace {

std::vector<double> pbar_axis(double pbar_max, int n_pbar) {
    if (n_pbar < 2) throw ParameterError("pbar axis needs at least 2 nodes");
    if (pbar_max <= 0.0) throw ParameterError("pbar window must be positive");
    std::vector<double> p(n_pbar);
    const double h = 2.0 * pbar_max / (n_pbar - 1);
    for (int i = 0; i < n_pbar; ++i) p[i] = -pbar_max + i * h;
    return p;
}

}  // namespace

PhaseSpaceGrid PhaseSpaceGrid::uniform(int n_theta, double pbar_max, int n_pbar) {
    if (n_theta < 1) throw ParameterError("theta axis needs at least 1 node");
    PhaseSpaceGrid g;
    g.theta.resize(n_theta);
    const double h = kTwoPi / n_theta;
    for (int i = 0; i < n_theta; ++i) g.theta[i] = -kPi + i * h;
    g.pbar = pbar_axis(pbar_max, n_pbar);
    return g;
}

PhaseSpaceGrid PhaseSpaceGrid::interior(int n_theta, double pbar_max, int n_pbar) {
    PhaseSpaceGrid g = uniform(n_theta, pbar_max, n_pbar);
    const double h = kTwoPi / n_theta;
    for (double& t : g.theta) t += 0.5 * h;
    return g;
}

double PhaseSpaceGrid::theta_step() const {
    return theta.size() > 1 ? theta[1] - theta[0] : kTwoPi;
}

double PhaseSpaceGrid::pbar_step() const {
    return pbar.size() > 1 ? pbar[1] - pbar[0] : 0.0;
}

}  // namespace cylwig
