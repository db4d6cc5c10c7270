#pragma once

#include <functional>
#include <vector>

#include "cylwig/common.hpp"

namespace cylwig {

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    static const GaussLegendre& get(int n);
};

/// Composite Gauss-Legendre over [a, b] split into equal panels.
cd integrate_panels(const std::function<cd(double)>& f, double a, double b, int panels, int nodes_per_panel = 8);

/// Periodic trapezoid over [-pi, pi) with n uniform nodes (endpoint-exclusive);
/// exact for trigonometric polynomials of degree < n.
cd integrate_periodic(const std::function<cd(double)>& f, int n);

/// Finite-window quadrature of  ∫ sinc(pi(x-a)) sinc(pi(x-b)) dx  plus the
/// analytic DC tail correction from the 1/x^2 envelope of the product.
double sinc_pair_quadrature(double a, double b, double window = 256.0, int nodes_per_unit = 8);

/// Gaussian-regularized moment  ∫ pbar^j sinc(pi(pbar-s)) e^{-eta pbar^2} dpbar.
double sinc_moment_regularized(int j, double s, double eta);

}  // namespace cylwig
