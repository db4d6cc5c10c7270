#include "cylwig/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cylwig/sinc.hpp"

namespace cylwig {

namespace {

GaussLegendre compute_gl(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Chebyshev-based initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.weights[n - 1 - i] = gl.weights[i];
    }
    return gl;
}

}  // namespace

const GaussLegendre& GaussLegendre::get(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

cd integrate_panels(const std::function<cd(double)>& f, double a, double b, int panels, int nodes_per_panel) {
    const auto& gl = GaussLegendre::get(nodes_per_panel);
    const double h = (b - a) / panels;
    cd acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        cd local = 0.0;
        for (int i = 0; i < nodes_per_panel; ++i) local += gl.weights[i] * f(mid + 0.5 * h * gl.nodes[i]);
        acc += 0.5 * h * local;
    }
    return acc;
}

cd integrate_periodic(const std::function<cd(double)>& f, int n) {
    const double h = kTwoPi / n;
    cd acc = 0.0;
    for (int i = 0; i < n; ++i) acc += f(-kPi + i * h);
    return acc * h;
}

double sinc_pair_quadrature(double a, double b, double window, int nodes_per_unit) {
    const auto f = [&](double x) { return cd(sincpi(x - a) * sincpi(x - b), 0.0); };
    const int panels = static_cast<int>(std::ceil(2.0 * window));
    const double main = integrate_panels(f, -window, window, panels, nodes_per_unit).real();

    // Tail: sin(pi(x-a))sin(pi(x-b)) = [cos(pi(a-b)) - cos(pi(2x-a-b))]/2.
    // The oscillatory half integrates to O(1/window^2); keep the DC part.
    const double dc = 0.5 * cospi(a - b) / (kPi * kPi);
    double tail;
    if (a == b) {
        tail = dc * (1.0 / (window - a) + 1.0 / (window + a));
    } else {
        tail = dc / (a - b) * (std::log((window - b) / (window - a)) + std::log((window + a) / (window + b)));
    }
    return main + tail;
}

double sinc_moment_regularized(int j, double s, double eta) {
    if (j < 0) throw ParameterError("moment order must be >= 0");
    if (eta <= 0.0) throw ParameterError("regularization eta must be positive");
    const double window = std::sqrt(42.0 / eta) + std::abs(s) + 1.0;
    const auto f = [&](double x) { return cd(std::pow(x, j) * sincpi(x - s) * std::exp(-eta * x * x), 0.0); };
    const int panels = static_cast<int>(std::ceil(2.0 * window));
    return integrate_panels(f, -window, window, panels, 8).real();
}

}  // namespace cylwig
