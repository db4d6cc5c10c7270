#include <doctest.h>

#include <random>

#include "cylwig/field.hpp"
#include "cylwig/quadrature.hpp"
#include "cylwig/sinc.hpp"
#include "cylwig/star.hpp"
#include "cylwig/weyl.hpp"

using namespace cylwig;

namespace {

PhaseSpaceSymbol random_dyadic_symbol(std::mt19937_64& rng, int max_mode, int max_deg) {
    std::uniform_int_distribution<int> coeff(-16, 16);
    std::uniform_int_distribution<int> deg(0, max_deg);
    PhaseSpaceSymbol s;
    for (int k = -max_mode; k <= max_mode; ++k) {
        std::vector<cd> c(deg(rng) + 1);
        for (auto& v : c) v = cd(coeff(rng) / 8.0, coeff(rng) / 8.0);
        Polynomial p(std::move(c));
        if (!p.is_zero()) s.add_term(k, p);
    }
    return s;
}

}  // namespace

TEST_CASE("weyl symbol of elementary operators") {
    const int n_max = 10;
    const auto check_symbol = [&](const BandedOperator& a, const PhaseSpaceSymbol& expected) {
        const auto res = weyl_symbol(a, {});
        REQUIRE(res.exact());
        CHECK(res.symbol->max_coeff_distance(expected) == 0.0);
    };
    check_symbol(angular_momentum(n_max), PhaseSpaceSymbol::p_power(1));
    check_symbol(cos_operator(n_max), PhaseSpaceSymbol::cos_term(1));
    check_symbol(cos_k_operator(3, n_max), PhaseSpaceSymbol::cos_term(3));
    check_symbol(sin_k_operator(2, n_max), PhaseSpaceSymbol::sin_term(2));
    // L C -> p cos(t) + i (hbar/2) sin(t)
    const auto lc = op_mul(angular_momentum(n_max), cos_operator(n_max)).op;
    check_symbol(lc, PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5}));

    // hermitian operators produce real-valued symbols; LC does not
    const auto hs = weyl_symbol(hamiltonian(PendulumModel::pendulum(1.0, 2.0), n_max), {});
    REQUIRE(hs.exact());
    CHECK(hs.symbol->is_real_valued());
    const auto lcs = weyl_symbol(lc, {});
    REQUIRE(lcs.exact());
    CHECK_FALSE(lcs.symbol->is_real_valued());
    // value spot-checks on a random grid, against the trace evaluation
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 8; ++i) {
        const double th = u(rng) / 1.2, p = u(rng);
        CHECK(std::abs(lcs.symbol->eval(th, p) - (p * std::cos(th) + cd{0.0, 0.5} * std::sin(th))) < 1e-12);
        CHECK(std::abs(lcs.symbol->eval(th + kTwoPi, p) - lcs.symbol->eval(th, p)) < 1e-12);
    }
}

TEST_CASE("weyl quantization") {
    const int n_max = 8;
    // p^2 -> hbar^2 m^2 delta_mn
    const auto p2 = weyl_quantize(PhaseSpaceSymbol::p_power(2), n_max, 0.7);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n)
            CHECK(p2.entry(m, n) == (m == n ? cd{0.49 * m * m, 0.0} : cd{0.0, 0.0}));

    // cos theta -> 1/2 on the first off-diagonals
    const auto c = weyl_quantize(PhaseSpaceSymbol::cos_term(1), n_max, 1.0);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n)
            CHECK(c.entry(m, n) == cos_operator(n_max).entry(m, n));

    // p cos(t) + i/2 sin(t) quantizes to the LC band hbar (n+1)/2
    const auto lc_sym = PhaseSpaceSymbol::cos_term(1, 1) + PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5});
    const auto lc = weyl_quantize(lc_sym, n_max, 1.0);
    const auto lc_direct = op_mul(angular_momentum(n_max), cos_operator(n_max)).op;
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) CHECK(lc.entry(m, n) == lc_direct.entry(m, n));

    // round trips (dyadic data -> exact)
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        const PhaseSpaceSymbol s = random_dyadic_symbol(rng, 4, 4);
        const auto back = weyl_symbol(weyl_quantize(s, 12, 1.0), {});
        REQUIRE(back.exact());
        CHECK(back.symbol->max_coeff_distance(s) == 0.0);
    }

    // unstructured matrices fall back to a sampled symbol
    std::normal_distribution<double> gauss(0.0, 1.0);
    BandedOperator noisy(6, 2);
    for (int m = -6; m <= 6; ++m)
        for (int n = std::max(-6, m - 2); n <= std::min(6, m + 2); ++n) noisy.set_entry(m, n, cd{gauss(rng), gauss(rng)});
    const auto res = weyl_symbol(noisy, {.hbar = 1.0, .interior_margin = 0, .fit_tol = 1e-10, .max_degree = 4});
    CHECK_FALSE(res.exact());
    REQUIRE(res.sampled.has_value());
    // the sampled field matches the trace evaluation pointwise
    const auto& sg = res.sampled->grid;
    const std::size_t row = 3, col = 17;
    CHECK(std::abs(res.sampled->values[row * sg.pbar.size() + col] -
                   trace_symbol_eval(noisy, sg.theta[row], sg.pbar[col])) < 1e-12);
}

TEST_CASE("sinc moments against the regularized quadrature oracle") {
    CHECK(sinc_moment(0, 3.0) == 1.0);
    CHECK(sinc_moment(2, 4.0) == 16.0);
    CHECK(sinc_moment(1, 0.5) == 0.5);
    CHECK_THROWS_AS(sinc_moment(-1, 0.0), ParameterError);

    // Richardson-extrapolated eta sweep 1e-2 .. 1e-4
    const auto extrapolated = [](int j, double s) {
        const double i1 = sinc_moment_regularized(j, s, 1e-2);
        const double i2 = sinc_moment_regularized(j, s, 1e-3);
        const double i3 = sinc_moment_regularized(j, s, 1e-4);
        // I(eta) = I0 + c eta + O(eta^2): eliminate c from the last two
        (void)i1;
        return (10.0 * i3 - i2) / 9.0;
    };
    CHECK(extrapolated(1, 0.5) == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(extrapolated(0, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(extrapolated(2, 1.0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(extrapolated(3, -1.5) == doctest::Approx(-3.375).epsilon(1e-5));
}

TEST_CASE("product symbols and the convolution kernel") {
    const int n_max = 16;
    const auto l = angular_momentum(n_max);
    const auto c = cos_operator(n_max);
    const auto grid = PhaseSpaceGrid::interior(16, 3.0, 25);

    // 2pi tr[V L C] samples match p cos(theta) + i/2 sin(theta)
    const auto samples = product_symbol_samples(l, c, grid);
    double worst = 0.0;
    for (std::size_t r = 0; r < grid.theta.size(); ++r)
        for (std::size_t j = 0; j < grid.pbar.size(); ++j) {
            const cd expected = grid.pbar[j] * std::cos(grid.theta[r]) + cd{0.0, 0.5} * std::sin(grid.theta[r]);
            worst = std::max(worst, std::abs(samples[r * grid.pbar.size() + j] - expected));
        }
    CHECK(worst < 1e-10);  // interior grid keeps clear of the truncation edge

    // C L swaps the sign of the quantum part
    const auto samples_cl = product_symbol_samples(c, l, grid);
    worst = 0.0;
    for (std::size_t r = 0; r < grid.theta.size(); ++r)
        for (std::size_t j = 0; j < grid.pbar.size(); ++j) {
            const cd expected = grid.pbar[j] * std::cos(grid.theta[r]) - cd{0.0, 0.5} * std::sin(grid.theta[r]);
            worst = std::max(worst, std::abs(samples_cl[r * grid.pbar.size() + j] - expected));
        }
    CHECK(worst < 1e-10);

    // Smeared consistency of G_A: integrating G_L against cos(theta_1)
    // approximates the product symbol, better with a larger pbar window.
    const auto smeared = [&](double theta, double pbar, double window, int small_n_max) {
        BandedOperator lt = angular_momentum(small_n_max);
        const int nt = 4 * small_n_max + 3;
        cd acc = 0.0;
        for (int it = 0; it < nt; ++it) {
            const double t1 = -kPi + it * kTwoPi / nt;
            const auto inner = [&](double p1) { return convolution_kernel(lt, theta, pbar, t1, p1) * std::cos(t1); };
            acc += integrate_panels(inner, -window, window, static_cast<int>(4 * window), 6) * (kTwoPi / nt);
        }
        return acc;
    };
    const cd target = 0.8 * std::cos(0.5) + cd{0.0, 0.5} * std::sin(0.5);
    const double err_small = std::abs(smeared(0.5, 0.8, 6.0, 8) - target);
    const double err_large = std::abs(smeared(0.5, 0.8, 24.0, 8) - target);
    CHECK(err_large < err_small);
    CHECK(err_large < 0.05);

    // A = Identity: G reduces to the pair kernel delta(theta-theta1) sinc,
    // checked smeared against a band-limited test function.
    const auto smeared_identity = [&](double theta, double pbar, int small_n_max) {
        const BandedOperator ident = BandedOperator::identity(small_n_max);
        const int nt = 4 * small_n_max + 3;
        cd acc = 0.0;
        for (int it = 0; it < nt; ++it) {
            const double t1 = -kPi + it * kTwoPi / nt;
            const auto inner = [&](double p1) {
                return convolution_kernel(ident, theta, pbar, t1, p1) * (std::polar(1.0, t1) + 0.3) * sincpi(p1);
            };
            acc += integrate_panels(inner, -16.0, 16.0, 64, 6) * (kTwoPi / nt);
        }
        return acc;
    };
    const cd expected_id = (std::polar(1.0, 0.5) + 0.3) * sincpi(0.8);
    const double e16 = std::abs(smeared_identity(0.5, 0.8, 16) - expected_id);
    const double e32 = std::abs(smeared_identity(0.5, 0.8, 32) - expected_id);
    CHECK(e32 < e16);
    CHECK(e32 < 0.05);
}

TEST_CASE("triple trace") {
    const double mag = 4.0 / std::pow(kTwoPi, 3);
    CHECK(triple_trace(0.3, 1.0, 0.3, 1.0, 0.3, 1.0) == cd{mag, 0.0});
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (int i = 0; i < 12; ++i) {
        const double t0 = u(rng), p0 = u(rng), t1 = u(rng), p1 = u(rng), t2 = u(rng), p2 = u(rng);
        const cd v = triple_trace(t0, p0, t1, p1, t2, p2);
        CHECK(std::abs(v) == doctest::Approx(mag).epsilon(1e-14));
        // cyclic invariance
        CHECK(std::abs(v - triple_trace(t1, p1, t2, p2, t0, p0)) < 1e-15);
        CHECK(std::abs(v - triple_trace(t2, p2, t0, p0, t1, p1)) < 1e-15);
    }
}

TEST_CASE("star product") {
    const double hbar = 1.0;
    const auto p = PhaseSpaceSymbol::p_power(1);
    const auto cos1 = PhaseSpaceSymbol::cos_term(1);

    // p * cos t and cos t * p
    CHECK(star(p, cos1, hbar).max_coeff_distance(PhaseSpaceSymbol::cos_term(1, 1) +
                                                 PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5})) == 0.0);
    CHECK(star(cos1, p, hbar).max_coeff_distance(PhaseSpaceSymbol::cos_term(1, 1) +
                                                 PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, -0.5})) == 0.0);
    // classical limit
    CHECK(star(p, cos1, 0.0).max_coeff_distance(p.pointwise_product(cos1)) == 0.0);

    std::mt19937_64 rng(53);
    for (int i = 0; i < 25; ++i) {
        const auto a = random_dyadic_symbol(rng, 3, 3);
        const auto b = random_dyadic_symbol(rng, 3, 3);
        const auto c = random_dyadic_symbol(rng, 2, 2);
        // associativity, exact
        CHECK(star(star(a, b, hbar), c, hbar).max_coeff_distance(star(a, star(b, c, hbar), hbar)) == 0.0);
        // conj(A*B) = conj(B)*conj(A)
        CHECK(star(a, b, hbar).conjugated().max_coeff_distance(star(b.conjugated(), a.conjugated(), hbar)) == 0.0);
        // commutator + anticommutator = 2 star
        const auto sum = star_commutator(a, b, hbar) + star_anticommutator(a, b, hbar);
        CHECK(sum.max_coeff_distance(star(a, b, hbar).scaled(2.0)) == 0.0);
        // star(A, A) commutator vanishes
        CHECK(star_commutator(a, a, hbar).is_zero());
    }
}

TEST_CASE("hbar expansion of the star product") {
    const auto p = PhaseSpaceSymbol::p_power(1);
    const auto cos1 = PhaseSpaceSymbol::cos_term(1);
    const auto orders = hbar_expansion(p, cos1, 3);
    CHECK(orders[0].max_coeff_distance(p.pointwise_product(cos1)) == 0.0);
    CHECK(orders[1].max_coeff_distance(PhaseSpaceSymbol::sin_term(1, 0, cd{0.0, 0.5})) == 0.0);
    CHECK(orders[2].is_zero());
    CHECK(orders[3].is_zero());

    // (p^2, cos t): terminates at hbar^2
    const auto p2 = PhaseSpaceSymbol::p_power(2);
    const auto orders2 = hbar_expansion(p2, cos1, 5);
    CHECK_FALSE(orders2[2].is_zero());
    for (int r = 3; r <= 5; ++r) CHECK(orders2[r].is_zero());

    // partial sums reassemble star(a,b) at a given hbar
    std::mt19937_64 rng(67);
    const auto a = random_dyadic_symbol(rng, 2, 3);
    const auto b = random_dyadic_symbol(rng, 2, 3);
    const int order = a.max_degree() + b.max_degree() + 1;
    const auto coeffs = hbar_expansion(a, b, order);
    const double h = 0.5;
    PhaseSpaceSymbol sum;
    double hp = 1.0;
    for (int r = 0; r <= order; ++r) {
        sum = sum + coeffs[r].scaled(hp);
        hp *= h;
    }
    CHECK(sum.max_coeff_distance(star(a, b, h)) < 1e-14);

    // parity split: commutator odd in hbar, anticommutator even
    const auto comm = hbar_expansion(a, b, order);
    const auto flip = hbar_expansion(b, a, order);
    for (int r = 0; r <= order; ++r) {
        const auto diff = comm[r] - flip[r];   // -> commutator coefficient
        const auto sum2 = comm[r] + flip[r];   // -> anticommutator coefficient
        if (r % 2 == 0)
            CHECK(diff.is_zero());
        else
            CHECK(sum2.is_zero());
    }
}

TEST_CASE("reproducing identity for band-limited symbols") {
    // (1/pi) ∫dpbar1 ∫dalpha A(theta, p1) e^{-2i(p1-p)alpha} = A(theta, p)
    // for a sinc-class symbol A(theta, p) = e^{i theta} sinc(pi(pbar - 1/2)).
    const double pbar = 0.8;
    const auto inner = [&](double p1) {
        const auto alpha_int = [&](double al) { return std::polar(1.0, -2.0 * (p1 - pbar) * al); };
        return sincpi(p1 - 0.5) * integrate_panels(alpha_int, -kPi, kPi, 24, 8);
    };
    const cd value = integrate_panels(inner, -40.0, 40.0, 320, 8) / kPi;
    CHECK(value.real() == doctest::Approx(sincpi(pbar - 0.5)).epsilon(1e-4));
    CHECK(std::abs(value.imag()) < 1e-6);
}
