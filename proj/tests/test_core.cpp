#include <doctest.h>

#include <random>

#include "cylwig/banded_operator.hpp"
#include "cylwig/quadrature.hpp"
#include "cylwig/sinc.hpp"
#include "cylwig/wave_function.hpp"

using namespace cylwig;

TEST_CASE("sinc value and low-order derivatives") {
    CHECK(sinc_eval(0.0) == 1.0);
    CHECK(sinc_eval(kPi) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sinc_eval(1.3) == doctest::Approx(std::sin(1.3) / 1.3).epsilon(1e-15));
    CHECK(sinc_deriv(0.0, 1) == 0.0);
    CHECK(sinc_deriv(0.0, 2) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(sinc_deriv(1.0, 4), ParameterError);
    CHECK_THROWS_AS(sinc_deriv(1.0, -1), ParameterError);

    // derivative vs central difference, away from the switch radius
    for (double x : {0.3, 2.0, 7.5, 20.0}) {
        const double h = 1e-5;
        const double fd = (sinc_eval(x + h) - sinc_eval(x - h)) / (2 * h);
        CHECK(sinc_deriv(x, 1) == doctest::Approx(fd).epsilon(1e-8));
    }
    // high orders stay bounded by 1/(order+1)
    for (int order : {5, 9, 13})
        for (double x : {0.1, 0.9, 3.0, 12.0}) CHECK(std::abs(detail::sinc_deriv_any(x, order)) <= 1.0 / (order + 1) + 1e-12);
}

TEST_CASE("series/closed-form agreement across the switch radius") {
    for (int order = 0; order <= 13; ++order) {
        const double r = std::max(1.0, 0.75 * order);
        for (double x : {r * 0.999, r * 1.001}) {
            const double lo = detail::sinc_deriv_any(x * 0.9999, order);
            const double hi = detail::sinc_deriv_any(x * 1.0001, order);
            CHECK(lo == doctest::Approx(hi).epsilon(5e-3));  // continuity across the branch
        }
    }
}

TEST_CASE("sinpi/cospi lattice exactness") {
    CHECK(sinpi(3.0) == 0.0);
    CHECK(sinpi(-12.0) == 0.0);
    CHECK(cospi(0.5) == 0.0);
    CHECK(cospi(7.5) == 0.0);
    CHECK(sinpi(0.5) == 1.0);
    CHECK(sinpi(2.5) == 1.0);
    CHECK(cospi(1.0) == -1.0);
    CHECK(sincpi(5.0) == 0.0);
    CHECK(sincpi(0.0) == 1.0);
    CHECK(sinpi(1234567.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("sinc orthonormality: closed form and regularized quadrature") {
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            const double expected = m == n ? 1.0 : 0.0;
            CHECK(sincpi(static_cast<double>(m - n)) == expected);  // theta-representation identity
            CHECK(sinc_pair_quadrature(m, n) == doctest::Approx(expected).epsilon(1e-6));
        }
    CHECK(sinc_pair_quadrature(0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("inner product and evaluation") {
    const int n_max = 6;
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
            const cd ip = inner_product(WaveFunction::basis(m, n_max), WaveFunction::basis(n, n_max));
            CHECK(ip == (m == n ? cd{1.0, 0.0} : cd{0.0, 0.0}));
        }

    std::mt19937_64 rng(7);
    const WaveFunction psi = WaveFunction::random(n_max, rng);
    CHECK(inner_product(psi, psi).real() == doctest::Approx(1.0).epsilon(1e-14));

    WaveFunction plus(n_max), minus(n_max);
    plus.set_coeff(0, 1 / std::sqrt(2.0));
    plus.set_coeff(1, 1 / std::sqrt(2.0));
    minus.set_coeff(0, 1 / std::sqrt(2.0));
    minus.set_coeff(1, -1 / std::sqrt(2.0));
    CHECK(std::abs(inner_product(minus, plus)) == doctest::Approx(0.0).epsilon(1e-15));

    CHECK(WaveFunction::basis(0, 3).evaluate(1.234) == cd{1.0, 0.0});
    CHECK(WaveFunction::basis(1, 3).evaluate(kPi / 2).imag() == doctest::Approx(1.0).epsilon(1e-15));
    WaveFunction cosine(3);
    cosine.set_coeff(1, 1 / std::sqrt(2.0));
    cosine.set_coeff(-1, 1 / std::sqrt(2.0));
    for (double phi : {0.1, 2.5, -1.9}) {
        CHECK(cosine.evaluate(phi).real() == doctest::Approx(std::sqrt(2.0) * std::cos(phi)).epsilon(1e-13));
        CHECK(std::abs(cosine.evaluate(phi + kTwoPi) - cosine.evaluate(phi)) < 1e-12);
    }

    // conjugate symmetry of the inner product
    const WaveFunction chi = WaveFunction::random(n_max, rng);
    CHECK(std::abs(inner_product(psi, chi) - std::conj(inner_product(chi, psi))) < 1e-15);
}

TEST_CASE("standard operator matrix elements") {
    const int n_max = 5;
    const auto c = cos_operator(n_max);
    CHECK(c.entry(0, 1) == cd{0.5, 0.0});
    CHECK(c.entry(1, 0) == cd{0.5, 0.0});
    CHECK(c.entry(0, -1) == cd{0.5, 0.0});
    CHECK(c.entry(-1, 0) == cd{0.5, 0.0});
    CHECK(c.entry(0, 0) == cd{0.0, 0.0});
    CHECK(c.entry(2, 0) == cd{0.0, 0.0});

    const auto l = angular_momentum(n_max, 0.7);
    for (int m = -n_max; m <= n_max; ++m) CHECK(l.entry(m, m) == cd{0.7 * m, 0.0});

    const PendulumModel pend = PendulumModel::pendulum(1.0, 0.8, 1.0);  // gamma = 1/2
    const auto h = hamiltonian(pend, n_max);
    for (int m = -n_max; m <= n_max; ++m) {
        CHECK(h.entry(m, m) == cd{0.5 * m * m, 0.0});
        if (m < n_max) CHECK(h.entry(m, m + 1) == cd{-0.4, 0.0});
    }

    CHECK_THROWS_AS(cos_k_operator(-1, n_max), ParameterError);
    CHECK_THROWS_AS(cos_k_operator(2 * n_max + 1, n_max), ParameterError);
    CHECK_THROWS_AS(sin_k_operator(0, n_max), ParameterError);

    // hermiticity of the standard set
    for (const auto& op : {cos_operator(n_max), sin_operator(n_max), angular_momentum(n_max),
                           angular_momentum_squared(n_max), hamiltonian(pend, n_max)})
        CHECK(op.is_hermitian(0.0));
}

TEST_CASE("operator algebra and truncation flags") {
    const int n_max = 6;
    const double hbar = 1.0;
    const auto l = angular_momentum(n_max, hbar);
    const auto c = cos_operator(n_max);
    const auto s = sin_operator(n_max);

    // [L, C] = i hbar S on interior indices
    const auto lc = commutator(l, c);
    CHECK_FALSE(lc.truncation_contact);  // L is diagonal
    for (int m = -(n_max - 1); m <= n_max - 1; ++m)
        for (int n = -(n_max - 1); n <= n_max - 1; ++n)
            CHECK(std::abs(lc.op.entry(m, n) - cd{0.0, hbar} * s.entry(m, n)) < 1e-15);

    // [L, S] = -i hbar C on interior indices
    const auto ls = commutator(l, s);
    for (int m = -(n_max - 1); m <= n_max - 1; ++m)
        for (int n = -(n_max - 1); n <= n_max - 1; ++n)
            CHECK(std::abs(ls.op.entry(m, n) - cd{0.0, -hbar} * c.entry(m, n)) < 1e-15);

    // {L, C} matches L.C + C.L and the hbar(m+n)/2 band pattern
    const auto anti = anticommutator(l, c);
    CHECK(anti.truncation_contact);  // C reaches past the edge on both sides
    const auto sum = op_mul(l, c).op.plus(op_mul(c, l).op);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) {
            CHECK(std::abs(anti.op.entry(m, n) - sum.entry(m, n)) < 1e-15);
            if (std::abs(m - n) == 1) CHECK(anti.op.entry(m, n) == cd{hbar * (m + n) * 0.5, 0.0});
        }

    // A * I = A
    const auto ident = BandedOperator::identity(n_max);
    const auto prod = op_mul(c, ident);
    for (int m = -n_max; m <= n_max; ++m)
        for (int n = -n_max; n <= n_max; ++n) CHECK(prod.op.entry(m, n) == c.entry(m, n));

    // apply() flags states with weight near the window edge
    bool touched = false;
    c.apply(WaveFunction::basis(0, n_max), &touched);
    CHECK_FALSE(touched);
    c.apply(WaveFunction::basis(n_max, n_max), &touched);
    CHECK(touched);
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(PendulumModel::pendulum(-1.0, 1.0), ParameterError);
    CHECK_THROWS_AS(PendulumModel::pendulum(1.0, 1.0, -2.0), ParameterError);
    const PendulumModel m = PendulumModel::pendulum(2.0, 3.0);
    CHECK(m.gamma() == doctest::Approx(0.25));
    CHECK(m.potential(0.0) == doctest::Approx(-3.0));
    CHECK(m.potential_gradient(kPi / 2) == doctest::Approx(3.0));
}
