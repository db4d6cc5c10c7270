#include <doctest.h>

#include <random>

#include "cylwig/field.hpp"
#include "cylwig/kernel.hpp"
#include "cylwig/quadrature.hpp"
#include "cylwig/sinc.hpp"
#include "cylwig/wigner_ops.hpp"

using namespace cylwig;

namespace {
WaveFunction two_mode(int m, int n, int n_max) {
    WaveFunction psi(n_max);
    psi.set_coeff(m, 1.0 / std::sqrt(2.0));
    psi.set_coeff(n, 1.0 / std::sqrt(2.0));
    return psi;
}
}  // namespace

TEST_CASE("kernel elements") {
    CHECK(kernel(0, 0, 0.7, 0.0).real() == doctest::Approx(1.0 / kTwoPi).epsilon(1e-15));
    CHECK(std::abs(kernel(0, 0, 0.0, 1.0)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(kernel(1, 0, 0.0, 0.5) == cd{1.0 / kTwoPi, 0.0});
    // hermiticity and periodicity
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const int m = static_cast<int>(u(rng));
        const int n = static_cast<int>(u(rng));
        const double th = u(rng), p = u(rng);
        CHECK(std::abs(kernel(m, n, th, p) - std::conj(kernel(n, m, th, p))) < 1e-16);
        CHECK(std::abs(kernel(m, n, th + kTwoPi, p) - kernel(m, n, th, p)) < 1e-13);
    }
    // hbar enters through p/hbar only
    CHECK(kernel(2, 1, 0.3, 1.5, 2.0) == kernel(2, 1, 0.3, 0.75, 1.0));
}

TEST_CASE("moyal and wigner evaluation") {
    // basis state: theta-independent sinc ridge
    const WaveFunction e2 = WaveFunction::basis(2, 5);
    for (double th : {0.0, 1.1, -2.0})
        CHECK(wigner_eval(e2, th, 2.7) == doctest::Approx(sincpi(0.7) / kTwoPi).epsilon(1e-14));

    // two-mode value at theta = 0, pbar = 1/2: (1/2pi)(1 + 2/pi)
    const WaveFunction psi = two_mode(0, 1, 5);
    CHECK(wigner_eval(psi, 0.0, 0.5) == doctest::Approx((1.0 + 2.0 / kPi) / kTwoPi).epsilon(1e-14));

    // negativity witness: first side lobe of the sinc
    CHECK(wigner_eval(e2, 0.0, 2 + 1.43) < 0.0);

    // conjugation symmetry of the Moyal function
    std::mt19937_64 rng(11);
    const WaveFunction a = WaveFunction::random(5, rng);
    const WaveFunction b = WaveFunction::random(5, rng);
    for (double th : {0.4, -1.7})
        CHECK(std::abs(moyal_eval(a, b, th, 0.8) - std::conj(moyal_eval(b, a, th, 0.8))) < 1e-15);

    // field evaluation agrees with the double sum
    const auto field = ShiftedSincField::from_pair(a, b);
    for (double th : {0.0, 0.9})
        for (double pb : {0.0, 0.33, 2.0})
            CHECK(std::abs(field.evaluate(th, pb) - moyal_eval(a, b, th, pb)) < 1e-14);

    // independent vartheta-quadrature oracle
    for (double th : {0.2, -1.3})
        for (double pb : {0.0, 1.4})
            CHECK(std::abs(moyal_eval(a, b, th, pb) - moyal_eval_quadrature(a, b, th, pb)) < 1e-10);
    // and with hbar != 1
    CHECK(std::abs(moyal_eval(a, b, 0.5, 0.9, 0.5) - moyal_eval_quadrature(a, b, 0.5, 0.9, 0.5)) < 1e-10);
}

TEST_CASE("wigner from density") {
    const int n_max = 4;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(9, 9);
    rho(n_max + 0, n_max + 0) = 0.5;
    rho(n_max + 1, n_max + 1) = 0.5;
    const auto mixed = MoyalCoefficients::density(n_max, rho);
    CHECK(wigner_from_density(mixed, 0.3, 0.5) == doctest::Approx((2.0 / kPi) / kTwoPi).epsilon(1e-14));

    Eigen::MatrixXcd pure0 = Eigen::MatrixXcd::Zero(9, 9);
    pure0(n_max, n_max) = 1.0;
    const auto p0 = MoyalCoefficients::density(n_max, pure0);
    for (double pb : {0.0, 0.7}) CHECK(wigner_from_density(p0, 1.0, pb) == doctest::Approx(sincpi(pb) / kTwoPi));

    // trace validation
    Eigen::MatrixXcd bad = rho;
    bad(n_max, n_max) = 0.75;
    CHECK_THROWS_AS(MoyalCoefficients::density(n_max, bad), ValidationError);

    // pure-state density equals the pure Wigner function
    std::mt19937_64 rng(5);
    const WaveFunction psi = WaveFunction::random(n_max, rng);
    const auto pure = MoyalCoefficients::pure(psi);
    for (double th : {0.1, 2.2})
        CHECK(wigner_from_density(pure, th, 0.4) == doctest::Approx(wigner_eval(psi, th, 0.4)).epsilon(1e-13));
}

TEST_CASE("marginals and momentum filter") {
    const WaveFunction e3 = WaveFunction::basis(3, 6);
    const auto m3 = marginals(e3);
    for (double th : {0.0, 1.0}) CHECK(m3.theta_density(th) == doctest::Approx(1.0 / kTwoPi));
    for (double pb : {0.3, 2.0}) CHECK(m3.momentum_density(pb) == doctest::Approx(sincpi(pb - 3)));
    for (int n = -4; n <= 4; ++n) CHECK(m3.momentum_density(n) == (n == 3 ? 1.0 : 0.0));

    const WaveFunction psi = two_mode(0, 1, 6);
    const auto mp = marginals(psi);
    CHECK(mp.momentum_density(0.8) == doctest::Approx(0.5 * sincpi(0.8) + 0.5 * sincpi(-0.2)));

    CHECK(momentum_filter(WaveFunction::basis(0, 4), WaveFunction::basis(0, 4), 0) == cd{1.0, 0.0});
    CHECK(momentum_filter(psi, psi, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(momentum_filter(WaveFunction::basis(0, 4), WaveFunction::basis(1, 4), 2)) == 0.0);

    // filter against direct pbar quadrature of the sinc-interpolated density
    const auto f = [&](double pb) { return cd{mp.momentum_density(pb) * sincpi(1.0 - pb), 0.0}; };
    double quad = integrate_panels(f, -220.0, 220.0, 880, 8).real();
    // DC tail correction as in the orthogonality quadrature
    quad += 0.5 / (kPi * kPi) * (0.5 * cospi(1.0) * 2.0 / 220.0 + 0.5 * cospi(0.0) * 2.0 / 220.0);
    CHECK(quad == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("overlap, purity and the sesquilinear identity") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        const WaveFunction a = WaveFunction::random(8, rng);
        const WaveFunction b = WaveFunction::random(8, rng);
        CHECK(overlap(a, b) == doctest::Approx(std::norm(inner_product(a, b))).epsilon(1e-12));
        CHECK(purity(a) == doctest::Approx(1.0 / kTwoPi).epsilon(1e-12));
    }
    // orthogonal pair
    CHECK(overlap(WaveFunction::basis(1, 4), WaveFunction::basis(-1, 4)) == doctest::Approx(0.0));

    // purity of an equal mixture is half the pure value
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(9, 9);
    rho(4, 4) = 0.5;
    rho(5, 5) = 0.5;
    CHECK(purity(MoyalCoefficients::density(4, rho)) == doctest::Approx(0.5 / kTwoPi));

    // sesquilinear overlap for random 4-tuples:
    // ∫∫ conj(V_{psi2 psi1}) V_{psi4 psi3} = (1/2pi)(psi1,psi3)(psi2,psi4)^*
    for (int i = 0; i < 5; ++i) {
        const WaveFunction p1 = WaveFunction::random(6, rng);
        const WaveFunction p2 = WaveFunction::random(6, rng);
        const WaveFunction p3 = WaveFunction::random(6, rng);
        const WaveFunction p4 = WaveFunction::random(6, rng);
        const cd lhs = ShiftedSincField::overlap_integral(ShiftedSincField::from_pair(p1, p2),
                                                          ShiftedSincField::from_pair(p4, p3));
        const cd rhs = inner_product(p1, p3) * std::conj(inner_product(p2, p4)) / kTwoPi;
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }

    // Moyal marginals: ∫dpbar V_{21} = conj(psi2) psi1 / 2pi; ∫dtheta V_{21} = sinc comb
    const WaveFunction q1 = WaveFunction::random(6, rng);
    const WaveFunction q2 = WaveFunction::random(6, rng);
    const auto f21 = ShiftedSincField::from_pair(q2, q1);
    for (double th : {0.3, -2.1}) {
        cd acc = 0.0;
        for (const auto& e : f21.entries()) acc += e.f * std::polar(1.0, e.k * th);
        CHECK(std::abs(acc - std::conj(q2.evaluate(th)) * q1.evaluate(th) / kTwoPi) < 1e-14);
    }
    for (double pb : {0.4, 1.6}) {
        cd expect = 0.0;
        for (int m = -6; m <= 6; ++m) expect += std::conj(q2.coeff(m)) * q1.coeff(m) * sincpi(pb - m);
        cd acc = 0.0;
        for (const auto& e : f21.entries())
            if (e.k == 0) acc += e.f * kTwoPi * sincpi(pb - 0.5 * e.s2);
        CHECK(std::abs(acc - expect) < 1e-14);
    }
}

TEST_CASE("trace product rule") {
    // tr(A B) = 2pi ∫∫ tr[A V] tr[B V]
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n_max = 6;
    const auto random_hermitian_banded = [&](int bw) {
        BandedOperator a(n_max, bw);
        for (int m = -n_max; m <= n_max; ++m)
            for (int n = m; n <= std::min(n_max, m + bw); ++n) {
                const cd v = n == m ? cd{gauss(rng), 0.0} : cd{gauss(rng), gauss(rng)};
                a.set_entry(m, n, v);
                a.set_entry(n, m, std::conj(v));
            }
        return a;
    };
    for (int i = 0; i < 4; ++i) {
        const auto a = random_hermitian_banded(2);
        const auto b = random_hermitian_banded(3);
        ShiftedSincField fa, fb;
        for (int m = -n_max; m <= n_max; ++m)
            for (int n = -n_max; n <= n_max; ++n) {
                if (a.entry(m, n) != cd{0.0, 0.0}) fa.add_term(m - n, m + n, a.entry(m, n) / kTwoPi);
                if (b.entry(m, n) != cd{0.0, 0.0}) fb.add_term(m - n, m + n, b.entry(m, n) / kTwoPi);
            }
        fa.compress();
        fb.compress();
        const cd lhs = (a.dense() * b.dense()).trace();
        const cd rhs = kTwoPi * ShiftedSincField::overlap_integral(fa, fb);
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("kernel orthogonality") {
    CHECK(kernel_orthogonality(0, 0, 0, 0) == 1.0);
    CHECK(kernel_orthogonality(0, 1, 1, 0) == 1.0);
    CHECK(kernel_orthogonality(0, 0, 1, 1) == 0.0);
    CHECK(kernel_orthogonality(2, -1, -1, 2) == 1.0);
    CHECK(kernel_orthogonality_quadrature(0, 0, 0, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(kernel_orthogonality_quadrature(0, 1, 1, 0) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(kernel_orthogonality_quadrature(0, 0, 1, 1) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(kernel_orthogonality_quadrature(3, 1, 2, 0) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("wave-function recovery") {
    std::vector<double> grid;
    for (int i = 0; i < 64; ++i) grid.push_back(-kPi + (i + 0.5) * kTwoPi / 64);

    // e_0: constant anchor
    {
        const auto f = ShiftedSincField::from_wavefunction(WaveFunction::basis(0, 4));
        const auto rec = recover_wavefunction([&](double t, double p) { return f.evaluate(t, p).real(); }, 4, grid);
        CHECK(std::abs(inner_product(rec, WaveFunction::basis(0, 4))) == doctest::Approx(1.0).epsilon(1e-10));
    }
    // e_1 anchors fine (psi(0) = 1)
    {
        const auto f = ShiftedSincField::from_wavefunction(WaveFunction::basis(1, 4));
        const auto rec = recover_wavefunction([&](double t, double p) { return f.evaluate(t, p).real(); }, 4, grid);
        CHECK(std::abs(inner_product(rec, WaveFunction::basis(1, 4))) == doctest::Approx(1.0).epsilon(1e-8));
    }
    // (e_1 - e_{-1})/sqrt2 ~ sin(phi): psi(0) = 0 -> degenerate anchor
    {
        WaveFunction odd(4);
        odd.set_coeff(1, 1.0 / std::sqrt(2.0));
        odd.set_coeff(-1, -1.0 / std::sqrt(2.0));
        const auto f = ShiftedSincField::from_wavefunction(odd);
        CHECK_THROWS_AS(
            recover_wavefunction([&](double t, double p) { return f.evaluate(t, p).real(); }, 4, grid),
            DegenerateAnchorError);
    }
    // two-mode round trip with the recovered phase convention
    {
        const WaveFunction psi = two_mode(0, 1, 4);
        const auto f = ShiftedSincField::from_wavefunction(psi);
        const auto rec = recover_wavefunction([&](double t, double p) { return f.evaluate(t, p).real(); }, 4, grid);
        CHECK(std::abs(inner_product(rec, psi)) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(rec.evaluate(0.0).imag() == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(rec.evaluate(0.0).real() > 0.0);
    }
}
