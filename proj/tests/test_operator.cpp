#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "szego/opmatrix.hpp"
#include "szego/trigpoly.hpp"

using namespace szego;
using namespace szego::op;
using fourier::TrigPoly;

namespace {

TrigPoly cos_poly(double amplitude, int k = 1) {
    TrigPoly p(k);
    p.set_coeff(k, Complex(amplitude / 2.0, 0));
    p.set_coeff(-k, Complex(amplitude / 2.0, 0));
    return p;
}

TrigPoly const_poly(double c) {
    TrigPoly p(0);
    p.set_coeff(0, Complex(c, 0));
    return p;
}

TrigPoly random_real_poly(std::mt19937_64& rng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    TrigPoly p(degree);
    p.set_coeff(0, Complex(1.0 + 0.1 * u(rng), 0.0));
    for (int k = 1; k <= degree; ++k) {
        const Complex c(u(rng), u(rng));
        p.set_coeff(k, c);
        p.set_coeff(-k, std::conj(c));
    }
    return p;
}

}  // namespace

TEST_CASE("build_toeplitz structure") {
    auto t = build_toeplitz(cos_poly(1.0), 1);  // 3x3 of cos x
    for (int r = -1; r <= 1; ++r)
        for (int c = -1; c <= 1; ++c) {
            if (std::abs(r - c) == 1)
                CHECK(t(r, c) == Complex(0.5, 0));
            else
                CHECK(t(r, c) == Complex(0, 0));
        }

    auto id = build_toeplitz(const_poly(1.0), 4);
    CHECK((id.raw() - Eigen::MatrixXcd::Identity(9, 9)).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(build_toeplitz(cos_poly(1.0, 3), 2), std::invalid_argument);
}

TEST_CASE("build_toeplitz entries equal the coefficient table") {
    TrigPoly logb = cos_poly(0.2);
    TrigPoly b = fourier::trig_exp_auto(logb);
    auto t = build_toeplitz(b, 12);
    for (int r = -12; r <= 12; ++r)
        for (int c = -12; c <= 12; ++c)
            CHECK(t(r, c) == b.coeff(r - c));
}

TEST_CASE("build_smoothing_diag") {
    auto d = build_smoothing_diag(2);
    CHECK(d(-2, -2) == Complex(0.5, 0));
    CHECK(d(-1, -1) == Complex(1, 0));
    CHECK(d(0, 0) == Complex(0, 0));
    CHECK(d(1, 1) == Complex(1, 0));
    CHECK(d(2, 2) == Complex(0.5, 0));
    CHECK(d(1, 0) == Complex(0, 0));

    auto d0 = build_smoothing_diag(0);
    CHECK(d0.dim() == 1);
    CHECK(d0(0, 0) == Complex(0, 0));

    auto d3 = build_smoothing_diag(3);
    CHECK(d3.trace().real() == doctest::Approx(11.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("build_psdo entries match the direct product formula") {
    std::mt19937_64 rng(3);
    auto b0 = random_real_poly(rng, 2, 0.3);
    auto bsub = random_real_poly(rng, 2, 0.4);
    const int hw = 8;
    auto g = build_psdo(b0, bsub, hw);
    for (int r = -hw; r <= hw; ++r)
        for (int c = -hw; c <= hw; ++c) {
            Complex expect = b0.coeff(r - c);
            if (c != 0) expect += bsub.coeff(r - c) / static_cast<double>(std::abs(c));
            CHECK(std::abs(g(r, c) - expect) < 1e-15);
        }

    // bsub = 0 leaves a pure Toeplitz matrix; b0 = bsub = 1 gives I + D.
    auto pure = build_psdo(b0, TrigPoly(0), hw);
    auto toep = build_toeplitz(b0, hw);
    CHECK((pure.raw() - toep.raw()).cwiseAbs().maxCoeff() == 0.0);

    auto ipd = build_psdo(const_poly(1), const_poly(1), 3);
    auto expect = OpMatrix::identity(3) + build_smoothing_diag(3);
    CHECK((ipd.raw() - expect.raw()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fourier_block band structure and partition") {
    auto t = build_toeplitz(cos_poly(1.0), 6);
    for (int j = 2; j <= 12; ++j) {
        CHECK(fourier_block(t, j).max_abs() == 0.0);
        CHECK(fourier_block(t, -j).max_abs() == 0.0);
    }
    auto bm1 = fourier_block(t, -1);
    CHECK(bm1(0, 1) == Complex(0.5, 0));
    CHECK(bm1(0, -1) == Complex(0.5, 0));
    CHECK(bm1(1, 0) == Complex(0, 0));  // |1|-|0| = +1 lives in the j = +1 block

    std::mt19937_64 rng(4);
    auto g = build_psdo(random_real_poly(rng, 2, 0.5), random_real_poly(rng, 1, 0.5), 5);
    OpMatrix sum(5);
    for (int j = -10; j <= 10; ++j) sum += fourier_block(g, j);
    CHECK((sum.raw() - g.raw()).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(fourier_block(g, 11), std::invalid_argument);
}

TEST_CASE("commutation relation holds exactly for banded operators") {
    std::mt19937_64 rng(5);
    auto t = build_toeplitz(cos_poly(1.0), 16);
    CHECK(verify_commutation(t, 0, 5));
    CHECK(verify_commutation(t, 1, 5));
    CHECK(verify_commutation(t, -1, 5));

    auto g = build_psdo(random_real_poly(rng, 2, 0.5), random_real_poly(rng, 2, 0.5), 16);
    for (int j = -4; j <= 4; ++j) CHECK(verify_commutation(g, j, 5));
    CHECK_THROWS_AS(verify_commutation(g, 14, 5), std::invalid_argument);
}

TEST_CASE("pi_trace reads the two diagonal entries") {
    std::mt19937_64 rng(6);
    auto b0 = random_real_poly(rng, 2, 0.3);
    auto bsub = random_real_poly(rng, 2, 0.3);
    auto g = build_psdo(b0, bsub, 8);
    for (int k = 1; k <= 8; ++k) {
        const Complex expect = 2.0 * b0.coeff(0) + 2.0 * bsub.coeff(0) / static_cast<double>(k);
        CHECK(std::abs(pi_trace(g, k) - expect) < 1e-15);
    }
    CHECK(pi_trace(g, 0) == g(0, 0));

    auto id = OpMatrix::identity(4);
    CHECK(pi_trace(id, 0) == Complex(1, 0));
    CHECK(pi_trace(id, 3) == Complex(2, 0));
    auto d = build_smoothing_diag(5);
    CHECK(std::abs(pi_trace(d, 4) - Complex(0.5, 0)) < 1e-16);
    CHECK(pi_trace(d, 0) == Complex(0, 0));
    CHECK_THROWS_AS(pi_trace(d, 6), std::out_of_range);
}

TEST_CASE("truncate and the pi_trace partial sums") {
    std::mt19937_64 rng(7);
    auto g = build_psdo(random_real_poly(rng, 2, 0.5), random_real_poly(rng, 1, 0.5), 9);
    auto full = truncate(g, 9);
    CHECK((full.raw() - g.raw()).cwiseAbs().maxCoeff() == 0.0);
    auto zero = truncate(g, 0);
    CHECK(zero.dim() == 1);
    CHECK(zero(0, 0) == g(0, 0));

    for (int n : {0, 3, 7}) {
        Complex sum(0, 0);
        for (int k = 0; k <= n; ++k) sum += pi_trace(g, k);
        CHECK(std::abs(sum - truncate(g, n).trace()) < 1e-14);
    }
    CHECK_THROWS_AS(truncate(g, 10), std::out_of_range);
}

TEST_CASE("Toeplitz Hermitian iff symbol real-valued") {
    std::mt19937_64 rng(8);
    auto real_sym = random_real_poly(rng, 3, 0.6);
    auto t = build_toeplitz(real_sym, 6);
    CHECK((t.raw() - t.raw().adjoint()).cwiseAbs().maxCoeff() < 1e-15);

    TrigPoly not_real(1);
    not_real.set_coeff(1, Complex(0.3, 0.1));
    not_real.set_coeff(-1, Complex(0.2, 0.0));
    auto t2 = build_toeplitz(not_real, 6);
    CHECK((t2.raw() - t2.raw().adjoint()).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("trace identity, m = 1 and identity operator") {
    auto [l1, r1] = trace_identity_sides(const_poly(1), TrigPoly(0), 1, 8, 16);
    CHECK(std::abs(l1) == 0.0);
    CHECK(std::abs(r1) == 0.0);

    std::mt19937_64 rng(9);
    auto b0 = random_real_poly(rng, 2, 0.3);
    auto [l2, r2] = trace_identity_sides(b0, TrigPoly(0), 1, 10, 20);
    CHECK(std::abs(l2) < 1e-13);
    CHECK(std::abs(r2) < 1e-13);
}

TEST_CASE("trace identity agrees for banded fixtures") {
    std::mt19937_64 rng(10);
    for (int fixture = 0; fixture < 2; ++fixture) {
        auto b0 = random_real_poly(rng, 2, 0.25);
        auto bsub = random_real_poly(rng, 2, 0.35);
        for (int m = 1; m <= 3; ++m)
            for (int n : {8, 12}) {
                auto [left, right] = trace_identity_sides(b0, bsub, m, n, n + 3 * m);
                const double scale = std::max({1.0, std::abs(left), std::abs(right)});
                CHECK(std::abs(left - right) <= 1e-12 * scale);
            }
    }
    // exp-form principal symbol: still exactly banded once tabulated.
    auto b0 = fourier::trig_exp_auto(cos_poly(0.2));
    auto bsub = cos_poly(0.1);
    auto [left, right] = trace_identity_sides(b0, bsub, 2, 10, 10 + 2 * b0.degree() + 2);
    const double scale = std::max({1.0, std::abs(left), std::abs(right)});
    CHECK(std::abs(left - right) <= 1e-12 * scale);
    CHECK(std::abs(left) > 1e-8);  // the correction is genuinely nonzero here

    CHECK_THROWS_AS(trace_identity_sides(b0, bsub, 2, 10, 12), std::invalid_argument);
}
