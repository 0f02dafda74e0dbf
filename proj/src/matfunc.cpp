#include "szego/matfunc.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "szego/errors.hpp"

namespace szego::matfunc {

LogDetResult logdet_lu(const OpMatrix& m) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m.raw());
    const auto& diag = lu.matrixLU().diagonal();
    Complex sum(0, 0);
    double mn = std::numeric_limits<double>::infinity();
    double mx = 0.0;
    for (Eigen::Index i = 0; i < diag.size(); ++i) {
        const double mag = std::abs(diag(i));
        if (mag < 1e-300) throw SingularMatrixError("logdet_lu: pivot underflow, matrix singular");
        mn = std::min(mn, mag);
        mx = std::max(mx, mag);
        sum += std::log(diag(i));
    }
    if (lu.permutationP().determinant() < 0)
        sum += Complex(0.0, std::numbers::pi);  // det = -exp(sum of pivot logs)
    return {sum, mn, mx / mn};
}

double spectral_radius_estimate(const OpMatrix& m, int iters) {
    const Eigen::Index n = m.raw().rows();
    if (n == 0) return 0.0;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
    v.normalize();
    double rho = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd w = m.raw() * v;
        const double nw = w.norm();
        if (nw < 1e-260) return 0.0;
        rho = nw;
        v = w / nw;
    }
    return rho;
}

namespace {

MatrixLogResult log_series(const OpMatrix& m, double tol, double rho, Complex prescale) {
    const int hw = m.half_width();
    OpMatrix e = OpMatrix::identity(hw) - m;  // series variable
    OpMatrix sum(hw);
    OpMatrix term = e;
    int p = 1;
    double tail = std::numeric_limits<double>::infinity();
    const double gap = std::max(1e-6, 1.0 - rho);
    for (;;) {
        sum -= term * Complex(1.0 / p, 0.0);
        tail = term.max_abs() / p * (rho / gap);
        if (tail <= tol) break;
        if (p >= 500)
            throw ConvergenceError("matrix_log: series did not reach tolerance within 500 terms");
        term = term * e;
        ++p;
    }
    MatrixLogResult out{std::move(sum), p, tail, prescale};
    if (prescale != Complex(1.0, 0.0)) {
        const Complex ls = std::log(prescale);
        for (int k = -hw; k <= hw; ++k) out.log.at(k, k) += ls;
    }
    return out;
}

}  // namespace

MatrixLogResult matrix_log(const OpMatrix& m, double tol) {
    const OpMatrix e = OpMatrix::identity(m.half_width()) - m;
    double rho = spectral_radius_estimate(e);
    if (rho < kLogSeriesGate) return log_series(m, tol, rho, Complex(1.0, 0.0));

    // Scalar rescue: factor out the mean diagonal before giving up.
    const Complex s = m.trace() / static_cast<double>(m.dim());
    if (std::abs(s) > 1e-12) {
        OpMatrix scaled = m;
        scaled *= Complex(1.0, 0.0) / s;
        const OpMatrix e2 = OpMatrix::identity(m.half_width()) - scaled;
        const double rho2 = spectral_radius_estimate(e2);
        if (rho2 < kLogSeriesGate) return log_series(scaled, tol, rho2, s);
    }
    throw ConvergenceError(
        "matrix_log: spectral radius of I - M is >= 0.9; the smallness hypothesis fails");
}

OpMatrix matrix_exp(const OpMatrix& m) {
    const int hw = m.half_width();
    int squarings = 0;
    double scale = m.max_abs() * m.dim();
    while (scale > 0.5 && squarings < 60) {
        scale /= 2.0;
        ++squarings;
    }
    const double factor = std::ldexp(1.0, -squarings);
    OpMatrix t = m;
    t *= Complex(factor, 0.0);

    OpMatrix sum = OpMatrix::identity(hw);
    OpMatrix term = OpMatrix::identity(hw);
    for (int k = 1; k <= 40; ++k) {
        term = term * t;
        term *= Complex(1.0 / k, 0.0);
        sum += term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

LogBlockResult central_log_block(const fourier::TrigPoly& b0, const fourier::TrigPoly& bsub,
                                 int n, int buffer, double tol, bool compute_drift) {
    const int w = std::max(b0.degree(), bsub.degree());
    if (buffer <= 0) buffer = std::max(32, 4 * w);

    auto block_at = [&](int buf) {
        const OpMatrix b = op::build_psdo(b0, bsub, n + buf);
        MatrixLogResult ml = matrix_log(b, tol);
        return std::pair<OpMatrix, MatrixLogResult>(op::truncate(ml.log, n), std::move(ml));
    };

    auto [block, ml] = block_at(buffer);
    LogBlockResult out{std::move(block), ml.terms, ml.tail_estimate, buffer, -1.0};
    if (compute_drift) {
        auto [block2, ml2] = block_at(buffer + buffer / 2);
        out.drift = (block2 - out.block).max_abs();
    }
    return out;
}

}  // namespace szego::matfunc
