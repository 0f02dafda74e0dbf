#include "szego/opmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace szego::op {

OpMatrix& OpMatrix::operator+=(const OpMatrix& o) {
    if (o.hw_ != hw_) throw std::invalid_argument("OpMatrix: half-width mismatch");
    a_ += o.a_;
    return *this;
}

OpMatrix& OpMatrix::operator-=(const OpMatrix& o) {
    if (o.hw_ != hw_) throw std::invalid_argument("OpMatrix: half-width mismatch");
    a_ -= o.a_;
    return *this;
}

OpMatrix& OpMatrix::operator*=(Complex s) {
    a_ *= s;
    return *this;
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    if (a.hw_ != b.hw_) throw std::invalid_argument("OpMatrix: half-width mismatch");
    OpMatrix out(a.hw_);
    out.a_.noalias() = a.a_ * b.a_;
    return out;
}

OpMatrix build_toeplitz(const fourier::TrigPoly& b, int half_width) {
    if (half_width < b.degree())
        throw std::invalid_argument("build_toeplitz: half width below symbol degree (truncation)");
    OpMatrix m(half_width);
    for (int r = -half_width; r <= half_width; ++r)
        for (int c = std::max(-half_width, r - b.degree());
             c <= std::min(half_width, r + b.degree()); ++c)
            m.at(r, c) = b.coeff(r - c);
    return m;
}

OpMatrix build_smoothing_diag(int half_width) {
    if (half_width < 0) throw std::invalid_argument("build_smoothing_diag: negative half width");
    OpMatrix m(half_width);
    for (int k = -half_width; k <= half_width; ++k)
        if (k != 0) m.at(k, k) = Complex(1.0 / std::abs(k), 0.0);
    return m;
}

OpMatrix build_psdo(const fourier::TrigPoly& b0, const fourier::TrigPoly& bsub,
                    int half_width) {
    OpMatrix t0 = build_toeplitz(b0, half_width);
    OpMatrix ts = build_toeplitz(bsub, half_width);
    OpMatrix d = build_smoothing_diag(half_width);
    return t0 + ts * d;
}

OpMatrix fourier_block(const OpMatrix& g, int j) {
    const int n = g.half_width();
    if (std::abs(j) > 2 * n) throw std::invalid_argument("fourier_block: |j| > 2N");
    OpMatrix out(n);
    for (int r = -n; r <= n; ++r)
        for (int c = -n; c <= n; ++c)
            if (std::abs(r) - std::abs(c) == j) out.at(r, c) = g(r, c);
    return out;
}

bool verify_commutation(const OpMatrix& g, int j, int n) {
    const int hw = g.half_width();
    if (n < 0 || n + std::abs(j) > hw)
        throw std::invalid_argument("verify_commutation: window n + |j| exceeds half width");
    OpMatrix bj = fourier_block(g, j);
    // Compare B_j P_n with P_{n+j} B_j entry by entry; P_q = 0 for q < 0.
    for (int r = -hw; r <= hw; ++r)
        for (int c = -hw; c <= hw; ++c) {
            const Complex lhs = (std::abs(c) <= n) ? bj(r, c) : Complex(0, 0);
            const Complex rhs = (n + j >= 0 && std::abs(r) <= n + j) ? bj(r, c) : Complex(0, 0);
            if (lhs != rhs) return false;
        }
    return true;
}

Complex pi_trace(const OpMatrix& g, int k) {
    if (k < 0 || k > g.half_width()) throw std::out_of_range("pi_trace: k out of range");
    if (k == 0) return g(0, 0);
    return g(k, k) + g(-k, -k);
}

OpMatrix truncate(const OpMatrix& g, int n) {
    if (n < 0 || n > g.half_width()) throw std::out_of_range("truncate: n out of range");
    OpMatrix out(n);
    for (int r = -n; r <= n; ++r)
        for (int c = -n; c <= n; ++c) out.at(r, c) = g(r, c);
    return out;
}

std::pair<Complex, Complex> trace_identity_sides(const fourier::TrigPoly& b0,
                                                 const fourier::TrigPoly& bsub,
                                                 int m, int n, int half_width) {
    if (m < 1 || m > 4) throw std::invalid_argument("trace_identity_sides: m must be in 1..4");
    const int w = std::max(b0.degree(), bsub.degree());
    if (half_width < n + m * w)
        throw std::invalid_argument("trace_identity_sides: insufficient half width for the window");

    const OpMatrix b = build_psdo(b0, bsub, half_width);

    // Left side: both traces over the same truncation.
    OpMatrix bn = truncate(b, n);
    OpMatrix bn_pow = bn;
    OpMatrix b_pow = b;
    for (int i = 1; i < m; ++i) {
        bn_pow = bn_pow * bn;
        b_pow = b_pow * b;
    }
    Complex tr_inside = bn_pow.trace();
    Complex tr_outside(0, 0);
    for (int k = -n; k <= n; ++k) tr_outside += b_pow(k, k);
    const Complex left = tr_inside - tr_outside;

    // Right side: enumerate j-tuples with zero total shift.
    std::vector<OpMatrix> blocks;
    blocks.reserve(static_cast<std::size_t>(2 * w + 1));
    for (int j = -w; j <= w; ++j) blocks.push_back(fourier_block(b, j));
    auto block_of = [&](int j) -> const OpMatrix& {
        return blocks[static_cast<std::size_t>(j + w)];
    };

    Complex right(0, 0);
    std::vector<int> tup(static_cast<std::size_t>(m), -w);
    for (;;) {
        int total = 0;
        for (int v : tup) total += v;
        if (total == 0) {
            int pfx = 0, mn = 0;
            for (int v : tup) {
                pfx += v;
                mn = std::min(mn, pfx);
            }
            if (mn < 0) {
                OpMatrix prod = block_of(tup[0]);
                for (int i = 1; i < m; ++i) prod = prod * block_of(tup[static_cast<std::size_t>(i)]);
                // pi_q vanishes for q < 0 (there is nothing below the zero mode).
                for (int k = mn + 1; k <= 0; ++k)
                    if (n + k >= 0) right += pi_trace(prod, n + k);
            }
        }
        int pos = m - 1;
        while (pos >= 0 && tup[static_cast<std::size_t>(pos)] == w) {
            tup[static_cast<std::size_t>(pos)] = -w;
            --pos;
        }
        if (pos < 0) break;
        ++tup[static_cast<std::size_t>(pos)];
    }
    return {left, -right};
}

}  // namespace szego::op
