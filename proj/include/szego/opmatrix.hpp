#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "szego/trigpoly.hpp"

namespace szego::op {

using Complex = std::complex<double>;

// Dense complex matrix on the symmetric index range -N..N.
class OpMatrix {
public:
    explicit OpMatrix(int half_width)
        : hw_(half_width),
          a_(Eigen::MatrixXcd::Zero(2 * half_width + 1, 2 * half_width + 1)) {}

    static OpMatrix identity(int half_width) {
        OpMatrix m(half_width);
        m.a_.setIdentity();
        return m;
    }

    int half_width() const { return hw_; }
    int dim() const { return 2 * hw_ + 1; }

    Complex operator()(int r, int c) const { return a_(r + hw_, c + hw_); }
    Complex& at(int r, int c) { return a_(r + hw_, c + hw_); }

    const Eigen::MatrixXcd& raw() const { return a_; }
    Eigen::MatrixXcd& raw() { return a_; }

    Complex trace() const { return a_.trace(); }
    double max_abs() const { return a_.cwiseAbs().maxCoeff(); }

    OpMatrix& operator+=(const OpMatrix& o);
    OpMatrix& operator-=(const OpMatrix& o);
    OpMatrix& operator*=(Complex s);
    friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
    friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
    friend OpMatrix operator*(OpMatrix a, Complex s) { return a *= s; }
    friend OpMatrix operator*(Complex s, OpMatrix a) { return a *= s; }
    friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);

private:
    int hw_;
    Eigen::MatrixXcd a_;
};

// Toeplitz matrix of a symbol: entry(r, c) = b_{r-c}.  Requires N >= deg(b);
// a smaller N would silently drop coefficients.
OpMatrix build_toeplitz(const fourier::TrigPoly& b, int half_width);

// diag(..., 1/3, 1/2, 1, 0, 1, 1/2, 1/3, ...): 1/|k| off the zero mode.
OpMatrix build_smoothing_diag(int half_width);

// T(b0) + T(bsub) * D.
OpMatrix build_psdo(const fourier::TrigPoly& b0, const fourier::TrigPoly& bsub,
                    int half_width);

// The part of G shifting the |k| ladder by j: entries with |r| - |c| = j.
// Summing the blocks over all |j| <= 2N recovers G exactly.
OpMatrix fourier_block(const OpMatrix& g, int j);

// B_j P_n == P_{n+j} B_j entrywise, with P_q the projection onto |k| <= q
// (zero for q < 0).  Requires n + |j| <= half width.
bool verify_commutation(const OpMatrix& g, int j, int n);

// Tr(pi_k G): G[k,k] + G[-k,-k] for k >= 1, G[0,0] for k = 0.
Complex pi_trace(const OpMatrix& g, int k);

// Central (2n+1) x (2n+1) block, i.e. P_n G P_n restricted to its range.
OpMatrix truncate(const OpMatrix& g, int n);

// Both sides of the projector-displacement trace identity:
//   left  = Tr((P_n B P_n)^m) - Tr(P_n B^m P_n)
//   right = -sum_{j_1+...+j_m=0} sum_{k=M+1}^{0} Tr(pi_{n+k} B_{j_1}...B_{j_m}),
// M = min(0, j_1, j_1+j_2, ..., j_1+...+j_m), B built from (b0, bsub) at
// half width N.  Requires N >= n + m*bandwidth and m <= 4.
std::pair<Complex, Complex> trace_identity_sides(const fourier::TrigPoly& b0,
                                                 const fourier::TrigPoly& bsub,
                                                 int m, int n, int half_width);

}  // namespace szego::op
