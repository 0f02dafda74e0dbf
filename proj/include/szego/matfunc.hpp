#pragma once

#include <complex>

#include "szego/opmatrix.hpp"
#include "szego/trigpoly.hpp"

namespace szego::matfunc {

using Complex = std::complex<double>;
using op::OpMatrix;

struct LogDetResult {
    Complex value;         // sum of principal logs of the LU pivots + sign term
    double min_pivot;      // smallest pivot magnitude encountered
    double cond_estimate;  // max/min pivot magnitude (crude)
};

// log det via LU with partial pivoting; throws SingularMatrixError when a
// pivot magnitude falls below 1e-300.  Well-defined mod 2*pi*i.
LogDetResult logdet_lu(const OpMatrix& m);

// Power-iteration magnitude estimate for the dominant eigenvalue.
// Deterministic (fixed internal seed).
double spectral_radius_estimate(const OpMatrix& m, int iters = 200);

// The series gate: matrix_log rejects inputs with rho(I - M) >= this.
inline constexpr double kLogSeriesGate = 0.9;

struct MatrixLogResult {
    OpMatrix log;
    int terms = 0;              // series terms used
    double tail_estimate = 0.0; // estimated norm of the dropped tail
    Complex prescale{1.0, 0.0}; // scalar factored out before the series
};

// log M = -sum_{p>=1} (I-M)^p / p, truncated once the estimated tail is
// below tol.  If the gate fails, a scalar prescale s = tr(M)/dim is tried
// (log M = log(s) I + log(M/s)); ConvergenceError when that fails too.
MatrixLogResult matrix_log(const OpMatrix& m, double tol = 1e-13);

// exp by scaling and squaring with a Taylor core; test/diagnostic companion
// to matrix_log.
OpMatrix matrix_exp(const OpMatrix& m);

struct LogBlockResult {
    OpMatrix block;             // central (2n+1) block of log B
    int series_terms = 0;
    double tail_estimate = 0.0;
    int buffer = 0;
    double drift = -1.0;        // max entry change under a 1.5x buffer; -1 if skipped
};

// Central block of log(B) with B = T(b0) + T(bsub) D built at half width
// n + buffer.  buffer <= 0 selects max(32, 4 * bandwidth).
LogBlockResult central_log_block(const fourier::TrigPoly& b0,
                                 const fourier::TrigPoly& bsub,
                                 int n, int buffer = 0, double tol = 1e-13,
                                 bool compute_drift = true);

}  // namespace szego::matfunc
