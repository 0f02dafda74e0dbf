#pragma once

#include <string>
#include <utility>
#include <vector>

#include "szego/opmatrix.hpp"
#include "szego/trigpoly.hpp"

namespace szego::asym {

// Riemann zeta at integer l >= 2, direct series plus Euler-Maclaurin tail.
double zeta_int(int l);

// Euler-Mascheroni constant (stored to 30 digits, oracle-checked in tests).
double euler_gamma();

// Fitted coefficients R_0..R_L of Tr(pi_k G) ~ sum_l R_l k^{d-1-l}.
struct ResidueTable {
    int dim = 1;                 // d
    std::vector<double> values;  // R_0..R_L
    double fit_residual = 0.0;   // max |model - sample| over the fit window
    double condition = 0.0;      // scaled design condition number

    double at(std::size_t l) const { return l < values.size() ? values[l] : 0.0; }
};

// Least-squares fit of samples (k, Tr(pi_k G)) against {k^{d-1-l}}_{l=0..L}.
// Needs >= 2(L+1) samples with distinct k >= 1; throws FitError when the
// scaled design condition exceeds 1e12.
ResidueTable residues_fit(const std::vector<std::pair<int, double>>& samples, int d, int L);

struct EpsilonSeries {
    std::vector<double> eps;   // eps_k for k = 1..k_max (index k-1)
    double zero_mode = 0.0;
    double c_value = 0.0;      // zero_mode + sum eps + nothing beyond the tail bound
    int trunc_index = 0;       // |eps| is nonincreasing beyond this k
    double tail_bound = 0.0;
};

// Deviations eps_k = Tr(pi_k G) - sum_l R_l k^{d-1-l} and their sum C(G).
// samples must cover k = 1..k_max contiguously.  Throws ConvergenceError when
// the deviations fail to decay (the absolute-convergence hypothesis fails).
EpsilonSeries epsilon_C(const std::vector<std::pair<int, double>>& samples,
                        const ResidueTable& residues, double zero_mode);

struct PredictedCoefficients {
    std::vector<std::pair<std::string, double>> coeffs;  // label -> value
    double zeta_tail_bound = 0.0;

    bool has(const std::string& label) const;
    double at(const std::string& label) const;  // throws for unknown label
};

// Coefficient arithmetic of the partial-trace expansion:
//   d = 1:  {n: R0, log n: R1, 1: C + gamma R1 + sum_{l>=2} zeta(l) R_l,
//            1/n: R1/2 - R2}
//   d = 2:  {n^2: R0/2, n: R0/2 + R1, log n: R2,
//            1: C + gamma R2 + sum_{l>=2} zeta(l) R_{l+1}}
//   d >= 3: {n^d: R0/d, n^{d-1}: R0/2 + R1/(d-1),
//            n^{d-2}: (d-1)/12 R0 + R1/2 + R2/(d-2), log n: R_d}
PredictedCoefficients prop3_coeffs(int d, const ResidueTable& residues, double c_value);

// The d = 1 determinant expansion coefficients for B with principal symbol
// exp(log_b0) and subprincipal symbol bsub:
//   c1   = 2 (log b0)_0
//   clog = 2 (bsub/b0)_0
//   c0   = pairing(log b0, log b0) + C + gamma R1 + sum zeta(l) R_l
//   c-1  = sym-pairing(log b0, bsub/b0) + mean(q + q^2),  q = bsub/b0.
// Pairings are averaged over the two cotangent directions (real part for
// real symbols).
PredictedCoefficients predicted_cor4(const fourier::TrigPoly& log_b0,
                                     const fourier::TrigPoly& bsub,
                                     double c_log_b, const ResidueTable& residues_log_b);

// -1/2 log(y1) log(y2), y1, y2 > 0.
double w_log(double y1, double y2);

// How the stray third integration symbol in the kernel is read.
enum class PhiReading {
    kThirdArgFixed,      // third point fixed at y3 (default)
    kThirdArgIntegrated  // third point integrated over [0, y3]
};

// The three-point log kernel integral over [0,y1] x [0,y2]; all arguments
// must be < 1.  y3 = 0 is the (zero) limit value.
double phi_log(double y1, double y2, double y3, double tol = 1e-11,
               PhiReading reading = PhiReading::kThirdArgFixed);

struct ExpansionFit {
    std::vector<std::string> basis;
    std::vector<double> coeffs;
    std::vector<double> residuals;     // per point, value - model
    double max_residual_n2 = 0.0;      // max |residual * n^2|
    double condition = 0.0;            // scaled design condition number

    double coeff(const std::string& label) const;
    double eval(double n) const;
};

// Least squares of (n, v_n) points in a named basis; labels from
// {"1", "n", "n^2", "n^3", "log n", "1/n", "1/n^2"}.  Columns are scaled to
// unit max before solving; throws FitError on rank deficiency.
ExpansionFit fit_expansion(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::string>& basis);

struct ProbeDiagnostics {
    double gate_radius = 0.0;
    ExpansionFit fit;
    int series_terms = 0;
};

// Constant coefficient of Tr P_n log(I - D^{1/2} T(c1) D^{1/2}) P_n, fitted
// over the given n grid in the {n, log n, 1, 1/n} basis.
double constant_term_probe(const fourier::TrigPoly& c1, const std::vector<int>& n_grid,
                           int buffer = 32, ProbeDiagnostics* diag = nullptr);

}  // namespace szego::asym
