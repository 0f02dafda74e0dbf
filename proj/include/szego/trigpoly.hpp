#pragma once

#include <complex>
#include <map>
#include <vector>

namespace szego::fourier {

using Complex = std::complex<double>;

// Finite complex Fourier coefficient table indexed -K..K.
class TrigPoly {
public:
    explicit TrigPoly(int degree = 0);
    static TrigPoly from_coeffs(const std::map<int, Complex>& coeffs);

    int degree() const { return degree_; }
    Complex coeff(int k) const;  // 0 outside |k| <= degree
    void set_coeff(int k, Complex v);

    // coeff(-k) == conj(coeff(k)) for all k, within tol.
    bool is_real_valued(double tol = 1e-12) const;

    // Values at x_j = 2*pi*j/N, j = 0..N-1.
    std::vector<Complex> sample(int grid_n) const;

    TrigPoly truncated(int new_degree) const;
    double max_abs_coeff() const;

    TrigPoly& operator+=(const TrigPoly& o);
    TrigPoly& operator*=(Complex s);
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator*(Complex s, TrigPoly p) { return p *= s; }

private:
    int degree_;
    std::vector<Complex> coeffs_;  // size 2*degree+1, index k + degree
};

// Complex samples at the equispaced circle grid x_j = 2*pi*j/N.
// N must be a power of two, >= 4.
struct GridSamples {
    std::vector<Complex> values;

    explicit GridSamples(std::vector<Complex> v);
    int size() const { return static_cast<int>(values.size()); }
};

// Radix-2 transform, unnormalized.  forward: A_k = sum_j a_j e^{-2 pi i jk/N};
// inverse: a_j = sum_k A_k e^{+2 pi i jk/N}.
void fft_inplace(std::vector<Complex>& a, bool inverse);

// Smallest power of two >= max(256, 8*K).
int default_grid(int degree);

// Trapezoid-rule Fourier coefficients (spectrally accurate on the circle):
// coeff(k) = (1/N) sum_j s_j e^{-ik x_j}, |k| <= K.  Requires K < N/2.
TrigPoly dft_coeffs(const GridSamples& s, int K);

// A derived coefficient table with the boundary-coefficient tail magnitude.
struct DerivedPoly {
    TrigPoly poly;
    double tail = 0.0;
};

// Warn threshold for derived-quantity truncation tails.
inline constexpr double kTailWarn = 1e-10;

// Coefficients of log b for b real and strictly positive on the grid.
// K <= 0 selects the default 4 * deg(b); N <= 0 selects default_grid.
DerivedPoly trig_log(const TrigPoly& b, int K = 0, int N = 0);

// Coefficients of f / g for g real and strictly positive on the grid.
DerivedPoly trig_quotient(const TrigPoly& f, const TrigPoly& g, int K = 0, int N = 0);

// Coefficients of exp(f), with the degree grown until the boundary
// coefficient falls below tail_tol relative to the largest one.
TrigPoly trig_exp_auto(const TrigPoly& f, double tail_tol = 1e-16);

// sum_{k>=1} k f_k g_{-k}  (finite: both tables are finitely supported).
Complex szego_pairing(const TrigPoly& f, const TrigPoly& g);

}  // namespace szego::fourier
