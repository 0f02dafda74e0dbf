#include "szego/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace szego::fourier {

namespace {

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

TrigPoly::TrigPoly(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(2 * degree + 1), Complex(0, 0)) {
    if (degree < 0) throw std::invalid_argument("TrigPoly: negative degree");
}

TrigPoly TrigPoly::from_coeffs(const std::map<int, Complex>& coeffs) {
    int deg = 0;
    for (const auto& [k, v] : coeffs)
        if (v != Complex(0, 0)) deg = std::max(deg, std::abs(k));
    TrigPoly p(deg);
    for (const auto& [k, v] : coeffs)
        if (std::abs(k) <= deg) p.set_coeff(k, v);
    return p;
}

Complex TrigPoly::coeff(int k) const {
    if (std::abs(k) > degree_) return Complex(0, 0);
    return coeffs_[static_cast<std::size_t>(k + degree_)];
}

void TrigPoly::set_coeff(int k, Complex v) {
    if (std::abs(k) > degree_) throw std::out_of_range("TrigPoly::set_coeff: |k| > degree");
    coeffs_[static_cast<std::size_t>(k + degree_)] = v;
}

bool TrigPoly::is_real_valued(double tol) const {
    for (int k = 0; k <= degree_; ++k)
        if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
    return true;
}

std::vector<Complex> TrigPoly::sample(int grid_n) const {
    if (!is_pow2(grid_n) || grid_n < 4)
        throw std::invalid_argument("TrigPoly::sample: grid size must be a power of two >= 4");
    if (2 * degree_ >= grid_n)
        throw std::invalid_argument("TrigPoly::sample: grid too small for the degree");
    std::vector<Complex> bins(static_cast<std::size_t>(grid_n), Complex(0, 0));
    for (int k = -degree_; k <= degree_; ++k) {
        const int bin = (k % grid_n + grid_n) % grid_n;
        bins[static_cast<std::size_t>(bin)] += coeff(k);
    }
    fft_inplace(bins, /*inverse=*/true);  // s_j = sum_k c_k e^{+ik x_j}
    return bins;
}

TrigPoly TrigPoly::truncated(int new_degree) const {
    TrigPoly p(new_degree);
    for (int k = -std::min(new_degree, degree_); k <= std::min(new_degree, degree_); ++k)
        p.set_coeff(k, coeff(k));
    return p;
}

double TrigPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (o.degree_ > degree_) {
        TrigPoly grown = truncated(o.degree_);
        *this = grown;
    }
    for (int k = -o.degree_; k <= o.degree_; ++k)
        coeffs_[static_cast<std::size_t>(k + degree_)] += o.coeff(k);
    return *this;
}

TrigPoly& TrigPoly::operator*=(Complex s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

GridSamples::GridSamples(std::vector<Complex> v) : values(std::move(v)) {
    if (!is_pow2(size()) || size() < 4)
        throw std::invalid_argument("GridSamples: size must be a power of two >= 4");
}

void fft_inplace(std::vector<Complex>& a, bool inverse) {
    const int n = static_cast<int>(a.size());
    if (!is_pow2(n)) throw std::invalid_argument("fft_inplace: size must be a power of two");

    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / len * (inverse ? 1.0 : -1.0);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < n; i += len) {
            Complex w(1, 0);
            for (int k = 0; k < len / 2; ++k) {
                Complex u = a[static_cast<std::size_t>(i + k)];
                Complex v = a[static_cast<std::size_t>(i + k + len / 2)] * w;
                a[static_cast<std::size_t>(i + k)] = u + v;
                a[static_cast<std::size_t>(i + k + len / 2)] = u - v;
                w *= wl;
            }
        }
    }
}

int default_grid(int degree) {
    int n = 256;
    while (n < 8 * degree) n <<= 1;
    return n;
}

TrigPoly dft_coeffs(const GridSamples& s, int K) {
    const int n = s.size();
    if (K < 0 || 2 * K >= n)
        throw std::invalid_argument("dft_coeffs: need K < N/2");
    std::vector<Complex> bins = s.values;
    fft_inplace(bins, /*inverse=*/false);
    TrigPoly p(K);
    for (int k = -K; k <= K; ++k) {
        const int bin = (k % n + n) % n;
        p.set_coeff(k, bins[static_cast<std::size_t>(bin)] / static_cast<double>(n));
    }
    return p;
}

namespace {

// Samples of b on a common grid, validated real and strictly positive.
std::vector<double> positive_real_samples(const TrigPoly& b, int N, const char* who) {
    auto vals = b.sample(N);
    std::vector<double> out(vals.size());
    for (std::size_t j = 0; j < vals.size(); ++j) {
        if (std::abs(vals[j].imag()) > 1e-10 * (1.0 + std::abs(vals[j].real())))
            throw std::domain_error(std::string(who) + ": symbol is not real-valued on the grid");
        if (vals[j].real() <= 0.0)
            throw std::domain_error(std::string(who) + ": nonpositive sample detected");
        out[j] = vals[j].real();
    }
    return out;
}

double boundary_tail(const TrigPoly& p) {
    return std::max(std::abs(p.coeff(p.degree())), std::abs(p.coeff(-p.degree())));
}

}  // namespace

DerivedPoly trig_log(const TrigPoly& b, int K, int N) {
    if (K <= 0) K = std::max(1, 4 * b.degree());
    if (N <= 0) N = default_grid(std::max(K, b.degree()));
    if (2 * K >= N) throw std::invalid_argument("trig_log: K too large for grid");
    auto vals = positive_real_samples(b, N, "trig_log");
    std::vector<Complex> logs(vals.size());
    for (std::size_t j = 0; j < vals.size(); ++j) logs[j] = Complex(std::log(vals[j]), 0.0);
    DerivedPoly out{dft_coeffs(GridSamples(std::move(logs)), K), 0.0};
    out.tail = boundary_tail(out.poly);
    return out;
}

DerivedPoly trig_quotient(const TrigPoly& f, const TrigPoly& g, int K, int N) {
    if (K <= 0) K = std::max(1, 4 * std::max(f.degree(), g.degree()));
    if (N <= 0) N = default_grid(std::max({K, f.degree(), g.degree()}));
    if (2 * K >= N) throw std::invalid_argument("trig_quotient: K too large for grid");
    auto den = positive_real_samples(g, N, "trig_quotient");
    auto num = f.sample(N);
    for (std::size_t j = 0; j < num.size(); ++j) num[j] /= den[j];
    DerivedPoly out{dft_coeffs(GridSamples(std::move(num)), K), 0.0};
    out.tail = boundary_tail(out.poly);
    return out;
}

TrigPoly trig_exp_auto(const TrigPoly& f, double tail_tol) {
    int K = std::max(8, 2 * f.degree());
    for (;;) {
        const int N = default_grid(K);
        auto vals = f.sample(N);
        std::vector<Complex> ex(vals.size());
        for (std::size_t j = 0; j < vals.size(); ++j) ex[j] = std::exp(vals[j]);
        TrigPoly p = dft_coeffs(GridSamples(std::move(ex)), K);
        const double scale = std::max(1.0, p.max_abs_coeff());
        if (boundary_tail(p) < tail_tol * scale || K >= 4096) {
            // Shrink to the smallest degree carrying coefficients above the tolerance.
            int eff = 0;
            for (int k = 1; k <= K; ++k)
                if (std::abs(p.coeff(k)) >= tail_tol * scale ||
                    std::abs(p.coeff(-k)) >= tail_tol * scale)
                    eff = k;
            return p.truncated(std::max(eff, 1));
        }
        K *= 2;
    }
}

Complex szego_pairing(const TrigPoly& f, const TrigPoly& g) {
    const int kmax = std::min(f.degree(), g.degree());
    Complex sum(0, 0);
    for (int k = 1; k <= kmax; ++k)
        sum += static_cast<double>(k) * f.coeff(k) * g.coeff(-k);
    return sum;
}

}  // namespace szego::fourier
