#include "szego/asymptotics.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "szego/errors.hpp"
#include "szego/matfunc.hpp"

namespace szego::asym {

double zeta_int(int l) {
    if (l < 2) throw std::invalid_argument("zeta_int: need l >= 2");
    // Direct series to K-1 plus the Euler-Maclaurin tail at K.
    constexpr int K = 32;
    long double s = 0.0L;
    for (int k = K - 1; k >= 1; --k) s += powl(static_cast<long double>(k), static_cast<long double>(-l));
    const long double x = static_cast<long double>(K);
    const long double invK = 1.0L / x;
    long double tail = powl(x, static_cast<long double>(1 - l)) / (l - 1) +
                       0.5L * powl(x, static_cast<long double>(-l));
    // Bernoulli corrections B_2, B_4, B_6, B_8 with rising factorials of l.
    static const long double bern[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30};
    long double rising = static_cast<long double>(l);           // l
    long double fact = 1.0L;                                    // (2j)!
    long double kpow = powl(x, static_cast<long double>(-l - 1));
    for (int j = 1; j <= 4; ++j) {
        fact *= (2 * j - 1) * (2 * j);
        if (j > 1) {
            rising *= (l + 2 * j - 3);
            rising *= (l + 2 * j - 2);
            kpow *= invK * invK;
        }
        tail += bern[j - 1] / fact * rising * kpow;
    }
    return static_cast<double>(s + tail);
}

double euler_gamma() {
    return 0.577215664901532860606512090082402431042;
}

namespace {

// Column-scaled SVD least squares.  Returns coefficients; reports the scaled
// condition number through *condition.
std::vector<double> scaled_lstsq(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs,
                                 double* condition, const char* who) {
    const Eigen::Index cols = design.cols();
    Eigen::VectorXd scale(cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        scale(c) = design.col(c).cwiseAbs().maxCoeff();
        if (scale(c) == 0.0) throw FitError(std::string(who) + ": zero column in design (rank deficient)");
    }
    Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1), smax = sv(0);
    if (smin <= 0.0) throw FitError(std::string(who) + ": rank-deficient design");
    const double cond = smax / smin;
    if (condition) *condition = cond;
    if (cond > 1e12) throw FitError(std::string(who) + ": design condition exceeds 1e12");
    Eigen::VectorXd c = svd.solve(rhs).cwiseQuotient(scale);
    std::vector<double> out(static_cast<std::size_t>(cols));
    for (Eigen::Index i = 0; i < cols; ++i) out[static_cast<std::size_t>(i)] = c(i);
    return out;
}

}  // namespace

ResidueTable residues_fit(const std::vector<std::pair<int, double>>& samples, int d, int L) {
    if (d < 1) throw std::invalid_argument("residues_fit: d must be >= 1");
    if (L < 0) throw std::invalid_argument("residues_fit: L must be >= 0");
    const int cols = L + 1;
    if (static_cast<int>(samples.size()) < 2 * cols)
        throw std::invalid_argument("residues_fit: need at least 2(L+1) samples");
    for (const auto& [k, t] : samples)
        if (k < 1) throw std::invalid_argument("residues_fit: sample index k must be >= 1");

    Eigen::MatrixXd design(samples.size(), cols);
    Eigen::VectorXd rhs(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double k = samples[i].first;
        for (int l = 0; l <= L; ++l)
            design(static_cast<Eigen::Index>(i), l) = std::pow(k, static_cast<double>(d - 1 - l));
        rhs(static_cast<Eigen::Index>(i)) = samples[i].second;
    }

    ResidueTable table;
    table.dim = d;
    table.values = scaled_lstsq(design, rhs, &table.condition, "residues_fit");

    double resid = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double model = 0.0;
        for (int l = 0; l <= L; ++l)
            model += table.values[static_cast<std::size_t>(l)] *
                     design(static_cast<Eigen::Index>(i), l);
        resid = std::max(resid, std::abs(model - samples[i].second));
    }
    table.fit_residual = resid;
    return table;
}

EpsilonSeries epsilon_C(const std::vector<std::pair<int, double>>& samples,
                        const ResidueTable& residues, double zero_mode) {
    if (samples.empty()) throw std::invalid_argument("epsilon_C: no samples");
    const int k_max = static_cast<int>(samples.size());
    for (int i = 0; i < k_max; ++i)
        if (samples[static_cast<std::size_t>(i)].first != i + 1)
            throw std::invalid_argument("epsilon_C: samples must cover k = 1..k_max contiguously");

    EpsilonSeries out;
    out.zero_mode = zero_mode;
    out.eps.resize(static_cast<std::size_t>(k_max));
    double scale = 1.0;
    for (const auto& [k, t] : samples) scale = std::max(scale, std::abs(t));
    const double floor = 1e-13 * scale;

    for (int k = 1; k <= k_max; ++k) {
        double model = 0.0;
        for (std::size_t l = 0; l < residues.values.size(); ++l)
            model += residues.values[l] *
                     std::pow(static_cast<double>(k),
                              static_cast<double>(residues.dim - 1) - static_cast<double>(l));
        out.eps[static_cast<std::size_t>(k - 1)] = samples[static_cast<std::size_t>(k - 1)].second - model;
    }

    double sum = 0.0;
    for (double e : out.eps) sum += e;
    out.c_value = zero_mode + sum;

    // Tail from the last decade of samples: geometric ratio of |eps|.
    const int w_lo = std::max(1, k_max / 10);
    double wmax = 0.0;
    for (int k = w_lo; k <= k_max; ++k)
        wmax = std::max(wmax, std::abs(out.eps[static_cast<std::size_t>(k - 1)]));
    if (wmax <= floor) {
        out.tail_bound = 10.0 * floor;  // at the rounding floor already
    } else {
        // Log-linear fit of |eps| over the window.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        for (int k = w_lo; k <= k_max; ++k) {
            const double v = std::max(std::abs(out.eps[static_cast<std::size_t>(k - 1)]), 0.1 * floor);
            sx += k;
            sy += std::log(v);
            sxx += static_cast<double>(k) * k;
            sxy += k * std::log(v);
            ++cnt;
        }
        const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        const double ratio = std::exp(slope);
        if (ratio >= 0.999)
            throw ConvergenceError(
                "epsilon_C: deviations eps_k do not decay; absolute-summability hypothesis fails");
        const double last = std::max(std::abs(out.eps[static_cast<std::size_t>(k_max - 1)]), floor);
        out.tail_bound = last * ratio / (1.0 - ratio);
    }

    // Smallest index beyond which |eps| is nonincreasing (10% slack for noise).
    int idx = k_max;
    while (idx >= 2) {
        const double prev = std::abs(out.eps[static_cast<std::size_t>(idx - 2)]);
        const double cur = std::abs(out.eps[static_cast<std::size_t>(idx - 1)]);
        if (cur > prev * 1.1 + 0.01 * floor) break;
        --idx;
    }
    out.trunc_index = idx;
    return out;
}

bool PredictedCoefficients::has(const std::string& label) const {
    for (const auto& [l, v] : coeffs)
        if (l == label) return true;
    return false;
}

double PredictedCoefficients::at(const std::string& label) const {
    for (const auto& [l, v] : coeffs)
        if (l == label) return v;
    throw std::invalid_argument("PredictedCoefficients: no coefficient labeled '" + label + "'");
}

PredictedCoefficients prop3_coeffs(int d, const ResidueTable& residues, double c_value) {
    if (d < 1) throw std::invalid_argument("prop3_coeffs: d must be >= 1");
    const int L = static_cast<int>(residues.values.size()) - 1;
    PredictedCoefficients out;
    out.zeta_tail_bound = zeta_int(2) * residues.fit_residual;

    const double gamma = euler_gamma();
    if (d == 1) {
        double zser = 0.0;
        for (int l = 2; l <= L; ++l) zser += zeta_int(l) * residues.at(static_cast<std::size_t>(l));
        out.coeffs = {{"n", residues.at(0)},
                      {"log n", residues.at(1)},
                      {"1", c_value + gamma * residues.at(1) + zser},
                      {"1/n", 0.5 * residues.at(1) - residues.at(2)}};
    } else if (d == 2) {
        double zser = 0.0;
        for (int l = 2; l + 1 <= L; ++l) zser += zeta_int(l) * residues.at(static_cast<std::size_t>(l + 1));
        out.coeffs = {{"n^2", 0.5 * residues.at(0)},
                      {"n", 0.5 * residues.at(0) + residues.at(1)},
                      {"log n", residues.at(2)},
                      {"1", c_value + gamma * residues.at(2) + zser}};
    } else {
        out.coeffs = {{"n^" + std::to_string(d), residues.at(0) / d},
                      {"n^" + std::to_string(d - 1), 0.5 * residues.at(0) + residues.at(1) / (d - 1)},
                      {"n^" + std::to_string(d - 2),
                       (d - 1) / 12.0 * residues.at(0) + 0.5 * residues.at(1) + residues.at(2) / (d - 2)},
                      {"log n", residues.at(static_cast<std::size_t>(d))}};
        if (d == 3) {
            // n^1 label reads better than n^1; keep the plain form.
            out.coeffs[2].first = "n";
        }
    }
    return out;
}

PredictedCoefficients predicted_cor4(const fourier::TrigPoly& log_b0,
                                     const fourier::TrigPoly& bsub,
                                     double c_log_b, const ResidueTable& residues_log_b) {
    if (!log_b0.is_real_valued(1e-9) || !bsub.is_real_valued(1e-9))
        throw std::domain_error("predicted_cor4: symbols must be real-valued");

    // Samples of q = bsub / b0 with b0 = exp(log b0) > 0 by construction.
    const int N = fourier::default_grid(8 * (log_b0.degree() + bsub.degree() + 4));
    auto lb = log_b0.sample(N);
    auto bs = bsub.sample(N);
    std::vector<std::complex<double>> q(lb.size());
    std::complex<double> mean_q(0, 0), mean_q_q2(0, 0);
    for (std::size_t j = 0; j < lb.size(); ++j) {
        q[j] = bs[j] / std::exp(lb[j]);
        mean_q += q[j];
        mean_q_q2 += q[j] + q[j] * q[j];
    }
    mean_q /= static_cast<double>(N);
    mean_q_q2 /= static_cast<double>(N);

    const int Kq = std::max(log_b0.degree(), 1);
    fourier::TrigPoly qpoly = fourier::dft_coeffs(fourier::GridSamples(std::move(q)), Kq);

    const double gamma = euler_gamma();
    const int L = static_cast<int>(residues_log_b.values.size()) - 1;
    double zser = 0.0;
    for (int l = 2; l <= L; ++l) zser += zeta_int(l) * residues_log_b.at(static_cast<std::size_t>(l));

    const double pair_self = std::real(fourier::szego_pairing(log_b0, log_b0));
    // Average of the two cotangent directions; real for real symbols.
    const std::complex<double> cross =
        0.5 * (fourier::szego_pairing(log_b0, qpoly) + fourier::szego_pairing(qpoly, log_b0));

    PredictedCoefficients out;
    out.zeta_tail_bound = zeta_int(2) * residues_log_b.fit_residual;
    out.coeffs = {{"n", 2.0 * std::real(log_b0.coeff(0))},
                  {"log n", 2.0 * std::real(mean_q)},
                  {"1", pair_self + c_log_b + gamma * residues_log_b.at(1) + zser},
                  {"1/n", std::real(cross) + std::real(mean_q_q2)}};
    return out;
}

double w_log(double y1, double y2) {
    if (y1 <= 0.0 || y2 <= 0.0) throw std::domain_error("w_log: arguments must be positive");
    return -0.5 * std::log(y1) * std::log(y2);
}

namespace {

// g(u) = log(1-u)/u, analytically extended through u = 0 (g(0) = -1).
double log_kernel(double u) {
    if (std::abs(u) < 0.25) {
        // -sum_{p>=0} u^p / (p+1)
        double sum = 0.0, pw = 1.0;
        for (int p = 0; p < 40; ++p) {
            sum += pw / (p + 1);
            pw *= u;
            if (std::abs(pw) < 1e-19) break;
        }
        return -sum;
    }
    return std::log1p(-u) / u;
}

std::complex<double> log_kernel_c(std::complex<double> z) {
    if (std::abs(z) < 0.25) {
        std::complex<double> sum(0, 0), pw(1, 0);
        for (int p = 0; p < 48; ++p) {
            sum += pw / static_cast<double>(p + 1);
            pw *= z;
            if (std::abs(pw) < 1e-19) break;
        }
        return -sum;
    }
    return std::log(1.0 - z) / z;
}

// Second divided difference of the log kernel over three points < 1.
// Three routes: the complete-homogeneous series near the origin (covers every
// coincidence), the plain three-point formula when the points are separated,
// and a contour integral for clustered points away from the origin.
double divided_difference3(double u1, double u2, double u3) {
    const double mx = std::max({std::abs(u1), std::abs(u2), std::abs(u3)});
    if (mx <= 0.6) {
        const double e1 = u1 + u2 + u3;
        const double e2 = u1 * u2 + u1 * u3 + u2 * u3;
        const double e3 = u1 * u2 * u3;
        double h0 = 1.0, h1 = e1, h2 = e1 * e1 - e2;  // h_q recurrence seeds
        double sum = -(h0 / 3.0 + h1 / 4.0 + h2 / 5.0);
        double hq2 = h0, hq1 = h1, hq = h2;
        double bound = 1.0;
        for (int q = 3; q < 400; ++q) {
            const double next = e1 * hq - e2 * hq1 + e3 * hq2;
            hq2 = hq1;
            hq1 = hq;
            hq = next;
            sum -= hq / (q + 3.0);
            bound = 0.5 * (q + 1) * (q + 2) * std::pow(mx, q);
            if (bound / (q + 3.0) < 1e-17 * (1.0 + std::abs(sum))) break;
        }
        return sum;
    }

    const double d12 = std::abs(u1 - u2), d13 = std::abs(u1 - u3), d23 = std::abs(u2 - u3);
    if (std::min({d12, d13, d23}) >= 1e-3) {
        return log_kernel(u1) / ((u1 - u2) * (u1 - u3)) +
               log_kernel(u2) / ((u2 - u1) * (u2 - u3)) +
               log_kernel(u3) / ((u3 - u1) * (u3 - u2));
    }

    // Clustered away from the origin: Cauchy integral on a circle enclosing
    // the points and staying left of the branch point at 1.
    const double lo = std::min({u1, u2, u3}), hi = std::max({u1, u2, u3});
    const double c0 = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double r = std::max(1.1 * half + 1e-3, 0.02);
    if (c0 + r >= 1.0) {
        r = 0.5 * (1.0 - c0 + half);
        if (c0 + r >= 1.0 || r <= half)
            throw ConvergenceError("divided_difference3: no admissible contour (points too close to 1)");
    }
    std::complex<double> prev(0, 0);
    for (int m = 64; m <= 16384; m *= 2) {
        std::complex<double> acc(0, 0);
        for (int i = 0; i < m; ++i) {
            const double th = 2.0 * std::numbers::pi * i / m;
            const std::complex<double> e(std::cos(th), std::sin(th));
            const std::complex<double> z = c0 + r * e;
            acc += r * e * log_kernel_c(z) / ((z - u1) * (z - u2) * (z - u3));
        }
        acc /= static_cast<double>(m);
        if (m > 64 && std::abs(acc - prev) < 1e-14 * (1.0 + std::abs(acc))) return acc.real();
        prev = acc;
    }
    return prev.real();
}

// Adaptive Gauss7/Kronrod15 on a (possibly reversed) interval.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};

    auto kernel = [&](double lo, double hi, double& err) {
        const double x0 = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        const double y0 = f(x0);
        double g7 = nw[0][1] * y0;
        double k15 = nw[0][2] * y0;
        for (int i = 1; i < 8; ++i) {
            const double dx = h * nw[i][0];
            const double yi = f(x0 + dx) + f(x0 - dx);
            g7 += nw[i][1] * yi;
            k15 += nw[i][2] * yi;
        }
        g7 *= h;
        k15 *= h;
        err = std::abs(k15 - g7);
        return k15;
    };

    struct Seg { double lo, hi; };
    std::vector<Seg> stack{{a, b}};
    double total = 0.0;
    int splits = 0;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        double err;
        const double v = kernel(s.lo, s.hi, err);
        if (err <= abs_tol * std::max(1e-3, std::abs(s.hi - s.lo) / std::abs(b - a)) ||
            std::abs(s.hi - s.lo) < 1e-13) {
            total += v;
            continue;
        }
        if (++splits > 4000) throw ConvergenceError("integrate_adaptive: too many subdivisions");
        const double mid = 0.5 * (s.lo + s.hi);
        stack.push_back({s.lo, mid});
        stack.push_back({mid, s.hi});
    }
    return total;
}

}  // namespace

double phi_log(double y1, double y2, double y3, double tol, PhiReading reading) {
    if (y1 >= 1.0 || y2 >= 1.0 || y3 >= 1.0)
        throw std::domain_error("phi_log: arguments must be < 1");
    if (y1 == 0.0 || y2 == 0.0) return 0.0;  // empty integration range
    if (y3 == 0.0) return 0.0;               // the y3 -> 0 limit

    const double inner_tol = tol / (8.0 * std::max(1.0, std::abs(y1)) * std::max(1.0, std::abs(y3)));

    std::function<double(double)> outer;
    if (reading == PhiReading::kThirdArgFixed) {
        outer = [&](double u1) {
            return integrate_adaptive(
                [&](double u2) { return divided_difference3(u1, u2, y3); }, 0.0, y2, inner_tol);
        };
        return y3 * integrate_adaptive(outer, 0.0, y1, tol / (2.0 * std::max(1.0, std::abs(y3))));
    }
    // Third point integrated: the y3 prefactor becomes the average over [0, y3].
    outer = [&](double u1) {
        return integrate_adaptive(
            [&](double u2) {
                return integrate_adaptive(
                    [&](double u3) { return divided_difference3(u1, u2, u3); }, 0.0, y3,
                    inner_tol / 4.0);
            },
            0.0, y2, inner_tol);
    };
    return integrate_adaptive(outer, 0.0, y1, tol / 2.0);
}

namespace {

std::function<double(double)> basis_eval(const std::string& label) {
    if (label == "1") return [](double) { return 1.0; };
    if (label == "n") return [](double n) { return n; };
    if (label == "n^2") return [](double n) { return n * n; };
    if (label == "n^3") return [](double n) { return n * n * n; };
    if (label == "log n") return [](double n) { return std::log(n); };
    if (label == "1/n") return [](double n) { return 1.0 / n; };
    if (label == "1/n^2") return [](double n) { return 1.0 / (n * n); };
    throw std::invalid_argument("fit_expansion: unknown basis label '" + label + "'");
}

}  // namespace

double ExpansionFit::coeff(const std::string& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label) return coeffs[i];
    throw std::invalid_argument("ExpansionFit: no basis element '" + label + "'");
}

double ExpansionFit::eval(double n) const {
    double v = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) v += coeffs[i] * basis_eval(basis[i])(n);
    return v;
}

ExpansionFit fit_expansion(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::string>& basis) {
    if (basis.empty()) throw std::invalid_argument("fit_expansion: empty basis");
    if (points.size() < basis.size())
        throw FitError("fit_expansion: fewer points than basis elements");
    if (basis.size() >= 2) {
        double lo = points[0].first, hi = points[0].first;
        for (const auto& [n, v] : points) {
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
        if (lo <= 0.0 || hi < 2.0 * lo)
            throw FitError("fit_expansion: n values must span at least one octave");
    }

    std::vector<std::function<double(double)>> evals;
    evals.reserve(basis.size());
    for (const auto& label : basis) evals.push_back(basis_eval(label));

    Eigen::MatrixXd design(points.size(), basis.size());
    Eigen::VectorXd rhs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t c = 0; c < basis.size(); ++c)
            design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
                evals[c](points[i].first);
        rhs(static_cast<Eigen::Index>(i)) = points[i].second;
    }

    ExpansionFit fit;
    fit.basis = basis;
    fit.coeffs = scaled_lstsq(design, rhs, &fit.condition, "fit_expansion");
    fit.residuals.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double model = 0.0;
        for (std::size_t c = 0; c < basis.size(); ++c)
            model += fit.coeffs[c] * design(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
        fit.residuals[i] = points[i].second - model;
        fit.max_residual_n2 =
            std::max(fit.max_residual_n2, std::abs(fit.residuals[i]) * points[i].first * points[i].first);
    }
    return fit;
}

double constant_term_probe(const fourier::TrigPoly& c1, const std::vector<int>& n_grid,
                           int buffer, ProbeDiagnostics* diag) {
    if (n_grid.empty()) throw std::invalid_argument("constant_term_probe: empty n grid");
    for (std::size_t i = 1; i < n_grid.size(); ++i)
        if (n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("constant_term_probe: n grid must be strictly increasing");

    const int n_max = n_grid.back();
    const int hw = n_max + std::max(buffer, 8);

    op::OpMatrix x = op::build_toeplitz(c1, hw);
    // D^{1/2} C1 D^{1/2}: scale row and column k by 1/sqrt(|k|), zero mode out.
    Eigen::VectorXd dh(2 * hw + 1);
    for (int k = -hw; k <= hw; ++k)
        dh(k + hw) = (k == 0) ? 0.0 : 1.0 / std::sqrt(std::abs(static_cast<double>(k)));
    x.raw() = dh.asDiagonal() * x.raw() * dh.asDiagonal();

    const double rho = matfunc::spectral_radius_estimate(x);
    if (rho >= matfunc::kLogSeriesGate)
        throw ConvergenceError("constant_term_probe: spectral gate failed (norm of D^{1/2} C1 D^{1/2} too large)");

    op::OpMatrix m = op::OpMatrix::identity(hw) - x;
    matfunc::MatrixLogResult ml = matfunc::matrix_log(m);

    std::vector<std::pair<double, double>> points;
    points.reserve(n_grid.size());
    for (int n : n_grid) {
        double s = 0.0;
        for (int k = -n; k <= n; ++k) s += ml.log(k, k).real();
        points.emplace_back(static_cast<double>(n), s);
    }
    ExpansionFit fit = fit_expansion(points, {"n", "log n", "1", "1/n"});
    const double c0 = fit.coeff("1");
    if (diag) {
        diag->gate_radius = rho;
        diag->fit = std::move(fit);
        diag->series_terms = ml.terms;
    }
    return c0;
}

}  // namespace szego::asym
