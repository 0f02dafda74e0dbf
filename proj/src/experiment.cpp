#include "szego/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <json.hpp>

#include "szego/errors.hpp"
#include "szego/matfunc.hpp"
#include "szego/opmatrix.hpp"
#include "szego/symbol_expr.hpp"

namespace szego::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_quotes(const std::string& s) {
    if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                          (s.front() == '\'' && s.back() == '\'')))
        return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

KeyValueFile KeyValueFile::from_string(const std::string& text) {
    KeyValueFile kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
            continue;  // sections are organizational only
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (kv.values_.count(key))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv.values_[key] = val;
    }
    return kv;
}

bool KeyValueFile::has(const std::string& key) const { return values_.count(key) != 0; }

std::string KeyValueFile::get_str(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : strip_quotes(it->second);
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("key '" + key + "': not a number: " + it->second);
    }
}

int KeyValueFile::get_int(const std::string& key, int fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t used = 0;
        const int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw ConfigError("");
        return v;
    } catch (...) {
        throw ConfigError("key '" + key + "': not an integer: " + it->second);
    }
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string v = it->second;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': not a boolean: " + v);
}

std::vector<int> KeyValueFile::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (const auto& tok : get_str_list(key)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw ConfigError("");
        } catch (...) {
            throw ConfigError("key '" + key + "': not an integer list element: " + tok);
        }
    }
    return out;
}

std::vector<std::string> KeyValueFile::get_str_list(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return {};
    return split_list(it->second);
}

void KeyValueFile::require_known(const std::vector<std::string>& allowed) const {
    for (const auto& [k, v] : values_)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw ConfigError("unknown config key '" + k + "'");
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    return from_kv(KeyValueFile::load(path));
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueFile& kv) {
    kv.require_known({"log_b0", "b_sub", "n_grid", "buffer", "k_max", "residue_terms", "tol",
                      "drift_check", "phi_u3_reading", "seed"});
    ExperimentConfig cfg;
    cfg.log_b0_expr = kv.get_str("log_b0", cfg.log_b0_expr);
    cfg.b_sub_expr = kv.get_str("b_sub", cfg.b_sub_expr);
    if (kv.has("n_grid")) cfg.n_grid = kv.get_int_list("n_grid");
    cfg.buffer = kv.get_int("buffer", cfg.buffer);
    cfg.k_max = kv.get_int("k_max", cfg.k_max);
    cfg.residue_terms = kv.get_int("residue_terms", cfg.residue_terms);
    cfg.tol = kv.get_double("tol", cfg.tol);
    cfg.drift_check = kv.get_bool("drift_check", cfg.drift_check);
    const std::string reading = kv.get_str("phi_u3_reading", "y3");
    if (reading == "y3") cfg.phi_u3_as_y3 = true;
    else if (reading == "integrated") cfg.phi_u3_as_y3 = false;
    else throw ConfigError("phi_u3_reading must be 'y3' or 'integrated'");
    cfg.seed = static_cast<std::uint64_t>(kv.get_int("seed", 1));

    if (cfg.n_grid.empty()) throw ConfigError("n_grid must be nonempty");
    for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
        if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
            throw ConfigError("n_grid must be strictly increasing");
    if (cfg.n_grid.front() < 1) throw ConfigError("n_grid entries must be >= 1");
    if (cfg.tol <= 0.0) throw ConfigError("tol must be positive");
    if (cfg.residue_terms < 0) throw ConfigError("residue_terms must be >= 0");
    return cfg;
}

namespace {

// b_sub may be tied to the principal symbol: "b0" or "<real> * b0".
bool parse_b0_ratio(const std::string& expr, double* ratio) {
    const std::string t = trim(expr);
    if (t == "b0") {
        *ratio = 1.0;
        return true;
    }
    const std::size_t star = t.find('*');
    if (star == std::string::npos) return false;
    if (trim(t.substr(star + 1)) != "b0") return false;
    try {
        std::size_t used = 0;
        const std::string head = trim(t.substr(0, star));
        *ratio = std::stod(head, &used);
        return used == head.size();
    } catch (...) {
        return false;
    }
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Report run_szego_experiment(const ExperimentConfig& cfg) {
    Report rep;

    const fourier::TrigPoly log_b0 = parse_symbol_expr(cfg.log_b0_expr);
    const fourier::TrigPoly b0 = fourier::trig_exp_auto(log_b0);
    double ratio = 0.0;
    fourier::TrigPoly bsub(0);
    if (parse_b0_ratio(cfg.b_sub_expr, &ratio)) {
        bsub = ratio * b0;
    } else {
        bsub = parse_symbol_expr(cfg.b_sub_expr);
    }

    const int bandwidth = std::max(b0.degree(), bsub.degree());
    const int buffer = cfg.buffer > 0 ? cfg.buffer : std::max(32, 4 * bandwidth);
    const int n_max = cfg.n_grid.back();
    const int k_max = cfg.k_max > 0 ? std::min(cfg.k_max, n_max) : std::min(n_max, 200);

    rep.config_echo = {{"log_b0", cfg.log_b0_expr},
                       {"b_sub", cfg.b_sub_expr},
                       {"n_grid", join_ints(cfg.n_grid)},
                       {"buffer", std::to_string(buffer)},
                       {"k_max", std::to_string(k_max)},
                       {"residue_terms", std::to_string(cfg.residue_terms)},
                       {"tol", fmt_double(cfg.tol)},
                       {"drift_check", cfg.drift_check ? "true" : "false"},
                       {"phi_u3_reading", cfg.phi_u3_as_y3 ? "y3" : "integrated"},
                       {"seed", std::to_string(cfg.seed)}};

    // Measured log determinants.  The matrix entries do not depend on the
    // half width, so one build at n_max serves every truncation.
    const op::OpMatrix b_full = op::build_psdo(b0, bsub, n_max);
    std::vector<double> logdets;
    double max_imag = 0.0;
    logdets.reserve(cfg.n_grid.size());
    for (int n : cfg.n_grid) {
        const auto ld = matfunc::logdet_lu(op::truncate(b_full, n));
        logdets.push_back(ld.value.real());
        max_imag = std::max(max_imag, std::abs(ld.value.imag()));
    }

    // One matrix log at the top of the grid covers every partial trace.
    const matfunc::LogBlockResult clb =
        matfunc::central_log_block(b0, bsub, n_max, buffer, cfg.tol, cfg.drift_check);

    std::vector<double> trace_logs;
    trace_logs.reserve(cfg.n_grid.size());
    for (int n : cfg.n_grid) {
        double s = 0.0;
        for (int k = -n; k <= n; ++k) s += clb.block(k, k).real();
        trace_logs.push_back(s);
    }

    // Eigenspace traces, residues, deviations.
    std::vector<std::pair<int, double>> pi_samples;
    pi_samples.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k)
        pi_samples.emplace_back(k, op::pi_trace(clb.block, k).real());

    const int fit_lo = std::max(8, k_max / 8);
    std::vector<std::pair<int, double>> fit_window(
        pi_samples.begin() + std::min<std::ptrdiff_t>(fit_lo - 1, static_cast<std::ptrdiff_t>(pi_samples.size())),
        pi_samples.end());
    const asym::ResidueTable residues = asym::residues_fit(fit_window, 1, cfg.residue_terms);
    const asym::EpsilonSeries eps =
        asym::epsilon_C(pi_samples, residues, clb.block(0, 0).real());

    const asym::PredictedCoefficients pred =
        asym::predicted_cor4(log_b0, bsub, eps.c_value, residues);

    // Fit the measured series.
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < cfg.n_grid.size(); ++i)
        points.emplace_back(static_cast<double>(cfg.n_grid[i]), logdets[i]);
    const std::vector<std::string> basis = {"n", "log n", "1", "1/n"};
    const asym::ExpansionFit fit = asym::fit_expansion(points, basis);

    for (const auto& label : basis) {
        ReportCoefficient row;
        row.label = label;
        row.fitted = true;
        row.measured = fit.coeff(label);
        row.predicted = pred.at(label);
        row.delta = row.measured - row.predicted;
        rep.coefficients.push_back(row);
    }

    double pred_max_residual_n2 = 0.0;
    for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) {
        ReportPoint pt;
        pt.n = cfg.n_grid[i];
        pt.logdet_measured = logdets[i];
        pt.trace_log_measured = trace_logs[i];
        const double n = static_cast<double>(pt.n);
        pt.predicted_total = pred.at("n") * n + pred.at("log n") * std::log(n) + pred.at("1") +
                             pred.at("1/n") / n;
        pt.residual = pt.logdet_measured - pt.predicted_total;
        pred_max_residual_n2 = std::max(pred_max_residual_n2, std::abs(pt.residual) * n * n);
        rep.points.push_back(pt);
    }

    rep.diagnostics = {{"bandwidth", static_cast<double>(bandwidth)},
                       {"buffer", static_cast<double>(buffer)},
                       {"log_series_terms", static_cast<double>(clb.series_terms)},
                       {"log_tail_estimate", clb.tail_estimate},
                       {"log_block_drift", clb.drift},
                       {"logdet_max_imag", max_imag},
                       {"residue_condition", residues.condition},
                       {"residue_fit_residual", residues.fit_residual},
                       {"zero_mode", eps.zero_mode},
                       {"c_value", eps.c_value},
                       {"eps_tail_bound", eps.tail_bound},
                       {"eps_trunc_index", static_cast<double>(eps.trunc_index)},
                       {"fit_condition", fit.condition},
                       {"fit_max_residual_n2", fit.max_residual_n2},
                       {"pred_max_residual_n2", pred_max_residual_n2},
                       {"zeta_tail_bound", pred.zeta_tail_bound}};
    return rep;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

comb::RationalVector rand_vector(std::mt19937_64& rng, int m) {
    comb::RationalVector a;
    a.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) a.push_back(rand_rational(rng));
    return a;
}

std::string vec_str(const comb::RationalVector& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s + ")";
}

fourier::TrigPoly rand_real_poly(std::mt19937_64& rng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    fourier::TrigPoly p(degree);
    p.set_coeff(0, fourier::Complex(1.0 + u(rng) * 0.1, 0.0));
    for (int k = 1; k <= degree; ++k) {
        const fourier::Complex c(u(rng), u(rng));
        p.set_coeff(k, c);
        p.set_coeff(-k, std::conj(c));
    }
    return p;
}

void verify_hd(Report& rep, std::mt19937_64& rng, int m_cap, int cases) {
    long checked = 0;
    // Exhaustive small-integer sweep.
    for (int m = 1; m <= std::min(4, m_cap); ++m) {
        std::vector<int> digit(static_cast<std::size_t>(m), -2);
        for (;;) {
            comb::RationalVector a;
            for (int v : digit) a.push_back(Rational(v));
            auto [lhs, rhs] = comb::hd_sides(a);
            ++checked;
            if (lhs != rhs)
                rep.failures.push_back("hd mismatch at " + vec_str(a) + ": " + lhs.str() +
                                       " != " + rhs.str());
            int pos = m - 1;
            while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == 2) {
                digit[static_cast<std::size_t>(pos)] = -2;
                --pos;
            }
            if (pos < 0) break;
            ++digit[static_cast<std::size_t>(pos)];
        }
    }
    // Random rational vectors, checked against the n = 1 power identity too.
    std::uniform_int_distribution<int> mpick(1, m_cap);
    for (int i = 0; i < cases; ++i) {
        const auto a = rand_vector(rng, mpick(rng));
        auto [lhs, rhs] = comb::hd_sides(a);
        const Rational g1 = comb::ghd_lhs(a, 1);
        ++checked;
        if (lhs != rhs || g1 != lhs)
            rep.failures.push_back("hd/ghd(n=1) mismatch at " + vec_str(a));
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

void verify_ghd(Report& rep, std::mt19937_64& rng, int m_cap, int n_cap, int cases) {
    long checked = 0;
    std::uniform_int_distribution<int> mpick(1, m_cap);
    std::uniform_int_distribution<int> npick(1, n_cap);
    for (int i = 0; i < cases; ++i) {
        const int m = mpick(rng);
        const int n = npick(rng);
        const auto a = rand_vector(rng, m);
        const Rational lhs = comb::ghd_lhs(a, n);
        const Rational rhs = comb::ghd_rhs(a, n);
        ++checked;
        if (lhs != rhs)
            rep.failures.push_back("ghd mismatch at " + vec_str(a) + " n=" + std::to_string(n) +
                                   ": " + lhs.str() + " != " + rhs.str());
        // Permutation invariance of the symmetrized sum.
        auto b = a;
        std::shuffle(b.begin(), b.end(), rng);
        if (comb::ghd_lhs(b, n) != lhs)
            rep.failures.push_back("ghd permutation variance at " + vec_str(a));
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

void verify_bst(Report& rep, std::mt19937_64& rng, int m_cap, int cases) {
    long checked = 0;
    std::uniform_int_distribution<int> mpick(1, m_cap);
    for (int i = 0; i < cases; ++i) {
        const auto a = rand_vector(rng, mpick(rng));
        auto [left, right] = comb::bst_multisets(a);
        ++checked;
        if (left != right)
            rep.failures.push_back("bst mismatch at " + vec_str(a) + ": " + left.str() +
                                   " != " + right.str());
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

void verify_rw(Report& rep, int m_cap, int n_cap) {
    using comb::StepDistribution;
    static const char* probs[20][3] = {
        {"1/2", "0", "1/2"},    {"1/3", "1/3", "1/3"},  {"1/4", "1/2", "1/4"},
        {"1/6", "1/3", "1/2"},  {"2/5", "1/5", "2/5"},  {"1/2", "1/4", "1/4"},
        {"1/4", "1/4", "1/2"},  {"3/10", "2/5", "3/10"},{"1/5", "3/5", "1/5"},
        {"1/2", "1/3", "1/6"},  {"1/6", "2/3", "1/6"},  {"2/3", "1/6", "1/6"},
        {"1/8", "3/4", "1/8"},  {"3/8", "1/4", "3/8"},  {"5/12", "1/6", "5/12"},
        {"1/12", "5/6", "1/12"},{"7/16", "1/8", "7/16"},{"1/16", "7/8", "1/16"},
        {"9/20", "1/10", "9/20"},{"1/10", "4/5", "1/10"}};
    long checked = 0;
    for (const auto& row : probs) {
        StepDistribution dist({Rational(-1), Rational(0), Rational(1)},
                              {Rational(std::string(row[0])), Rational(std::string(row[1])),
                               Rational(std::string(row[2]))});
        for (int n = 1; n <= n_cap; ++n) {
            Rational prev(0);
            for (int m = 1; m <= m_cap; ++m) {
                const Rational v = comb::rw_max_moment(dist, m, n);
                const Rational o = comb::rw_max_moment_oracle(dist, m, n);
                ++checked;
                if (v != o)
                    rep.failures.push_back("rw moment mismatch p=(" + std::string(row[0]) + "," +
                                           row[1] + "," + row[2] + ") m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) + ": " + v.str() +
                                           " != " + o.str());
                if (v < prev)
                    rep.failures.push_back("rw moment not monotone in m at m=" + std::to_string(m));
                prev = v;
            }
        }
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

void verify_trace_identity(Report& rep, std::mt19937_64& rng) {
    long checked = 0;
    for (int fixture = 0; fixture < 3; ++fixture) {
        const fourier::TrigPoly b0 = rand_real_poly(rng, 2, 0.15);
        const fourier::TrigPoly bsub = rand_real_poly(rng, 2, 0.2);
        for (int m = 1; m <= 3; ++m)
            for (int n : {8, 12, 16}) {
                const int nn = n + 3 * m;
                auto [left, right] = op::trace_identity_sides(b0, bsub, m, n, nn);
                ++checked;
                const double scale = std::max({1.0, std::abs(left), std::abs(right)});
                if (std::abs(left - right) > 1e-12 * scale)
                    rep.failures.push_back("trace identity mismatch m=" + std::to_string(m) +
                                           " n=" + std::to_string(n) + " |L-R|=" +
                                           fmt_double(std::abs(left - right)));
            }
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

void verify_commutation(Report& rep, std::mt19937_64& rng) {
    long checked = 0;
    for (int fixture = 0; fixture < 3; ++fixture) {
        const fourier::TrigPoly b0 = rand_real_poly(rng, 2, 0.2);
        const fourier::TrigPoly bsub = rand_real_poly(rng, 1, 0.2);
        const int hw = 16;
        const op::OpMatrix g = op::build_psdo(b0, bsub, hw);
        for (int j = -6; j <= 6; ++j) {
            const int n = std::min(5, hw - std::abs(j));
            ++checked;
            if (!op::verify_commutation(g, j, n))
                rep.failures.push_back("commutation fails at j=" + std::to_string(j));
        }
    }
    rep.diagnostics.emplace_back("cases_checked", static_cast<double>(checked));
}

}  // namespace

Report run_verify_suite(const std::string& kind, std::uint64_t seed, const VerifyCaps& caps) {
    Report rep;
    std::mt19937_64 rng(seed);

    int m_cap = caps.m_cap, n_cap = caps.n_cap, cases = caps.cases;
    if (kind == "hd") {
        if (m_cap <= 0) m_cap = 8;
        if (cases <= 0) cases = 60;
        verify_hd(rep, rng, m_cap, cases);
    } else if (kind == "ghd") {
        if (m_cap <= 0) m_cap = 6;
        if (n_cap <= 0) n_cap = 3;
        if (cases <= 0) cases = 100;
        verify_ghd(rep, rng, m_cap, n_cap, cases);
    } else if (kind == "bst") {
        if (m_cap <= 0) m_cap = 7;
        if (cases <= 0) cases = 100;
        verify_bst(rep, rng, m_cap, cases);
    } else if (kind == "rw") {
        if (m_cap <= 0) m_cap = 6;
        if (n_cap <= 0) n_cap = 3;
        verify_rw(rep, m_cap, n_cap);
    } else if (kind == "trace-identity") {
        verify_trace_identity(rep, rng);
    } else if (kind == "commutation") {
        verify_commutation(rep, rng);
    } else {
        throw ConfigError("unknown verify kind '" + kind +
                          "' (expected hd|ghd|bst|rw|trace-identity|commutation)");
    }

    rep.config_echo = {{"kind", kind},
                       {"seed", std::to_string(seed)},
                       {"m_cap", std::to_string(m_cap)},
                       {"n_cap", std::to_string(n_cap)},
                       {"cases", std::to_string(cases)}};
    rep.diagnostics.emplace_back("counterexamples", static_cast<double>(rep.failures.size()));
    return rep;
}

RwConfig RwConfig::load(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::load(path);
    kv.require_known({"support", "probs", "m_max", "n_max", "oracle_check"});
    RwConfig cfg;
    cfg.support = kv.get_str_list("support");
    cfg.probs = kv.get_str_list("probs");
    cfg.m_max = kv.get_int("m_max", cfg.m_max);
    cfg.n_max = kv.get_int("n_max", cfg.n_max);
    cfg.oracle_check = kv.get_bool("oracle_check", cfg.oracle_check);
    if (cfg.support.empty() || cfg.support.size() != cfg.probs.size())
        throw ConfigError("rw config: support and probs must be nonempty, same length");
    if (cfg.m_max < 1 || cfg.n_max < 1) throw ConfigError("rw config: m_max, n_max must be >= 1");
    return cfg;
}

Report run_rw_moments(const RwConfig& cfg) {
    Report rep;
    std::vector<Rational> support, probs;
    try {
        for (const auto& s : cfg.support) support.emplace_back(s);
        for (const auto& s : cfg.probs) probs.emplace_back(s);
    } catch (const std::exception&) {
        throw ConfigError("rw config: support/probs entries must be exact rationals like 1/4");
    }
    comb::StepDistribution dist(std::move(support), std::move(probs));

    std::string support_echo, probs_echo;
    for (std::size_t i = 0; i < cfg.support.size(); ++i) {
        if (i) {
            support_echo += ",";
            probs_echo += ",";
        }
        support_echo += cfg.support[i];
        probs_echo += cfg.probs[i];
    }
    rep.config_echo = {{"support", support_echo},
                       {"probs", probs_echo},
                       {"m_max", std::to_string(cfg.m_max)},
                       {"n_max", std::to_string(cfg.n_max)},
                       {"oracle_check", cfg.oracle_check ? "true" : "false"}};

    long long paths = 1;
    bool oracle_feasible = cfg.oracle_check;
    for (int i = 0; i < cfg.m_max && oracle_feasible; ++i) {
        paths *= dist.atoms();
        if (paths > 20'000'000) oracle_feasible = false;
    }

    for (int m = 1; m <= cfg.m_max; ++m)
        for (int n = 1; n <= cfg.n_max; ++n) {
            const Rational v = comb::rw_max_moment(dist, m, n);
            ReportCoefficient row;
            row.label = "E[M_" + std::to_string(m) + "^" + std::to_string(n) + "] = " + v.str();
            row.fitted = true;
            row.measured = v.convert_to<double>();
            if (oracle_feasible) {
                const Rational o = comb::rw_max_moment_oracle(dist, m, n);
                row.predicted = o.convert_to<double>();
                row.delta = 0.0;
                if (v != o) {
                    row.delta = row.measured - row.predicted;
                    rep.failures.push_back("rw moment mismatch at m=" + std::to_string(m) +
                                           " n=" + std::to_string(n));
                }
            } else {
                row.predicted = std::numeric_limits<double>::quiet_NaN();
                row.delta = std::numeric_limits<double>::quiet_NaN();
                row.fitted = false;
            }
            rep.coefficients.push_back(row);
        }
    rep.diagnostics.emplace_back("oracle_checked", oracle_feasible ? 1.0 : 0.0);
    return rep;
}

ProbeConfig ProbeConfig::load(const std::string& path) {
    const KeyValueFile kv = KeyValueFile::load(path);
    kv.require_known({"c1", "n_grid", "buffer"});
    ProbeConfig cfg;
    cfg.c1_expr = kv.get_str("c1", cfg.c1_expr);
    if (kv.has("n_grid")) cfg.n_grid = kv.get_int_list("n_grid");
    cfg.buffer = kv.get_int("buffer", cfg.buffer);
    return cfg;
}

Report run_probe_constant(const ProbeConfig& cfg) {
    Report rep;
    const fourier::TrigPoly c1 = parse_symbol_expr(cfg.c1_expr);
    asym::ProbeDiagnostics diag;
    const double c0 = asym::constant_term_probe(c1, cfg.n_grid, cfg.buffer, &diag);

    rep.config_echo = {{"c1", cfg.c1_expr},
                       {"n_grid", join_ints(cfg.n_grid)},
                       {"buffer", std::to_string(cfg.buffer)}};
    for (const auto& label : diag.fit.basis) {
        ReportCoefficient row;
        row.label = label;
        row.fitted = true;
        row.measured = diag.fit.coeff(label);
        row.predicted = std::numeric_limits<double>::quiet_NaN();
        row.delta = std::numeric_limits<double>::quiet_NaN();
        rep.coefficients.push_back(row);
    }
    rep.diagnostics = {{"constant_term", c0},
                       {"gate_radius", diag.gate_radius},
                       {"series_terms", static_cast<double>(diag.series_terms)},
                       {"fit_condition", diag.fit.condition},
                       {"fit_max_residual_n2", diag.fit.max_residual_n2}};
    return rep;
}

// ---------------------------------------------------------------------------
// Writers
// ---------------------------------------------------------------------------

std::string report_json_string(const Report& r) {
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.config_echo) cfg[k] = v;

    nlohmann::ordered_json meas = nlohmann::ordered_json::object();
    nlohmann::ordered_json pred = nlohmann::ordered_json::object();
    nlohmann::ordered_json delt = nlohmann::ordered_json::object();
    for (const auto& c : r.coefficients) {
        meas[c.label] = c.measured;
        if (c.fitted && std::isfinite(c.predicted)) {
            pred[c.label] = c.predicted;
            delt[c.label] = c.delta;
        } else {
            pred[c.label] = nullptr;
            delt[c.label] = nullptr;
        }
    }
    nlohmann::ordered_json coef = nlohmann::ordered_json::object();
    coef["measured"] = std::move(meas);
    coef["predicted"] = std::move(pred);
    coef["delta"] = std::move(delt);

    nlohmann::ordered_json diag = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.diagnostics) diag[k] = v;

    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["config"] = std::move(cfg);
    j["coefficients"] = std::move(coef);
    j["diagnostics"] = std::move(diag);
    j["failures"] = r.failures;
    return j.dump(2) + "\n";
}

void write_json(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write JSON to " + path);
    out << report_json_string(r);
}

void write_csv(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write CSV to " + path);
    if (!r.points.empty()) {
        out << "n,logdet_measured,trace_log_measured,predicted_total,residual\n";
        for (const auto& p : r.points)
            out << p.n << "," << fmt_double(p.logdet_measured) << ","
                << fmt_double(p.trace_log_measured) << "," << fmt_double(p.predicted_total) << ","
                << fmt_double(p.residual) << "\n";
    } else {
        out << "key,value\n";
        for (const auto& [k, v] : r.diagnostics) out << k << "," << fmt_double(v) << "\n";
    }
}

void write_svg(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write SVG to " + path);
    const int width = 640, height = 400;
    const int ml = 70, mr = 20, mt = 30, mb = 45;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << width / 2
        << "\" y=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << "residual * n^2 vs n</text>\n";

    if (r.points.size() >= 2) {
        double xmin = r.points.front().n, xmax = r.points.back().n;
        double ymin = 0.0, ymax = 0.0;
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : r.points) {
            const double y = p.residual * static_cast<double>(p.n) * p.n;
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
            pts.emplace_back(static_cast<double>(p.n), y);
        }
        if (ymax - ymin < 1e-300) {
            ymax += 1.0;
            ymin -= 1.0;
        }
        auto sx = [&](double x) {
            return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
        };
        auto sy = [&](double y) {
            return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
        };
        char buf[64];
        out << "  <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
            << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
        out << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
            << height - mb << "\" stroke=\"black\"/>\n";
        out << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(x), sy(y));
            out << buf;
        }
        out << "\"/>\n";
        for (const auto& [x, y] : pts) {
            std::snprintf(buf, sizeof(buf), "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"#1f77b4\"/>\n",
                          sx(x), sy(y));
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), "%.6g", ymin);
        out << "  <text x=\"" << ml - 6 << "\" y=\"" << height - mb
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
            << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.6g", ymax);
        out << "  <text x=\"" << ml - 6 << "\" y=\"" << mt + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
            << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.6g", xmin);
        out << "  <text x=\"" << ml << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << buf
            << "</text>\n";
        std::snprintf(buf, sizeof(buf), "%.6g", xmax);
        out << "  <text x=\"" << width - mr << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << buf
            << "</text>\n";
    } else {
        out << "  <text x=\"" << width / 2 << "\" y=\"" << height / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">no points</text>\n";
    }
    out << "</svg>\n";
}

int classify_error(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const CapError*>(&e)) return 2;
    if (dynamic_cast<const ConvergenceError*>(&e)) return 3;
    if (dynamic_cast<const SingularMatrixError*>(&e)) return 3;
    if (dynamic_cast<const FitError*>(&e)) return 3;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 2;
    if (dynamic_cast<const std::out_of_range*>(&e)) return 2;
    if (dynamic_cast<const std::domain_error*>(&e)) return 2;
    return 3;
}

}  // namespace szego::cli
