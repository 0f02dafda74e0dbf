#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "szego/asymptotics.hpp"
#include "szego/combinatorics.hpp"

namespace szego::cli {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Flat "key = value" text with optional [section] headers (sections are
// organizational only; keys must be globally unique).
class KeyValueFile {
public:
    static KeyValueFile load(const std::string& path);
    static KeyValueFile from_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<int> get_int_list(const std::string& key) const;
    std::vector<std::string> get_str_list(const std::string& key) const;

    // Throws ConfigError when a key outside `allowed` is present.
    void require_known(const std::vector<std::string>& allowed) const;

private:
    std::map<std::string, std::string> values_;
};

struct ExperimentConfig {
    std::string log_b0_expr = "0";
    std::string b_sub_expr = "0";
    std::vector<int> n_grid = {32, 48, 64, 96, 128, 192, 256};
    int buffer = 0;         // 0 -> max(32, 4 * bandwidth)
    int k_max = 0;          // 0 -> min(max n, 200)
    int residue_terms = 5;  // L
    double tol = 1e-13;
    bool drift_check = true;
    bool phi_u3_as_y3 = true;
    std::uint64_t seed = 1;

    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig from_kv(const KeyValueFile& kv);
};

struct ReportCoefficient {
    std::string label;
    bool fitted = false;
    double measured = 0.0;
    double predicted = 0.0;
    double delta = 0.0;
};

struct ReportPoint {
    int n = 0;
    double logdet_measured = 0.0;
    double trace_log_measured = 0.0;
    double predicted_total = 0.0;
    double residual = 0.0;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<ReportPoint> points;
    std::vector<ReportCoefficient> coefficients;
    std::vector<std::pair<std::string, double>> diagnostics;
    std::vector<std::string> failures;

    int exit_code() const { return failures.empty() ? 0 : 1; }
};

// Determinant asymptotics end to end: measured log det series, the matrix-log
// trace, residue/deviation extraction, predicted coefficients, and the fit.
Report run_szego_experiment(const ExperimentConfig& cfg);

struct VerifyCaps {
    int m_cap = 0;   // 0 -> per-kind default
    int n_cap = 0;
    int cases = 0;
};

// kind in {hd, ghd, bst, rw, trace-identity, commutation}.  Randomized plus
// exhaustive-small verification; failures list the counterexamples.
Report run_verify_suite(const std::string& kind, std::uint64_t seed, const VerifyCaps& caps = {});

struct RwConfig {
    std::vector<std::string> support;  // exact rationals as text
    std::vector<std::string> probs;
    int m_max = 6;
    int n_max = 3;
    bool oracle_check = true;

    static RwConfig load(const std::string& path);
};

// Exact maximum moments E[M_m^n] for the configured walk, optionally checked
// against path enumeration.
Report run_rw_moments(const RwConfig& cfg);

struct ProbeConfig {
    std::string c1_expr = "0";
    std::vector<int> n_grid = {16, 24, 32, 48, 64};
    int buffer = 32;

    static ProbeConfig load(const std::string& path);
};

Report run_probe_constant(const ProbeConfig& cfg);

std::string report_json_string(const Report& r);
void write_json(const Report& r, const std::string& path);
void write_csv(const Report& r, const std::string& path);
void write_svg(const Report& r, const std::string& path);

// Exit-code contract: 0 ok, 1 verification failure, 2 config/parse, 3 numeric.
int classify_error(const std::exception& e);

}  // namespace szego::cli
