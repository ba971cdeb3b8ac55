// Command-line front end: bound evaluation and the coding / learning /
// delegation experiments, with seeded, replayable JSON/CSV output.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pacsc/bounds.hpp"
#include "pacsc/coding.hpp"
#include "pacsc/delegation.hpp"
#include "pacsc/info.hpp"
#include "pacsc/learning.hpp"

using json = nlohmann::json;
using namespace pacsc;
using info::DiscreteDistribution;

namespace {

constexpr const char* kVersion = "pacsc 1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// --config <file>: JSON whose keys match long flag names; explicit command
// line flags win
json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json cfg;
    in >> cfg;
    return cfg;
}

template <typename T>
void cfg_override(CLI::App* cmd, const std::string& name, const json& cfg, T& var) {
    const auto* opt = cmd->get_option_no_throw("--" + name);
    if (opt != nullptr && opt->count() == 0 && cfg.contains(name))
        var = cfg.at(name).get<T>();
}

std::string resolve_out(const std::string& out) {
    if (out.empty()) return out;
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("PACSC_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p.string();
}

void emit(const std::string& out, const std::string& content) {
    const std::string path = resolve_out(out);
    if (path.empty()) {
        std::cout << content;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << content;
    }
    std::filesystem::rename(tmp, path);
}

std::string csv_header(const json& meta, const std::string& columns) {
    std::ostringstream os;
    os << "# " << kVersion << "\n";
    os << "# config " << meta.dump() << "\n";
    os << columns << "\n";
    return os.str();
}

std::string render(const json& meta, const json& body, const std::string& columns,
                   const std::vector<std::vector<double>>& rows,
                   const std::string& format) {
    if (format == "json") {
        json doc;
        doc["version"] = kVersion;
        doc["config"] = meta;
        doc["result"] = body;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << csv_header(meta, columns);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << fmt12(row[i]);
        os << "\n";
    }
    return os.str();
}

json bound_json(const bounds::BoundValue& b) {
    return json{{"raw", b.raw}, {"clamped", b.clamped}, {"log2_raw", b.log2_raw}};
}

// --- subcommand state -------------------------------------------------------

struct Common {
    std::string config_path;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "JSON config file overriding flags");
    cmd->add_option("--out", c.out, "output path (default stdout; relative paths join PACSC_OUT_DIR)");
    cmd->add_option("--format", c.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", c.seed, "RNG seed, recorded in the output");
}

int run_bounds(const std::string& name, double n, double m, double beta, double eps,
               double delta, double T, double l, const Common& c) {
    json meta{{"command", "bounds"}, {"bound", name},    {"n", n},
              {"m", m},             {"beta", beta},      {"eps", eps},
              {"delta", delta},     {"T", T},            {"l", l},
              {"seed", c.seed}};
    json body;
    std::vector<std::vector<double>> rows;
    std::string columns = "raw,clamped,log2_raw";

    if (name == "nayak") {
        auto b = bounds::nayak_bound(n, m);
        body = bound_json(b);
        rows = {{b.raw, b.clamped, b.log2_raw}};
    } else if (name == "pac-nayak") {
        auto b = bounds::pac_nayak_bound(n, m, beta);
        body = bound_json(b);
        rows = {{b.raw, b.clamped, b.log2_raw}};
    } else if (name == "qpsc") {
        const double v = bounds::qpsc_lhs(n, eps, delta);
        body = json{{"bits", v}};
        columns = "bits";
        rows = {{v}};
    } else if (name == "pac-holevo") {
        const double v = bounds::pac_holevo_min_samples(n, l, eps, delta);
        body = json{{"min_samples", v}};
        columns = "min_samples";
        rows = {{v}};
    } else if (name == "zipf-lower") {
        const double v = bounds::zipf_sample_lower_bound(n, beta, delta);
        body = json{{"min_quantum_samples", v}};
        columns = "min_quantum_samples";
        rows = {{v}};
    } else if (name == "memorization") {
        const auto v = bounds::memorization_sample_count(
            static_cast<std::uint64_t>(std::llround(n)), eps, delta);
        body = json{{"samples", v}};
        columns = "samples";
        rows = {{static_cast<double>(v)}};
    } else if (name == "flow-thresholds") {
        const double root = delegation::guess_threshold();
        const double floor = delegation::perfect_decoder_epsilon_floor(0.591);
        body = json{{"guess_threshold", root}, {"perfect_decoder_floor", floor}};
        columns = "guess_threshold,perfect_decoder_floor";
        rows = {{root, floor}};
    } else {
        throw CLI::ValidationError("bounds", "unknown bound: " + name);
    }
    emit(c.out, render(meta, body, columns, rows, c.format));
    return kExitOk;
}

int run_simulate(const std::string& scheme, int n, int m, const Common& c) {
    coding::ObservationChannel ch{0, 0, {}};
    std::vector<std::uint32_t> decode;
    if (scheme == "truncation") {
        std::vector<std::uint32_t> code(std::size_t{1} << n);
        for (std::uint32_t x = 0; x < code.size(); ++x)
            code[x] = m == 0 ? 0u : (x >> (n - m));
        ch = coding::classical_observation(n, m, code,
                                           DiscreteDistribution::uniform(code.size()));
        decode.resize(std::size_t{1} << m);
        for (std::uint32_t y = 0; y < decode.size(); ++y)
            decode[y] = coding::truncation_decode(n, m, y);
    } else if (scheme == "qrac-product") {
        if (n % 2 != 0 || n < 2 || n > 8)
            throw CLI::ValidationError("simulate", "qrac-product needs even n <= 8");
        m = n / 2;
        auto prod = coding::product_encoder(coding::qrac_2to1_encoder(), n / 2);
        auto e = coding::ensemble_from(prod,
                                       DiscreteDistribution::uniform(std::size_t{1} << n));
        auto pgm = coding::pretty_good_measurement(e);
        ch = coding::observation_channel(e, pgm);
        decode.resize(ch.ny);
        for (std::size_t y = 0; y < ch.ny; ++y) decode[y] = pgm.labels[y];
    } else if (scheme == "random-code") {
        auto code = coding::random_codewords(n, m, c.seed);
        ch = coding::classical_observation(
            n, m, code, DiscreteDistribution::uniform(std::size_t{1} << n));
        decode = coding::optimal_hamming_decoder(ch, 0).decode; // MAP
    } else {
        throw CLI::ValidationError("simulate", "unknown scheme: " + scheme);
    }

    const auto j = coding::apply_decoder(ch, decode);
    json meta{{"command", "simulate"}, {"scheme", scheme}, {"n", n},
              {"m", m},                {"seed", c.seed}};
    json points = json::array();
    std::vector<std::vector<double>> rows;
    bool violated = false;
    for (int t = 0; 2 * t <= n; ++t) {
        const double p = coding::hamming_success(j, t);
        const auto b = bounds::pac_nayak_bound(n, m, static_cast<double>(t) / n);
        violated = violated || p > b.clamped + 1e-9;
        points.push_back(json{{"t", t},
                              {"success", p},
                              {"bound_raw", b.raw},
                              {"bound_clamped", b.clamped}});
        rows.push_back({static_cast<double>(t), p, b.raw, b.clamped});
    }
    json body{{"points", points}, {"dominance_violated", violated}};
    emit(c.out, render(meta, body, "t,success,bound_raw,bound_clamped", rows, c.format));
    return violated ? kExitViolation : kExitOk;
}

int run_learn(int n, double eps, double delta, double beta, int trials, const Common& c) {
    const auto rep = learning::pac_experiment(n, eps, delta, trials, c.seed);
    const double quantum_floor = bounds::zipf_sample_lower_bound(n, beta, delta);
    json meta{{"command", "learn"}, {"n", n},         {"eps", eps},
              {"delta", delta},     {"beta", beta},   {"trials", trials},
              {"seed", c.seed}};
    // samples use ceil((N/eps) ln(N/delta)); a base-2 reading would differ by
    // a constant factor 1/ln 2
    json body{{"classical_samples_per_trial", rep.samples_per_trial},
              {"failure_fraction", rep.failure_fraction},
              {"quantum_sample_lower_bound", quantum_floor},
              {"log_convention", "natural"},
              {"errors", rep.errors}};
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rep.errors.size(); ++i)
        rows.push_back({static_cast<double>(i),
                        static_cast<double>(rep.samples_per_trial), rep.errors[i],
                        rep.errors[i] > eps ? 1.0 : 0.0});
    emit(c.out, render(meta, body, "trial,m,error,failed", rows, c.format));
    return kExitOk;
}

int run_delegate(int n, int trials, const std::string& strategy, const Common& c) {
    const auto params = delegation::CdbqcParams::from_qubits(n);
    std::vector<double> grid;
    for (double e = 0.0; e <= 0.2 + 1e-12; e += 0.005) grid.push_back(e);

    auto exact = delegation::guessing_game_prefix_exact(
        params.string_bits(), params.leaked_bits(), params.T, grid);
    std::vector<delegation::GamePoint> mc;
    if (trials > 0) {
        delegation::PadStrategy s = delegation::PadStrategy::zero_pad;
        if (strategy == "random-pad") s = delegation::PadStrategy::random_pad;
        else if (strategy == "majority-pad") s = delegation::PadStrategy::majority_pad;
        else if (strategy != "zero-pad")
            throw CLI::ValidationError("delegate", "unknown strategy: " + strategy);
        mc = delegation::guessing_game_monte_carlo(params.string_bits(),
                                                   params.leaked_bits(), params.T, s,
                                                   trials, c.seed, grid);
    }

    json meta{{"command", "delegate"}, {"n", n},          {"T", params.T},
              {"sent", params.sent},   {"trials", trials}, {"strategy", strategy},
              {"seed", c.seed}};
    json points = json::array();
    std::vector<std::vector<double>> rows;
    bool violated = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double emp = trials > 0 ? mc[i].probability : exact[i].probability;
        violated = violated || exact[i].probability > exact[i].bound + 1e-12;
        points.push_back(json{{"epsilon", grid[i]},
                              {"empirical_p", emp},
                              {"exact_p", exact[i].probability},
                              {"bound_p", exact[i].bound}});
        rows.push_back({grid[i], emp, exact[i].probability, exact[i].bound});
    }
    json body{{"points", points}, {"dominance_violated", violated}};
    emit(c.out, render(meta, body, "epsilon,empirical_p,exact_p,bound_p", rows, c.format));
    return violated ? kExitViolation : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PAC quantum source coding laboratory"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate a bound by name");
    std::string bound_name;
    double b_n = 8, b_m = 4, b_beta = 0.0, b_eps = 0.0, b_delta = 0.0, b_T = 33.88,
           b_l = 1.0;
    Common b_common;
    cmd_bounds->add_option("name", bound_name,
                           "nayak | pac-nayak | qpsc | pac-holevo | zipf-lower | "
                           "memorization | flow-thresholds")
        ->required();
    cmd_bounds->add_option("--n", b_n, "message bits (or N for memorization)");
    cmd_bounds->add_option("--m", b_m, "qubits");
    cmd_bounds->add_option("--beta", b_beta, "Hamming error fraction in [0, 1/2]");
    cmd_bounds->add_option("--eps", b_eps, "approximation error");
    cmd_bounds->add_option("--delta", b_delta, "failure probability");
    cmd_bounds->add_option("--T", b_T, "description bits");
    cmd_bounds->add_option("--l", b_l, "qubits per state copy");
    add_common(cmd_bounds, b_common);

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "coding scheme vs pac-nayak bound");
    std::string scheme = "truncation";
    int s_n = 8, s_m = 4;
    Common s_common;
    cmd_sim->add_option("--scheme", scheme, "truncation | qrac-product | random-code");
    cmd_sim->add_option("--n", s_n, "message bits (<= 10)");
    cmd_sim->add_option("--m", s_m, "carrier bits/qubits");
    add_common(cmd_sim, s_common);

    // learn
    auto* cmd_learn = app.add_subcommand("learn", "memorization-learner PAC experiment");
    int l_n = 8, l_trials = 200;
    double l_eps = 0.1, l_delta = 0.1, l_beta = 0.25;
    Common l_common;
    cmd_learn->add_option("--n", l_n, "input bits (N = 2^n)");
    cmd_learn->add_option("--eps", l_eps, "target error");
    cmd_learn->add_option("--delta", l_delta, "failure probability");
    cmd_learn->add_option("--beta", l_beta, "beta for the quantum lower bound");
    cmd_learn->add_option("--trials", l_trials, "independent trials");
    add_common(cmd_learn, l_common);

    // delegate
    auto* cmd_del = app.add_subcommand("delegate", "delegation guessing-game curves");
    int d_n = 10, d_trials = 0;
    std::string d_strategy = "zero-pad";
    Common d_common;
    cmd_del->add_option("--n", d_n, "pattern qubits (T = 3.388 n)");
    cmd_del->add_option("--trials", d_trials, "Monte Carlo rounds (0 = exact only)");
    cmd_del->add_option("--strategy", d_strategy, "zero-pad | random-pad | majority-pad");
    add_common(cmd_del, d_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_bounds->parsed()) {
            if (!b_common.config_path.empty()) {
                const json cfg = load_config(b_common.config_path);
                cfg_override(cmd_bounds, "n", cfg, b_n);
                cfg_override(cmd_bounds, "m", cfg, b_m);
                cfg_override(cmd_bounds, "beta", cfg, b_beta);
                cfg_override(cmd_bounds, "eps", cfg, b_eps);
                cfg_override(cmd_bounds, "delta", cfg, b_delta);
                cfg_override(cmd_bounds, "T", cfg, b_T);
                cfg_override(cmd_bounds, "l", cfg, b_l);
                cfg_override(cmd_bounds, "seed", cfg, b_common.seed);
            }
            return run_bounds(bound_name, b_n, b_m, b_beta, b_eps, b_delta, b_T, b_l,
                              b_common);
        }
        if (cmd_sim->parsed()) {
            if (!s_common.config_path.empty()) {
                const json cfg = load_config(s_common.config_path);
                cfg_override(cmd_sim, "scheme", cfg, scheme);
                cfg_override(cmd_sim, "n", cfg, s_n);
                cfg_override(cmd_sim, "m", cfg, s_m);
                cfg_override(cmd_sim, "seed", cfg, s_common.seed);
            }
            return run_simulate(scheme, s_n, s_m, s_common);
        }
        if (cmd_learn->parsed()) {
            if (!l_common.config_path.empty()) {
                const json cfg = load_config(l_common.config_path);
                cfg_override(cmd_learn, "n", cfg, l_n);
                cfg_override(cmd_learn, "eps", cfg, l_eps);
                cfg_override(cmd_learn, "delta", cfg, l_delta);
                cfg_override(cmd_learn, "beta", cfg, l_beta);
                cfg_override(cmd_learn, "trials", cfg, l_trials);
                cfg_override(cmd_learn, "seed", cfg, l_common.seed);
            }
            return run_learn(l_n, l_eps, l_delta, l_beta, l_trials, l_common);
        }
        if (cmd_del->parsed()) {
            if (!d_common.config_path.empty()) {
                const json cfg = load_config(d_common.config_path);
                cfg_override(cmd_del, "n", cfg, d_n);
                cfg_override(cmd_del, "trials", cfg, d_trials);
                cfg_override(cmd_del, "strategy", cfg, d_strategy);
                cfg_override(cmd_del, "seed", cfg, d_common.seed);
            }
            return run_delegate(d_n, d_trials, d_strategy, d_common);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
