// freqop: command-line front end over the sector / analysis / sampling /
// oracle library. Emits machine-readable CSV or JSON; all runs are
// deterministic functions of their flags (including --seed), so repeated
// runs produce byte-identical output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "freqop/analysis.hpp"
#include "freqop/errors.hpp"
#include "freqop/oracle.hpp"
#include "freqop/sampling.hpp"
#include "freqop/sector.hpp"
#include "freqop/state.hpp"

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    std::string s = fmt17(z.real());
    s += (std::signbit(z.imag()) ? "-" : "+");
    s += fmt17(std::fabs(z.imag()));
    s += "i";
    return s;
}

std::string csv_cell(const json& v) {
    if (v.is_number_float()) return fmt17(v.get<double>());
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out += "\"";
    return out;
}

// Scalars are serialized by hand so that CSV and JSON carry the same
// 17-significant-digit text for every double. Non-finite values have no
// JSON representation and become null.
std::string json_scalar(const json& v) {
    if (v.is_number_float()) {
        const double d = v.get<double>();
        return std::isfinite(d) ? fmt17(d) : "null";
    }
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
    if (v.is_string()) return json_quote(v.get<std::string>());
    return v.dump();
}

std::string json_object_line(const std::vector<std::pair<std::string, json>>& fields) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, value] : fields) {
        if (!first) out += ", ";
        first = false;
        out += json_quote(key) + ": " + json_scalar(value);
    }
    out += "}";
    return out;
}

// ---------------------------------------------------------------------------
// Flag parsing helpers
// ---------------------------------------------------------------------------

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    // from_chars rejects an explicit leading plus sign.
    if (s.size() > 1 && s[0] == '+' &&
        (std::isdigit(static_cast<unsigned char>(s[1])) || s[1] == '.')) {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" + s + "' as a number");
    }
    return v;
}

long long parse_integer_like(const std::string& s, const char* what) {
    const double v = parse_double(s, what);
    const long long r = std::llround(v);
    if (!(v >= 1.0) || std::fabs(v - static_cast<double>(r)) > 1e-6) {
        throw std::invalid_argument(std::string(what) + ": '" + s +
                                    "' is not a positive integer");
    }
    return r;
}

// "N", or "start:stop" / "start:stop:points-per-decade" for a geometric
// grid (default 3 per decade, endpoints included, sorted ascending).
std::vector<long long> parse_n_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t colon = spec.find(':', pos);
        if (colon == std::string::npos) {
            parts.push_back(spec.substr(pos));
            break;
        }
        parts.push_back(spec.substr(pos, colon - pos));
        pos = colon + 1;
    }
    if (parts.size() == 1) {
        return {parse_integer_like(parts[0], "--n")};
    }
    if (parts.size() > 3) {
        throw std::invalid_argument("--n: expected N or start:stop[:points-per-decade]");
    }
    const long long start = parse_integer_like(parts[0], "--n start");
    const long long stop = parse_integer_like(parts[1], "--n stop");
    const long long ppd = (parts.size() == 3) ? parse_integer_like(parts[2], "--n points") : 3;
    if (stop < start) throw std::invalid_argument("--n: stop is below start");
    if (ppd < 1 || ppd > 1000) throw std::invalid_argument("--n: points-per-decade out of range");

    std::vector<long long> grid;
    const double lo = std::log10(static_cast<double>(start));
    for (int j = 0;; ++j) {
        const double value = std::pow(10.0, lo + static_cast<double>(j) / static_cast<double>(ppd));
        if (value > static_cast<double>(stop) * (1.0 + 1e-12)) break;
        const long long n = std::llround(value);
        if (grid.empty() || grid.back() != n) grid.push_back(n);
    }
    if (grid.empty() || grid.back() != stop) grid.push_back(stop);
    return grid;
}

// Complex literals: "0.8", "0.6i", "0.8+0.6i", "-1e-2-3e-4i", "i", "-i".
std::complex<double> parse_complex(const std::string& raw, const char* what) {
    std::string s;
    for (char c : raw) {
        if (c != ' ') s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty literal");
    if (s == "i" || s == "+i") return {0.0, 1.0};
    if (s == "-i") return {0.0, -1.0};
    if (s.back() != 'i') {
        return {parse_double(s, what), 0.0};
    }
    const std::string body = s.substr(0, s.size() - 1);
    // Split before the sign of the imaginary part (exponent signs excluded).
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
        }
    }
    if (split == std::string::npos) {
        return {0.0, parse_double(body, what)};
    }
    const std::string re = body.substr(0, split);
    std::string im = body.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return {parse_double(re, what), parse_double(im, what)};
}

// ---------------------------------------------------------------------------
// Run configuration and output document
// ---------------------------------------------------------------------------

struct RunConfig {
    std::string command;
    std::string n_spec;
    std::vector<long long> n_grid;

    std::optional<double> p;
    std::optional<std::string> c_plus_raw, c_minus_raw;
    std::complex<double> c_plus, c_minus;

    std::optional<double> epsilon;
    long long shots = 10000;
    std::uint64_t seed = 0;
    std::string sampler = "sector";
    std::string quantity;
    std::optional<long long> k_index;
    long long trials = 0;

    std::string format = "csv";
    std::string output_path;  // empty: stdout

    long long table_guard = freqop::kDefaultTableGuard;
    long long work_budget = freqop::kDefaultWorkBudget;
    long long dense_guard = freqop::kDefaultDenseGuard;

    bool has_state() const { return p.has_value() || c_plus_raw.has_value(); }

    freqop::StateSpec state(long long n) const {
        if (p.has_value()) return freqop::make_state(n, *p);
        return freqop::make_state(n, c_plus, c_minus);
    }
};

struct OutputDoc {
    std::vector<std::pair<std::string, json>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    std::optional<freqop::ScalingFit> fit;
    std::vector<std::pair<std::string, json>> summary;
};

void write_csv(const OutputDoc& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.config) {
        out << "# " << key << "=" << csv_cell(value) << "\n";
    }
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        out << (i ? "," : "") << doc.columns[i];
    }
    out << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << csv_cell(row[i]);
        }
        out << "\n";
    }
    if (doc.fit) {
        out << "# fit: exponent=" << fmt17(doc.fit->exponent)
            << " log_prefactor=" << fmt17(doc.fit->log_prefactor)
            << " r_squared=" << fmt17(doc.fit->r_squared) << "\n";
    }
    if (!doc.summary.empty()) {
        out << "# summary:";
        for (const auto& [key, value] : doc.summary) {
            out << " " << key << "=" << csv_cell(value);
        }
        out << "\n";
    }
}

void write_json(const OutputDoc& doc, std::ostream& out) {
    out << "{\n";
    out << "  \"config\": " << json_object_line(doc.config) << ",\n";
    out << "  \"records\": [";
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        std::vector<std::pair<std::string, json>> fields;
        fields.reserve(doc.columns.size());
        for (std::size_t i = 0; i < doc.rows[r].size(); ++i) {
            fields.emplace_back(doc.columns[i], doc.rows[r][i]);
        }
        out << (r ? ",\n    " : "\n    ") << json_object_line(fields);
    }
    out << (doc.rows.empty() ? "]" : "\n  ]");
    if (doc.fit) {
        out << ",\n  \"fit\": "
            << json_object_line({{"exponent", doc.fit->exponent},
                                 {"log_prefactor", doc.fit->log_prefactor},
                                 {"r_squared", doc.fit->r_squared}});
    }
    if (!doc.summary.empty()) {
        out << ",\n  \"summary\": " << json_object_line(doc.summary);
    }
    out << "\n}\n";
}

void emit(const OutputDoc& doc, const RunConfig& cfg) {
    const auto write = [&](std::ostream& out) {
        if (cfg.format == "json") {
            write_json(doc, out);
        } else {
            write_csv(doc, out);
        }
    };
    if (cfg.output_path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream file(cfg.output_path);
    if (!file) {
        throw std::invalid_argument("cannot open output file '" + cfg.output_path + "'");
    }
    write(file);
}

std::vector<std::pair<std::string, json>> config_echo(const RunConfig& cfg) {
    std::vector<std::pair<std::string, json>> echo;
    echo.emplace_back("command", cfg.command);
    echo.emplace_back("n", cfg.n_spec);
    if (cfg.p.has_value()) {
        echo.emplace_back("p", *cfg.p);
    } else if (cfg.c_plus_raw.has_value()) {
        echo.emplace_back("c_plus", *cfg.c_plus_raw);
        echo.emplace_back("c_minus", *cfg.c_minus_raw);
    }
    if (cfg.epsilon.has_value()) echo.emplace_back("eps", *cfg.epsilon);
    if (cfg.command == "sample") {
        echo.emplace_back("sampler", cfg.sampler);
        echo.emplace_back("shots", cfg.shots);
        echo.emplace_back("seed", cfg.seed);
    }
    if (cfg.command == "sweep") echo.emplace_back("quantity", cfg.quantity);
    if (cfg.k_index.has_value()) echo.emplace_back("k", *cfg.k_index);
    if (cfg.command == "oracle-check") {
        echo.emplace_back("trials", cfg.trials);
        echo.emplace_back("seed", cfg.seed);
    }
    echo.emplace_back("format", cfg.format);
    return echo;
}

// ---------------------------------------------------------------------------
// Command handlers
// ---------------------------------------------------------------------------

void require_single_n(const RunConfig& cfg) {
    if (cfg.n_grid.size() != 1) {
        throw std::invalid_argument(cfg.command + ": takes a single N, not a grid");
    }
}

void require_state(const RunConfig& cfg) {
    if (!cfg.has_state()) {
        throw std::invalid_argument(cfg.command + ": needs --p or --c-plus/--c-minus");
    }
}

OutputDoc run_table(const RunConfig& cfg) {
    require_single_n(cfg);
    require_state(cfg);
    const freqop::StateSpec spec = cfg.state(cfg.n_grid[0]);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"k", "lambda", "log_prob", "phase"};
    for (const auto& entry : freqop::sector_table(spec, cfg.table_guard)) {
        doc.rows.push_back({entry.k, entry.lambda, entry.log_prob, entry.phase});
    }
    return doc;
}

OutputDoc run_moments(const RunConfig& cfg) {
    require_state(cfg);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n", "p", "mean", "variance", "delta_norm"};
    for (long long n : cfg.n_grid) {
        const freqop::StateSpec spec = cfg.state(n);
        const freqop::Moments m = freqop::moments(spec, cfg.table_guard);
        doc.rows.push_back({n, spec.p, m.mean, m.variance, m.delta_norm});
    }
    return doc;
}

OutputDoc run_squires(const RunConfig& cfg) {
    require_state(cfg);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n", "k_star", "overlap", "overlap_sq"};
    std::vector<std::pair<long long, double>> fit_samples;
    for (long long n : cfg.n_grid) {
        const auto r = freqop::max_eigenstate_overlap(cfg.state(n));
        doc.rows.push_back({n, r.k_star, r.overlap, r.overlap * r.overlap});
        fit_samples.emplace_back(n, r.overlap);
    }
    if (fit_samples.size() >= 4) doc.fit = freqop::fit_scaling(fit_samples);
    return doc;
}

OutputDoc run_delta_psi(const RunConfig& cfg) {
    require_state(cfg);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n", "k", "overlap", "delta_psi", "delta_psi_sq"};
    for (long long n : cfg.n_grid) {
        const freqop::StateSpec spec = cfg.state(n);
        const long long k =
            cfg.k_index.has_value() ? *cfg.k_index : freqop::max_eigenstate_overlap(spec).k_star;
        const double overlap = std::exp(0.5 * freqop::log_weight(spec, k));
        const double d = freqop::delta_psi_norm(spec, k);
        doc.rows.push_back({n, k, overlap, d, d * d});
    }
    return doc;
}

OutputDoc run_truncate(const RunConfig& cfg) {
    require_single_n(cfg);
    require_state(cfg);
    if (!cfg.epsilon.has_value()) {
        throw std::invalid_argument("truncate: needs --eps");
    }
    const freqop::StateSpec spec = cfg.state(cfg.n_grid[0]);
    const freqop::TruncationWindow window = freqop::truncation_window(spec, *cfg.epsilon);
    const double mass = freqop::window_mass(spec, window);
    const auto [lo, hi] = freqop::outcome_bounds(spec, *cfg.epsilon);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n",    "epsilon",      "a_minus",       "a_plus",     "rounding",
                   "mass", "distance_raw", "distance_unit", "lambda_low", "lambda_high"};
    doc.rows.push_back({spec.n, window.epsilon, window.a_minus, window.a_plus,
                        "floor-ceil-inclusive", mass,
                        freqop::truncation_distance(spec, *cfg.epsilon, freqop::Normalize::Off),
                        freqop::truncation_distance(spec, *cfg.epsilon, freqop::Normalize::On),
                        lo, hi});
    return doc;
}

OutputDoc run_sweep(const RunConfig& cfg) {
    require_state(cfg);
    if (cfg.quantity.empty()) {
        throw std::invalid_argument("sweep: needs --quantity");
    }
    if (cfg.quantity == "window-mass" && !cfg.epsilon.has_value()) {
        throw std::invalid_argument("sweep: window-mass needs --eps");
    }
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n", "value"};
    std::vector<std::pair<long long, double>> samples;
    for (long long n : cfg.n_grid) {
        const freqop::StateSpec spec = cfg.state(n);
        double value = 0.0;
        if (cfg.quantity == "max-overlap") {
            value = freqop::max_eigenstate_overlap(spec).overlap;
        } else if (cfg.quantity == "delta-norm") {
            value = freqop::moments(spec, cfg.table_guard).delta_norm;
        } else if (cfg.quantity == "delta-psi") {
            value = freqop::delta_psi_norm(spec, freqop::max_eigenstate_overlap(spec).k_star);
        } else if (cfg.quantity == "peak-width") {
            value = static_cast<double>(freqop::peak_fwhm(spec));
        } else {
            value = freqop::window_mass(spec, freqop::truncation_window(spec, *cfg.epsilon));
        }
        doc.rows.push_back({n, value});
        samples.emplace_back(n, value);
    }
    if (samples.size() >= 4) doc.fit = freqop::fit_scaling(samples);
    return doc;
}

OutputDoc run_sample(const RunConfig& cfg) {
    require_single_n(cfg);
    require_state(cfg);
    const freqop::StateSpec spec = cfg.state(cfg.n_grid[0]);
    const freqop::SampleBatch batch =
        (cfg.sampler == "per-particle")
            ? freqop::sample_per_particle(spec, cfg.shots, cfg.seed, cfg.work_budget)
            : freqop::sample_sector(spec, cfg.shots, cfg.seed);
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"shot", "k", "lambda"};
    long double lambda_sum = 0.0L;
    for (long long shot = 0; shot < batch.shots; ++shot) {
        const long long k = batch.k_counts[static_cast<std::size_t>(shot)];
        const double lambda = freqop::sector_eigenvalue(spec.n, k);
        lambda_sum += static_cast<long double>(lambda);
        doc.rows.push_back({shot, k, lambda});
    }
    doc.summary.emplace_back("f_plus", freqop::empirical_fplus(batch));
    doc.summary.emplace_back("mean_lambda",
                             static_cast<double>(lambda_sum / static_cast<long double>(batch.shots)));
    if (cfg.epsilon.has_value()) {
        doc.summary.emplace_back("concentration",
                                 freqop::concentration_report(batch, *cfg.epsilon));
    }
    return doc;
}

OutputDoc run_oracle_check(const RunConfig& cfg) {
    require_single_n(cfg);
    const long long n = cfg.n_grid[0];
    OutputDoc doc;
    doc.config = config_echo(cfg);
    doc.columns = {"n", "trial", "c_plus", "c_minus", "max_deviation"};
    if (cfg.trials == 0) {
        require_state(cfg);
        const freqop::StateSpec spec = cfg.state(n);
        doc.rows.push_back({n, 0, format_complex(spec.c_plus), format_complex(spec.c_minus),
                            freqop::verify_decomposition(spec, cfg.dense_guard)});
        return doc;
    }
    std::mt19937_64 gen(cfg.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (long long trial = 0; trial < cfg.trials; ++trial) {
        std::complex<double> a, b;
        double norm = 0.0;
        do {
            a = {unif(gen), unif(gen)};
            b = {unif(gen), unif(gen)};
            norm = std::sqrt(std::norm(a) + std::norm(b));
        } while (norm == 0.0);
        const freqop::StateSpec spec = freqop::make_state(n, a / norm, b / norm);
        doc.rows.push_back({n, trial, format_complex(spec.c_plus), format_complex(spec.c_minus),
                            freqop::verify_decomposition(spec, cfg.dense_guard)});
    }
    return doc;
}

bool flag_given(const CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

OutputDoc dispatch(const RunConfig& cfg) {
    if (cfg.command == "table") return run_table(cfg);
    if (cfg.command == "moments") return run_moments(cfg);
    if (cfg.command == "squires") return run_squires(cfg);
    if (cfg.command == "delta-psi") return run_delta_psi(cfg);
    if (cfg.command == "truncate") return run_truncate(cfg);
    if (cfg.command == "sweep") return run_sweep(cfg);
    if (cfg.command == "sample") return run_sample(cfg);
    return run_oracle_check(cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement statistics of the mean-sigma_x operator on N identical spins"};
    app.require_subcommand(1);

    std::string n_spec, c_plus_raw, c_minus_raw, output_path;
    double p_value = 0.0, eps_value = 0.0;
    long long k_value = 0;

    RunConfig cfg;

    const auto add_common = [&](CLI::App* cmd, bool with_state) {
        cmd->add_option("--n", n_spec, "particle count N, or grid start:stop[:points-per-decade]")
            ->required();
        if (with_state) {
            cmd->add_option("--p", p_value, "probability of the + outcome, real amplitudes");
            cmd->add_option("--c-plus", c_plus_raw, "complex amplitude, e.g. 0.8+0.6i");
            cmd->add_option("--c-minus", c_minus_raw, "complex amplitude");
        }
        cmd->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output_path, "output file (default: stdout)");
        return cmd;
    };

    auto* table = add_common(app.add_subcommand("table", "sector table for k = 0..N"), true);
    table->add_option("--table-guard", cfg.table_guard, "largest table size to materialize");

    auto* moments_cmd =
        add_common(app.add_subcommand("moments", "mean, variance and residual norm"), true);
    moments_cmd->add_option("--table-guard", cfg.table_guard,
                            "largest N for the sector-sum cross-check");

    add_common(app.add_subcommand("squires", "largest eigenstate overlap across an N grid"), true);

    auto* delta_psi =
        add_common(app.add_subcommand("delta-psi", "distance to the nearest eigenstate"), true);
    delta_psi->add_option("--k", k_value, "evaluate at this sector index instead of the peak");

    auto* truncate =
        add_common(app.add_subcommand("truncate", "window, mass, distance and outcome bounds"),
                   true);
    truncate->add_option("--eps", eps_value, "half-width parameter of the truncation")->required();

    auto* sweep = add_common(app.add_subcommand("sweep", "scan a quantity over an N grid"), true);
    sweep->add_option("--quantity", cfg.quantity, "quantity to sweep")
        ->required()
        ->check(CLI::IsMember({"max-overlap", "delta-norm", "delta-psi", "peak-width",
                               "window-mass"}));
    sweep->add_option("--eps", eps_value, "truncation parameter (window-mass only)");
    sweep->add_option("--table-guard", cfg.table_guard, "guard for delta-norm cross-checks");

    auto* sample = add_common(app.add_subcommand("sample", "Monte Carlo measurement outcomes"),
                              true);
    sample->add_option("--shots", cfg.shots, "number of measurement shots")->required();
    sample->add_option("--seed", cfg.seed, "random seed");
    sample->add_option("--sampler", cfg.sampler, "sampling route")
        ->check(CLI::IsMember({"sector", "per-particle"}));
    sample->add_option("--eps", eps_value, "also report the in-window fraction");
    sample->add_option("--work-budget", cfg.work_budget,
                       "largest N*shots for the per-particle route");

    auto* oracle =
        add_common(app.add_subcommand("oracle-check", "dense cross-check of the sector machinery"),
                   true);
    oracle->add_option("--trials", cfg.trials, "number of random amplitude pairs (0: use --p/--c-*)");
    oracle->add_option("--seed", cfg.seed, "random seed for the trials");
    oracle->add_option("--dense-guard", cfg.dense_guard, "largest N for dense vectors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* active = app.get_subcommands().front();
        cfg.command = active->get_name();
        cfg.n_spec = n_spec;
        cfg.n_grid = parse_n_spec(n_spec);

        const bool has_p = flag_given(active, "--p");
        const bool has_cp = flag_given(active, "--c-plus");
        const bool has_cm = flag_given(active, "--c-minus");
        if (has_p && (has_cp || has_cm)) {
            throw std::invalid_argument("give either --p or --c-plus/--c-minus, not both");
        }
        if (has_cp != has_cm) {
            throw std::invalid_argument("--c-plus and --c-minus must be given together");
        }
        if (has_p) {
            cfg.p = p_value;
        } else if (has_cp) {
            cfg.c_plus_raw = c_plus_raw;
            cfg.c_minus_raw = c_minus_raw;
            cfg.c_plus = parse_complex(c_plus_raw, "--c-plus");
            cfg.c_minus = parse_complex(c_minus_raw, "--c-minus");
        }
        if (flag_given(active, "--eps")) cfg.epsilon = eps_value;
        if (flag_given(active, "--k")) cfg.k_index = k_value;
        cfg.output_path = output_path;

        emit(dispatch(cfg), cfg);
        return 0;
    } catch (const freqop::EmptyWindowError& e) {
        std::cerr << "freqop: " << e.what() << "\n";
        return 4;
    } catch (const freqop::GuardError& e) {
        std::cerr << "freqop: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "freqop: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "freqop: " << e.what() << "\n";
        return 1;
    }
}
