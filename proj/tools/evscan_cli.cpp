// evscan: compute extreme-value constants of standardized Gaussian
// increments, run scan-statistic ensembles, and check Gumbel fits.
//
// Exit codes: 0 success, 1 I/O failure, 2 domain/argument/parse error,
// 3 convergence-budget exhausted.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "evscan/constants.hpp"
#include "evscan/ensemble.hpp"
#include "evscan/errors.hpp"
#include "evscan/mc_oracles.hpp"
#include "evscan/normal.hpp"
#include "evscan/normalization.hpp"
#include "evscan/scan.hpp"
#include "evscan/spitzer.hpp"

namespace {

using nlohmann::json;
using namespace evscan;

constexpr const char* kToolVersion = "evscan 1.0.0";

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& token, long line) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("non-numeric cell '" + token + "'", line);
    return v;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& bytes) {
    std::ostringstream os;
    os << std::hex << fnv1a64(bytes);
    return os.str();
}

double wall_seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_text(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << body;
    if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool looks_numeric(const std::string& token) {
    double v;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    return res.ec == std::errc{} && res.ptr == token.data() + token.size();
}

// Input CSV: one increment per line; an optional single header line is
// tolerated. Ragged or non-numeric data rows are parse errors.
Eigen::ArrayXd read_increments(const std::string& path) {
    const std::vector<std::string> lines = read_lines(path);
    std::vector<double> values;
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const long line_no = static_cast<long>(idx) + 1;
        const std::string& line = lines[idx];
        if (line.empty()) {
            if (idx + 1 == lines.size()) continue;
            throw ParseError("empty line", line_no);
        }
        if (line.find(',') != std::string::npos)
            throw ParseError("expected one increment per line", line_no);
        if (idx == 0 && !looks_numeric(line)) continue;  // header row
        values.push_back(parse_double(line, line_no));
    }
    if (values.empty()) throw ParseError("no increments found", 1);
    Eigen::ArrayXd x(static_cast<long>(values.size()));
    for (std::size_t k = 0; k < values.size(); ++k) x[static_cast<long>(k)] = values[k];
    return x;
}

std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::main_discrete: return "main_discrete";
        case Statistic::erdos_renyi: return "erdos_renyi";
        case Statistic::darling_erdos: return "darling_erdos";
        case Statistic::brownian: return "brownian";
    }
    return "?";
}

Statistic statistic_from_name(const std::string& name) {
    if (name == "main_discrete") return Statistic::main_discrete;
    if (name == "erdos_renyi") return Statistic::erdos_renyi;
    if (name == "darling_erdos") return Statistic::darling_erdos;
    if (name == "brownian") return Statistic::brownian;
    throw ArgumentError("unknown statistic '" + name + "'");
}

// ---------------------------------------------------------------------------
// constants

int cmd_constants(double tol, const std::string& out) {
    const auto t0 = std::chrono::steady_clock::now();
    const HEstimate ha = constant_h(tol, HMethod::a_form);
    const HEstimate hy = constant_h(tol, HMethod::y_form);

    json pickands = json::array();
    const double grid_tol = std::min(tol, 1e-8);
    for (double a : {0.001, 0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 10.0, 50.0}) {
        const PickandsEvaluation f = pickands_f(a, grid_tol);
        pickands.push_back({{"a", a},
                            {"p_inf", f.p_inf},
                            {"f", f.f_value},
                            {"err_bound", f.err_bound}});
    }

    json norms = json::array();
    const struct {
        Theorem theorem;
        const char* name;
        std::optional<double> aux;
    } rows[] = {
        {Theorem::iid_max, "iid_max", {}},
        {Theorem::darling_erdos, "darling_erdos", {}},
        {Theorem::main_discrete, "main_discrete", {}},
        {Theorem::erdos_renyi, "erdos_renyi(c=1)", 1.0},
        {Theorem::brownian_continuous, "brownian_continuous", {}},
    };
    for (const auto& row : rows) {
        for (long n : {1000L, 10000L, 1000000L}) {
            const NormalizationPair p = normalization(row.theorem, n, row.aux);
            norms.push_back(
                {{"theorem", row.name}, {"n", n}, {"a_n", p.a_n}, {"b_n", p.b_n}});
        }
    }

    json doc = {
        {"h",
         {{"a_form", {{"value", ha.value}, {"err_bound", ha.err_bound}}},
          {"y_form", {{"value", hy.value}, {"err_bound", hy.err_bound}}}}},
        {"pickands", pickands},
        {"normalization", norms},
        {"meta", {{"tool", kToolVersion}, {"tol", tol}, {"wall_time_s", wall_seconds_since(t0)}}},
    };
    write_text(out, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct Manifest {
    EnsembleConfig config;
    std::string out = "samples.csv";
    std::string hash;
};

// Flag-side overrides of the manifest document; a manifest file is optional
// when the flags specify the whole experiment.
struct SimulateOverrides {
    std::optional<std::string> statistic;
    std::optional<long> n;
    std::optional<long> replications;
    std::optional<std::uint64_t> master_seed;
    std::optional<double> c;
    std::optional<long> oversample;
    std::optional<std::string> out;
    int threads = 0;
};

Manifest parse_manifest(const std::string& path, const SimulateOverrides& over) {
    json doc = json::object();
    if (!path.empty()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open for reading: " + path);
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("manifest: ") + e.what(), 1);
        }
        if (!doc.is_object()) throw ArgumentError("manifest: top level must be an object");
    }

    static const char* kKnown[] = {"statistic", "n",          "replications", "master_seed",
                                   "c",         "oversample", "threads",      "out"};
    for (const auto& item : doc.items()) {
        bool known = false;
        for (const char* k : kKnown) known = known || item.key() == k;
        if (!known) throw ArgumentError("manifest: unknown key '" + item.key() + "'");
    }
    if (over.statistic) doc["statistic"] = *over.statistic;
    if (over.n) doc["n"] = *over.n;
    if (over.replications) doc["replications"] = *over.replications;
    if (over.master_seed) doc["master_seed"] = *over.master_seed;
    if (over.c) doc["c"] = *over.c;
    if (over.oversample) doc["oversample"] = *over.oversample;
    for (const char* required : {"statistic", "n", "replications", "master_seed"}) {
        if (!doc.contains(required))
            throw ArgumentError(std::string("manifest: missing key '") + required + "'");
    }

    Manifest m;
    m.config.statistic = statistic_from_name(doc.at("statistic").get<std::string>());
    m.config.n = doc.at("n").get<long>();
    m.config.replications = doc.at("replications").get<long>();
    m.config.master_seed = doc.at("master_seed").get<std::uint64_t>();
    if (doc.contains("c")) {
        if (m.config.statistic != Statistic::erdos_renyi)
            throw ArgumentError("manifest: 'c' only applies to erdos_renyi");
        m.config.c = doc.at("c").get<double>();
    } else if (m.config.statistic == Statistic::erdos_renyi) {
        throw ArgumentError("manifest: erdos_renyi requires 'c'");
    }
    if (doc.contains("oversample")) {
        if (m.config.statistic != Statistic::brownian)
            throw ArgumentError("manifest: 'oversample' only applies to brownian");
        m.config.oversample = doc.at("oversample").get<long>();
    }
    if (doc.contains("threads")) m.config.threads = doc.at("threads").get<int>();
    if (doc.contains("out")) m.out = doc.at("out").get<std::string>();
    if (over.out) m.out = *over.out;
    if (over.threads > 0) m.config.threads = over.threads;

    // hash covers the experiment-defining fields only (not orchestration)
    json id = json::object();
    for (const char* key : {"statistic", "n", "replications", "master_seed", "c", "oversample"})
        if (doc.contains(key)) id[key] = doc.at(key);
    m.hash = hash_hex(id.dump());
    return m;
}

NormalizationPair normalization_of(const EnsembleConfig& config) {
    switch (config.statistic) {
        case Statistic::main_discrete: return normalization(Theorem::main_discrete, config.n);
        case Statistic::erdos_renyi: return normalization(Theorem::erdos_renyi, config.n, config.c);
        case Statistic::darling_erdos: return normalization(Theorem::darling_erdos, config.n);
        case Statistic::brownian: return normalization(Theorem::brownian_continuous, config.n);
    }
    throw ArgumentError("unknown statistic");
}

int cmd_simulate(const std::string& manifest_path, const SimulateOverrides& over) {
    const auto t0 = std::chrono::steady_clock::now();
    const Manifest m = parse_manifest(manifest_path, over);

    const EmpiricalDistribution emp = run_ensemble(m.config);
    const NormalizationPair norm = normalization_of(m.config);

    std::ostringstream os;
    os << "# evscan samples v1\n";
    os << "# tool=" << kToolVersion << "\n";
    os << "# manifest_hash=" << m.hash << "\n";
    os << "# statistic=" << statistic_name(m.config.statistic) << "\n";
    os << "# n=" << m.config.n << "\n";
    os << "# replications=" << m.config.replications << "\n";
    os << "# master_seed=" << m.config.master_seed << "\n";
    if (m.config.statistic == Statistic::erdos_renyi)
        os << "# c=" << fmt_double(m.config.c) << "\n";
    if (m.config.statistic == Statistic::brownian)
        os << "# oversample=" << m.config.oversample << "\n";
    os << "# a_n=" << fmt_double(norm.a_n) << "\n";
    os << "# b_n=" << fmt_double(norm.b_n) << "\n";
    os << "# wall_time_s=" << fmt_double(wall_seconds_since(t0)) << "\n";
    os << "replication,raw_value,standardized_value\n";
    for (long r = 0; r < m.config.replications; ++r) {
        const double raw = emp.raw[r];
        os << r << ',' << fmt_double(raw) << ',' << fmt_double((raw - norm.a_n) / norm.b_n)
           << '\n';
    }
    write_text(m.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// gof

int cmd_gof(const std::string& in, const std::string& out) {
    const std::vector<std::string> lines = read_lines(in);
    std::vector<double> standardized;
    std::string statistic = "unknown";
    bool header_seen = false;
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const long line_no = static_cast<long>(idx) + 1;
        const std::string& line = lines[idx];
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("statistic=");
            if (pos != std::string::npos) statistic = line.substr(pos + 10);
            continue;
        }
        if (!header_seen) {
            if (line != "replication,raw_value,standardized_value")
                throw ParseError("expected samples header", line_no);
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != 3) throw ParseError("expected three columns", line_no);
        standardized.push_back(parse_double(cells[2], line_no));
    }
    if (standardized.empty()) throw ParseError("no samples found", 1);
    std::sort(standardized.begin(), standardized.end());
    const double ks = ks_distance(standardized, [](double t) { return gumbel_cdf(t); });

    json doc = {{"ks", ks},
                {"replications", standardized.size()},
                {"statistic", statistic},
                {"reference", "gumbel"},
                {"meta", {{"tool", kToolVersion}, {"in", in}}}};
    write_text(out, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(const std::string& kind, double a, long horizon, double T, long reps,
               std::uint64_t seed, int threads, const std::string& out) {
    const auto t0 = std::chrono::steady_clock::now();
    OracleEstimate e{};
    json params;
    if (kind == "p_inf") {
        e = mc_p_inf(a, horizon, reps, seed, threads);
        params = {{"a", a}, {"horizon", horizon}};
    } else if (kind == "pickands_f") {
        e = mc_pickands_f(a, T, reps, seed, threads);
        params = {{"a", a}, {"T", T}};
    } else {
        throw ArgumentError("oracle kind must be p_inf or pickands_f");
    }
    json doc = {{"kind", kind},
                {"params", params},
                {"mean", e.mean},
                {"std_error", e.std_error},
                {"median_of_means", e.median_of_means},
                {"replications", e.replications},
                {"meta",
                 {{"tool", kToolVersion},
                  {"master_seed", seed},
                  {"wall_time_s", wall_seconds_since(t0)}}}};
    write_text(out, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(const std::string& in, const std::string& stat, double c, long min_sep,
             bool use_naive, const std::string& out) {
    const SamplePath path = SamplePath::from_increments(read_increments(in));
    json doc;
    const Statistic statistic = statistic_from_name(stat);
    switch (statistic) {
        case Statistic::main_discrete: {
            const ScanResult r =
                use_naive ? scan_max_naive(path, min_sep) : scan_max_pruned(path, min_sep);
            doc = {{"value", r.value},
                   {"i", r.i},
                   {"j", r.j},
                   {"pairs_examined", r.pairs_examined}};
            break;
        }
        case Statistic::erdos_renyi: {
            const WindowStat w = erdos_renyi_window(path, c);
            doc = {{"value", w.value}, {"k", w.k}, {"window", w.window}};
            break;
        }
        case Statistic::darling_erdos: {
            const WindowStat w = darling_erdos_max(path);
            doc = {{"value", w.value}, {"k", w.k}, {"window", w.window}};
            break;
        }
        default:
            throw ArgumentError("scan supports main_discrete, erdos_renyi, darling_erdos");
    }
    write_text(out, doc.dump(2) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// rates

int cmd_rates(long n, double c, const std::string& out) {
    const struct {
        int row;
        const char* index_set;
        const char* field;
        const char* formula;
    } rows[] = {
        {1, "{1..n}", "X_k", "n"},
        {2, "{1..n}", "S_k/sqrt(k)", "log n loglog n"},
        {3, "[1,n]", "B(x)/sqrt(x)", "log n loglog n"},
        {4, "{0<=i<j<=n}", "(S_j-S_i)/sqrt(j-i)", "H n log n"},
        {5, "{x2-x1>=1/n}", "(B(x2)-B(x1))/sqrt(x2-x1)", "n log^2 n"},
        {6, "{0..n-[c log n]}", "windowed increments", "(4/c) F(4/c) n"},
        {7, "{x2-x1=1/n}", "(B(x2)-B(x1))/sqrt(x2-x1)", "n log n"},
    };
    std::ostringstream os;
    os << "asymptotic extreme-value rates at n=" << n << ", c=" << fmt_double(c) << "\n";
    os << "row  index set           statistic                     f(n)               value\n";
    for (const auto& row : rows) {
        const RateTableEntry entry =
            row.row == 6 ? rate_table_row(6, c) : rate_table_row(row.row);
        char line[160];
        std::snprintf(line, sizeof line, "%-4d %-19s %-29s %-18s %s\n", row.row, row.index_set,
                      row.field, row.formula, fmt_double(evr_value(entry, n)).c_str());
        os << line;
    }
    write_text(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extreme-value analysis of standardized Gaussian increments"};
    app.require_subcommand(1);

    auto* constants = app.add_subcommand("constants", "evaluate H, F(a), p_inf(a), (a_n, b_n)");
    double tol = 1e-3;
    std::string constants_out = "constants.json";
    constants->add_option("--tol", tol, "absolute tolerance for H");
    constants->add_option("--out", constants_out, "output file ('-' for stdout)");

    auto* simulate =
        app.add_subcommand("simulate", "run an ensemble from a manifest and/or flags");
    std::string manifest_path;
    SimulateOverrides over;
    simulate->add_option("--manifest", manifest_path, "manifest JSON path");
    simulate->add_option("--stat", over.statistic,
                         "main_discrete, erdos_renyi, darling_erdos, brownian");
    simulate->add_option("--n", over.n, "sample-size parameter");
    simulate->add_option("--reps", over.replications, "replications");
    simulate->add_option("--seed", over.master_seed, "master seed");
    simulate->add_option("--c", over.c, "window constant (erdos_renyi)");
    simulate->add_option("--oversample", over.oversample, "mesh refinement (brownian)");
    simulate->add_option("--out", over.out, "output path (overrides the manifest)");
    simulate->add_option("--threads", over.threads, "override worker thread count");

    auto* gof = app.add_subcommand("gof", "Kolmogorov-Smirnov distance of samples vs Gumbel");
    std::string gof_in, gof_out = "-";
    gof->add_option("--in", gof_in, "samples CSV")->required();
    gof->add_option("--out", gof_out, "report file ('-' for stdout)");

    auto* oracle = app.add_subcommand("oracle", "Monte Carlo oracles for p_inf and F");
    std::string oracle_kind, oracle_out = "-";
    double oracle_a = 2.0, oracle_T = 200.0;
    long oracle_horizon = 10000, oracle_reps = 100000;
    std::uint64_t oracle_seed = 1;
    int oracle_threads = 0;
    oracle->add_option("--kind", oracle_kind, "p_inf or pickands_f")->required();
    oracle->add_option("--a", oracle_a, "grid step a");
    oracle->add_option("--horizon", oracle_horizon, "walk horizon (p_inf)");
    oracle->add_option("--T", oracle_T, "time horizon (pickands_f)");
    oracle->add_option("--reps", oracle_reps, "replications");
    oracle->add_option("--seed", oracle_seed, "master seed");
    oracle->add_option("--threads", oracle_threads, "worker threads");
    oracle->add_option("--out", oracle_out, "estimate file ('-' for stdout)");

    auto* scan = app.add_subcommand("scan", "evaluate a statistic on a CSV of increments");
    std::string scan_in, scan_stat = "main_discrete", scan_out = "-";
    double scan_c = 1.0;
    long scan_min_sep = 1;
    bool scan_naive = false;
    scan->add_option("--in", scan_in, "increments CSV (one per line)")->required();
    scan->add_option("--stat", scan_stat, "main_discrete, erdos_renyi, darling_erdos");
    scan->add_option("--c", scan_c, "window constant for erdos_renyi");
    scan->add_option("--min-sep", scan_min_sep, "minimum pair separation");
    scan->add_flag("--naive", scan_naive, "use the exhaustive scanner");
    scan->add_option("--out", scan_out, "result file ('-' for stdout)");

    auto* rates = app.add_subcommand("rates", "print the extreme-value-rate table at n");
    long rates_n = 1000000;
    double rates_c = 1.0;
    std::string rates_out = "-";
    rates->add_option("--n", rates_n, "evaluation point");
    rates->add_option("--c", rates_c, "window constant for the windowed row");
    rates->add_option("--out", rates_out, "output ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*constants) return cmd_constants(tol, constants_out);
        if (*simulate) return cmd_simulate(manifest_path, over);
        if (*gof) return cmd_gof(gof_in, gof_out);
        if (*oracle)
            return cmd_oracle(oracle_kind, oracle_a, oracle_horizon, oracle_T, oracle_reps,
                              oracle_seed, oracle_threads, oracle_out);
        if (*scan) return cmd_scan(scan_in, scan_stat, scan_c, scan_min_sep, scan_naive, scan_out);
        if (*rates) return cmd_rates(rates_n, rates_c, rates_out);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
