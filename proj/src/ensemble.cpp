#include "evscan/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "evscan/errors.hpp"
#include "evscan/normalization.hpp"
#include "evscan/parallel.hpp"
#include "evscan/scan.hpp"

namespace evscan {
namespace {

NormalizationPair normalization_for(const EnsembleConfig& config) {
    switch (config.statistic) {
        case Statistic::main_discrete:
            return normalization(Theorem::main_discrete, config.n);
        case Statistic::erdos_renyi:
            return normalization(Theorem::erdos_renyi, config.n, config.c);
        case Statistic::darling_erdos:
            return normalization(Theorem::darling_erdos, config.n);
        case Statistic::brownian:
            return normalization(Theorem::brownian_continuous, config.n);
    }
    throw ArgumentError("run_ensemble: unknown statistic tag");
}

double statistic_value(const EnsembleConfig& config, NormalStream& stream) {
    switch (config.statistic) {
        case Statistic::main_discrete:
            return scan_max_pruned(sample_path(stream, config.n), 1).value;
        case Statistic::erdos_renyi:
            return erdos_renyi_window(sample_path(stream, config.n), config.c).value;
        case Statistic::darling_erdos:
            return darling_erdos_max(sample_path(stream, config.n)).value;
        case Statistic::brownian: {
            const long mesh = config.n * config.oversample;
            const double root_q = 1.0 / std::sqrt(static_cast<double>(mesh));
            SamplePath brownian = sample_path(stream, mesh);
            brownian = SamplePath::from_increments(brownian.increments * root_q);
            return brownian_grid_sup(brownian, config.n, config.oversample).value;
        }
    }
    throw ArgumentError("run_ensemble: unknown statistic tag");
}

}  // namespace

SamplePath sample_path(NormalStream& stream, long n) {
    if (n < 1) throw DomainError("sample_path: n must be positive");
    Eigen::ArrayXd x(n);
    Eigen::ArrayXd prefix(n + 1);
    prefix[0] = 0.0;
    for (long k = 0; k < n; ++k) {
        x[k] = stream.normal();
        prefix[k + 1] = prefix[k] + x[k];
    }
    return SamplePath{std::move(x), std::move(prefix)};
}

EmpiricalDistribution run_ensemble(const EnsembleConfig& config) {
    if (config.replications < 1)
        throw DomainError("run_ensemble: replications must be at least 1");
    const NormalizationPair norm = normalization_for(config);  // also primes the constants cache

    Eigen::ArrayXd raw(config.replications);
    parallel_for_index(config.replications, config.threads, [&](long r) {
        try {
            NormalStream stream(SeedSpec{config.master_seed, static_cast<std::uint64_t>(r)});
            raw[r] = statistic_value(config, stream);
        } catch (const std::exception& e) {
            throw std::runtime_error("replication " + std::to_string(r) + ": " + e.what());
        }
    });

    Eigen::ArrayXd samples = (raw - norm.a_n) / norm.b_n;
    std::sort(samples.data(), samples.data() + samples.size());
    return EmpiricalDistribution{std::move(samples), std::move(raw), config.n,
                                 config.replications, config.statistic};
}

double ks_distance(std::span<const double> sorted_samples,
                   const std::function<double(double)>& cdf) {
    const std::size_t R = sorted_samples.size();
    if (R == 0) throw DomainError("ks_distance: empty sample");
    double d = 0.0;
    for (std::size_t k = 0; k < R; ++k) {
        const double c = cdf(sorted_samples[k]);
        d = std::max(d, std::max((k + 1.0) / R - c, c - static_cast<double>(k) / R));
    }
    return d;
}

double ks_distance(const EmpiricalDistribution& emp,
                   const std::function<double(double)>& cdf) {
    return ks_distance(std::span<const double>(emp.samples.data(), emp.samples.size()), cdf);
}

std::vector<std::pair<long, double>> shao_ratio_trend(std::span<const long> ns, long reps,
                                                      std::uint64_t master_seed, int threads) {
    if (reps < 2) throw DomainError("shao_ratio_trend: need at least two replications");
    for (std::size_t k = 0; k + 1 < ns.size(); ++k)
        if (!(ns[k] < ns[k + 1])) throw ArgumentError("shao_ratio_trend: ns must be increasing");

    std::vector<std::pair<long, double>> out;
    out.reserve(ns.size());
    for (const long n : ns) {
        if (n < 2) throw DomainError("shao_ratio_trend: n must be at least 2");
        Eigen::ArrayXd ratios(reps);
        parallel_for_index(reps, threads, [&](long r) {
            NormalStream stream(SeedSpec{master_seed, static_cast<std::uint64_t>(r)});
            const double L = scan_max_pruned(sample_path(stream, n), 1).value;
            ratios[r] = L / std::sqrt(2.0 * std::log(static_cast<double>(n)));
        });
        out.emplace_back(n, ratios.mean());
    }
    return out;
}

}  // namespace evscan
