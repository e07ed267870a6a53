#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "projnorm/projections.hpp"
#include "projnorm/rng.hpp"
#include "projnorm/verify.hpp"

namespace projnorm::verify {

/// Checks a campaign can run, in report order.
inline const std::vector<std::string>& default_checks() {
    static const std::vector<std::string> names{"theorem",          "corollary",
                                                "lemma_product_power", "lemma_commutator",
                                                "power_expansion",  "nw_block"};
    return names;
}

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = [] {
        auto all = default_checks();
        all.push_back("bound_sandwich");
        return all;
    }();
    return names;
}

struct TrialConfig {
    std::vector<std::size_t> dims{2, 4, 8, 16};
    std::size_t trials_per_dim = 200;
    std::uint64_t base_seed = 0;
    double tol = kDefaultTol;
    unsigned n_max = kDefaultPowerMax;
    unsigned m_max = kDefaultPowerMax;
    std::vector<std::string> checks = default_checks();
    unsigned threads = 0;  // 0 = hardware concurrency; never affects results
};

struct CheckSummary {
    std::string name;
    std::size_t trials = 0;
    double max_residual = 0.0;
    std::vector<std::size_t> failures;  // trial indices
};

struct TrialError {
    std::size_t trial = 0;
    std::string message;
};

struct AggregateReport {
    TrialConfig config;
    std::vector<CheckSummary> per_check;
    std::vector<TrialError> errors;
    bool pass = true;
};

/// PROJPAIR_THREADS as a positive integer; nullopt when unset. Throws on malformed values.
inline std::optional<unsigned> threads_from_env() {
    const char* raw = std::getenv("PROJPAIR_THREADS");
    if (raw == nullptr) {
        return std::nullopt;
    }
    const std::string text(raw);
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || value <= 0 || value > 4096) {
        throw std::invalid_argument("PROJPAIR_THREADS must be a positive integer, got \"" + text + "\"");
    }
    return static_cast<unsigned>(value);
}

inline void validate(const TrialConfig& config) {
    for (std::size_t d : config.dims) {
        if (d < 2) {
            throw std::invalid_argument("trial dimensions must be at least 2");
        }
    }
    if (!(config.tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (config.n_max == 0 || config.m_max == 0) {
        throw std::invalid_argument("power limits must be at least 1");
    }
    for (const auto& name : config.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
            throw std::invalid_argument("unknown check \"" + name + "\"");
        }
    }
}

inline TrialReport run_check(const std::string& name, const projections::ProjectionPair& pair,
                             const TrialConfig& config) {
    if (name == "theorem") return check_theorem(pair, config.tol);
    if (name == "corollary") return check_corollary(pair, config.tol);
    if (name == "lemma_product_power") return check_lemma_product_power(pair, config.m_max, config.tol);
    if (name == "lemma_commutator") return check_lemma_commutator(pair, config.tol);
    if (name == "power_expansion") return check_power_expansion(pair, config.n_max, config.tol);
    if (name == "nw_block") return check_nw_block(pair, config.n_max, config.tol);
    if (name == "bound_sandwich") return check_bound_sandwich(pair, 50, config.tol);
    throw std::invalid_argument("unknown check \"" + name + "\"");
}

/// Trial i draws from seed base_seed + i: both ranks uniform in [1, dim − 1], then the pair seed.
inline projections::ProjectionPair campaign_pair(std::size_t dim, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    const auto rank_f = static_cast<std::size_t>(rng.uniform_int(1, dim - 1));
    const auto rank_g = static_cast<std::size_t>(rng.uniform_int(1, dim - 1));
    return projections::random_pair(dim, rank_f, rank_g, rng.next_u64());
}

namespace detail {

struct TrialOutcome {
    std::vector<TrialReport> reports;
    std::optional<std::string> error;
};

inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                body(i);
            }
        });
    }
}

}  // namespace detail

/**
 * Run every configured check on trials_per_dim random pairs for each
 * dimension. Trials are numbered across dimensions in order, and the report
 * is assembled in trial order, so it does not depend on the thread count.
 * A trial whose construction or check throws is recorded as an error.
 */
inline AggregateReport run_trials(const TrialConfig& config) {
    validate(config);
    const std::size_t total = config.dims.size() * config.trials_per_dim;
    std::vector<detail::TrialOutcome> outcomes(total);

    unsigned threads = config.threads;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }

    detail::parallel_for(total, threads, [&](std::size_t i) {
        const std::size_t dim = config.dims[i / config.trials_per_dim];
        auto& out = outcomes[i];
        try {
            const auto pair = campaign_pair(dim, config.base_seed + i);
            for (const auto& name : config.checks) {
                out.reports.push_back(run_check(name, pair, config));
            }
        } catch (const std::exception& e) {
            out.reports.clear();
            out.error = e.what();
        }
    });

    AggregateReport report;
    report.config = config;
    for (const auto& name : config.checks) {
        report.per_check.push_back({name, 0, 0.0, {}});
    }
    for (std::size_t i = 0; i < total; ++i) {
        const auto& out = outcomes[i];
        if (out.error) {
            report.errors.push_back({i, *out.error});
            report.pass = false;
            continue;
        }
        for (std::size_t c = 0; c < out.reports.size(); ++c) {
            auto& summary = report.per_check[c];
            const auto& r = out.reports[c];
            ++summary.trials;
            if (!(r.residual <= summary.max_residual)) {
                summary.max_residual = r.residual;
            }
            if (!r.pass) {
                summary.failures.push_back(i);
                report.pass = false;
            }
        }
    }
    return report;
}

/// {config, per_check: [{name, trials, max_residual, failures}], errors, verdict}
inline nlohmann::json to_json(const AggregateReport& report) {
    nlohmann::json per_check = nlohmann::json::array();
    for (const auto& s : report.per_check) {
        per_check.push_back({{"name", s.name},
                             {"trials", s.trials},
                             {"max_residual", s.max_residual},
                             {"failures", s.failures}});
    }
    nlohmann::json errors = nlohmann::json::array();
    for (const auto& e : report.errors) {
        errors.push_back({{"trial", e.trial}, {"message", e.message}});
    }
    const auto& c = report.config;
    return {{"config",
             {{"dims", c.dims},
              {"trials", c.trials_per_dim},
              {"seed", c.base_seed},
              {"tol", c.tol},
              {"n_max", c.n_max},
              {"m_max", c.m_max},
              {"checks", c.checks}}},
            {"per_check", per_check},
            {"errors", errors},
            {"verdict", report.pass ? "pass" : "fail"}};
}

}  // namespace projnorm::verify
