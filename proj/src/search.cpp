#include "gf5lat/search.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "gf5lat/gf5.hpp"
#include "gf5lat/minweight.hpp"
#include "gf5lat/qseries.hpp"

namespace gf5lat {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state(mix64(seed ^ mix64(trial))) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::size_t rows_per_trial(CodeFamily family) {
    return family == CodeFamily::quasi_twisted ? 1 : 2;
}

void validate(const SearchConfig& cfg) {
    std::size_t block = rows_per_trial(cfg.family) * 2;
    if (cfg.n == 0 || cfg.n % block != 0)
        throw std::invalid_argument("search: length must be a positive multiple of " +
                                    std::to_string(block));
}

std::uint64_t resolve_target(const SearchConfig& cfg) {
    if (cfg.kissing_target != 0) return cfg.kissing_target;
    return s_extremal_kissing_target(cfg.n);
}

LinearCode build_code(CodeFamily family, const std::vector<FirstRowSpec>& rows) {
    if (rows.size() != rows_per_trial(family))
        throw std::invalid_argument("search: candidate has the wrong number of first rows");
    if (family == CodeFamily::quasi_twisted) return quasi_twisted_code(rows[0]);
    return four_negacirculant_code(rows[0], rows[1]);
}

struct Evaluation {
    bool hit = false;
    InvariantPair inv;
    std::size_t min_weight = 0;
};

Evaluation evaluate(const SearchConfig& cfg, const std::vector<FirstRowSpec>& rows,
                    std::uint64_t target) {
    LinearCode c = build_code(cfg.family, rows);
    if (c.n != cfg.n)
        throw std::invalid_argument("search: candidate rows do not match the configured length");
    if (!is_self_dual(c)) return {};
    IntegerLattice l = construction_a(c);
    ShortVectorSet sv = short_vectors(l, 4);
    if (sv.count == 0 || sv.norms_num[0] != 4 * sv.denom) return {};
    if (2 * sv.count_at(4) != target) return {};
    Evaluation e;
    e.hit = true;
    e.inv = inv_pair(sv);
    e.min_weight = brouwer_zimmermann(c).d;
    return e;
}

SearchReport run(const SearchConfig& cfg,
                 const std::vector<std::vector<FirstRowSpec>>* candidates) {
    validate(cfg);
    std::uint64_t target = resolve_target(cfg);
    std::uint64_t trials = candidates ? candidates->size() : cfg.budget;

    SearchReport report;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<FirstRowSpec> rows =
            candidates ? (*candidates)[t] : sample_rows(cfg, t);
        Evaluation e = evaluate(cfg, rows, target);
        if (!e.hit) continue;
        if (!seen.insert({e.inv.inv0, e.inv.inv1}).second) continue;
        report.hits.push_back({t, std::move(rows), e.inv, e.min_weight});
    }
    report.trials_run = trials;
    report.distinct_invariant_pairs = seen.size();
    return report;
}

}  // namespace

std::vector<FirstRowSpec> sample_rows(const SearchConfig& cfg, std::uint64_t trial) {
    validate(cfg);
    std::size_t count = rows_per_trial(cfg.family);
    std::size_t len = cfg.n / (2 * count);
    TrialRng rng(cfg.seed, trial);
    std::vector<FirstRowSpec> rows(count);
    for (std::size_t i = 0; i < count; ++i) {
        rows[i].r.resize(len);
        rows[i].r[0] = static_cast<F5>(1 + rng.below(2));
        for (std::size_t j = 1; j < len; ++j)
            rows[i].r[j] = static_cast<F5>(rng.below(5));
    }
    return rows;
}

SearchReport search(const SearchConfig& cfg) {
    if (cfg.budget == 0) throw std::invalid_argument("search: budget must be positive");
    return run(cfg, nullptr);
}

SearchReport search_candidates(const SearchConfig& cfg,
                               const std::vector<std::vector<FirstRowSpec>>& candidates) {
    return run(cfg, &candidates);
}

}  // namespace gf5lat
