#pragma once

#include <cstdint>
#include <vector>

#include "gf5lat/lattice.hpp"
#include "gf5lat/negacirculant.hpp"

namespace gf5lat {

enum class CodeFamily { quasi_twisted, four_negacirculant };

/* a fixed config fully determines the trial sequence and the report */
struct SearchConfig {
    CodeFamily family = CodeFamily::quasi_twisted;
    std::size_t n = 0;     /* code length = lattice dimension */
    std::uint64_t seed = 0;
    std::uint64_t budget = 0; /* trial count */
    /* kissing number a hit must reach; 0 derives the s-extremal target
       from the dimension */
    std::uint64_t kissing_target = 0;
};

struct SearchHit {
    std::uint64_t trial = 0;
    std::vector<FirstRowSpec> rows;
    InvariantPair inv;
    std::size_t min_weight = 0;

    bool operator==(const SearchHit&) const = default;
};

struct SearchReport {
    /* first hit per distinct invariant pair, in trial order */
    std::vector<SearchHit> hits;
    std::uint64_t trials_run = 0;
    std::size_t distinct_invariant_pairs = 0;

    bool operator==(const SearchReport&) const = default;
};

/* the candidate first rows of one trial, a pure function of (seed,
   trial); every entry is uniform except the leading one, drawn from
   {1, 2} so unit multiples of a row are mostly skipped */
std::vector<FirstRowSpec> sample_rows(const SearchConfig& cfg, std::uint64_t trial);

/* runs cfg.budget sampled trials; a trial hits when its code is
   self-dual, the lattice minimum norm is 4 and the kissing number
   equals the target */
SearchReport search(const SearchConfig& cfg);

/* the same pipeline over an explicit candidate list instead of sampled
   rows; trial numbers are list positions */
SearchReport search_candidates(const SearchConfig& cfg,
                               const std::vector<std::vector<FirstRowSpec>>& candidates);

}  // namespace gf5lat
