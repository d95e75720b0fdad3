#pragma once

#include "gf5lat/gf5.hpp"

namespace gf5lat {

struct MinWeightResult {
    /* exact minimum weight when exact, otherwise a certified lower bound */
    std::size_t d = 0;
    bool exact = true;
    /* weight of the best word seen; equals d when exact */
    std::size_t best_found = 0;
    /* lexicographically smallest word of weight best_found seen, unit
       multiples considered */
    Codeword witness;
    std::size_t enumerated_levels = 0;
    /* the completed information sets, one column list per set */
    std::vector<std::vector<std::size_t>> info_sets;
};

/* minimum weight by information-set enumeration over disjoint sets; if
   stop_at > 0, may return early with exact == false once the certified
   bound reaches stop_at */
MinWeightResult brouwer_zimmermann(const LinearCode& c, std::size_t stop_at = 0);

/* walks all (5^k - 1)/4 normalized messages; throws if 5^k > 10^8 */
std::size_t brute_force_min_weight(const LinearCode& c);

/* words of exact weight w, lexicographically sorted, at most limit of them;
   complete only if the enumeration bound passes w before limit is reached */
std::vector<Codeword> find_words_of_weight(const LinearCode& c, std::size_t w, std::size_t limit);

}  // namespace gf5lat
