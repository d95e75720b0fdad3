#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gf5lat/minweight.hpp"
#include "gf5lat/negacirculant.hpp"
#include "oracles.hpp"

using namespace gf5lat;

/* every nonzero word, by exhaustive span walk */
static std::size_t span_min_weight(const LinearCode& c) {
    std::size_t best = c.n + 1;
    for (const auto& w : oracles::row_span(c.gen)) {
        std::size_t wt = weight(w);
        if (wt) best = std::min(best, wt);
    }
    return best;
}

TEST_CASE("worked examples") {
    LinearCode c2(hstack(F5Matrix::identity(1), F5Matrix::identity(1)));
    c2.gen.at(0, 1) = 2; /* span{(1,2)} */
    c2 = LinearCode(c2.gen);
    MinWeightResult r = brouwer_zimmermann(c2);
    CHECK(r.d == 2);
    CHECK(r.exact);
    CHECK(weight(r.witness) == 2);
    CHECK(contains(c2, r.witness));
    CHECK(brute_force_min_weight(c2) == 2);

    MinWeightResult full = brouwer_zimmermann(LinearCode(F5Matrix::identity(4)));
    CHECK(full.d == 1);
    CHECK(full.witness == Codeword{0, 0, 0, 1});
}

TEST_CASE("matches brute force on random codes") {
    oracles::Rng rng(31);
    for (int it = 0; it < 220; ++it) {
        std::size_t n = 4 + rng.below(11); /* up to 14 */
        std::size_t k = 1 + rng.below(std::min<std::size_t>(n, 7));
        LinearCode c = oracles::random_code(rng, n, k);
        std::size_t want = brute_force_min_weight(c);
        MinWeightResult r = brouwer_zimmermann(c);
        CHECK(r.exact);
        CHECK(r.d == want);
        CHECK(weight(r.witness) == want);
        CHECK(contains(c, r.witness));
        /* witness is canonical: no unit multiple is lexicographically smaller */
        for (F5 cf = 2; cf <= 4; ++cf) {
            Codeword m(r.witness.size());
            for (std::size_t j = 0; j < m.size(); ++j) m[j] = f5_mul(cf, r.witness[j]);
            CHECK_FALSE(m < r.witness);
        }
    }
}

TEST_CASE("brute force guard") {
    oracles::Rng rng(32);
    LinearCode c = oracles::random_code(rng, 30, 14); /* 5^14 > 10^8 */
    CHECK_THROWS_AS(brute_force_min_weight(c), std::invalid_argument);
}

TEST_CASE("information sets are disjoint in their fresh columns and full rank") {
    oracles::Rng rng(33);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 6 + rng.below(9), k = 2 + rng.below(5);
        if (k > n / 2 + 1) k = n / 2 + 1;
        LinearCode c = oracles::random_code(rng, n, k);
        MinWeightResult r = brouwer_zimmermann(c);
        for (const auto& cols : r.info_sets) {
            CHECK(cols.size() == c.k);
            F5Matrix sub(c.k, cols.size());
            for (std::size_t i = 0; i < c.k; ++i)
                for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = c.gen.at(i, cols[j]);
            CHECK(rref(sub).rank == c.k);
        }
    }
}

TEST_CASE("early stop reports a bound, not an exact value") {
    oracles::Rng rng(34);
    LinearCode c = oracles::random_code(rng, 20, 10);
    std::size_t d = brouwer_zimmermann(c).d;
    if (d > 3) {
        MinWeightResult r = brouwer_zimmermann(c, 3);
        CHECK_FALSE(r.exact);
        CHECK(r.d == 3);
        CHECK(r.best_found >= d);
    }
}

TEST_CASE("find_words_of_weight") {
    LinearCode c2 = code_from_span([] {
        F5Matrix g(1, 2);
        g.at(0, 0) = 1;
        g.at(0, 1) = 2;
        return g;
    }());
    auto words = find_words_of_weight(c2, 2, 10);
    CHECK(words.size() == 4);
    std::set<Codeword> expect{{1, 2}, {2, 4}, {3, 1}, {4, 3}};
    CHECK(std::set<Codeword>(words.begin(), words.end()) == expect);
    CHECK(find_words_of_weight(c2, 1, 10).empty());

    oracles::Rng rng(35);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 5 + rng.below(7), k = 1 + rng.below(4);
        LinearCode c = oracles::random_code(rng, n, k);
        std::size_t w = 1 + rng.below(n);
        std::size_t limit = 1 + rng.below(20);
        auto got = find_words_of_weight(c, w, limit);
        std::set<Codeword> all;
        for (const auto& word : oracles::row_span(c.gen))
            if (weight(word) == w) all.insert(word);
        CHECK(got.size() == std::min(limit, all.size()));
        for (const auto& word : got) {
            CHECK(weight(word) == w);
            CHECK(all.count(word) == 1);
        }
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("quasi-twisted code minimum weight, small case") {
    /* self-dual [12,6] member of the generator family */
    oracles::Rng rng(36);
    int checked = 0;
    for (int it = 0; it < 20000 && checked < 3; ++it) {
        FirstRowSpec r;
        for (int i = 0; i < 6; ++i) r.r.push_back(static_cast<F5>(rng.below(5)));
        LinearCode c = quasi_twisted_code(r);
        if (!is_self_dual(c)) continue;
        ++checked;
        CHECK(brouwer_zimmermann(c).d == brute_force_min_weight(c));
    }
    CHECK(checked == 3);
}
