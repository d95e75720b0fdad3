#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gf5lat/gf5.hpp"
#include "oracles.hpp"

using namespace gf5lat;

static F5Matrix from_rows(std::vector<std::vector<F5>> rows) {
    F5Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

TEST_CASE("field arithmetic") {
    for (F5 a = 0; a < 5; ++a)
        for (F5 b = 0; b < 5; ++b) {
            CHECK(f5_add(a, b) == (a + b) % 5);
            CHECK(f5_mul(a, b) == (a * b) % 5);
            CHECK(f5_add(f5_sub(a, b), b) == a);
        }
    for (F5 a = 1; a < 5; ++a) {
        CHECK(f5_mul(a, f5_inv(a)) == 1);
        CHECK(f5_add(a, f5_neg(a)) == 0);
    }
    CHECK(f5_inv(2) == 3);
    CHECK(f5_inv(3) == 2);
    CHECK(f5_inv(4) == 4);
    CHECK_THROWS_AS(f5_inv(0), std::invalid_argument);
}

TEST_CASE("rref on a worked example") {
    /* [[2,4,1],[3,1,2]]: scale row 0 by 3, clear, scale, back-substitute */
    RrefResult r = rref(from_rows({{2, 4, 1}, {3, 1, 2}}));
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(r.m == from_rows({{1, 2, 0}, {0, 0, 1}}));
}

TEST_CASE("rref properties on random matrices") {
    oracles::Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(7);
        F5Matrix m = oracles::random_matrix(rng, rows, cols);
        RrefResult r = rref(m);
        CHECK(rref(r.m).m == r.m);
        CHECK(r.rank == rref(transpose(m)).rank);
        CHECK(oracles::row_span(m) == oracles::row_span(r.m));
        /* pivot columns carry unit vectors */
        for (std::size_t i = 0; i < r.rank; ++i)
            for (std::size_t i2 = 0; i2 < r.rank; ++i2)
                CHECK(r.m.at(i2, r.pivots[i]) == (i == i2 ? 1 : 0));
    }
}

TEST_CASE("code normalization makes equality structural") {
    oracles::Rng rng(12);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 4 + rng.below(6), k = 1 + rng.below(4);
        LinearCode c = oracles::random_code(rng, n, k);
        /* re-span by an invertible coefficient matrix */
        F5Matrix t(k, k);
        do {
            t = oracles::random_matrix(rng, k, k);
        } while (rref(t).rank != k);
        CHECK(LinearCode(mul(t, c.gen)) == c);
    }
}

TEST_CASE("rank-deficient generators are rejected") {
    CHECK_THROWS_AS(LinearCode(from_rows({{1, 2, 0}, {2, 4, 0}})), std::invalid_argument);
    LinearCode c = code_from_span(from_rows({{1, 2, 0}, {2, 4, 0}}));
    CHECK(c.k == 1);
    CHECK(c.n == 3);
}

TEST_CASE("dual code on a worked example") {
    LinearCode c(from_rows({{1, 2, 0}, {0, 0, 1}}));
    LinearCode d = dual_code(c);
    CHECK(d.k == 1);
    CHECK(d.gen == from_rows({{1, 2, 0}}));
}

TEST_CASE("dual code properties on random codes") {
    oracles::Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 2 + rng.below(8), k = 1 + rng.below(n);
        if (k > n) k = n;
        LinearCode c = oracles::random_code(rng, n, k);
        if (c.k == c.n) continue;
        LinearCode d = dual_code(c);
        CHECK(d.k == c.n - c.k);
        F5Matrix p = mul(c.gen, transpose(d.gen));
        for (F5 v : p.a) CHECK(v == 0);
        CHECK(dual_code(d) == c);
    }
}

TEST_CASE("self-dual detection") {
    CHECK(is_self_dual(LinearCode(from_rows({{1, 2}}))));
    CHECK(is_self_dual(LinearCode(from_rows({{1, 3}}))));
    CHECK_FALSE(is_self_dual(LinearCode(from_rows({{1, 1}}))));
    CHECK_FALSE(is_self_dual(LinearCode(from_rows({{1, 0, 0}}))));
    LinearCode c(from_rows({{1, 2}}));
    CHECK(dual_code(c) == c);
}

TEST_CASE("puncturing") {
    LinearCode c(from_rows({{1, 2}}));
    LinearCode p = puncture(c, 0);
    CHECK(p.n == 1);
    CHECK(p.k == 1);
    CHECK(p.gen == from_rows({{1}}));

    /* dimension drops when the deleted coordinate carried the support */
    LinearCode z = puncture(LinearCode(from_rows({{0, 1}})), 1);
    CHECK(z.n == 1);
    CHECK(z.k == 0);

    CHECK_THROWS_AS(puncture(c, 2), std::invalid_argument);
}

TEST_CASE("puncturing keeps the word set, coordinate deleted") {
    oracles::Rng rng(14);
    for (int it = 0; it < 30; ++it) {
        std::size_t n = 3 + rng.below(5), k = 1 + rng.below(3);
        LinearCode c = oracles::random_code(rng, n, k);
        std::size_t coord = rng.below(n);
        LinearCode p = puncture(c, coord);
        std::set<std::vector<F5>> expect;
        for (const auto& w : oracles::row_span(c.gen)) {
            std::vector<F5> v = w;
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(coord));
            expect.insert(v);
        }
        CHECK(expect == oracles::row_span(p.gen));
    }
}

TEST_CASE("encode and membership") {
    oracles::Rng rng(15);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 3 + rng.below(6), k = 1 + rng.below(3);
        LinearCode c = oracles::random_code(rng, n, k);
        std::vector<F5> msg(k);
        for (auto& v : msg) v = static_cast<F5>(rng.below(5));
        Codeword w = encode(c, msg);
        CHECK(contains(c, w));
        /* perturb one coordinate; with n > k the result usually leaves the code */
        Codeword bad = w;
        bad[rng.below(n)] = static_cast<F5>((bad[rng.below(n)] + 1) % 5);
        CHECK(oracles::row_span(c.gen).count(bad) == static_cast<std::size_t>(contains(c, bad)));
    }
    CHECK(weight(Codeword{0, 1, 0, 4, 2}) == 3);
    CHECK(weight(Codeword{}) == 0);
}
