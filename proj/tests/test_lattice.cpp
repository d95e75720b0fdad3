#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "gf5lat/lattice.hpp"
#include "gf5lat/negacirculant.hpp"
#include "oracles.hpp"

using namespace gf5lat;
using oracles::Rng;

namespace {

IntegerLattice zn(std::size_t n) {
    return IntegerLattice{n, IntMat::identity(n), 1};
}

IntMat random_basis(Rng& rng, std::size_t n, int span) {
    for (;;) {
        IntMat m(n, n);
        for (auto& v : m.a) v = static_cast<long>(rng.below(2 * span + 1)) - span;
        if (det(m) != 0) return m;
    }
}

/* coefficient box from the dual rows: |x_j| <= sqrt(R * |d_j|^2) / denom */
std::vector<long> box_bounds(const IntegerLattice& l, long scaled_bound) {
    RatMat d = dual_basis(l);
    std::vector<long> b(l.basis.rows);
    for (std::size_t j = 0; j < l.basis.rows; ++j) {
        mpq_class nd = 0;
        for (std::size_t t = 0; t < l.n; ++t) nd += d.at(j, t) * d.at(j, t);
        double r = std::sqrt(static_cast<double>(scaled_bound) * nd.get_d()) / l.denom.get_d();
        b[j] = static_cast<long>(r) + 1;
    }
    return b;
}

double box_size(const std::vector<long>& b) {
    double s = 1;
    for (long v : b) s *= 2.0 * v + 1.0;
    return s;
}

struct OracleVectors {
    std::vector<std::vector<long>> vecs;
    std::vector<long> norms;
};

/* plain odometer sweep over the coefficient box, no pruning */
OracleVectors oracle_short_vectors(const IntegerLattice& l, long scaled_bound,
                                   const std::vector<long>& b) {
    std::size_t n = l.basis.rows;
    std::vector<long> x(n, 0);
    for (std::size_t j = 0; j < n; ++j) x[j] = -b[j];
    std::set<std::vector<long>> seen;
    for (;;) {
        std::vector<long> v(l.n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < l.n; ++t) v[t] += x[j] * static_cast<long>(l.basis.at(j, t).get_si());
        long nn = 0;
        for (long c : v) nn += c * c;
        if (nn > 0 && nn <= scaled_bound) {
            std::size_t f = 0;
            while (v[f] == 0) ++f;
            if (v[f] < 0)
                for (auto& c : v) c = -c;
            seen.insert(v);
        }
        std::size_t j = 0;
        while (j < n && x[j] == b[j]) ++j;
        if (j == n) break;
        ++x[j];
        for (std::size_t t = 0; t < j; ++t) x[t] = -b[t];
    }
    OracleVectors out;
    for (const auto& v : seen) {
        long nn = 0;
        for (long c : v) nn += c * c;
        out.vecs.push_back(v);
        out.norms.push_back(nn);
    }
    std::vector<std::size_t> idx(out.vecs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) {
        if (out.norms[a] != out.norms[c]) return out.norms[a] < out.norms[c];
        return out.vecs[a] < out.vecs[c];
    });
    OracleVectors sorted;
    for (std::size_t i : idx) {
        sorted.vecs.push_back(out.vecs[i]);
        sorted.norms.push_back(out.norms[i]);
    }
    return sorted;
}

}  // namespace

TEST_CASE("short vector enumeration matches a box sweep") {
    Rng rng(0x5eed001);
    int done = 0;
    while (done < 60) {
        std::size_t n = 2 + rng.below(3);
        IntegerLattice l{n, random_basis(rng, n, 3), 1};
        long bound = 4 + static_cast<long>(rng.below(6));
        auto b = box_bounds(l, bound);
        if (box_size(b) > 3e5) continue;
        auto expect = oracle_short_vectors(l, bound, b);
        ShortVectorSet got = short_vectors(l, mpq_class(bound));
        REQUIRE(got.count == expect.vecs.size());
        for (std::size_t i = 0; i < got.count; ++i) {
            CHECK(got.norms_num[i] == expect.norms[i]);
            for (std::size_t t = 0; t < n; ++t) CHECK(got.vec(i)[t] == expect.vecs[i][t]);
        }
        ++done;
    }
}

TEST_CASE("short vector enumeration respects the denominator scale") {
    Rng rng(0x5eed002);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + rng.below(2);
        IntegerLattice l{n, random_basis(rng, n, 3), 5};
        long scaled = 10 + static_cast<long>(rng.below(15));
        auto b = box_bounds(l, scaled);
        if (box_size(b) > 3e5) continue;
        auto expect = oracle_short_vectors(l, scaled, b);
        ShortVectorSet got = short_vectors(l, mpq_class(scaled, 5));
        REQUIRE(got.count == expect.vecs.size());
        for (std::size_t i = 0; i < got.count; ++i) CHECK(got.norms_num[i] == expect.norms[i]);
    }
}

TEST_CASE("coset norm counts match a shifted box sweep") {
    Rng rng(0x5eed003);
    int done = 0;
    while (done < 30) {
        std::size_t n = 2 + rng.below(3);
        IntMat basis = random_basis(rng, n, 3);
        IntegerLattice l{n, basis, 1};
        std::vector<mpz_class> t(n);
        for (auto& v : t) v = static_cast<long>(rng.below(7)) - 3;
        long bound = 6 + static_cast<long>(rng.below(8));
        auto b = box_bounds(l, bound);
        if (box_size(b) > 2e5) continue;

        /* oracle: sweep x in a widened box, count t + x B by norm */
        RatMat tcol(n, 1);
        for (std::size_t i = 0; i < n; ++i) tcol.at(i, 0) = t[i];
        RatMat acol = solve(transpose(basis), tcol);
        std::map<std::int64_t, std::uint64_t> expect;
        std::vector<long> x(n), lo(n), hi(n);
        for (std::size_t j = 0; j < n; ++j) {
            double al = acol.at(j, 0).get_d();
            lo[j] = static_cast<long>(std::floor(-al)) - b[j] - 1;
            hi[j] = static_cast<long>(std::ceil(-al)) + b[j] + 1;
            x[j] = lo[j];
        }
        for (;;) {
            std::vector<long> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(t[i].get_si());
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) v[i] += x[j] * static_cast<long>(basis.at(j, i).get_si());
            long nn = 0;
            for (long c : v) nn += c * c;
            if (nn > 0 && nn <= bound) ++expect[nn];
            std::size_t j = 0;
            while (j < n && x[j] == hi[j]) ++j;
            if (j == n) break;
            ++x[j];
            for (std::size_t tt = 0; tt < j; ++tt) x[tt] = lo[tt];
        }

        auto got = coset_norm_counts(basis, 1, t, mpq_class(bound));
        CHECK(got == expect);
        ++done;
    }
}

TEST_CASE("lll reduction keeps the lattice and certifies the output basis") {
    Rng rng(0x5eed004);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = 2 + rng.below(5);
        IntegerLattice l{n, random_basis(rng, n, 9), 1};
        IntegerLattice r = lll_reduce(l);
        CHECK(hnf(r.basis) == hnf(l.basis));
        CHECK(det(gram(r.basis)) == det(gram(l.basis)));

        /* exact rational Gram-Schmidt over the reduced basis */
        std::vector<std::vector<mpq_class>> bs(n, std::vector<mpq_class>(n));
        std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
        std::vector<mpq_class> c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t t = 0; t < n; ++t) bs[i][t] = r.basis.at(i, t);
            for (std::size_t j = 0; j < i; ++j) {
                mpq_class num = 0;
                for (std::size_t t = 0; t < n; ++t) num += r.basis.at(i, t) * bs[j][t];
                mu[i][j] = num / c[j];
                for (std::size_t t = 0; t < n; ++t) bs[i][t] -= mu[i][j] * bs[j][t];
            }
            for (std::size_t t = 0; t < n; ++t) c[i] += bs[i][t] * bs[i][t];
            REQUIRE(c[i] > 0);
        }
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) CHECK(2 * abs(mu[i][j]) <= 1);
            mpq_class lovasz = c[i] + mu[i][i - 1] * mu[i][i - 1] * c[i - 1];
            CHECK(100 * lovasz >= 99 * c[i - 1]);
        }
    }
}

TEST_CASE("lll rejects dependent rows") {
    IntMat b(2, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = 2;
    b.at(1, 0) = 2;
    b.at(1, 1) = 4;
    CHECK_THROWS_AS(lll_reduce(IntegerLattice{2, b, 1}), std::invalid_argument);
}

TEST_CASE("construction from the repetition-like self-dual code of length 2") {
    F5Matrix g(1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = 2;
    LinearCode c(g);
    REQUIRE(is_self_dual(c));
    IntegerLattice l = construction_a(c);
    CHECK(l.denom == 5);
    IntMat expect(2, 2);
    expect.at(0, 0) = 1;
    expect.at(0, 1) = 2;
    expect.at(1, 0) = 0;
    expect.at(1, 1) = 5;
    CHECK(l.basis == expect);
    CHECK(det(gram(l.basis)) == 25);
    CHECK(is_integral(l));
    CHECK(is_unimodular(l));
    CHECK(minimum_norm(l) == 1);
    CHECK(kissing_number(l) == 4);
}

TEST_CASE("construction rejects codes that are not self-dual") {
    F5Matrix g(1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = 1;
    CHECK_THROWS_AS(construction_a(LinearCode(g)), std::invalid_argument);
}

TEST_CASE("construction lattice contains exactly the codeword lifts") {
    Rng rng(0x5eed005);
    FirstRowSpec r = parse_first_row("(2,0)");
    LinearCode c = quasi_twisted_code(r);
    REQUIRE(is_self_dual(c));
    IntegerLattice l = construction_a(c);
    CHECK(det(gram(l.basis)) == mpz_class(625));
    CHECK(is_unimodular(l));
    for (int it = 0; it < 200; ++it) {
        std::vector<F5> msg(c.k);
        for (auto& m : msg) m = static_cast<F5>(rng.below(5));
        std::vector<F5> word = encode(c, msg);
        std::vector<mpz_class> x(c.n);
        for (std::size_t i = 0; i < c.n; ++i)
            x[i] = mpz_class(word[i]) + 5 * (static_cast<long>(rng.below(5)) - 2);
        CHECK(in_row_lattice(l.basis, x));
        std::size_t flip = rng.below(c.n);
        x[flip] += 1 + static_cast<long>(rng.below(4));
        std::vector<F5> shifted(c.n);
        for (std::size_t i = 0; i < c.n; ++i)
            shifted[i] = static_cast<F5>(mpz_class(x[i] % 5 + 5).get_ui() % 5);
        CHECK(in_row_lattice(l.basis, x) == contains(c, shifted));
    }
}

TEST_CASE("dual basis pairs to denom times identity") {
    Rng rng(0x5eed006);
    for (int it = 0; it < 20; ++it) {
        std::size_t n = 2 + rng.below(3);
        IntegerLattice l{n, random_basis(rng, n, 4), 3};
        RatMat d = dual_basis(l);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class s = 0;
                for (std::size_t t = 0; t < n; ++t) s += l.basis.at(i, t) * d.at(j, t);
                CHECK(s == (i == j ? mpq_class(l.denom) : mpq_class(0)));
            }
    }
}

TEST_CASE("standard lattice invariants") {
    IntegerLattice z4 = zn(4);
    CHECK(is_integral(z4));
    CHECK(is_unimodular(z4));
    CHECK(minimum_norm(z4) == 1);
    CHECK(kissing_number(z4) == 8);
    CHECK_FALSE(is_extremal(z4));
    CHECK(is_s_extremal(z4));

    IntegerLattice z1 = zn(1);
    CHECK(minimum_norm(z1) == 1);
    CHECK(shadow(z1).shadow_min == mpq_class(1, 4));
    CHECK(is_s_extremal(z1));
    CHECK_THROWS_AS(neighbors(z1), std::invalid_argument);
}

TEST_CASE("even sublattice of the standard lattice") {
    for (std::size_t n : {2, 3, 4, 6}) {
        IntegerLattice l = zn(n);
        IntegerLattice l0 = even_sublattice(l);
        CHECK(det(gram(l0.basis)) == 4 * det(gram(l.basis)));
        /* every member has even norm */
        IntMat g = gram(l0.basis);
        for (std::size_t i = 0; i < n; ++i) CHECK(g.at(i, i) % 2 == 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) CHECK((g.at(i, i) + g.at(j, j) + 2 * g.at(i, j)) % 2 == 0);
    }
}

TEST_CASE("even sublattice rejects even or fractional input") {
    IntMat d2(2, 2);
    d2.at(0, 0) = 1;
    d2.at(0, 1) = 1;
    d2.at(1, 0) = 1;
    d2.at(1, 1) = -1;
    CHECK_THROWS_AS(even_sublattice(IntegerLattice{2, d2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(even_sublattice(IntegerLattice{2, IntMat::identity(2), 2}), std::invalid_argument);
}

TEST_CASE("shadow of the standard lattice in dimension 4") {
    IntegerLattice z4 = zn(4);
    ShadowDecomposition sd = shadow(z4);
    CHECK(sd.shadow_min == 1);
    CHECK(sd.dual2.denom == 4);
    CHECK(in_row_lattice(hnf(scale(z4.basis, 2)), sd.l2));
    CHECK_FALSE(in_row_lattice(hnf(scale(z4.basis, 2)), sd.l1));
    CHECK_FALSE(in_row_lattice(hnf(scale(z4.basis, 2)), sd.l3));
    CHECK(sd.l1 < sd.l3);

    /* eight norm-1 vectors in each shadow coset */
    IntMat sub = hnf(scale(sd.even.basis, 2));
    auto c1 = coset_norm_counts(sub, 4, sd.l1, 1);
    auto c3 = coset_norm_counts(sub, 4, sd.l3, 1);
    CHECK(c1[4] == 8);
    CHECK(c3[4] == 8);
}

TEST_CASE("neighbors of the standard lattice are unimodular with its invariants") {
    auto [n1, n2] = neighbors(zn(4));
    for (const IntegerLattice& l : {n1, n2}) {
        CHECK(l.denom == 4);
        CHECK(is_unimodular(l));
        CHECK(minimum_norm(l) == 1);
        CHECK(kissing_number(l) == 8);
    }
    CHECK_FALSE(lattice_equal(n1, n2));
}

TEST_CASE("pair invariant of a rescaled standard lattice") {
    IntegerLattice l{4, scale(IntMat::identity(4), 2), 1};
    CHECK(minimum_norm(l) == 4);
    InvariantPair p = inv_pair(l);
    CHECK(p.inv0 == 12);
    CHECK(p.inv1 == 0);
    CHECK_THROWS_AS(inv_pair(zn(4)), std::invalid_argument);
    CHECK_FALSE(invariant_distinct(l, l));
}

TEST_CASE("text round trip normalizes to hnf") {
    F5Matrix g(1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = 2;
    IntegerLattice l = construction_a(LinearCode(g));
    std::string text = lattice_to_text(l);
    IntegerLattice back = lattice_from_text(text);
    CHECK(lattice_equal(l, back));
    CHECK(back.denom == 5);
    CHECK(lattice_to_text(back) == text);
    CHECK_THROWS_AS(lattice_from_text("n 2\ndenom 5\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(lattice_from_text("m 2\n"), std::invalid_argument);
}
