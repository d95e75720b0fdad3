#include "gf5lat/isometry.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf5lat/intmat.hpp"

namespace gf5lat {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::int64_t dot32(const std::int32_t* x, const std::int32_t* y, std::size_t n) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<std::int64_t>(x[i]) * y[i];
    return s;
}

/* one lattice's side of the matching problem; norms and products carry the
   other side's denominator so keys from the two sides compare directly */
struct Side {
    ShortVectorSet sv;
    std::int64_t cross = 1;
    std::vector<std::int64_t> norm_key;  /* sv norm * cross, per vector */
    std::vector<std::uint64_t> color;    /* refined fingerprint class */
    std::vector<std::int8_t> table;      /* pairwise products, if small */

    std::int64_t pair_dot(std::size_t i, std::size_t j) const {
        if (!table.empty()) return table[i * sv.count + j];
        return dot32(sv.vec(i), sv.vec(j), sv.n);
    }
};

void build_side(Side& s, const IntegerLattice& l, const mpq_class& bound,
                const mpz_class& cross) {
    s.sv = short_vectors(l, bound);
    if (!cross.fits_slong_p()) throw std::invalid_argument("is_isomorphic: denominator too large");
    s.cross = cross.get_si();
    s.norm_key.resize(s.sv.count);
    for (std::size_t i = 0; i < s.sv.count; ++i) s.norm_key[i] = s.sv.norms_num[i] * s.cross;

    /* pairwise products fit one signed byte whenever the bound is modest;
       the table feeds both the fingerprints and the backtracking scans */
    std::size_t m = s.sv.count;
    std::int64_t maxdot = m ? s.sv.norms_num.back() : 0;
    s.table.clear();
    if (m > 0 && maxdot <= 127 && m <= std::size_t(17000)) {
        s.table.resize(m * m);
        for (std::size_t i = 0; i < m; ++i) {
            const std::int32_t* vi = s.sv.vec(i);
            for (std::size_t j = i; j < m; ++j) {
                std::int64_t d = dot32(vi, s.sv.vec(j), s.sv.n);
                s.table[i * m + j] = static_cast<std::int8_t>(d);
                s.table[j * m + i] = static_cast<std::int8_t>(d);
            }
        }
    }
}

/* iterated refinement of per-vector fingerprints: each round folds the
   multiset of (product magnitude, neighbour class) over the whole set into
   a new class value; a fixed round count keeps the two sides comparable */
void refine_colors(Side& s, int rounds) {
    std::size_t m = s.sv.count;
    s.color.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        s.color[i] = mix64(static_cast<std::uint64_t>(s.norm_key[i]));
    std::vector<std::uint64_t> next(m);
    for (int r = 0; r < rounds; ++r) {
        for (std::size_t i = 0; i < m; ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < m; ++j) {
                std::uint64_t k =
                    static_cast<std::uint64_t>(std::llabs(s.pair_dot(i, j)) * s.cross);
                acc += mix64(k ^ (s.color[j] * 0x100000001b3ULL));
            }
            next[i] = mix64(s.color[i] ^ acc);
        }
        s.color.swap(next);
    }
}

/* greedy full-rank subset of the vectors, visiting rare classes first so
   the search maps the most constrained vectors early */
std::vector<std::size_t> spanning_rows(const Side& s, std::size_t n) {
    std::size_t m = s.sv.count;
    std::map<std::uint64_t, std::size_t> class_size;
    for (std::size_t i = 0; i < m; ++i) ++class_size[s.color[i]];
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return class_size[s.color[x]] < class_size[s.color[y]];
    });

    std::vector<std::size_t> chosen;
    std::vector<std::vector<mpq_class>> ech;
    for (std::size_t oi = 0; oi < m && chosen.size() < n; ++oi) {
        std::size_t i = order[oi];
        std::vector<mpq_class> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = s.sv.vec(i)[j];
        for (const auto& e : ech) {
            std::size_t p = 0;
            while (p < n && e[p] == 0) ++p;
            if (p < n && row[p] != 0) {
                mpq_class f = row[p] / e[p];
                for (std::size_t j = p; j < n; ++j) row[j] -= f * e[j];
            }
        }
        bool nz = false;
        for (std::size_t j = 0; j < n && !nz; ++j) nz = row[j] != 0;
        if (nz) {
            ech.push_back(std::move(row));
            chosen.push_back(i);
        }
    }
    return chosen;
}

struct ExtensionCheck {
    IntMat z;       /* a.basis times the inverse of the mapped rows, cleared */
    mpz_class den;  /* of denominators: the image basis is (z * images) / den */
    IntMat hnf_b;
};

struct Search {
    const Side& A;
    const Side& B;
    std::size_t n;
    const std::vector<std::size_t>& rows;  /* mapped vectors, A side */
    const std::vector<std::int64_t>& g;    /* prescribed products, n x n */
    const std::vector<const std::vector<std::uint32_t>*>& cls;
    const ExtensionCheck& ext;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::vector<std::uint32_t> img;
    std::vector<std::int8_t> sgn;

    /* a complete product-compatible assignment already maps the rows onto a
       sublattice of the right determinant; this verifies it carries all of
       one lattice onto the other before the match is accepted */
    bool extends() const {
        IntMat w(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::int32_t* v = B.sv.vec(img[i]);
            for (std::size_t j = 0; j < n; ++j) w.at(i, j) = sgn[i] * mpz_class(v[j]);
        }
        IntMat m = mul(ext.z, w);
        std::vector<mpz_class> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                mpz_class& e = m.at(i, j);
                if (!mpz_divisible_p(e.get_mpz_t(), ext.den.get_mpz_t())) return false;
                row[j] = e / ext.den;
            }
            if (!in_row_lattice(ext.hnf_b, row)) return false;
        }
        return true;
    }

    bool rec(std::size_t d) {
        if (out_of_budget) return false;
        if (d == n) return extends();
        std::size_t mb = B.sv.count;
        for (std::uint32_t cand : *cls[d]) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                if (++nodes > budget) {
                    out_of_budget = true;
                    return false;
                }
                bool ok = true;
                for (std::size_t j = 0; j < d && ok; ++j) {
                    std::int64_t dv = B.table.empty()
                                          ? dot32(B.sv.vec(cand), B.sv.vec(img[j]), B.sv.n)
                                          : B.table[cand * mb + img[j]];
                    ok = sign * sgn[j] * dv * B.cross == g[d * n + j];
                }
                if (!ok) continue;
                img[d] = cand;
                sgn[d] = static_cast<std::int8_t>(sign);
                if (rec(d + 1)) return true;
                if (out_of_budget) return false;
            }
        }
        return false;
    }
};

}  // namespace

IsometryResult is_isomorphic(const IntegerLattice& a, const IntegerLattice& b,
                             std::uint64_t node_budget) {
    if (a.n != b.n) return IsometryResult::not_isomorphic;
    std::size_t n = a.n;
    mpz_class da = a.denom, db = b.denom;

    mpz_class pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), db.get_mpz_t(), n);
    mpz_pow_ui(pb.get_mpz_t(), da.get_mpz_t(), n);
    if (det(gram(a.basis)) * pa != det(gram(b.basis)) * pb)
        return IsometryResult::not_isomorphic;
    if (da == db && lattice_equal(a, b)) return IsometryResult::isomorphic;

    IntegerLattice ra = lll_reduce(a), rb = lll_reduce(b);
    IntMat ga = gram(ra.basis), gb = gram(rb.basis);
    auto diag_range = [n](const IntMat& g, const mpz_class& denom) {
        mpq_class lo(g.at(0, 0), denom);
        lo.canonicalize();
        mpq_class hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            mpq_class v(g.at(i, i), denom);
            v.canonicalize();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::pair<mpq_class, mpq_class>(lo, hi);
    };
    auto [lo_a, hi_a] = diag_range(ga, da);
    auto [lo_b, hi_b] = diag_range(gb, db);

    /* vectors up to the smaller diagonal norms usually span already; the
       bound grows to the full diagonal only when they do not, and the
       reduced rows themselves span from then on */
    mpq_class bound = std::max(lo_a, lo_b);
    mpq_class full = std::max(hi_a, hi_b);
    Side A, B;
    std::vector<std::size_t> rows;
    for (;;) {
        build_side(A, a, bound, db);
        build_side(B, b, bound, da);
        if (A.sv.count != B.sv.count || A.norm_key != B.norm_key)
            return IsometryResult::not_isomorphic;
        refine_colors(A, 2);
        refine_colors(B, 2);
        {
            std::vector<std::uint64_t> ca = A.color, cb = B.color;
            std::sort(ca.begin(), ca.end());
            std::sort(cb.begin(), cb.end());
            if (ca != cb) return IsometryResult::not_isomorphic;
        }
        rows = spanning_rows(A, n);
        if (rows.size() == n) break;
        if (bound == full) throw std::logic_error("is_isomorphic: reduced rows do not span");
        bound = full;
    }
    if (spanning_rows(B, n).size() != n) return IsometryResult::not_isomorphic;

    /* order the mapped vectors so each one is tied to its predecessors by
       as many nonzero products as possible */
    {
        std::map<std::uint64_t, std::size_t> class_size;
        for (std::size_t i = 0; i < A.sv.count; ++i) ++class_size[A.color[i]];
        std::vector<std::size_t> ordered;
        std::vector<bool> used(rows.size(), false);
        for (std::size_t step = 0; step < rows.size(); ++step) {
            std::size_t pick = rows.size();
            std::size_t best_ties = 0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (used[i]) continue;
                std::size_t ties = 0;
                for (std::size_t j : ordered)
                    if (A.pair_dot(rows[i], j) != 0) ++ties;
                bool better = pick == rows.size() || ties > best_ties ||
                              (ties == best_ties &&
                               class_size[A.color[rows[i]]] < class_size[A.color[rows[pick]]]);
                if (better) {
                    pick = i;
                    best_ties = ties;
                }
            }
            ordered.push_back(rows[pick]);
            used[pick] = true;
        }
        rows = ordered;
    }

    std::map<std::pair<std::int64_t, std::uint64_t>, std::vector<std::uint32_t>> classes;
    for (std::size_t i = 0; i < B.sv.count; ++i)
        classes[{B.norm_key[i], B.color[i]}].push_back(static_cast<std::uint32_t>(i));

    std::vector<std::int64_t> g(n * n);
    std::vector<const std::vector<std::uint32_t>*> cls(n);
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t j = 0; j < n; ++j)
            g[d * n + j] = A.pair_dot(rows[d], rows[j]) * A.cross;
        auto it = classes.find({A.norm_key[rows[d]], A.color[rows[d]]});
        if (it == classes.end()) return IsometryResult::not_isomorphic;
        cls[d] = &it->second;
    }

    ExtensionCheck ext;
    {
        IntMat bm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) bm.at(i, j) = A.sv.vec(rows[i])[j];
        RatMat yt = solve(transpose(bm), RatMat(transpose(a.basis)));
        ext.den = 1;
        for (const auto& q : yt.a) ext.den = lcm(ext.den, mpz_class(q.get_den()));
        ext.z = IntMat(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mpq_class v = yt.at(j, i) * ext.den;
                ext.z.at(i, j) = v.get_num();
            }
        ext.hnf_b = hnf(b.basis);
    }

    Search run{A, B, n, rows, g, cls, ext, node_budget};
    run.img.resize(n);
    run.sgn.resize(n);
    if (run.rec(0)) return IsometryResult::isomorphic;
    return run.out_of_budget ? IsometryResult::inconclusive : IsometryResult::not_isomorphic;
}

}  // namespace gf5lat
