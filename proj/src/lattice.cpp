#include "gf5lat/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gf5lat {

namespace {

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

std::int64_t to_i64(const mpz_class& v, const char* what) {
    if (!v.fits_slong_p()) throw std::invalid_argument(std::string(what) + ": entry too large");
    return v.get_si();
}

}  // namespace

IntegerLattice construction_a(const LinearCode& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("construction_a: code is not self-dual");
    /* generators: symmetric lifts of the generator rows plus 5 Z^n */
    IntMat stack(c.k + c.n, c.n);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.n; ++j) {
            int v = c.gen.at(i, j);
            stack.at(i, j) = v > 2 ? v - 5 : v;
        }
    for (std::size_t i = 0; i < c.n; ++i) stack.at(c.k + i, i) = 5;
    IntegerLattice l;
    l.n = c.n;
    l.basis = hnf(stack);
    l.denom = 5;
    if (l.basis.rows != c.n) throw std::logic_error("construction_a: basis not full rank");
    return l;
}

RatMat dual_basis(const IntegerLattice& l) {
    RatMat scaled(l.basis);
    for (auto& v : scaled.a) v *= l.denom;
    return solve(gram(l.basis), scaled);
}

bool is_integral(const IntegerLattice& l) {
    IntMat g = gram(l.basis);
    for (const auto& v : g.a)
        if (v % l.denom != 0) return false;
    return true;
}

bool is_unimodular(const IntegerLattice& l) {
    if (!is_integral(l)) return false;
    RatMat d = dual_basis(l);
    for (const auto& v : d.a)
        if (v.get_den() != 1) return false;
    return hnf(to_int(d)) == hnf(l.basis);
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
    return a.n == b.n && a.denom == b.denom && hnf(a.basis) == hnf(b.basis);
}

/* ---- exact LLL, delta = 99/100 ------------------------------------------- */

IntegerLattice lll_reduce(const IntegerLattice& l) {
    const std::size_t m = l.basis.rows;
    IntMat b = l.basis;
    /* integral Gram-Schmidt data: d[i] = det of the leading i x i Gram block,
       lam[i][j] = d[j+1-th] scaled projection */
    std::vector<mpz_class> d(m + 1);
    d[0] = 1;
    std::vector<std::vector<mpz_class>> lam(m, std::vector<mpz_class>(m, 0));

    auto dot = [&](std::size_t i, std::size_t j) {
        mpz_class s = 0;
        for (std::size_t t = 0; t < b.cols; ++t) s += b.at(i, t) * b.at(j, t);
        return s;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            mpz_class u = dot(i, j);
            for (std::size_t t = 0; t < j; ++t)
                u = exact_div(d[t + 1] * u - lam[i][t] * lam[j][t], d[t]);
            if (j < i)
                lam[i][j] = u;
            else {
                d[i + 1] = u;
                if (u == 0) throw std::invalid_argument("lll_reduce: dependent rows");
            }
        }

    auto size_reduce = [&](std::size_t k, std::size_t j) {
        mpz_class two_lam = 2 * lam[k][j];
        if (mpz_cmpabs(two_lam.get_mpz_t(), d[j + 1].get_mpz_t()) <= 0) return;
        /* q = nearest integer to lam / d */
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lam[k][j].get_mpz_t(), d[j + 1].get_mpz_t());
        if (2 * r > d[j + 1]) q += 1;
        for (std::size_t t = 0; t < b.cols; ++t) b.at(k, t) -= q * b.at(j, t);
        lam[k][j] -= q * d[j + 1];
        for (std::size_t t = 0; t < j; ++t) lam[k][t] -= q * lam[j][t];
    };

    std::size_t k = 1;
    while (k < m) {
        size_reduce(k, k - 1);
        mpz_class lhs = 100 * (d[k + 1] * d[k - 1] + lam[k][k - 1] * lam[k][k - 1]);
        if (lhs < 99 * d[k] * d[k]) {
            /* swap rows k and k-1 and patch the Gram-Schmidt data */
            for (std::size_t t = 0; t < b.cols; ++t) std::swap(b.at(k, t), b.at(k - 1, t));
            for (std::size_t t = 0; t + 1 < k; ++t) std::swap(lam[k][t], lam[k - 1][t]);
            mpz_class lamk = lam[k][k - 1];
            mpz_class bnew = exact_div(d[k - 1] * d[k + 1] + lamk * lamk, d[k]);
            for (std::size_t i = k + 1; i < m; ++i) {
                mpz_class t = lam[i][k];
                lam[i][k] = exact_div(d[k + 1] * lam[i][k - 1] - lamk * t, d[k]);
                lam[i][k - 1] = exact_div(bnew * t + lamk * lam[i][k], d[k + 1]);
            }
            d[k] = bnew;
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
            ++k;
        }
    }
    IntegerLattice out;
    out.n = l.n;
    out.basis = b;
    out.denom = l.denom;
    return out;
}

/* ---- enumeration ---------------------------------------------------------- */

namespace {

struct GsDouble {
    std::size_t m = 0;
    std::vector<double> mu; /* mu[i*m+j] for j < i */
    std::vector<double> c;  /* squared Gram-Schmidt norms */
};

/* floating Cholesky of the exact Gram matrix; falls back to exact rational
   Gram-Schmidt if cancellation destroys positivity */
GsDouble gram_schmidt_double(const IntMat& basis) {
    std::size_t m = basis.rows;
    GsDouble g;
    g.m = m;
    g.mu.assign(m * m, 0.0);
    g.c.assign(m, 0.0);
    IntMat gr = gram(basis);
    std::vector<double> grd(m * m);
    for (std::size_t i = 0; i < m * m; ++i) grd[i] = gr.a[i].get_d();
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = grd[i * m + j];
            for (std::size_t t = 0; t < j; ++t) s -= g.mu[i * m + t] * g.mu[j * m + t] * g.c[t];
            if (j < i)
                g.mu[i * m + j] = s / g.c[j];
            else if (s > 0)
                g.c[i] = s;
            else {
                ok = false;
                break;
            }
        }
    if (ok) return g;

    std::vector<std::vector<mpq_class>> bs(m, std::vector<mpq_class>(basis.cols));
    std::vector<mpq_class> cq(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t t = 0; t < basis.cols; ++t) bs[i][t] = basis.at(i, t);
        for (std::size_t j = 0; j < i; ++j) {
            mpq_class num = 0;
            for (std::size_t t = 0; t < basis.cols; ++t) num += basis.at(i, t) * bs[j][t];
            mpq_class muij = num / cq[j];
            g.mu[i * m + j] = muij.get_d();
            for (std::size_t t = 0; t < basis.cols; ++t) bs[i][t] -= muij * bs[j][t];
        }
        for (std::size_t t = 0; t < basis.cols; ++t) cq[i] += bs[i][t] * bs[i][t];
        if (cq[i] == 0) throw std::invalid_argument("gram_schmidt: dependent rows");
        g.c[i] = cq[i].get_d();
    }
    return g;
}

/* unimodular matrix whose first row is the primitive vector x, built by
   tracking inverse column operations while reducing x to a single gcd */
IntMat unimodular_with_first_row(const std::vector<mpz_class>& x) {
    std::size_t n = x.size();
    std::vector<mpz_class> a = x;
    IntMat w = IntMat::identity(n);
    auto add_col = [&](std::size_t p, std::size_t q, const mpz_class& t) {
        /* a: col q += t * col p, so w: row p -= t * row q */
        a[q] += t * a[p];
        for (std::size_t j = 0; j < n; ++j) w.at(p, j) -= t * w.at(q, j);
    };
    auto swap_col = [&](std::size_t p, std::size_t q) {
        std::swap(a[p], a[q]);
        for (std::size_t j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(q, j));
    };
    for (;;) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != 0 && (pivot == n || mpz_cmpabs(a[i].get_mpz_t(), a[pivot].get_mpz_t()) < 0))
                pivot = i;
        if (pivot == n) throw std::logic_error("unimodular_with_first_row: zero vector");
        bool more = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot || a[i] == 0) continue;
            mpz_class t;
            mpz_fdiv_q(t.get_mpz_t(), a[i].get_mpz_t(), a[pivot].get_mpz_t());
            add_col(pivot, i, -t);
            more = more || a[i] != 0;
        }
        if (!more) {
            if (pivot != 0) swap_col(0, pivot);
            if (a[0] < 0) {
                a[0] = -a[0];
                for (std::size_t j = 0; j < n; ++j) w.at(0, j) = -w.at(0, j);
            }
            if (a[0] != 1) throw std::logic_error("unimodular_with_first_row: vector not primitive");
            return w;
        }
    }
}

IntMat lll_rows(const IntMat& b) {
    return lll_reduce(IntegerLattice{b.cols, b, 1}).basis;
}

struct I64Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::int64_t> a;
};

I64Mat to_i64_mat(const IntMat& m, const char* what) {
    I64Mat z{m.rows, m.cols, {}};
    z.a.resize(m.rows * m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) z.a[i] = to_i64(m.a[i], what);
    return z;
}

/* shortest coefficient vector on the projected block [from, to) under the
   current floating Gram-Schmidt data; returns an empty vector if nothing
   beats the given squared bound */
std::vector<mpz_class> block_shortest(const GsDouble& gs, std::size_t from, std::size_t to,
                                      double bound) {
    std::vector<long long> x(to - from, 0), best;
    std::vector<double> y(to - from, 0.0);
    double bestn = bound;
    struct Rec {
        const GsDouble& gs;
        std::size_t from, to;
        std::vector<long long>& x;
        std::vector<double>& y;
        std::vector<long long>& best;
        double& bestn;
        void go(std::size_t level, double partial, bool zero_above) {
            if (level == from) {
                if (partial < bestn && !zero_above) {
                    bestn = partial;
                    best.assign(x.begin(), x.end());
                }
                return;
            }
            std::size_t i = level - 1;
            double center = 0.0;
            for (std::size_t j = level; j < to; ++j) center -= y[j - from] * gs.mu[j * gs.m + i];
            if (bestn - partial < 0) return;
            long long lft = std::llround(center);
            long long rgt = lft + 1;
            bool lok = true, rok = true;
            while (lok || rok) {
                bool useleft = !rok || (lok && center - static_cast<double>(lft) <=
                                                  static_cast<double>(rgt) - center);
                long long v = useleft ? lft : rgt;
                double diff = static_cast<double>(v) - center;
                double np = partial + gs.c[i] * diff * diff;
                if (np >= bestn) {
                    (useleft ? lok : rok) = false;
                } else if (zero_above && v < 0) {
                    lok = false;
                } else {
                    x[i - from] = v;
                    y[i - from] = static_cast<double>(v);
                    go(i, np, zero_above && v == 0);
                }
                if (useleft)
                    --lft;
                else
                    ++rgt;
            }
        }
    } rec{gs, from, to, x, y, best, bestn};
    rec.go(to, 0.0, true);
    std::vector<mpz_class> out(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) out[i] = static_cast<long>(best[i]);
    return out;
}

/* block-wise improvement of an LLL basis; the floating data only selects
   candidate rows while every applied transform is exact and unimodular, so
   rounding can cost time but never correctness */
IntMat bkz_improve(IntMat b, std::size_t beta, int max_tours) {
    std::size_t m = b.rows;
    if (m < 3 || beta < 3) return b;
    for (int tour = 0; tour < max_tours; ++tour) {
        bool changed = false;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            std::size_t k = std::min(j + beta, m);
            GsDouble gs = gram_schmidt_double(b);
            std::vector<mpz_class> x = block_shortest(gs, j, k, gs.c[j] * 0.995);
            if (x.empty()) continue;
            mpz_class g = 0;
            for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            for (auto& v : x) v = exact_div(v, g);
            bool trivial = x[0] == 1 || x[0] == -1;
            for (std::size_t t = 1; t < x.size() && trivial; ++t) trivial = x[t] == 0;
            if (trivial) continue;
            IntMat t = unimodular_with_first_row(x);
            IntMat block(k - j, b.cols);
            for (std::size_t r = j; r < k; ++r)
                for (std::size_t c = 0; c < b.cols; ++c) block.at(r - j, c) = b.at(r, c);
            IntMat nb = mul(t, block);
            for (std::size_t r = j; r < k; ++r)
                for (std::size_t c = 0; c < b.cols; ++c) b.at(r, c) = nb.at(r - j, c);
            IntMat prefix(k, b.cols);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < b.cols; ++c) prefix.at(r, c) = b.at(r, c);
            prefix = lll_rows(prefix);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < b.cols; ++c) b.at(r, c) = prefix.at(r, c);
            changed = true;
        }
        if (!changed) break;
    }
    return b;
}

/* walks every lattice point (or coset point) with squared length at most
   bound, levels from the last row down, calling leaf(x) on survivors;
   alpha shifts the integer coordinates for coset enumeration and halve
   keeps only one of each antipodal pair */
struct Enumerator {
    const GsDouble& gs;
    const std::vector<double>& alpha;
    double bound_f;
    bool halve;
    std::vector<double> y;       /* x_j + alpha_j for chosen levels */
    std::vector<double> partial; /* accumulated norm above each level */
    std::vector<std::int64_t> x;

    template <typename Leaf>
    void run(Leaf&& leaf) {
        std::size_t m = gs.m;
        y.assign(m, 0.0);
        partial.assign(m + 1, 0.0);
        x.assign(m, 0);
        descend(m, true, leaf);
    }

    template <typename Leaf>
    void descend(std::size_t level, bool zero_above, Leaf&& leaf) {
        if (level == 0) {
            leaf(x);
            return;
        }
        std::size_t i = level - 1;
        double center = -alpha[i];
        for (std::size_t j = level; j < gs.m; ++j) center -= y[j] * gs.mu[j * gs.m + i];
        double budget = bound_f - partial[level];
        if (budget < 0) return;
        double rad = std::sqrt(budget / gs.c[i]) + 1e-9;
        auto lo = static_cast<std::int64_t>(std::ceil(center - rad));
        auto hi = static_cast<std::int64_t>(std::floor(center + rad));
        bool restrict_sign = halve && zero_above;
        if (restrict_sign && lo < 0) lo = 0;
        for (std::int64_t v = lo; v <= hi; ++v) {
            double dy = static_cast<double>(v) + alpha[i];
            double diff = static_cast<double>(v) - center;
            double np = partial[level] + gs.c[i] * diff * diff;
            if (np > bound_f) continue;
            x[i] = v;
            y[i] = dy;
            partial[i] = np;
            descend(i, zero_above && v == 0, leaf);
        }
    }
};

}  // namespace

std::size_t ShortVectorSet::count_at(const mpq_class& norm) const {
    mpq_class scaled = norm * denom;
    if (scaled.get_den() != 1) return 0;
    if (!scaled.get_num().fits_slong_p()) return 0;
    std::int64_t target = scaled.get_num().get_si();
    std::size_t c = 0;
    for (std::int64_t v : norms_num) c += (v == target);
    return c;
}

ShortVectorSet short_vectors(const IntegerLattice& l, const mpq_class& max_norm) {
    IntegerLattice red = lll_reduce(l);
    red.basis = bkz_improve(red.basis, 14, 16);
    GsDouble gs = gram_schmidt_double(red.basis);
    mpq_class bound_q = max_norm * red.denom;
    mpz_class bound_z;
    mpz_fdiv_q(bound_z.get_mpz_t(), bound_q.get_num().get_mpz_t(), bound_q.get_den().get_mpz_t());
    if (bound_z < 0) throw std::invalid_argument("short_vectors: negative bound");
    std::int64_t bound = to_i64(bound_z, "short_vectors bound");
    I64Mat b = to_i64_mat(red.basis, "short_vectors basis");
    std::size_t n = l.n;

    ShortVectorSet out;
    out.n = n;
    out.denom = l.denom;
    std::vector<double> alpha(n, 0.0);
    Enumerator e{gs, alpha, static_cast<double>(bound) * (1 + 1e-7) + 1e-7, true, {}, {}, {}};
    std::vector<std::int64_t> v(n);
    e.run([&](const std::vector<std::int64_t>& xs) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t c = xs[j];
            if (!c) continue;
            const std::int64_t* row = &b.a[j * n];
            for (std::size_t t = 0; t < n; ++t) v[t] += c * row[t];
        }
        std::int64_t nn = 0;
        for (std::size_t t = 0; t < n; ++t) nn += v[t] * v[t];
        if (nn == 0 || nn > bound) return;
        std::size_t first = 0;
        while (v[first] == 0) ++first;
        if (v[first] < 0)
            for (std::size_t t = first; t < n; ++t) v[t] = -v[t];
        for (std::size_t t = 0; t < n; ++t) {
            if (v[t] < INT32_MIN || v[t] > INT32_MAX)
                throw std::invalid_argument("short_vectors: coordinate overflow");
            out.flat.push_back(static_cast<std::int32_t>(v[t]));
        }
        out.norms_num.push_back(nn);
        ++out.count;
    });

    /* sort by (norm, lexicographic coordinates) */
    std::vector<std::size_t> idx(out.count);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) {
        if (out.norms_num[a] != out.norms_num[c]) return out.norms_num[a] < out.norms_num[c];
        return std::lexicographical_compare(out.vec(a), out.vec(a) + n, out.vec(c), out.vec(c) + n);
    });
    std::vector<std::int32_t> flat(out.flat.size());
    std::vector<std::int64_t> norms(out.count);
    for (std::size_t i = 0; i < out.count; ++i) {
        norms[i] = out.norms_num[idx[i]];
        std::copy(out.vec(idx[i]), out.vec(idx[i]) + n, &flat[i * n]);
    }
    out.flat = std::move(flat);
    out.norms_num = std::move(norms);
    return out;
}

namespace {

struct CosetData {
    IntMat reduced;
    GsDouble gs;
    I64Mat b;
    std::vector<double> alpha;
    std::vector<std::int64_t> ti;
};

CosetData retarget(CosetData d, const std::vector<mpz_class>& t) {
    std::size_t n = d.reduced.cols;
    RatMat tcol(n, 1);
    for (std::size_t i = 0; i < n; ++i) tcol.at(i, 0) = t[i];
    RatMat acol = solve(transpose(d.reduced), tcol);
    d.alpha.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.alpha[i] = acol.at(i, 0).get_d();
    d.ti.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.ti[i] = to_i64(t[i], "coset target");
    return d;
}

CosetData prepare_coset(const IntMat& basis, const std::vector<mpz_class>& t) {
    CosetData d;
    d.reduced = bkz_improve(lll_rows(basis), 14, 16);
    d.gs = gram_schmidt_double(d.reduced);
    d.b = to_i64_mat(d.reduced, "coset basis");
    return retarget(std::move(d), t);
}

std::map<std::int64_t, std::uint64_t> coset_counts_prepared(const CosetData& d,
                                                            std::int64_t bound) {
    std::size_t n = d.b.cols;
    std::map<std::int64_t, std::uint64_t> counts;
    Enumerator e{d.gs, d.alpha, static_cast<double>(bound) * (1 + 1e-7) + 1e-7, false, {}, {}, {}};
    std::vector<std::int64_t> v(n);
    e.run([&](const std::vector<std::int64_t>& xs) {
        v = d.ti;
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t c = xs[j];
            if (!c) continue;
            const std::int64_t* row = &d.b.a[j * n];
            for (std::size_t tt = 0; tt < n; ++tt) v[tt] += c * row[tt];
        }
        std::int64_t nn = 0;
        for (std::size_t tt = 0; tt < n; ++tt) nn += v[tt] * v[tt];
        if (nn == 0 || nn > bound) return;
        ++counts[nn];
    });
    return counts;
}

/* smallest nonzero norm in the coset at or under start_bound, found with a
   shrinking radius and children visited nearest the center first, so the
   first leaf is already a rounding-off vector and the rest prunes hard;
   -1 if the coset has nothing that short; when every norm in the coset is
   known to fall in one residue class mod `step`, passing that step lets the
   radius drop a whole class below each new best instead of by one */
std::int64_t coset_min_prepared(const CosetData& d, std::int64_t start_bound,
                                std::int64_t step = 1) {
    std::size_t n = d.b.cols;
    std::int64_t best = -1;
    double radius = static_cast<double>(start_bound) * (1 + 1e-7) + 1e-7;
    struct Rec {
        const CosetData& d;
        std::size_t n;
        std::int64_t& best;
        double& radius;
        std::int64_t step;
        std::vector<double> y, partial;
        std::vector<std::int64_t> x, v;
        void go(std::size_t level) {
            if (level == 0) {
                v = d.ti;
                for (std::size_t j = 0; j < n; ++j) {
                    std::int64_t c = x[j];
                    if (!c) continue;
                    const std::int64_t* row = &d.b.a[j * n];
                    for (std::size_t t = 0; t < n; ++t) v[t] += c * row[t];
                }
                std::int64_t nn = 0;
                for (std::size_t t = 0; t < n; ++t) nn += v[t] * v[t];
                if (nn == 0) return;
                if (best < 0 || nn < best) {
                    best = nn;
                    /* only strictly shorter vectors matter from here on */
                    radius = static_cast<double>(nn - step) * (1 + 1e-7) + 1e-7;
                }
                return;
            }
            std::size_t i = level - 1;
            double center = -d.alpha[i];
            for (std::size_t j = level; j < n; ++j) center -= y[j] * d.gs.mu[j * n + i];
            if (radius - partial[level] < 0) return;
            std::int64_t lft = static_cast<std::int64_t>(std::llround(center));
            std::int64_t rgt = lft + 1;
            bool lok = true, rok = true;
            while (lok || rok) {
                bool useleft = !rok || (lok && center - static_cast<double>(lft) <=
                                                  static_cast<double>(rgt) - center);
                std::int64_t w = useleft ? lft : rgt;
                double diff = static_cast<double>(w) - center;
                double np = partial[level] + d.gs.c[i] * diff * diff;
                if (np > radius) {
                    (useleft ? lok : rok) = false;
                } else {
                    x[i] = w;
                    y[i] = static_cast<double>(w) + d.alpha[i];
                    partial[i] = np;
                    go(i);
                }
                if (useleft)
                    --lft;
                else
                    ++rgt;
            }
        }
    } rec{d, n, best, radius, step, std::vector<double>(n, 0.0),
          std::vector<double>(n + 1, 0.0), std::vector<std::int64_t>(n, 0),
          std::vector<std::int64_t>(n, 0)};
    rec.go(n);
    return best;
}

std::int64_t scaled_floor(const mpq_class& norm, const mpz_class& denom, const char* what) {
    mpq_class q = norm * denom;
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return to_i64(z, what);
}

}  // namespace

std::map<std::int64_t, std::uint64_t> coset_norm_counts(const IntMat& basis,
                                                        const mpz_class& denom4,
                                                        const std::vector<mpz_class>& t,
                                                        const mpq_class& max_norm) {
    std::int64_t bound = scaled_floor(max_norm, denom4, "coset bound");
    if (bound < 0) return {};
    return coset_counts_prepared(prepare_coset(basis, t), bound);
}

namespace {

/* one enumeration bounded by the smallest gram diagonal, which is enough to
   see the minimum and everything at it */
ShortVectorSet vectors_to_min_diagonal(const IntegerLattice& l) {
    IntegerLattice red = lll_reduce(l);
    IntMat g = gram(red.basis);
    mpz_class diag = g.at(0, 0);
    for (std::size_t i = 1; i < red.basis.rows; ++i) diag = std::min(diag, g.at(i, i));
    ShortVectorSet sv = short_vectors(red, mpq_class(diag) / l.denom);
    if (sv.count == 0) throw std::logic_error("minimum_norm: empty enumeration");
    return sv;
}

}  // namespace

mpq_class minimum_norm(const IntegerLattice& l) {
    ShortVectorSet sv = vectors_to_min_diagonal(l);
    mpq_class q(sv.norms_num.front());
    q /= l.denom;
    q.canonicalize();
    return q;
}

std::size_t kissing_number(const IntegerLattice& l) {
    ShortVectorSet sv = vectors_to_min_diagonal(l);
    std::size_t c = 0;
    while (c < sv.count && sv.norms_num[c] == sv.norms_num.front()) ++c;
    return 2 * c;
}

/* ---- norm-4 pair invariant ------------------------------------------------ */

InvariantPair inv_pair(const IntegerLattice& l) {
    return inv_pair(short_vectors(l, 4));
}

InvariantPair inv_pair(const ShortVectorSet& sv) {
    std::int64_t denom = to_i64(sv.denom, "inv_pair denom");
    if (sv.count == 0 || sv.norms_num.front() != 4 * denom)
        throw std::invalid_argument("inv_pair: minimum norm is not 4");
    std::size_t last = sv.count;
    while (last > 0 && sv.norms_num[last - 1] > 4 * denom) --last;
    std::size_t m = last, n = sv.n;

    /* padded int16 copies keep the dot-product loop vectorizable */
    std::size_t stride = (n + 15) / 16 * 16;
    std::vector<std::int16_t> packed(m * stride, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int32_t c = sv.vec(i)[j];
            if (c < INT16_MIN || c > INT16_MAX) throw std::invalid_argument("inv_pair: coordinates too large");
            packed[i * stride + j] = static_cast<std::int16_t>(c);
        }

    std::uint64_t c0 = 0, c1 = 0, c2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int16_t* a = &packed[i * stride];
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::int16_t* bb = &packed[j * stride];
            std::int32_t dp = 0;
            for (std::size_t t = 0; t < stride; ++t) dp += static_cast<std::int32_t>(a[t]) * bb[t];
            std::int32_t ap = dp < 0 ? -dp : dp;
            if (ap % denom != 0) throw std::logic_error("inv_pair: product not divisible by denom");
            switch (ap / denom) {
                case 0: c0 += 2; break;
                case 1: c1 += 2; break;
                case 2: c2 += 2; break;
                default: throw std::logic_error("inv_pair: off-diagonal product exceeds 2");
            }
        }
    }
    if (c0 + c1 + c2 != static_cast<std::uint64_t>(m) * m - m)
        throw std::logic_error("inv_pair: pair count mismatch");
    return InvariantPair{c0, c1};
}

bool invariant_distinct(const IntegerLattice& a, const IntegerLattice& b) {
    return !(inv_pair(a) == inv_pair(b));
}

/* ---- parity, shadow, neighbors -------------------------------------------- */

IntegerLattice even_sublattice(const IntegerLattice& l) {
    if (!is_integral(l)) throw std::invalid_argument("even_sublattice: lattice is not integral");
    IntMat g = gram(l.basis);
    std::size_t n = l.basis.rows;
    std::vector<int> parity(n);
    std::size_t odd = n;
    for (std::size_t i = 0; i < n; ++i) {
        parity[i] = static_cast<int>(mpz_class(exact_div(g.at(i, i), l.denom) % 2).get_si());
        if (parity[i] && odd == n) odd = i;
    }
    if (odd == n) throw std::invalid_argument("even_sublattice: lattice is already even");
    IntMat rows(n, l.basis.cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < l.basis.cols; ++j) {
            if (i == odd)
                rows.at(i, j) = 2 * l.basis.at(i, j);
            else
                rows.at(i, j) = l.basis.at(i, j) - parity[i] * l.basis.at(odd, j);
        }
    IntegerLattice out;
    out.n = l.n;
    out.basis = hnf(rows);
    out.denom = l.denom;
    if (out.basis.rows != n) throw std::logic_error("even_sublattice: rank drop");
    return out;
}

namespace {

/* canonical coset representative: reduce against an HNF basis top-down */
std::vector<mpz_class> reduce_mod_hnf(const IntMat& h, std::vector<mpz_class> v) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols && row < h.rows; ++col) {
        if (h.at(row, col) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[col].get_mpz_t(), h.at(row, col).get_mpz_t());
        if (q != 0)
            for (std::size_t j = col; j < h.cols; ++j) v[j] -= q * h.at(row, j);
        ++row;
    }
    return v;
}

}  // namespace

ShadowDecomposition shadow(const IntegerLattice& l) {
    if (!is_unimodular(l)) throw std::invalid_argument("shadow: lattice is not unimodular");
    ShadowDecomposition sd;
    sd.even = even_sublattice(l); /* throws if l is even */
    std::size_t n = l.n;
    mpz_class denom4 = 4 * l.denom;

    /* 2 L0^*: solve G0 X = 2 denom B0, integer for unimodular l */
    RatMat rhs(sd.even.basis);
    for (auto& v : rhs.a) v *= 2 * l.denom;
    IntMat dual2 = to_int(solve(gram(sd.even.basis), rhs));
    sd.dual2 = IntegerLattice{n, hnf(dual2), denom4};

    IntMat sub = hnf(scale(sd.even.basis, 2));    /* 2 L0 at denom4 scale */
    IntMat whole = hnf(scale(l.basis, 2));        /* 2 L  at denom4 scale */

    /* the four cosets of 2 L0 inside 2 L0^* */
    std::vector<std::vector<mpz_class>> reps;
    auto add_rep = [&](std::vector<mpz_class> v) {
        v = reduce_mod_hnf(sub, std::move(v));
        for (const auto& r : reps)
            if (r == v) return;
        reps.push_back(std::move(v));
    };
    add_rep(std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<mpz_class> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = sd.dual2.basis.at(i, j);
        add_rep(std::move(row));
    }
    /* close under addition */
    for (std::size_t i = 0; i < reps.size() && reps.size() < 4; ++i)
        for (std::size_t j = i; j < reps.size() && reps.size() < 4; ++j) {
            std::vector<mpz_class> s(n);
            for (std::size_t t = 0; t < n; ++t) s[t] = reps[i][t] + reps[j][t];
            add_rep(std::move(s));
        }
    if (reps.size() != 4) throw std::logic_error("shadow: quotient is not of order 4");

    std::vector<std::vector<mpz_class>> shadows;
    for (const auto& r : reps) {
        bool zero = std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
        if (zero) continue;
        if (in_row_lattice(whole, r))
            sd.l2 = r;
        else
            shadows.push_back(r);
    }
    if (shadows.size() != 2 || sd.l2.empty())
        throw std::logic_error("shadow: unexpected coset structure");
    if (shadows[1] < shadows[0]) std::swap(shadows[0], shadows[1]);
    sd.l1 = shadows[0];
    sd.l3 = shadows[1];

    /* the minimum over both shadow cosets is at most n/4 */
    std::int64_t cap = to_i64(mpz_class(n * l.denom), "shadow bound");
    std::int64_t step = to_i64(2 * denom4, "shadow norm step");
    CosetData d1 = prepare_coset(sub, sd.l1);
    std::int64_t best = coset_min_prepared(d1, cap, step);
    if (n % 4 == 0) {
        /* the two shadow cosets are unrelated here; when n is not a multiple
           of 4 negation swaps them, so one minimum covers both */
        CosetData d3 = retarget(d1, sd.l3);
        std::int64_t mn = coset_min_prepared(d3, cap, step);
        if (mn >= 0 && (best < 0 || mn < best)) best = mn;
    }
    if (best < 0) throw std::logic_error("shadow: no shadow vector found");
    mpq_class m(best);
    m /= denom4;
    m.canonicalize();
    sd.shadow_min = m;
    return sd;
}

std::pair<IntegerLattice, IntegerLattice> neighbors(const IntegerLattice& l) {
    if (l.n % 4 != 0) throw std::invalid_argument("neighbors: dimension not divisible by 4");
    ShadowDecomposition sd = shadow(l);
    mpz_class denom4 = 4 * l.denom;
    auto glue = [&](const std::vector<mpz_class>& rep) {
        IntMat stack(l.n + 1, l.n);
        for (std::size_t i = 0; i < l.n; ++i)
            for (std::size_t j = 0; j < l.n; ++j) stack.at(i, j) = 2 * sd.even.basis.at(i, j);
        for (std::size_t j = 0; j < l.n; ++j) stack.at(l.n, j) = rep[j];
        IntegerLattice out{l.n, hnf(stack), denom4};
        if (out.basis.rows != l.n) throw std::logic_error("neighbors: rank drop");
        if (!is_unimodular(out)) throw std::logic_error("neighbors: glue is not unimodular");
        return out;
    };
    return {glue(sd.l1), glue(sd.l3)};
}

bool is_extremal(const IntegerLattice& l) {
    mpq_class mn = minimum_norm(l);
    if (l.n == 23) return mn == 3;
    return mn == mpq_class(2 * (l.n / 24) + 2);
}

bool is_s_extremal(const IntegerLattice& l) {
    mpq_class mn = minimum_norm(l);
    mpq_class sm = shadow(l).shadow_min;
    if (l.n == 23 && mn == 3) return 4 * sm == 15;
    return 8 * mn + 4 * sm == mpq_class(8 + l.n);
}

/* ---- text form ------------------------------------------------------------ */

std::string lattice_to_text(const IntegerLattice& l) {
    std::ostringstream os;
    os << "n " << l.n << "\ndenom " << l.denom << "\n";
    IntMat h = hnf(l.basis);
    for (std::size_t i = 0; i < h.rows; ++i) {
        for (std::size_t j = 0; j < h.cols; ++j) {
            if (j) os << ' ';
            os << h.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

IntegerLattice lattice_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string key;
    IntegerLattice l;
    if (!(is >> key) || key != "n" || !(is >> l.n))
        throw std::invalid_argument("lattice_from_text: expected 'n <dim>'");
    std::string d;
    if (!(is >> key) || key != "denom" || !(is >> d))
        throw std::invalid_argument("lattice_from_text: expected 'denom <value>'");
    l.denom = mpz_class(d);
    l.basis = IntMat(l.n, l.n);
    for (std::size_t i = 0; i < l.n; ++i)
        for (std::size_t j = 0; j < l.n; ++j) {
            std::string v;
            if (!(is >> v)) throw std::invalid_argument("lattice_from_text: short basis");
            l.basis.at(i, j) = mpz_class(v);
        }
    return l;
}

}  // namespace gf5lat
