#include "gf5lat/minweight.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace gf5lat {

namespace {

/* GF(5) vectors packed one entry per 4-bit lane; with both operands kept in
   0..4 a lane sum stays below 16, so addition never carries across lanes */
constexpr std::uint64_t kLaneLsb = 0x1111111111111111ULL;
constexpr std::uint64_t kLaneThree = 0x3333333333333333ULL;
constexpr std::uint64_t kLaneMsb = 0x8888888888888888ULL;

inline std::uint64_t lane_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t t = a + b;
    std::uint64_t over = ((t + kLaneThree) & kLaneMsb) >> 3; /* lanes now >= 5 */
    return t - ((over << 2) + over);
}

inline int lane_weight(std::uint64_t t) {
    return std::popcount((t | (t >> 1) | (t >> 2)) & kLaneLsb);
}

constexpr std::size_t kLanesPerWord = 16;

struct PackedRows {
    std::size_t words = 0;
    /* scaled[(i * 4 + (c - 1)) * words + w] = packed c * row_i */
    std::vector<std::uint64_t> scaled;

    void build(const F5Matrix& rows) {
        words = (rows.cols + kLanesPerWord - 1) / kLanesPerWord;
        if (words == 0) words = 1;
        scaled.assign(rows.rows * 4 * words, 0);
        for (std::size_t i = 0; i < rows.rows; ++i)
            for (F5 c = 1; c <= 4; ++c) {
                std::uint64_t* out = &scaled[(i * 4 + (c - 1)) * words];
                for (std::size_t j = 0; j < rows.cols; ++j) {
                    std::uint64_t v = f5_mul(c, rows.at(i, j));
                    out[j / kLanesPerWord] |= v << (4 * (j % kLanesPerWord));
                }
            }
    }
    const std::uint64_t* row(std::size_t i, F5 c) const {
        return &scaled[(i * 4 + (c - 1)) * words];
    }
};

/* one information set: a size-k column list holding rank_new fresh columns
   plus borrowed ones reused from earlier sets, and a generator row-reduced
   to the identity on those columns */
struct InfoSet {
    std::vector<std::size_t> cols;
    std::size_t borrowed = 0;
    F5Matrix gamma;                  /* k x n, identity on cols */
    std::vector<std::size_t> redundancy; /* the other n - k columns */
    PackedRows packed;               /* gamma restricted to redundancy */
};

F5Matrix restrict_cols(const F5Matrix& g, const std::vector<std::size_t>& cols) {
    F5Matrix m(g.rows, cols.size());
    for (std::size_t i = 0; i < g.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = g.at(i, cols[j]);
    return m;
}

std::vector<InfoSet> build_info_sets(const LinearCode& c) {
    std::vector<InfoSet> sets;
    std::vector<bool> used(c.n, false);
    for (;;) {
        std::vector<std::size_t> remaining, taken;
        for (std::size_t j = 0; j < c.n; ++j) (used[j] ? taken : remaining).push_back(j);
        if (remaining.empty()) break;
        RrefResult rr = rref(restrict_cols(c.gen, remaining));
        if (rr.rank == 0) break;
        InfoSet s;
        for (std::size_t p : rr.pivots) s.cols.push_back(remaining[p]);
        std::size_t fresh = s.cols.size();
        if (fresh < c.k) {
            /* complete to a full information set with previously used columns */
            std::vector<std::size_t> order = s.cols;
            order.insert(order.end(), taken.begin(), taken.end());
            RrefResult full = rref(restrict_cols(c.gen, order));
            if (full.rank != c.k) throw std::logic_error("info set completion failed");
            s.cols.clear();
            for (std::size_t p : full.pivots) s.cols.push_back(order[p]);
            s.borrowed = c.k - fresh;
        }
        for (std::size_t j = 0; j < fresh; ++j) used[s.cols[j]] = true;

        /* row-reduce to the identity on s.cols: rref with those columns first */
        std::vector<bool> in_set(c.n, false);
        for (std::size_t j : s.cols) in_set[j] = true;
        std::vector<std::size_t> order = s.cols;
        for (std::size_t j = 0; j < c.n; ++j)
            if (!in_set[j]) {
                order.push_back(j);
                s.redundancy.push_back(j);
            }
        RrefResult rs = rref(restrict_cols(c.gen, order));
        s.gamma = F5Matrix(c.k, c.n);
        for (std::size_t i = 0; i < c.k; ++i)
            for (std::size_t j = 0; j < c.n; ++j) s.gamma.at(i, order[j]) = rs.m.at(i, j);
        s.packed.build(restrict_cols(s.gamma, s.redundancy));
        sets.push_back(std::move(s));
    }
    if (sets.empty()) throw std::invalid_argument("brouwer_zimmermann: zero code");
    return sets;
}

Codeword canonical_multiple(const Codeword& w) {
    Codeword best = w;
    for (F5 c = 2; c <= 4; ++c) {
        Codeword m(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) m[j] = f5_mul(c, w[j]);
        if (m < best) best = m;
    }
    return best;
}

/* depth-first walk over normalized level-r messages of one information set;
   calls leaf(weight) with the codeword weight and rebuilds the word only
   when the caller asks for it via current_word() */
class LevelWalker {
  public:
    LevelWalker(const InfoSet& s, std::size_t k) : s_(s), k_(k), words_(s.packed.words) {}

    template <typename Leaf>
    void walk(std::size_t r, Leaf&& leaf) {
        r_ = r;
        supp_.assign(r, 0);
        coef_.assign(r, 1);
        acc_.assign((r + 1) * words_, 0);
        dfs(0, 0, leaf);
    }

    /* message of the leaf most recently passed to leaf() */
    Codeword current_word() const {
        Codeword w(s_.gamma.cols, 0);
        for (std::size_t t = 0; t < r_; ++t) {
            const F5* row = s_.gamma.row(supp_[t]);
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] = static_cast<F5>((w[j] + coef_[t] * row[j]) % 5);
        }
        return w;
    }

  private:
    template <typename Leaf>
    void dfs(std::size_t t, std::size_t start, Leaf&& leaf) {
        const std::uint64_t* acc = &acc_[t * words_];
        std::uint64_t* next = &acc_[(t + 1) * words_];
        F5 cmax = t == 0 ? 1 : 4;
        for (std::size_t i = start; i + (r_ - t) <= k_; ++i) {
            supp_[t] = i;
            for (F5 c = 1; c <= cmax; ++c) {
                coef_[t] = c;
                const std::uint64_t* row = s_.packed.row(i, c);
                if (t + 1 == r_) {
                    int wt = 0;
                    for (std::size_t w = 0; w < words_; ++w) wt += lane_weight(lane_add(acc[w], row[w]));
                    leaf(r_ + static_cast<std::size_t>(wt));
                } else {
                    for (std::size_t w = 0; w < words_; ++w) next[w] = lane_add(acc[w], row[w]);
                    dfs(t + 1, i + 1, leaf);
                }
            }
        }
    }

    const InfoSet& s_;
    std::size_t k_, words_, r_ = 0;
    std::vector<std::size_t> supp_;
    std::vector<F5> coef_;
    std::vector<std::uint64_t> acc_;
};

std::size_t lower_bound_after(const std::vector<InfoSet>& sets, std::size_t r) {
    std::size_t lb = 0;
    for (const InfoSet& s : sets) {
        std::size_t gain = r + 1;
        lb += gain > s.borrowed ? gain - s.borrowed : 0;
    }
    return lb;
}

}  // namespace

MinWeightResult brouwer_zimmermann(const LinearCode& c, std::size_t stop_at) {
    if (c.k == 0) throw std::invalid_argument("brouwer_zimmermann: zero code");
    std::vector<InfoSet> sets = build_info_sets(c);

    MinWeightResult res;
    for (const InfoSet& s : sets) res.info_sets.push_back(s.cols);

    std::size_t ub = c.n + 1;
    Codeword witness;
    std::vector<LevelWalker> walkers;
    walkers.reserve(sets.size());
    for (const InfoSet& s : sets) walkers.emplace_back(s, c.k);

    for (std::size_t r = 1; r <= c.k; ++r) {
        for (std::size_t si = 0; si < sets.size(); ++si) {
            LevelWalker& w = walkers[si];
            w.walk(r, [&](std::size_t wt) {
                if (wt > ub) return;
                Codeword cand = canonical_multiple(w.current_word());
                if (wt < ub || cand < witness) {
                    ub = wt;
                    witness = std::move(cand);
                }
            });
        }
        res.enumerated_levels = r;
        std::size_t lb = lower_bound_after(sets, r);
        if (lb >= ub) {
            res.d = ub;
            res.exact = true;
            res.best_found = ub;
            res.witness = witness;
            return res;
        }
        if (stop_at > 0 && lb >= stop_at) {
            res.d = stop_at;
            res.exact = false;
            res.best_found = ub;
            res.witness = witness;
            return res;
        }
    }
    /* every level walked: the best word seen is the minimum */
    res.d = ub;
    res.exact = true;
    res.best_found = ub;
    res.witness = witness;
    return res;
}

std::size_t brute_force_min_weight(const LinearCode& c) {
    if (c.k == 0) throw std::invalid_argument("brute_force_min_weight: zero code");
    double total = 1;
    for (std::size_t i = 0; i < c.k; ++i) total *= 5;
    if (total > 1e8) throw std::invalid_argument("brute_force_min_weight: 5^k > 10^8");

    PackedRows packed;
    packed.build(c.gen);
    std::size_t words = packed.words;
    std::size_t best = c.n + 1;
    /* normalized messages: skip leading zeros, first nonzero coefficient 1 */
    std::vector<std::uint64_t> acc(words * (c.k + 1), 0);
    auto dfs = [&](auto&& self, std::size_t i, bool started, const std::uint64_t* a) -> void {
        if (i == c.k) {
            if (!started) return;
            int wt = 0;
            for (std::size_t w = 0; w < words; ++w) wt += lane_weight(a[w]);
            best = std::min(best, static_cast<std::size_t>(wt));
            return;
        }
        self(self, i + 1, started, a);
        std::uint64_t* next = &acc[(i + 1) * words];
        for (F5 cf = 1; cf <= (started ? F5{4} : F5{1}); ++cf) {
            const std::uint64_t* row = packed.row(i, cf);
            for (std::size_t w = 0; w < words; ++w) next[w] = lane_add(a[w], row[w]);
            self(self, i + 1, true, next);
        }
    };
    dfs(dfs, 0, false, acc.data());
    return best;
}

std::vector<Codeword> find_words_of_weight(const LinearCode& c, std::size_t w, std::size_t limit) {
    if (w == 0) throw std::invalid_argument("find_words_of_weight: weight must be positive");
    if (c.k == 0) return {};
    std::vector<InfoSet> sets = build_info_sets(c);
    std::vector<LevelWalker> walkers;
    walkers.reserve(sets.size());
    for (const InfoSet& s : sets) walkers.emplace_back(s, c.k);

    std::set<Codeword> found;
    for (std::size_t r = 1; r <= c.k && found.size() < limit; ++r) {
        for (std::size_t si = 0; si < sets.size() && found.size() < limit; ++si) {
            LevelWalker& lw = walkers[si];
            lw.walk(r, [&](std::size_t wt) {
                if (wt != w || found.size() >= limit) return;
                Codeword word = lw.current_word();
                for (F5 cf = 1; cf <= 4; ++cf) {
                    Codeword m(word.size());
                    for (std::size_t j = 0; j < word.size(); ++j) m[j] = f5_mul(cf, word[j]);
                    found.insert(std::move(m));
                }
            });
        }
        if (lower_bound_after(sets, r) > w) break;
    }
    std::vector<Codeword> out(found.begin(), found.end());
    if (out.size() > limit) out.resize(limit);
    return out;
}

}  // namespace gf5lat
