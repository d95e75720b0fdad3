#include "gf5lat/gf5.hpp"

#include <stdexcept>

namespace gf5lat {

F5 f5_inv(F5 a) {
    if (a == 0 || a > 4) throw std::invalid_argument("f5_inv: not a unit");
    return f5_inv_table[a];
}

F5Matrix F5Matrix::identity(std::size_t n) {
    F5Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

F5Matrix mul(const F5Matrix& x, const F5Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
    F5Matrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            F5 v = x.at(i, l);
            if (!v) continue;
            const F5* yr = y.row(l);
            F5* zr = z.row(i);
            for (std::size_t j = 0; j < y.cols; ++j) zr[j] = static_cast<F5>((zr[j] + v * yr[j]) % 5);
        }
    return z;
}

F5Matrix transpose(const F5Matrix& x) {
    F5Matrix z(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

F5Matrix hstack(const F5Matrix& x, const F5Matrix& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hstack: row mismatch");
    F5Matrix z(x.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        for (std::size_t j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (std::size_t j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

F5Matrix vstack(const F5Matrix& x, const F5Matrix& y) {
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column mismatch");
    F5Matrix z(x.rows + y.rows, x.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
    return z;
}

RrefResult rref(const F5Matrix& x) {
    RrefResult r{x, 0, {}};
    F5Matrix& m = r.m;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t piv = lead;
        while (piv < m.rows && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        F5 inv = f5_inv(m.at(lead, col));
        if (inv != 1)
            for (std::size_t j = 0; j < m.cols; ++j) m.at(lead, j) = f5_mul(m.at(lead, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == lead) continue;
            F5 f = m.at(i, col);
            if (!f) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = f5_sub(m.at(i, j), f5_mul(f, m.at(lead, j)));
        }
        r.pivots.push_back(col);
        ++lead;
    }
    r.rank = r.pivots.size();
    return r;
}

std::size_t weight(const Codeword& w) {
    std::size_t c = 0;
    for (F5 v : w) c += (v != 0);
    return c;
}

LinearCode::LinearCode(const F5Matrix& g) {
    RrefResult r = rref(g);
    if (r.rank != g.rows) throw std::invalid_argument("LinearCode: rank-deficient generator");
    n = g.cols;
    k = r.rank;
    gen = std::move(r.m);
}

LinearCode code_from_span(const F5Matrix& g) {
    RrefResult r = rref(g);
    F5Matrix top(r.rank, g.cols);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < g.cols; ++j) top.at(i, j) = r.m.at(i, j);
    LinearCode c;
    c.n = g.cols;
    c.k = r.rank;
    c.gen = std::move(top);
    return c;
}

LinearCode dual_code(const LinearCode& c) {
    /* null space basis read off the rref: one row per free column */
    RrefResult r = rref(c.gen);
    if (r.rank != c.k) throw std::invalid_argument("dual_code: rank-deficient generator");
    std::vector<bool> is_pivot(c.n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    F5Matrix h(c.n - c.k, c.n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < c.n; ++f) {
        if (is_pivot[f]) continue;
        h.at(row, f) = 1;
        for (std::size_t i = 0; i < c.k; ++i) h.at(row, r.pivots[i]) = f5_neg(r.m.at(i, f));
        ++row;
    }
    return LinearCode(h);
}

bool is_self_dual(const LinearCode& c) {
    if (c.n != 2 * c.k) return false;
    F5Matrix p = mul(c.gen, transpose(c.gen));
    for (F5 v : p.a)
        if (v) return false;
    return true;
}

LinearCode puncture(const LinearCode& c, std::size_t coord) {
    if (coord >= c.n) throw std::invalid_argument("puncture: coordinate out of range");
    F5Matrix g(c.k, c.n - 1);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.n; ++j) {
            if (j == coord) continue;
            g.at(i, j < coord ? j : j - 1) = c.gen.at(i, j);
        }
    return code_from_span(g);
}

Codeword encode(const LinearCode& c, const std::vector<F5>& msg) {
    if (msg.size() != c.k) throw std::invalid_argument("encode: message length");
    Codeword w(c.n, 0);
    for (std::size_t i = 0; i < c.k; ++i) {
        F5 v = msg[i];
        if (!v) continue;
        const F5* g = c.gen.row(i);
        for (std::size_t j = 0; j < c.n; ++j) w[j] = static_cast<F5>((w[j] + v * g[j]) % 5);
    }
    return w;
}

bool contains(const LinearCode& c, const Codeword& w) {
    if (w.size() != c.n) return false;
    /* the generator is in rref, so reduce w row by row at the leading ones */
    Codeword r = w;
    for (std::size_t i = 0; i < c.k; ++i) {
        const F5* g = c.gen.row(i);
        std::size_t piv = 0;
        while (piv < c.n && g[piv] == 0) ++piv;
        F5 f = r[piv];
        if (!f) continue;
        for (std::size_t j = piv; j < c.n; ++j) r[j] = f5_sub(r[j], f5_mul(f, g[j]));
    }
    for (F5 v : r)
        if (v) return false;
    return true;
}

}  // namespace gf5lat
