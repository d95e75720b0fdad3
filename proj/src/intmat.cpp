#include "gf5lat/intmat.hpp"

#include <stdexcept>

namespace gf5lat {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t l = 0; l < x.cols; ++l) {
            const mpz_class& v = x.at(i, l);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(l, j);
        }
    return z;
}

IntMat transpose(const IntMat& x) {
    IntMat z(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

IntMat vstack(const IntMat& x, const IntMat& y) {
    if (x.cols != y.cols) throw std::invalid_argument("vstack: column mismatch");
    IntMat z(x.rows + y.rows, x.cols);
    for (std::size_t i = 0; i < x.rows * x.cols; ++i) z.a[i] = x.a[i];
    for (std::size_t i = 0; i < y.rows * y.cols; ++i) z.a[x.rows * x.cols + i] = y.a[i];
    return z;
}

IntMat scale(const IntMat& x, const mpz_class& c) {
    IntMat z = x;
    for (auto& v : z.a) v *= c;
    return z;
}

IntMat gram(const IntMat& b) {
    IntMat g(b.rows, b.rows);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = i; j < b.rows; ++j) {
            mpz_class s = 0;
            for (std::size_t l = 0; l < b.cols; ++l) s += b.at(i, l) * b.at(j, l);
            g.at(i, j) = s;
            g.at(j, i) = s;
        }
    return g;
}

IntMat hnf(const IntMat& m) {
    IntMat h = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < h.cols && r < h.rows; ++col) {
        /* kill all but one entry in this column below r by repeated
           smallest-pivot reduction */
        for (;;) {
            std::size_t best = h.rows;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == h.rows ||
                    mpz_cmpabs(h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == h.rows) break; /* column already clear */
            bool others = false;
            for (std::size_t i = r; i < h.rows; ++i) {
                if (i == best || h.at(i, col) == 0) continue;
                others = true;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(best, col).get_mpz_t());
                for (std::size_t j = col; j < h.cols; ++j) h.at(i, j) -= q * h.at(best, j);
            }
            if (!others) {
                if (best != r)
                    for (std::size_t j = 0; j < h.cols; ++j) std::swap(h.at(best, j), h.at(r, j));
                break;
            }
        }
        if (h.at(r, col) == 0) continue;
        if (h.at(r, col) < 0)
            for (std::size_t j = col; j < h.cols; ++j) h.at(r, j) = -h.at(r, j);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = col; j < h.cols; ++j) h.at(i, j) -= q * h.at(r, j);
        }
        ++r;
    }
    IntMat out(r, h.cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < h.cols; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

mpz_class det(const IntMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det: not square");
    std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

bool in_row_lattice(const IntMat& h, const std::vector<mpz_class>& x) {
    if (x.size() != h.cols) return false;
    std::vector<mpz_class> r = x;
    std::size_t row = 0;
    for (std::size_t col = 0; col < h.cols; ++col) {
        /* pivot of this row, if any */
        if (row < h.rows && h.at(row, col) != 0) {
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[col].get_mpz_t(),
                        h.at(row, col).get_mpz_t());
            if (rem != 0) return false;
            if (q != 0)
                for (std::size_t j = col; j < h.cols; ++j) r[j] -= q * h.at(row, j);
            ++row;
        } else if (r[col] != 0) {
            return false;
        }
    }
    return true;
}

RatMat::RatMat(const IntMat& m) : rows(m.rows), cols(m.cols), a(m.rows * m.cols) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.a[i];
}

RatMat solve(const IntMat& a, const RatMat& b) {
    if (a.rows != a.cols || a.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
    std::size_t n = a.rows;
    RatMat w(n, n + b.cols);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) w.at(i, n + j) = b.at(i, j);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w.at(p, col) == 0) ++p;
        if (p == n) throw std::invalid_argument("solve: singular matrix");
        if (p != col)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(p, j), w.at(col, j));
        mpq_class inv = 1 / w.at(col, col);
        for (std::size_t j = col; j < w.cols; ++j) w.at(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col) == 0) continue;
            mpq_class f = w.at(i, col);
            for (std::size_t j = col; j < w.cols; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    RatMat x(n, b.cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) x.at(i, j) = w.at(i, n + j);
    return x;
}

IntMat to_int(const RatMat& m) {
    IntMat z(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) {
        if (m.a[i].get_den() != 1) throw std::invalid_argument("to_int: non-integer entry");
        z.a[i] = m.a[i].get_num();
    }
    return z;
}

}  // namespace gf5lat
