#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace gf5lat {

struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    mpz_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n);
    bool operator==(const IntMat&) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& x);
IntMat vstack(const IntMat& x, const IntMat& y);
IntMat scale(const IntMat& x, const mpz_class& c);

/* gram matrix B B^T of the rows */
IntMat gram(const IntMat& b);

/* row-style Hermite normal form: pivots positive and strictly right of the
   pivots above, entries above a pivot reduced into [0, pivot); zero rows
   dropped */
IntMat hnf(const IntMat& m);

/* exact determinant by fraction-free elimination */
mpz_class det(const IntMat& m);

/* true iff x is an integer combination of the rows of h, h in HNF */
bool in_row_lattice(const IntMat& h, const std::vector<mpz_class>& x);

struct RatMat {
    std::size_t rows = 0, cols = 0;
    std::vector<mpq_class> a;

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    explicit RatMat(const IntMat& m);

    mpq_class& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/* solves A X = B for square invertible A; throws if A is singular */
RatMat solve(const IntMat& a, const RatMat& b);

/* throws std::invalid_argument unless every entry is an integer */
IntMat to_int(const RatMat& m);

}  // namespace gf5lat
