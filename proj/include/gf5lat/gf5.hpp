#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gf5lat {

/* field elements are residues 0..4 stored in a byte */
using F5 = std::uint8_t;

inline constexpr F5 f5_add(F5 a, F5 b) { return static_cast<F5>((a + b) % 5); }
inline constexpr F5 f5_sub(F5 a, F5 b) { return static_cast<F5>((a + 5 - b) % 5); }
inline constexpr F5 f5_neg(F5 a) { return static_cast<F5>((5 - a) % 5); }
inline constexpr F5 f5_mul(F5 a, F5 b) { return static_cast<F5>((a * b) % 5); }

/* inverses of 1..4; index 0 unused */
inline constexpr F5 f5_inv_table[5] = {0, 1, 3, 2, 4};

F5 f5_inv(F5 a);
inline F5 f5_div(F5 a, F5 b) { return f5_mul(a, f5_inv(b)); }

struct F5Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<F5> a;

    F5Matrix() = default;
    F5Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    F5& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    F5 at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    const F5* row(std::size_t i) const { return a.data() + i * cols; }
    F5* row(std::size_t i) { return a.data() + i * cols; }

    static F5Matrix identity(std::size_t n);
    bool operator==(const F5Matrix&) const = default;
};

F5Matrix mul(const F5Matrix& x, const F5Matrix& y);
F5Matrix transpose(const F5Matrix& x);
F5Matrix hstack(const F5Matrix& x, const F5Matrix& y);
F5Matrix vstack(const F5Matrix& x, const F5Matrix& y);

struct RrefResult {
    F5Matrix m;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/* reduced row echelon form by gaussian elimination */
RrefResult rref(const F5Matrix& x);

using Codeword = std::vector<F5>;

std::size_t weight(const Codeword& w);

/* a linear [n,k] code, held as a full-rank rref generator matrix so that
   two codes are equal iff their generator matrices are equal */
struct LinearCode {
    std::size_t n = 0, k = 0;
    F5Matrix gen;

    LinearCode() = default;
    /* throws std::invalid_argument if the rows are dependent */
    explicit LinearCode(const F5Matrix& g);

    bool operator==(const LinearCode&) const = default;
};

/* builds the code spanned by the rows, dropping dependent ones */
LinearCode code_from_span(const F5Matrix& g);

LinearCode dual_code(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

/* deletes one coordinate; the dimension may drop */
LinearCode puncture(const LinearCode& c, std::size_t coord);

Codeword encode(const LinearCode& c, const std::vector<F5>& msg);
bool contains(const LinearCode& c, const Codeword& w);

}  // namespace gf5lat
