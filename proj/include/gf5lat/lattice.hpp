#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "gf5lat/gf5.hpp"
#include "gf5lat/intmat.hpp"

namespace gf5lat {

/* a full-rank lattice given by integer basis rows; the inner product is the
   standard one divided by denom, so norms are (x . x) / denom */
struct IntegerLattice {
    std::size_t n = 0;
    IntMat basis;
    mpz_class denom = 1;
};

/* {x in Z^n : x mod 5 in C} rescaled by 1/sqrt(5); throws unless C is
   self-dual */
IntegerLattice construction_a(const LinearCode& c);

/* dual basis denom * (B B^T)^-1 B */
RatMat dual_basis(const IntegerLattice& l);

/* every pairwise product is divisible by denom */
bool is_integral(const IntegerLattice& l);

/* self-dual as a lattice: dual basis spans the same thing */
bool is_unimodular(const IntegerLattice& l);

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);

/* exact-arithmetic reduction with delta = 99/100 */
IntegerLattice lll_reduce(const IntegerLattice& l);

/* one vector per antipodal pair {x, -x}, normalized so the first nonzero
   coordinate is positive, sorted by (norm, lexicographic order) */
struct ShortVectorSet {
    std::size_t n = 0;
    mpz_class denom = 1;
    std::size_t count = 0;
    std::vector<std::int32_t> flat;      /* count rows of n coordinates */
    std::vector<std::int64_t> norms_num; /* x . x, integer scale, per row */

    const std::int32_t* vec(std::size_t i) const { return flat.data() + i * n; }
    std::size_t count_at(const mpq_class& norm) const;
};

/* all pairs {x, -x} with norm(x) <= max_norm, x != 0 */
ShortVectorSet short_vectors(const IntegerLattice& l, const mpq_class& max_norm);

mpq_class minimum_norm(const IntegerLattice& l);
std::size_t kissing_number(const IntegerLattice& l);

/* number of vectors of a coset t/2 + L(basis/2) per norm, where t and the
   basis rows live at 4*denom scale; counts whole vectors, not pairs */
std::map<std::int64_t, std::uint64_t> coset_norm_counts(const IntMat& basis,
                                                        const mpz_class& denom4,
                                                        const std::vector<mpz_class>& t,
                                                        const mpq_class& max_norm);

/* ordered pairs of norm-4 representatives with product +-i, diagonal
   included in inv4 only; requires minimum norm 4 */
struct InvariantPair {
    std::uint64_t inv0 = 0, inv1 = 0;
    bool operator==(const InvariantPair&) const = default;
};
InvariantPair inv_pair(const IntegerLattice& l);
/* same computation over an already enumerated set, which must hold every
   vector of norm at most 4; throws unless the smallest norm is exactly 4 */
InvariantPair inv_pair(const ShortVectorSet& sv);
bool invariant_distinct(const IntegerLattice& a, const IntegerLattice& b);

/* index-2 kernel of x -> norm(x) mod 2; throws if the lattice is already
   even or not integral */
IntegerLattice even_sublattice(const IntegerLattice& l);

/* odd unimodular l decomposes 2 L0^* (held at 4*denom scale) into four
   cosets of 2 L0: zero, the rest of l, and the two shadow cosets */
struct ShadowDecomposition {
    IntegerLattice even;                /* L0 at the original denom */
    IntegerLattice dual2;               /* 2 L0^* at 4 * denom */
    std::vector<mpz_class> l1, l2, l3;  /* coset reps at 4 * denom scale */
    mpq_class shadow_min;               /* min norm over the l1 and l3 cosets */
};
ShadowDecomposition shadow(const IntegerLattice& l);

/* the two unimodular neighbors glued from the shadow cosets; requires
   n divisible by 4 */
std::pair<IntegerLattice, IntegerLattice> neighbors(const IntegerLattice& l);

bool is_extremal(const IntegerLattice& l);
bool is_s_extremal(const IntegerLattice& l);

std::string lattice_to_text(const IntegerLattice& l);
IntegerLattice lattice_from_text(const std::string& text);

}  // namespace gf5lat
