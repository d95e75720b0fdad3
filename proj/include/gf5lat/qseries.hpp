#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "gf5lat/lattice.hpp"

namespace gf5lat {

/* truncated integer power series in u = q^(1/4); coeffs[e] multiplies
   q^(e/4) and precision is the largest stored exponent of u, so every
   precision argument in this header counts quarter powers of q */
struct QSeries {
    std::size_t precision = 0;
    std::vector<mpz_class> coeffs; /* precision + 1 entries */

    QSeries() : coeffs(1) {}
    explicit QSeries(std::size_t prec) : precision(prec), coeffs(prec + 1) {}

    /* coefficient of u^e, zero past the truncation point */
    mpz_class coeff(std::size_t e) const {
        return e < coeffs.size() ? coeffs[e] : mpz_class(0);
    }
    bool operator==(const QSeries&) const = default;
};

/* binary operations truncate to the shorter operand, so results agree
   with any higher-precision run on every exponent they keep */
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries pow(const QSeries& a, std::size_t k);
QSeries scale(const QSeries& a, const mpz_class& c);

enum class ThetaArgument { q, q_squared };

/* theta_2 = 2 sum q^((m+1/2)^2), theta_3 = 1 + 2 sum q^(m^2),
   theta_4 = 1 + 2 sum (-1)^m q^(m^2); the q_squared argument doubles
   every exponent */
QSeries jacobi_theta(int kind, ThetaArgument arg, std::size_t precision);

/* q prod (1 - q^(2m-1))^8 (1 - q^(4m))^8 over m >= 1 */
QSeries delta8(std::size_t precision);

/* vector counts by norm, including the zero vector; throws if some norm
   is not a multiple of a quarter */
QSeries theta_from_lattice(const IntegerLattice& l, const mpq_class& max_norm);

/* coefficients of theta_l against the basis theta_3^(n-8j) delta8^j */
struct ThetaDecomposition {
    std::size_t n = 0;
    std::vector<mpz_class> a; /* floor(n/8) + 1 entries */
};

/* solves the triangular system for a_0 .. a_floor(n/8); the input must
   carry integer exponents with constant term 1 through q^floor(n/8),
   and each solved coefficient must come out an exact integer */
ThetaDecomposition decompose_theta(std::size_t n, const QSeries& theta_l);

/* sum over j of (-1)^j / 16^j a_j theta_2(q)^(n-8j) theta_4(q^2)^(8j);
   every division by 16^j must be exact */
QSeries shadow_theta(const ThetaDecomposition& dec, std::size_t precision);

/* kissing number forced on an s-extremal unimodular lattice of minimum
   norm 4: the q^4 coefficient of the theta series once the trailing
   decomposition coefficients vanish; defined for 32 <= n < 48 */
std::uint64_t s_extremal_kissing_target(std::size_t n);

}  // namespace gf5lat
