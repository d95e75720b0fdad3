#include "gf5lat/qseries.hpp"

#include <stdexcept>

namespace gf5lat {

namespace {

QSeries one(std::size_t prec) {
    QSeries r(prec);
    r.coeffs[0] = 1;
    return r;
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.precision, b.precision));
    for (std::size_t e = 0; e <= r.precision; ++e) r.coeffs[e] = a.coeffs[e] + b.coeffs[e];
    return r;
}

QSeries sub(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.precision, b.precision));
    for (std::size_t e = 0; e <= r.precision; ++e) r.coeffs[e] = a.coeffs[e] - b.coeffs[e];
    return r;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.precision, b.precision));
    for (std::size_t i = 0; i <= r.precision; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; i + j <= r.precision; ++j) {
            if (b.coeffs[j] == 0) continue;
            mpz_addmul(r.coeffs[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(),
                       b.coeffs[j].get_mpz_t());
        }
    }
    return r;
}

QSeries pow(const QSeries& a, std::size_t k) {
    QSeries r = one(a.precision);
    QSeries sq = a;
    while (k > 0) {
        if (k & 1) r = mul(r, sq);
        k >>= 1;
        if (k > 0) sq = mul(sq, sq);
    }
    return r;
}

QSeries scale(const QSeries& a, const mpz_class& c) {
    QSeries r(a.precision);
    for (std::size_t e = 0; e <= r.precision; ++e) r.coeffs[e] = c * a.coeffs[e];
    return r;
}

QSeries jacobi_theta(int kind, ThetaArgument arg, std::size_t precision) {
    QSeries r(precision);
    std::size_t stretch = arg == ThetaArgument::q_squared ? 2 : 1;
    if (kind == 2) {
        for (std::size_t m = 0;; ++m) {
            std::size_t e = (2 * m + 1) * (2 * m + 1) * stretch;
            if (e > precision) break;
            r.coeffs[e] = 2;
        }
    } else if (kind == 3 || kind == 4) {
        r.coeffs[0] = 1;
        for (std::size_t m = 1;; ++m) {
            std::size_t e = 4 * m * m * stretch;
            if (e > precision) break;
            r.coeffs[e] = kind == 4 && m % 2 == 1 ? -2 : 2;
        }
    } else {
        throw std::invalid_argument("jacobi_theta: kind must be 2, 3 or 4");
    }
    return r;
}

QSeries delta8(std::size_t precision) {
    /* factors whose lowest exponent exceeds the truncation point are
       identically 1 there, so the product stops early */
    QSeries prod = one(precision);
    for (std::size_t m = 1; 4 * (2 * m - 1) <= precision || 16 * m <= precision; ++m) {
        for (std::size_t e : {4 * (2 * m - 1), 16 * m}) {
            if (e > precision) continue;
            QSeries f = one(precision);
            f.coeffs[e] = -1;
            prod = mul(prod, pow(f, 8));
        }
    }
    QSeries r(precision);
    for (std::size_t e = 0; e + 4 <= precision; ++e) r.coeffs[e + 4] = prod.coeffs[e];
    return r;
}

QSeries theta_from_lattice(const IntegerLattice& l, const mpq_class& max_norm) {
    mpq_class p4 = 4 * max_norm;
    mpz_class pz;
    mpz_fdiv_q(pz.get_mpz_t(), p4.get_num().get_mpz_t(), p4.get_den().get_mpz_t());
    if (pz < 0) throw std::invalid_argument("theta_from_lattice: negative bound");
    std::size_t precision = static_cast<std::size_t>(pz.get_ui());

    ShortVectorSet sv = short_vectors(l, max_norm);
    QSeries r(precision);
    r.coeffs[0] = 1;
    for (std::size_t i = 0; i < sv.count; ++i) {
        mpz_class num = 4 * mpz_class(sv.norms_num[i]);
        if (!mpz_divisible_p(num.get_mpz_t(), sv.denom.get_mpz_t()))
            throw std::invalid_argument("theta_from_lattice: norm off the quarter grid");
        mpz_class e = num / sv.denom;
        if (e <= precision) r.coeffs[e.get_ui()] += 2;
    }
    return r;
}

ThetaDecomposition decompose_theta(std::size_t n, const QSeries& theta_l) {
    std::size_t jmax = n / 8;
    if (theta_l.precision < 4 * jmax)
        throw std::invalid_argument("decompose_theta: series too short for the dimension");
    if (theta_l.coeffs[0] != 1)
        throw std::invalid_argument("decompose_theta: constant term must be 1");
    for (std::size_t e = 1; e <= 4 * jmax; ++e)
        if (e % 4 != 0 && theta_l.coeffs[e] != 0)
            throw std::invalid_argument("decompose_theta: fractional exponents in the input");

    QSeries th3 = jacobi_theta(3, ThetaArgument::q, 4 * jmax);
    QSeries d8 = delta8(4 * jmax);
    QSeries residual(4 * jmax);
    for (std::size_t e = 0; e <= 4 * jmax; ++e) residual.coeffs[e] = theta_l.coeffs[e];

    ThetaDecomposition dec{n, {}};
    for (std::size_t j = 0; j <= jmax; ++j) {
        QSeries term = mul(pow(th3, n - 8 * j), pow(d8, j));
        const mpz_class& lead = term.coeffs[4 * j];
        const mpz_class& want = residual.coeffs[4 * j];
        if (lead == 0 || !mpz_divisible_p(want.get_mpz_t(), lead.get_mpz_t()))
            throw std::invalid_argument("decompose_theta: no integer solution");
        mpz_class aj = want / lead;
        residual = sub(residual, scale(term, aj));
        dec.a.push_back(aj);
    }
    return dec;
}

QSeries shadow_theta(const ThetaDecomposition& dec, std::size_t precision) {
    if (dec.a.size() > dec.n / 8 + 1)
        throw std::invalid_argument("shadow_theta: more coefficients than the dimension allows");
    QSeries th2 = jacobi_theta(2, ThetaArgument::q, precision);
    QSeries th4 = jacobi_theta(4, ThetaArgument::q_squared, precision);
    QSeries r(precision);
    mpz_class div16 = 1;
    for (std::size_t j = 0; j < dec.a.size(); ++j, div16 *= 16) {
        if (dec.a[j] == 0) continue;
        QSeries term = scale(mul(pow(th2, dec.n - 8 * j), pow(th4, 8 * j)), dec.a[j]);
        for (std::size_t e = 0; e <= precision; ++e) {
            if (!mpz_divisible_p(term.coeffs[e].get_mpz_t(), div16.get_mpz_t()))
                throw std::invalid_argument("shadow_theta: inexact division by 16^j");
            term.coeffs[e] /= div16;
        }
        r = j % 2 == 0 ? add(r, term) : sub(r, term);
    }
    return r;
}

std::uint64_t s_extremal_kissing_target(std::size_t n) {
    if (n < 32 || n >= 48)
        throw std::invalid_argument("s_extremal_kissing_target: dimension out of range");
    QSeries th3 = jacobi_theta(3, ThetaArgument::q, 16);
    QSeries d8 = delta8(16);
    QSeries acc(16);
    QSeries residual(16);
    residual.coeffs[0] = 1;
    for (std::size_t j = 0; j <= 3; ++j) {
        QSeries term = mul(pow(th3, n - 8 * j), pow(d8, j));
        mpz_class aj = residual.coeffs[4 * j];
        residual = sub(residual, scale(term, aj));
        acc = add(acc, scale(term, aj));
    }
    return acc.coeffs[16].get_ui();
}

}  // namespace gf5lat
