#include "gf5lat/negacirculant.hpp"

#include <stdexcept>

namespace gf5lat {

std::string FirstRowSpec::compact() const {
    std::string s = "(";
    for (F5 v : r) s += static_cast<char>('0' + v);
    return s + ")";
}

std::string FirstRowSpec::commas() const {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + r[i]);
    }
    return s + ")";
}

FirstRowSpec parse_first_row(const std::string& text) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    if (lo < hi && text[lo] == '(' && text[hi - 1] == ')') {
        ++lo;
        --hi;
    }
    bool commas = text.find(',', lo) != std::string::npos && text.find(',', lo) < hi;
    FirstRowSpec out;
    bool want_digit = true;
    for (std::size_t i = lo; i < hi; ++i) {
        char c = text[i];
        if (c == ' ') continue;
        if (commas && c == ',') {
            if (want_digit)
                throw std::invalid_argument("parse_first_row: expected digit at position " +
                                            std::to_string(i));
            want_digit = true;
            continue;
        }
        if (c < '0' || c > '4')
            throw std::invalid_argument(std::string("parse_first_row: invalid character '") + c +
                                        "' at position " + std::to_string(i));
        if (commas && !want_digit)
            throw std::invalid_argument("parse_first_row: expected ',' at position " +
                                        std::to_string(i));
        out.r.push_back(static_cast<F5>(c - '0'));
        want_digit = false;
    }
    if (out.r.empty()) throw std::invalid_argument("parse_first_row: empty row");
    if (commas && want_digit) throw std::invalid_argument("parse_first_row: trailing ','");
    return out;
}

F5Matrix negacirculant(const FirstRowSpec& r) {
    std::size_t n = r.r.size();
    F5Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.at(0, j) = r.r[j];
    /* each row is the previous one rotated right, the wrapped entry negated */
    for (std::size_t i = 1; i < n; ++i) {
        m.at(i, 0) = f5_neg(m.at(i - 1, n - 1));
        for (std::size_t j = 1; j < n; ++j) m.at(i, j) = m.at(i - 1, j - 1);
    }
    return m;
}

LinearCode quasi_twisted_code(const FirstRowSpec& a) {
    std::size_t n = a.r.size();
    return LinearCode(hstack(F5Matrix::identity(n), negacirculant(a)));
}

LinearCode four_negacirculant_code(const FirstRowSpec& a, const FirstRowSpec& b) {
    if (a.r.size() != b.r.size())
        throw std::invalid_argument("four_negacirculant_code: block length mismatch");
    std::size_t n = a.r.size();
    F5Matrix ma = negacirculant(a), mb = negacirculant(b);
    F5Matrix right(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            right.at(i, j) = ma.at(i, j);
            right.at(i, n + j) = mb.at(i, j);
            right.at(n + i, j) = f5_neg(mb.at(j, i));
            right.at(n + i, n + j) = ma.at(j, i);
        }
    return LinearCode(hstack(F5Matrix::identity(2 * n), right));
}

}  // namespace gf5lat
