#pragma once

#include <string>

#include "gf5lat/gf5.hpp"

namespace gf5lat {

/* first row of a negacirculant block, the whole input of the code builders */
struct FirstRowSpec {
    std::vector<F5> r;

    bool operator==(const FirstRowSpec&) const = default;

    /* "(10424)" */
    std::string compact() const;
    /* "(1,0,4,2,4)" */
    std::string commas() const;
};

/* accepts both text forms, with or without the outer parentheses;
   throws std::invalid_argument naming the offending position */
FirstRowSpec parse_first_row(const std::string& text);

/* n x n matrix whose rows are successive right rotations of r, the entry
   wrapped past the right edge coming back negated */
F5Matrix negacirculant(const FirstRowSpec& r);

/* [2n, n] code with generator (I | A) */
LinearCode quasi_twisted_code(const FirstRowSpec& a);

/* [4n, 2n] code with generator (I | R), R = ((A, B), (-B^T, A^T));
   throws std::invalid_argument if the two rows differ in length */
LinearCode four_negacirculant_code(const FirstRowSpec& a, const FirstRowSpec& b);

}  // namespace gf5lat
