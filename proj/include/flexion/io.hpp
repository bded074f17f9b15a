#pragma once

#include <string>

#include "flexion/ratfun.hpp"

namespace flexion {

class Mould;

// Canonical text form, terms in descending graded-lex order, e.g.
// "(u1+2*u2)/(12*u1*u2*(u1+u2))".
std::string to_text(const Polynomial& p);
std::string to_text(const LinearForm& lf);
std::string to_text(const RationalFunction& f);

std::string to_latex(const Polynomial& p);
std::string to_latex(const RationalFunction& f);

// Parser for the text form: + - * / ^ ( ), integer and p/q literals,
// variables u<i>, v<i>, z<i>, eps.  Throws std::invalid_argument with a
// position on bad input.
RationalFunction ratfun_from_text(const std::string& text);
Polynomial polynomial_from_text(const std::string& text);

std::string to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const std::string& json);

std::string to_json(const Mould& m);
Mould mould_from_json(const std::string& json);

}  // namespace flexion
