#pragma once

#include <string>

#include "wsuper/algebra.hpp"

namespace wsuper {

// Text grammar (parse and render round-trip exactly):
//   element := term (('+'|'-') term)* | '0'
//   term    := [coeff '*'] gen '[' halfint ']'
//   gen     := 'L' | 'I' | 'G' | 'H'
//   halfint := int | int '/' '2'
//   coeff   := rational | '(' poly ')' ['/' '(' poly ')']
// with the deformation parameter spelled `l`, e.g. "3/2*L[-1] + (l+1)*H[1/2]".

std::string render_poly(const Poly& p);
std::string render_scalar(const Scalar& s);
std::string render_element(const Element& e);

HalfInt parse_halfint(const std::string& text);
Scalar parse_scalar(const std::string& text, const ScalarMode& mode);
Element parse_element(const std::string& text, const AlgebraConfig& cfg);

} // namespace wsuper
