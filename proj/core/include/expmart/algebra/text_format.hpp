#pragma once

#include <string>
#include <string_view>

#include "expmart/algebra/element.hpp"

namespace expmart::algebra {

// Plain-text element format, one term per line:
//
//     <exponent re> <exponent im> <a0 re> <a0 im> <a1 re> <a1 im> ...
//
// where a_k multiplies x^k. Terms appear in canonical order. The zero
// element is the empty string. ';' is accepted as a line separator when
// parsing so that an element fits on one config line.

std::string to_text(const Element& f);

/// Throws InvalidInput on malformed text.
Element parse_element(std::string_view text, Variance q);

/// Parses the monomial terms without fixing q (used for time-dependent
/// templates).
std::vector<Element::MonomialTerm> parse_monomial_terms(std::string_view text);

std::string format_double(double v);

}  // namespace expmart::algebra
