#pragma once

#include <string>
#include <string_view>

#include "coxa/affine.hpp"

namespace coxa {

/// `h(j,i) a h(j,i) a | [lo,hi] [lo,hi]`; the identity prints as `1`.
std::string format_element(const Element& e);
std::string format_block(const AffineBlock& b);
std::string format_finite(const FiniteElement& x);

/// Inverse of format_element. Also accepts `|` alone or an empty string for
/// the identity. Throws DomainError on malformed text or invalid data.
Element parse_element(std::string_view text, Rank rank);

/// Dispatches on syntax: canonical form (contains `h(`, `|` or `[`, or is
/// exactly `1`) or a word.
Element parse_element_or_word(std::string_view text, Rank rank);

}  // namespace coxa
