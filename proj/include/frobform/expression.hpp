#pragma once

#include <string_view>

#include "frobform/algebra.hpp"

namespace frobform {

/// Evaluates an element expression such as "1 + x - 1/2*x*y^2" in `a`.
/// Precedence is ^ over * over unary minus over binary + and -; products
/// keep their order. Throws SyntaxError (message carries the position) and
/// UnknownBasisName.
Element parse_element(std::string_view text, const Algebra &a);

} // namespace frobform
