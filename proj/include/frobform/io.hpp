#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "frobform/frobenius.hpp"

namespace frobform {

using NamedFunctional = std::pair<std::string, Vector>;

/// Contents of an algebra definition file.
struct AlgebraFile {
    Algebra algebra;
    std::vector<NamedFunctional> functionals;

    /// Throws UnknownFunctional.
    Functional functional(const std::string &name) const;
};

/// Parses and validates a JSON algebra definition. Throws ParseError plus
/// anything Algebra::validate throws.
AlgebraFile parse_algebra_file(const std::string &text);
AlgebraFile read_algebra_file(std::istream &in);

/// JSON text that parse_algebra_file reads back to the same algebra.
std::string write_algebra_file(const Algebra &a, const std::vector<NamedFunctional> &functionals);

} // namespace frobform
