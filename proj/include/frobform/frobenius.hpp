#pragma once

#include <cstdint>
#include <optional>

#include "frobform/algebra.hpp"
#include "frobform/error.hpp"

namespace frobform {

/// Linear functional R -> k as a coordinate covector.
class Functional {
  public:
    Functional(Algebra algebra, Vector covector);

    const Algebra &algebra() const { return algebra_; }
    const Vector &covector() const { return covector_; }
    Scalar operator()(const Element &x) const;

    friend bool operator==(const Functional &a, const Functional &b) {
        return a.algebra_.same_as(b.algebra_) && a.covector_ == b.covector_;
    }

  private:
    Algebra algebra_;
    Vector covector_;
};

/// Bilinear form with B(r, s) = r^T B s. Flags are computed on construction.
class Form {
  public:
    Form(Algebra algebra, Matrix matrix);

    const Algebra &algebra() const { return algebra_; }
    const Matrix &matrix() const { return matrix_; }
    bool nondegenerate() const { return nondegenerate_; }
    /// B(rs, t) = B(r, st) on all basis triples.
    bool associative() const { return associative_; }
    bool symmetric() const { return symmetric_; }

    Scalar operator()(const Element &r, const Element &s) const;

  private:
    Algebra algebra_;
    Matrix matrix_;
    bool nondegenerate_ = false;
    bool associative_ = false;
    bool symmetric_ = false;
};

/// Raised for a degenerate form; the witness s satisfies B(r, s) = 0 for all
/// r, so the left ideal R s lies in the kernel of the functional.
class DegenerateError : public Error {
  public:
    DegenerateError(const std::string &what, Vector witness)
        : Error(ErrorCode::Degenerate, what), witness_(std::move(witness)) {}

    const Vector &witness() const { return witness_; }

  private:
    Vector witness_;
};

/// Entry (i, j) is lambda(e_i e_j).
Matrix gram_matrix(const Functional &lambda);
/// B(r, s) = lambda(rs); throws DegenerateError.
Form form_from_functional(const Functional &lambda);
/// lambda(r) = B(r, 1).
Functional functional_from_form(const Form &b);

/// Semi-decision search for a functional with nondegenerate form. In the
/// local case the functional dual to the top power of m is tried first,
/// then `attempts` seeded random covectors. nullopt is inconclusive, never a
/// proof that the algebra is not Frobenius.
std::optional<Functional> find_frobenius_functional(const Algebra &a, std::uint64_t seed,
                                                    std::size_t attempts = 64);

/// B'(r, s) = B(r, s u); throws NotAUnit.
Form twist(const Form &b, const Element &u);

/// Sigma = B^-1 B^T, so that B(r, s) = B(s, Sigma r). Throws Degenerate.
Endo nakayama(const Form &b);

/// phi^t = B^-1 phi^T B, so that B(phi r, s) = B(r, phi^t s).
Endo transpose(const Endo &phi, const Form &b);
/// k-fold transpose.
Endo transpose_power(const Endo &phi, const Form &b, std::size_t k);

constexpr std::size_t kDefaultOrderBound = 256;

/// Least n <= bound with Sigma^n = Id.
std::optional<std::size_t> automorphism_order(const Endo &sigma, std::size_t bound = kDefaultOrderBound);

/// A unit a with tau = I_a, normalised to residue 1 in the local case. In a
/// local algebra nullopt proves tau is outer; otherwise Incomplete is thrown
/// when basis and seeded combinations of the solution space hold no unit.
std::optional<Element> inner_decompose(const Endo &tau, std::uint64_t seed = 0,
                                       std::size_t attempts = 64);

struct InnerOrder {
    std::size_t n;
    Element a;
};

/// Least n <= bound with sigma^n inner, and a witness a with sigma^n = I_a.
/// Sigma must be a Nakayama automorphism; sigma(a) = a is asserted.
std::optional<InnerOrder> inner_order(const Endo &sigma, std::size_t bound = kDefaultOrderBound);

} // namespace frobform
