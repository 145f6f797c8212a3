#pragma once

#include <cstddef>
#include <utility>

#include "frobform/frobenius.hpp"

namespace frobform {

/// An algebra automorphism together with its (inner) order.
class NormContext {
  public:
    /// Throws NotAnAutomorphism or ZeroParameter.
    NormContext(Endo sigma, std::size_t n);

    const Endo &sigma() const { return sigma_; }
    std::size_t n() const { return n_; }

  private:
    Endo sigma_;
    std::size_t n_;
};

/// N_i(r) = r sigma(r) ... sigma^(i-1)(r), with N_0(r) = 1.
Element partial_norm(const Endo &sigma, const Element &r, std::size_t i);

/// N_sigma(u) = N_n(u); throws NotAUnit.
Element norm(const NormContext &ctx, const Element &u);

/// Coefficients s_0..s_(order-1) of a power series with s(T)^n = c0 + c1 T
/// modulo T^order, where s_0^n = c0. Requires n invertible in k and s_0 != 0.
std::vector<Scalar> truncated_root_series(const Scalar &s0, std::size_t n, const Scalar &c1,
                                          std::size_t order);

/// alpha v^2 = u with alpha the residue of u and v = 1 + a1 m + a2 m^2 + ...
/// for m = u - alpha. Throws BadCharacteristic, NotLocal, NotAUnit.
std::pair<Scalar, Element> central_square_root(const Algebra &a, const Element &u);

/// u with u^n = x and sigma(u) = u, built as a polynomial in m = x - alpha.
/// Throws BadCharacteristic, NotLocal, NotAUnit, NotFixed,
/// NoRootInResidueField.
Element fixed_nth_root(const Algebra &a, const Element &x, const Endo &sigma, std::size_t n);

struct StraightenedForm {
    Form form;
    /// Inner order of the original Nakayama automorphism.
    std::size_t n;
    /// Inner-order witness, normalised to residue 1.
    Element a;
    /// Twisting unit with N_sigma(u) = a^-1.
    Element u;
};

/// A twist of B whose Nakayama automorphism satisfies sigma'^n = Id.
/// Throws NotLocal, OrderBoundExceeded, BadCharacteristic.
StraightenedForm straighten_form(const Form &b, std::size_t bound = kDefaultOrderBound);

} // namespace frobform
