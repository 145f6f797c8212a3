#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobform/scalar.hpp"

namespace frobform {

/// Univariate polynomial over a FieldSpec, coefficients stored low degree
/// first with no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
  public:
    explicit Polynomial(FieldSpec field = {}) : field_(field) {}
    Polynomial(FieldSpec field, std::vector<Scalar> coefficients);

    static Polynomial constant(const Scalar &c);
    /// x - root
    static Polynomial linear(const Scalar &root);
    static Polynomial monomial(FieldSpec field, std::size_t degree);

    const FieldSpec &field() const { return field_; }
    const std::vector<Scalar> &coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Scalar coefficient(std::size_t i) const;
    const Scalar &leading() const;
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial scaled(const Scalar &c) const;

    /// Quotient and remainder; throws ZeroArgument on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial &divisor) const;
    Scalar evaluate(const Scalar &x) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::string &var = "x") const;

  private:
    void trim();

    FieldSpec field_;
    std::vector<Scalar> coeffs_;
};

} // namespace frobform
