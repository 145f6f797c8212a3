#include "frobform/polynomial.hpp"

#include "frobform/error.hpp"

namespace frobform {

Polynomial::Polynomial(FieldSpec field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar &c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear(const Scalar &root) {
    return Polynomial(root.field(), {-root, Scalar(root.field(), 1)});
}

Polynomial Polynomial::monomial(FieldSpec field, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, Scalar(field));
    c.back() = Scalar(field, 1);
    return Polynomial(field, std::move(c));
}

Scalar Polynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar(field_);
}

const Scalar &Polynomial::leading() const {
    if (coeffs_.empty())
        throw Error(ErrorCode::ZeroArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return *this;
    return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const Scalar &c) const {
    std::vector<Scalar> out = coeffs_;
    for (auto &x : out)
        x *= c;
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scaled(Scalar(field_, -1)); }

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        out[i] += b.coeffs_[i];
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) { return a + (-b); }

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &divisor) const {
    if (divisor.is_zero())
        throw Error(ErrorCode::ZeroArgument, "polynomial division by zero");
    std::vector<Scalar> rem = coeffs_;
    long dd = divisor.degree();
    if (degree() < dd)
        return {Polynomial(field_), *this};
    std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), Scalar(field_));
    Scalar lead_inv = divisor.leading().inverse();
    for (long k = degree(); k >= dd; --k) {
        Scalar c = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (c.is_zero())
            continue;
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Scalar Polynomial::evaluate(const Scalar &x) const {
    Scalar acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string Polynomial::to_string(const std::string &var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (long k = degree(); k >= 0; --k) {
        const Scalar &c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        std::string s = c.to_string();
        bool negative = field_.is_rationals() && s.front() == '-';
        if (negative)
            s.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool unit = s == "1";
        if (k == 0 || !unit)
            out += s;
        if (k > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace frobform
