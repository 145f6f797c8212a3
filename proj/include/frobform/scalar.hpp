#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace frobform {

/// The ground field: the rationals or a prime field GF(p).
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {}; }
    /// Throws NotPrime unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts "Q", "GF(p)", "GFp".
    static FieldSpec parse(std::string_view text);

    bool is_rationals() const { return kind == Kind::Rationals; }
    std::uint64_t characteristic() const { return is_rationals() ? 0 : modulus; }
    std::string to_string() const;

    friend bool operator==(const FieldSpec &, const FieldSpec &) = default;
};

bool is_prime(std::uint64_t n);

constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// Exact field element. Rationals are kept reduced with positive
/// denominator; residues live in [0, p).
class Scalar {
  public:
    explicit Scalar(FieldSpec field = {});
    Scalar(FieldSpec field, long value);
    Scalar(FieldSpec field, const mpq_class &value);

    /// Scalar literal: optional sign, integer or "a/b" with b > 0.
    static Scalar parse(FieldSpec field, std::string_view text);

    const FieldSpec &field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; only valid over Q.
    const mpq_class &rational() const;
    /// Residue in [0, p); only valid over GF(p).
    std::uint64_t residue() const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &rhs);
    Scalar &operator-=(const Scalar &rhs);
    Scalar &operator*=(const Scalar &rhs);
    Scalar &operator/=(const Scalar &rhs);

    friend Scalar operator+(Scalar lhs, const Scalar &rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar &rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar &rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar &rhs) { return lhs /= rhs; }

    /// Throws ZeroArgument on zero.
    Scalar inverse() const;
    /// Negative exponents invert first.
    Scalar pow(long long exponent) const;

    friend bool operator==(const Scalar &lhs, const Scalar &rhs);

    std::string to_string() const;

  private:
    void check_field(const Scalar &other) const;

    FieldSpec field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &x);

/// Canonical representative of the class of a nonzero scalar in k*/k*^2.
/// Over Q: signed squarefree integer. Over GF(p), p odd: 1 or the least
/// positive nonresidue. Over GF(2): 1.
struct SquareClassRep {
    FieldSpec field;
    mpz_class rep;

    std::string to_string() const { return rep.get_str(); }
    friend bool operator==(const SquareClassRep &a, const SquareClassRep &b) {
        return a.field == b.field && a.rep == b.rep;
    }
};

/// Throws ZeroArgument on x = 0; FactorBoundExceeded when trial division up
/// to factor_bound cannot certify the squarefree part.
SquareClassRep square_class(const Scalar &x,
                            std::uint64_t factor_bound = kDefaultFactorBound);

/// Least positive quadratic nonresidue mod an odd prime p.
std::uint64_t least_nonresidue(std::uint64_t p);

/// Some u with u^n = x, or nullopt. Over Q with n even the positive root is
/// returned; over GF(p) the least residue.
std::optional<Scalar> nth_root_in_k(const Scalar &x, unsigned long n);

} // namespace frobform
