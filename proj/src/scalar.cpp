#include "frobform/scalar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "frobform/error.hpp"

namespace frobform {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p; // p < 2^32 keeps the product in range
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class &z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

// Squarefree part of n > 0 by trial division.
mpz_class squarefree_part(mpz_class n, std::uint64_t bound) {
    mpz_class result = 1;
    for (std::uint64_t d = 2; d <= bound; d += (d == 2 ? 1 : 2)) {
        mpz_class dd = d;
        if (dd * dd > n)
            break;
        unsigned parity = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            parity ^= 1U;
        }
        if (parity)
            result *= d;
    }
    if (n == 1)
        return result;
    // every prime factor of the cofactor exceeds the trial bound
    mpz_class b = bound;
    if (n <= b * b)
        return result * n;
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return result;
    throw Error(ErrorCode::FactorBoundExceeded,
                "cannot certify square class of cofactor " + n.get_str() +
                    " with trial bound " + std::to_string(bound));
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= kMaxModulus || !is_prime(p))
        throw Error(ErrorCode::NotPrime,
                    "field modulus must be a prime below 2^32, got " +
                        std::to_string(p));
    return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q" || text == "QQ")
        return rationals();
    std::string_view digits = text;
    if (digits.starts_with("GF"))
        digits.remove_prefix(2);
    if (digits.starts_with("(") && digits.ends_with(")"))
        digits = digits.substr(1, digits.size() - 2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw Error(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
    return prime(p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(modulus) + ")";
}

Scalar::Scalar(FieldSpec field) : field_(field) {
    if (field_.is_rationals())
        value_ = mpq_class(0);
    else
        value_ = std::uint64_t{0};
}

Scalar::Scalar(FieldSpec field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(FieldSpec field, const mpq_class &value) : field_(field) {
    if (field_.is_rationals()) {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
        return;
    }
    std::uint64_t p = field_.modulus;
    std::uint64_t den = reduce_mpz(value.get_den(), p);
    if (den == 0)
        throw Error(ErrorCode::ZeroArgument, "denominator vanishes in " + field_.to_string());
    std::uint64_t num = reduce_mpz(value.get_num(), p);
    value_ = mulmod(num, powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    auto bad = [&] {
        return Error(ErrorCode::ParseError, "bad scalar literal '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
        negative = s[pos++] == '-';
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
            ++end;
        return end;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos)
        throw bad();
    mpz_class num(s.substr(pos, num_end - pos));
    mpz_class den = 1;
    if (num_end < s.size()) {
        if (s[num_end] != '/')
            throw bad();
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != s.size())
            throw bad();
        den = mpz_class(s.substr(num_end + 1, den_end - num_end - 1));
        if (den == 0)
            throw Error(ErrorCode::ZeroArgument, "zero denominator in '" + std::string(text) + "'");
    }
    if (negative)
        num = -num;
    return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const {
    if (auto *r = std::get_if<std::uint64_t>(&value_))
        return *r == 0;
    return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
    if (auto *r = std::get_if<std::uint64_t>(&value_))
        return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

const mpq_class &Scalar::rational() const {
    if (!field_.is_rationals())
        throw Error(ErrorCode::FieldMismatch, "rational() on " + field_.to_string());
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rationals())
        throw Error(ErrorCode::FieldMismatch, "residue() on Q");
    return std::get<std::uint64_t>(value_);
}

void Scalar::check_field(const Scalar &other) const {
    if (!(field_ == other.field_))
        throw Error(ErrorCode::FieldMismatch,
                    "mixed fields " + field_.to_string() + " and " + other.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto *v = std::get_if<std::uint64_t>(&r.value_))
        *v = *v == 0 ? 0 : field_.modulus - *v;
    else
        std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
    return r;
}

Scalar &Scalar::operator+=(const Scalar &rhs) {
    check_field(rhs);
    if (auto *v = std::get_if<std::uint64_t>(&value_)) {
        *v += std::get<std::uint64_t>(rhs.value_);
        if (*v >= field_.modulus)
            *v -= field_.modulus;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &rhs) {
    check_field(rhs);
    if (auto *v = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t r = std::get<std::uint64_t>(rhs.value_);
        *v = *v >= r ? *v - r : *v + field_.modulus - r;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &rhs) {
    check_field(rhs);
    if (auto *v = std::get_if<std::uint64_t>(&value_))
        *v = mulmod(*v, std::get<std::uint64_t>(rhs.value_), field_.modulus);
    else
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &rhs) {
    check_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::ZeroArgument, "inverse of zero");
    Scalar r = *this;
    if (auto *v = std::get_if<std::uint64_t>(&r.value_))
        *v = powmod(*v, field_.modulus - 2, field_.modulus);
    else
        std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
    return r;
}

Scalar Scalar::pow(long long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                        : static_cast<unsigned long long>(exponent);
    Scalar result(field_, 1);
    while (e) {
        if (e & 1)
            result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar &lhs, const Scalar &rhs) {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

std::string Scalar::to_string() const {
    if (auto *v = std::get_if<std::uint64_t>(&value_))
        return std::to_string(*v);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream &operator<<(std::ostream &os, const Scalar &x) { return os << x.to_string(); }

std::uint64_t least_nonresidue(std::uint64_t p) {
    for (std::uint64_t a = 2; a < p; ++a)
        if (powmod(a, (p - 1) / 2, p) == p - 1)
            return a;
    throw Error(ErrorCode::NotPrime, "no nonresidue mod " + std::to_string(p));
}

SquareClassRep square_class(const Scalar &x, std::uint64_t factor_bound) {
    if (x.is_zero())
        throw Error(ErrorCode::ZeroArgument, "square class of zero");
    const FieldSpec &f = x.field();
    if (f.is_rationals()) {
        const mpq_class &q = x.rational();
        // num/den and num*den differ by the square den^2
        mpz_class num = abs(q.get_num());
        mpz_class part = squarefree_part(num, factor_bound) *
                         squarefree_part(q.get_den(), factor_bound);
        part = squarefree_part(part, factor_bound);
        return {f, sgn(q) < 0 ? mpz_class(-part) : part};
    }
    std::uint64_t p = f.modulus;
    if (p == 2)
        return {f, 1};
    bool square = powmod(x.residue(), (p - 1) / 2, p) == 1;
    return {f, square ? mpz_class(1) : mpz_class(least_nonresidue(p))};
}

std::optional<Scalar> nth_root_in_k(const Scalar &x, unsigned long n) {
    if (n == 0)
        throw Error(ErrorCode::ZeroParameter, "root index must be positive");
    const FieldSpec &f = x.field();
    if (f.is_rationals()) {
        const mpq_class &q = x.rational();
        if (sgn(q) < 0 && n % 2 == 0)
            return std::nullopt;
        mpz_class num = abs(q.get_num());
        mpz_class rn, rd;
        if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) ||
            !mpz_root(rd.get_mpz_t(), q.get_den().get_mpz_t(), n))
            return std::nullopt;
        if (sgn(q) < 0)
            rn = -rn;
        return Scalar(f, mpq_class(rn, rd));
    }
    std::uint64_t target = x.residue();
    for (std::uint64_t u = 0; u < f.modulus; ++u)
        if (powmod(u, n, f.modulus) == target)
            return Scalar(f, mpq_class(static_cast<unsigned long>(u)));
    return std::nullopt;
}

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::FactorBoundExceeded: return "FactorBoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadRadical: return "BadRadical";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::CharTooSmall: return "CharTooSmall";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::NotLocal: return "NotLocal";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::NoRootInResidueField: return "NoRootInResidueField";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::NotATwist: return "NotATwist";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownBasisName: return "UnknownBasisName";
    case ErrorCode::UnknownFunctional: return "UnknownFunctional";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace frobform
