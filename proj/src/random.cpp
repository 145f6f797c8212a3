#include "frobform/random.hpp"

#include "frobform/error.hpp"

namespace frobform {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Scalar random_scalar(FieldSpec field, Rng &rng) {
    if (field.is_rationals()) {
        std::uniform_int_distribution<long> num(-6, 6);
        std::uniform_int_distribution<long> den(1, 3);
        long n = num(rng);
        long d = den(rng);
        return Scalar(field, mpq_class(n, static_cast<unsigned long>(d)));
    }
    std::uniform_int_distribution<std::uint64_t> r(0, field.modulus - 1);
    return Scalar(field, mpq_class(static_cast<unsigned long>(r(rng))));
}

Scalar random_nonzero_scalar(FieldSpec field, Rng &rng) {
    for (;;) {
        Scalar s = random_scalar(field, rng);
        if (!s.is_zero())
            return s;
    }
}

Vector random_vector(FieldSpec field, std::size_t n, Rng &rng) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(random_scalar(field, rng));
    return v;
}

Element random_element(const Algebra &a, Rng &rng) {
    return a.element(random_vector(a.field(), a.dim(), rng));
}

Element random_in_maximal_ideal(const Algebra &a, const LocalData &local, Rng &rng) {
    Element x = a.zero();
    for (const auto &b : local.m_basis)
        x = x + random_scalar(a.field(), rng) * a.element(b);
    return x;
}

Element random_unit(const Algebra &a, Rng &rng, const LocalData *local) {
    if (local)
        return random_nonzero_scalar(a.field(), rng) * a.one() + random_in_maximal_ideal(a, *local, rng);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Element x = random_element(a, rng);
        if (try_inverse(x))
            return x;
    }
    throw Error(ErrorCode::Incomplete, "no random unit found");
}

Matrix random_invertible(FieldSpec field, std::size_t n, Rng &rng) {
    for (;;) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = random_scalar(field, rng);
        if (!det(m).is_zero())
            return m;
    }
}

} // namespace frobform
