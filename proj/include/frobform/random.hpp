#pragma once

#include <cstdint>
#include <random>

#include "frobform/algebra.hpp"

namespace frobform {

using Rng = std::mt19937_64;

/// Independent sub-seed for trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Small scalars: over Q numerators in [-6, 6] and denominators in [1, 3];
/// over GF(p) uniform residues.
Scalar random_scalar(FieldSpec field, Rng &rng);
Scalar random_nonzero_scalar(FieldSpec field, Rng &rng);
Vector random_vector(FieldSpec field, std::size_t n, Rng &rng);
Element random_element(const Algebra &a, Rng &rng);
/// In a local algebra: nonzero residue plus random maximal-ideal part.
/// Otherwise random elements are drawn until one is invertible.
Element random_unit(const Algebra &a, Rng &rng, const LocalData *local = nullptr);
/// Random element of the maximal ideal.
Element random_in_maximal_ideal(const Algebra &a, const LocalData &local, Rng &rng);
Matrix random_invertible(FieldSpec field, std::size_t n, Rng &rng);

} // namespace frobform
