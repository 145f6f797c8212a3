#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobform/norms.hpp"

namespace frobform {

/// B'(r, s) = alpha B(V r, V s).
struct HomothetyWitness {
    Scalar alpha;
    Matrix v;
};

/// Checks B' = alpha V^T B V and rho_u = alpha V^t V with rho_u = B^-1 B'.
bool verify_witness(const Form &b, const Form &b_prime, const HomothetyWitness &w);

/// Witness (alpha, rho_v) with alpha v^2 = u for a symmetric form and a
/// central unit in a local algebra.
HomothetyWitness symmetric_witness(const Form &b, const Element &u);

enum class CentralNorm { Passes, Fails, NotApplicable };

struct CentralNormResult {
    CentralNorm outcome = CentralNorm::NotApplicable;
    std::optional<std::size_t> order;
    std::optional<Element> norm;
};

/// Homothety of B and twist(B, u) forces N_sigma(u) to be central when
/// sigma^n = Id; Fails certifies non-homothety.
CentralNormResult central_norm_test(const Form &b, const Element &u,
                                    std::size_t bound = kDefaultOrderBound);

enum class Similarity { Similar, NotSimilar };

/// Compares the invariant factors of B^-1 B^T and B'^-1 B'^T.
Similarity nakayama_similarity(const Form &b, const Form &b_prime);

/// Square class of det B; throws Degenerate.
SquareClassRep det_class(const Form &b, std::uint64_t factor_bound = kDefaultFactorBound);

/// rho_u in the filtered basis is upper unitriangular with determinant 1.
/// Throws NotLocal, BadResidue.
bool unipotence_check(const Algebra &a, const Element &u);

enum class ObstructionReason { CentralNorm, NakayamaSimilarity, DetClass, SymmetryMismatch };
enum class Verdict { WitnessFound, Obstructed, Inconclusive };
enum class CheckOutcome { Pass, Fail, NotApplicable };

std::string_view reason_name(ObstructionReason r);
std::string_view verdict_name(Verdict v);
std::string_view outcome_name(CheckOutcome c);

struct CheckResult {
    std::string name;
    CheckOutcome outcome;
    std::string detail;
};

struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ObstructionReason> reason;
    std::optional<HomothetyWitness> witness;
    /// Unit with B' = twist(B, u).
    Element u;
    std::vector<CheckResult> checks;

    /// Names of every failed check, in pipeline order.
    std::vector<ObstructionReason> failures;
};

/// Runs every known necessary condition on a pair of forms on one algebra
/// and reports the first failure, a verified witness, or Inconclusive.
/// Throws NotATwist if B^-1 B' is not right multiplication by a unit.
ObstructionReport homothety_probe(const Form &b, const Form &b_prime,
                                  std::size_t bound = kDefaultOrderBound, std::uint64_t seed = 0,
                                  std::uint64_t factor_bound = kDefaultFactorBound);

struct CounterexampleCandidate {
    std::size_t trial;
    std::uint64_t seed;
    Element u;
    Element norm;
    ObstructionReport report;
};

struct ConjectureSummary {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t order = 0;
    std::size_t central_unobstructed = 0;
    std::size_t central_obstructed = 0;
    std::size_t noncentral_obstructed = 0;
    std::size_t noncentral_inconclusive = 0;
    std::size_t witnesses = 0;
    std::vector<CounterexampleCandidate> candidates;
};

/// Samples seeded random units, splits them by centrality of N_sigma(u) and
/// runs homothety_probe on each twist. Trial i uses derive_seed(seed, i), so
/// the summary does not depend on `threads`. Throws InfiniteOrder.
ConjectureSummary conjecture_probe(const Form &b, std::size_t trials, std::uint64_t seed,
                                   std::size_t bound = kDefaultOrderBound, unsigned threads = 0);

} // namespace frobform
