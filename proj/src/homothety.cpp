#include "frobform/homothety.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "frobform/random.hpp"

namespace frobform {

std::string_view reason_name(ObstructionReason r) {
    switch (r) {
    case ObstructionReason::CentralNorm: return "central-norm";
    case ObstructionReason::NakayamaSimilarity: return "nakayama-similarity";
    case ObstructionReason::DetClass: return "det-class";
    case ObstructionReason::SymmetryMismatch: return "symmetry-mismatch";
    }
    return "unknown";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::WitnessFound: return "WITNESS";
    case Verdict::Obstructed: return "OBSTRUCTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

std::string_view outcome_name(CheckOutcome c) {
    switch (c) {
    case CheckOutcome::Pass: return "pass";
    case CheckOutcome::Fail: return "fail";
    case CheckOutcome::NotApplicable: return "n/a";
    }
    return "unknown";
}

bool verify_witness(const Form &b, const Form &b_prime, const HomothetyWitness &w) {
    const std::size_t m = b.algebra().dim();
    if (b_prime.algebra().dim() != m || w.v.rows() != m || w.v.cols() != m)
        throw Error(ErrorCode::DimensionMismatch, "witness does not match the forms");
    if (w.alpha.is_zero() || !try_inverse(w.v))
        return false;
    bool as_matrices = b_prime.matrix() == w.alpha * (w.v.transpose() * b.matrix() * w.v);
    Matrix rho_u = inverse(b.matrix()) * b_prime.matrix();
    Endo v(b.algebra(), w.v);
    bool as_transpose = rho_u == w.alpha * (transpose(v, b).matrix() * w.v);
    ensure(as_matrices == as_transpose, "matrix and transpose forms of the witness disagree");
    return as_matrices;
}

HomothetyWitness symmetric_witness(const Form &b, const Element &u) {
    if (!b.symmetric())
        throw Error(ErrorCode::NotSymmetric, "symmetric witness needs a symmetric form");
    if (!is_central(u))
        throw Error(ErrorCode::NotCentral, u.to_string() + " is not central");
    auto [alpha, v] = central_square_root(b.algebra(), u);
    HomothetyWitness w{alpha, right_mul(v).matrix()};
    ensure(verify_witness(b, twist(b, u), w), "symmetric witness does not verify");
    return w;
}

CentralNormResult central_norm_test(const Form &b, const Element &u, std::size_t bound) {
    CentralNormResult result;
    Endo sigma = nakayama(b);
    result.order = automorphism_order(sigma, bound);
    if (!result.order)
        return result;
    Element n = partial_norm(sigma, u, *result.order);
    result.outcome = is_central(n) ? CentralNorm::Passes : CentralNorm::Fails;
    result.norm = std::move(n);
    return result;
}

Similarity nakayama_similarity(const Form &b, const Form &b_prime) {
    if (b.algebra().dim() != b_prime.algebra().dim() || !(b.algebra().field() == b_prime.algebra().field()))
        throw Error(ErrorCode::DimensionMismatch, "forms live on different spaces");
    return is_similar(nakayama(b).matrix(), nakayama(b_prime).matrix()) ? Similarity::Similar
                                                                         : Similarity::NotSimilar;
}

SquareClassRep det_class(const Form &b, std::uint64_t factor_bound) {
    Scalar d = det(b.matrix());
    if (d.is_zero())
        throw DegenerateError("determinant class of a degenerate form", kernel_basis(b.matrix()).front());
    return square_class(d, factor_bound);
}

bool unipotence_check(const Algebra &a, const Element &u) {
    auto local = local_structure(a);
    if (!local)
        throw Error(ErrorCode::NotLocal, "unipotence check needs a local algebra");
    if (!local->residue(u).is_one())
        throw Error(ErrorCode::BadResidue, u.to_string() + " is not congruent to 1 mod m");
    const Matrix &p = local->filtered_change;
    Matrix rho = right_mul(u).matrix();
    Matrix in_filtered = inverse(p) * rho * p;
    return in_filtered.is_upper_unitriangular() && det(rho).is_one();
}

ObstructionReport homothety_probe(const Form &b, const Form &b_prime, std::size_t bound,
                                  std::uint64_t seed, std::uint64_t factor_bound) {
    (void)seed;
    const Algebra &alg = b.algebra();
    if (!alg.same_as(b_prime.algebra()))
        throw Error(ErrorCode::AlgebraMismatch, "forms live on different algebras");
    for (const Form *f : {&b, &b_prime}) {
        if (!f->nondegenerate())
            throw DegenerateError("probe needs nondegenerate forms", kernel_basis(f->matrix()).front());
        if (!f->associative())
            throw Error(ErrorCode::NotAssociative, "probe needs associative forms");
    }

    Matrix rho = inverse(b.matrix()) * b_prime.matrix();
    Element u = alg.element(rho.apply(alg.one_coords()));
    if (!(right_mul(u).matrix() == rho) || !try_inverse(u))
        throw Error(ErrorCode::NotATwist, "B^-1 B' is not right multiplication by a unit");

    ObstructionReport report{Verdict::Inconclusive, std::nullopt, std::nullopt, u, {}, {}};
    auto fail = [&](ObstructionReason r) {
        if (std::find(report.failures.begin(), report.failures.end(), r) == report.failures.end())
            report.failures.push_back(r);
    };

    auto local = try_local_structure(alg);
    const bool good_char = alg.field().characteristic() != 2;
    const bool u_central = is_central(u);

    if (b.symmetric()) {
        // a twist of a symmetric form is symmetric iff the unit is central
        ensure(b_prime.symmetric() == u_central, "symmetry transfer violated");
        report.checks.push_back({"symmetry-transfer", u_central ? CheckOutcome::Pass : CheckOutcome::Fail,
                                 std::string("B symmetric; u ") + (u_central ? "central" : "not central")});
        if (local && good_char) {
            if (u_central) {
                HomothetyWitness w = symmetric_witness(b, u);
                ensure(verify_witness(b, b_prime, w), "probe witness does not verify");
                report.checks.push_back({"symmetric-witness", CheckOutcome::Pass,
                                         "alpha = " + w.alpha.to_string() + ", V = right multiplication"});
                report.verdict = Verdict::WitnessFound;
                report.witness = std::move(w);
                return report;
            }
            fail(ObstructionReason::CentralNorm);
        } else if (!u_central) {
            fail(ObstructionReason::SymmetryMismatch);
        }
    } else if (b_prime.symmetric()) {
        report.checks.push_back({"symmetry-transfer", CheckOutcome::Fail, "B' symmetric but B is not"});
        fail(ObstructionReason::SymmetryMismatch);
    }

    CentralNormResult cn = central_norm_test(b, u, bound);
    std::string cn_detail = cn.order ? "sigma order " + std::to_string(*cn.order) + ", N_sigma(u) = " +
                                           cn.norm->to_string()
                                     : "sigma has no finite order up to " + std::to_string(bound);
    switch (cn.outcome) {
    case CentralNorm::Passes:
        report.checks.push_back({"central-norm", CheckOutcome::Pass, cn_detail + " (central)"});
        break;
    case CentralNorm::Fails:
        report.checks.push_back({"central-norm", CheckOutcome::Fail, cn_detail + " (not central)"});
        fail(ObstructionReason::CentralNorm);
        break;
    case CentralNorm::NotApplicable:
        report.checks.push_back({"central-norm", CheckOutcome::NotApplicable, cn_detail});
        break;
    }

    Similarity sim = nakayama_similarity(b, b_prime);
    report.checks.push_back({"nakayama-similarity",
                             sim == Similarity::Similar ? CheckOutcome::Pass : CheckOutcome::Fail,
                             sim == Similarity::Similar ? "invariant factors agree" : "invariant factors differ"});
    if (sim == Similarity::NotSimilar)
        fail(ObstructionReason::NakayamaSimilarity);

    if (alg.dim() % 2 == 0) {
        SquareClassRep c = det_class(b, factor_bound);
        SquareClassRep c_prime = det_class(b_prime, factor_bound);
        bool same = c == c_prime;
        report.checks.push_back({"det-class", same ? CheckOutcome::Pass : CheckOutcome::Fail,
                                 "classes " + c.to_string() + " and " + c_prime.to_string()});
        if (!same)
            fail(ObstructionReason::DetClass);
    } else {
        report.checks.push_back({"det-class", CheckOutcome::NotApplicable, "odd dimension"});
    }

    if (!report.failures.empty()) {
        report.verdict = Verdict::Obstructed;
        report.reason = report.failures.front();
    }
    return report;
}

namespace {

struct TrialOutcome {
    Element u;
    Element norm;
    bool central;
    ObstructionReport report;
};

} // namespace

ConjectureSummary conjecture_probe(const Form &b, std::size_t trials, std::uint64_t seed, std::size_t bound,
                                   unsigned threads) {
    const Algebra &alg = b.algebra();
    Endo sigma = nakayama(b);
    auto order = automorphism_order(sigma, bound);
    if (!order)
        throw Error(ErrorCode::InfiniteOrder,
                    "Nakayama automorphism has no finite order up to " + std::to_string(bound));
    auto local = try_local_structure(alg);

    auto run_trial = [&](std::size_t i) {
        std::uint64_t sub = derive_seed(seed, i);
        Rng rng(sub);
        Element u = random_unit(alg, rng, local ? &*local : nullptr);
        Element n = partial_norm(sigma, u, *order);
        bool central = is_central(n);
        ObstructionReport report = homothety_probe(b, twist(b, u), bound, sub);
        return TrialOutcome{std::move(u), std::move(n), central, std::move(report)};
    };

    if (threads == 0)
        threads = std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

    std::vector<std::optional<TrialOutcome>> outcomes(trials);
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
        workers.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < trials; i += threads)
                outcomes[i] = run_trial(i);
        }));
    for (auto &w : workers)
        w.get();

    ConjectureSummary s;
    s.seed = seed;
    s.trials = trials;
    s.order = *order;
    for (std::size_t i = 0; i < trials; ++i) {
        TrialOutcome &o = *outcomes[i];
        bool obstructed = o.report.verdict == Verdict::Obstructed;
        if (o.report.verdict == Verdict::WitnessFound)
            ++s.witnesses;
        if (o.central && obstructed) {
            ++s.central_obstructed;
            s.candidates.push_back({i, derive_seed(seed, i), o.u, o.norm, o.report});
        } else if (o.central) {
            ++s.central_unobstructed;
        } else if (obstructed) {
            ++s.noncentral_obstructed;
        } else {
            ++s.noncentral_inconclusive;
        }
    }
    return s;
}

} // namespace frobform
