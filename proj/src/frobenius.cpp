#include "frobform/frobenius.hpp"

#include "frobform/random.hpp"

namespace frobform {

Functional::Functional(Algebra algebra, Vector covector)
    : algebra_(std::move(algebra)), covector_(std::move(covector)) {
    if (covector_.size() != algebra_.dim())
        throw Error(ErrorCode::DimensionMismatch, "functional has wrong length");
}

Scalar Functional::operator()(const Element &x) const {
    if (!x.algebra().same_as(algebra_))
        throw Error(ErrorCode::AlgebraMismatch, "functional applied to a foreign element");
    Scalar r(algebra_.field());
    for (std::size_t i = 0; i < covector_.size(); ++i)
        if (!covector_[i].is_zero())
            r += covector_[i] * x[i];
    return r;
}

Form::Form(Algebra algebra, Matrix matrix) : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
    const std::size_t m = algebra_.dim();
    if (matrix_.rows() != m || matrix_.cols() != m)
        throw Error(ErrorCode::DimensionMismatch, "form matrix has wrong size");
    nondegenerate_ = !det(matrix_).is_zero();
    symmetric_ = matrix_ == matrix_.transpose();
    // B(r e_j, t) = B(r, e_j t)  <=>  rho_j^T B = B l_j
    associative_ = true;
    for (std::size_t j = 0; j < m && associative_; ++j)
        if (!(algebra_.right_basis(j).transpose() * matrix_ == matrix_ * algebra_.left_basis(j)))
            associative_ = false;
}

Scalar Form::operator()(const Element &r, const Element &s) const {
    if (!r.algebra().same_as(algebra_) || !s.algebra().same_as(algebra_))
        throw Error(ErrorCode::AlgebraMismatch, "form applied to foreign elements");
    Vector bs = matrix_.apply(s.coords());
    Scalar out(algebra_.field());
    for (std::size_t i = 0; i < bs.size(); ++i)
        out += r[i] * bs[i];
    return out;
}

Matrix gram_matrix(const Functional &lambda) {
    const Algebra &a = lambda.algebra();
    const std::size_t m = a.dim();
    Matrix g(m, m, a.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Scalar v(a.field());
            for (std::size_t k = 0; k < m; ++k)
                if (!a.structure(i, j, k).is_zero())
                    v += a.structure(i, j, k) * lambda.covector()[k];
            g(i, j) = v;
        }
    return g;
}

Form form_from_functional(const Functional &lambda) {
    Form b(lambda.algebra(), gram_matrix(lambda));
    ensure(b.associative(), "form of a functional is not associative");
    if (!b.nondegenerate()) {
        auto ker = kernel_basis(b.matrix());
        throw DegenerateError("form of functional is degenerate; its kernel contains the left ideal R*(" +
                                  lambda.algebra().element(ker.front()).to_string() + ")",
                              ker.front());
    }
    return b;
}

Functional functional_from_form(const Form &b) {
    return Functional(b.algebra(), b.matrix().apply(b.algebra().one_coords()));
}

std::optional<Functional> find_frobenius_functional(const Algebra &a, std::uint64_t seed,
                                                    std::size_t attempts) {
    auto works = [&](const Vector &covector) {
        return !det(gram_matrix(Functional(a, covector))).is_zero();
    };
    if (auto local = try_local_structure(a)) {
        Vector candidate = inverse(local->filtered_change).row(0);
        if (works(candidate))
            return Functional(a, candidate);
    }
    Rng rng(seed);
    for (std::size_t t = 0; t < attempts; ++t) {
        Vector candidate = random_vector(a.field(), a.dim(), rng);
        if (works(candidate))
            return Functional(a, candidate);
    }
    return std::nullopt;
}

Form twist(const Form &b, const Element &u) {
    if (!try_inverse(u))
        throw Error(ErrorCode::NotAUnit, "twisting element " + u.to_string() + " is not a unit");
    return Form(b.algebra(), b.matrix() * right_mul(u).matrix());
}

Endo nakayama(const Form &b) {
    auto binv = try_inverse(b.matrix());
    if (!binv)
        throw DegenerateError("Nakayama automorphism of a degenerate form", kernel_basis(b.matrix()).front());
    if (!b.associative())
        throw Error(ErrorCode::NotAssociative, "Nakayama automorphism of a non-associative form");
    Endo sigma(b.algebra(), *binv * b.matrix().transpose());
    ensure(verify_morphism(sigma), "Nakayama map is not an algebra morphism");
    ensure((b.matrix() * sigma.matrix()).transpose() == b.matrix(), "B(r,s) != B(s, sigma r)");
    return sigma;
}

Endo transpose(const Endo &phi, const Form &b) {
    auto binv = try_inverse(b.matrix());
    if (!binv)
        throw DegenerateError("transpose with respect to a degenerate form", kernel_basis(b.matrix()).front());
    return Endo(b.algebra(), *binv * phi.matrix().transpose() * b.matrix());
}

Endo transpose_power(const Endo &phi, const Form &b, std::size_t k) {
    Endo out = phi;
    for (std::size_t i = 0; i < k; ++i)
        out = transpose(out, b);
    return out;
}

std::optional<std::size_t> automorphism_order(const Endo &sigma, std::size_t bound) {
    Endo power = sigma;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (power.is_identity())
            return n;
        power = power * sigma;
    }
    return std::nullopt;
}

std::optional<Element> inner_decompose(const Endo &tau, std::uint64_t seed, std::size_t attempts) {
    const Algebra &a = tau.algebra();
    if (!verify_morphism(tau) || !tau.inverse())
        throw Error(ErrorCode::NotAnAutomorphism, "map is not an algebra automorphism");
    // tau(e_i) a - a e_i = 0 for all i
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < a.dim(); ++i)
        blocks.push_back(left_mul(tau(a.basis_element(i))).matrix() - a.right_basis(i));
    std::vector<Vector> solutions = kernel_basis(stack(blocks));
    if (solutions.empty())
        return std::nullopt;

    if (auto local = try_local_structure(a)) {
        for (const auto &v : solutions) {
            Element candidate = a.element(v);
            Scalar r = local->residue(candidate);
            if (!r.is_zero())
                return r.inverse() * candidate;
        }
        return std::nullopt;
    }

    for (const auto &v : solutions)
        if (try_inverse(a.element(v)))
            return a.element(v);
    Rng rng(seed);
    for (std::size_t t = 0; t < attempts; ++t) {
        Element candidate = a.zero();
        for (const auto &v : solutions)
            candidate = candidate + random_scalar(a.field(), rng) * a.element(v);
        if (try_inverse(candidate))
            return candidate;
    }
    throw Error(ErrorCode::Incomplete,
                "no unit found among solutions of tau(r) a = a r; innerness undecided");
}

std::optional<InnerOrder> inner_order(const Endo &sigma, std::size_t bound) {
    Endo power = sigma;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (auto a = inner_decompose(power)) {
            ensure(sigma(*a) == *a, "Nakayama automorphism does not fix its inner-order witness");
            return InnerOrder{n, *std::move(a)};
        }
        power = power * sigma;
    }
    return std::nullopt;
}

} // namespace frobform
