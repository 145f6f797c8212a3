#include "frobform/norms.hpp"

namespace frobform {

namespace {

void require_invertible_index(const FieldSpec &field, std::size_t n) {
    std::uint64_t ch = field.characteristic();
    if (ch != 0 && n % ch == 0)
        throw Error(ErrorCode::BadCharacteristic,
                    "characteristic " + std::to_string(ch) + " divides " + std::to_string(n));
}

LocalData require_local(const Algebra &a) {
    auto local = local_structure(a);
    if (!local)
        throw Error(ErrorCode::NotLocal, "algebra is not local with residue field k");
    return *std::move(local);
}

Element evaluate_series(const std::vector<Scalar> &coeffs, const Element &m) {
    Element acc = m.algebra().zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * m + m.algebra().scalar(*it);
    return acc;
}

// Truncated product of power series modulo T^order.
std::vector<Scalar> series_mul(const std::vector<Scalar> &a, const std::vector<Scalar> &b,
                               std::size_t order) {
    std::vector<Scalar> out(order, Scalar(a.front().field()));
    for (std::size_t i = 0; i < a.size() && i < order; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

NormContext::NormContext(Endo sigma, std::size_t n) : sigma_(std::move(sigma)), n_(n) {
    if (n_ == 0)
        throw Error(ErrorCode::ZeroParameter, "norm order must be positive");
    if (!verify_morphism(sigma_))
        throw Error(ErrorCode::NotAnAutomorphism, "norm twist is not an algebra morphism");
}

Element partial_norm(const Endo &sigma, const Element &r, std::size_t i) {
    if (!verify_morphism(sigma))
        throw Error(ErrorCode::NotAnAutomorphism, "partial norm over a non-automorphism");
    Element result = r.algebra().one();
    Element factor = r;
    for (std::size_t k = 0; k < i; ++k) {
        result = result * factor;
        factor = sigma(factor);
    }
    return result;
}

Element norm(const NormContext &ctx, const Element &u) {
    if (!try_inverse(u))
        throw Error(ErrorCode::NotAUnit, u.to_string() + " is not a unit");
    return partial_norm(ctx.sigma(), u, ctx.n());
}

std::vector<Scalar> truncated_root_series(const Scalar &s0, std::size_t n, const Scalar &c1,
                                          std::size_t order) {
    const FieldSpec f = s0.field();
    require_invertible_index(f, n);
    if (s0.is_zero())
        throw Error(ErrorCode::NotAUnit, "series root needs a nonzero constant term");
    std::vector<Scalar> s(order, Scalar(f));
    if (order == 0)
        return s;
    s[0] = s0;
    // coefficient of T^i in s^n is n s0^(n-1) s_i + (terms in s_0..s_(i-1))
    Scalar pivot_inv = (Scalar(f, static_cast<long>(n)) * s0.pow(static_cast<long long>(n) - 1)).inverse();
    for (std::size_t i = 1; i < order; ++i) {
        std::vector<Scalar> partial(s.begin(), s.begin() + static_cast<long>(i));
        std::vector<Scalar> power{Scalar(f, 1)};
        for (std::size_t k = 0; k < n; ++k)
            power = series_mul(power, partial, i + 1);
        Scalar target = i == 1 ? c1 : Scalar(f);
        Scalar known = i < power.size() ? power[i] : Scalar(f);
        s[i] = (target - known) * pivot_inv;
    }
    return s;
}

std::pair<Scalar, Element> central_square_root(const Algebra &a, const Element &u) {
    if (a.field().characteristic() == 2)
        throw Error(ErrorCode::BadCharacteristic, "square roots need characteristic != 2");
    LocalData local = require_local(a);
    Scalar alpha = local.residue(u);
    if (alpha.is_zero())
        throw Error(ErrorCode::NotAUnit, u.to_string() + " is not a unit");
    Element m = u - a.scalar(alpha);
    std::size_t order = nilpotency_index(m).value_or(a.dim() + 1);
    // alpha v^2 = alpha + m  <=>  v^2 = 1 + m / alpha
    auto series = truncated_root_series(Scalar(a.field(), 1), 2, alpha.inverse(), order);
    Element v = evaluate_series(series, m);
    ensure(alpha * (v * v) == u, "central square root does not square back");
    return {alpha, v};
}

Element fixed_nth_root(const Algebra &a, const Element &x, const Endo &sigma, std::size_t n) {
    if (n == 0)
        throw Error(ErrorCode::ZeroParameter, "root index must be positive");
    require_invertible_index(a.field(), n);
    LocalData local = require_local(a);
    Scalar alpha = local.residue(x);
    if (alpha.is_zero())
        throw Error(ErrorCode::NotAUnit, x.to_string() + " is not a unit");
    if (!(sigma(x) == x))
        throw Error(ErrorCode::NotFixed, x.to_string() + " is not fixed by the automorphism");
    auto u0 = nth_root_in_k(alpha, n);
    if (!u0)
        throw Error(ErrorCode::NoRootInResidueField,
                    "residue " + alpha.to_string() + " has no " + std::to_string(n) + "-th root in " +
                        a.field().to_string());
    Element m = x - a.scalar(alpha);
    std::size_t order = nilpotency_index(m).value_or(a.dim() + 1);
    auto series = truncated_root_series(*u0, n, Scalar(a.field(), 1), order);
    Element u = evaluate_series(series, m);
    ensure(u.pow(n) == x, "lifted root does not reproduce x");
    ensure(sigma(u) == u, "lifted root is not fixed by the automorphism");
    return u;
}

StraightenedForm straighten_form(const Form &b, std::size_t bound) {
    const Algebra &alg = b.algebra();
    LocalData local = require_local(alg);
    Endo sigma = nakayama(b);
    auto io = inner_order(sigma, bound);
    if (!io)
        throw Error(ErrorCode::OrderBoundExceeded,
                    "Nakayama automorphism has no inner power up to " + std::to_string(bound));
    require_invertible_index(alg.field(), io->n);
    Element a = local.residue(io->a).inverse() * io->a;
    ensure(sigma(a) == a, "Nakayama automorphism does not fix a");
    Element a_inv = inverse(a);
    Element u = fixed_nth_root(alg, a_inv, sigma, io->n);
    Form straightened = twist(b, u);
    ensure(nakayama(straightened).pow(io->n).is_identity(), "straightened form still has sigma^n != Id");
    return {std::move(straightened), io->n, std::move(a), std::move(u)};
}

} // namespace frobform
