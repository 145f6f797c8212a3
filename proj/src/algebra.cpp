#include "frobform/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "frobform/error.hpp"

namespace frobform {

namespace {

bool is_identifier(const std::string &s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void check_same(const Algebra &a, const Algebra &b) {
    if (!a.same_as(b))
        throw Error(ErrorCode::AlgebraMismatch, "elements belong to different algebras");
}

// Vector whose entry k is the product coefficient of e_i e_j on e_k.
Vector product_coords(const Algebra &a, const Vector &x, const Vector &y) {
    Vector out = zero_vector(a.field(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x[i].is_zero())
            continue;
        const Matrix &li = a.left_basis(i);
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!li(k, j).is_zero())
                    out[k] += c * li(k, j);
        }
    }
    return out;
}

std::vector<Vector> products_span(const Algebra &a, const std::vector<Vector> &lhs,
                                  const std::vector<Vector> &rhs) {
    std::vector<Vector> prods;
    for (const auto &x : lhs)
        for (const auto &y : rhs)
            prods.push_back(product_coords(a, x, y));
    return span_basis(a.field(), a.dim(), prods);
}

bool in_span(FieldSpec field, std::size_t n, const std::vector<Vector> &basis, const Vector &v) {
    std::vector<Vector> all = basis;
    all.push_back(v);
    return span_basis(field, n, all).size() == basis.size();
}

} // namespace

Algebra Algebra::validate(const AlgebraData &c) {
    const std::size_t m = c.basis.size();
    if (m == 0)
        throw Error(ErrorCode::DimensionMismatch, "algebra needs at least one basis vector");
    if (c.one.size() != m)
        throw Error(ErrorCode::DimensionMismatch, "unit has wrong length");

    auto impl = std::make_shared<Impl>();
    impl->field = c.field;
    impl->dim = m;
    impl->basis = c.basis;
    impl->one = c.one;
    impl->tensor.assign(m * m * m, Scalar(c.field));
    for (const auto &e : c.mul) {
        if (e.i >= m || e.j >= m || e.k >= m)
            throw Error(ErrorCode::DimensionMismatch, "structure index out of range");
        if (!(e.value.field() == c.field))
            throw Error(ErrorCode::FieldMismatch, "structure constant over wrong field");
        impl->tensor[(e.i * m + e.j) * m + e.k] += e.value;
    }
    for (const auto &x : c.one)
        if (!(x.field() == c.field))
            throw Error(ErrorCode::FieldMismatch, "unit coordinate over wrong field");

    impl->left.assign(m, Matrix(m, m, c.field));
    impl->right.assign(m, Matrix(m, m, c.field));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar &v = impl->tensor[(i * m + j) * m + k];
                impl->left[i](k, j) = v;
                impl->right[j](k, i) = v;
            }

    // associativity: l_{e_i e_j} = l_{e_i} l_{e_j}
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Matrix lhs(m, m, c.field);
            for (std::size_t l = 0; l < m; ++l) {
                const Scalar &cij = impl->tensor[(i * m + j) * m + l];
                if (!cij.is_zero())
                    lhs = lhs + cij * impl->left[l];
            }
            Matrix rhs = impl->left[i] * impl->left[j];
            if (lhs == rhs)
                continue;
            for (std::size_t k = 0; k < m; ++k)
                if (!(lhs.column(k) == rhs.column(k)))
                    throw Error(ErrorCode::NotAssociative,
                                "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                    std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                                    std::to_string(j) + " e" + std::to_string(k) + ") for basis " +
                                    c.basis[i] + ", " + c.basis[j] + ", " + c.basis[k]);
        }

    Matrix lone(m, m, c.field), rone(m, m, c.field);
    for (std::size_t i = 0; i < m; ++i) {
        if (c.one[i].is_zero())
            continue;
        lone = lone + c.one[i] * impl->left[i];
        rone = rone + c.one[i] * impl->right[i];
    }
    if (!lone.is_identity() || !rone.is_identity())
        throw Error(ErrorCode::BadUnit, "declared unit is not a two-sided identity");

    impl->commutative = true;
    for (std::size_t i = 0; i < m && impl->commutative; ++i)
        if (!(impl->left[i] == impl->right[i]))
            impl->commutative = false;

    Algebra algebra(impl);
    if (c.radical_basis) {
        for (const auto &v : *c.radical_basis)
            if (v.size() != m)
                throw Error(ErrorCode::DimensionMismatch, "radical basis vector has wrong length");
        std::vector<Vector> basis = span_basis(c.field, m, *c.radical_basis);
        if (basis.size() != c.radical_basis->size())
            throw Error(ErrorCode::BadRadical, "declared radical basis is dependent");
        for (const auto &v : basis)
            for (std::size_t i = 0; i < m; ++i) {
                Vector e = unit_vector(c.field, m, i);
                if (!in_span(c.field, m, basis, product_coords(algebra, e, v)) ||
                    !in_span(c.field, m, basis, product_coords(algebra, v, e)))
                    throw Error(ErrorCode::BadRadical, "declared radical is not a two-sided ideal");
            }
        std::vector<Vector> power = basis;
        for (std::size_t step = 0; step <= m && !power.empty(); ++step)
            power = products_span(algebra, power, basis);
        if (!power.empty())
            throw Error(ErrorCode::BadRadical, "declared radical is not nilpotent");
        impl->radical_basis = c.radical_basis;
    }
    return algebra;
}

std::optional<std::size_t> Algebra::basis_index(const std::string &name) const {
    auto it = std::find(impl_->basis.begin(), impl_->basis.end(), name);
    if (it == impl_->basis.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - impl_->basis.begin());
}

AlgebraData Algebra::data() const {
    AlgebraData d{field(), basis_names(), one_coords(), {}, declared_radical()};
    const std::size_t m = dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (!structure(i, j, k).is_zero())
                    d.mul.push_back({i, j, k, structure(i, j, k)});
    return d;
}

bool Algebra::same_as(const Algebra &other) const {
    if (impl_ == other.impl_)
        return true;
    return field() == other.field() && dim() == other.dim() && impl_->one == other.impl_->one &&
           impl_->tensor == other.impl_->tensor;
}

Element Algebra::element(Vector coords) const { return Element(*this, std::move(coords)); }

Element Algebra::basis_element(std::size_t i) const {
    return Element(*this, unit_vector(field(), dim(), i));
}

Element Algebra::zero() const { return Element(*this, zero_vector(field(), dim())); }

Element Algebra::one() const { return Element(*this, one_coords()); }

Element Algebra::scalar(const Scalar &c) const { return c * one(); }

Element::Element(Algebra algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_.dim())
        throw Error(ErrorCode::DimensionMismatch, "element has wrong number of coordinates");
}

Element Element::operator-() const { return Element(algebra_, scale(coords_, Scalar(algebra_.field(), -1))); }

Element operator+(const Element &a, const Element &b) {
    check_same(a.algebra_, b.algebra_);
    return Element(a.algebra_, add(a.coords_, b.coords_));
}

Element operator-(const Element &a, const Element &b) {
    check_same(a.algebra_, b.algebra_);
    return Element(a.algebra_, subtract(a.coords_, b.coords_));
}

Element operator*(const Element &a, const Element &b) {
    check_same(a.algebra_, b.algebra_);
    return Element(a.algebra_, product_coords(a.algebra_, a.coords_, b.coords_));
}

Element operator*(const Scalar &c, const Element &a) { return Element(a.algebra_, scale(a.coords_, c)); }

Element Element::pow(std::size_t exponent) const {
    Element result = algebra_.one();
    Element base = *this;
    while (exponent) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

bool operator==(const Element &a, const Element &b) {
    return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
}

std::string Element::to_string() const {
    const auto &names = algebra_.basis_names();
    const bool over_q = algebra_.field().is_rationals();
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero())
            continue;
        std::string c = coords_[i].to_string();
        bool negative = over_q && c.front() == '-';
        if (negative)
            c.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        bool is_unit_vector = algebra_.one_coords() == unit_vector(algebra_.field(), coords_.size(), i);
        if (is_unit_vector && !is_identifier(names[i]))
            out += c;
        else if (c == "1")
            out += names[i];
        else
            out += c + "*" + names[i];
    }
    return out.empty() ? "0" : out;
}

Endo::Endo(Algebra algebra, Matrix matrix) : algebra_(std::move(algebra)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != algebra_.dim() || matrix_.cols() != algebra_.dim())
        throw Error(ErrorCode::DimensionMismatch, "endomorphism matrix has wrong size");
}

Endo Endo::identity(const Algebra &algebra) {
    return Endo(algebra, Matrix::identity(algebra.dim(), algebra.field()));
}

Element Endo::operator()(const Element &x) const {
    check_same(algebra_, x.algebra());
    return Element(algebra_, matrix_.apply(x.coords()));
}

Endo operator*(const Endo &a, const Endo &b) {
    check_same(a.algebra_, b.algebra_);
    return Endo(a.algebra_, a.matrix_ * b.matrix_);
}

Endo Endo::pow(std::size_t exponent) const { return Endo(algebra_, matrix_.pow(exponent)); }

std::optional<Endo> Endo::inverse() const {
    auto inv = try_inverse(matrix_);
    if (!inv)
        return std::nullopt;
    return Endo(algebra_, *std::move(inv));
}

Element multiply(const Element &x, const Element &y) { return x * y; }

Endo left_mul(const Element &x) {
    const Algebra &a = x.algebra();
    Matrix m(a.dim(), a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!x[i].is_zero())
            m = m + x[i] * a.left_basis(i);
    return Endo(a, std::move(m));
}

Endo right_mul(const Element &x) {
    const Algebra &a = x.algebra();
    Matrix m(a.dim(), a.dim(), a.field());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!x[i].is_zero())
            m = m + x[i] * a.right_basis(i);
    return Endo(a, std::move(m));
}

std::optional<Element> try_inverse(const Element &x) {
    const Algebra &a = x.algebra();
    auto l_inv = try_inverse(left_mul(x).matrix());
    if (!l_inv)
        return std::nullopt;
    Element inv(a, l_inv->apply(a.one_coords()));
    // in finite dimension a one-sided inverse is two-sided
    ensure(inv * x == a.one(), "right inverse is not a left inverse");
    return inv;
}

Element inverse(const Element &x) {
    auto inv = try_inverse(x);
    if (!inv)
        throw Error(ErrorCode::NotAUnit, x.to_string() + " is not a unit");
    return *std::move(inv);
}

Endo inner_automorphism(const Element &u) {
    Element uinv = inverse(u);
    return left_mul(u) * right_mul(uinv);
}

std::vector<Vector> trace_form_radical(const Algebra &a) {
    const std::uint64_t ch = a.field().characteristic();
    if (ch != 0 && ch <= a.dim())
        throw Error(ErrorCode::CharTooSmall,
                    "trace-form radical needs char 0 or char > dim; declare radical_basis instead");
    const std::size_t m = a.dim();
    Matrix t(m, m, a.field());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            const Matrix &li = a.left_basis(i);
            const Matrix &lj = a.left_basis(j);
            Scalar tr(a.field());
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q)
                    if (!li(p, q).is_zero() && !lj(q, p).is_zero())
                        tr += li(p, q) * lj(q, p);
            t(i, j) = tr;
            t(j, i) = tr;
        }
    return kernel_basis(t);
}

std::vector<Vector> radical(const Algebra &a) {
    if (a.declared_radical())
        return *a.declared_radical();
    return trace_form_radical(a);
}

Scalar LocalData::residue(const Element &x) const {
    Scalar r(x.algebra().field());
    for (std::size_t i = 0; i < residue_covector.size(); ++i)
        r += residue_covector[i] * x[i];
    return r;
}

std::optional<LocalData> local_structure(const Algebra &a) {
    std::vector<Vector> mb = radical(a);
    const std::size_t m = a.dim();
    if (mb.size() + 1 != m)
        return std::nullopt;
    const FieldSpec f = a.field();

    LocalData d;
    d.m_basis = span_basis(f, m, mb);
    std::vector<Vector> current = d.m_basis;
    while (!current.empty()) {
        d.powers.push_back(current);
        current = products_span(a, current, d.m_basis);
    }
    d.nilpotency = d.powers.size();

    // deepest layer first; each layer completed in echelon (input basis) order
    std::vector<std::vector<Vector>> layers(d.powers.rbegin(), d.powers.rend());
    std::vector<Vector> whole;
    for (std::size_t i = 0; i < m; ++i)
        whole.push_back(unit_vector(f, m, i));
    layers.push_back(whole);
    std::vector<Vector> chosen;
    for (std::size_t l = 0; l < layers.size(); ++l)
        for (const auto &v : layers[l]) {
            if (in_span(f, m, chosen, v))
                continue;
            chosen.push_back(v);
            d.depth.push_back(d.nilpotency - l);
        }
    ensure(chosen.size() == m, "filtered basis is incomplete");
    d.filtered_basis = chosen;
    d.filtered_change = Matrix::from_columns(f, m, chosen);

    std::vector<Vector> cols{a.one_coords()};
    cols.insert(cols.end(), d.m_basis.begin(), d.m_basis.end());
    auto inv = try_inverse(Matrix::from_columns(f, m, cols));
    ensure(inv.has_value(), "unit lies in the maximal ideal");
    d.residue_covector = inv->row(0);
    return d;
}

std::optional<LocalData> try_local_structure(const Algebra &a) {
    try {
        return local_structure(a);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::CharTooSmall)
            return std::nullopt;
        throw;
    }
}

bool is_central(const Element &x) { return left_mul(x) == right_mul(x); }

std::vector<Vector> center(const Algebra &a) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < a.dim(); ++i)
        blocks.push_back(a.right_basis(i) - a.left_basis(i));
    return kernel_basis(stack(blocks));
}

bool verify_morphism(const Matrix &v, const Algebra &source, const Algebra &target) {
    if (v.rows() != target.dim() || v.cols() != source.dim() || !(source.field() == target.field()) ||
        !(v.field() == source.field()))
        throw Error(ErrorCode::DimensionMismatch, "morphism matrix does not match the algebras");
    if (!(v.apply(source.one_coords()) == target.one_coords()))
        return false;
    // V(e_i e_j) = V(e_i) V(e_j) for all j  <=>  V l_i = l_{V e_i} V
    for (std::size_t i = 0; i < source.dim(); ++i) {
        Matrix lhs = v * source.left_basis(i);
        Matrix rhs = left_mul(target.element(v.column(i))).matrix() * v;
        if (!(lhs == rhs))
            return false;
    }
    return true;
}

bool verify_morphism(const Endo &v) { return verify_morphism(v.matrix(), v.algebra(), v.algebra()); }

std::optional<std::size_t> nilpotency_index(const Element &x) {
    Element p = x;
    for (std::size_t k = 1; k <= x.algebra().dim() + 1; ++k) {
        if (p.is_zero())
            return k;
        p = p * x;
    }
    return std::nullopt;
}

} // namespace frobform
