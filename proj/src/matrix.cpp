#include "frobform/matrix.hpp"

#include <sstream>

#include "frobform/error.hpp"

namespace frobform {

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
    Vector v = zero_vector(field, n);
    v.at(i) = Scalar(field, 1);
    return v;
}

bool is_zero_vector(const Vector &v) {
    for (const auto &x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vector add(const Vector &a, const Vector &b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector subtract(const Vector &a, const Vector &b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vector scale(const Vector &v, const Scalar &c) {
    Vector out = v;
    for (auto &x : out)
        x *= c;
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(field, 1);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector> &cols) {
    Matrix m(rows, cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::parse(FieldSpec field, const std::vector<std::vector<std::string>> &rows) {
    std::vector<Vector> values;
    for (const auto &r : rows) {
        Vector v;
        for (const auto &s : r)
            v.push_back(Scalar::parse(field, s));
        values.push_back(std::move(v));
    }
    return from_rows(field, values);
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<long>(i * cols_),
                  data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void Matrix::check_same_shape(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto &x : m.data_)
        x = -x;
    return m;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    a.check_same_shape(b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
    a.check_same_shape(b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] -= b.data_[i];
    return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar &aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += aik * b(k, j);
        }
    return m;
}

Matrix operator*(const Scalar &c, const Matrix &a) {
    Matrix m = a;
    for (auto &x : m.data_)
        x *= c;
    return m;
}

Vector Matrix::apply(const Vector &v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero())
                out[i] += (*this)(i, j) * v[j];
    return out;
}

Matrix Matrix::pow(std::size_t exponent) const {
    if (!is_square())
        throw Error(ErrorCode::NonSquare, "power of a non-square matrix");
    Matrix result = identity(rows_, field_);
    Matrix base = *this;
    while (exponent) {
        if (exponent & 1)
            result = result * base;
        exponent >>= 1;
        if (exponent)
            base = base * base;
    }
    return result;
}

bool Matrix::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero())
                return false;
    return true;
}

bool Matrix::is_upper_unitriangular() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(*this)(i, i).is_one())
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero())
                return false;
    }
    return true;
}

std::string Matrix::to_string() const {
    std::vector<std::size_t> width(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            width[j] = std::max(width[j], (*this)(i, j).to_string().size());
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            std::string s = (*this)(i, j).to_string();
            os << (j ? " " : "") << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os.str();
}

Echelon rref(const Matrix &a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix &a) { return rref(a).pivots.size(); }

Scalar det(const Matrix &a) {
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
    Matrix m = a;
    std::size_t n = m.rows();
    Scalar result(a.field(), 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return Scalar(a.field());
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            result = -result;
        }
        result *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            Scalar f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return result;
}

std::optional<Matrix> try_inverse(const Matrix &a) {
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
    std::size_t n = a.rows();
    Matrix aug(n, 2 * n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = Scalar(a.field(), 1);
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n, a.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Matrix inverse(const Matrix &a) {
    auto inv = try_inverse(a);
    if (!inv)
        throw Error(ErrorCode::Singular, "matrix is singular");
    return *std::move(inv);
}

std::optional<Vector> solve(const Matrix &a, const Vector &b) {
    if (b.size() != a.rows())
        throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    Vector x = zero_vector(a.field(), a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

std::vector<Vector> kernel_basis(const Matrix &a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(a.field(), a.cols());
        v[f] = Scalar(a.field(), 1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> span_basis(FieldSpec field, std::size_t n, std::span<const Vector> vectors) {
    if (vectors.empty())
        return {};
    Matrix m(vectors.size(), n, field);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != n)
            throw Error(ErrorCode::DimensionMismatch, "span vector length mismatch");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = vectors[i][j];
    }
    Echelon e = rref(m);
    std::vector<Vector> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        out.push_back(e.reduced.row(r));
    return out;
}

Matrix stack(std::span<const Matrix> blocks) {
    if (blocks.empty())
        throw Error(ErrorCode::DimensionMismatch, "nothing to stack");
    std::size_t rows = 0;
    for (const auto &b : blocks) {
        if (b.cols() != blocks.front().cols())
            throw Error(ErrorCode::DimensionMismatch, "stacked blocks differ in width");
        rows += b.rows();
    }
    Matrix out(rows, blocks.front().cols(), blocks.front().field());
    std::size_t r = 0;
    for (const auto &b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(r, j) = b(i, j);
    return out;
}

Polynomial characteristic_polynomial(const Matrix &a) {
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
    const FieldSpec f = a.field();
    const std::size_t n = a.rows();
    Matrix h = a;
    // reduce to upper Hessenberg form by elementary similarities
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1).is_zero())
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j)
                std::swap(h(j, i), h(j, m));
        }
        Scalar pivot_inv = h(m, m - 1).inverse();
        for (std::size_t j = m + 1; j < n; ++j) {
            if (h(j, m - 1).is_zero())
                continue;
            Scalar u = h(j, m - 1) * pivot_inv;
            for (std::size_t k = 0; k < n; ++k)
                h(j, k) -= u * h(m, k);
            for (std::size_t k = 0; k < n; ++k)
                h(k, m) += u * h(k, j);
        }
    }
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(Scalar(f, 1)));
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial next = Polynomial::linear(h(m - 1, m - 1)) * p[m - 1];
        Scalar t(f, 1);
        for (std::size_t i = m - 1; i >= 1; --i) {
            t *= h(i, i - 1);
            if (t.is_zero())
                break;
            next = next - p[i - 1].scaled(h(i - 1, m - 1) * t);
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

void swap_rows(PolyMatrix &m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(PolyMatrix &m, std::size_t a, std::size_t b) {
    for (auto &row : m)
        std::swap(row[a], row[b]);
}

} // namespace

std::vector<Polynomial> invariant_factors(const Matrix &a) {
    if (!a.is_square())
        throw Error(ErrorCode::NonSquare, "invariant factors of a non-square matrix");
    const FieldSpec f = a.field();
    const std::size_t n = a.rows();
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = i == j ? Polynomial::linear(a(i, j)) : Polynomial::constant(-a(i, j));

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // bring an entry of least degree to the pivot
            long best = -1;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
                        best = m[i][j].degree();
                        bi = i;
                        bj = j;
                    }
            if (best < 0)
                break;
            swap_rows(m, t, bi);
            swap_cols(m, t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero())
                    continue;
                auto [q, r] = m[i][t].divmod(m[t][t]);
                for (std::size_t j = t; j < n; ++j)
                    m[i][j] = m[i][j] - q * m[t][j];
                if (!r.is_zero())
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero())
                    continue;
                auto [q, r] = m[t][j].divmod(m[t][t]);
                for (std::size_t i = t; i < n; ++i)
                    m[i][j] = m[i][j] - q * m[i][t];
                if (!r.is_zero())
                    clean = false;
            }
            if (!clean)
                continue;

            // the pivot must divide the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!m[i][j].divmod(m[t][t]).second.is_zero()) {
                        for (std::size_t k = t; k < n; ++k)
                            m[t][k] = m[t][k] + m[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
    }

    std::vector<Polynomial> factors;
    for (std::size_t i = 0; i < n; ++i)
        if (m[i][i].degree() > 0)
            factors.push_back(m[i][i].monic());
    return factors;
}

bool is_similar(const Matrix &a, const Matrix &b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || !(a.field() == b.field()))
        throw Error(ErrorCode::DimensionMismatch, "similarity needs square matrices of equal size");
    return invariant_factors(a) == invariant_factors(b);
}

} // namespace frobform
