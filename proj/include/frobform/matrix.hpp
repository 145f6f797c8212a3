#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobform/polynomial.hpp"
#include "frobform/scalar.hpp"

namespace frobform {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector &v);
Vector add(const Vector &a, const Vector &b);
Vector subtract(const Vector &a, const Vector &b);
Vector scale(const Vector &v, const Scalar &c);

/// Dense row-major matrix over a FieldSpec.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, FieldSpec field);

    static Matrix identity(std::size_t n, FieldSpec field);
    static Matrix from_rows(FieldSpec field, const std::vector<Vector> &rows);
    static Matrix from_columns(FieldSpec field, std::size_t rows, const std::vector<Vector> &cols);
    /// Rows given as integers or literals, e.g. {{"0", "1/2"}, {"1", "0"}}.
    static Matrix parse(FieldSpec field, const std::vector<std::vector<std::string>> &rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec &field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator-() const;
    friend Matrix operator+(const Matrix &a, const Matrix &b);
    friend Matrix operator-(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Matrix operator*(const Scalar &c, const Matrix &a);
    Vector apply(const Vector &v) const;
    /// Nonnegative powers of a square matrix.
    Matrix pow(std::size_t exponent) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_upper_unitriangular() const;

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

    std::string to_string() const;

  private:
    void check_same_shape(const Matrix &other) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form together with pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix &a);
std::size_t rank(const Matrix &a);
Scalar det(const Matrix &a);
std::optional<Matrix> try_inverse(const Matrix &a);
/// Throws Singular.
Matrix inverse(const Matrix &a);
/// Some x with A x = b, or nullopt.
std::optional<Vector> solve(const Matrix &a, const Vector &b);
/// Basis of the right null space, one vector per free column.
std::vector<Vector> kernel_basis(const Matrix &a);
/// Reduced echelon basis of the span of the given vectors (all of length n).
std::vector<Vector> span_basis(FieldSpec field, std::size_t n, std::span<const Vector> vectors);
/// Vertical concatenation.
Matrix stack(std::span<const Matrix> blocks);

/// det(xI - A) via Hessenberg reduction.
Polynomial characteristic_polynomial(const Matrix &a);
/// Monic invariant factors f1 | f2 | ... | fr of positive degree, from the
/// Smith normal form of xI - A over k[x].
std::vector<Polynomial> invariant_factors(const Matrix &a);
bool is_similar(const Matrix &a, const Matrix &b);

} // namespace frobform
