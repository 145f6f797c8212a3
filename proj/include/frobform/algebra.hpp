#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobform/matrix.hpp"
#include "frobform/scalar.hpp"

namespace frobform {

/// One structure constant: e_i * e_j has coefficient `value` on e_k.
struct StructureEntry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Scalar value;
};

/// Unvalidated algebra description, as read from a file or built by hand.
struct AlgebraData {
    FieldSpec field;
    std::vector<std::string> basis;
    Vector one;
    std::vector<StructureEntry> mul;
    /// Explicit maximal-ideal basis; bypasses the trace-form radical.
    std::optional<std::vector<Vector>> radical_basis;
};

class Element;

/// Finite-dimensional associative unital algebra given by structure
/// constants. Immutable and cheap to copy; copies share one table.
class Algebra {
  public:
    /// Checks associativity on all basis triples and the two-sided unit law.
    /// Throws NotAssociative (with the offending triple), BadUnit,
    /// BadRadical or DimensionMismatch.
    static Algebra validate(const AlgebraData &candidate);

    const FieldSpec &field() const { return impl_->field; }
    std::size_t dim() const { return impl_->dim; }
    const std::vector<std::string> &basis_names() const { return impl_->basis; }
    const Vector &one_coords() const { return impl_->one; }
    const Scalar &structure(std::size_t i, std::size_t j, std::size_t k) const {
        return impl_->tensor[(i * impl_->dim + j) * impl_->dim + k];
    }
    /// Matrix of x -> e_i x.
    const Matrix &left_basis(std::size_t i) const { return impl_->left[i]; }
    /// Matrix of x -> x e_i.
    const Matrix &right_basis(std::size_t i) const { return impl_->right[i]; }
    const std::optional<std::vector<Vector>> &declared_radical() const {
        return impl_->radical_basis;
    }
    bool is_commutative() const { return impl_->commutative; }
    /// Index of a basis name, if present.
    std::optional<std::size_t> basis_index(const std::string &name) const;

    /// Sparse description with entries ordered by (i, j, k).
    AlgebraData data() const;

    bool same_as(const Algebra &other) const;

    Element element(Vector coords) const;
    Element basis_element(std::size_t i) const;
    Element zero() const;
    Element one() const;
    Element scalar(const Scalar &c) const;

  private:
    struct Impl {
        FieldSpec field;
        std::size_t dim = 0;
        std::vector<std::string> basis;
        Vector one;
        std::vector<Scalar> tensor;
        std::vector<Matrix> left;
        std::vector<Matrix> right;
        std::optional<std::vector<Vector>> radical_basis;
        bool commutative = false;
    };

    explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Coordinate vector over the basis of a fixed algebra.
class Element {
  public:
    Element(Algebra algebra, Vector coords);

    const Algebra &algebra() const { return algebra_; }
    const Vector &coords() const { return coords_; }
    const Scalar &operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const { return is_zero_vector(coords_); }

    Element operator-() const;
    friend Element operator+(const Element &a, const Element &b);
    friend Element operator-(const Element &a, const Element &b);
    /// Algebra product; throws AlgebraMismatch.
    friend Element operator*(const Element &a, const Element &b);
    friend Element operator*(const Scalar &c, const Element &a);
    Element pow(std::size_t exponent) const;

    friend bool operator==(const Element &a, const Element &b);

    /// Expression form, e.g. "1 + x - 1/2*xy"; reparses with parse_element.
    std::string to_string() const;

  private:
    Algebra algebra_;
    Vector coords_;
};

/// k-linear endomorphism of an algebra, as a matrix on coordinate columns.
class Endo {
  public:
    Endo(Algebra algebra, Matrix matrix);

    static Endo identity(const Algebra &algebra);

    const Algebra &algebra() const { return algebra_; }
    const Matrix &matrix() const { return matrix_; }

    Element operator()(const Element &x) const;
    friend Endo operator*(const Endo &a, const Endo &b);
    Endo pow(std::size_t exponent) const;
    std::optional<Endo> inverse() const;
    bool is_identity() const { return matrix_.is_identity(); }

    friend bool operator==(const Endo &a, const Endo &b) { return a.matrix_ == b.matrix_; }

  private:
    Algebra algebra_;
    Matrix matrix_;
};

Element multiply(const Element &x, const Element &y);
/// Column i holds the coordinates of x e_i.
Endo left_mul(const Element &x);
/// Column i holds the coordinates of e_i x.
Endo right_mul(const Element &x);
/// Two-sided inverse when left multiplication by x is invertible.
std::optional<Element> try_inverse(const Element &x);
/// Throws NotAUnit.
Element inverse(const Element &x);
/// I_u : r -> u r u^-1 ; throws NotAUnit.
Endo inner_automorphism(const Element &u);

/// {x : Tr(l_x l_y) = 0 for all y}; throws CharTooSmall unless char k is 0
/// or exceeds the dimension.
std::vector<Vector> trace_form_radical(const Algebra &a);
/// Declared radical basis when present, else the trace-form radical.
std::vector<Vector> radical(const Algebra &a);

/// Data of a local algebra with residue field k.
struct LocalData {
    std::vector<Vector> m_basis;
    /// n with m^n != 0 = m^(n+1); zero when m = 0.
    std::size_t nilpotency = 0;
    /// powers[k - 1] is an echelon basis of m^k, k = 1..n.
    std::vector<std::vector<Vector>> powers;
    /// Basis of m^n, completed to m^(n-1), ..., m, R.
    std::vector<Vector> filtered_basis;
    /// Filtration depth of each filtered basis vector.
    std::vector<std::size_t> depth;
    /// Columns are the filtered basis vectors.
    Matrix filtered_change;
    /// Linear functional r -> residue of r in R/m = k.
    Vector residue_covector;

    Scalar residue(const Element &x) const;
    bool in_maximal_ideal(const Element &x) const { return residue(x).is_zero(); }
};

/// Present iff the radical has codimension one.
std::optional<LocalData> local_structure(const Algebra &a);
/// As local_structure, but nullopt instead of CharTooSmall.
std::optional<LocalData> try_local_structure(const Algebra &a);

bool is_central(const Element &x);
std::vector<Vector> center(const Algebra &a);

/// V maps source coordinates to target coordinates; true iff V(1) = 1 and V
/// is multiplicative on basis pairs.
bool verify_morphism(const Matrix &v, const Algebra &source, const Algebra &target);
bool verify_morphism(const Endo &v);

/// Least k >= 1 with x^k = 0, if x is nilpotent.
std::optional<std::size_t> nilpotency_index(const Element &x);

} // namespace frobform
