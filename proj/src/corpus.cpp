#include "frobform/corpus.hpp"

#include <functional>

#include "frobform/homothety.hpp"

namespace frobform {

namespace {

using Product = std::function<Vector(std::size_t, std::size_t)>;

bool needs_declared_radical(FieldSpec field, std::size_t dim) {
    std::uint64_t ch = field.characteristic();
    return ch != 0 && ch <= dim;
}

// Basis vector 0 is the identity; `product` gives e_i e_j for i, j >= 1.
Algebra build(FieldSpec field, std::vector<std::string> names, const Product &product,
              bool local) {
    const std::size_t m = names.size();
    AlgebraData d{field, std::move(names), unit_vector(field, m, 0), {}, std::nullopt};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vector p = i == 0 ? unit_vector(field, m, j) : j == 0 ? unit_vector(field, m, i) : product(i, j);
            for (std::size_t k = 0; k < m; ++k)
                if (!p[k].is_zero())
                    d.mul.push_back({i, j, k, p[k]});
        }
    if (local && needs_declared_radical(field, m)) {
        std::vector<Vector> rad;
        for (std::size_t i = 1; i < m; ++i)
            rad.push_back(unit_vector(field, m, i));
        d.radical_basis = std::move(rad);
    }
    return Algebra::validate(d);
}

Vector coords(FieldSpec field, std::initializer_list<long> values) {
    Vector v;
    for (long x : values)
        v.push_back(Scalar(field, x));
    return v;
}

Functional top_coefficient(const Algebra &a, std::size_t index) {
    return Functional(a, unit_vector(a.field(), a.dim(), index));
}

Matrix matrix_of(FieldSpec field, const std::vector<std::vector<Scalar>> &rows) {
    return Matrix::from_rows(field, rows);
}

std::optional<std::size_t> multiplicative_order(const Scalar &x, std::size_t bound) {
    Scalar p = x;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (p.is_one())
            return n;
        p *= x;
    }
    return std::nullopt;
}

} // namespace

std::string_view origin_name(AnswerOrigin o) {
    switch (o) {
    case AnswerOrigin::Reference: return "reference";
    case AnswerOrigin::Computed: return "computed";
    case AnswerOrigin::Immediate: return "immediate";
    }
    return "unknown";
}

bool check_known_answer(const CorpusEntry &entry, const KnownAnswer &answer) {
    const Algebra &a = entry.algebra;
    Form b = entry.form();
    return std::visit(
        [&](const auto &v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SigmaImage>) {
                auto idx = a.basis_index(v.generator);
                return idx && nakayama(b)(a.basis_element(*idx)).coords() == v.image;
            } else if constexpr (std::is_same_v<T, OrderAnswer>) {
                return automorphism_order(nakayama(b), v.bound) == v.order;
            } else if constexpr (std::is_same_v<T, NormAnswer>) {
                Endo sigma = nakayama(b);
                auto n = automorphism_order(sigma);
                if (!n)
                    return false;
                Element nu = partial_norm(sigma, a.element(v.unit), *n);
                return nu.coords() == v.norm && is_central(nu) == v.central;
            } else if constexpr (std::is_same_v<T, DetClassAnswer>) {
                return det_class(b) == v.rep;
            } else if constexpr (std::is_same_v<T, FormMatrixAnswer>) {
                return twist(b, a.element(v.unit)).matrix() == v.matrix;
            } else {
                return b.symmetric() == v.symmetric;
            }
        },
        answer.value);
}

CorpusEntry nakayama_nesbitt(FieldSpec f, const Scalar &alpha) {
    if (alpha.is_zero())
        throw Error(ErrorCode::ZeroParameter, "alpha must be nonzero");
    // 1, x, y, xy
    auto product = [&](std::size_t i, std::size_t j) {
        Vector p = zero_vector(f, 4);
        if (i == 1 && j == 2)
            p[3] = Scalar(f, 1);
        else if (i == 2 && j == 1)
            p[3] = alpha;
        return p;
    };
    Algebra a = build(f, {"1", "x", "y", "xy"}, product, true);
    Scalar ainv = alpha.inverse();
    std::vector<KnownAnswer> answers{
        {"sigma(x) = x/alpha", AnswerOrigin::Reference,
         SigmaImage{"x", {Scalar(f), ainv, Scalar(f), Scalar(f)}}},
        {"sigma(y) = alpha y", AnswerOrigin::Reference,
         SigmaImage{"y", {Scalar(f), Scalar(f), alpha, Scalar(f)}}},
        {"symmetric iff alpha = 1", AnswerOrigin::Reference, SymmetricAnswer{alpha.is_one()}},
        {"sigma order is the order of alpha", AnswerOrigin::Computed,
         OrderAnswer{multiplicative_order(alpha, kDefaultOrderBound), kDefaultOrderBound}},
    };
    return {"nakayama_nesbitt", {alpha.to_string()}, a, top_coefficient(a, 3), std::move(answers)};
}

CorpusEntry extended_nn(FieldSpec f) {
    const std::vector<std::string> names{"1", "x", "y", "xy", "yx", "xyx"};
    auto word_index = [&](const std::string &w) -> std::optional<std::size_t> {
        if (w == "yxy")
            return 5;
        for (std::size_t i = 1; i < names.size(); ++i)
            if (names[i] == w)
                return i;
        return std::nullopt;
    };
    auto product = [&](std::size_t i, std::size_t j) {
        Vector p = zero_vector(f, 6);
        std::string w = names[i] + names[j];
        bool square = false;
        for (std::size_t k = 1; k < w.size(); ++k)
            square = square || w[k] == w[k - 1];
        if (!square && w.size() <= 3)
            if (auto k = word_index(w))
                p[*k] = Scalar(f, 1);
        return p;
    };
    Algebra a = build(f, names, product, true);
    auto printed = [&](long eps) {
        return matrix_of(f, {coords(f, {0, 0, 0, eps, 0, 1}), coords(f, {0, 0, eps, 0, 1, 0}),
                             coords(f, {0, 0, 0, 1, 0, 0}), coords(f, {eps, 1, 0, 0, 0, 0}),
                             coords(f, {0, 0, 1, 0, 0, 0}), coords(f, {1, 0, 0, 0, 0, 0})});
    };
    std::vector<KnownAnswer> answers{
        {"sigma(x) = y", AnswerOrigin::Reference, SigmaImage{"x", coords(f, {0, 0, 1, 0, 0, 0})}},
        {"sigma(y) = x", AnswerOrigin::Reference, SigmaImage{"y", coords(f, {0, 1, 0, 0, 0, 0})}},
        {"sigma^2 = Id", AnswerOrigin::Reference, OrderAnswer{2, kDefaultOrderBound}},
        {"B_0 matrix", AnswerOrigin::Reference, FormMatrixAnswer{coords(f, {1, 0, 0, 0, 0, 0}), printed(0)}},
        {"B_1 matrix", AnswerOrigin::Reference, FormMatrixAnswer{coords(f, {1, 1, 0, 0, 0, 0}), printed(1)}},
        {"N(1 + x) = 1 + x + y + xy, not central", AnswerOrigin::Reference,
         NormAnswer{coords(f, {1, 1, 0, 0, 0, 0}), coords(f, {1, 1, 1, 1, 0, 0}), false}},
        {"N(1 + x - y) = 1 + xy + yx, central", AnswerOrigin::Reference,
         NormAnswer{coords(f, {1, 1, -1, 0, 0, 0}), coords(f, {1, 0, 0, 1, 1, 0}), true}},
        {"lambda form is not symmetric", AnswerOrigin::Computed, SymmetricAnswer{false}},
    };
    return {"extended_nn", {}, a, top_coefficient(a, 5), std::move(answers)};
}

CorpusEntry planar_quartic(FieldSpec f, const Scalar &a, const Scalar &b, const Scalar &c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw Error(ErrorCode::DegenerateParameters, "a, b and c must be nonzero");
    if (b * b == a * c)
        throw Error(ErrorCode::DegenerateParameters, "b^2 = ac gives a degenerate algebra");
    Scalar xy = a / b, yy = a / c;
    // 1, x, y, xx
    auto product = [&](std::size_t i, std::size_t j) {
        Vector p = zero_vector(f, 4);
        if (i == 1 && j == 1)
            p[3] = Scalar(f, 1);
        else if ((i == 1 && j == 2) || (i == 2 && j == 1))
            p[3] = xy;
        else if (i == 2 && j == 2)
            p[3] = yy;
        return p;
    };
    Algebra alg = build(f, {"1", "x", "y", "xx"}, product, true);
    Scalar z(f), one(f, 1);
    Matrix printed = matrix_of(f, {{z, z, z, one}, {z, one, xy, z}, {z, xy, yy, z}, {one, z, z, z}});
    std::vector<KnownAnswer> answers{
        {"form matrix", AnswerOrigin::Reference, FormMatrixAnswer{unit_vector(f, 4, 0), printed}},
        {"det class of ac(ac - b^2)", AnswerOrigin::Reference,
         DetClassAnswer{square_class(a * c * (a * c - b * b))}},
        {"commutative, so symmetric", AnswerOrigin::Immediate, SymmetricAnswer{true}},
    };
    return {"planar_quartic", {a.to_string(), b.to_string(), c.to_string()}, alg, top_coefficient(alg, 3),
            std::move(answers)};
}

CorpusEntry quartic_companion(FieldSpec f, const Scalar &delta) {
    if (delta.is_zero())
        throw Error(ErrorCode::ZeroParameter, "delta must be nonzero");
    Scalar vv = -delta.inverse();
    // 1, u, v, uu
    auto product = [&](std::size_t i, std::size_t j) {
        Vector p = zero_vector(f, 4);
        if (i == 1 && j == 1)
            p[3] = Scalar(f, 1);
        else if (i == 2 && j == 2)
            p[3] = vv;
        return p;
    };
    Algebra alg = build(f, {"1", "u", "v", "uu"}, product, true);
    std::vector<KnownAnswer> answers{
        {"det class of delta", AnswerOrigin::Computed, DetClassAnswer{square_class(delta)}},
        {"commutative, so symmetric", AnswerOrigin::Immediate, SymmetricAnswer{true}},
    };
    return {"quartic_companion", {delta.to_string()}, alg, top_coefficient(alg, 3), std::move(answers)};
}

Matrix quartic_isomorphism(FieldSpec f, const Scalar &a, const Scalar &b, const Scalar &c) {
    Scalar delta = a * c * (a * c - b * b);
    Scalar z(f), one(f, 1);
    // columns: images of 1, u, v, uu in the basis 1, x, y, xx
    Vector img1{one, z, z, z};
    Vector img_u{z, z, delta, z};
    Vector img_v{z, a * b, -(a * c), z};
    Vector img_uu{z, z, z, delta * delta * a / c};
    return Matrix::from_columns(f, 4, {img1, img_u, img_v, img_uu});
}

CorpusEntry truncated_poly(FieldSpec f, std::size_t n) {
    if (n == 0)
        throw Error(ErrorCode::ZeroParameter, "truncation degree must be positive");
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i)
        names.push_back(i == 1 ? "t" : "t" + std::to_string(i));
    auto product = [&](std::size_t i, std::size_t j) {
        Vector p = zero_vector(f, n);
        if (i + j < n)
            p[i + j] = Scalar(f, 1);
        return p;
    };
    Algebra alg = build(f, names, product, true);
    std::vector<KnownAnswer> answers{
        {"commutative, so symmetric", AnswerOrigin::Immediate, SymmetricAnswer{true}},
        {"sigma = Id", AnswerOrigin::Immediate, OrderAnswer{1, kDefaultOrderBound}},
    };
    return {"truncated_poly", {std::to_string(n)}, alg, top_coefficient(alg, n - 1), std::move(answers)};
}

CorpusEntry group_algebra(FieldSpec f, const std::vector<std::vector<std::size_t>> &table,
                          std::vector<std::string> names) {
    const std::size_t n = table.size();
    if (n == 0)
        throw Error(ErrorCode::NotAGroup, "empty Cayley table");
    for (const auto &row : table) {
        if (row.size() != n)
            throw Error(ErrorCode::NotAGroup, "Cayley table is not square");
        for (std::size_t x : row)
            if (x >= n)
                throw Error(ErrorCode::NotAGroup, "Cayley table entry out of range");
    }
    std::optional<std::size_t> e;
    for (std::size_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
            ok = table[i][j] == j && table[j][i] == j;
        if (ok)
            e = i;
    }
    if (!e)
        throw Error(ErrorCode::NotAGroup, "no identity element");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw Error(ErrorCode::NotAGroup, "multiplication is not associative at (" +
                                                          std::to_string(i) + ", " + std::to_string(j) +
                                                          ", " + std::to_string(k) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n && !has_inverse; ++j)
            has_inverse = table[i][j] == *e && table[j][i] == *e;
        if (!has_inverse)
            throw Error(ErrorCode::NotAGroup, "element " + std::to_string(i) + " has no inverse");
    }
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(i == *e ? "1" : "g" + std::to_string(i));
    if (names.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "wrong number of element names");

    AlgebraData d{f, names, unit_vector(f, n, *e), {}, std::nullopt};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d.mul.push_back({i, j, table[i][j], Scalar(f, 1)});

    std::uint64_t p = f.characteristic();
    bool p_group = p != 0;
    if (p_group) {
        std::size_t q = n;
        while (q % p == 0)
            q /= p;
        p_group = q == 1 && n > 1;
    }
    if (p_group) {
        // augmentation ideal
        std::vector<Vector> rad;
        for (std::size_t i = 0; i < n; ++i)
            if (i != *e) {
                Vector v = unit_vector(f, n, i);
                v[*e] = Scalar(f, -1);
                rad.push_back(std::move(v));
            }
        d.radical_basis = std::move(rad);
    }
    Algebra alg = Algebra::validate(d);
    std::vector<KnownAnswer> answers{
        {"coefficient of the identity is a symmetric functional", AnswerOrigin::Immediate, SymmetricAnswer{true}},
        {"sigma = Id", AnswerOrigin::Immediate, OrderAnswer{1, kDefaultOrderBound}},
    };
    return {"group_algebra", {std::to_string(n)}, alg, top_coefficient(alg, *e), std::move(answers)};
}

CorpusEntry heisenberg27(FieldSpec f) {
    // (a, b, c) <-> [[1, a, c], [0, 1, b], [0, 0, 1]], index 9a + 3b + c
    std::vector<std::vector<std::size_t>> table(27, std::vector<std::size_t>(27));
    std::vector<std::string> names;
    for (std::size_t g = 0; g < 27; ++g) {
        std::size_t a = g / 9, b = (g / 3) % 3, c = g % 3;
        names.push_back(g == 0 ? "1" : "h" + std::to_string(a) + std::to_string(b) + std::to_string(c));
        for (std::size_t h = 0; h < 27; ++h) {
            std::size_t a2 = h / 9, b2 = (h / 3) % 3, c2 = h % 3;
            table[g][h] = 9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3;
        }
    }
    CorpusEntry entry = group_algebra(f, table, names);
    entry.name = "heisenberg27";
    entry.parameters.clear();
    return entry;
}

const std::vector<std::string> &corpus_names() {
    static const std::vector<std::string> names{"nakayama_nesbitt", "extended_nn",    "planar_quartic",
                                                "quartic_companion", "truncated_poly", "group_algebra",
                                                "heisenberg27"};
    return names;
}

} // namespace frobform
