#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobform/frobenius.hpp"

namespace frobform {

/// Where a known answer comes from.
enum class AnswerOrigin { Reference, Computed, Immediate };

std::string_view origin_name(AnswerOrigin o);

/// sigma(basis element `generator`) = image.
struct SigmaImage {
    std::string generator;
    Vector image;
};

/// Order of the Nakayama automorphism, or none up to `bound`.
struct OrderAnswer {
    std::optional<std::size_t> order;
    std::size_t bound = kDefaultOrderBound;
};

/// N_sigma(unit) over the Nakayama automorphism of the distinguished form.
struct NormAnswer {
    Vector unit;
    Vector norm;
    bool central = false;
};

struct DetClassAnswer {
    SquareClassRep rep;
};

/// Matrix of twist(B, unit); the unit is 1 for B itself.
struct FormMatrixAnswer {
    Vector unit;
    Matrix matrix;
};

struct SymmetricAnswer {
    bool symmetric = false;
};

using AnswerValue =
    std::variant<SigmaImage, OrderAnswer, NormAnswer, DetClassAnswer, FormMatrixAnswer, SymmetricAnswer>;

struct KnownAnswer {
    std::string label;
    AnswerOrigin origin;
    AnswerValue value;
};

struct CorpusEntry {
    std::string name;
    std::vector<std::string> parameters;
    Algebra algebra;
    Functional functional;
    std::vector<KnownAnswer> answers;

    Form form() const { return form_from_functional(functional); }
};

/// Recomputes a known answer from the entry's algebra and functional.
bool check_known_answer(const CorpusEntry &entry, const KnownAnswer &answer);

/// k<x,y>/(x^2, y^2, yx - alpha xy), basis {1, x, y, xy}. Throws ZeroParameter.
CorpusEntry nakayama_nesbitt(FieldSpec field, const Scalar &alpha);

/// k<x,y>/(x^2, y^2, xyx - yxy), basis {1, x, y, xy, yx, xyx}.
CorpusEntry extended_nn(FieldSpec field);

/// k[x,y]/(a x^2 = b xy = c y^2, (x,y)^3), basis {1, x, y, xx}.
/// Throws DegenerateParameters when a, b or c is zero or b^2 = ac.
CorpusEntry planar_quartic(FieldSpec field, const Scalar &a, const Scalar &b, const Scalar &c);

/// k[u,v]/(u^2 = -delta v^2, uv, (u,v)^3), basis {1, u, v, uu}. Throws ZeroParameter.
CorpusEntry quartic_companion(FieldSpec field, const Scalar &delta);

/// Matrix of u -> delta y, v -> ab x - ac y from quartic_companion(delta) to
/// planar_quartic(a, b, c), where delta = ac(ac - b^2).
Matrix quartic_isomorphism(FieldSpec field, const Scalar &a, const Scalar &b, const Scalar &c);

/// k[t]/(t^n), basis {1, t, t2, ..., t(n-1)}. Throws ZeroParameter for n = 0.
CorpusEntry truncated_poly(FieldSpec field, std::size_t n);

/// Group algebra kG with table[i][j] the index of g_i g_j. Throws NotAGroup.
CorpusEntry group_algebra(FieldSpec field, const std::vector<std::vector<std::size_t>> &table,
                          std::vector<std::string> names = {});

/// Group algebra of the Heisenberg group of order 27.
CorpusEntry heisenberg27(FieldSpec field);

/// Names accepted by build_corpus.
const std::vector<std::string> &corpus_names();

} // namespace frobform
