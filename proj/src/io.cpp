#include "frobform/io.hpp"

#include <iterator>

#include <nlohmann/json.hpp>

namespace frobform {

namespace {

using json = nlohmann::ordered_json;

Error parse_error(const std::string &what) { return Error(ErrorCode::ParseError, what); }

Scalar read_scalar(FieldSpec field, const json &j) {
    if (j.is_string())
        return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer())
        return Scalar::parse(field, j.dump());
    throw parse_error("scalar must be a string literal or an integer, got " + j.dump());
}

Vector read_vector(FieldSpec field, const json &j, std::size_t dim, const std::string &what) {
    if (!j.is_array() || j.size() != dim)
        throw parse_error(what + " must be an array of " + std::to_string(dim) + " scalars");
    Vector v;
    for (const auto &x : j)
        v.push_back(read_scalar(field, x));
    return v;
}

json write_vector(const Vector &v) {
    json out = json::array();
    for (const auto &x : v)
        out.push_back(x.to_string());
    return out;
}

FieldSpec read_field(const json &j) {
    if (j.is_string())
        return FieldSpec::parse(j.get<std::string>());
    if (j.is_object() && j.size() == 1 && j.contains("GF") && j["GF"].is_number_unsigned())
        return FieldSpec::prime(j["GF"].get<std::uint64_t>());
    throw parse_error("field must be \"Q\" or {\"GF\": p}");
}

std::size_t read_index(const json &j, std::size_t dim) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= dim)
        throw parse_error("structure index " + j.dump() + " out of range");
    return j.get<std::size_t>();
}

} // namespace

Functional AlgebraFile::functional(const std::string &name) const {
    for (const auto &[n, v] : functionals)
        if (n == name)
            return Functional(algebra, v);
    throw Error(ErrorCode::UnknownFunctional, "no functional named '" + name + "'");
}

AlgebraFile parse_algebra_file(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw parse_error("algebra file must hold one JSON object");
    for (const char *key : {"field", "dim", "basis", "one", "mul"})
        if (!j.contains(key))
            throw parse_error(std::string("missing field '") + key + "'");

    AlgebraData d;
    d.field = read_field(j["field"]);
    if (!j["dim"].is_number_unsigned())
        throw parse_error("dim must be a nonnegative integer");
    const std::size_t dim = j["dim"].get<std::size_t>();
    if (!j["basis"].is_array() || j["basis"].size() != dim)
        throw parse_error("basis must list dim names");
    for (const auto &name : j["basis"]) {
        if (!name.is_string())
            throw parse_error("basis names must be strings");
        d.basis.push_back(name.get<std::string>());
    }
    d.one = read_vector(d.field, j["one"], dim, "one");
    if (!j["mul"].is_array())
        throw parse_error("mul must be an array");
    for (const auto &e : j["mul"]) {
        if (!e.is_array() || e.size() != 4)
            throw parse_error("mul entries are [i, j, k, scalar]");
        d.mul.push_back({read_index(e[0], dim), read_index(e[1], dim), read_index(e[2], dim),
                         read_scalar(d.field, e[3])});
    }
    if (j.contains("radical_basis")) {
        if (!j["radical_basis"].is_array())
            throw parse_error("radical_basis must be an array of vectors");
        std::vector<Vector> rad;
        for (const auto &v : j["radical_basis"])
            rad.push_back(read_vector(d.field, v, dim, "radical basis vector"));
        d.radical_basis = std::move(rad);
    }

    AlgebraFile file{Algebra::validate(d), {}};
    if (j.contains("functionals")) {
        if (!j["functionals"].is_object())
            throw parse_error("functionals must map names to covectors");
        for (const auto &[name, v] : j["functionals"].items())
            file.functionals.emplace_back(name, read_vector(d.field, v, dim, "functional '" + name + "'"));
    }
    return file;
}

AlgebraFile read_algebra_file(std::istream &in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_algebra_file(text);
}

std::string write_algebra_file(const Algebra &a, const std::vector<NamedFunctional> &functionals) {
    AlgebraData d = a.data();
    json j;
    if (d.field.is_rationals())
        j["field"] = "Q";
    else
        j["field"] = {{"GF", d.field.modulus}};
    j["dim"] = a.dim();
    j["basis"] = d.basis;
    j["one"] = write_vector(d.one);
    json mul = json::array();
    for (const auto &e : d.mul)
        mul.push_back(json::array({e.i, e.j, e.k, e.value.to_string()}));
    j["mul"] = std::move(mul);
    if (d.radical_basis) {
        json rad = json::array();
        for (const auto &v : *d.radical_basis)
            rad.push_back(write_vector(v));
        j["radical_basis"] = std::move(rad);
    }
    json fs = json::object();
    for (const auto &[name, v] : functionals)
        fs[name] = write_vector(v);
    j["functionals"] = std::move(fs);

    // one mul entry per line
    std::string out = "{\n";
    bool first = true;
    for (const auto &[key, value] : j.items()) {
        out += first ? "" : ",\n";
        first = false;
        out += "  " + json(key).dump() + ": ";
        if (key == "mul" || key == "radical_basis") {
            out += "[";
            for (std::size_t i = 0; i < value.size(); ++i)
                out += (i ? ",\n    " : "\n    ") + value[i].dump();
            out += value.empty() ? "]" : "\n  ]";
        } else {
            out += value.dump();
        }
    }
    out += "\n}\n";
    return out;
}

} // namespace frobform
