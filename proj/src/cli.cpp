#include "frobform/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frobform/corpus.hpp"
#include "frobform/expression.hpp"
#include "frobform/homothety.hpp"
#include "frobform/io.hpp"

namespace frobform {

namespace {

std::uint64_t env_value(const char *name, std::uint64_t fallback, bool positive) {
    const char *raw = std::getenv(name);
    if (!raw || !*raw)
        return fallback;
    std::string_view s(raw);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || (positive && v == 0))
        throw Error(ErrorCode::ParseError, std::string("bad value for ") + name + ": '" + raw + "'");
    return v;
}

struct Session {
    std::istream &in;
    std::ostream &out;
    SessionConfig config;
};

AlgebraFile load(Session &s, const std::string &path) {
    if (path == "-")
        return read_algebra_file(s.in);
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_algebra_file(f);
}

void save(Session &s, const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        s.out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    f << text;
}

std::string vector_text(const Vector &v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].to_string();
    return out + "]";
}

void print_matrix(std::ostream &out, const std::string &title, const Matrix &m) {
    out << title << ":\n" << m.to_string();
}

void print_images(std::ostream &out, const Endo &phi, const std::string &name) {
    const Algebra &a = phi.algebra();
    for (std::size_t i = 0; i < a.dim(); ++i)
        out << name << "(" << a.basis_names()[i] << ") = " << phi(a.basis_element(i)).to_string() << "\n";
}

std::string order_text(const std::optional<std::size_t> &n) { return n ? std::to_string(*n) : "NONE"; }

Form load_form(Session &s, const std::string &path, const std::string &functional, AlgebraFile *file = nullptr) {
    AlgebraFile f = load(s, path);
    Form b = form_from_functional(f.functional(functional));
    if (file)
        *file = std::move(f);
    return b;
}

void cmd_validate(Session &s, const std::string &path) {
    AlgebraFile f = load(s, path);
    const Algebra &a = f.algebra;
    s.out << "field: " << a.field().to_string() << "\n";
    s.out << "dim: " << a.dim() << "\n";
    s.out << "commutative: " << (a.is_commutative() ? "yes" : "no") << "\n";
    s.out << "functionals:";
    for (const auto &[name, v] : f.functionals)
        s.out << " " << name;
    s.out << "\nVERDICT: VALID\n";
}

void cmd_radical(Session &s, const std::string &path) {
    AlgebraFile f = load(s, path);
    auto rad = radical(f.algebra);
    s.out << "source: " << (f.algebra.declared_radical() ? "declared" : "trace form") << "\n";
    for (const auto &v : rad)
        s.out << "  " << f.algebra.element(v).to_string() << "\n";
    s.out << "VERDICT: RADICAL DIM " << rad.size() << "\n";
}

void cmd_local(Session &s, const std::string &path) {
    AlgebraFile f = load(s, path);
    auto local = local_structure(f.algebra);
    if (!local) {
        s.out << "radical codimension is not 1\nVERDICT: NOT-LOCAL\n";
        return;
    }
    s.out << "nilpotency: m^" << local->nilpotency << " != 0 = m^" << local->nilpotency + 1 << "\n";
    for (std::size_t k = 0; k < local->powers.size(); ++k)
        s.out << "dim m^" << k + 1 << ": " << local->powers[k].size() << "\n";
    s.out << "filtered basis:\n";
    for (std::size_t i = 0; i < local->filtered_basis.size(); ++i)
        s.out << "  depth " << local->depth[i] << ": " << f.algebra.element(local->filtered_basis[i]).to_string()
              << "\n";
    s.out << "residue: " << vector_text(local->residue_covector) << "\n";
    s.out << "VERDICT: LOCAL " << local->nilpotency << "\n";
}

void cmd_frobenius(Session &s, const std::string &path) {
    AlgebraFile f = load(s, path);
    auto lambda = find_frobenius_functional(f.algebra, s.config.seed);
    if (!lambda) {
        s.out << "no nondegenerate functional found\nVERDICT: INCONCLUSIVE\n";
        return;
    }
    s.out << "functional: " << vector_text(lambda->covector()) << "\n";
    s.out << "VERDICT: FROBENIUS\n";
}

void cmd_form(Session &s, const std::string &path, const std::string &functional) {
    Form b = load_form(s, path, functional);
    print_matrix(s.out, "B", b.matrix());
    s.out << "det: " << det(b.matrix()).to_string() << "\n";
    s.out << "VERDICT: FORM NONDEGENERATE " << (b.symmetric() ? "SYMMETRIC" : "NONSYMMETRIC") << "\n";
}

void cmd_nakayama(Session &s, const std::string &path, const std::string &functional) {
    Form b = load_form(s, path, functional);
    Endo sigma = nakayama(b);
    print_matrix(s.out, "Sigma = B^-1 B^T", sigma.matrix());
    print_images(s.out, sigma, "sigma");
    auto order = automorphism_order(sigma, s.config.order_bound);
    s.out << "order: " << order_text(order) << "\n";
    std::string inner;
    try {
        auto io = inner_order(sigma, s.config.order_bound);
        inner = io ? std::to_string(io->n) : "NONE";
        if (io)
            s.out << "inner order: " << io->n << " with sigma^" << io->n << " = I_a, a = " << io->a.to_string()
                  << "\n";
        else
            s.out << "inner order: none up to " << s.config.order_bound << "\n";
    } catch (const Error &e) {
        if (e.code() != ErrorCode::Incomplete)
            throw;
        inner = "UNDECIDED";
        s.out << "inner order: undecided (" << e.what() << ")\n";
    }
    s.out << "VERDICT: ORDER " << order_text(order) << " INNER-ORDER " << inner << "\n";
}

std::size_t required_order(const Endo &sigma, std::size_t bound) {
    auto order = automorphism_order(sigma, bound);
    if (!order)
        throw Error(ErrorCode::OrderBoundExceeded,
                    "Nakayama automorphism has no finite order up to " + std::to_string(bound));
    return *order;
}

void cmd_norm(Session &s, const std::string &path, const std::string &functional, const std::string &unit) {
    Form b = load_form(s, path, functional);
    Element u = parse_element(unit, b.algebra());
    Endo sigma = nakayama(b);
    std::size_t n = required_order(sigma, s.config.order_bound);
    Element nu = norm(NormContext(sigma, n), u);
    bool central = is_central(nu);
    s.out << "u = " << u.to_string() << "\n";
    s.out << "sigma order: " << n << "\n";
    s.out << "N_sigma(u) = " << nu.to_string() << "\n";
    s.out << "VERDICT: NORM " << (central ? "CENTRAL" : "NOT-CENTRAL") << "\n";
}

void cmd_twist(Session &s, const std::string &path, const std::string &functional, const std::string &unit,
               const std::string &output, std::string name) {
    AlgebraFile f = load(s, path);
    Form b = form_from_functional(f.functional(functional));
    Element u = parse_element(unit, f.algebra);
    Form b2 = twist(b, u);
    Functional lambda2 = functional_from_form(b2);
    if (name.empty())
        name = functional + "_twist";
    auto existing = std::find_if(f.functionals.begin(), f.functionals.end(),
                                 [&](const NamedFunctional &nf) { return nf.first == name; });
    if (existing != f.functionals.end())
        existing->second = lambda2.covector();
    else
        f.functionals.emplace_back(name, lambda2.covector());
    std::string text = write_algebra_file(f.algebra, f.functionals);
    if (output.empty()) {
        print_matrix(s.out, "B'", b2.matrix());
        s.out << name << ": " << vector_text(lambda2.covector()) << "\n";
    } else {
        save(s, output, text);
        s.out << "wrote " << output << " with functional " << name << "\n";
    }
    s.out << "VERDICT: TWISTED " << (b2.symmetric() ? "SYMMETRIC" : "NONSYMMETRIC") << "\n";
}

void cmd_straighten(Session &s, const std::string &path, const std::string &functional) {
    Form b = load_form(s, path, functional);
    StraightenedForm st = straighten_form(b, s.config.order_bound);
    s.out << "inner order: " << st.n << "\n";
    s.out << "a = " << st.a.to_string() << "\n";
    s.out << "u = " << st.u.to_string() << "\n";
    print_matrix(s.out, "B''", st.form.matrix());
    s.out << "functional: " << vector_text(functional_from_form(st.form).covector()) << "\n";
    auto order = automorphism_order(nakayama(st.form), s.config.order_bound);
    s.out << "VERDICT: STRAIGHTENED ORDER " << order_text(order) << "\n";
}

void cmd_detclass(Session &s, const std::string &path, const std::string &functional) {
    Form b = load_form(s, path, functional);
    s.out << "det: " << det(b.matrix()).to_string() << "\n";
    SquareClassRep c = det_class(b, s.config.factor_bound);
    s.out << "VERDICT: CLASS " << c.to_string() << "\n";
}

void print_report(std::ostream &out, const ObstructionReport &r) {
    for (const auto &c : r.checks)
        out << "check " << c.name << ": " << outcome_name(c.outcome) << " (" << c.detail << ")\n";
    if (r.witness) {
        out << "alpha = " << r.witness->alpha.to_string() << "\n";
        print_matrix(out, "V", r.witness->v);
    }
}

void cmd_probe(Session &s, const std::string &path, const std::string &functional, const std::string &unit) {
    Form b = load_form(s, path, functional);
    Element u = parse_element(unit, b.algebra());
    ObstructionReport r =
        homothety_probe(b, twist(b, u), s.config.order_bound, s.config.seed, s.config.factor_bound);
    s.out << "u = " << u.to_string() << "\n";
    print_report(s.out, r);
    s.out << "VERDICT: " << verdict_name(r.verdict);
    if (r.reason)
        s.out << " " << reason_name(*r.reason);
    s.out << "\n";
}

void cmd_conjecture(Session &s, const std::string &path, const std::string &functional, std::size_t trials,
                    unsigned threads) {
    Form b = load_form(s, path, functional);
    ConjectureSummary sum = conjecture_probe(b, trials, s.config.seed, s.config.order_bound, threads);
    s.out << "seed: " << sum.seed << "\n";
    s.out << "trials: " << sum.trials << "\n";
    s.out << "sigma order: " << sum.order << "\n";
    s.out << "central norm, unobstructed: " << sum.central_unobstructed << "\n";
    s.out << "central norm, obstructed: " << sum.central_obstructed << "\n";
    s.out << "noncentral norm, obstructed: " << sum.noncentral_obstructed << "\n";
    s.out << "noncentral norm, inconclusive: " << sum.noncentral_inconclusive << "\n";
    s.out << "witnesses: " << sum.witnesses << "\n";
    for (const auto &c : sum.candidates) {
        s.out << "candidate trial " << c.trial << " seed " << c.seed << ": u = " << c.u.to_string()
              << ", N = " << c.norm.to_string() << "\n";
        print_report(s.out, c.report);
    }
    s.out << "VERDICT: CANDIDATES " << sum.candidates.size() << "\n";
}

std::vector<std::vector<std::size_t>> read_table(Session &s, const std::string &path,
                                                 std::vector<std::string> &names) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(s.in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f)
            throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        auto j = nlohmann::json::parse(text);
        if (j.is_object()) {
            if (j.contains("names"))
                names = j.at("names").get<std::vector<std::string>>();
            return j.at("table").get<std::vector<std::vector<std::size_t>>>();
        }
        return j.get<std::vector<std::vector<std::size_t>>>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("bad Cayley table: ") + e.what());
    }
}

struct CorpusArgs {
    std::string name;
    std::string field = "Q";
    std::string alpha = "1";
    std::string a = "1", b = "1", c = "2";
    std::string delta = "2";
    std::size_t n = 4;
    std::string table;
    std::string output;
};

void cmd_corpus(Session &s, const CorpusArgs &args) {
    FieldSpec f = FieldSpec::parse(args.field);
    auto sc = [&](const std::string &lit) { return Scalar::parse(f, lit); };
    std::optional<CorpusEntry> entry;
    if (args.name == "nakayama_nesbitt")
        entry = nakayama_nesbitt(f, sc(args.alpha));
    else if (args.name == "extended_nn")
        entry = extended_nn(f);
    else if (args.name == "planar_quartic")
        entry = planar_quartic(f, sc(args.a), sc(args.b), sc(args.c));
    else if (args.name == "quartic_companion")
        entry = quartic_companion(f, sc(args.delta));
    else if (args.name == "truncated_poly")
        entry = truncated_poly(f, args.n);
    else if (args.name == "heisenberg27")
        entry = heisenberg27(f);
    else if (args.name == "group_algebra") {
        if (args.table.empty())
            throw Error(ErrorCode::ParseError, "group_algebra needs --table FILE");
        std::vector<std::string> names;
        auto table = read_table(s, args.table, names);
        entry = group_algebra(f, table, names);
    } else {
        std::string known;
        for (const auto &n : corpus_names())
            known += " " + n;
        throw Error(ErrorCode::ParseError, "unknown corpus entry '" + args.name + "'; known:" + known);
    }
    save(s, args.output, write_algebra_file(entry->algebra, {{"lambda", entry->functional.covector()}}));
    if (!args.output.empty() && args.output != "-")
        s.out << "wrote " << args.output << "\nVERDICT: WRITTEN " << entry->name << "\n";
}

} // namespace

SessionConfig SessionConfig::from_environment() {
    SessionConfig c;
    c.seed = env_value("FROBFORM_SEED", c.seed, false);
    c.order_bound = env_value("FROBFORM_ORDER_BOUND", c.order_bound, true);
    c.probe_trials = env_value("FROBFORM_TRIALS", c.probe_trials, true);
    c.factor_bound = env_value("FROBFORM_FACTOR_BOUND", c.factor_bound, true);
    return c;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Frobenius forms on finite-dimensional algebras over Q and GF(p)", "frobform"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string functional = "lambda";
    std::string unit;
    std::string output;
    std::string twist_name;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    unsigned threads = 0;
    CorpusArgs corpus;

    auto with_file = [&](CLI::App *sub) { sub->add_option("FILE", file, "Algebra definition file, - for stdin"); };
    auto with_functional = [&](CLI::App *sub) {
        with_file(sub);
        sub->add_option("--functional", functional, "Name of the functional defining the form");
    };
    auto with_unit = [&](CLI::App *sub) {
        with_functional(sub);
        sub->add_option("--unit", unit, "Unit, as an element expression")->required();
    };

    auto *validate = app.add_subcommand("validate", "Check associativity, unit and radical");
    with_file(validate);
    auto *radical_cmd = app.add_subcommand("radical", "Basis of the radical");
    with_file(radical_cmd);
    auto *local = app.add_subcommand("local", "Filtration data of a local algebra");
    with_file(local);
    auto *frobenius = app.add_subcommand("frobenius", "Search for a Frobenius functional");
    with_file(frobenius);
    frobenius->add_option("--seed", seed, "Random seed");
    auto *form = app.add_subcommand("form", "Form matrix of a functional");
    with_functional(form);
    auto *nakayama_cmd = app.add_subcommand("nakayama", "Nakayama automorphism, order and inner order");
    with_functional(nakayama_cmd);
    auto *norm_cmd = app.add_subcommand("norm", "sigma-norm of a unit");
    with_unit(norm_cmd);
    auto *twist_cmd = app.add_subcommand("twist", "Twist a form by a unit");
    with_unit(twist_cmd);
    twist_cmd->add_option("-o,--output", output, "Write the algebra with the twisted functional");
    twist_cmd->add_option("--name", twist_name, "Name of the twisted functional");
    auto *straighten = app.add_subcommand("straighten", "Twist to a form with sigma^n = Id");
    with_functional(straighten);
    auto *detclass = app.add_subcommand("detclass", "Square class of the determinant");
    with_functional(detclass);
    auto *probe = app.add_subcommand("probe", "Homothety checks against the twist by a unit");
    with_unit(probe);
    probe->add_option("--seed", seed, "Random seed");
    auto *conjecture = app.add_subcommand("conjecture", "Search random twists for counterexample candidates");
    with_functional(conjecture);
    conjecture->add_option("--trials", trials, "Number of trials");
    conjecture->add_option("--seed", seed, "Random seed");
    conjecture->add_option("--threads", threads, "Worker threads, 0 for automatic");
    auto *corpus_cmd = app.add_subcommand("corpus", "Write a built-in algebra definition");
    corpus_cmd->add_option("NAME", corpus.name, "Entry name")->required();
    corpus_cmd->add_option("--field", corpus.field, "Q or GF(p)");
    corpus_cmd->add_option("--alpha", corpus.alpha, "nakayama_nesbitt parameter");
    corpus_cmd->add_option("--a", corpus.a, "planar_quartic parameter a");
    corpus_cmd->add_option("--b", corpus.b, "planar_quartic parameter b");
    corpus_cmd->add_option("--c", corpus.c, "planar_quartic parameter c");
    corpus_cmd->add_option("--delta", corpus.delta, "quartic_companion parameter");
    corpus_cmd->add_option("--n", corpus.n, "truncated_poly degree");
    corpus_cmd->add_option("--table", corpus.table, "Cayley table JSON for group_algebra");
    corpus_cmd->add_option("-o,--output", corpus.output, "Output file, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        Session s{in, out, SessionConfig::from_environment()};
        if (seed)
            s.config.seed = *seed;
        if (trials) {
            if (*trials == 0)
                throw Error(ErrorCode::ZeroParameter, "trials must be positive");
            s.config.probe_trials = *trials;
        }
        if (validate->parsed())
            cmd_validate(s, file);
        else if (radical_cmd->parsed())
            cmd_radical(s, file);
        else if (local->parsed())
            cmd_local(s, file);
        else if (frobenius->parsed())
            cmd_frobenius(s, file);
        else if (form->parsed())
            cmd_form(s, file, functional);
        else if (nakayama_cmd->parsed())
            cmd_nakayama(s, file, functional);
        else if (norm_cmd->parsed())
            cmd_norm(s, file, functional, unit);
        else if (twist_cmd->parsed())
            cmd_twist(s, file, functional, unit, output, twist_name);
        else if (straighten->parsed())
            cmd_straighten(s, file, functional);
        else if (detclass->parsed())
            cmd_detclass(s, file, functional);
        else if (probe->parsed())
            cmd_probe(s, file, functional, unit);
        else if (conjecture->parsed())
            cmd_conjecture(s, file, functional, s.config.probe_trials, threads);
        else if (corpus_cmd->parsed())
            cmd_corpus(s, corpus);
        return 0;
    } catch (const InternalError &e) {
        out << "VERDICT: INTERNAL-ERROR\n";
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        out << "VERDICT: ERROR " << error_code_name(e.code()) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace frobform
