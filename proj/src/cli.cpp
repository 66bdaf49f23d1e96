#include "svf/cli.hpp"

#include "svf/errors.hpp"
#include "svf/models.hpp"
#include "svf/serialize.hpp"
#include "svf/superfields.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace svf {

namespace {

const std::vector<std::string> kCommands{"report", "theorem4", "theorem5", "model-check", "compare"};

bool needs_type(const std::string& command)
{
    return command == "report" || command == "theorem4" || command == "theorem5";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_interval(const DimInterval& d)
{
    if (d.exact()) return std::to_string(d.lo);
    return "[" + std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]";
}

std::string format_expression(const SparseVector& v, const GradedLSA& a)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
        const bool negative = c < 0;
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Rational mag = abs(c);
        if (mag != 1) out += to_string(mag) + "*";
        out += a.basis()[k].label;
    }
    return out;
}

std::string format_constituents(const std::vector<LeviConstituent>& parts)
{
    std::string out;
    for (const auto& c : parts) {
        if (!out.empty()) out += "; ";
        out += "(" + c.highest.to_string() + ")";
        if (c.multiplicity != 1) out += " x" + std::to_string(c.multiplicity);
    }
    return out;
}

struct NamedModel {
    std::string name;
    GradedLSA algebra;
};

NamedModel load_model(const std::string& kind, const std::string& arg)
{
    if (kind == "vect") {
        int m = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(arg, &used);
            if (used != arg.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("vect needs an integer m, got '" + arg + "'");
        }
        return {"vect(0|" + std::to_string(m) + ")", vect_superpoint(m)};
    }
    if (kind == "hatd") {
        const auto type = SemisimpleType::parse(arg);
        return {"hat_d(" + type.to_string() + ")", hat_d(chevalley_algebra(type).algebra)};
    }
    if (kind == "chevalley") {
        const auto type = SemisimpleType::parse(arg);
        return {"chevalley(" + type.to_string() + ")", chevalley_algebra(type).algebra};
    }
    if (kind == "file") {
        std::ifstream in(arg);
        if (!in) throw InvalidInput("cannot open model file '" + arg + "'");
        Json j;
        try {
            j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput("model file '" + arg + "' is not valid JSON: " + e.what());
        }
        return {arg, glsa_from_json(j)};
    }
    throw InvalidInput("unknown model kind '" + kind + "' (expected vect, hatd, chevalley or file)");
}

NamedModel load_model_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidInput("model spec must look like kind:arg, got '" + spec + "'");
    return load_model(spec.substr(0, colon), spec.substr(colon + 1));
}

SplitSuperdata superdata(const ProblemSpec& spec)
{
    const auto type = SemisimpleType::parse(spec.positional.at(0));
    const auto rs = build_root_system(type);
    ParabolicSpec parabolic(rs, parse_index_set(spec.levi, rs->rank()));
    if (!spec.phi) throw InvalidInput(spec.command + " needs --phi");
    const auto phi = Weight::parse(*spec.phi);
    if (phi.rank() != rs->rank()) throw InvalidInput("--phi has the wrong number of coordinates for " + type.to_string());
    return SplitSuperdata(PModule(parabolic, phi), {spec.assume_alpha_eq, spec.assume_faithful});
}

void print_verdict(const TransitivityVerdict& v, const RootSystem& rs, std::ostream& out)
{
    out << "lambda (highest weight of phi^*): " << v.lambda.to_string() << "\n";
    out << "dominant: " << yes_no(v.dominant) << "\n";
    for (const auto& f : v.per_factor) {
        out << "factor " << f.factor + 1 << " (" << SemisimpleType({rs.type().factors()[f.factor]}).to_string() << "): ";
        if (f.simple_root)
            out << "witness simple root " << *f.simple_root + 1 << " (lambda(h) = " << v.lambda[*f.simple_root] << ")\n";
        else
            out << "no witness\n";
    }
    out << "assumptions used: " << (v.assumptions_used.empty() ? "none" : "") ;
    for (std::size_t i = 0; i < v.assumptions_used.size(); ++i) out << (i ? ", " : "") << v.assumptions_used[i];
    out << "\n";
    out << "verdict: " << v.verdict() << "\n";
}

void print_d0(const D0Structure& d, std::ostream& out)
{
    out << "END E_phi: " << format_interval(d.end_dimension) << " (" << d.end_source
        << "; completely reducible sections " << format_interval(d.end_sections) << ")\n";
    out << "d_0 = END E_phi + g~ (direct), dim g~ = " << d.gtilde_dimension
        << ", dim d_0 = " << format_interval(d.d0_dimension) << ", radical dim " << d.radical_dimension << "\n";
}

int cmd_report(const ProblemSpec& spec, std::ostream& out)
{
    const auto s = superdata(spec);
    const auto dims = graded_dim_report(s);
    const auto verdict = theorem4_check(s);
    std::optional<D0Structure> d0;
    if (verdict.positive) d0 = d0_structure(s);

    if (spec.json) {
        Json j{{"input", {{"type", s.type().to_string()},
                          {"levi", index_set_to_string(s.parabolic().levi())},
                          {"phi", to_json(s.phi().highest_weight())}}},
               {"assumptions", to_json(s.assumptions())},
               {"superdimension", {s.even_dimension(), s.odd_dimension()}}};
        j.update(to_json(dims));
        j["verdicts"] = {{"transitivity", to_json(verdict)}, {"d0_structure", d0 ? to_json(*d0) : Json(nullptr)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "type: " << s.type().to_string() << ", levi: " << index_set_to_string(s.parabolic().levi())
        << ", phi: " << s.phi().highest_weight().to_string() << "\n";
    out << "superdimension: (" << s.even_dimension() << "|" << s.odd_dimension() << ")\n";
    out << "homogeneous: " << yes_no(dims.homogeneous) << "\n";
    for (const auto& e : dims.degrees) {
        out << "d_" << e.p << ": " << format_interval(e.dimension) << " (" << to_string(e.method) << ")";
        if (!e.constituents.empty()) out << " constituents " << format_constituents(e.constituents);
        out << "\n";
    }
    print_verdict(verdict, s.parabolic().system(), out);
    if (d0) print_d0(*d0, out);
    else out << "d_0 structure: not available (" << verdict.verdict() << ")\n";
    out << "assumptions: alpha_d0_equals_dt_g=" << yes_no(s.assumptions().alpha_d0_equals_dt_g)
        << ", G_locally_faithful=" << yes_no(s.assumptions().G_locally_faithful) << "\n";
    return 0;
}

int cmd_theorem4(const ProblemSpec& spec, std::ostream& out)
{
    const auto s = superdata(spec);
    const auto verdict = theorem4_check(s);
    if (spec.json) {
        Json j{{"input", {{"type", s.type().to_string()},
                          {"levi", index_set_to_string(s.parabolic().levi())},
                          {"phi", to_json(s.phi().highest_weight())}}},
               {"assumptions", to_json(s.assumptions())}};
        j.update(to_json(verdict));
        out << j.dump(2) << "\n";
        return 0;
    }
    print_verdict(verdict, s.parabolic().system(), out);
    return 0;
}

int cmd_theorem5(const ProblemSpec& spec, std::ostream& out)
{
    const auto type = SemisimpleType::parse(spec.positional.at(0));
    const auto rs = build_root_system(type);
    const auto r = cotangent_report(type, parse_index_set(spec.levi, rs->rank()));
    if (spec.json) {
        out << to_json(r).dump(2) << "\n";
        return 0;
    }
    out << "cotangent superalgebra: " << type.to_string() << ", levi " << index_set_to_string(r.levi) << "\n";
    out << "flag dimension: " << r.manifold_dimension << "\n";
    auto count = [](const std::optional<Multiplicity>& c) { return c ? std::to_string(*c) : std::string("skipped"); };
    out << "dim g: " << r.algebra_dimension << "\n";
    out << "sections of T: weight bound " << r.tangent_bound << (r.tangent_bound_tight ? " (tight)" : "")
        << ", explicit count " << count(r.tangent_exact) << "\n";
    if (!r.tangent_is_adjoint) out << "note: sections of T exceed dim g (automorphisms of G/P form a larger group)\n";
    out << "END T: assumed " << r.end_assumed << ", weight bound " << r.end_bound << ", explicit count "
        << count(r.end_exact) << "\n";
    if (r.vanishing.empty()) out << "vanishing checks: none needed\n";
    for (const auto& v : r.vanishing) {
        out << "vanishing p=" << v.p << ": " << (v.vanishes ? "ok" : "FAILED") << " (" << v.weight_count << " weights, "
            << v.dominant_weights.size() << " dominant";
        if (v.exact) out << ", explicit count " << *v.exact;
        out << ")\n";
    }
    if (r.graded_dims) {
        const auto& [a, b, c] = *r.graded_dims;
        out << "graded dims: " << format_graded_vector({static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                                        static_cast<std::size_t>(c)})
            << "\n";
        out << "total: " << *r.total << "\n";
        out << "hat_d match: " << yes_no(r.hat_d_match) << "\n";
    } else {
        out << "graded dims: unavailable (vanishing failed at p =";
        for (int p : r.failed_degrees) out << " " << p;
        out << ")\n";
    }
    return 0;
}

int cmd_model_check(const ProblemSpec& spec, std::ostream& out)
{
    std::string arg = spec.positional.size() > 1 ? spec.positional[1] : "";
    if (spec.positional.at(0) == "vect") {
        if (!spec.m && arg.empty()) throw InvalidInput("model-check vect needs --m");
        if (spec.m) arg = std::to_string(*spec.m);
    }
    const auto model = load_model(spec.positional.at(0), arg);
    const auto& a = model.algebra;
    if (spec.export_model) {
        out << glsa_to_json(a).dump() << "\n";
        return 0;
    }
    const auto violations = check_super_jacobi(a);
    const bool transitive = check_transitive(a);
    const bool has_minus_one = !a.indices_of_degree(-1).empty();
    std::optional<bool> irreducible;
    if (has_minus_one) irreducible = check_irreducible(a);
    const auto grading = find_grading_element(a);
    std::size_t even = 0;
    for (const auto& b : a.basis()) even += b.parity == Parity::Even;

    if (spec.json) {
        Json viol = Json::array();
        for (const auto& v : violations)
            viol.push_back({a.basis()[v.x].label, a.basis()[v.y].label, a.basis()[v.z].label});
        Json j{{"model", model.name},
               {"dimension", a.dimension()},
               {"superdimension", {even, a.dimension() - even}},
               {"graded_vector", graded_vector(a)},
               {"jacobi_ok", violations.empty()},
               {"jacobi_violations", viol},
               {"transitive", transitive},
               {"irreducible", irreducible ? Json(*irreducible) : Json(nullptr)},
               {"grading_element", grading ? to_json(*grading) : Json(nullptr)},
               {"degree_zero_center", degree_zero_center(a).size()},
               {"derived_dimension", derived_dimension(a)}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "model: " << model.name << "\n";
    out << "dimension: " << a.dimension() << "\n";
    out << "superdimension: (" << even << "|" << a.dimension() - even << ")\n";
    out << "graded dims: " << format_graded_vector(graded_vector(a)) << "\n";
    out << "super-Jacobi: " << (violations.empty() ? "ok" : "FAILED") << "\n";
    for (const auto& v : violations)
        out << "  violation at (" << a.basis()[v.x].label << ", " << a.basis()[v.y].label << ", "
            << a.basis()[v.z].label << ")\n";
    out << "transitive: " << (transitive ? "ok" : "no") << "\n";
    out << "irreducible: " << (irreducible ? (*irreducible ? "ok" : "no") : "n/a (degree -1 is zero)") << "\n";
    out << "grading element: " << (grading ? format_expression(*grading, a) : "none") << "\n";
    out << "degree-0 center dimension: " << degree_zero_center(a).size() << "\n";
    out << "derived dimension: " << derived_dimension(a) << "\n";
    return 0;
}

int cmd_compare(const ProblemSpec& spec, std::ostream& out)
{
    if (spec.positional.size() != 2) throw InvalidInput("compare needs exactly two model specs");
    const auto a = load_model_spec(spec.positional[0]);
    const auto b = load_model_spec(spec.positional[1]);
    const auto c = compare_invariants(a.algebra, b.algebra);
    if (spec.json) {
        Json j{{"a", a.name}, {"b", b.name}};
        j.update(to_json(c));
        out << j.dump(2) << "\n";
        return 0;
    }
    auto eq = [](bool e) { return e ? "equal" : "different"; };
    out << "a: " << a.name << "\nb: " << b.name << "\n";
    out << "superdimension: (" << c.superdim_a.first << "|" << c.superdim_a.second << ") vs (" << c.superdim_b.first
        << "|" << c.superdim_b.second << ") " << eq(c.superdim_equal) << "\n";
    out << "graded dims: " << format_graded_vector(c.graded_a) << " vs " << format_graded_vector(c.graded_b) << " "
        << eq(c.graded_equal) << "\n";
    out << "derived dimension: " << c.derived_a << " vs " << c.derived_b << " " << eq(c.derived_equal) << "\n";
    out << "even derived dimension: " << c.even_derived_a << " vs " << c.even_derived_b << " "
        << eq(c.even_derived_equal) << "\n";
    out << "graded isomorphism: " << c.graded_isomorphism << "\n";
    out << "abstract isomorphism: " << c.abstract_isomorphism << "\n";
    out << "invariant obstructions: ";
    if (c.invariant_obstructions.empty()) out << "none";
    for (std::size_t i = 0; i < c.invariant_obstructions.size(); ++i) out << (i ? ", " : "") << c.invariant_obstructions[i];
    out << "\n";
    return 0;
}

}  // namespace

ProblemSpec parse(const std::vector<std::string>& args)
{
    if (args.empty()) throw InvalidInput("missing command (report, theorem4, theorem5, model-check, compare)");
    ProblemSpec spec;
    spec.command = args[0];
    if (std::find(kCommands.begin(), kCommands.end(), spec.command) == kCommands.end())
        throw InvalidInput("unknown command '" + spec.command + "'");

    CLI::App app{"svf " + spec.command};
    app.add_option("args", spec.positional, "type, or model kind and argument");
    std::string levi;
    auto* levi_opt = app.add_option("--levi", levi, "1-based simple roots of the Levi, 'none' or 'all'");
    std::string phi;
    auto* phi_opt = app.add_option("--phi", phi, "highest weight in fundamental coordinates");
    app.add_flag("--assume-alpha-eq", spec.assume_alpha_eq);
    app.add_flag("--assume-faithful", spec.assume_faithful);
    int m = 0;
    auto* m_opt = app.add_option("--m", m, "number of odd generators");
    app.add_flag("--export", spec.export_model);
    app.add_flag("--json", spec.json);

    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        throw InvalidInput(std::string("bad arguments: ") + e.what());
    }
    if (*phi_opt) spec.phi = Weight::parse(phi).to_string();
    if (*m_opt) spec.m = m;

    if (needs_type(spec.command)) {
        if (spec.positional.size() != 1) throw InvalidInput(spec.command + " needs exactly one type argument");
        const auto type = SemisimpleType::parse(spec.positional[0]);
        spec.positional[0] = type.to_string();
        if (*levi_opt) spec.levi = index_set_to_string(parse_index_set(levi, type.rank()));
    } else {
        if (*levi_opt || *phi_opt) throw InvalidInput(spec.command + " takes no --levi or --phi");
        if (spec.positional.empty()) throw InvalidInput(spec.command + " needs a model");
        if (spec.command == "model-check" && spec.positional.size() > 2)
            throw InvalidInput("model-check takes a model kind and at most one argument");
    }
    return spec;
}

std::string render(const ProblemSpec& spec)
{
    std::string out = spec.command;
    for (const auto& p : spec.positional) out += " " + p;
    if (needs_type(spec.command)) out += " --levi " + spec.levi;
    if (spec.phi) out += " --phi " + *spec.phi;
    if (spec.assume_alpha_eq) out += " --assume-alpha-eq";
    if (spec.assume_faithful) out += " --assume-faithful";
    if (spec.m) out += " --m " + std::to_string(*spec.m);
    if (spec.export_model) out += " --export";
    if (spec.json) out += " --json";
    return out;
}

int run(const ProblemSpec& spec, std::ostream& out, std::ostream& err)
{
    try {
        if (spec.command == "report") return cmd_report(spec, out);
        if (spec.command == "theorem4") return cmd_theorem4(spec, out);
        if (spec.command == "theorem5") return cmd_theorem5(spec, out);
        if (spec.command == "model-check") return cmd_model_check(spec, out);
        if (spec.command == "compare") return cmd_compare(spec, out);
        throw InvalidInput("unknown command '" + spec.command + "'");
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const NotCompletelyReducible& e) {
        err << "internal error: invariant violated: " << e.what() << "\n";
        return 3;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    ProblemSpec spec;
    try {
        spec = parse(args);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n"
            << "usage: svf report|theorem4|theorem5 TYPE [--levi L] [--phi W] [--assume-alpha-eq] "
               "[--assume-faithful] [--json]\n"
               "       svf model-check vect --m N | hatd TYPE | chevalley TYPE | file PATH [--export] [--json]\n"
               "       svf compare KIND:ARG KIND:ARG [--json]\n";
        return 2;
    }
    return run(spec, out, err);
}

}  // namespace svf
