#include "svf/serialize.hpp"

#include "svf/errors.hpp"

namespace svf {

namespace {

Json coefficient(const Rational& q)
{
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return to_string(q);
}

Rational read_coefficient(const nlohmann::json& j)
{
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidInput("coefficient must be an integer or a \"p/q\" string");
}

Json constituents(const std::vector<LeviConstituent>& parts)
{
    Json out = Json::array();
    for (const auto& c : parts) out.push_back({{"highest_weight", to_json(c.highest)}, {"multiplicity", c.multiplicity}});
    return out;
}

}  // namespace

Json to_json(const Weight& w)
{
    return Json(w.coords());
}

Json to_json(const DimInterval& d)
{
    if (d.exact()) return Json{{"dim", d.lo}};
    return Json{{"interval", {d.lo, d.hi}}};
}

Json to_json(const Character& c)
{
    Json weights = Json::array();
    for (const auto& [w, m] : c.weights()) weights.push_back({to_json(w), m});
    return Json{{"type", c.system().type().to_string()},
                {"virtual", c.is_virtual()},
                {"dimension", c.dimension()},
                {"weights", weights}};
}

Json to_json(const SectionReport& r)
{
    Json j = to_json(r.dimension);
    j["method"] = to_string(r.method);
    j["constituents"] = constituents(r.constituents);
    return j;
}

Json to_json(const Assumptions& a)
{
    return Json{{"alpha_d0_equals_dt_g", a.alpha_d0_equals_dt_g}, {"G_locally_faithful", a.G_locally_faithful}};
}

Json to_json(const GradedDimReport& r)
{
    Json degrees = Json::array();
    for (const auto& e : r.degrees) {
        Json d{{"p", e.p}};
        d.update(to_json(e.dimension));
        d["method"] = to_string(e.method);
        d["constituents"] = constituents(e.constituents);
        degrees.push_back(d);
    }
    return Json{{"homogeneous", r.homogeneous}, {"degrees", degrees}};
}

Json to_json(const TransitivityVerdict& v)
{
    Json factors = Json::array();
    for (const auto& f : v.per_factor) {
        Json w = nullptr;
        if (f.simple_root) w = *f.simple_root + 1;
        factors.push_back({{"factor", f.factor + 1}, {"witness", w}});
    }
    return Json{{"lambda", to_json(v.lambda)},
                {"dominant", v.dominant},
                {"per_factor_positive", factors},
                {"assumptions_used", v.assumptions_used},
                {"verdict", v.verdict()}};
}

Json to_json(const D0Structure& d)
{
    return Json{{"end", to_json(d.end_dimension)},
                {"end_source", d.end_source},
                {"end_sections_check", to_json(d.end_sections)},
                {"gtilde_dimension", d.gtilde_dimension},
                {"d0", to_json(d.d0_dimension)},
                {"direct_sum", d.direct_sum},
                {"radical_dimension", d.radical_dimension},
                {"assumptions_used", d.assumptions_used}};
}

Json to_json(const CotangentReport& r)
{
    Json vanishing = Json::array();
    for (const auto& v : r.vanishing) {
        Json dom = Json::array();
        for (const auto& w : v.dominant_weights) dom.push_back(to_json(w));
        vanishing.push_back({{"p", v.p},
                             {"vanishes", v.vanishes},
                             {"no_dominant_weight", v.no_dominant_weight},
                             {"exact", v.exact ? Json(*v.exact) : Json(nullptr)},
                             {"weights", v.weight_count},
                             {"dominant_weights", dom}});
    }
    Json j{{"type", r.type.to_string()},
           {"levi", index_set_to_string(r.levi)},
           {"manifold_dimension", r.manifold_dimension},
           {"tangent_sections", r.algebra_dimension},
           {"tangent_bound", r.tangent_bound},
           {"tangent_bound_tight", r.tangent_bound_tight},
           {"tangent_exact", r.tangent_exact ? Json(*r.tangent_exact) : Json(nullptr)},
           {"tangent_is_adjoint", r.tangent_is_adjoint},
           {"end_T", {{"assumed", r.end_assumed},
                      {"bound", r.end_bound},
                      {"exact", r.end_exact ? Json(*r.end_exact) : Json(nullptr)}}},
           {"vanishing", vanishing},
           {"failed_degrees", r.failed_degrees}};
    if (r.graded_dims) {
        const auto& [a, b, c] = *r.graded_dims;
        j["graded_dims"] = {a, b, c};
    } else {
        j["graded_dims"] = nullptr;
    }
    j["total"] = r.total ? Json(*r.total) : Json(nullptr);
    j["hat_d_match"] = r.hat_d_match;
    j["assumptions"] = {"END T = C eps"};
    return j;
}

Json to_json(const InvariantComparison& c)
{
    auto sd = [](const std::pair<std::size_t, std::size_t>& p) { return Json{p.first, p.second}; };
    return Json{{"superdimension", {{"a", sd(c.superdim_a)}, {"b", sd(c.superdim_b)}, {"equal", c.superdim_equal}}},
                {"graded_vector", {{"a", c.graded_a}, {"b", c.graded_b}, {"equal", c.graded_equal}}},
                {"derived_dimension", {{"a", c.derived_a}, {"b", c.derived_b}, {"equal", c.derived_equal}}},
                {"even_derived_dimension",
                 {{"a", c.even_derived_a}, {"b", c.even_derived_b}, {"equal", c.even_derived_equal}}},
                {"graded_isomorphism", c.graded_isomorphism},
                {"abstract_isomorphism", c.abstract_isomorphism},
                {"invariant_obstructions", c.invariant_obstructions}};
}

Json to_json(const SparseVector& v)
{
    Json out = Json::array();
    for (const auto& [k, c] : v) out.push_back({k, coefficient(c)});
    return out;
}

Json glsa_to_json(const GradedLSA& a)
{
    Json basis = Json::array();
    for (const auto& b : a.basis())
        basis.push_back({{"label", b.label}, {"degree", b.degree}, {"parity", b.parity == Parity::Even ? "even" : "odd"}});
    Json brackets = Json::array();
    for (const auto& [key, vec] : a.stored_brackets()) brackets.push_back({key.first, key.second, to_json(vec)});
    return Json{{"basis", basis}, {"brackets", brackets}};
}

GradedLSA glsa_from_json(const Json& j)
{
    try {
        std::vector<BasisElement> basis;
        for (const auto& b : j.at("basis")) {
            const auto parity = b.at("parity").get<std::string>();
            if (parity != "even" && parity != "odd") throw InvalidInput("parity must be \"even\" or \"odd\"");
            basis.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>(),
                             parity == "even" ? Parity::Even : Parity::Odd});
        }
        GradedLSA::BracketTable brackets;
        for (const auto& entry : j.at("brackets")) {
            if (!entry.is_array() || entry.size() != 3) throw InvalidInput("bracket entries are [i, j, [[k, c], ...]]");
            const auto i = entry[0].get<std::size_t>(), k = entry[1].get<std::size_t>();
            SparseVector& v = brackets[{i, k}];
            for (const auto& term : entry[2]) {
                if (!term.is_array() || term.size() != 2) throw InvalidInput("bracket terms are [k, c]");
                v[term[0].get<std::size_t>()] += read_coefficient(nlohmann::json(term[1]));
            }
        }
        return GradedLSA(std::move(basis), std::move(brackets));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed structure-constant file: ") + e.what());
    }
}

}  // namespace svf
