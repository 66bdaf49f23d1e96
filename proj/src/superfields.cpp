#include "svf/superfields.hpp"

#include "svf/errors.hpp"
#include "svf/models.hpp"

#include <algorithm>
#include <functional>

namespace svf {

SplitSuperdata::SplitSuperdata(PModule phi, Assumptions assumptions)
    : phi_(std::move(phi)), assumptions_(assumptions)
{
    odd_dim_ = levi_dim(phi_.highest_weight(), phi_.parabolic().levi(), phi_.parabolic().system());
}

bool homogeneity_check(const SplitSuperdata& s)
{
    return is_dominant(dual_pmodule(s.phi()).highest_weight());
}

SectionReport d_minus_one(const SplitSuperdata& s)
{
    return sections_irreducible(dual_pmodule(s.phi()));
}

DegreeEntry d_p_interval(const SplitSuperdata& s, int p)
{
    if (p < 0) throw InvalidInput("d_p_interval needs p >= 0");
    DegreeEntry entry;
    entry.p = p;
    if (p > s.odd_dimension()) {
        entry.dimension = DimInterval::exactly(0);
        entry.method = SectionMethod::Vanishing;
        return entry;
    }
    const auto pieces = der_sequence_characters(s.phi(), p);
    const auto sub = sections_completely_reducible(pieces.sub, s.parabolic());
    const auto quot = sections_upper_bound(pieces.quot);
    entry.dimension = {sub.dimension.lo, sub.dimension.lo + quot.dimension.hi};
    if (entry.dimension.exact()) {
        entry.method = entry.dimension.lo == 0 ? SectionMethod::Vanishing : SectionMethod::BbwExact;
        entry.constituents = sub.constituents;
    } else {
        entry.method = SectionMethod::WeightBound;
    }
    return entry;
}

GradedDimReport graded_dim_report(const SplitSuperdata& s)
{
    GradedDimReport report;
    report.homogeneous = homogeneity_check(s);
    const auto minus = d_minus_one(s);
    report.degrees.push_back({-1, minus.dimension, minus.method, minus.constituents});
    for (int p = 0; p <= s.odd_dimension(); ++p) report.degrees.push_back(d_p_interval(s, p));
    return report;
}

namespace {

std::vector<std::string> echo(const Assumptions& a)
{
    std::vector<std::string> out;
    if (a.alpha_d0_equals_dt_g) out.push_back("alpha_d0_equals_dt_g");
    if (a.G_locally_faithful) out.push_back("G_locally_faithful");
    return out;
}

}  // namespace

TransitivityVerdict theorem4_check(const SplitSuperdata& s)
{
    TransitivityVerdict v;
    const RootSystem& rs = s.parabolic().system();
    v.lambda = dual_pmodule(s.phi()).highest_weight();
    v.dominant = is_dominant(v.lambda);
    bool every_factor = true;
    for (int f = 0; f < rs.factor_count(); ++f) {
        FactorWitness w{f, std::nullopt};
        for (int i : rs.factor_indices(f)) {
            if (v.lambda[i] > 0) {
                w.simple_root = i;
                break;
            }
        }
        every_factor = every_factor && w.simple_root.has_value();
        v.per_factor.push_back(w);
    }
    if (s.assumptions().alpha_d0_equals_dt_g) v.assumptions_used.push_back("alpha_d0_equals_dt_g");
    v.positive = v.dominant && every_factor && s.assumptions().alpha_d0_equals_dt_g;
    return v;
}

D0Structure d0_structure(const SplitSuperdata& s)
{
    const auto verdict = theorem4_check(s);
    if (!verdict.positive)
        throw InvalidInput("degree-0 structure needs a positive transitivity verdict (got " + verdict.verdict() + ")");

    D0Structure d;
    d.assumptions_used = echo(s.assumptions());
    const RootSystem& rs = s.parabolic().system();
    const auto phi = pmodule_character(s.phi());
    const auto end_char = tensor(phi, dual(phi));
    d.end_sections = sections_completely_reducible(end_char, s.parabolic()).dimension;
    if (s.assumptions().G_locally_faithful) {
        d.end_dimension = DimInterval::exactly(1);
        d.end_source = "assumed-faithful";
    } else {
        d.end_dimension = {1, std::max<Multiplicity>(1, sections_upper_bound(end_char).dimension.hi)};
        d.end_source = "weight-bound";
    }

    const auto& levi = s.parabolic().levi();
    for (int f = 0; f < rs.factor_count(); ++f) {
        const auto idx = rs.factor_indices(f);
        const bool inside = std::all_of(idx.begin(), idx.end(), [&](int i) {
            return std::binary_search(levi.begin(), levi.end(), i);
        });
        if (inside) continue;
        const int positive = static_cast<int>(std::count_if(
            rs.positive_roots().begin(), rs.positive_roots().end(), [f](const Root& r) { return r.factor == f; }));
        d.gtilde_dimension += static_cast<int>(idx.size()) + 2 * positive;
    }
    d.d0_dimension = {d.end_dimension.lo + d.gtilde_dimension, d.end_dimension.hi + d.gtilde_dimension};
    return d;
}


namespace {

// Isotropy module g/p and its dual, with the generators of p that matter:
// f_i for every simple root and e_i for the simple roots of the Levi.
class IsotropyModule {
public:
    using Vector = std::map<std::pair<int, std::vector<int>>, Rational>;  // tau_a (x) xi_S

    explicit IsotropyModule(const ParabolicSpec& parabolic)
        : model_(chevalley_algebra(parabolic.system().type()))
    {
        const RootSystem& rs = *model_.system;
        const auto& pos = rs.positive_roots();
        std::map<std::size_t, int> local;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            if (RootSystem::in_span(pos[k], parabolic.levi())) continue;
            local.emplace(model_.e_index(k), static_cast<int>(roots_.size()));
            roots_.push_back(k);
            weights_.push_back(pos[k].weight);
        }
        for (int i = 0; i < rs.rank(); ++i) {
            const auto k = *rs.positive_root_index(rs.simple_roots()[static_cast<std::size_t>(i)]);
            lowering_.push_back(action(model_.f_index(k), local));
            const bool in_levi = std::binary_search(parabolic.levi().begin(), parabolic.levi().end(), i);
            raising_.push_back(in_levi ? std::optional(action(model_.e_index(k), local)) : std::nullopt);
        }
    }

    int size() const { return static_cast<int>(roots_.size()); }
    const Weight& weight(int a) const { return weights_[static_cast<std::size_t>(a)]; }
    const RootSystem& system() const { return *model_.system; }

    Vector lower(int i, const Vector& v) const { return apply(lowering_[static_cast<std::size_t>(i)], v); }
    std::optional<Vector> raise(int i, const Vector& v) const
    {
        const auto& op = raising_[static_cast<std::size_t>(i)];
        if (!op) return std::nullopt;
        return apply(*op, v);
    }

private:
    using Operator = std::vector<std::map<int, Rational>>;  // column a -> image of tau_a

    Operator action(std::size_t x, const std::map<std::size_t, int>& local) const
    {
        Operator op(roots_.size());
        for (std::size_t a = 0; a < roots_.size(); ++a)
            for (const auto& [t, c] : model_.algebra.bracket(x, model_.e_index(roots_[a])))
                if (auto it = local.find(t); it != local.end()) op[a].emplace(it->second, c);
        return op;
    }

    static void accumulate(Vector& out, const std::pair<int, std::vector<int>>& key, const Rational& c)
    {
        auto& slot = out[key];
        slot += c;
        if (slot == 0) out.erase(key);
    }

    Vector apply(const Operator& op, const Vector& v) const
    {
        Vector out;
        for (const auto& [key, c] : v) {
            const auto& [a, wedge] = key;
            for (const auto& [t, x] : op[static_cast<std::size_t>(a)]) accumulate(out, {t, wedge}, c * x);
            // X xi_b = -sum_a op[a][b] xi_a
            for (std::size_t j = 0; j < wedge.size(); ++j) {
                for (std::size_t a2 = 0; a2 < op.size(); ++a2) {
                    auto it = op[a2].find(wedge[j]);
                    if (it == op[a2].end()) continue;
                    std::vector<int> w = wedge;
                    w[j] = static_cast<int>(a2);
                    if (std::count(w.begin(), w.end(), w[j]) > 1) continue;
                    int sign = 1;
                    for (std::size_t x = 0; x < w.size(); ++x)
                        for (std::size_t y = x + 1; y < w.size(); ++y)
                            if (w[x] > w[y]) sign = -sign;
                    std::sort(w.begin(), w.end());
                    accumulate(out, {a, std::move(w)}, -sign * c * it->second);
                }
            }
        }
        return out;
    }

    LieAlgebraModel model_;
    std::vector<std::size_t> roots_;
    std::vector<Weight> weights_;
    std::vector<Operator> lowering_;
    std::vector<std::optional<Operator>> raising_;
};

double binomial(int n, int k)
{
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SectionReport tangent_forms_sections(const ParabolicSpec& parabolic, int p)
{
    const int n = parabolic.flag_dimension();
    if (p < 0 || p > n) return {DimInterval::exactly(0), {}, SectionMethod::Vanishing};
    if (static_cast<double>(n) * binomial(n, p) > 2e6)
        throw InvalidInput("tangent forms of degree " + std::to_string(p) + " are too large for the explicit route");

    const IsotropyModule tau(parabolic);
    const RootSystem& rs = tau.system();

    // Basis vectors of tau (x) Lambda^p tau^*, grouped by weight.
    std::map<Weight, std::vector<std::pair<int, std::vector<int>>>> by_weight;
    std::vector<int> wedge;
    std::function<void(int, Weight)> choose = [&](int next, Weight w) {
        if (static_cast<int>(wedge.size()) == p) {
            for (int a = 0; a < n; ++a) {
                const Weight total = w + tau.weight(a);
                if (is_dominant(total)) by_weight[total].emplace_back(a, wedge);
            }
            return;
        }
        for (int b = next; b < n; ++b) {
            wedge.push_back(b);
            choose(b + 1, w - tau.weight(b));
            wedge.pop_back();
        }
    };
    choose(0, Weight::zero(rs.rank()));

    SectionReport report;
    report.method = SectionMethod::Reciprocity;
    Multiplicity total = 0;
    for (const auto& [lambda, basis] : by_weight) {
        // images of each basis vector under every constraint operator
        std::vector<std::vector<IsotropyModule::Vector>> images(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const IsotropyModule::Vector v{{basis[j], Rational(1)}};
            for (int i = 0; i < rs.rank(); ++i) {
                if (auto up = tau.raise(i, v)) images[j].push_back(std::move(*up));
                IsotropyModule::Vector down = v;
                for (int k = 0; k <= lambda[i] && !down.empty(); ++k) down = tau.lower(i, down);
                images[j].push_back(std::move(down));
            }
        }
        std::map<std::pair<std::size_t, std::pair<int, std::vector<int>>>, std::size_t> row_of;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t o = 0; o < images[j].size(); ++o)
                for (const auto& [key, c] : images[j][o]) row_of.try_emplace({o, key}, row_of.size());
        Matrix m(row_of.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t o = 0; o < images[j].size(); ++o)
                for (const auto& [key, c] : images[j][o]) m(row_of.at({o, key}), j) = c;
        const auto homs = static_cast<Multiplicity>(basis.size() - rank(m));
        if (homs == 0) continue;
        total += homs * weyl_dim(lambda, rs);
        report.constituents.push_back({lambda, homs});
    }
    report.dimension = DimInterval::exactly(total);
    if (total == 0) report.method = SectionMethod::Vanishing;
    return report;
}

CotangentReport cotangent_report(const SemisimpleType& type, const IndexSet& levi)
{
    if (!type.is_simple()) throw InvalidInput("the cotangent report needs a simple type");
    const auto rs = build_root_system(type);
    const ParabolicSpec parabolic(rs, levi);

    CotangentReport r{.type = type, .levi = parabolic.levi()};
    r.manifold_dimension = parabolic.flag_dimension();
    if (r.manifold_dimension == 0) throw InvalidInput("the flag variety is a point");
    r.algebra_dimension = weyl_dim(highest_root(*rs, 0), *rs);
    const Multiplicity root_count = rs->rank() + 2 * static_cast<Multiplicity>(rs->positive_roots().size());
    if (r.algebra_dimension != root_count) throw InvariantViolation("adjoint dimension disagrees with the root count");

    const auto tau = tangent_character(parabolic);
    const auto tau_dual = dual(tau);
    r.tangent_bound = sections_upper_bound(tau).dimension.hi;
    r.tangent_bound_tight = r.tangent_bound == r.algebra_dimension;
    if (r.tangent_bound < r.algebra_dimension)
        throw InvariantViolation("weight bound on tangent sections is below dim g");
    r.end_bound = sections_upper_bound(tensor(tau, tau_dual)).dimension.hi;

    try {
        r.tangent_exact = tangent_forms_sections(parabolic, 0).dimension.lo;
        r.end_exact = tangent_forms_sections(parabolic, 1).dimension.lo;
    } catch (const InvalidInput&) {
        // too large; fall back to dim g and END T = 1
    }
    if (r.tangent_exact) {
        if (*r.tangent_exact < r.algebra_dimension || *r.tangent_exact > r.tangent_bound)
            throw InvariantViolation("explicit count of sections of T lies outside [dim g, weight bound]");
        r.tangent_is_adjoint = *r.tangent_exact == r.algebra_dimension;
    }

    for (int p = 2; p <= r.manifold_dimension; ++p) {
        const auto c = tensor(tau, exterior_power(tau_dual, p));
        VanishingCheck check;
        check.p = p;
        check.no_dominant_weight = vanishes_by_corollary(c);
        check.weight_count = c.weights().size();
        for (const auto& [w, m] : c.weights())
            if (is_dominant(w)) check.dominant_weights.push_back(w);
        if (!check.no_dominant_weight) {
            try {
                check.exact = tangent_forms_sections(parabolic, p).dimension.lo;
            } catch (const InvalidInput&) {
                // left undecided
            }
        }
        check.vanishes = check.no_dominant_weight || (check.exact && *check.exact == 0);
        if (!check.vanishes) r.failed_degrees.push_back(p);
        r.vanishing.push_back(std::move(check));
    }

    if (r.failed_degrees.empty()) {
        // degree p carries the sections of Omega_T^p and Omega_T^(p+1)
        const auto t = r.tangent_exact.value_or(r.algebra_dimension);
        const auto e = r.end_exact.value_or(r.end_assumed);
        r.graded_dims = std::make_tuple(t, t + e, e);
        r.total = t + t + e + e;
        const auto model = graded_vector(hat_d(chevalley_algebra(type).algebra));
        r.hat_d_match = model == std::vector<std::size_t>{static_cast<std::size_t>(t),
                                                           static_cast<std::size_t>(t + e),
                                                           static_cast<std::size_t>(e)};
    }
    return r;
}

}  // namespace svf
