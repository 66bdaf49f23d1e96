#include "svf/models.hpp"

#include "svf/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <sstream>

namespace svf {

// ---------------------------------------------------------------------------
// Chevalley basis

namespace {

using Coords = std::vector<int>;

Coords negate(Coords c)
{
    for (auto& x : c) x = -x;
    return c;
}

Coords add(const Coords& a, const Coords& b)
{
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

std::string coords_label(char prefix, const Coords& c)
{
    std::string s(1, prefix);
    s += '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + ']';
}

// Signed root ids: +(i+1) is positive root i, -(i+1) its negative.
class StructureConstants {
public:
    explicit StructureConstants(const RootSystem& rs) : rs_(rs)
    {
        const auto& pos = rs.positive_roots();
        for (std::size_t i = 0; i < pos.size(); ++i) {
            const int id = static_cast<int>(i) + 1;
            ids_.emplace(pos[i].simple_coords, id);
            ids_.emplace(negate(pos[i].simple_coords), -id);
            lengths_.push_back(rs.inner_product(pos[i].weight, pos[i].weight));
        }
        // For each sum, the first special pair (alpha minimal) is extraspecial.
        for (std::size_t a = 0; a < pos.size(); ++a) {
            for (std::size_t b = a + 1; b < pos.size(); ++b) {
                const auto sum = lookup(add(pos[a].simple_coords, pos[b].simple_coords));
                if (!sum) continue;
                extraspecial_.try_emplace(*sum, std::make_pair(static_cast<int>(a) + 1, static_cast<int>(b) + 1));
            }
        }
    }

    std::optional<int> lookup(const Coords& c) const
    {
        auto it = ids_.find(c);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const Coords& coords(int id) const { return rs_.positive_roots()[static_cast<std::size_t>(std::abs(id) - 1)].simple_coords; }
    Coords signed_coords(int id) const { return id > 0 ? coords(id) : negate(coords(id)); }
    const Rational& length(int id) const { return lengths_[static_cast<std::size_t>(std::abs(id) - 1)]; }

    std::optional<int> sum(int a, int b) const { return lookup(add(signed_coords(a), signed_coords(b))); }

    // [e_a, e_b] = N(a, b) e_{a+b}
    Rational N(int a, int b)
    {
        if (!sum(a, b)) return 0;
        if (a > 0 && b > 0) {
            if (a > b) return -N(b, a);
            return special(a, b);
        }
        if (a < 0 && b < 0) return -N(-a, -b);
        if (a < 0) return -N(b, a);
        // a positive, b negative
        const int g = -b;
        const int s = *sum(a, b);
        if (s > 0) {
            // (a, -g, -s) sums to zero
            return -(length(s) / length(a)) * N(g, s);
        }
        const int t = -s;  // t + a = g
        return (length(t) / length(g)) * N(t, a);
    }

private:
    int string_below(int b, int a) const
    {
        // largest p with b - p a a root
        int p = 0;
        Coords c = signed_coords(b);
        const Coords step = signed_coords(a);
        while (true) {
            for (std::size_t i = 0; i < c.size(); ++i) c[i] -= step[i];
            if (!lookup(c)) return p;
            ++p;
        }
    }

    Rational special(int a, int b)
    {
        const auto key = std::make_pair(a, b);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const int xi = *sum(a, b);
        const auto [g, d] = extraspecial_.at(xi);
        Rational value;
        if (g == a && d == b) {
            value = string_below(b, a) + 1;
        } else {
            // Four-root identity for (a, b, -g, -d), solved for N(a, b).
            Rational rhs = 0;
            if (auto s = sum(b, -g)) rhs += N(b, -g) * N(a, -d) / length(*s);
            if (auto s = sum(-g, a)) rhs += N(-g, a) * N(b, -d) / length(*s);
            value = length(xi) * rhs / N(g, d);
        }
        memo_.emplace(key, value);
        return value;
    }

    const RootSystem& rs_;
    std::map<Coords, int> ids_;
    std::vector<Rational> lengths_;
    std::map<int, std::pair<int, int>> extraspecial_;
    std::map<std::pair<int, int>, Rational> memo_;
};

}  // namespace

std::size_t LieAlgebraModel::e_index(std::size_t root) const
{
    return static_cast<std::size_t>(system->rank()) + root;
}

std::size_t LieAlgebraModel::f_index(std::size_t root) const
{
    return static_cast<std::size_t>(system->rank()) + system->positive_roots().size() + root;
}

LieAlgebraModel chevalley_algebra(const SemisimpleType& type)
{
    LieAlgebraModel model;
    model.system = build_root_system(type);
    const RootSystem& rs = *model.system;
    const auto r = static_cast<std::size_t>(rs.rank());
    const auto& pos = rs.positive_roots();
    const auto np = pos.size();

    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < r; ++i) basis.push_back({"h" + std::to_string(i + 1), 0, Parity::Even});
    for (const auto& a : pos) basis.push_back({coords_label('e', a.simple_coords), 0, Parity::Even});
    for (const auto& a : pos) basis.push_back({coords_label('f', a.simple_coords), 0, Parity::Even});

    auto index_of_id = [&](int id) {
        const auto k = static_cast<std::size_t>(std::abs(id) - 1);
        return id > 0 ? r + k : r + np + k;
    };

    StructureConstants sc(rs);
    GradedLSA::BracketTable brackets;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < np; ++k) {
            const int v = pos[k].weight[static_cast<int>(i)];
            if (v == 0) continue;
            brackets[{i, r + k}][r + k] = v;
            brackets[{i, r + np + k}][r + np + k] = -v;
        }
    }
    std::vector<int> ids;
    for (std::size_t k = 0; k < np; ++k) ids.push_back(static_cast<int>(k) + 1);
    for (std::size_t k = 0; k < np; ++k) ids.push_back(-static_cast<int>(k) - 1);
    for (std::size_t x = 0; x < ids.size(); ++x) {
        for (std::size_t y = x + 1; y < ids.size(); ++y) {
            const int a = ids[x], b = ids[y];
            const std::size_t ia = index_of_id(a), ib = index_of_id(b);
            if (a == -b) {
                // [e_a, f_a] = h_a = sum_i k_i d_i / d_a h_i
                const auto& c = sc.coords(a);
                const Rational da = sc.length(a) / 2;
                SparseVector h;
                for (std::size_t i = 0; i < r; ++i)
                    if (c[i] != 0) h.emplace(i, Rational(c[i] * rs.symmetrizer(static_cast<int>(i))) / da);
                brackets[{ia, ib}] = std::move(h);
                continue;
            }
            const auto s = sc.sum(a, b);
            if (!s) continue;
            const Rational n = sc.N(a, b);
            if (n.get_den() != 1) throw InvariantViolation("non-integral Chevalley structure constant");
            brackets[{std::min(ia, ib), std::max(ia, ib)}][index_of_id(*s)] = ia < ib ? n : Rational(-n);
        }
    }
    model.algebra = GradedLSA(std::move(basis), std::move(brackets));
    return model;
}

// ---------------------------------------------------------------------------
// vect(0|m)

namespace {

using Mask = unsigned;
using Poly = std::map<Mask, Rational>;  // Grassmann algebra element

int sign_of_product(Mask s, Mask t)
{
    // (-1)^{#(a in s, b in t, a > b)}
    int swaps = 0;
    for (Mask rest = t; rest; rest &= rest - 1) {
        const int b = std::countr_zero(rest);
        swaps += std::popcount(s >> (b + 1));
    }
    return swaps % 2 ? -1 : 1;
}

struct Derivation {
    Mask s;  // xi_S
    int j;   // d_j
};

Poly apply_derivation(const Derivation& d, const Poly& f)
{
    Poly out;
    for (const auto& [t, c] : f) {
        if (!(t >> d.j & 1u)) continue;
        const int pos = std::popcount(t & ((1u << d.j) - 1));
        const Mask rest = t & ~(1u << d.j);
        if (d.s & rest) continue;
        const int sign = (pos % 2 ? -1 : 1) * sign_of_product(d.s, rest);
        auto& slot = out[d.s | rest];
        slot += sign * c;
        if (slot == 0) out.erase(d.s | rest);
    }
    return out;
}

}  // namespace

GradedLSA vect_superpoint(int m)
{
    if (m < 1 || m > 8) throw InvalidInput("vect(0|m) needs 1 <= m <= 8");
    const Mask full = (1u << m) - 1;
    std::vector<Mask> subsets;
    for (Mask s = 0; s <= full; ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });

    std::vector<Derivation> ders;
    std::vector<BasisElement> basis;
    std::map<std::pair<Mask, int>, std::size_t> index;
    for (Mask s : subsets) {
        for (int j = 0; j < m; ++j) {
            const int deg = std::popcount(s) - 1;
            std::string label;
            for (int k = 0; k < m; ++k)
                if (s >> k & 1u) label += "x" + std::to_string(k + 1);
            if (!label.empty()) label += '*';
            label += "d" + std::to_string(j + 1);
            index.emplace(std::make_pair(s, j), ders.size());
            ders.push_back({s, j});
            basis.push_back({label, deg, deg % 2 ? Parity::Odd : Parity::Even});
        }
    }

    GradedLSA::BracketTable brackets;
    for (std::size_t a = 0; a < ders.size(); ++a) {
        for (std::size_t b = a; b < ders.size(); ++b) {
            const int sign = (basis[a].parity == Parity::Odd && basis[b].parity == Parity::Odd) ? -1 : 1;
            SparseVector out;
            for (int k = 0; k < m; ++k) {
                const Poly gen{{1u << k, Rational(1)}};
                Poly value = apply_derivation(ders[a], apply_derivation(ders[b], gen));
                for (const auto& [t, c] : apply_derivation(ders[b], apply_derivation(ders[a], gen))) {
                    auto& slot = value[t];
                    slot -= sign * c;
                    if (slot == 0) value.erase(t);
                }
                for (const auto& [t, c] : value) out.emplace(index.at({t, k}), c);
            }
            if (!out.empty()) brackets.emplace(std::make_pair(a, b), std::move(out));
        }
    }
    return GradedLSA(std::move(basis), std::move(brackets));
}

// ---------------------------------------------------------------------------
// Cartan calculus

GradedLSA hat_d(const GradedLSA& g)
{
    const auto n = g.dimension();
    for (const auto& b : g.basis())
        if (b.degree != 0) throw InvalidInput("hat_d needs an ungraded Lie algebra");

    std::vector<BasisElement> basis;
    for (const auto& b : g.basis()) basis.push_back({"i(" + b.label + ")", -1, Parity::Odd});
    for (const auto& b : g.basis()) basis.push_back({"theta(" + b.label + ")", 0, Parity::Even});
    const std::size_t eps = 2 * n, d = 2 * n + 1;
    basis.push_back({"eps", 0, Parity::Even});
    basis.push_back({"d", 1, Parity::Odd});

    GradedLSA::BracketTable brackets;
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            // [i_w, theta_v] = -[theta_v, i_w] = -i_{[v,w]}
            SparseVector iv;
            for (const auto& [k, c] : g.bracket(v, w)) iv.emplace(k, -c);
            if (!iv.empty()) brackets.emplace(std::make_pair(w, n + v), std::move(iv));
            if (v < w) {
                SparseVector th;
                for (const auto& [k, c] : g.bracket(v, w)) th.emplace(n + k, c);
                if (!th.empty()) brackets.emplace(std::make_pair(n + v, n + w), std::move(th));
            }
        }
        brackets[{v, eps}][v] = 1;      // [i_v, eps] = -[eps, i_v] = i_v
        brackets[{v, d}][n + v] = 1;    // [i_v, d] = [d, i_v] = theta_v
    }
    brackets[{eps, d}][d] = 1;
    return GradedLSA(std::move(basis), std::move(brackets));
}

// ---------------------------------------------------------------------------
// Invariants

std::vector<std::size_t> graded_vector(const GradedLSA& a)
{
    const auto dims = graded_dims(a);
    std::vector<std::size_t> out;
    if (dims.empty()) return out;
    for (int p = dims.begin()->first; p <= dims.rbegin()->first; ++p) {
        auto it = dims.find(p);
        out.push_back(it == dims.end() ? 0 : it->second.first + it->second.second);
    }
    return out;
}

std::string format_graded_vector(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

namespace {

std::pair<std::size_t, std::size_t> superdim(const GradedLSA& a)
{
    std::pair<std::size_t, std::size_t> out{0, 0};
    for (const auto& b : a.basis()) (b.parity == Parity::Even ? out.first : out.second) += 1;
    return out;
}

}  // namespace

InvariantComparison compare_invariants(const GradedLSA& a, const GradedLSA& b)
{
    InvariantComparison c;
    c.superdim_a = superdim(a);
    c.superdim_b = superdim(b);
    c.superdim_equal = c.superdim_a == c.superdim_b;
    c.graded_a = graded_vector(a);
    c.graded_b = graded_vector(b);
    c.graded_equal = graded_dims(a) == graded_dims(b);
    c.derived_a = derived_dimension(a);
    c.derived_b = derived_dimension(b);
    c.derived_equal = c.derived_a == c.derived_b;
    c.even_derived_a = even_derived_dimension(a);
    c.even_derived_b = even_derived_dimension(b);
    c.even_derived_equal = c.even_derived_a == c.even_derived_b;

    if (!c.superdim_equal) c.invariant_obstructions.push_back("superdimension");
    if (!c.derived_equal) c.invariant_obstructions.push_back("derived dimension");
    if (!c.even_derived_equal) c.invariant_obstructions.push_back("even derived dimension");

    c.graded_isomorphism = (c.graded_equal && c.invariant_obstructions.empty()) ? "undecided" : "excluded";
    c.abstract_isomorphism = "undecided";
    return c;
}

}  // namespace svf
