#include "svf/glsa.hpp"

#include "svf/errors.hpp"

#include <algorithm>
#include <set>

namespace svf {

namespace {

const SparseVector kZero;

void axpy(SparseVector& acc, const Rational& c, const SparseVector& v)
{
    if (c == 0) return;
    for (const auto& [k, x] : v) {
        auto [it, inserted] = acc.try_emplace(k, c * x);
        if (!inserted) {
            it->second += c * x;
            if (it->second == 0) acc.erase(it);
        }
    }
}

int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }

}  // namespace

GradedLSA::GradedLSA(std::vector<BasisElement> basis, BracketTable brackets)
    : basis_(std::move(basis))
{
    const auto n = basis_.size();
    for (const auto& b : basis_) {
        const int bit = ((b.degree % 2) + 2) % 2;
        if (bit != parity_bit(b.parity))
            throw InvalidInput("basis element '" + b.label + "' has parity incompatible with its degree");
    }
    for (auto& [key, vec] : brackets) {
        const auto [i, j] = key;
        if (i > j || j >= n) throw InvalidInput("bracket key out of range or not ordered (i <= j)");
        SparseVector clean;
        for (const auto& [k, c] : vec) {
            if (k >= n) throw InvalidInput("bracket target index out of range");
            if (c == 0) continue;
            if (basis_[k].degree != basis_[i].degree + basis_[j].degree)
                throw InvalidInput("[" + basis_[i].label + ", " + basis_[j].label + "] has a component on '" +
                                   basis_[k].label + "' of the wrong degree");
            clean.emplace(k, c);
        }
        if (clean.empty()) continue;
        if (i == j && basis_[i].parity == Parity::Even)
            throw InvalidInput("even element '" + basis_[i].label + "' has a nonzero self-bracket");
        brackets_.emplace(key, std::move(clean));
    }
    build_table();
}

void GradedLSA::build_table()
{
    const auto n = basis_.size();
    table_.assign(n * n, SparseVector{});
    for (const auto& [key, vec] : brackets_) {
        const auto [i, j] = key;
        table_[i * n + j] = vec;
        if (i != j) {
            const Rational s = -parity_sign(i, j);
            SparseVector& other = table_[j * n + i];
            for (const auto& [k, c] : vec) other.emplace(k, s * c);
        }
    }
}

const SparseVector& GradedLSA::bracket(std::size_t i, std::size_t j) const
{
    if (i >= basis_.size() || j >= basis_.size()) throw InvalidInput("basis index out of range");
    return table_[i * basis_.size() + j];
}

SparseVector GradedLSA::bracket(const SparseVector& x, const SparseVector& y) const
{
    SparseVector out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) axpy(out, a * b, bracket(i, j));
    return out;
}

int GradedLSA::parity_sign(std::size_t i, std::size_t j) const
{
    return (basis_[i].parity == Parity::Odd && basis_[j].parity == Parity::Odd) ? -1 : 1;
}

std::vector<std::size_t> GradedLSA::indices_of_degree(int degree) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == degree) out.push_back(i);
    return out;
}

std::optional<std::size_t> GradedLSA::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

GradedLSA GradedLSA::with_perturbed_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& delta) const
{
    auto brackets = brackets_;
    auto& v = brackets[{std::min(i, j), std::max(i, j)}];
    v[k] += delta;
    return GradedLSA(basis_, std::move(brackets));
}

GradedLSA GradedLSA::truncated(int max_degree) const
{
    std::vector<std::size_t> remap(basis_.size(), basis_.size());
    std::vector<BasisElement> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].degree <= max_degree) {
            remap[i] = kept.size();
            kept.push_back(basis_[i]);
        }
    }
    BracketTable out;
    for (const auto& [key, vec] : brackets_) {
        const auto a = remap[key.first], b = remap[key.second];
        if (a == basis_.size() || b == basis_.size()) continue;
        SparseVector v;
        for (const auto& [k, c] : vec)
            if (remap[k] != basis_.size()) v.emplace(remap[k], c);
        if (!v.empty()) out.emplace(std::make_pair(std::min(a, b), std::max(a, b)), std::move(v));
    }
    return GradedLSA(std::move(kept), std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<JacobiViolation> check_super_jacobi(const GradedLSA& a, std::size_t max_reported)
{
    // With super-antisymmetry built in, the Jacobi sum is super-alternating in
    // its three arguments, so ordered triples i <= j <= k cover everything.
    const auto n = a.dimension();
    std::set<int> degrees;
    for (const auto& b : a.basis()) degrees.insert(b.degree);

    auto double_bracket = [&](std::size_t x, std::size_t y, std::size_t z) {
        SparseVector out;
        for (const auto& [t, c] : a.bracket(x, y)) axpy(out, c, a.bracket(t, z));
        return out;
    };

    std::vector<JacobiViolation> violations;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const int d = a.basis()[i].degree + a.basis()[j].degree + a.basis()[k].degree;
                if (!degrees.count(d)) continue;
                SparseVector sum;
                axpy(sum, a.parity_sign(i, k), double_bracket(i, j, k));
                axpy(sum, a.parity_sign(j, i), double_bracket(j, k, i));
                axpy(sum, a.parity_sign(k, j), double_bracket(k, i, j));
                if (!sum.empty()) {
                    violations.push_back({i, j, k, std::move(sum)});
                    if (violations.size() >= max_reported) return violations;
                }
            }
        }
    }
    return violations;
}

bool check_transitive(const GradedLSA& a)
{
    const auto n = a.dimension();
    std::vector<std::size_t> negative;
    int top = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (a.basis()[i].degree < 0) negative.push_back(i);
        top = std::max(top, a.basis()[i].degree);
    }
    for (int p = 0; p <= top; ++p) {
        const auto block = a.indices_of_degree(p);
        if (block.empty()) continue;
        RowSpace space(negative.size() * n);
        for (auto x : block) {
            RationalVector row(negative.size() * n, Rational(0));
            for (std::size_t e = 0; e < negative.size(); ++e)
                for (const auto& [t, c] : a.bracket(x, negative[e])) row[e * n + t] = c;
            space.insert(row);
        }
        if (space.rank() != block.size()) return false;
    }
    return true;
}

std::size_t burnside_span_dimension(const GradedLSA& a)
{
    const auto v = a.indices_of_degree(-1);
    const auto g = a.indices_of_degree(0);
    const auto n1 = v.size();
    if (n1 == 0) throw InvalidInput("irreducibility needs a nonzero degree -1 part");
    std::vector<std::size_t> pos(a.dimension(), n1);
    for (std::size_t r = 0; r < n1; ++r) pos[v[r]] = r;

    using Op = RationalVector;  // n1 x n1, row-major
    std::vector<Op> generators;
    for (auto x : g) {
        Op m(n1 * n1, Rational(0));
        for (std::size_t c = 0; c < n1; ++c)
            for (const auto& [t, coeff] : a.bracket(x, v[c])) m[pos[t] * n1 + c] = coeff;
        generators.push_back(std::move(m));
    }
    auto multiply = [n1](const Op& x, const Op& y) {
        Op z(n1 * n1, Rational(0));
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t k = 0; k < n1; ++k) {
                if (x[i * n1 + k] == 0) continue;
                for (std::size_t j = 0; j < n1; ++j) z[i * n1 + j] += x[i * n1 + k] * y[k * n1 + j];
            }
        return z;
    };

    RowSpace span(n1 * n1);
    Op identity(n1 * n1, Rational(0));
    for (std::size_t i = 0; i < n1; ++i) identity[i * n1 + i] = 1;
    span.insert(identity);
    std::vector<Op> frontier{identity};
    const std::size_t full = n1 * n1;
    for (std::size_t step = 0; step < full && !frontier.empty() && span.rank() < full; ++step) {
        std::vector<Op> next;
        for (const auto& f : frontier) {
            for (const auto& gen : generators) {
                Op prod = multiply(gen, f);
                if (span.insert(prod)) next.push_back(std::move(prod));
                if (span.rank() == full) return full;
            }
        }
        frontier = std::move(next);
    }
    return span.rank();
}

bool check_irreducible(const GradedLSA& a)
{
    const auto n1 = a.indices_of_degree(-1).size();
    return burnside_span_dimension(a) == n1 * n1;
}

std::optional<SparseVector> find_grading_element(const GradedLSA& a)
{
    const auto n = a.dimension();
    std::vector<std::size_t> unknowns;
    for (auto i : a.indices_of_degree(0))
        if (a.basis()[i].parity == Parity::Even) unknowns.push_back(i);

    // One equation per (j, t): sum_u c_u [e_u, e_j]_t = deg(e_j) delta_{jt}.
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (std::size_t j = 0; j < n; ++j) {
        std::map<std::size_t, RationalVector> eqs;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            for (const auto& [t, c] : a.bracket(unknowns[u], j)) {
                auto& row = eqs.try_emplace(t, RationalVector(unknowns.size(), Rational(0))).first->second;
                row[u] = c;
            }
        }
        eqs.try_emplace(j, RationalVector(unknowns.size(), Rational(0)));
        for (auto& [t, row] : eqs) {
            rows.push_back(std::move(row));
            rhs.push_back(t == j ? Rational(a.basis()[j].degree) : Rational(0));
        }
    }
    Matrix m(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns.size(); ++c) m(r, c) = rows[r][c];
    auto sol = solve(m, rhs);
    if (!sol) return std::nullopt;
    SparseVector out;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if ((*sol)[u] != 0) out.emplace(unknowns[u], (*sol)[u]);
    return out;
}

std::map<int, std::pair<std::size_t, std::size_t>> graded_dims(const GradedLSA& a)
{
    std::map<int, std::pair<std::size_t, std::size_t>> out;
    for (const auto& b : a.basis()) {
        auto& slot = out[b.degree];
        if (b.parity == Parity::Even) ++slot.first;
        else ++slot.second;
    }
    return out;
}

std::vector<SparseVector> degree_zero_center(const GradedLSA& a)
{
    const auto n = a.dimension();
    const auto g = a.indices_of_degree(0);
    // columns: unknown coefficients; rows: (b, t) components of [x, e_b]
    std::vector<RationalVector> rows;
    for (auto b : g) {
        std::map<std::size_t, RationalVector> eqs;
        for (std::size_t u = 0; u < g.size(); ++u)
            for (const auto& [t, c] : a.bracket(g[u], b))
                eqs.try_emplace(t, RationalVector(g.size(), Rational(0))).first->second[u] = c;
        for (auto& [t, row] : eqs) rows.push_back(std::move(row));
    }
    Matrix m(rows.size(), g.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < g.size(); ++c) m(r, c) = rows[r][c];
    std::vector<SparseVector> out;
    for (const auto& v : kernel(m)) {
        SparseVector s;
        for (std::size_t u = 0; u < g.size(); ++u)
            if (v[u] != 0) s.emplace(g[u], v[u]);
        out.push_back(std::move(s));
    }
    (void)n;
    return out;
}

namespace {

std::size_t derived_dim_filtered(const GradedLSA& a, bool even_only)
{
    const auto n = a.dimension();
    RowSpace span(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (even_only && a.basis()[i].parity == Parity::Odd) continue;
        for (std::size_t j = i; j < n; ++j) {
            if (even_only && a.basis()[j].parity == Parity::Odd) continue;
            const auto& v = a.bracket(i, j);
            if (v.empty()) continue;
            RationalVector row(n, Rational(0));
            for (const auto& [k, c] : v) row[k] = c;
            span.insert(row);
            if (span.rank() == n) return n;
        }
    }
    return span.rank();
}

}  // namespace

std::size_t derived_dimension(const GradedLSA& a)
{
    return derived_dim_filtered(a, false);
}

std::size_t even_derived_dimension(const GradedLSA& a)
{
    return derived_dim_filtered(a, true);
}

}  // namespace svf
