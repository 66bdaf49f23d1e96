#include "svf/chars.hpp"

#include "svf/errors.hpp"

#include <algorithm>

namespace svf {

Character::Character(RootSystemPtr system, bool is_virtual) : system_(std::move(system)), virtual_(is_virtual)
{
    if (!system_) throw InvalidInput("character without a root system");
}

Character::Character(RootSystemPtr system, std::map<Weight, Multiplicity> weights, bool is_virtual)
    : Character(std::move(system), is_virtual)
{
    for (const auto& [w, m] : weights) add(w, m);
    if (virtual_) return;
    for (const auto& [w, m] : weights_)
        if (m < 0) throw InvalidInput("negative multiplicity at weight " + w.to_string() + " in an actual character");
}

Character Character::trivial(RootSystemPtr system)
{
    Character c(system);
    c.add(Weight::zero(system->rank()), 1);
    return c;
}

Multiplicity Character::multiplicity(const Weight& w) const
{
    auto it = weights_.find(w);
    return it == weights_.end() ? 0 : it->second;
}

Multiplicity Character::dimension() const
{
    Multiplicity total = 0;
    for (const auto& [w, m] : weights_) total += m;
    return total;
}

void Character::add(const Weight& w, Multiplicity m)
{
    if (m == 0) return;
    if (w.rank() != system_->rank()) throw InvalidInput("weight " + w.to_string() + " has the wrong rank");
    auto [it, inserted] = weights_.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) weights_.erase(it);
    }
}

void Character::check_same_system(const Character& other) const
{
    if (!(system_->type() == other.system_->type()))
        throw InvalidInput("characters over different root systems");
}

Character& Character::operator+=(const Character& other)
{
    check_same_system(other);
    for (const auto& [w, m] : other.weights_) add(w, m);
    virtual_ = virtual_ || other.virtual_;
    return *this;
}

Character& Character::operator-=(const Character& other)
{
    check_same_system(other);
    for (const auto& [w, m] : other.weights_) add(w, -m);
    virtual_ = true;
    return *this;
}

Character Character::operator*(Multiplicity k) const
{
    Character out(system_, virtual_ || k < 0);
    for (const auto& [w, m] : weights_) out.add(w, m * k);
    return out;
}

Character Character::as_actual() const
{
    for (const auto& [w, m] : weights_) {
        if (m < 0)
            throw InvariantViolation("character multiplicities are nonnegative (weight " + w.to_string() + " has " +
                                     std::to_string(m) + ")");
    }
    Character out = *this;
    out.virtual_ = false;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Weight> levi_positive_roots(const RootSystem& rs, const IndexSet& levi)
{
    std::vector<Weight> out;
    for (const auto& r : rs.positive_roots())
        if (RootSystem::in_span(r, levi)) out.push_back(r.weight);
    return out;
}

}  // namespace

Character levi_irreducible_character(const Weight& highest, const IndexSet& levi, const RootSystemPtr& rsp)
{
    const RootSystem& rs = *rsp;
    if (highest.rank() != rs.rank()) throw InvalidInput("weight rank does not match root system");
    if (!is_dominant(highest, levi))
        throw InvalidInput("highest weight " + highest.to_string() + " is not dominant for the chosen simple roots");

    const auto roots = levi_positive_roots(rs, levi);
    Weight two_rho = Weight::zero(rs.rank());
    for (const auto& a : roots) two_rho += a;

    // 4 * den * (mu + rho, mu + rho)
    auto norm = [&](const Weight& mu) {
        const Weight v = mu * 2 + two_rho;
        return rs.scaled_inner_product(v, v);
    };

    std::vector<Weight> dominant{highest};
    std::set<Weight> seen{highest};
    for (std::size_t head = 0; head < dominant.size(); ++head) {
        for (const auto& a : roots) {
            Weight nu = dominant[head] - a;
            if (is_dominant(nu, levi) && seen.insert(nu).second) dominant.push_back(nu);
        }
    }
    std::vector<std::pair<std::int64_t, Weight>> order;
    order.reserve(dominant.size());
    for (auto& w : dominant) order.emplace_back(norm(w), w);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });

    const std::int64_t top = norm(highest);
    std::map<Weight, Multiplicity> mult;
    auto lookup = [&](const Weight& w) -> Multiplicity {
        auto it = mult.find(dominant_representative(w, rs, levi));
        return it == mult.end() ? 0 : it->second;
    };

    for (const auto& [nrm, mu] : order) {
        if (mu == highest) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (const auto& a : roots) {
            Weight nu = mu + a;
            while (true) {
                const Multiplicity m = lookup(nu);
                if (m == 0) break;
                acc += m * rs.scaled_inner_product(nu, a);
                nu += a;
            }
        }
        const std::int64_t num = 8 * acc;
        const std::int64_t den = top - nrm;
        if (den <= 0 || num % den != 0)
            throw InvariantViolation("Freudenthal recursion yields a nonnegative integer multiplicity");
        if (num / den > 0) mult[mu] = num / den;
    }

    Character out(rsp);
    for (const auto& [mu, m] : mult) {
        for (const auto& w : weyl_orbit(mu, rs, levi)) out.add(w, m);
    }
    return out;
}

Character irrep_character(const Weight& highest, const RootSystemPtr& rs)
{
    if (!is_dominant(highest)) throw InvalidInput("highest weight " + highest.to_string() + " is not dominant");
    return levi_irreducible_character(highest, all_indices(rs->rank()), rs);
}

Multiplicity levi_dim(const Weight& highest, const IndexSet& levi, const RootSystem& rs)
{
    if (!is_dominant(highest, levi)) throw InvalidInput("weight " + highest.to_string() + " is not dominant");
    Integer num = 1;
    Integer den = 1;
    for (const auto& r : rs.positive_roots()) {
        if (!RootSystem::in_span(r, levi)) continue;
        long shifted = 0;
        long base = 0;
        for (std::size_t j = 0; j < r.simple_coords.size(); ++j) {
            const long k = r.simple_coords[j];
            if (k == 0) continue;
            const long d = rs.symmetrizer(static_cast<int>(j));
            shifted += k * (highest[static_cast<int>(j)] + 1) * d;
            base += k * d;
        }
        num *= shifted;
        den *= base;
    }
    if (num % den != 0) throw InvariantViolation("Weyl dimension formula yields an integer");
    Integer q = num / den;
    if (!q.fits_slong_p()) throw InvalidInput("dimension does not fit in 64 bits");
    return q.get_si();
}

Multiplicity weyl_dim(const Weight& highest, const RootSystem& rs)
{
    return levi_dim(highest, all_indices(rs.rank()), rs);
}

Character tensor(const Character& a, const Character& b)
{
    if (!(a.system().type() == b.system().type())) throw InvalidInput("tensor of characters over different systems");
    Character out(a.system_ptr(), a.is_virtual() || b.is_virtual());
    for (const auto& [wa, ma] : a.weights())
        for (const auto& [wb, mb] : b.weights()) out.add(wa + wb, ma * mb);
    return out;
}

Character dual(const Character& c)
{
    Character out(c.system_ptr(), c.is_virtual());
    for (const auto& [w, m] : c.weights()) out.add(-w, m);
    return out;
}

Character adams(const Character& c, int k)
{
    Character out(c.system_ptr(), c.is_virtual());
    for (const auto& [w, m] : c.weights()) out.add(w * k, m);
    return out;
}

Character exterior_power(const Character& c, int p)
{
    if (c.is_virtual()) throw InvalidInput("exterior power of a virtual character");
    if (p < 0) throw InvalidInput("negative exterior degree");
    if (p == 0) return Character::trivial(c.system_ptr());
    if (p > c.dimension()) return Character(c.system_ptr());

    // p E_p = sum_{k=1}^{p} (-1)^{k-1} psi^k(c) E_{p-k}
    std::vector<Character> e{Character::trivial(c.system_ptr())};
    for (int q = 1; q <= p; ++q) {
        Character acc(c.system_ptr(), true);
        for (int k = 1; k <= q; ++k) {
            Character term = tensor(adams(c, k), e[static_cast<std::size_t>(q - k)]);
            if (k % 2 == 0) acc -= term;
            else acc += term;
        }
        Character next(c.system_ptr(), true);
        for (const auto& [w, m] : acc.weights()) {
            if (m % q != 0) throw InvariantViolation("Newton identity division is exact");
            next.add(w, m / q);
        }
        e.push_back(std::move(next));
    }
    return e.back().as_actual();
}

std::vector<LeviConstituent> decompose_levi(const Character& c, const IndexSet& levi)
{
    const RootSystem& rs = c.system();
    std::map<Weight, Rational> height_cache;
    auto height = [&](const Weight& w) -> const Rational& {
        auto it = height_cache.find(w);
        if (it != height_cache.end()) return it->second;
        const auto coords = rs.to_root_coords(w);
        Rational h = 0;
        for (int i : levi) h += coords[static_cast<std::size_t>(i)];
        return height_cache.emplace(w, h).first->second;
    };

    std::vector<LeviConstituent> out;
    Character residual(c.system_ptr(), c.weights(), true);
    while (!residual.empty()) {
        const Weight* top = nullptr;
        for (const auto& [w, m] : residual.weights()) {
            if (m < 0)
                throw NotCompletelyReducible("residual multiplicity of " + w.to_string() + " is negative");
            if (!top || height(w) > height(*top) || (height(w) == height(*top) && w > *top)) top = &w;
        }
        const Weight mu = *top;
        const Multiplicity m = residual.multiplicity(mu);
        if (!is_dominant(mu, levi))
            throw NotCompletelyReducible("maximal residual weight " + mu.to_string() + " is not levi-dominant");
        out.push_back({mu, m});
        residual -= levi_irreducible_character(mu, levi, c.system_ptr()) * m;
    }
    return out;
}

Character recompose_levi(const std::vector<LeviConstituent>& parts, const IndexSet& levi, const RootSystemPtr& rs)
{
    Character out(rs);
    for (const auto& part : parts) out += levi_irreducible_character(part.highest, levi, rs) * part.multiplicity;
    return out;
}

}  // namespace svf
