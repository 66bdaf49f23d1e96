#include "svf/flag.hpp"

#include "svf/errors.hpp"

#include <algorithm>

namespace svf {

ParabolicSpec::ParabolicSpec(RootSystemPtr system, IndexSet levi) : system_(std::move(system)), levi_(std::move(levi))
{
    if (!system_) throw InvalidInput("parabolic without a root system");
    std::sort(levi_.begin(), levi_.end());
    if (std::adjacent_find(levi_.begin(), levi_.end()) != levi_.end())
        throw InvalidInput("repeated simple-root index in levi");
    for (int i : levi_)
        if (i < 0 || i >= system_->rank()) throw InvalidInput("levi index out of range");
}

int ParabolicSpec::flag_dimension() const
{
    int count = 0;
    for (const auto& r : system_->positive_roots())
        if (!RootSystem::in_span(r, levi_)) ++count;
    return count;
}

PModule::PModule(ParabolicSpec parabolic, Weight highest) : parabolic_(std::move(parabolic)), highest_(std::move(highest))
{
    if (highest_.rank() != parabolic_.system().rank()) throw InvalidInput("highest weight has the wrong rank");
    if (!is_dominant(highest_, parabolic_.levi()))
        throw InvalidInput("highest weight " + highest_.to_string() + " is not levi-dominant");
}

Character tangent_character(const ParabolicSpec& p)
{
    Character out(p.system_ptr());
    for (const auto& r : p.system().positive_roots())
        if (!RootSystem::in_span(r, p.levi())) out.add(r.weight, 1);
    return out;
}

Character pmodule_character(const PModule& m)
{
    return levi_irreducible_character(m.highest_weight(), m.parabolic().levi(), m.parabolic().system_ptr());
}

PModule dual_pmodule(const PModule& m)
{
    const auto& p = m.parabolic();
    return PModule(p, -longest_element_image(m.highest_weight(), p.levi(), p.system()));
}

BundlePair der_sequence_characters(const Character& phi, const ParabolicSpec& parabolic, int p)
{
    if (p < -1) throw InvalidInput("derivation degree must be at least -1");
    if (!(phi.system().type() == parabolic.system().type())) throw InvalidInput("module and parabolic disagree");
    if (p == -1) return {dual(phi), Character(phi.system_ptr())};
    return {tensor(dual(phi), exterior_power(phi, p + 1)),
            tensor(tangent_character(parabolic), exterior_power(phi, p))};
}

BundlePair der_sequence_characters(const PModule& m, int p)
{
    return der_sequence_characters(pmodule_character(m), m.parabolic(), p);
}

}  // namespace svf
