#include "svf/sections.hpp"

#include "svf/errors.hpp"

namespace svf {

std::string to_string(SectionMethod m)
{
    switch (m) {
    case SectionMethod::BbwExact: return "bbw-exact";
    case SectionMethod::WeightBound: return "weight-bound";
    case SectionMethod::Vanishing: return "vanishing";
    case SectionMethod::Reciprocity: return "reciprocity-exact";
    }
    return "?";
}

SectionReport sections_irreducible(const PModule& m)
{
    const Weight& hw = m.highest_weight();
    if (!is_dominant(hw)) return {DimInterval::exactly(0), {}, SectionMethod::Vanishing};
    return {DimInterval::exactly(weyl_dim(hw, m.parabolic().system())), {{hw, 1}}, SectionMethod::BbwExact};
}

SectionReport sections_completely_reducible(const Character& c, const ParabolicSpec& p)
{
    if (!(c.system().type() == p.system().type())) throw InvalidInput("character and parabolic disagree");
    SectionReport report;
    report.method = SectionMethod::BbwExact;
    Multiplicity total = 0;
    for (const auto& part : decompose_levi(c, p.levi())) {
        if (!is_dominant(part.highest)) continue;
        total += part.multiplicity * weyl_dim(part.highest, p.system());
        report.constituents.push_back(part);
    }
    report.dimension = DimInterval::exactly(total);
    return report;
}

SectionReport sections_upper_bound(const Character& c)
{
    if (c.is_virtual()) throw InvalidInput("section bound of a virtual character");
    Multiplicity bound = 0;
    for (const auto& [w, m] : c.weights())
        if (is_dominant(w)) bound += m * weyl_dim(w, c.system());
    if (bound == 0) return {DimInterval::exactly(0), {}, SectionMethod::Vanishing};
    return {DimInterval{0, bound}, {}, SectionMethod::WeightBound};
}

bool vanishes_by_corollary(const Character& c)
{
    for (const auto& [w, m] : c.weights())
        if (m > 0 && is_dominant(w)) return false;
    return true;
}

}  // namespace svf
