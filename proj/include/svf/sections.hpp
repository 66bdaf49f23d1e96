#pragma once

// Global sections of homogeneous bundles over G/P: dominant-chamber
// Bott-Borel-Weil, the weight-multiplicity upper bound for arbitrary
// P-modules, and vanishing when no weight is dominant.

#include "svf/flag.hpp"

#include <string>
#include <vector>

namespace svf {

struct DimInterval {
    Multiplicity lo = 0;
    Multiplicity hi = 0;

    static DimInterval exactly(Multiplicity d) { return {d, d}; }
    bool exact() const { return lo == hi; }
    bool contains(Multiplicity d) const { return lo <= d && d <= hi; }

    friend bool operator==(const DimInterval&, const DimInterval&) = default;
};

enum class SectionMethod {
    BbwExact,     // sum of Weyl dimensions over dominant constituents
    WeightBound,  // sum over dominant weights of mult * Weyl dimension
    Vanishing,    // no dominant weight at all
    Reciprocity,  // P-homomorphisms from each G-irreducible into an explicit module
};

std::string to_string(SectionMethod m);

struct SectionReport {
    DimInterval dimension;
    std::vector<LeviConstituent> constituents;  // G-highest weights, exact reports only
    SectionMethod method = SectionMethod::BbwExact;
};

SectionReport sections_irreducible(const PModule& m);

/// c must be the character of a P-module that is completely reducible (the
/// unipotent radical acts trivially).
SectionReport sections_completely_reducible(const Character& c, const ParabolicSpec& p);

/// Interval [0, bound] valid for any P-module with weights c.
SectionReport sections_upper_bound(const Character& c);

bool vanishes_by_corollary(const Character& c);

}  // namespace svf
