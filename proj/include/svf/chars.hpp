#pragma once

// Formal characters: finite weight multisets over a fixed root system.

#include "svf/roots.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace svf {

using Multiplicity = std::int64_t;

class Character {
public:
    Character(RootSystemPtr system, bool is_virtual = false);
    Character(RootSystemPtr system, std::map<Weight, Multiplicity> weights, bool is_virtual = false);

    /// {0 : 1}
    static Character trivial(RootSystemPtr system);

    const RootSystem& system() const { return *system_; }
    const RootSystemPtr& system_ptr() const { return system_; }
    bool is_virtual() const { return virtual_; }

    /// Weight -> multiplicity, zero entries never stored, canonical
    /// (lexicographic) weight order.
    const std::map<Weight, Multiplicity>& weights() const { return weights_; }
    Multiplicity multiplicity(const Weight& w) const;
    bool empty() const { return weights_.empty(); }
    Multiplicity dimension() const;

    void add(const Weight& w, Multiplicity m);
    Character& operator+=(const Character& other);
    Character& operator-=(const Character& other);
    Character operator*(Multiplicity k) const;

    /// Clears the virtual flag; throws InvariantViolation on a negative entry.
    Character as_actual() const;

    friend bool operator==(const Character& a, const Character& b)
    {
        return a.system_->type() == b.system_->type() && a.weights_ == b.weights_;
    }

private:
    void check_same_system(const Character& other) const;

    RootSystemPtr system_;
    std::map<Weight, Multiplicity> weights_;
    bool virtual_ = false;
};

/// Character of the irreducible module of the reductive subalgebra spanned by
/// the torus and the root spaces of span(levi), with the given levi-dominant
/// highest weight. Computed by Freudenthal's recursion on the levi-dominant
/// weights, then spread over W_levi-orbits.
Character levi_irreducible_character(const Weight& highest, const IndexSet& levi, const RootSystemPtr& rs);

/// Irreducible character of the whole algebra. Throws InvalidInput when the
/// weight is not dominant.
Character irrep_character(const Weight& highest, const RootSystemPtr& rs);

/// Weyl dimension formula, exact over Q.
Multiplicity weyl_dim(const Weight& highest, const RootSystem& rs);
/// Same product restricted to the positive roots of span(levi).
Multiplicity levi_dim(const Weight& highest, const IndexSet& levi, const RootSystem& rs);

Character tensor(const Character& a, const Character& b);
Character dual(const Character& c);
/// psi^k: every weight scaled by k.
Character adams(const Character& c, int k);
/// Lambda^p by Newton's identities on Adams operations.
Character exterior_power(const Character& c, int p);

struct LeviConstituent {
    Weight highest;
    Multiplicity multiplicity = 0;

    friend bool operator==(const LeviConstituent&, const LeviConstituent&) = default;
};

/// Peels irreducible levi characters off c, highest first. Throws
/// NotCompletelyReducible when the residual goes negative or its top weight
/// is not levi-dominant.
std::vector<LeviConstituent> decompose_levi(const Character& c, const IndexSet& levi);

/// Inverse of decompose_levi.
Character recompose_levi(const std::vector<LeviConstituent>& parts, const IndexSet& levi, const RootSystemPtr& rs);

}  // namespace svf
