#pragma once

// Parabolic subgroups P containing the negative Borel, their irreducible
// modules, and the characters of the homogeneous bundles built from them.

#include "svf/chars.hpp"

#include <utility>

namespace svf {

class ParabolicSpec {
public:
    ParabolicSpec(RootSystemPtr system, IndexSet levi);

    const RootSystem& system() const { return *system_; }
    const RootSystemPtr& system_ptr() const { return system_; }
    const IndexSet& levi() const { return levi_; }
    bool is_borel() const { return levi_.empty(); }

    /// |R+| - |R+ cap span(levi)|
    int flag_dimension() const;

    friend bool operator==(const ParabolicSpec& a, const ParabolicSpec& b)
    {
        return a.system_->type() == b.system_->type() && a.levi_ == b.levi_;
    }

private:
    RootSystemPtr system_;
    IndexSet levi_;
};

/// Irreducible P-module: an irreducible Levi module with trivial action of
/// the unipotent radical, fixed by its levi-dominant highest weight.
class PModule {
public:
    PModule(ParabolicSpec parabolic, Weight highest);

    const ParabolicSpec& parabolic() const { return parabolic_; }
    const Weight& highest_weight() const { return highest_; }

    friend bool operator==(const PModule&, const PModule&) = default;

private:
    ParabolicSpec parabolic_;
    Weight highest_;
};

/// Isotropy representation on the tangent space at the base point: positive
/// roots outside span(levi), each once.
Character tangent_character(const ParabolicSpec& p);

Character pmodule_character(const PModule& m);

/// Highest weight -w_0^L(lambda).
PModule dual_pmodule(const PModule& m);

struct BundlePair {
    Character sub;   // phi^* (x) Lambda^{p+1}(phi)
    Character quot;  // tau (x) Lambda^p(phi)
};

/// Characters of the two bundle pieces of degree-p derivations of the
/// exterior algebra of E_phi; for p = -1 the derivations are phi^* alone.
BundlePair der_sequence_characters(const PModule& m, int p);
/// Weight-multiset version for modules that are not Levi-irreducible.
BundlePair der_sequence_characters(const Character& phi, const ParabolicSpec& parabolic, int p);

}  // namespace svf
