#pragma once

// Global vector fields on a split supermanifold (G/P, Lambda(E_phi)): the
// graded dimensions of the superalgebra of derivations, the transitivity
// verdict, the degree-0 structure, and the cotangent (de Rham) case.
//
// Facts that are consumed rather than checked (the degree-0 image equals the
// image of g, local faithfulness of the G-action) enter as explicit
// assumption flags and are echoed in every report.

#include "svf/flag.hpp"
#include "svf/sections.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace svf {

struct Assumptions {
    bool alpha_d0_equals_dt_g = false;
    bool G_locally_faithful = false;

    friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

class SplitSuperdata {
public:
    SplitSuperdata(PModule phi, Assumptions assumptions);

    const SemisimpleType& type() const { return phi_.parabolic().system().type(); }
    const ParabolicSpec& parabolic() const { return phi_.parabolic(); }
    const PModule& phi() const { return phi_; }
    const Assumptions& assumptions() const { return assumptions_; }

    Multiplicity odd_dimension() const { return odd_dim_; }
    int even_dimension() const { return parabolic().flag_dimension(); }

private:
    PModule phi_;
    Assumptions assumptions_;
    Multiplicity odd_dim_ = 0;
};

/// Highest weight of phi^* is dominant.
bool homogeneity_check(const SplitSuperdata& s);

/// Sections of E_{phi^*}.
SectionReport d_minus_one(const SplitSuperdata& s);

struct DegreeEntry {
    int p = 0;
    DimInterval dimension;
    SectionMethod method = SectionMethod::BbwExact;
    std::vector<LeviConstituent> constituents;  // exact entries only
};

/// Degree p >= 0: [sections of the sub bundle, that + bound on the quotient].
DegreeEntry d_p_interval(const SplitSuperdata& s, int p);

struct GradedDimReport {
    bool homogeneous = false;
    std::vector<DegreeEntry> degrees;  // p = -1 .. odd dimension
};

GradedDimReport graded_dim_report(const SplitSuperdata& s);

struct FactorWitness {
    int factor = 0;
    std::optional<int> simple_root;  // 0-based index with lambda(h) > 0
};

struct TransitivityVerdict {
    Weight lambda;  // highest weight of phi^*
    bool dominant = false;
    std::vector<FactorWitness> per_factor;
    std::vector<std::string> assumptions_used;
    bool positive = false;

    std::string verdict() const { return positive ? "transitive-and-irreducible" : "hypotheses-not-met"; }
};

TransitivityVerdict theorem4_check(const SplitSuperdata& s);

struct D0Structure {
    DimInterval end_dimension;       // END E_phi
    std::string end_source;          // "assumed-faithful" or "weight-bound"
    DimInterval end_sections;        // sections of phi (x) phi^*, completely reducible
    int gtilde_dimension = 0;        // simple factors not inside the Levi
    DimInterval d0_dimension;
    bool direct_sum = true;
    int radical_dimension = 1;       // C eps
    std::vector<std::string> assumptions_used;
};

/// Throws InvalidInput (naming the verdict) when theorem4_check is negative.
D0Structure d0_structure(const SplitSuperdata& s);

struct VanishingCheck {
    int p = 0;
    bool no_dominant_weight = false;  // vanishes_by_corollary
    std::optional<Multiplicity> exact;  // explicit route, when the weights alone do not decide
    bool vanishes = false;
    std::size_t weight_count = 0;
    std::vector<Weight> dominant_weights;
};

struct CotangentReport {
    SemisimpleType type;
    IndexSet levi;
    int manifold_dimension = 0;
    Multiplicity algebra_dimension = 0;   // dim g = Weyl dimension of the highest root
    Multiplicity tangent_bound = 0;       // weight bound on sections of T
    bool tangent_bound_tight = false;
    Multiplicity end_assumed = 1;         // END T = C eps
    Multiplicity end_bound = 0;           // weight bound on tau (x) tau^*
    // Explicit counts for p = 0, 1; absent when too large to enumerate.
    std::optional<Multiplicity> tangent_exact{};
    std::optional<Multiplicity> end_exact{};
    /// False when the sections of T exceed dim g, i.e. the automorphism
    /// algebra of G/P is larger than g. Graded dims then use the exact counts.
    bool tangent_is_adjoint = true;
    std::vector<VanishingCheck> vanishing{};
    std::vector<int> failed_degrees{};
    std::optional<std::tuple<Multiplicity, Multiplicity, Multiplicity>> graded_dims{};
    std::optional<Multiplicity> total{};
    bool hat_d_match = false;
};

/// Exact dimension of the sections of T (x) Lambda^p T^* over G/P. Builds
/// the isotropy module g/p from a Chevalley basis and counts, for every
/// dominant weight lambda, the vectors of weight lambda killed by the Levi
/// raising operators and by f_i^(lambda_i + 1). Throws InvalidInput when the
/// weight spaces involved are too large to enumerate.
SectionReport tangent_forms_sections(const ParabolicSpec& parabolic, int p);

/// type must be simple.
CotangentReport cotangent_report(const SemisimpleType& type, const IndexSet& levi);

}  // namespace svf
