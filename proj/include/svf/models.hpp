#pragma once

// Concrete graded Lie superalgebras: split semisimple Lie algebras in a
// Chevalley basis, vect(0|m), and the Cartan-calculus algebra built on a Lie
// algebra (contractions, Lie derivatives, the grading element and d).

#include "svf/glsa.hpp"
#include "svf/roots.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace svf {

struct LieAlgebraModel {
    RootSystemPtr system;
    /// Degree 0, all even. Basis order: h_1..h_r, e_alpha for the positive
    /// roots in root-system order, then f_alpha in the same order.
    GradedLSA algebra;

    std::size_t h_index(int i) const { return static_cast<std::size_t>(i); }
    std::size_t e_index(std::size_t root) const;
    std::size_t f_index(std::size_t root) const;
};

/// Structure constants N_{alpha,beta} come from the extraspecial-pair
/// algorithm: +(p+1) on extraspecial pairs, everything else forced.
LieAlgebraModel chevalley_algebra(const SemisimpleType& type);

/// Superderivations of the Grassmann algebra on m odd generators, basis
/// xi_S d_j graded by |S| - 1. 1 <= m <= 8.
GradedLSA vect_superpoint(int m);

/// Basis i_x (degree -1), theta_x and eps (degree 0), d (degree 1), for x
/// running over the basis of g. g must be concentrated in degree 0 and even.
GradedLSA hat_d(const GradedLSA& g);

/// Graded dimension vector, total dims from the lowest to the highest degree.
std::vector<std::size_t> graded_vector(const GradedLSA& a);
std::string format_graded_vector(const std::vector<std::size_t>& v);

struct InvariantComparison {
    std::pair<std::size_t, std::size_t> superdim_a, superdim_b;
    bool superdim_equal = false;
    std::vector<std::size_t> graded_a, graded_b;
    bool graded_equal = false;  // per degree and parity
    std::size_t derived_a = 0, derived_b = 0;
    bool derived_equal = false;
    std::size_t even_derived_a = 0, even_derived_b = 0;
    bool even_derived_equal = false;
    std::string graded_isomorphism;   // "excluded" or "undecided"
    std::string abstract_isomorphism; // always "undecided"
    /// Ungraded invariants that differ; each one on its own rules out an
    /// abstract isomorphism even though the status stays "undecided".
    std::vector<std::string> invariant_obstructions;
};

InvariantComparison compare_invariants(const GradedLSA& a, const GradedLSA& b);

}  // namespace svf
