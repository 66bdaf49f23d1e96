#pragma once

// Finite-dimensional Z-graded Lie superalgebras over Q, given by structure
// constants on a homogeneous basis. Parity is always degree mod 2.

#include "svf/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace svf {

enum class Parity { Even = 0, Odd = 1 };

struct BasisElement {
    std::string label;
    int degree = 0;
    Parity parity = Parity::Even;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Sparse vector over the basis: index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

class GradedLSA {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

    GradedLSA() = default;

    /// brackets holds [e_i, e_j] for i <= j only; zero entries may be omitted.
    /// Throws InvalidInput when parity != degree mod 2, a bracket breaks the
    /// grading, or an even element has nonzero self-bracket.
    GradedLSA(std::vector<BasisElement> basis, BracketTable brackets);

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BracketTable& stored_brackets() const { return brackets_; }

    /// [e_i, e_j] for any i, j using super-antisymmetry for i > j.
    const SparseVector& bracket(std::size_t i, std::size_t j) const;
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

    std::vector<std::size_t> indices_of_degree(int degree) const;
    std::optional<std::size_t> index_of(const std::string& label) const;
    int parity_sign(std::size_t i, std::size_t j) const;  // (-1)^{p(i) p(j)}

    /// Returns a copy with one stored structure constant changed; for tests
    /// that need a deliberately broken algebra.
    GradedLSA with_perturbed_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& delta) const;

    /// Quotient by the ideal of all degrees above max_degree.
    GradedLSA truncated(int max_degree) const;

private:
    void build_table();

    std::vector<BasisElement> basis_;
    BracketTable brackets_;
    std::vector<SparseVector> table_;  // dense n x n cache, row-major
};

struct JacobiViolation {
    std::size_t x = 0, y = 0, z = 0;
    SparseVector value;
};

/// All basis triples (up to permutation) where the super-Jacobi sum is nonzero.
std::vector<JacobiViolation> check_super_jacobi(const GradedLSA& a, std::size_t max_reported = 16);

/// No nonzero element of nonnegative degree commutes with the whole negative part.
bool check_transitive(const GradedLSA& a);

/// The degree-0 action on degree -1 is absolutely irreducible: the operators
/// and the identity generate the full matrix algebra. Throws InvalidInput
/// when degree -1 is zero.
bool check_irreducible(const GradedLSA& a);

/// Dimension of the associative algebra generated by the degree-0 operators
/// on degree -1, plus the identity.
std::size_t burnside_span_dimension(const GradedLSA& a);

/// A degree-0 element x with [x, e] = deg(e) e for every basis element.
std::optional<SparseVector> find_grading_element(const GradedLSA& a);

/// degree -> (even dimension, odd dimension)
std::map<int, std::pair<std::size_t, std::size_t>> graded_dims(const GradedLSA& a);

/// Basis of the centre of the degree-0 subalgebra.
std::vector<SparseVector> degree_zero_center(const GradedLSA& a);

/// dim [a, a]
std::size_t derived_dimension(const GradedLSA& a);
/// dim [a_even, a_even]
std::size_t even_derived_dimension(const GradedLSA& a);

}  // namespace svf
