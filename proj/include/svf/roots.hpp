#pragma once

// Root systems of semisimple complex Lie algebras, with weights written in the
// fundamental-weight basis. Simple roots are numbered in Bourbaki order inside
// each simple factor and factors are concatenated in the order given.

#include "svf/linalg.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace svf {

enum class Family { A, B, C, D, E, F, G };

struct SimpleFactor {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

class SemisimpleType {
public:
    /// Validates the rank bounds of every factor; throws InvalidInput.
    explicit SemisimpleType(std::vector<SimpleFactor> factors);

    /// "A2", "B3", "A1xA1", "E6xG2". Case-sensitive family letters.
    static SemisimpleType parse(std::string_view text);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    int rank() const;
    bool is_simple() const { return factors_.size() == 1; }
    std::string to_string() const;

    friend bool operator==(const SemisimpleType&, const SemisimpleType&) = default;

private:
    std::vector<SimpleFactor> factors_;
};

/// Sorted, duplicate-free list of 0-based simple-root indices.
using IndexSet = std::vector<int>;

IndexSet all_indices(int rank);

/// Integral weight, coordinates <lambda, h_{alpha_i}>.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    /// Comma-separated integers, e.g. "1,0,-2".
    static Weight parse(std::string_view text);

    int rank() const { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const { return coords_; }
    bool is_zero() const;

    Weight operator+(const Weight& other) const;
    Weight operator-(const Weight& other) const;
    Weight operator-() const;
    Weight operator*(int k) const;
    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);

    std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> coords_;
};

struct Root {
    Weight weight;                  // fundamental-weight coordinates
    std::vector<int> simple_coords; // coefficients on the simple roots
    int height = 0;
    int factor = 0;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
public:
    const SemisimpleType& type() const { return type_; }
    int rank() const { return rank_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }

    /// <alpha_i, h_{alpha_j}>
    int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
    /// (alpha_i, alpha_i) / 2, with the shortest roots of each factor at 1.
    int symmetrizer(int i) const { return symmetrizer_[static_cast<std::size_t>(i)]; }
    /// (alpha_i, alpha_j)
    int root_form(int i, int j) const { return cartan(i, j) * symmetrizer(j); }
    /// Gram matrix of the fundamental weights, (varpi_i, varpi_j).
    const Matrix& weight_form() const { return weight_form_; }

    Rational inner_product(const Weight& a, const Weight& b) const;
    /// Integer-valued form scaled by form_denominator(), for hot loops.
    std::int64_t scaled_inner_product(const Weight& a, const Weight& b) const;
    std::int64_t form_denominator() const { return form_den_; }

    /// Coefficients of a weight on the simple roots (rational in general).
    RationalVector to_root_coords(const Weight& w) const;

    /// <lambda, h_alpha> = 2 (lambda, alpha) / (alpha, alpha) for a root alpha
    /// (positive or negative). Throws InvalidInput when alpha is not a root.
    int pairing(const Weight& lambda, const Weight& alpha) const;

    /// Index into positive_roots(), if w is a positive root.
    std::optional<std::size_t> positive_root_index(const Weight& w) const;
    bool is_root(const Weight& w) const;

    /// True when every simple root occurring in r lies in levi.
    static bool in_span(const Root& r, const IndexSet& levi);

    int factor_of(int simple_index) const { return factor_of_[static_cast<std::size_t>(simple_index)]; }
    IndexSet factor_indices(int factor) const;
    int factor_count() const { return static_cast<int>(type_.factors().size()); }

    Weight reflect(const Weight& w, int i) const;
    Weight rho() const;
    std::uint64_t weyl_group_order() const;

    friend RootSystemPtr build_root_system(const SemisimpleType& type);

private:
    explicit RootSystem(SemisimpleType type);

    SemisimpleType type_;
    int rank_ = 0;
    std::vector<int> cartan_;
    std::vector<int> symmetrizer_;
    std::vector<int> factor_of_;
    std::vector<Weight> simple_roots_;
    std::vector<Root> positive_roots_;
    Matrix inverse_cartan_;
    Matrix weight_form_;
    std::vector<std::int64_t> form_num_;
    std::int64_t form_den_ = 1;
};

RootSystemPtr build_root_system(const SemisimpleType& type);

/// Coordinates i in s are all nonnegative.
bool is_dominant(const Weight& w, const IndexSet& s);
bool is_dominant(const Weight& w);

/// Orbit under the Weyl group generated by the reflections in s (all simple
/// reflections by default).
std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);
std::set<Weight> weyl_orbit(const Weight& w, const RootSystem& rs, const IndexSet& s);

/// Reflects w into the s-dominant chamber.
Weight dominant_representative(const Weight& w, const RootSystem& rs, const IndexSet& s);

/// A reduced word for the longest element of W_s, applied left to right.
std::vector<int> longest_element_word(const RootSystem& rs, const IndexSet& s);

/// w_0^s applied to w.
Weight longest_element_image(const Weight& w, const IndexSet& s, const RootSystem& rs);

/// Maximal root of one simple factor.
Weight highest_root(const RootSystem& rs, int factor);

/// "1,3" (1-based) or "none" -> 0-based IndexSet. Throws InvalidInput.
IndexSet parse_index_set(std::string_view text, int rank);
std::string index_set_to_string(const IndexSet& s);

}  // namespace svf
