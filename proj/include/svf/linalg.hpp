#pragma once

// Exact linear algebra over Q. Every routine clears denominators and works on
// integer rows with fraction-free (Bareiss-style) elimination; division only
// happens when a rational solution is read back.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace svf {

using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "p", "-p" or "p/q". Throws InvalidInput otherwise.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Scales by the lcm of denominators and divides by the content, giving a
/// primitive integer vector with the same span. The zero vector stays zero.
IntegerVector primitive_integer_row(const RationalVector& row);

/// Incrementally maintained row space. Rows are kept primitive and in
/// echelon form keyed by their pivot column.
class RowSpace {
public:
    explicit RowSpace(std::size_t columns) : columns_(columns) {}

    /// Adds a vector; returns true when it was independent of the span so far.
    bool insert(const RationalVector& row);
    bool insert(IntegerVector row);

    /// True when the vector already lies in the span.
    bool contains(const RationalVector& row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return columns_; }

private:
    IntegerVector reduce(IntegerVector row) const;

    std::size_t columns_;
    std::vector<IntegerVector> rows_;  // echelon rows
    std::vector<std::size_t> pivots_;  // pivot column per row
};

/// Dense rational matrix stored row-major.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rational& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<RationalVector> kernel(const Matrix& m);

/// Solves m x = rhs. Returns nullopt when inconsistent; otherwise the
/// canonical solution with every free variable set to zero.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& rhs);

/// Inverse of a square nonsingular matrix; throws InvalidInput when singular.
Matrix inverse(const Matrix& m);

}  // namespace svf
