#include "svf/linalg.hpp"

#include "svf/errors.hpp"

#include <algorithm>
#include <utility>

namespace svf {

Rational parse_rational(const std::string& text)
{
    if (text.empty()) throw InvalidInput("empty rational");
    auto valid = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                           [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw InvalidInput("malformed rational '" + text + "'");
    Rational q{Integer(num[0] == '+' ? num.substr(1) : num), Integer(den)};
    if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

void make_primitive(IntegerVector& row)
{
    Integer g = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

bool is_zero(const IntegerVector& row)
{
    return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

// row <- pivot_value * row - row[col] * pivot_row
void eliminate(IntegerVector& row, const IntegerVector& pivot_row, std::size_t col)
{
    if (row[col] == 0) return;
    const Integer factor = row[col];
    const Integer scale = pivot_row[col];
    for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = scale * row[j] - factor * pivot_row[j];
    }
    make_primitive(row);
}

struct Reduced {
    std::vector<IntegerVector> rows;  // only the nonzero rows, pivot order
    std::vector<std::size_t> pivots;
};

// Fraction-free Gauss-Jordan on the first `pivot_limit` columns.
Reduced reduce_rows(std::vector<IntegerVector> rows, std::size_t pivot_limit)
{
    Reduced out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < pivot_limit && next < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next) eliminate(rows[r], rows[next], col);
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

std::vector<IntegerVector> integer_rows(const Matrix& m, const RationalVector* rhs)
{
    std::vector<IntegerVector> rows;
    rows.reserve(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        RationalVector r(m.data.begin() + static_cast<std::ptrdiff_t>(i * m.cols),
                         m.data.begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols));
        if (rhs) r.push_back((*rhs)[i]);
        rows.push_back(primitive_integer_row(r));
    }
    return rows;
}

}  // namespace

IntegerVector primitive_integer_row(const RationalVector& row)
{
    Integer l = 1;
    for (const auto& q : row) {
        if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    IntegerVector out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = row[j].get_num() * (l / row[j].get_den());
    }
    make_primitive(out);
    return out;
}

IntegerVector RowSpace::reduce(IntegerVector row) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        eliminate(row, rows_[r], pivots_[r]);
    }
    return row;
}

bool RowSpace::insert(const RationalVector& row)
{
    return insert(primitive_integer_row(row));
}

bool RowSpace::insert(IntegerVector row)
{
    if (row.size() != columns_) throw InvalidInput("row length mismatch in RowSpace");
    row = reduce(std::move(row));
    if (is_zero(row)) return false;
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    // keep the echelon rows reduced against the new pivot as well
    for (auto& existing : rows_) eliminate(existing, row, pivot);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

bool RowSpace::contains(const RationalVector& row) const
{
    if (row.size() != columns_) throw InvalidInput("row length mismatch in RowSpace");
    return is_zero(reduce(primitive_integer_row(row)));
}

std::size_t rank(const Matrix& m)
{
    return reduce_rows(integer_rows(m, nullptr), m.cols).pivots.size();
}

std::vector<RationalVector> kernel(const Matrix& m)
{
    const Reduced red = reduce_rows(integer_rows(m, nullptr), m.cols);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : red.pivots) is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            const auto p = red.pivots[r];
            v[p] = Rational(-red.rows[r][free], red.rows[r][p]);
            v[p].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& rhs)
{
    if (rhs.size() != m.rows) throw InvalidInput("right-hand side length mismatch");
    auto rows = integer_rows(m, &rhs);
    // Reduce over the coefficient columns, then look for 0 = c rows.
    std::size_t next = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < m.cols && next < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next) eliminate(rows[r], rows[next], col);
        }
        pivots.push_back(col);
        ++next;
    }
    for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r][m.cols] != 0) return std::nullopt;
    }
    RationalVector x(m.cols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        x[pivots[r]] = Rational(rows[r][m.cols], rows[r][pivots[r]]);
        x[pivots[r]].canonicalize();
    }
    return x;
}

Matrix inverse(const Matrix& m)
{
    if (m.rows != m.cols) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = m.rows;
    Matrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n, Rational(0));
        e[j] = 1;
        auto col = solve(m, e);
        if (!col) throw InvalidInput("singular matrix");
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    if (rank(m) != n) throw InvalidInput("singular matrix");
    return inv;
}

}  // namespace svf
