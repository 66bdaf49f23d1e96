#include <doctest.h>

#include "svf/errors.hpp"
#include "svf/glsa.hpp"
#include "svf/models.hpp"
#include "svf/serialize.hpp"

using namespace svf;

namespace {

BasisElement even(const std::string& l, int d = 0) { return {l, d, Parity::Even}; }
BasisElement odd(const std::string& l, int d = -1) { return {l, d, Parity::Odd}; }

// v1, v2 in degree -1; h1, h2 (and optionally a dead h3) acting diagonally.
GradedLSA diagonal_action(bool with_dead_element)
{
    std::vector<BasisElement> basis{odd("v1"), odd("v2"), even("h1"), even("h2")};
    if (with_dead_element) basis.push_back(even("h3"));
    GradedLSA::BracketTable b;
    b[{0, 2}][0] = -1;  // [v1, h1] = -[h1, v1] = -v1
    b[{1, 3}][1] = -1;
    return GradedLSA(basis, b);
}

// Super-Jacobi over all ordered triples, written independently of the
// library's sorted-triple loop.
bool jacobi_everywhere(const GradedLSA& a)
{
    const auto n = a.dimension();
    auto p = [&](std::size_t i) { return a.basis()[i].parity == Parity::Odd ? 1 : 0; };
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                // [x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]
                const SparseVector ex{{x, Rational(1)}}, ey{{y, Rational(1)}}, ez{{z, Rational(1)}};
                auto lhs = a.bracket(ex, a.bracket(ey, ez));
                auto r1 = a.bracket(a.bracket(ex, ey), ez);
                auto r2 = a.bracket(ey, a.bracket(ex, ez));
                const int s = (p(x) * p(y)) ? -1 : 1;
                for (const auto& [k, c] : r1) lhs[k] -= c;
                for (const auto& [k, c] : r2) lhs[k] -= s * c;
                for (const auto& [k, c] : lhs)
                    if (c != 0) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("constructor enforces parity and grading")
{
    CHECK_THROWS_AS((GradedLSA({{"x", -1, Parity::Even}}, {})), InvalidInput);
    CHECK_THROWS_AS((GradedLSA({{"x", 0, Parity::Odd}}, {})), InvalidInput);
    GradedLSA::BracketTable wrong_degree;
    wrong_degree[{0, 1}][0] = 1;  // [x_-1, y_0] landing in degree -1 is fine
    CHECK_NOTHROW(GradedLSA({odd("x"), even("y")}, wrong_degree));
    wrong_degree[{0, 1}][1] = 1;  // but not in degree 0
    CHECK_THROWS_AS((GradedLSA({odd("x"), even("y")}, wrong_degree)), InvalidInput);
    GradedLSA::BracketTable self;
    self[{0, 0}][0] = 1;
    CHECK_THROWS_AS((GradedLSA({even("h")}, self)), InvalidInput);
    GradedLSA::BracketTable reversed;
    reversed[{1, 0}][0] = 1;
    CHECK_THROWS_AS((GradedLSA({odd("x"), even("y")}, reversed)), InvalidInput);
    GradedLSA::BracketTable out_of_range;
    out_of_range[{0, 0}][5] = 1;
    CHECK_THROWS_AS((GradedLSA({odd("x")}, out_of_range)), InvalidInput);
}

TEST_CASE("brackets are super-antisymmetric")
{
    const auto a = vect_superpoint(2);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            const auto& x = a.bracket(i, j);
            const auto& y = a.bracket(j, i);
            const int s = -a.parity_sign(i, j);
            for (const auto& [k, c] : x) CHECK(Rational(y.at(k)) == Rational(s * c));
            CHECK(x.size() == y.size());
            // grading respected
            for (const auto& [k, c] : x) CHECK(a.basis()[k].degree == a.basis()[i].degree + a.basis()[j].degree);
        }
    }
}

TEST_CASE("check_super_jacobi examples")
{
    CHECK(check_super_jacobi(vect_superpoint(2)).empty());
    CHECK(check_super_jacobi(GradedLSA({odd("a"), even("b"), odd("c", 1)}, {})).empty());
    const auto good = vect_superpoint(2);
    const auto broken = good.with_perturbed_constant(0, 2, 0, 1);
    CHECK_FALSE(check_super_jacobi(broken).empty());
    CHECK_FALSE(jacobi_everywhere(broken));
    CHECK(jacobi_everywhere(good));
}

TEST_CASE("sorted-triple Jacobi agrees with the exhaustive check")
{
    const auto base = vect_superpoint(2);
    int disagreements = 0;
    for (const auto& [key, vec] : base.stored_brackets()) {
        for (const auto& [k, c] : vec) {
            (void)c;
            const auto broken = base.with_perturbed_constant(key.first, key.second, k, 1);
            if (check_super_jacobi(broken).empty() != jacobi_everywhere(broken)) ++disagreements;
        }
    }
    CHECK(disagreements == 0);
    const auto sl3 = chevalley_algebra(SemisimpleType::parse("A2")).algebra;
    CHECK(jacobi_everywhere(sl3));
    CHECK(check_super_jacobi(sl3.with_perturbed_constant(0, 2, 2, 1)).empty() ==
          jacobi_everywhere(sl3.with_perturbed_constant(0, 2, 2, 1)));
}

TEST_CASE("check_transitive examples")
{
    CHECK(check_transitive(vect_superpoint(2)));
    CHECK_FALSE(check_transitive(GradedLSA({even("h"), even("k")}, {})));
    const auto sl2 = chevalley_algebra(SemisimpleType::parse("A1")).algebra;
    CHECK(check_transitive(hat_d(sl2)));
    // reduces to faithfulness of the degree-0 action on degree -1
    CHECK(check_transitive(diagonal_action(false)));
    CHECK_FALSE(check_transitive(diagonal_action(true)));
    // a degree-1 element commuting with everything negative
    CHECK_FALSE(check_transitive(GradedLSA({odd("v"), odd("top", 1)}, {})));
}

TEST_CASE("check_irreducible examples")
{
    for (int m = 1; m <= 4; ++m) CHECK(check_irreducible(vect_superpoint(m)));
    CHECK_FALSE(check_irreducible(diagonal_action(false)));
    CHECK(burnside_span_dimension(diagonal_action(false)) == 2);
    const auto sl2 = chevalley_algebra(SemisimpleType::parse("A1")).algebra;
    CHECK(check_irreducible(hat_d(sl2)));
    CHECK(burnside_span_dimension(hat_d(sl2)) == 9);
    CHECK_THROWS_AS((check_irreducible(GradedLSA({even("h")}, {}))), InvalidInput);
}

TEST_CASE("find_grading_element examples")
{
    const auto v2 = vect_superpoint(2);
    const auto e = find_grading_element(v2);
    REQUIRE(e.has_value());
    CHECK(*e == SparseVector{{*v2.index_of("x1*d1"), Rational(1)}, {*v2.index_of("x2*d2"), Rational(1)}});
    for (int m = 1; m <= 4; ++m) {
        const auto a = vect_superpoint(m);
        const auto g = find_grading_element(a);
        REQUIRE(g.has_value());
        CHECK(g->size() == static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < a.dimension(); ++j) {
            const auto image = a.bracket(*g, SparseVector{{j, Rational(1)}});
            if (a.basis()[j].degree == 0) CHECK(image.empty());
            else CHECK(image == SparseVector{{j, Rational(a.basis()[j].degree)}});
        }
    }
    CHECK_FALSE(find_grading_element(GradedLSA({odd("v"), even("h")}, {})).has_value());
    const auto d = hat_d(chevalley_algebra(SemisimpleType::parse("A1")).algebra);
    CHECK(find_grading_element(d) == SparseVector{{*d.index_of("eps"), Rational(1)}});
}

TEST_CASE("graded_dims examples")
{
    using Dims = std::map<int, std::pair<std::size_t, std::size_t>>;
    CHECK(graded_dims(vect_superpoint(2)) == Dims{{-1, {0, 2}}, {0, {4, 0}}, {1, {0, 2}}});
    const auto d = hat_d(chevalley_algebra(SemisimpleType::parse("A1")).algebra);
    CHECK(graded_dims(d) == Dims{{-1, {0, 3}}, {0, {4, 0}}, {1, {0, 1}}});
    CHECK(graded_dims(GradedLSA{}).empty());
}

TEST_CASE("degree-zero center and derived dimensions")
{
    const auto v2 = vect_superpoint(2);
    CHECK(degree_zero_center(v2).size() == 1);
    CHECK(derived_dimension(v2) == 8);
    CHECK(even_derived_dimension(v2) == 3);
    CHECK(derived_dimension(GradedLSA({even("a"), even("b")}, {})) == 0);
}

TEST_CASE("truncation keeps the low degrees")
{
    const auto t = vect_superpoint(3).truncated(0);
    CHECK(t.dimension() == 3 + 9);
    CHECK(check_super_jacobi(t).empty());
    CHECK(graded_vector(t) == std::vector<std::size_t>{3, 9});
}

TEST_CASE("structure constants round-trip through JSON")
{
    for (const auto& a : {vect_superpoint(3), hat_d(chevalley_algebra(SemisimpleType::parse("G2")).algebra),
                          vect_superpoint(2).with_perturbed_constant(0, 2, 0, Rational(1, 3))}) {
        const auto j = glsa_to_json(a);
        const auto back = glsa_from_json(Json::parse(j.dump()));
        CHECK(back.basis() == a.basis());
        CHECK(back.stored_brackets() == a.stored_brackets());
        CHECK(glsa_to_json(back).dump() == j.dump());
    }
    const auto frac = glsa_to_json(vect_superpoint(2).with_perturbed_constant(0, 2, 0, Rational(1, 3)));
    CHECK(frac.dump().find("/3\"") != std::string::npos);
    CHECK_THROWS_AS((glsa_from_json(Json::parse(R"({"basis": [{"label": "x"}], "brackets": []})"))), InvalidInput);
    CHECK_THROWS_AS((glsa_from_json(Json::parse(
                        R"({"basis": [{"label": "x", "degree": 0, "parity": "odd"}], "brackets": []})"))),
                    InvalidInput);
}
