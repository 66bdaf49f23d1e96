#include <doctest.h>

#include "svf/errors.hpp"
#include "svf/flag.hpp"

using namespace svf;

namespace {

RootSystemPtr rs_of(const char* t) { return build_root_system(SemisimpleType::parse(t)); }

Weight w(std::vector<int> c) { return Weight(std::move(c)); }

Character chi(const RootSystemPtr& rs, std::map<Weight, Multiplicity> m) { return Character(rs, std::move(m)); }

// Subsets of {0..n-1} as index sets.
std::vector<IndexSet> all_subsets(int n)
{
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        IndexSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("ParabolicSpec validation and dimension")
{
    const auto a2 = rs_of("A2");
    CHECK(ParabolicSpec(a2, {}).is_borel());
    CHECK(ParabolicSpec(a2, {}).flag_dimension() == 3);
    CHECK(ParabolicSpec(a2, {0}).flag_dimension() == 2);
    CHECK(ParabolicSpec(a2, {0, 1}).flag_dimension() == 0);
    CHECK(ParabolicSpec(a2, {1, 0}).levi() == IndexSet{0, 1});
    CHECK_THROWS_AS(ParabolicSpec(a2, {2}), InvalidInput);
    CHECK_THROWS_AS(ParabolicSpec(a2, {0, 0}), InvalidInput);
}

TEST_CASE("tangent_character examples")
{
    const auto a1 = rs_of("A1");
    CHECK(tangent_character(ParabolicSpec(a1, {})) == chi(a1, {{w({2}), 1}}));
    const auto a2 = rs_of("A2");
    CHECK(tangent_character(ParabolicSpec(a2, {0})) == chi(a2, {{w({-1, 2}), 1}, {w({1, 1}), 1}}));
    CHECK(tangent_character(ParabolicSpec(a2, {})) == chi(a2, {{w({2, -1}), 1}, {w({-1, 2}), 1}, {w({1, 1}), 1}}));
}

TEST_CASE("tangent dimension equals flag dimension for every parabolic up to rank 4")
{
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2", "A1xA1"}) {
        const auto rs = rs_of(t);
        for (const auto& levi : all_subsets(rs->rank())) {
            const ParabolicSpec p(rs, levi);
            CHECK(tangent_character(p).dimension() == p.flag_dimension());
            CHECK((p.flag_dimension() == 0) == (static_cast<int>(levi.size()) == rs->rank()));
        }
    }
}

TEST_CASE("pmodule_character examples")
{
    const auto a2 = rs_of("A2");
    const ParabolicSpec borel(a2, {});
    CHECK(pmodule_character(PModule(borel, w({3, -5}))) == chi(a2, {{w({3, -5}), 1}}));
    const ParabolicSpec p2(a2, {0});
    CHECK(pmodule_character(PModule(p2, w({1, 1}))) == chi(a2, {{w({1, 1}), 1}, {w({-1, 2}), 1}}));
    CHECK(pmodule_character(PModule(p2, w({0, 0}))) == Character::trivial(a2));
    CHECK_THROWS_AS(PModule(p2, w({-1, 0})), InvalidInput);
    const auto c = pmodule_character(PModule(p2, w({3, -2})));
    CHECK(c.multiplicity(w({3, -2})) == 1);
    CHECK(c.dimension() == 4);
}

TEST_CASE("dual_pmodule examples and involution")
{
    const auto a2 = rs_of("A2");
    CHECK(dual_pmodule(PModule(ParabolicSpec(a2, {}), w({2, -1}))).highest_weight() == w({-2, 1}));
    const ParabolicSpec p2(a2, {0});
    CHECK(dual_pmodule(PModule(p2, w({1, 1}))).highest_weight() == w({1, -2}));
    CHECK(dual_pmodule(PModule(p2, w({0, 0}))).highest_weight() == w({0, 0}));

    for (const char* t : {"A3", "B3", "C3", "G2"}) {
        const auto rs = rs_of(t);
        for (const auto& levi : all_subsets(rs->rank())) {
            std::vector<int> c(static_cast<std::size_t>(rs->rank()), -1);
            for (int i : levi) c[static_cast<std::size_t>(i)] = 1;
            const PModule m(ParabolicSpec(rs, levi), Weight(c));
            const auto d = dual_pmodule(m);
            CHECK(dual_pmodule(d) == m);
            CHECK(pmodule_character(d) == dual(pmodule_character(m)));
        }
    }
}

TEST_CASE("cotangent module of a maximal A-series parabolic dualizes to the highest root")
{
    for (const char* t : {"A1", "A2", "A3", "A4"}) {
        const auto rs = rs_of(t);
        for (int omitted : {0, rs->rank() - 1}) {
            IndexSet levi;
            for (int i = 0; i < rs->rank(); ++i)
                if (i != omitted) levi.push_back(i);
            const ParabolicSpec p(rs, levi);
            const auto tau = tangent_character(p);
            // tau is Levi-irreducible here: its top constituent is all of it
            const auto parts = decompose_levi(tau, levi);
            REQUIRE(parts.size() == 1);
            const auto cotangent = dual_pmodule(PModule(p, parts[0].highest));
            CHECK(pmodule_character(cotangent) == dual(tau));
            CHECK(dual_pmodule(cotangent).highest_weight() == highest_root(*rs, 0));
        }
    }
}

TEST_CASE("der_sequence_characters examples")
{
    const auto a1 = rs_of("A1");
    const PModule omega(ParabolicSpec(a1, {}), w({-2}));
    const auto minus = der_sequence_characters(omega, -1);
    CHECK(minus.sub == chi(a1, {{w({2}), 1}}));
    CHECK(minus.quot.empty());
    const auto zero = der_sequence_characters(omega, 0);
    CHECK(zero.sub == Character::trivial(a1));
    CHECK(zero.quot == chi(a1, {{w({2}), 1}}));
    const auto top = der_sequence_characters(omega, 1);
    CHECK(top.sub.empty());
    CHECK(top.quot == chi(a1, {{w({0}), 1}}));
    const auto beyond = der_sequence_characters(omega, 2);
    CHECK(beyond.sub.empty());
    CHECK(beyond.quot.empty());
    CHECK_THROWS_AS(der_sequence_characters(omega, -2), InvalidInput);
}
