#include <doctest.h>

#include <array>
#include <cmath>
#include <set>
#include <unordered_set>

#include "shivar/shi_characterization.hpp"
#include "test_support.hpp"

using namespace shivar;
using namespace shivar::testing;

namespace {

// Independent triple oracle: recompute coroot coordinates from first
// principles (c_i * norm_i / norm) and enumerate sums directly.
std::set<std::array<int, 3>> coroot_triples_by_brute_force(const RootSystem& rs) {
    const int m = rs.num_positive_roots();
    std::vector<IntVector> coroots;
    for (int k = 0; k < m; ++k) {
        IntVector d(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) {
            const Int num =
                rs.positive_root(k)[i] * rs.norm_sq(rs.simple_position(i)).num();
            REQUIRE(num % rs.norm_sq(k).num() == 0);
            d[i] = num / rs.norm_sq(k).num();
        }
        coroots.push_back(d);
    }
    std::set<std::array<int, 3>> out;
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
            for (int g = 0; g < m; ++g)
                if (coroots[a] + coroots[b] == coroots[g]) out.insert({a, b, g});
    return out;
}

std::set<std::array<int, 3>> norm_triples_by_brute_force(const RootSystem& rs) {
    const int m = rs.num_positive_roots();
    std::set<std::array<int, 3>> out;
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
            for (int g = 0; g < m; ++g)
                if (rs.positive_root(a) + rs.positive_root(b) == rs.positive_root(g))
                    out.insert({a, b, g});
    return out;
}

}  // namespace

TEST_CASE("triple tables match the brute-force oracle") {
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
        const TypeName t = parse_type_name(name);
        const RootSystem rs(t.family, t.rank);
        const ShiValidator validator(rs);
        std::set<std::array<int, 3>> got_coroot;
        for (const AlcoveTriple& tr : validator.coroot_triples())
            got_coroot.insert({tr.a, tr.b, tr.g});
        std::set<std::array<int, 3>> got_norm;
        for (const AlcoveTriple& tr : validator.norm_triples())
            got_norm.insert({tr.a, tr.b, tr.g});
        CHECK_MESSAGE(got_coroot == coroot_triples_by_brute_force(rs), name);
        CHECK_MESSAGE(got_norm == norm_triples_by_brute_force(rs), name);
    }
}

TEST_CASE("A2 has exactly one triple of each kind") {
    const RootSystem rs(Family::A, 2);
    const ShiValidator validator(rs);
    REQUIRE(validator.coroot_triples().size() == 1);
    REQUIRE(validator.norm_triples().size() == 1);
    CHECK(validator.coroot_triples()[0].a == 0);
    CHECK(validator.coroot_triples()[0].b == 1);
    CHECK(validator.coroot_triples()[0].g == 2);
}

TEST_CASE("B2 and G2 triple counts (frozen from the oracle)") {
    // B2 carries two coroot triples: a^vee + b^vee = (2a+b)^vee and
    // b^vee + (2a+b)^vee = (a+b)^vee. The second one is what cuts the
    // admissible set from 6 down to the 4 admitted vectors.
    const RootSystem b2(Family::B, 2);
    const RootSystem g2(Family::G, 2);
    CHECK(ShiValidator(b2).coroot_triples().size() == 2);
    CHECK(ShiValidator(b2).norm_triples().size() == 2);
    CHECK(ShiValidator(g2).coroot_triples().size() == 5);
    CHECK(ShiValidator(g2).norm_triples().size() == 5);
}

TEST_CASE("all-zero tuples are alcoves under both criteria") {
    for (const char* name : {"A1", "A2", "B2", "G2", "B3", "D4"}) {
        const TypeName t = parse_type_name(name);
        const RootSystem rs(t.family, t.rank);
        const ShiValidator validator(rs);
        const IntVector zeros = IntVector::Zero(rs.num_positive_roots());
        CHECK(validator.is_alcove_coroot_form(zeros));
        CHECK(validator.is_alcove_norm_form(zeros));
    }
}

TEST_CASE("named tuple verdicts") {
    const RootSystem a2(Family::A, 2);
    const ShiValidator va2(a2);
    // k at the sum root two above the bound
    CHECK(!va2.is_alcove_coroot_form(make_vector({0, 0, 2})));
    CHECK(!va2.is_alcove_norm_form(make_vector({0, 0, 2})));

    const RootSystem b2(Family::B, 2);
    const ShiValidator vb2(b2);
    CHECK(vb2.is_alcove_coroot_form(make_vector({0, 0, 2, 1})));
    CHECK(vb2.is_alcove_norm_form(make_vector({0, 0, 2, 1})));
    CHECK(vb2.is_alcove_coroot_form(make_vector({0, 0, 1, 1})));
    CHECK(!vb2.is_alcove_coroot_form(make_vector({0, 0, 3, 1})));
    CHECK(!vb2.is_alcove_norm_form(make_vector({0, 0, 3, 1})));
}

TEST_CASE("violation diagnostics name the first broken triple") {
    const RootSystem rs(Family::B, 2);
    const ShiValidator validator(rs);
    const auto violation = validator.first_violation(Criterion::coroot, make_vector({0, 0, 3, 1}));
    REQUIRE(violation.has_value());
    CHECK(violation->criterion == Criterion::coroot);
    // gamma must be a1+a2, the root whose bound broke
    CHECK(rs.positive_root(violation->triple.g) == make_vector({1, 1}));
    CHECK(!describe(rs, *violation).empty());
    CHECK(!validator.first_violation(Criterion::coroot, make_vector({0, 0, 2, 1})).has_value());
}

TEST_CASE("criteria agree on boxes for the rank-2 types") {
    for (const char* name : {"A2", "B2", "G2"}) {
        const TypeName t = parse_type_name(name);
        const RootSystem rs(t.family, t.rank);
        const ShiValidator validator(rs);
        Int checked = 0;
        for_each_tuple_in_box(rs.num_positive_roots(), -2, 2, [&](const IntVector& v) {
            CHECK(validator.is_alcove_coroot_form(v) == validator.is_alcove_norm_form(v));
            ++checked;
        });
        CHECK(checked == static_cast<Int>(std::pow(5.0, rs.num_positive_roots())));
    }
}

TEST_CASE("completeness on the rank-2 boxes: every accepted tuple is hit") {
    for (const char* name : {"A2", "B2", "G2"}) {
        const TypeName t = parse_type_name(name);
        const RootSystem rs(t.family, t.rank);
        const ShiValidator validator(rs);
        // Sigma |k| over the box is at most 2m, so a ball of that radius covers it.
        std::unordered_set<std::vector<Int>, KeyHash> reachable;
        for (const BallEntry& entry : affine_ball(rs, 2 * rs.num_positive_roots()))
            reachable.insert(to_key(shi_vector(rs, entry.element)));
        for_each_tuple_in_box(rs.num_positive_roots(), -2, 2, [&](const IntVector& v) {
            if (validator.is_alcove_coroot_form(v)) CHECK(reachable.count(to_key(v)) == 1);
        });
    }
}

TEST_CASE("tuple length is checked") {
    const RootSystem rs(Family::B, 2);
    const ShiValidator validator(rs);
    CHECK_THROWS_AS(validator.is_alcove_coroot_form(make_vector({0, 0})), InvalidTupleError);
    CHECK_THROWS_AS(validator.is_alcove_norm_form(make_vector({0, 0})), InvalidTupleError);
}

TEST_CASE("A1 accepts every integer tuple") {
    const RootSystem rs(Family::A, 1);
    const ShiValidator validator(rs);
    CHECK(validator.coroot_triples().empty());
    CHECK(validator.norm_triples().empty());
    for (Int k = -4; k <= 4; ++k) CHECK(validator.is_alcove_coroot_form(make_vector({k})));
}
