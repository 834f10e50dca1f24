#include <doctest.h>

#include "greenring/datum.hpp"

using namespace greenring;

TEST_CASE("radford datum validates with the expected invariants") {
    Datum d = Datum::radford(2, 2);
    CHECK(d.n() == 2);
    CHECK(d.r() == 2);
    CHECK(d.group_order() == 4);
    CHECK(d.omega0() == std::vector<CharIdx>{0, 2});
    CHECK(d.omega1() == std::vector<CharIdx>{1, 3});
    CHECK(d.tau(0) == 2);
    CHECK(d.tau(1) == 3);
    CHECK(d.tau(2) == 0);

    Datum d32 = Datum::radford(3, 2);
    CHECK(d32.n() == 2);
    CHECK(d32.r() == 3);
    CHECK(d32.omega0() == std::vector<CharIdx>{0, 3});
}

TEST_CASE("nilpotent and degenerate data are rejected") {
    // Z/2 with chi(g) = -1: g^2 = 1
    GroupDatum nil{{2}, {1}, {1}};
    CHECK_THROWS_AS((void)Datum::validate(nil), Error);
    try {
        (void)Datum::validate(nil);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NilpotentType);
    }

    // chi(g) = 1
    GroupDatum degen{{4}, {0}, {1}};
    try {
        (void)Datum::validate(degen);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateOrder);
    }

    GroupDatum malformed{{4, 2}, {1}, {1, 0}};
    try {
        (void)Datum::validate(malformed);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedTuple);
    }

    // ord(chi(g)) = 2 but chi^2 != 1
    GroupDatum badchi{{4, 4}, {2, 1}, {1, 0}};
    try {
        (void)Datum::validate(badchi);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CharacterOrder);
    }

    CHECK_THROWS_AS((void)Datum::radford(1, 3), Error);
}

TEST_CASE("non-cyclic datum Z/2 x Z/4") {
    Datum d = Datum::validate(GroupDatum{{2, 4}, {0, 2}, {1, 1}});
    CHECK(d.n() == 2);
    CHECK(d.r() == 2);
    CHECK(d.group_order() == 8);
    CHECK(d.omega0() == std::vector<CharIdx>{0, 2, 4, 6});
    CHECK(d.orbit_reps0() == std::vector<CharIdx>{0, 4});
    CHECK(d.orbit_reps1() == std::vector<CharIdx>{1, 5});
    CHECK(d.tuple_string(5) == "1,1");
}

TEST_CASE("orbit table structure") {
    for (auto [m, n] : {std::pair{2LL, 2LL}, {2LL, 3LL}, {3LL, 3LL}, {2LL, 4LL}}) {
        Datum d = Datum::radford(m, n);
        OrbitTable t = build_orbit_table(d);
        // tau^n = identity
        for (CharIdx i = 0; i < d.num_chars(); ++i) CHECK(d.tau_pow(i, d.n()) == i);
        // orbit sizes are n; orbits partition Omega; tau preserves the split
        std::size_t covered = 0;
        for (const auto& orbit : t.orbits0) {
            CHECK(orbit.size() == static_cast<std::size_t>(n));
            covered += orbit.size();
            for (CharIdx i : orbit) CHECK(d.in_omega0(i));
        }
        CHECK(covered == d.omega0().size());
        covered = 0;
        for (const auto& orbit : t.orbits1) {
            CHECK(orbit.size() == static_cast<std::size_t>(n));
            covered += orbit.size();
            for (CharIdx i : orbit) CHECK_FALSE(d.in_omega0(i));
        }
        CHECK(covered == d.omega1().size());
        CHECK(d.omega0().size() % n == 0);
        // lambda is constant along orbits
        for (CharIdx i = 0; i < d.num_chars(); ++i)
            CHECK(d.lambda_exp(d.tau(i)) == d.lambda_exp(i));
    }
    // |Omega_0| = 3 for the (2,3) family
    CHECK(Datum::radford(2, 3).omega0().size() == 3);
}

TEST_CASE("dual character") {
    Datum d = Datum::radford(2, 2);
    CHECK(dual_character(d, 0) == 0);
    CHECK(dual_character(d, 1) == 3);
    Datum d32 = Datum::radford(3, 2);
    for (CharIdx i = 0; i < d32.num_chars(); ++i) {
        CHECK(dual_character(d32, dual_character(d32, i)) == i);
        CHECK(d32.in_omega0(dual_character(d32, i)) == d32.in_omega0(i));
    }
}
