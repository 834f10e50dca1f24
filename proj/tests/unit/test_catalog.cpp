#include <doctest.h>

#include "greenring/catalog.hpp"

using namespace greenring;

TEST_CASE("basis enumeration order and size") {
    Datum d = Datum::radford(2, 2);
    Catalog cat(d);
    std::vector<std::string> names;
    for (const Label& l : cat.basis()) names.push_back(cat.to_string(l));
    CHECK(names == std::vector<std::string>{"M(1,0)", "M(2,0)", "M(1,2)", "M(2,2)", "P[1]"});

    for (auto [m, n] : {std::pair{2LL, 2LL}, {2LL, 3LL}, {3LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}}) {
        Catalog c(Datum::radford(m, n));
        CHECK(c.size() == static_cast<std::size_t>(n * n + m - 1));
    }

    CHECK(cat.to_string(cat.unit()) == "M(1,0)");
    CHECK(cat.to_string(cat.a_label()) == "M(1,2)");
}

TEST_CASE("dims, projectivity and the dim H identity") {
    for (auto [m, n] : {std::pair{2LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}}) {
        Datum d = Datum::radford(m, n);
        Catalog cat(d);
        // sum over simples of dim(projective cover) * dim(simple) = dim H
        long long total = 0;
        for (CharIdx i : d.omega0()) {
            (void)i;
            total += d.n();
        }
        for (CharIdx j : d.orbit_reps1()) {
            (void)j;
            total += d.n() * d.n();
        }
        CHECK(total == d.n() * d.group_order());
        for (const Label& l : cat.basis()) {
            CHECK(cat.dim(l) >= 1);
            if (l.kind == Label::Kind::P) CHECK(cat.dim(l) == d.n());
        }
    }
}

TEST_CASE("dual label") {
    Datum d = Datum::radford(2, 2);
    Catalog cat(d);
    CHECK(cat.dual_label(cat.unit()) == cat.unit());
    // M(2,0)* = M(2, tau^{-1}(0)) = M(2,2)
    CHECK(cat.to_string(cat.dual_label(cat.m_label(2, 0))) == "M(2,2)");
    CHECK(cat.to_string(cat.dual_label(cat.p_label(1))) == "P[1]");

    for (auto [m, n] : {std::pair{2LL, 2LL}, {3LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}}) {
        Catalog c(Datum::radford(m, n));
        for (const Label& l : c.basis()) {
            Label dl = c.dual_label(l);
            CHECK(c.dual_label(dl) == l);              // involution
            CHECK(c.dim(dl) == c.dim(l));              // preserves dimension
            CHECK(c.projective(dl) == c.projective(l));
        }
    }
}

TEST_CASE("label parsing and normalization") {
    Datum d = Datum::radford(3, 2);
    Catalog cat(d);
    CHECK(cat.parse("M(2,3)") == cat.m_label(2, 3));
    CHECK(cat.parse(" P[ 4 ] ") == cat.p_label(4));
    // any orbit member is accepted and normalized to the lex-least rep
    CHECK(cat.to_string(cat.parse("P[4]")) == "P[1]");
    CHECK_THROWS_AS((void)cat.parse("M(2,1)"), Error);   // 1 not in Omega_0
    CHECK_THROWS_AS((void)cat.parse("M(5,0)"), Error);   // k out of range
    CHECK_THROWS_AS((void)cat.parse("P[3]"), Error);     // 3 in Omega_0
    CHECK_THROWS_AS((void)cat.parse("Q[1]"), Error);
    for (const Label& l : cat.basis()) CHECK(cat.parse(cat.to_string(l)) == l);

    Datum nc = Datum::validate(GroupDatum{{2, 4}, {0, 2}, {1, 1}});
    Catalog ncat(nc);
    CHECK(ncat.to_string(ncat.parse("M(2,1,2)")) == "M(2,1,2)");
    CHECK(ncat.to_string(ncat.parse("P[1,3]")) == "P[1,1]");
    CHECK(ncat.to_string(ncat.parse("P[0,3]")) == "P[0,1]");
    for (const Label& l : ncat.basis()) CHECK(ncat.parse(ncat.to_string(l)) == l);
}
