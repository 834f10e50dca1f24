#include <doctest.h>

#include <cmath>

#include "greenring/stable.hpp"

using namespace greenring;

namespace {

std::vector<std::pair<long long, long long>> test_params() {
    return {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
}

}  // namespace

TEST_CASE("projection to the stable quotient") {
    GreenRing ring(Datum::radford(2, 3));
    StableRing st(ring);
    CHECK(st.project(ring.parse("M(3,0)")).is_zero());
    CHECK(st.project(ring.parse("P[1]")).is_zero());
    CHECK(st.project(ring.unit()) == st.unit());
    CHECK(st.rank() == 6);  // (n-1)|Omega_0| = 2*3
}

TEST_CASE("stable multiplication drops projective summands") {
    GreenRing ring(Datum::radford(2, 3));
    StableRing st(ring);
    // M[2,0]^2 = M[3,0] + M[1,2] in r(H); only M[1,2] survives
    StableElement prod = st.multiply(st.from_label(ring.catalog().m_label(2, 0)),
                                     st.from_label(ring.catalog().m_label(2, 0)));
    CHECK(st.to_string(prod) == "M(1,2)");
    for (std::size_t p = 0; p < st.rank(); ++p)
        CHECK(st.multiply(st.unit(), st.from_label(st.basis()[p])) ==
              st.from_label(st.basis()[p]));
    // all structure constants non-negative
    for (std::size_t p = 0; p < st.rank(); ++p)
        for (std::size_t q = 0; q < st.rank(); ++q) {
            StableElement x = st.multiply(st.from_label(st.basis()[p]),
                                          st.from_label(st.basis()[q]));
            for (const auto& [pos, c] : x.coeffs()) CHECK(c >= 0);
        }
}

TEST_CASE("fusion axioms hold on the test data") {
    for (auto [m, n] : test_params()) {
        GreenRing ring(Datum::radford(m, n));
        StableRing st(ring);
        FusionReport report = st.fusion_axioms_check();
        for (const FusionCheck& c : report.checks) {
            INFO(c.name, " witness: ", c.witness);
            CHECK(c.pass);
        }
        CHECK(report.all_pass());
    }
    // stable basis of (2,2) is {1, a}
    GreenRing r22(Datum::radford(2, 2));
    StableRing st22(r22);
    CHECK(st22.rank() == 2);
    CHECK(r22.catalog().to_string(st22.basis()[0]) == "M(1,0)");
    CHECK(r22.catalog().to_string(st22.basis()[1]) == "M(1,2)");
}

TEST_CASE("dickson polynomials") {
    CHECK(DicksonPoly::dickson(1).to_string() == "1");
    CHECK(DicksonPoly::dickson(2).to_string() == "Z");
    CHECK(DicksonPoly::dickson(3).to_string() == "Z^2 - Y");
    CHECK(DicksonPoly::dickson(4).to_string() == "Z^3 - 2*Y*Z");
    CHECK(DicksonPoly::dickson(5).to_string() == "Z^4 - 3*Y*Z^2 + Y^2");
    CHECK_THROWS_AS((void)DicksonPoly::dickson(0), Error);
}

TEST_CASE("dickson identity F_n(a, M[2,0]) = M[n,0]") {
    for (auto [m, n] : test_params()) {
        Datum d = Datum::radford(m, n);
        GreenRing ring(d);
        RingElement lhs = DicksonPoly::dickson(d.n()).evaluate(
            ring.a(), ring.from_label(ring.catalog().m_label(2, 0)));
        CHECK(lhs == ring.from_label(ring.catalog().m_label(d.n(), 0)));
        // and F_j(a, M[2,0]) = M[j,0] along the way
        for (long long j = 1; j <= d.n(); ++j)
            CHECK(DicksonPoly::dickson(j).evaluate(
                      ring.a(), ring.from_label(ring.catalog().m_label(2, 0))) ==
                  ring.from_label(ring.catalog().m_label(j, 0)));
    }
}

TEST_CASE("frobenius-perron dimensions") {
    GreenRing ring(Datum::radford(2, 4));
    StableRing st(ring);
    CHECK(st.fpdim_eigen(ring.catalog().unit()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(st.fpdim_closed(ring.catalog().m_label(2, 0)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(st.fpdim_eigen(ring.catalog().m_label(2, 0)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    for (auto [m, n] : test_params()) {
        GreenRing r(Datum::radford(m, n));
        StableRing s(r);
        const double pi = std::acos(-1.0);
        for (const Label& b : s.basis()) {
            double eigen = s.fpdim_eigen(b);
            double closed = s.fpdim_closed(b);
            CHECK(std::fabs(eigen - closed) <= 1e-9);
            CHECK(eigen >= 1.0 - 1e-9);
            CHECK(s.fpdim_closed(s.dual_basis_label(b)) ==
                  doctest::Approx(closed).epsilon(1e-12));
            if (b.k == 1) CHECK(closed == doctest::Approx(1.0).epsilon(1e-12));
            if (b.k == 2)
                CHECK(closed ==
                      doctest::Approx(2.0 * std::cos(pi / static_cast<double>(n)))
                          .epsilon(1e-12));
        }
        // the closed-form vector is an eigenvector of every mult matrix
        std::vector<double> v;
        for (const Label& b : s.basis()) v.push_back(s.fpdim_closed(b));
        for (const Label& b : s.basis()) {
            auto mat = s.mult_matrix(b);
            double lam = s.fpdim_closed(b);
            for (std::size_t i = 0; i < v.size(); ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < v.size(); ++j)
                    acc += mat[i][j].convert_to<double>() * v[j];
                CHECK(std::fabs(acc - lam * v[i]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("fpdim closed form rejects out-of-range labels") {
    GreenRing ring(Datum::radford(2, 3));
    StableRing st(ring);
    CHECK_THROWS_AS((void)st.fpdim_closed(ring.catalog().m_label(3, 0)), Error);
    CHECK_THROWS_AS((void)st.fpdim_closed(ring.catalog().p_label(1)), Error);
}

TEST_CASE("n = 3 closed forms") {
    GreenRing ring(Datum::radford(2, 3));
    StableRing st(ring);
    CHECK(st.fpdim_closed(ring.catalog().m_label(2, 0)) ==
          doctest::Approx(1.0).epsilon(1e-12));  // 2cos(pi/3)
    GreenRing r24(Datum::radford(2, 4));
    StableRing st24(r24);
    CHECK(st24.fpdim_closed(r24.catalog().m_label(3, 0)) ==
          doctest::Approx(1.0).epsilon(1e-12));  // F_3(1, sqrt 2) = 2 - 1
}
