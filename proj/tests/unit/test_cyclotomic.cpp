#include <doctest.h>

#include "greenring/cyclotomic.hpp"

using namespace greenring;

namespace {

std::vector<long long> as_ll(const std::vector<Int>& v) {
    std::vector<long long> out;
    for (const Int& c : v) out.push_back(c.convert_to<long long>());
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(as_ll(cyclotomic_polynomial(1)) == std::vector<long long>{-1, 1});
    CHECK(as_ll(cyclotomic_polynomial(2)) == std::vector<long long>{1, 1});
    CHECK(as_ll(cyclotomic_polynomial(3)) == std::vector<long long>{1, 1, 1});
    CHECK(as_ll(cyclotomic_polynomial(4)) == std::vector<long long>{1, 0, 1});
    CHECK(as_ll(cyclotomic_polynomial(6)) == std::vector<long long>{1, -1, 1});
    CHECK(as_ll(cyclotomic_polynomial(8)) == std::vector<long long>{1, 0, 0, 0, 1});
    CHECK(as_ll(cyclotomic_polynomial(9)) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
    CHECK(as_ll(cyclotomic_polynomial(12)) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("field arithmetic in Q(zeta_8)") {
    CycField f(8);
    CHECK(f.degree() == 4);
    Cyc z = f.zeta_pow(1);
    // zeta^8 = 1 and zeta^4 = -1
    CHECK(f.zeta_pow(8) == f.one());
    CHECK(f.zeta_pow(4) == f.rational(Rat(-1)));
    CHECK((z * z) == f.zeta_pow(2));
    CHECK((z * f.zeta_pow(7)) == f.one());
    CHECK_FALSE(z.is_zero());
    CHECK((z - z).is_zero());
}

TEST_CASE("roots of unity sum to zero") {
    for (long long m : {4LL, 6LL, 8LL, 9LL, 12LL}) {
        CycField f(m);
        Cyc sum = f.zero();
        for (long long e = 0; e < m; ++e) sum = sum + f.zeta_pow(e);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("inverses") {
    CycField f(12);
    for (long long e = 0; e < 12; ++e) {
        Cyc z = f.zeta_pow(e);
        CHECK((z * z.inverse()) == f.one());
        CHECK(z.inverse() == f.zeta_pow(-e));
    }
    Cyc x = f.zeta_pow(1) + f.rational(Rat(3, 2)) - f.zeta_pow(5);
    CHECK((x * x.inverse()) == f.one());
    CHECK((x / x) == f.one());
    CHECK_THROWS(f.zero().inverse());
}

TEST_CASE("is_rational") {
    CycField f(6);
    CHECK(f.rational(Rat(5, 3)).is_rational(Rat(5, 3)));
    CHECK_FALSE(f.zeta_pow(1).is_rational(Rat(1)));
    // zeta_6 + zeta_6^5 = 1
    CHECK((f.zeta_pow(1) + f.zeta_pow(5)).is_rational(Rat(1)));
}
