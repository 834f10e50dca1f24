// Acceptance suite: runs every verification criterion over the standard test
// data and prints one pass/fail line per criterion. Exit status is the number
// of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "greenring/io.hpp"

using namespace greenring;

namespace {

struct TestDatum {
    std::string name;
    Datum datum;
};

std::vector<TestDatum> make_test_data() {
    std::vector<TestDatum> out;
    for (auto [m, n] : {std::pair{2LL, 2LL}, {2LL, 3LL}, {3LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}}) {
        std::ostringstream name;
        name << "radford(" << m << ',' << n << ')';
        out.push_back({name.str(), Datum::radford(m, n)});
    }
    out.push_back({"Z/2 x Z/4", Datum::validate(GroupDatum{{2, 4}, {0, 2}, {1, 1}})});
    return out;
}

struct Context {
    std::string name;
    Datum datum;
    std::unique_ptr<GreenRing> ring;
    std::unique_ptr<Grothendieck> g0;
    std::unique_ptr<StableRing> stable;
};

int failures = 0;

void report(int criterion, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%2d] %s  %s (%s)\n", criterion, pass ? "PASS" : "FAIL", title.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

}  // namespace

int main() {
    std::vector<Context> contexts;
    for (TestDatum& td : make_test_data()) {
        auto ring = std::make_unique<GreenRing>(td.datum);
        auto g0 = std::make_unique<Grothendieck>(*ring);
        auto stable = std::make_unique<StableRing>(*ring);
        contexts.push_back(Context{td.name, td.datum, std::move(ring), std::move(g0),
                                   std::move(stable)});
    }

    // 1. Oracle equivalence over all basis pairs, every datum.
    {
        bool pass = true;
        std::size_t total_pairs = 0;
        std::string detail;
        for (Context& c : contexts) {
            Oracle oracle(*c.ring);
            OracleReport r = oracle.verify_structure_constants();
            total_pairs += r.pairs;
            if (!r.ok()) {
                pass = false;
                detail += c.name + ": " + std::to_string(r.mismatches.size()) + " mismatches; ";
            }
        }
        if (pass) detail = "0 mismatches over " + std::to_string(total_pairs) + " ordered pairs";
        report(1, "oracle equivalence for all Clebsch-Gordan products", pass, detail);
    }

    // 2. Ring axioms: commutativity, associativity, a^n = 1, dim multiplicative.
    {
        bool pass = true;
        std::string detail = "exact";
        std::mt19937_64 rng(12345);
        for (Context& c : contexts) {
            GreenRing& ring = *c.ring;
            for (std::size_t p = 0; p < ring.rank() && pass; ++p)
                for (std::size_t q = 0; q < ring.rank(); ++q) {
                    RingElement x = ring.basis_element(p), y = ring.basis_element(q);
                    if (!(x * y == y * x)) { pass = false; detail = c.name + ": commutativity"; break; }
                    if (ring.dimension(x * y) != ring.dimension(x) * ring.dimension(y)) {
                        pass = false;
                        detail = c.name + ": dimension augmentation";
                        break;
                    }
                }
            for (int t = 0; t < 100 && pass; ++t) {
                RingElement x = ring.basis_element(rng() % ring.rank());
                RingElement y = ring.basis_element(rng() % ring.rank());
                RingElement z = ring.basis_element(rng() % ring.rank());
                if (!((x * y) * z == x * (y * z))) { pass = false; detail = c.name + ": associativity"; }
            }
            if (!(ring.a_pow(ring.datum().n()) == ring.unit())) {
                pass = false;
                detail = c.name + ": a^n != 1";
            }
            if (!pass) break;
        }
        report(2, "ring axioms (commutative, associative, a^n = 1, dim hom)", pass, detail);
    }

    // 3. Dual-basis property (Kronecker pairing) on all basis pairs.
    {
        bool pass = true;
        std::string detail = "exact";
        for (Context& c : contexts) {
            GreenRing& ring = *c.ring;
            for (const Label& b : ring.catalog().basis()) {
                RingElement probe = ring.dualize(ring.delta(b));
                for (const Label& l : ring.catalog().basis()) {
                    Int expected = b == l ? 1 : 0;
                    if (ring.bilinear_form(probe, ring.from_label(l)) != expected) {
                        pass = false;
                        detail = c.name + ": (delta*_" + ring.catalog().to_string(b) + ", " +
                                 ring.catalog().to_string(l) + ")";
                    }
                }
            }
            if (!pass) break;
        }
        report(3, "dual-basis pairing is the Kronecker delta", pass, detail);
    }

    // 4. Cartan matrix literal block form.
    {
        bool pass = true;
        std::string detail = "literal E/I blocks";
        for (Context& c : contexts) {
            const Datum& d = c.datum;
            CartanMatrix cm = c.g0->cartan_matrix();
            std::size_t nblocks = d.orbit_reps0().size();
            std::size_t n = static_cast<std::size_t>(d.n());
            std::size_t dim = nblocks * n + d.orbit_reps1().size();
            IntMatrix expected(dim, dim);
            for (std::size_t b = 0; b < nblocks; ++b)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) expected.at(b * n + i, b * n + j) = 1;
            for (std::size_t k = nblocks * n; k < dim; ++k) expected.at(k, k) = 1;
            if (!(cm.entries == expected)) {
                pass = false;
                detail = c.name + ": block form mismatch";
                break;
            }
        }
        report(4, "Cartan matrix equals the block-diagonal E/I form", pass, detail);
    }

    // 5. Radical rank, principal generator, squares vanish.
    {
        bool pass = true;
        std::string detail = "exact";
        for (Context& c : contexts) {
            const Datum& d = c.datum;
            PrincipalGeneratorReport rep = principal_generator_check(*c.g0);
            std::size_t want =
                static_cast<std::size_t>(d.n() - 1) * d.orbit_reps0().size();
            if (rep.radical.rank() != want) { pass = false; detail = c.name + ": rank"; break; }
            if (!rep.matches) { pass = false; detail = c.name + ": principal ideal"; break; }
            for (const RingElement& x : rep.radical.elements(*c.ring))
                if (!(x * x).is_zero()) { pass = false; detail = c.name + ": square"; break; }
            if (!pass) break;
        }
        report(5, "radical: rank, principal generator (1-a)M[n,0], squares vanish", pass, detail);
    }

    // 6. ker phi = P-orthogonal lattice, by independent routes.
    {
        bool pass = true;
        std::string detail = "HNF equality";
        for (Context& c : contexts) {
            Lattice ker = phi_kernel_lattice(*c.g0);
            Lattice perp = projective_orthogonal_lattice(*c.g0);
            if (!lattice_equal(ker.basis, perp.basis)) {
                pass = false;
                detail = c.name + ": lattices differ";
                break;
            }
        }
        report(6, "ker phi equals the orthogonal complement of the projectives", pass, detail);
    }

    // 7. Fusion ring axioms + transitivity.
    {
        bool pass = true;
        std::string detail = "five checks";
        for (Context& c : contexts) {
            FusionReport rep = c.stable->fusion_axioms_check();
            if (!rep.all_pass()) {
                pass = false;
                for (const FusionCheck& ch : rep.checks)
                    if (!ch.pass) detail = c.name + ": " + ch.name + " (" + ch.witness + ")";
                break;
            }
        }
        report(7, "stable ring is a transitive fusion ring", pass, detail);
    }

    // 8. FPdim: eigen vs closed form, eigenvector residual, sqrt(2) spot value.
    {
        bool pass = true;
        double worst = 0.0;
        std::string detail;
        for (Context& c : contexts) {
            StableRing& st = *c.stable;
            std::vector<double> v;
            for (const Label& b : st.basis()) v.push_back(st.fpdim_closed(b));
            for (std::size_t bi = 0; bi < st.basis().size(); ++bi) {
                const Label& b = st.basis()[bi];
                double eigen = st.fpdim_eigen(b);
                double diff = std::fabs(eigen - v[bi]);
                worst = std::max(worst, diff);
                if (diff > 1e-9) { pass = false; detail = c.name + ": |eigen-closed|"; }
                auto mat = st.mult_matrix(b);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    double acc = 0.0;
                    for (std::size_t j = 0; j < v.size(); ++j)
                        acc += mat[i][j].convert_to<double>() * v[j];
                    double resid = std::fabs(acc - v[bi] * v[i]);
                    worst = std::max(worst, resid);
                    if (resid > 1e-9) { pass = false; detail = c.name + ": residual"; }
                }
            }
        }
        {
            GreenRing r24(Datum::radford(2, 4));
            StableRing st24(r24);
            double got = st24.fpdim_eigen(r24.catalog().m_label(2, 0));
            if (std::fabs(got - std::sqrt(2.0)) > 1e-9) {
                pass = false;
                detail = "radford(2,4): fpdim(M[2,0]) != sqrt(2)";
            }
        }
        if (pass) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "max deviation %.3g", worst);
            detail = buf;
        }
        report(8, "FPdim: eigenvalue vs closed form within 1e-9", pass, detail);
    }

    // 9. Dickson identity F_n(a, M[2,0]) = M[n,0].
    {
        bool pass = true;
        std::string detail = "exact";
        for (Context& c : contexts) {
            GreenRing& ring = *c.ring;
            RingElement lhs = DicksonPoly::dickson(c.datum.n())
                                  .evaluate(ring.a(), ring.from_label(ring.catalog().m_label(2, 0)));
            if (!(lhs == ring.from_label(ring.catalog().m_label(c.datum.n(), 0)))) {
                pass = false;
                detail = c.name;
                break;
            }
        }
        report(9, "Dickson identity F_n(a, M[2,0]) = M[n,0]", pass, detail);
    }

    // 10. Radford presentations of r(H) and G_0(H).
    {
        bool pass = true;
        std::string detail = "both presentations, zero mismatches";
        for (auto [m, n] : {std::pair{2LL, 2LL}, {2LL, 3LL}, {3LL, 2LL}, {3LL, 3LL}, {2LL, 4LL}}) {
            PresentationReport r1 = verify_presentation(m, n);
            PresentationReport r2 = verify_g0_presentation(m, n);
            bool rank_ok = r1.rank == static_cast<std::size_t>(n * n + m - 1) &&
                           r2.rank == static_cast<std::size_t>(n + m - 1);
            if (!(r1.ok() && r2.ok() && rank_ok)) {
                pass = false;
                std::ostringstream os;
                os << "radford(" << m << ',' << n << ")";
                detail = os.str();
                break;
            }
        }
        report(10, "presentations by generators and relations verify", pass, detail);
    }

    // 11. The projective column identity in terms of delta.
    {
        bool pass = true;
        std::string detail = "exact";
        for (Context& c : contexts) {
            GreenRing& ring = *c.ring;
            const Datum& d = c.datum;
            RingElement one_minus_a = ring.unit() - ring.a();
            RingElement lhs =
                ring.from_label(ring.catalog().m_label(d.n(), 0)) * one_minus_a;
            RingElement acc = ring.zero();
            for (long long k = 1; k <= d.n() - 1; ++k) {
                RingElement partial = ring.zero();
                for (long long u = 1; u <= k; ++u)
                    partial = partial + ring.from_label(ring.catalog().m_label(u, 0));
                acc = acc + partial * ring.a_pow(d.n() - 1 - k);
            }
            RingElement rhs = -(ring.delta_unit() * acc * one_minus_a);
            if (!(lhs == rhs)) { pass = false; detail = c.name; break; }
        }
        report(11, "M[n,0](1-a) expands through delta as an exact identity", pass, detail);
    }

    // 12. Bounded idempotent search on radford(2,2) and radford(3,2).
    {
        bool pass = true;
        std::string detail;
        unsigned long long tested = 0;
        for (auto [m, n] : {std::pair{2LL, 2LL}, {3LL, 2LL}}) {
            GreenRing ring(Datum::radford(m, n));
            IdempotentSearchReport rep = bounded_idempotent_search(ring);
            tested += rep.candidates_tested;
            if (!rep.unit_found || !rep.nontrivial.empty()) {
                pass = false;
                std::ostringstream os;
                os << "radford(" << m << ',' << n << ")";
                detail = os.str();
            }
        }
        if (pass) detail = "only 0 and 1 among " + std::to_string(tested) + " candidates";
        report(12, "bounded idempotent search finds only 0 and 1", pass, detail);
    }

    if (failures == 0)
        std::printf("all 12 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
