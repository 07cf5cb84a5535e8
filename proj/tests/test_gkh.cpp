#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qrg/conj.hpp"
#include "qrg/gkh.hpp"

using namespace qrg;

TEST_CASE("orders follow 2|K||H|") {
    CHECK(gkh_polyhedral(GroupName::T(), "T", "id").order() == 1152);
    CHECK(gkh_polyhedral(GroupName::O(), "O", "id").order() == 4608);
    CHECK(gkh_cyclic(6, 3).order() == 36); // 2 m ell
    CHECK(gkh_cyclic(4, 1).order() == 8);

    for (int m : {1, 2, 3, 4, 6}) {
        for (int ell = 1; ell <= 2 * m; ++ell) {
            if ((2 * m) % ell != 0) continue;
            GKHGroup g = gkh_standard_dihedral(m, ell, 1);
            CHECK(g.order() == 2 * (4 * m) * ell);
            CHECK(g.closure_check());
        }
    }
}

TEST_CASE("the largest group has order 28800 and verifies closure") {
    GKHGroup g = gkh_polyhedral(GroupName::I(), "I", "id");
    CHECK(g.order() == 28800);
    CHECK(g.closure_check());
    CHECK(g.generator_closure_crosscheck());
}

TEST_CASE("L sets") {
    // Cyclic: L = K for the inversion automorphism.
    GKHGroup c = gkh_cyclic(8, 2);
    CHECK(c.lset().size() == 8);

    // (I, 1, theta): |L| = 20.
    GKHGroup it = gkh_polyhedral(GroupName::I(), "1", "theta");
    CHECK(it.lset().size() == 20);
    CHECK(it.is_reflection_group());

    // (T, D2, id): L = D2, not generating.
    GKHGroup td = gkh_polyhedral(GroupName::T(), "D:2", "id");
    CHECK(td.lset().size() == 8);
    CHECK_FALSE(td.is_reflection_group());

    // H is always contained in L.
    for (const GKHGroup* g : {&c, &it, &td}) {
        std::vector<int> l = g->lset();
        for (int h : g->H()) CHECK(std::binary_search(l.begin(), l.end(), h));
    }
}

TEST_CASE("reflection generation criterion matches the lemma lists") {
    CHECK(gkh_polyhedral(GroupName::O(), "C:2", "id").is_reflection_group());
    CHECK_FALSE(gkh_polyhedral(GroupName::T(), "1", "id").is_reflection_group());
    CHECK(gkh_polyhedral(GroupName::I(), "C:2", "id").is_reflection_group());
    CHECK(gkh_polyhedral(GroupName::T(), "T", "id").is_reflection_group());
    CHECK(gkh_polyhedral(GroupName::O(), "T", "id").is_reflection_group());
    CHECK(gkh_polyhedral(GroupName::O(), "D:2", "id").is_reflection_group());
    CHECK_FALSE(gkh_polyhedral(GroupName::O(), "1", "id").is_reflection_group());
    CHECK_FALSE(gkh_polyhedral(GroupName::I(), "1", "id").is_reflection_group());

    // The criterion agrees with "the reflections generate the group".
    for (const char* h : {"1", "C:2", "D:2", "T"}) {
        GKHGroup g = gkh_polyhedral(GroupName::T(), h, "id");
        CHECK(g.is_reflection_group() == g.reflections_generate());
    }
}

TEST_CASE("valid r values: formula vs brute force") {
    CHECK(valid_r_values(5, 2) == std::vector<int>{1});
    CHECK(valid_r_values(6, 1) == std::vector<int>{1, 5});
    CHECK(valid_r_values(1, 2) == std::vector<int>{1}); // n = 1
    CHECK(valid_r_values(12, 1) == std::vector<int>{1, 7});

    for (int m = 1; m <= 12; ++m)
        for (int ell = 1; ell <= 2 * m; ++ell) {
            if ((2 * m) % ell != 0) continue;
            CAPTURE(m);
            CAPTURE(ell);
            CHECK(valid_r_values(m, ell) == valid_r_values_bruteforce(m, ell));
        }
}

TEST_CASE("reflection counts of the primitive-complexification groups") {
    GKHGroup t = gkh_polyhedral(GroupName::T(), "1", "rho:delta");
    GKHGroup o = gkh_polyhedral(GroupName::O(), "1", "rho:delta");
    GKHGroup i = gkh_polyhedral(GroupName::I(), "1", "rho:j");
    CHECK(t.reflections_param().size() == 12);
    CHECK(o.reflections_param().size() == 18);
    CHECK(i.reflections_param().size() == 30);
    // The detector agrees with the parametric list.
    CHECK(t.reflection_count_detector() == 12);
    CHECK(o.reflection_count_detector() == 18);
    CHECK(i.reflection_count_detector() == 30);
}

TEST_CASE("parametric reflections equal the detector's list as sets") {
    for (const char* desc : {"1", "C:2", "D:2"}) {
        GKHGroup g = gkh_polyhedral(GroupName::T(), desc, "rho:delta");
        std::set<uint32_t> param;
        for (const GElem& e : g.reflections_param()) param.insert(e.pack());
        std::set<uint32_t> detect;
        for (int idx : g.reflection_indices_detector())
            detect.insert(g.elements()[idx].pack());
        CHECK(param == detect);
    }
    GKHGroup d = gkh_standard_dihedral(4, 2, 1);
    std::set<uint32_t> param;
    for (const GElem& e : d.reflections_param()) param.insert(e.pack());
    std::set<uint32_t> detect;
    for (int idx : d.reflection_indices_detector()) detect.insert(d.elements()[idx].pack());
    CHECK(param == detect);
}

TEST_CASE("theorem B standard copies") {
    CHECK(theoremB_build(2, false).order() == 128);
    CHECK(theoremB_build(2, true).order() == 256);
    CHECK(theoremB_build(1, false).order() == 32);
    CHECK(theoremB_build(3, true).order() == 64 * 9);
    CHECK(theoremB_build(2, true).is_reflection_group());
}

TEST_CASE("lemma 2.4: diag(1,xi) conjugation composes rho(xi) onto phi") {
    SGroupPtr T = sgroup(GroupName::T());
    std::vector<int> H = T->subgroup_closure({T->neg_one_index()});
    QuotAut phi = aut_make("rho:delta", T, H);
    GKHGroup g = GKHGroup::build(phi);
    std::vector<int> L = g.lset();

    int tried = 0;
    for (size_t pick = 0; pick < L.size(); pick += 5) {
        int xi = L[pick];
        Quat q = T->element(xi);
        // rho(xi) phi as a raw coset table.
        const CosetStructure& cs = phi.cosets();
        std::vector<int> table(cs.size());
        for (int c = 0; c < cs.size(); ++c) {
            int mid = cs.rep[phi.apply_coset(c)];
            table[c] = cs.elt2coset[*T->find(q * T->element(mid) * q.inv())];
        }
        QuotAut composed = QuotAut::from_table(T, H, table, "rho*phi");
        GKHGroup expected = GKHGroup::build(composed);

        Witness w = witness_diag(Quat::one(8), q);
        MatGroupSet conj = conjugate_group(g.as_matgroup(), w);
        CHECK(conj.equals(expected.as_matgroup()));
        ++tried;
    }
    CHECK(tried >= 2);
}

TEST_CASE("element orders in parameter space match materialized orders") {
    GKHGroup g = gkh_standard_dihedral(3, 2, 1);
    for (size_t i = 0; i < g.elements().size(); i += 7) {
        const GElem& e = g.elements()[i];
        CHECK(g.element_order(e) == g.materialize(e).order());
    }
}

TEST_CASE("descriptor strings") {
    CHECK(gkh_standard_dihedral(3, 2, 1).descriptor() == "G(D:3,C:2,psi:1)");
    CHECK(gkh_polyhedral(GroupName::I(), "1", "theta").descriptor() == "G(I,1,theta)");
}
