#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qrg/conj.hpp"
#include "qrg/extpoly.hpp"
#include "qrg/kernels.hpp"

using namespace qrg;

TEST_CASE("theta embedding basics") {
    Quat zd = quat_zeta(8);
    CHECK(theta_embed(zd, Quat::one()) == QMat2::diag(zd, zd));
    CHECK(theta_embed(Quat::one(), quat_i()) == QMat2::diag(-quat_i(), quat_i()));
    CHECK(theta_embed(-Quat::one(), -Quat::one()) == QMat2::identity());
    CHECK_THROWS_AS(theta_embed(quat_j(), Quat::one()), NotComplex);
    CHECK_THROWS_AS(theta_embed(Quat::one() + Quat::one(), Quat::one()), NotUnit);
}

TEST_CASE("theta embedding is multiplicative") {
    SGroupPtr O = sgroup(GroupName::O());
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> pick(0, O->order() - 1);
    std::uniform_int_distribution<int> pw(0, 11);
    for (int t = 0; t < 50; ++t) {
        Quat a1 = quat_zeta(12).pow(pw(rng)), a2 = quat_zeta(12).pow(pw(rng));
        Quat x1 = O->element(pick(rng)), x2 = O->element(pick(rng));
        CHECK(theta_embed(a1, x1) * theta_embed(a2, x2) == theta_embed(a1 * a2, x1 * x2));
    }
}

TEST_CASE("s conjugation is theta(alpha inverse, xi)") {
    SGroupPtr O = sgroup(GroupName::O());
    QMat2 s = s_matrix(8);
    QMat2 s_inv = s.inverse_of_unitary();
    for (int e = 0; e < O->order(); e += 5) {
        Quat alpha = quat_zeta(8).pow(3);
        QMat2 g = theta_embed(alpha, O->element(e));
        CHECK(s * g * s_inv == theta_embed(alpha.inv(), O->element(e)));
    }
}

TEST_CASE("orders of the extended groups") {
    CHECK(ExtPolyGroup::boxdot(4, 1, GroupName::O()).order() == 192);
    CHECK(ExtPolyGroup::boxdot(4, 2, GroupName::O()).order() == 96);
    CHECK(ExtPolyGroup::boxdot(4, 1, GroupName::I()).order() == 480);
    CHECK(ExtPolyGroup::circ(4, 1, GroupName::O()).order() == 96);
    CHECK(ExtPolyGroup::circ(12, 3, GroupName::T()).order() == 48);
    // |C_d o_f K| = (d / 2f) |K|.
    for (int d : {2, 4, 6, 8, 12}) {
        CHECK(ExtPolyGroup::circ(d, 1, GroupName::T()).order() == d * 24 / 2);
        if (d % 4 == 0) CHECK(ExtPolyGroup::circ(d, 2, GroupName::O()).order() == d * 48 / 4);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ExtPolyGroup::boxdot(12, 3, GroupName::T()), InvalidParams);
    CHECK_THROWS_AS(ExtPolyGroup::boxdot(5, 1, GroupName::T()), InvalidParams);
    CHECK_THROWS_AS(ExtPolyGroup::boxdot(6, 2, GroupName::T()), InvalidParams);
    CHECK_THROWS_AS(ExtPolyGroup::boxdot(6, 2, GroupName::I()), InvalidParams);
    // psi(-1) = H fails for d = 2 mod 4 with f = 2.
    CHECK_THROWS_AS(ExtPolyGroup::circ(6, 2, GroupName::O()), InvalidParams);
    CHECK_THROWS_AS(ExtPolyGroup::boxdot(10, 2, GroupName::O()), InvalidParams);
}

TEST_CASE("closure and membership") {
    ExtPolyGroup g = ExtPolyGroup::boxdot(8, 1, GroupName::T());
    CHECK(g.closure_check());
    // Marked multiplication matches materialized multiplication.
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int t = 0; t < 30; ++t) {
        EElem a = g.elements()[pick(rng)], b = g.elements()[pick(rng)];
        CHECK(g.materialize(g.mul(a, b)) == g.materialize(a) * g.materialize(b));
    }
}

TEST_CASE("parametric reflections agree with the detector") {
    for (int d : {2, 4, 6, 8, 12}) {
        for (auto [f, K] : std::vector<std::pair<int, GroupName>>{
                 {1, GroupName::T()}, {1, GroupName::O()}, {1, GroupName::I()},
                 {2, GroupName::O()}}) {
            if ((d / 2) % f != 0) continue;
            ExtPolyGroup g = ExtPolyGroup::boxdot(d, f, K);
            std::set<uint32_t> param;
            for (const EElem& e : g.reflections_param()) param.insert(e.pack());
            std::vector<QMat2> mats = g.materialize_all();
            std::vector<uint8_t> mask = reflection_mask(mats);
            std::set<uint32_t> detect;
            for (size_t i = 0; i < mats.size(); ++i)
                if (mask[i]) detect.insert(g.elements()[i].pack());
            CAPTURE(d);
            CAPTURE(f);
            CHECK(param == detect);
        }
    }
}

TEST_CASE("reflection generation matches the divisibility conditions") {
    CHECK(extpoly_is_reflection_group(6, 1, GroupName::T()));
    CHECK_FALSE(extpoly_is_reflection_group(16, 2, GroupName::O()));
    CHECK(extpoly_is_reflection_group(8, 1, GroupName::O()));
    for (int d = 2; d <= 24; d += 2) {
        CAPTURE(d);
        CHECK(extpoly_is_reflection_group(d, 1, GroupName::T()) ==
              extpoly_theorem_predicate(d, 1, GroupName::T()));
        CHECK(extpoly_is_reflection_group(d, 1, GroupName::O()) ==
              extpoly_theorem_predicate(d, 1, GroupName::O()));
        if (d % 4 == 0)
            CHECK(extpoly_is_reflection_group(d, 2, GroupName::O()) ==
                  extpoly_theorem_predicate(d, 2, GroupName::O()));
        CHECK(extpoly_is_reflection_group(d, 1, GroupName::I()) ==
              extpoly_theorem_predicate(d, 1, GroupName::I()));
    }
}

TEST_CASE("the 16 | d exception: six reflections generating a group of order 16") {
    // In C_16 o_2 O the circ part has exactly six reflections and they
    // generate a 16-element complex-type group with the ST(4,2,2) signature;
    // the remaining reflections of the boxdot extension live in the
    // dihedral part, which is why reflections fail to generate.
    ExtPolyGroup circ = ExtPolyGroup::circ(16, 2, GroupName::O());
    std::vector<EElem> refl = circ.reflections_param();
    CHECK(refl.size() == 6);
    // Parameter-space closure of the reflections.
    std::set<uint32_t> seen;
    std::vector<EElem> queue;
    EElem id = circ.canon(0, circ.K().id_index(), 0);
    seen.insert(id.pack());
    queue.push_back(id);
    for (const EElem& r : refl)
        if (seen.insert(r.pack()).second) queue.push_back(r);
    for (size_t head = 0; head < queue.size(); ++head)
        for (const EElem& r : refl) {
            EElem t = circ.mul(queue[head], r);
            if (seen.insert(t.pack()).second) queue.push_back(t);
        }
    CHECK(seen.size() == 16);
    // Same reflection-order signature as ST(4,2,2).
    std::vector<QMat2> gen_mats;
    for (const EElem& e : queue) gen_mats.push_back(circ.materialize(e));
    MatGroupSet sub = MatGroupSet::from_elements(std::move(gen_mats));
    MatGroupSet st = st_build(STDesc::imprimitive(4, 2));
    CHECK(sub.all_complex_type());
    CHECK(sub.reflection_order_multiset() == st.reflection_order_multiset());
    CHECK_FALSE(ExtPolyGroup::boxdot(16, 2, GroupName::O()).reflections_generate());
}

TEST_CASE("s normalizes the circ part except for f = 3") {
    CHECK(ExtPolyGroup::circ(4, 1, GroupName::O()).s_normalizes_circ());
    CHECK(ExtPolyGroup::circ(8, 2, GroupName::O()).s_normalizes_circ());
    CHECK(ExtPolyGroup::circ(12, 1, GroupName::I()).s_normalizes_circ());
    CHECK_FALSE(ExtPolyGroup::circ(6, 3, GroupName::T()).s_normalizes_circ());
    CHECK_FALSE(ExtPolyGroup::circ(12, 3, GroupName::T()).s_normalizes_circ());
}

TEST_CASE("complexification") {
    CHECK(complexify(QMat2::identity()) == CMat4::identity());
    // diag(j, j): A1 = 0, A2 = I.
    CMat4 dj = complexify(QMat2::diag(quat_j(), quat_j()));
    CHECK(dj.e[2] == CycNum::one(4));
    CHECK(dj.e[7] == CycNum::one(4));
    CHECK(dj.e[8] == CycNum::from_rat(Rat(-1), 4));
    CHECK(dj.e[13] == CycNum::from_rat(Rat(-1), 4));
    CHECK(dj.e[0].is_zero());

    QMat2 s = s_matrix();
    CHECK(complexify(s) * complexify(s) == complexify(s * s));
    CHECK(complexify(s * s) == CMat4::identity());

    std::mt19937 rng(8);
    SGroupPtr T = sgroup(GroupName::T());
    std::uniform_int_distribution<int> pick(0, T->order() - 1);
    for (int t = 0; t < 20; ++t) {
        QMat2 a = QMat2::diag(T->element(pick(rng)), T->element(pick(rng)));
        QMat2 b = QMat2::antidiag(T->element(pick(rng)), T->element(pick(rng)));
        CHECK(complexify(a) * complexify(b) == complexify(a * b));
    }
}
