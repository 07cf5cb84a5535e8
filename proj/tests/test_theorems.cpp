#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Cross-cutting checks of the classification machinery: lemma-level
// conjugation moves, the automorphism-family characterization on an
// abstract model, and the infinitely-many-systems consequence for the
// complex-type groups.

#include <algorithm>
#include <numeric>
#include <set>

#include "qrg/conj.hpp"
#include "qrg/soi.hpp"

using namespace qrg;

TEST_CASE("cyclic family needs the inversion automorphism") {
    SGroupPtr K = sgroup(GroupName::C(8));
    int gen = 0;
    for (int e = 0; e < K->order(); ++e)
        if (K->element_order(e) == 8) gen = e;
    std::vector<int> H = K->subgroup_closure({K->power(gen, 4)}); // order 2
    GKHGroup with_id = GKHGroup::build(QuotAut::identity(K, H));
    GKHGroup with_inv = GKHGroup::build(QuotAut::inversion(K, H));
    CHECK_FALSE(with_id.is_reflection_group());
    CHECK(with_inv.is_reflection_group());
    // Inversion makes L the whole group.
    CHECK(with_inv.lset().size() == static_cast<size_t>(K->order()));
}

TEST_CASE("corollary: xi in L_rho(xi) conjugates G(K,H,1) onto G(K,H,rho(xi))") {
    SGroupPtr O = sgroup(GroupName::O());
    std::vector<int> H = O->subgroup_closure({O->neg_one_index()});
    Quat k = quat_k();
    MatGroupSet base = GKHGroup::build(QuotAut::identity(O, H)).as_matgroup();
    MatGroupSet target = GKHGroup::build(QuotAut::rho(O, H, k)).as_matgroup();
    // k^2 = -1 lies in H, so diag(1,k) realizes the move.
    Witness h = witness_diag(Quat::one(), k);
    CHECK(conjugate_group(base, h).equals(target));
}

TEST_CASE("conjugation by diag(xi,xi) twists phi by rho(xi) on both sides") {
    SGroupPtr T = sgroup(GroupName::T());
    std::vector<int> H = T->subgroup_closure({T->neg_one_index()});
    QuotAut phi = QuotAut::rho(T, H, quat_delta());
    Quat gamma = quat_gamma(); // normalizes T, order 8
    // rho(gamma) phi rho(gamma)^-1 as a raw table.
    const CosetStructure& cs = phi.cosets();
    Quat gi = gamma.inv();
    auto conj_coset = [&](const Quat& q, int c) {
        return cs.elt2coset[*T->find(q * T->element(cs.rep[c]) * q.inv())];
    };
    std::vector<int> table(cs.size());
    for (int c = 0; c < cs.size(); ++c)
        table[c] = conj_coset(gamma, phi.apply_coset(conj_coset(gi, c)));
    QuotAut twisted = QuotAut::from_table(T, H, table, "rho(g)*phi*rho(g)^-1");

    MatGroupSet lhs = conjugate_group(GKHGroup::build(phi).as_matgroup(),
                                      witness_diag(gamma, gamma));
    CHECK(lhs.equals(GKHGroup::build(twisted).as_matgroup()));
}

namespace {

// Abstract binary dihedral model: x^a y^b encoded a + 2m*b.
struct Dih {
    int m, n; // H = <x^n>
    int tm() const { return 2 * m; }
    int mul(int u, int v) const {
        int a = u % tm(), b = u / tm(), c = v % tm(), d = v / tm();
        int e = b ? (a - c + tm()) % tm() : (a + c) % tm();
        if (b && d) e = (e + m) % tm();
        return e + tm() * (b ^ d);
    }
    int coset(int u) const { return (u % tm()) % n + n * (u / tm()); }
};

} // namespace

TEST_CASE("phi_rs validity conditions characterize the involutive automorphisms") {
    for (int m : {3, 4, 5, 6}) {
        for (int n = 1; n <= 2 * m; ++n) {
            if ((2 * m) % n != 0) continue;
            Dih G{m, n};
            int Q = 2 * n;
            std::vector<int> rep(Q, -1);
            for (int u = 0; u < 4 * m; ++u)
                if (rep[G.coset(u)] < 0) rep[G.coset(u)] = u;
            auto qmul = [&](int a, int b) { return G.coset(G.mul(rep[a], rep[b])); };

            for (int r = 0; r < 2 * m; ++r)
                for (int s = 0; s < 2 * m; ++s) {
                    std::vector<int> tbl(Q);
                    for (int c = 0; c < Q; ++c)
                        tbl[c] = G.coset(((c % n) * r + (c / n) * s) % (2 * m) +
                                         2 * m * (c / n));
                    bool hom = true, inv = true, bij = true;
                    std::vector<char> hit(Q, 0);
                    for (int c = 0; c < Q && bij; ++c) {
                        if (hit[tbl[c]]) bij = false;
                        hit[tbl[c]] = 1;
                    }
                    for (int a = 0; a < Q && hom; ++a)
                        for (int b = 0; b < Q && hom; ++b)
                            if (tbl[qmul(a, b)] != qmul(tbl[a], tbl[b])) hom = false;
                    for (int c = 0; c < Q && inv; ++c)
                        if (tbl[tbl[c]] != c) inv = false;
                    bool is_aut = hom && bij && inv;
                    bool cond = std::gcd(r, n) == 1 && (r * r - 1) % n == 0 &&
                                (s * (r + 1)) % n == 0;
                    CAPTURE(m);
                    CAPTURE(n);
                    CAPTURE(r);
                    CAPTURE(s);
                    CHECK(is_aut == cond);
                }
        }
    }
}

TEST_CASE("diagram automorphisms of the Klein quotient exist and do not generate") {
    // K = D(4), H = <x^2>: K/H is the Klein group with four involutive
    // automorphisms, only two of which have the x^a y^b -> x^(ar+bs) y^b
    // shape. The two extras swap the Hx and Hy (or Hxy) classes; their
    // L-sets are proper subgroups, so neither yields a reflection group.
    SGroupPtr K = sgroup(GroupName::D(4));
    std::vector<int> H = K->subgroup_closure({K->x_power(2)});
    CosetStructure cs = cosets_of(*K, H);
    REQUIRE(cs.size() == 4);
    auto qmul = [&](int a, int b) { return cs.elt2coset[K->mul(cs.rep[a], cs.rep[b])]; };

    int found = 0, extras = 0;
    std::vector<int> perm{0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[cs.id_coset] != cs.id_coset) continue;
        bool hom = true;
        for (int a = 0; a < 4 && hom; ++a)
            for (int b = 0; b < 4 && hom; ++b)
                if (perm[qmul(a, b)] != qmul(perm[a], perm[b])) hom = false;
        bool inv = hom;
        for (int c = 0; c < 4 && inv; ++c)
            if (perm[perm[c]] != c) inv = false;
        if (!inv) continue;
        ++found;
        QuotAut phi = QuotAut::from_table(K, H, perm, "klein-aut");
        // The phi-shaped maps fix the coset of x; the diagram automorphisms
        // move it.
        int cx = cs.elt2coset[K->x_power(1)];
        if (phi.apply_coset(cx) != cx) {
            ++extras;
            GKHGroup g = GKHGroup::build(phi);
            CHECK_FALSE(g.is_reflection_group());
            CHECK(g.order() == 2 * 16 * 4);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found == 4);
    CHECK(extras == 2);
}

TEST_CASE("the complex-type images inherit infinitely many systems") {
    // Conjugating G(O,1,rho:delta) by M carries the (1, r delta) systems to
    // systems of ST(13); sample the family through the witness.
    MatGroupSet g = gkh_polyhedral(GroupName::O(), "1", "rho:delta").as_matgroup();
    Witness m = witness_M_primST();
    MatGroupSet st13 = conjugate_group(g, m);
    CHECK(st13.all_complex_type());
    QMat2 minv = m.mat.conjtranspose(); // M unitary
    for (const Rat& r : {Rat(1), Rat(1, 2), Rat(2)}) {
        SoI s = soi_theta(r * quat_delta());
        SoI mapped{Line{s.first.u * minv}, Line{s.second.u * minv}};
        CHECK(soi_preserved(st13.elements(), mapped));
        // And these mapped systems are genuinely distinct lines.
        CHECK(mapped.first.canonical_key() != mapped.second.canonical_key());
    }
}
