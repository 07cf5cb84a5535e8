#include "qrg/conj.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qrg/extpoly.hpp"

namespace qrg {

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
} // namespace

QMat2 Witness::apply(const QMat2& g) const {
    QMat2 conj = mat * g * mat.conjtranspose();
    CycNum inv = csq.inv();
    return inv * conj;
}

Witness witness_custom(QMat2 mat, std::string desc) {
    QMat2 sq = mat * mat.conjtranspose();
    if (!sq.at(0, 1).is_zero() || !sq.at(1, 0).is_zero())
        throw NotInvolutiveWitness("witness: W conj(W)^T is not diagonal");
    const Quat& d0 = sq.at(0, 0);
    if (d0 != sq.at(1, 1) || !d0.is_complex() || !d0.z().is_real() || d0.is_zero())
        throw NotInvolutiveWitness("witness: W conj(W)^T is not a real scalar");
    return {std::move(desc), std::move(mat), d0.z()};
}

Witness witness_R(const Rat& r, const Quat& theta) {
    if (!(theta * theta == -Quat::one(theta.conductor())))
        throw NotInvolutiveWitness("witness_R: theta^2 must be -1");
    Quat rt = r * theta;
    int n = rt.conductor();
    QMat2 m(Quat::one(n), rt, -rt, -Quat::one(n));
    return witness_custom(std::move(m), "R(" + r.str() + "," + theta.str() + ")");
}

Witness witness_T() {
    QMat2 m(Quat::one(), Quat::one(), Quat::one(), -Quat::one());
    return witness_custom(std::move(m), "T");
}

Witness witness_M_primST() {
    // M = 1/2 [[-1+k, -sqrt2 k],[1+k, sqrt2]]; exact over Q(zeta_8).
    CycNum s2 = cyc_sqrt2();
    Rat half(1, 2);
    Quat k8 = quat_k().promoted(8);
    Quat one8 = Quat::one(8);
    Quat a = half * (-one8 + k8);
    Quat b = half * (-(s2 * k8));
    Quat c = half * (one8 + k8);
    Quat d = half * Quat::from_complex(s2);
    return witness_custom(QMat2(a, b, c, d), "M");
}

Witness witness_diag(const Quat& a, const Quat& b) {
    return witness_custom(QMat2::diag(a, b), "diag(" + a.str() + "," + b.str() + ")");
}

MatGroupSet conjugate_group(const MatGroupSet& g, const Witness& w) {
    MatGroupSet out = g.mapped([&](const QMat2& m) { return w.apply(m); });
    if (out.order() != g.order()) throw SizeMismatch("conjugate_group: size changed");
    return out;
}

MatGroupSet conjugate_group(const MatGroupSet& g, const std::vector<Witness>& chain) {
    MatGroupSet out = g;
    for (const Witness& w : chain) out = conjugate_group(out, w);
    return out;
}

bool groups_equal(const MatGroupSet& a, const MatGroupSet& b) { return a.equals(b); }

std::string STDesc::str() const {
    if (primitive) return "ST(" + std::to_string(primitive) + ")";
    return "ST(" + std::to_string(m) + "," + std::to_string(p) + ",2)";
}

MatGroupSet st_build(const STDesc& desc) {
    if (!desc.primitive) {
        int m = desc.m, p = desc.p;
        if (m < 1 || p < 1 || m % p != 0) throw InvalidDescriptor("ST(m,p,2): need p | m");
        Quat zm = quat_zeta(m);
        QMat2 g1 = QMat2::swap_s(zm.conductor());
        QMat2 g2 = QMat2::diag(zm, zm.inv());
        QMat2 g3 = QMat2::diag(zm.pow(p), Quat::one(zm.conductor()));
        MatGroupSet g = MatGroupSet::closure({g1, g1 * g2, g3});
        if (g.order() != 2 * m * m / p) throw SizeMismatch("st_build: order != 2m^2/p");
        return g;
    }
    if (desc.primitive == 12 || desc.primitive == 13) {
        CycNum isq = cyc_sqrt2().inv();
        CycNum i4 = CycNum::zeta(4).promoted(8);
        CycNum one = CycNum::one(8);
        Rat half(1, 2);
        QMat2 A(Quat::from_complex(-isq), Quat::from_complex(-isq), Quat::from_complex(-isq),
                Quat::from_complex(isq));
        QMat2 B(Quat::from_complex(half * (-one + i4)), Quat::from_complex(half * (-one - i4)),
                Quat::from_complex(half * (one - i4)), Quat::from_complex(half * (-one - i4)));
        QMat2 C(Quat::from_complex(isq), Quat::from_complex(-(isq * i4)),
                Quat::from_complex(-(isq * i4)), Quat::from_complex(isq));
        MatGroupSet g = desc.primitive == 12 ? MatGroupSet::closure({A, B, C * C})
                                             : MatGroupSet::closure({A, B, C});
        if (g.order() != (desc.primitive == 12 ? 48 : 96))
            throw SizeMismatch("st_build: unexpected primitive order");
        return g;
    }
    if (desc.primitive == 22) {
        CycNum tau = cyc_tau();
        CycNum i4 = CycNum::zeta(4).promoted(20);
        Rat half(1, 2);
        QMat2 S1 = QMat2::swap_s(20);
        QMat2 S2 = QMat2::diag(quat_i().promoted(20), -quat_i().promoted(20));
        QMat2 S3(Quat::from_complex(half * (tau.inv() + i4)), Quat::from_complex(half * (-(tau * i4))),
                 Quat::from_complex(half * (-(tau * i4))), Quat::from_complex(half * (tau.inv() - i4)));
        MatGroupSet g = MatGroupSet::closure({S1, S2, S3});
        if (g.order() != 240) throw SizeMismatch("st_build: ST(22) should have order 240");
        return g;
    }
    throw InvalidDescriptor("st_build: unknown descriptor");
}

// --- exact linear algebra over the real cyclotomic subfield ----------------

namespace {

// Kernel basis of an m x n matrix over Q(zeta_c) by Gauss-Jordan.
std::vector<std::vector<CycNum>> cyc_kernel(std::vector<std::vector<CycNum>> M, int cols) {
    int rows = static_cast<int>(M.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!M[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        CycNum inv = M[r][c].inv();
        for (int j = c; j < cols; ++j) M[r][j] = inv * M[r][j];
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            CycNum f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<CycNum>> basis;
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<CycNum> v(cols, CycNum::zero());
        v[c] = CycNum::one();
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = -M[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Columns of the linear map u -> u*g - a*u on the coordinates of u.
void append_equation_block(std::vector<std::vector<CycNum>>& M, const Quat& g, const Quat& a) {
    int n = lcm_int(g.conductor(), a.conductor());
    std::array<Quat, 4> basis{Quat::one(n), quat_i().promoted(n), quat_j().promoted(n),
                              quat_k().promoted(n)};
    std::array<std::array<CycNum, 4>, 4> col;
    for (int t = 0; t < 4; ++t) {
        Quat v = basis[t] * g.promoted(n) - a.promoted(n) * basis[t];
        col[t] = {v.coords()[0], v.coords()[1], v.coords()[2], v.coords()[3]};
    }
    for (int row = 0; row < 4; ++row) {
        std::vector<CycNum> line(4, CycNum::zero());
        for (int t = 0; t < 4; ++t) line[t] = col[t][row];
        M.push_back(std::move(line));
    }
}

bool conjugates_group_onto(const Quat& u, const SGroup& from, const SGroup& to) {
    if (from.order() != to.order()) return false;
    if (u.is_zero()) return false;
    Quat ui = u.inv();
    for (int e = 0; e < from.order(); ++e)
        if (!to.find(u * from.element(e) * ui)) return false;
    return true;
}

} // namespace

std::optional<Quat> solve_conjugator(const SGroup& from, const SGroup& to) {
    if (from.order() != to.order()) return std::nullopt;
    // Already equal as sets?
    bool same = true;
    for (int e = 0; e < from.order() && same; ++e)
        if (!to.find(from.element(e))) same = false;
    if (same) return Quat::one();

    std::vector<int> gens(from.generator_indices());
    if (gens.empty()) return Quat::one();
    int g1 = gens[0];
    std::optional<int> g2;
    if (gens.size() > 1) g2 = gens[1];

    int n = lcm_int(from.conductor(), to.conductor());
    auto candidates = [&](int g) {
        std::vector<int> out;
        CycNum tr = from.trace_of(g).promoted(n);
        for (int a = 0; a < to.order(); ++a)
            if (to.element_order(a) == from.element_order(g) &&
                to.trace_of(a).promoted(n) == tr)
                out.push_back(a);
        return out;
    };

    for (int a : candidates(g1)) {
        std::vector<int> second = g2 ? candidates(*g2) : std::vector<int>{-1};
        for (int b : second) {
            std::vector<std::vector<CycNum>> M;
            append_equation_block(M, from.element(g1), to.element(a));
            if (g2) append_equation_block(M, from.element(*g2), to.element(b));
            for (auto& v : cyc_kernel(std::move(M), 4)) {
                Quat u = Quat::make(v[0], v[1], v[2], v[3]);
                if (u.is_zero()) continue;
                if (conjugates_group_onto(u, from, to)) return u;
            }
        }
    }
    return std::nullopt;
}

// --- extracted G(K,H,phi) forms ---------------------------------------------

std::optional<DiagPairs> extract_diag_pairs(const MatGroupSet& s) {
    DiagPairs dp;
    std::vector<std::pair<Quat, Quat>> anti;
    for (const QMat2& m : s.elements()) {
        if (m.is_diagonal())
            dp.pairs.emplace_back(m.at(0, 0), m.at(1, 1));
        else if (m.is_antidiagonal())
            anti.emplace_back(m.at(0, 1), m.at(1, 0)); // [[0,eta],[xi,0]] = s*diag(xi,eta)
        else
            return std::nullopt;
    }
    if (anti.size() != dp.pairs.size()) return std::nullopt;
    // Every antidiagonal must be s times a diagonal member and vice versa.
    std::map<std::string, int> diag_keys;
    auto key_of = [&](const Quat& x, const Quat& y) {
        int n = lcm_int(x.conductor(), y.conductor());
        std::string key;
        x.promoted(n).append_key(key);
        y.promoted(n).append_key(key);
        return std::to_string(n) + ':' + key;
    };
    for (auto& [x, y] : dp.pairs) ++diag_keys[key_of(x, y)];
    for (auto& [eta, xi] : anti) {
        auto it = diag_keys.find(key_of(xi, eta));
        if (it == diag_keys.end() || it->second == 0) return std::nullopt;
        --it->second;
    }
    return dp;
}

SGroup pairs_to_sgroup(const DiagPairs& dp) {
    std::vector<Quat> firsts;
    std::map<std::string, int> seen;
    for (auto& [x, y] : dp.pairs) {
        std::string k;
        x.append_key(k);
        std::string full = std::to_string(x.conductor()) + ':' + k;
        if (seen.emplace(full, 1).second) firsts.push_back(x);
    }
    return SGroup::from_generators(GroupName::custom(), firsts,
                                   static_cast<int>(firsts.size()) + 1);
}

std::optional<QuotAut> pairs_to_quotaut(const DiagPairs& dp, SGroupPtr K) {
    std::vector<int> images(K->order(), -1);
    std::vector<int> H;
    for (auto& [x, y] : dp.pairs) {
        auto xi = K->find(x);
        auto eta = K->find(y);
        if (!xi || !eta) return std::nullopt;
        images[*xi] = *eta;
        if (*eta == K->id_index()) H.push_back(*xi);
    }
    for (int v : images)
        if (v < 0) return std::nullopt;
    std::sort(H.begin(), H.end());
    try {
        return QuotAut::from_element_map(K, H, images, "extracted");
    } catch (const Error&) {
        return std::nullopt;
    }
}

// --- theorem verification ---------------------------------------------------

namespace {

TheoremInstance check_equal(const std::string& params, const MatGroupSet& got,
                            const MatGroupSet& want, std::vector<std::string> witnesses,
                            std::string detail = "") {
    bool ok = got.equals(want);
    return {params, std::move(witnesses), ok,
            ok ? std::move(detail) : "conjugated set differs from target"};
}

TheoremReport theorem_TO() {
    TheoremReport rep{"TO", {}, true};
    MatGroupSet g = gkh_polyhedral(GroupName::T(), "C:2", "rho:delta").as_matgroup();
    MatGroupSet target = gkh_polyhedral(GroupName::O(), "1", "beta").as_matgroup();
    Witness w1 = witness_R(Rat(1), quat_delta());
    Witness w2 = witness_diag(Quat::one(8), quat_delta());
    MatGroupSet s = conjugate_group(conjugate_group(g, w1), w2);
    rep.instances.push_back(check_equal("G(T,C:2,rho:delta) ~ G(O,1,beta)", s, target,
                                        {w1.desc, w2.desc}));
    rep.pass = rep.instances.back().pass;
    return rep;
}

TheoremReport theorem_primST_i() {
    TheoremReport rep{"primST(i)", {}, true};
    Witness m = witness_M_primST();

    struct Case {
        const char* params;
        MatGroupSet group;
        MatGroupSet st;
        int reflections;
    };
    std::vector<Case> cases;
    cases.push_back({"G(T,1,rho:delta) ~ ST(12)",
                     gkh_polyhedral(GroupName::T(), "1", "rho:delta").as_matgroup(),
                     st_build(STDesc::st12()), 12});
    cases.push_back({"G(O,1,rho:delta) ~ ST(13)",
                     gkh_polyhedral(GroupName::O(), "1", "rho:delta").as_matgroup(),
                     st_build(STDesc::st13()), 18});

    for (auto& c : cases) {
        MatGroupSet s = conjugate_group(c.group, m);
        bool eq = s.equals(c.st);
        bool cx = s.all_complex_type();
        int refl = static_cast<int>(c.st.reflection_indices().size());
        bool ok = eq && cx && refl == c.reflections;
        rep.instances.push_back({c.params,
                                 {m.desc},
                                 ok,
                                 "complex type: " + std::string(cx ? "yes" : "no") +
                                     ", reflections: " + std::to_string(refl)});
        rep.pass = rep.pass && ok;
    }

    // ST(22): conjugate by R(1,k) then diag(1,-1).
    MatGroupSet g22 = gkh_polyhedral(GroupName::I(), "1", "rho:j").as_matgroup();
    Witness s_w = witness_R(Rat(1), quat_k());
    Witness d_w = witness_diag(Quat::one(), -Quat::one());
    MatGroupSet s22 = conjugate_group(conjugate_group(g22, s_w), d_w);
    MatGroupSet st22 = st_build(STDesc::st22());
    bool eq = s22.equals(st22);
    bool cx = s22.all_complex_type();
    int refl = static_cast<int>(st22.reflection_indices().size());
    bool ok = eq && cx && refl == 30;
    rep.instances.push_back({"G(I,1,rho:j) ~ ST(22)",
                             {s_w.desc, d_w.desc},
                             ok,
                             "complex type: " + std::string(cx ? "yes" : "no") +
                                 ", reflections: " + std::to_string(refl)});
    rep.pass = rep.pass && ok;
    return rep;
}

TheoremReport theorem_primST_ii(const std::vector<Rat>& rs) {
    TheoremReport rep{"primST(ii)", {}, true};
    struct Case {
        const char* params;
        MatGroupSet group;
        Quat theta;
    };
    std::vector<Case> cases;
    cases.push_back({"R(r,delta) normalises G(T,1,rho:delta)",
                     gkh_polyhedral(GroupName::T(), "1", "rho:delta").as_matgroup(),
                     quat_delta()});
    cases.push_back({"R(r,delta) normalises G(O,1,rho:delta)",
                     gkh_polyhedral(GroupName::O(), "1", "rho:delta").as_matgroup(),
                     quat_delta()});
    cases.push_back({"R(r,j) normalises G(I,1,rho:j)",
                     gkh_polyhedral(GroupName::I(), "1", "rho:j").as_matgroup(), quat_j()});
    for (auto& c : cases) {
        for (const Rat& r : rs) {
            Witness w = witness_R(r, c.theta);
            MatGroupSet s = conjugate_group(c.group, w);
            rep.instances.push_back(check_equal(std::string(c.params) + " at r=" + r.str(), s,
                                                c.group, {w.desc}));
            rep.pass = rep.pass && rep.instances.back().pass;
        }
    }
    return rep;
}

TheoremReport theorem_dihedral_cyclic(int max_m, const std::vector<Rat>& rs) {
    TheoremReport rep{"dihedral-cyclic", {}, true};
    for (int m = 1; m <= max_m; ++m) {
        GKHGroup g = gkh_standard_dihedral(m, 1, 1);
        MatGroupSet mats = g.as_matgroup();
        Witness wT = witness_T();
        Witness wd = witness_diag(Quat::one(), quat_j());
        MatGroupSet s = conjugate_group(conjugate_group(mats, wT), wd);
        MatGroupSet cyc = gkh_cyclic(2 * m, 2).as_matgroup();
        MatGroupSet st = st_build(STDesc::imprimitive(2 * m, m));
        bool ok = s.equals(cyc) && cyc.equals(st);
        rep.instances.push_back({"G(D:" + std::to_string(m) + ",1,psi:1) ~ G(C:" +
                                     std::to_string(2 * m) + ",C:2,inv) = ST(" +
                                     std::to_string(2 * m) + "," + std::to_string(m) + ",2)",
                                 {wT.desc, wd.desc},
                                 ok,
                                 ""});
        rep.pass = rep.pass && ok;
        for (const Rat& r : rs) {
            Witness w = witness_R(r, quat_i());
            MatGroupSet ns = conjugate_group(mats, w);
            rep.instances.push_back(check_equal(
                "R(" + r.str() + ",i) normalises G(D:" + std::to_string(m) + ",1,psi:1)", ns,
                mats, {w.desc}));
            rep.pass = rep.pass && rep.instances.back().pass;
        }
    }
    return rep;
}

TheoremReport theorem_dihedral_odd(int max_m) {
    TheoremReport rep{"dihedral-odd", {}, true};
    for (int m = 1; m <= max_m; m += 2) {
        MatGroupSet g = gkh_standard_dihedral(m, 2, 1).as_matgroup();
        MatGroupSet target = gkh_standard_dihedral(2 * m, 1, 2 * m - 1).as_matgroup();
        Witness w1 = witness_R(Rat(1), quat_i());
        Witness w2 = witness_diag(Quat::one(), quat_j());
        MatGroupSet s = conjugate_group(conjugate_group(g, w1), w2);
        rep.instances.push_back(check_equal("G(D:" + std::to_string(m) +
                                                ",C:2,psi:1) ~ G(D:" + std::to_string(2 * m) +
                                                ",1,psi:" + std::to_string(2 * m - 1) + ")",
                                            s, target, {w1.desc, w2.desc}));
        rep.pass = rep.pass && rep.instances.back().pass;
    }
    return rep;
}

// One boxdot instance: conjugate by R(1,j), certify the equaliser shape,
// standardize K by a diag(u,u) witness if needed, then normalize phi by the
// Lemma 2.4 moves and compare against the named standard copy.
TheoremInstance boxdot_instance(const ExtPolyGroup& box, const GroupName& K0name,
                                const MatGroupSet& target, const std::string& target_phi,
                                const SGroup& normalizer) {
    std::vector<std::string> wit;
    std::string params = box.descriptor() + " ~ " + target_phi;
    MatGroupSet s = box.as_matgroup();
    Witness w1 = witness_R(Rat(1), quat_j());
    wit.push_back(w1.desc);
    s = conjugate_group(s, w1);

    auto dp = extract_diag_pairs(s);
    if (!dp) {
        // Monomial but without the swap normalization: pick an antidiagonal
        // reflection [[0,q],[q^-1,0]] and move it onto [[0,1],[1,0]] by
        // diag(1,q) (the basis adjustment of the imprimitive normal form).
        std::optional<Quat> q;
        for (const QMat2& m : s.elements()) {
            if (!m.is_antidiagonal()) continue;
            if (m.at(0, 1) * m.at(1, 0) == Quat::one(m.conductor())) {
                q = m.at(0, 1);
                break;
            }
        }
        if (!q) return {params, wit, false, "conjugated set has no antidiagonal reflection"};
        Witness w2 = witness_diag(Quat::one(q->conductor()), *q);
        wit.push_back(w2.desc);
        s = conjugate_group(s, w2);
        dp = extract_diag_pairs(s);
        if (!dp) return {params, wit, false, "conjugated set is not in equaliser form"};
    }
    SGroupPtr K0 = sgroup(K0name);
    auto phi = pairs_to_quotaut(*dp, K0);
    if (!phi) {
        // K needs standardization first.
        SGroup kp = pairs_to_sgroup(*dp);
        auto u = solve_conjugator(kp, *K0);
        if (!u) return {params, wit, false, "no conjugator onto the standard " + K0name.str()};
        Witness w2 = witness_diag(*u, *u);
        wit.push_back(w2.desc);
        s = conjugate_group(s, w2);
        dp = extract_diag_pairs(s);
        if (!dp) return {params, wit, false, "standardized set lost the equaliser form"};
        phi = pairs_to_quotaut(*dp, K0);
        if (!phi) return {params, wit, false, "standardized set is not an equaliser over K"};
    }

    // Certify the extracted form reproduces the set exactly.
    if (!GKHGroup::build(*phi).as_matgroup().equals(s))
        return {params, wit, false, "extracted G(K,H,phi) does not reproduce the set"};

    QuotAut target_aut = aut_make(target_phi, K0, phi->H());
    if (!phi->same_map(target_aut)) {
        // Normalize phi: either rho(gamma) with gamma in L_1 (Cor 2.5 move,
        // diag(1,gamma)) or conjugation rho(v) phi rho(v)^-1 (diag(v,v)).
        bool fixed = false;
        for (int c = 0; c < normalizer.order() && !fixed; ++c) {
            Quat cand = normalizer.element(c);
            try {
                QuotAut rho_c = QuotAut::rho(K0, phi->H(), cand);
                if (rho_c.same_map(*phi)) {
                    // phi = rho(cand): undo with diag(1, cand)^-1 when cand^2 in H.
                    auto c2 = K0->find(cand * cand);
                    bool in_h = c2 && std::binary_search(phi->H().begin(), phi->H().end(), *c2);
                    if (in_h && target_aut.is_identity()) {
                        Witness w3 = witness_diag(Quat::one(), cand.inv());
                        wit.push_back(w3.desc);
                        s = conjugate_group(s, w3);
                        fixed = true;
                        break;
                    }
                }
                // Try phi -> rho(cand) phi rho(cand)^-1 == target (tables
                // composed directly; the intermediate maps need not be
                // involutions).
                QuotAut rho_ci = QuotAut::rho(K0, phi->H(), cand.inv());
                bool match = true;
                for (int cc = 0; cc < phi->cosets().size() && match; ++cc) {
                    int mapped = rho_c.apply_coset(phi->apply_coset(rho_ci.apply_coset(cc)));
                    match = mapped == target_aut.apply_coset(cc);
                }
                if (match) {
                    Witness w3 = witness_diag(cand, cand);
                    wit.push_back(w3.desc);
                    s = conjugate_group(s, w3);
                    fixed = true;
                    break;
                }
            } catch (const Error&) {
                continue;
            }
        }
        if (!fixed) return {params, wit, false, "no Lemma 2.4 move reaches the named phi"};
    }

    bool ok = s.equals(target);
    return {params, wit, ok, ok ? "" : "normalized set differs from the standard copy"};
}

TheoremReport theorem_boxdot() {
    TheoremReport rep{"boxdot", {}, true};
    const SGroup& O = *sgroup(GroupName::O());
    const SGroup& I = *sgroup(GroupName::I());

    rep.instances.push_back(boxdot_instance(
        ExtPolyGroup::boxdot(4, 1, GroupName::O()), GroupName::O(),
        gkh_polyhedral(GroupName::O(), "C:2", "id").as_matgroup(), "id", O));
    rep.instances.back().params = "Cbox(4,O) ~ G(O,C:2,id)";

    rep.instances.push_back(boxdot_instance(
        ExtPolyGroup::boxdot(4, 2, GroupName::O()), GroupName::T(),
        gkh_polyhedral(GroupName::T(), "C:2", "rho:delta").as_matgroup(), "rho:delta", O));
    rep.instances.back().params = "Cbox2(4,O) ~ G(T,C:2,rho:delta) ~ G(O,1,beta)";

    rep.instances.push_back(boxdot_instance(
        ExtPolyGroup::boxdot(4, 1, GroupName::I()), GroupName::I(),
        gkh_polyhedral(GroupName::I(), "C:2", "id").as_matgroup(), "id", I));
    rep.instances.back().params = "Cbox(4,I) ~ G(I,C:2,id)";

    for (const auto& inst : rep.instances) rep.pass = rep.pass && inst.pass;
    return rep;
}

TheoremReport theorem_centralizer(int max_m) {
    TheoremReport rep{"centralizer", {}, true};
    std::vector<std::pair<Rat, Rat>> samples{{Rat(1), Rat(0)}, {Rat(0), Rat(1)},
                                             {Rat(1), Rat(1)}, {Rat(2), Rat(3)},
                                             {Rat(1, 2), Rat(-1, 3)}};
    for (int m = 1; m <= max_m; ++m) {
        std::vector<QMat2> gens = gkh_standard_dihedral(m, 1, 1).generators_mat();
        bool ok = true;
        for (auto& [p, q] : samples) {
            Quat d = Quat::make(p, Rat(0), Rat(0), Rat(0));
            Quat qi = Quat::make(Rat(0), q, Rat(0), Rat(0));
            QMat2 c(d, qi, qi, d);
            for (const QMat2& g : gens)
                if (!(c * g == g * c)) ok = false;
        }
        rep.instances.push_back({"{(p,qi;qi,p)} commutes with G(D:" + std::to_string(m) +
                                     ",1,psi:1)",
                                 {},
                                 ok,
                                 ""});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

} // namespace

std::vector<std::string> conjugacy_theorem_tags() {
    return {"TO", "primST(i)", "primST(ii)", "dihedral-cyclic", "dihedral-odd", "boxdot",
            "centralizer"};
}

TheoremReport verify_conjugacy_theorem(const std::string& tag, int max_m,
                                       const std::vector<Rat>& rs) {
    if (tag == "TO") return theorem_TO();
    if (tag == "primST(i)") return theorem_primST_i();
    if (tag == "primST(ii)") return theorem_primST_ii(rs);
    if (tag == "dihedral-cyclic") return theorem_dihedral_cyclic(std::min(max_m, 8), rs);
    if (tag == "dihedral-odd") return theorem_dihedral_odd(std::min(max_m, 7));
    if (tag == "boxdot") return theorem_boxdot();
    if (tag == "centralizer") return theorem_centralizer(std::min(max_m, 8));
    throw InvalidDescriptor("verify_conjugacy_theorem: unknown tag '" + tag + "'");
}

} // namespace qrg
