#include "qrg/extpoly.hpp"

#include <algorithm>
#include <numeric>

#include "qrg/gkh.hpp"
#include "qrg/kernels.hpp"

namespace qrg {

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
} // namespace

QMat2 theta_embed(const Quat& alpha, const Quat& xi) {
    if (!alpha.is_complex()) throw NotComplex("theta_embed: alpha must lie in C");
    if (!alpha.is_unit() || !xi.is_unit()) throw NotUnit("theta_embed: arguments must be units");
    int n = lcm_int(alpha.conductor(), xi.conductor());
    CycNum a = alpha.z().promoted(n);
    CycNum z = xi.z().promoted(n), w = xi.w().promoted(n);
    // h -> alpha h conj(xi) sends 1 to alpha conj(z) - (alpha w) j and j to
    // alpha conj(w) + (alpha z) j. Writing that map against the row-vector
    // action v -> vM makes matrix products track composition in the order
    // theta(x) theta(y) = theta(xy).
    return QMat2(Quat::from_complex(a * z.conj()), Quat::from_complex(a * w.conj()),
                 Quat::from_complex(-(a * w)), Quat::from_complex(a * z));
}

QMat2 s_matrix(int conductor) {
    int n = lcm_int(4, conductor);
    return QMat2(Quat::zero(n), quat_j().promoted(n), -quat_j().promoted(n), Quat::zero(n));
}

ExtPolyGroup ExtPolyGroup::build(int d, int f, const GroupName& Kname, bool boxdot) {
    if (d < 2 || d % 2 != 0) throw InvalidParams("extpoly: d must be even and >= 2");
    if (f < 1 || f > 3 || d % f != 0) throw InvalidParams("extpoly: f must divide d, f in {1,2,3}");
    // The kernel pair (-1, -1) must lie in the pullback, i.e. psi(-1) = H;
    // otherwise theta is injective on it and |C_d o_f K| = (d/2f)|K| fails.
    if ((d / 2) % f != 0)
        throw InvalidParams("extpoly: need psi(-1) = H, i.e. f | d/2");
    if (boxdot && f == 3) throw InvalidParams("extpoly: boxdot requires f in {1,2}");
    bool okK = (Kname == GroupName::T() || Kname == GroupName::O() || Kname == GroupName::I());
    if (!okK) throw InvalidParams("extpoly: K must be T, O or I");
    if (f == 2 && !(Kname == GroupName::O())) throw InvalidParams("extpoly: f = 2 needs K = O");
    if (f == 3 && !(Kname == GroupName::T())) throw InvalidParams("extpoly: f = 3 needs K = T");

    ExtPolyGroup g;
    g.d_ = d;
    g.f_ = f;
    g.Kname_ = Kname;
    g.K_ = sgroup(Kname);
    g.boxdot_ = boxdot;
    const SGroup& K = *g.K_;

    // H = kernel of psi: index-f normal subgroup with cyclic quotient.
    if (f == 1) {
        g.H_.resize(K.order());
        std::iota(g.H_.begin(), g.H_.end(), 0);
        g.xf_ = K.id_index();
    } else if (f == 2) {
        g.H_ = subgroup_named_inside(K, "T");
        g.xf_ = *K.find(quat_gamma());
    } else {
        g.H_ = subgroup_named_inside(K, "D:2");
        g.xf_ = *K.find(quat_varpi());
    }

    g.coset_of_.assign(K.order(), -1);
    {
        std::vector<char> inH(K.order(), 0);
        for (int h : g.H_) inH[h] = 1;
        int p = K.id_index();
        for (int t = 0; t < f; ++t) {
            for (int h : g.H_) g.coset_of_[K.mul(h, p)] = t;
            p = K.mul(p, g.xf_);
        }
        for (int v : g.coset_of_)
            if (v < 0) throw InvalidParams("extpoly: psi is not surjective");
    }

    for (int a = 0; a < d; ++a) {
        int t = a % f;
        for (int k = 0; k < K.order(); ++k) {
            if (g.coset_of_[k] != t) continue;
            for (int s = 0; s <= (boxdot ? 1 : 0); ++s) {
                EElem e = g.canon(a, k, s);
                if (g.set_.insert(e.pack()).second) g.elems_.push_back(e);
            }
        }
    }

    size_t expected = static_cast<size_t>(d) * K.order() / (2 * f) * (boxdot ? 2 : 1);
    if (g.elems_.size() != expected) throw SizeMismatch("extpoly: unexpected order");
    std::sort(g.elems_.begin(), g.elems_.end(),
              [](const EElem& x, const EElem& y) { return x.pack() < y.pack(); });
    return g;
}

ExtPolyGroup ExtPolyGroup::circ(int d, int f, const GroupName& K) { return build(d, f, K, false); }
ExtPolyGroup ExtPolyGroup::boxdot(int d, int f, const GroupName& K) { return build(d, f, K, true); }

std::string ExtPolyGroup::descriptor() const {
    std::string base = boxdot_ ? "Cbox" : "Ccirc";
    if (f_ != 1) base += std::to_string(f_);
    return base + "(" + std::to_string(d_) + "," + Kname_.str() + ")";
}

EElem ExtPolyGroup::canon(int a, int k, int s) const {
    int aa = ((a % d_) + d_) % d_;
    int a2 = (aa + d_ / 2) % d_;
    int k2 = K_->neg_index(k);
    if (a2 < aa || (a2 == aa && k2 < k)) {
        aa = a2;
        k = k2;
    }
    return {static_cast<uint16_t>(aa), static_cast<uint16_t>(k), static_cast<uint8_t>(s)};
}

EElem ExtPolyGroup::mul(const EElem& x, const EElem& y) const {
    // s theta(alpha, xi) s^-1 = theta(alpha^-1, xi).
    int a = x.s ? (x.a - y.a + d_) % d_ : (x.a + y.a) % d_;
    int k = K_->mul(x.k, y.k);
    return canon(a, k, x.s ^ y.s);
}

QMat2 ExtPolyGroup::materialize(const EElem& e) const {
    Quat alpha = quat_zeta(d_).pow(e.a);
    QMat2 m = theta_embed(alpha, K_->element(e.k));
    if (e.s) m = m * s_matrix(m.conductor());
    return m;
}

std::vector<QMat2> ExtPolyGroup::materialize_all() const {
    std::vector<QMat2> out(elems_.size());
    transform_elements(elems_.size(), [&](std::size_t i) { out[i] = materialize(elems_[i]); });
    return out;
}

MatGroupSet ExtPolyGroup::as_matgroup() const {
    return MatGroupSet::from_elements(materialize_all());
}

std::vector<EElem> ExtPolyGroup::generators_param() const {
    std::vector<EElem> gens;
    gens.push_back(canon(1, xf_, 0)); // psi(zeta_d) = H xf
    // Minimal generators of H.
    std::vector<int> hg;
    std::vector<int> closure{K_->id_index()};
    for (int h : H_) {
        if (std::binary_search(closure.begin(), closure.end(), h)) continue;
        hg.push_back(h);
        closure = K_->subgroup_closure(hg);
        std::sort(closure.begin(), closure.end());
        if (closure.size() == H_.size()) break;
    }
    for (int h : hg) gens.push_back(canon(0, h, 0));
    if (boxdot_) gens.push_back(canon(0, K_->id_index(), 1));
    return gens;
}

std::vector<QMat2> ExtPolyGroup::generators_mat() const {
    std::vector<QMat2> out;
    for (const EElem& e : generators_param()) out.push_back(materialize(e));
    return out;
}

std::vector<EElem> ExtPolyGroup::reflections_param() const {
    int n = lcm_int(lcm_int(4, d_), K_->conductor());
    std::vector<CycNum> cos2(d_); // zeta_d^a + zeta_d^-a
    CycNum zeta = CycNum::zeta(d_).promoted(n);
    CycNum pw = CycNum::one(n);
    for (int a = 0; a < d_; ++a) {
        cos2[a] = pw + pw.conj(); // zeta^-a = conj(zeta^a) on the unit circle
        pw = pw * zeta;
    }
    std::vector<CycNum> traces;
    traces.reserve(K_->order());
    for (int k = 0; k < K_->order(); ++k) traces.push_back(K_->trace_of(k).promoted(n));
    EElem id = canon(0, K_->id_index(), 0);
    std::vector<EElem> out;
    for (const EElem& e : elems_) {
        if (e.s) {
            if (e.k == K_->id_index() || e.k == K_->neg_one_index()) out.push_back(e);
            continue;
        }
        if (e == id) continue;
        if (traces[e.k].coeffs() == cos2[e.a].coeffs()) out.push_back(e);
    }
    return out;
}

bool ExtPolyGroup::reflections_generate() const {
    std::vector<EElem> refl = reflections_param();
    std::unordered_set<uint32_t> seen;
    std::vector<EElem> queue;
    EElem id = canon(0, K_->id_index(), 0);
    seen.insert(id.pack());
    queue.push_back(id);
    for (const EElem& r : refl)
        if (seen.insert(r.pack()).second) queue.push_back(r);
    for (size_t head = 0; head < queue.size(); ++head)
        for (const EElem& r : refl) {
            EElem t = mul(queue[head], r);
            if (seen.insert(t.pack()).second) queue.push_back(t);
        }
    return seen.size() == set_.size();
}

bool ExtPolyGroup::s_normalizes_circ() const {
    // s theta(alpha, xi) s^-1 = theta(alpha^-1, xi) must stay inside.
    for (const EElem& e : elems_) {
        if (e.s) continue;
        EElem t = canon((d_ - e.a) % d_, e.k, 0);
        if (!set_.count(t.pack())) return false;
    }
    return true;
}

bool ExtPolyGroup::closure_check() const {
    std::vector<EElem> gens = generators_param();
    for (const EElem& e : elems_)
        for (const EElem& g : gens)
            if (!contains(mul(e, g))) return false;
    return true;
}

bool extpoly_is_reflection_group(int d, int f, const GroupName& K) {
    return ExtPolyGroup::boxdot(d, f, K).reflections_generate();
}

bool extpoly_theorem_predicate(int d, int f, const GroupName& K) {
    if (f == 1 && K == GroupName::T()) return d % 6 == 0;
    if (f == 1 && K == GroupName::O()) return d % 4 == 0;
    if (f == 2 && K == GroupName::O()) return d % 4 == 0 && d % 16 != 0;
    if (f == 1 && K == GroupName::I()) return d % 4 == 0 || d % 6 == 0 || d % 10 == 0;
    throw InvalidParams("extpoly_theorem_predicate: no theorem case");
}

CMat4 CMat4::identity(int n) {
    CMat4 m;
    for (int i = 0; i < 16; ++i) m.e[i] = CycNum::zero(n);
    for (int i = 0; i < 4; ++i) m.e[i * 4 + i] = CycNum::one(n);
    return m;
}

CMat4 operator*(const CMat4& x, const CMat4& y) {
    CMat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CycNum acc = x.e[i * 4] * y.e[j];
            for (int k = 1; k < 4; ++k) acc = acc + x.e[i * 4 + k] * y.e[k * 4 + j];
            out.e[i * 4 + j] = acc;
        }
    return out;
}

bool operator==(const CMat4& x, const CMat4& y) {
    for (int i = 0; i < 16; ++i)
        if (!(x.e[i] == y.e[i])) return false;
    return true;
}

CMat4 complexify(const QMat2& a) {
    CMat4 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const Quat& q = a.at(r, c);
            out.e[r * 4 + c] = q.z();               // A1
            out.e[r * 4 + (c + 2)] = q.w();         // A2
            out.e[(r + 2) * 4 + c] = -(q.w().conj()); // -conj A2
            out.e[(r + 2) * 4 + (c + 2)] = q.z().conj(); // conj A1
        }
    return out;
}

} // namespace qrg
