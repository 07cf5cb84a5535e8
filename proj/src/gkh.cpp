#include "qrg/gkh.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qrg/kernels.hpp"

namespace qrg {

GKHGroup GKHGroup::build(QuotAut phi, std::string descriptor, bool standard) {
    GKHGroup g(std::move(phi));
    const SGroup& K = g.K();
    const CosetStructure& cs = g.phi_.cosets();

    for (int xi = 0; xi < K.order(); ++xi) {
        int target = g.phi_.apply_elt(xi);
        for (int eta : cs.cosets[target]) {
            g.elems_.push_back({false, static_cast<uint16_t>(xi), static_cast<uint16_t>(eta)});
            // s * diag(xi, eta) = [[0, eta],[xi, 0]]
            g.elems_.push_back({true, static_cast<uint16_t>(eta), static_cast<uint16_t>(xi)});
        }
    }
    for (const GElem& e : g.elems_) g.set_.insert(e.pack());

    size_t expected = 2u * K.order() * g.H().size();
    if (g.set_.size() != g.elems_.size() || g.elems_.size() != expected)
        throw SizeMismatch("gkh_build: element count differs from 2|K||H|");

    g.Hname_ = identify_subgroup(K, g.H());
    if (g.H().size() == 1) g.Hname_ = GroupName::C(1);

    // Minimal generators of H (greedy over sorted indices).
    {
        std::vector<int> gens;
        std::vector<int> closure{K.id_index()};
        for (int h : g.H()) {
            if (std::binary_search(closure.begin(), closure.end(), h)) continue;
            gens.push_back(h);
            closure = K.subgroup_closure(gens);
            std::sort(closure.begin(), closure.end());
            if (closure.size() == g.H().size()) break;
        }
        g.h_gens_ = std::move(gens);
    }

    g.descriptor_ = descriptor.empty() ? "G(" + K.name().str() + "," + g.Hname_.str() + "," +
                                             g.phi_.desc() + ")"
                                       : std::move(descriptor);
    g.standard_ = standard;
    return g;
}

GElem GKHGroup::mul(const GElem& x, const GElem& y) const {
    const SGroup& K = this->K();
    auto a = static_cast<uint16_t>(0), b = static_cast<uint16_t>(0);
    if (!x.anti && !y.anti) { // diag * diag
        a = static_cast<uint16_t>(K.mul(x.a, y.a));
        b = static_cast<uint16_t>(K.mul(x.b, y.b));
        return {false, a, b};
    }
    if (!x.anti && y.anti) { // diag * anti -> anti(ac, bd)
        a = static_cast<uint16_t>(K.mul(x.a, y.a));
        b = static_cast<uint16_t>(K.mul(x.b, y.b));
        return {true, a, b};
    }
    if (x.anti && !y.anti) { // anti * diag -> anti(ad, bc)
        a = static_cast<uint16_t>(K.mul(x.a, y.b));
        b = static_cast<uint16_t>(K.mul(x.b, y.a));
        return {true, a, b};
    }
    // anti * anti -> diag(ad, bc)
    a = static_cast<uint16_t>(K.mul(x.a, y.b));
    b = static_cast<uint16_t>(K.mul(x.b, y.a));
    return {false, a, b};
}

int GKHGroup::element_order(const GElem& e) const {
    const SGroup& K = this->K();
    if (!e.anti) return std::lcm(K.element_order(e.a), K.element_order(e.b));
    return 2 * K.element_order(K.mul(e.a, e.b));
}

QMat2 GKHGroup::materialize(const GElem& e) const {
    const SGroup& K = this->K();
    if (!e.anti) return QMat2::diag(K.element(e.a), K.element(e.b));
    return QMat2::antidiag(K.element(e.a), K.element(e.b));
}

std::vector<QMat2> GKHGroup::materialize_all() const {
    std::vector<QMat2> out(elems_.size());
    transform_elements(elems_.size(), [&](std::size_t i) { out[i] = materialize(elems_[i]); });
    return out;
}

MatGroupSet GKHGroup::as_matgroup() const { return MatGroupSet::from_elements(materialize_all()); }

std::vector<GElem> GKHGroup::generators_param() const {
    const SGroup& K = this->K();
    std::vector<GElem> gens;
    uint16_t id = static_cast<uint16_t>(K.id_index());
    gens.push_back({true, id, id}); // s
    for (int h : h_gens_) gens.push_back({false, static_cast<uint16_t>(h), id});
    const CosetStructure& cs = phi_.cosets();
    for (int xi : K.generator_indices()) {
        int eta = cs.rep[phi_.apply_elt(xi)];
        gens.push_back({false, static_cast<uint16_t>(xi), static_cast<uint16_t>(eta)});
    }
    return gens;
}

std::vector<QMat2> GKHGroup::generators_mat() const {
    std::vector<QMat2> out;
    for (const GElem& e : generators_param()) out.push_back(materialize(e));
    return out;
}

std::vector<int> GKHGroup::lset() const {
    const SGroup& K = this->K();
    const CosetStructure& cs = phi_.cosets();
    std::vector<int> out;
    for (int xi = 0; xi < K.order(); ++xi)
        if (phi_.apply_elt(xi) == cs.elt2coset[K.inv(xi)]) out.push_back(xi);
    return out;
}

bool GKHGroup::is_reflection_group() const {
    return static_cast<int>(K().subgroup_closure(lset()).size()) == K().order();
}

std::vector<GElem> GKHGroup::reflections_param() const {
    const SGroup& K = this->K();
    uint16_t id = static_cast<uint16_t>(K.id_index());
    std::vector<GElem> out;
    for (int h : H()) {
        if (h == K.id_index()) continue;
        out.push_back({false, static_cast<uint16_t>(h), id});
        out.push_back({false, id, static_cast<uint16_t>(h)});
    }
    for (int xi : lset())
        out.push_back({true, static_cast<uint16_t>(K.inv(xi)), static_cast<uint16_t>(xi)});
    return out;
}

std::vector<int> GKHGroup::reflection_orders_param() const {
    std::vector<int> orders;
    for (const GElem& e : reflections_param()) orders.push_back(element_order(e));
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::vector<int> GKHGroup::reflection_indices_detector(int order_cap) const {
    std::vector<QMat2> mats = materialize_all();
    std::vector<uint8_t> mask = reflection_mask(mats, order_cap);
    std::vector<int> out;
    for (size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(static_cast<int>(i));
    return out;
}

int GKHGroup::reflection_count_detector(int order_cap) const {
    return static_cast<int>(reflection_indices_detector(order_cap).size());
}

bool GKHGroup::reflections_generate() const {
    std::vector<GElem> refl = reflections_param();
    if (refl.empty()) return order() == 1;
    std::unordered_set<uint32_t> seen;
    std::vector<GElem> queue;
    GElem id{false, static_cast<uint16_t>(K().id_index()), static_cast<uint16_t>(K().id_index())};
    seen.insert(id.pack());
    queue.push_back(id);
    for (const GElem& r : refl)
        if (seen.insert(r.pack()).second) queue.push_back(r);
    for (size_t head = 0; head < queue.size(); ++head)
        for (const GElem& r : refl) {
            GElem t = mul(queue[head], r);
            if (seen.insert(t.pack()).second) queue.push_back(t);
        }
    return seen.size() == set_.size();
}

bool GKHGroup::closure_check() const {
    for (const GElem& e : elems_)
        for (const GElem& g : generators_param())
            if (!contains(mul(e, g))) return false;
    return true;
}

bool GKHGroup::generator_closure_crosscheck() const {
    std::vector<GElem> gens = generators_param();
    std::unordered_set<uint32_t> seen;
    std::vector<GElem> queue;
    GElem id{false, static_cast<uint16_t>(K().id_index()), static_cast<uint16_t>(K().id_index())};
    seen.insert(id.pack());
    queue.push_back(id);
    for (const GElem& g : gens)
        if (seen.insert(g.pack()).second) queue.push_back(g);
    for (size_t head = 0; head < queue.size(); ++head)
        for (const GElem& g : gens) {
            GElem t = mul(queue[head], g);
            if (seen.insert(t.pack()).second) queue.push_back(t);
        }
    if (seen.size() != set_.size()) return false;
    for (uint32_t p : seen)
        if (!set_.count(p)) return false;
    return true;
}

// --- spec-level constructors ------------------------------------------------

std::vector<int> subgroup_named_inside(const SGroup& K, const std::string& name) {
    if (name == "1") return {K.id_index()};
    if (name.rfind("X^", 0) == 0) {
        if (!K.has_dihedral_shape()) throw InvalidDescriptor("X^n needs a binary dihedral K");
        int n = std::stoi(name.substr(2));
        return K.subgroup_closure({K.x_power(n)});
    }
    if (name.rfind("C:", 0) == 0) {
        int ell = std::stoi(name.substr(2));
        if (ell == 1) return {K.id_index()};
        if (ell == 2) {
            if (K.neg_one_index() < 0) throw InvalidDescriptor("C:2 needs -1 in K");
            return K.subgroup_closure({K.neg_one_index()});
        }
        if (K.has_dihedral_shape()) {
            int m = K.dihedral_m();
            if ((2 * m) % ell != 0) throw InvalidDescriptor("C:l must divide 2m");
            return K.subgroup_closure({K.x_power(2 * m / ell)});
        }
        throw InvalidDescriptor("C:l subgroup not available in " + K.name().str());
    }
    if (name.rfind("D:", 0) == 0) {
        int l = std::stoi(name.substr(2));
        if (K.has_dihedral_shape()) {
            int m = K.dihedral_m();
            if (l == m) { // whole group
                std::vector<int> all(K.order());
                std::iota(all.begin(), all.end(), 0);
                return all;
            }
            if (2 * l == m || m % 2 == 0) {
                // <x^2, y> copy of D_(m/2) when l = m/2
                if (2 * l != m) throw InvalidDescriptor("D:l inside D:m needs l = m/2");
                return K.subgroup_closure({K.x_power(2), K.y_index()});
            }
            throw InvalidDescriptor("D:l inside D:m needs l = m/2");
        }
        if (l == 2) {
            auto i = K.find(quat_i()), j = K.find(quat_j());
            if (!i || !j) throw InvalidDescriptor("D:2 needs i, j in K");
            return K.subgroup_closure({*i, *j});
        }
        throw InvalidDescriptor("D:l subgroup not available in " + K.name().str());
    }
    if (name == "T") {
        auto i = K.find(quat_i()), j = K.find(quat_j()), w = K.find(quat_varpi());
        if (!i || !j || !w) throw InvalidDescriptor("T needs i, j, varpi in K");
        return K.subgroup_closure({*i, *j, *w});
    }
    if (name == "O" || name == "I") {
        std::vector<int> all(K.order());
        std::iota(all.begin(), all.end(), 0);
        if (static_cast<int>(all.size()) != (name == "O" ? 48 : 120))
            throw InvalidDescriptor(name + " subgroup only as the whole group");
        return all;
    }
    throw InvalidDescriptor("unknown subgroup descriptor '" + name + "'");
}

GKHGroup gkh_build(SGroupPtr K, std::vector<int> H, const std::string& phi_desc) {
    QuotAut phi = aut_make(phi_desc, K, std::move(H));
    return GKHGroup::build(std::move(phi));
}

GKHGroup gkh_standard_dihedral(int m, int ell, int r) {
    if (m < 1 || ell < 1 || (2 * m) % ell != 0)
        throw InvalidParams("gkh_standard_dihedral: need ell | 2m");
    SGroupPtr K = sgroup(GroupName::D(m));
    int n = 2 * m / ell;
    std::vector<int> H = K->subgroup_closure({K->x_power(n)});
    QuotAut phi = QuotAut::psi(K, std::move(H), r);
    std::string desc = "G(D:" + std::to_string(m) + ",C:" + std::to_string(ell) + ",psi:" +
                       std::to_string(r) + ")";
    return GKHGroup::build(std::move(phi), desc, /*standard=*/true);
}

GKHGroup gkh_polyhedral(const GroupName& Kname, const std::string& Hname,
                        const std::string& phi_desc) {
    SGroupPtr K = sgroup(Kname);
    std::vector<int> H = subgroup_named_inside(*K, Hname);
    QuotAut phi = aut_make(phi_desc, K, std::move(H));
    std::string desc = "G(" + Kname.str() + "," + Hname + "," + phi_desc + ")";
    return GKHGroup::build(std::move(phi), desc, /*standard=*/true);
}

GKHGroup gkh_cyclic(int m, int ell) {
    if (m < 1 || ell < 1 || m % ell != 0) throw InvalidParams("gkh_cyclic: need ell | m");
    SGroupPtr K = sgroup(GroupName::C(m));
    // H = <zeta_m^(m/ell)>, the order-ell subgroup.
    int gen = 0;
    for (int e = 0; e < K->order(); ++e)
        if (K->element_order(e) == m) gen = e;
    std::vector<int> H = K->subgroup_closure({K->power(gen, m / ell)});
    QuotAut phi = QuotAut::inversion(K, std::move(H));
    std::string desc = "G(C:" + std::to_string(m) + ",C:" + std::to_string(ell) + ",inv)";
    return GKHGroup::build(std::move(phi), desc, /*standard=*/true);
}

GKHGroup theoremB_build(int m, bool doubled) {
    if (m < 1) throw InvalidParams("theoremB_build: m >= 1");
    if (!doubled) {
        SGroupPtr K = sgroup(GroupName::D(m));
        std::vector<int> H(K->order());
        std::iota(H.begin(), H.end(), 0);
        QuotAut phi = QuotAut::identity(K, std::move(H));
        std::string desc = "G(D:" + std::to_string(m) + ",D:" + std::to_string(m) + ",id)";
        return GKHGroup::build(std::move(phi), desc, true);
    }
    SGroupPtr K = sgroup(GroupName::D(2 * m));
    std::vector<int> H = K->subgroup_closure({K->x_power(2), K->y_index()});
    QuotAut phi = QuotAut::identity(K, std::move(H));
    std::string desc = "G(D:" + std::to_string(2 * m) + ",D:" + std::to_string(m) + ",id)";
    return GKHGroup::build(std::move(phi), desc, true);
}

// --- Theorem A --------------------------------------------------------------

std::vector<int> valid_r_values(int m, int ell) {
    if (m < 1 || ell < 1 || (2 * m) % ell != 0) throw InvalidParams("valid_r_values: ell | 2m");
    int n = 2 * m / ell;
    std::vector<int> out{1};
    for (int r = 2; 2 * r <= n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        int kappa = n / std::gcd(n, r + 1);
        int nu = n / std::gcd(n, r - 1);
        if (std::gcd(kappa, nu) == 1) out.push_back(r);
    }
    return out;
}

namespace {

// Abstract model of D_m: elements x^a y^b encoded a + 2m*b.
struct DihModel {
    int m;
    int n; // H = <x^n>
    int size() const { return 4 * m; }
    int mul(int u, int v) const {
        int tm = 2 * m;
        int a = u % tm, b = u / tm, c = v % tm, d = v / tm;
        int e = b ? (a - c + tm) % tm : (a + c) % tm;
        if (b && d) e = (e + m) % tm;
        return e + tm * (b ^ d);
    }
    int inv(int u) const {
        int tm = 2 * m;
        int a = u % tm, b = u / tm;
        if (!b) return (tm - a) % tm;
        return (a + m) % tm + tm;
    }
    // Coset of H = <x^n>: (a mod n, b).
    std::pair<int, int> coset(int u) const {
        int tm = 2 * m;
        return {(u % tm) % n, u / tm};
    }
    int psi_image(int u, int r) const {
        int tm = 2 * m;
        int a = u % tm, b = u / tm;
        long e = (static_cast<long>(a) * r + static_cast<long>(b) * m) % tm;
        return static_cast<int>(e) + tm * b;
    }
};

} // namespace

std::vector<int> valid_r_values_bruteforce(int m, int ell) {
    if (m < 1 || ell < 1 || (2 * m) % ell != 0)
        throw InvalidParams("valid_r_values_bruteforce: ell | 2m");
    int n = 2 * m / ell;
    DihModel G{m, n};
    std::vector<int> found;
    for (int r = 1; r <= n; ++r) {
        // psi_r must be a valid automorphism of K/H of order <= 2.
        if (std::gcd(r, n) != 1) continue;
        if ((static_cast<long>(r) * r - 1) % n != 0) continue;
        if ((static_cast<long>(m) * (r + 1)) % n != 0) continue;
        // L = { u : psi_r(H u) = H u^-1 }, then test that <L> = K.
        std::vector<int> L;
        for (int u = 0; u < G.size(); ++u)
            if (G.coset(G.psi_image(u, r)) == G.coset(G.inv(u))) L.push_back(u);
        std::vector<char> in(G.size(), 0);
        std::vector<int> queue{0};
        in[0] = 1;
        for (int x : L)
            if (!in[x]) {
                in[x] = 1;
                queue.push_back(x);
            }
        for (size_t head = 0; head < queue.size(); ++head)
            for (int x : L) {
                int t = G.mul(queue[head], x);
                if (!in[t]) {
                    in[t] = 1;
                    queue.push_back(t);
                }
            }
        if (static_cast<int>(queue.size()) == G.size()) {
            // psi_r and psi_(n-r) give conjugate groups; normalize into
            // the theorem's range r = 1 or 1 < r <= n/2.
            int norm = (n == 1) ? 1 : std::min(r, n - r);
            found.push_back(norm == 0 ? 1 : norm);
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace qrg
