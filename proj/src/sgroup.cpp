#include "qrg/sgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qrg {

std::string GroupName::str() const {
    switch (kind) {
        case Kind::C: return "C:" + std::to_string(m);
        case Kind::D: return "D:" + std::to_string(m);
        case Kind::T: return "T";
        case Kind::O: return "O";
        case Kind::I: return "I";
        case Kind::Custom: return "custom";
    }
    return "?";
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

std::string quat_key(const Quat& q) {
    std::string s;
    q.append_key(s);
    return s;
}
} // namespace

SGroup SGroup::from_generators(GroupName name, const std::vector<Quat>& gens, int cap) {
    SGroup g;
    g.name_ = name;
    int n = 4;
    for (const Quat& q : gens) n = lcm_int(n, q.conductor());
    g.conductor_ = n;

    for (const Quat& q : gens)
        if (!q.is_unit()) throw NotUnit("SGroup: generators must be unit quaternions");

    std::unordered_map<std::string, int> index;
    auto push = [&](const Quat& q, std::vector<int> word, int parent, int lastgen) -> int {
        std::string key = quat_key(q);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int idx = static_cast<int>(g.elems_.size());
        if (idx >= cap) throw ClosureBound("SGroup: closure exceeds cap");
        index.emplace(std::move(key), idx);
        g.elems_.push_back(q);
        g.words_.push_back(std::move(word));
        g.parent_.push_back(parent);
        g.lastgen_.push_back(lastgen);
        return idx;
    };

    push(Quat::one(n), {}, -1, -1);
    std::vector<Quat> pg;
    for (const Quat& q : gens) pg.push_back(q.promoted(n));
    for (size_t gi = 0; gi < pg.size(); ++gi)
        g.gens_.push_back(push(pg[gi], {static_cast<int>(gi)}, 0, static_cast<int>(gi)));

    // Breadth-first closure; first-found generator words are kept.
    for (size_t head = 0; head < g.elems_.size(); ++head) {
        Quat base = g.elems_[head];
        for (size_t gi = 0; gi < pg.size(); ++gi) {
            Quat q = base * pg[gi];
            std::string key = quat_key(q);
            if (index.count(key)) continue;
            std::vector<int> word = g.words_[head];
            word.push_back(static_cast<int>(gi));
            int idx = static_cast<int>(g.elems_.size());
            if (idx >= cap) throw ClosureBound("SGroup: closure exceeds cap");
            index.emplace(std::move(key), idx);
            g.elems_.push_back(std::move(q));
            g.words_.push_back(std::move(word));
            g.parent_.push_back(static_cast<int>(head));
            g.lastgen_.push_back(static_cast<int>(gi));
        }
    }

    g.finish_build();
    if (name.kind == GroupName::Kind::D) g.build_dihedral_shape(name.m);
    return g;
}

void SGroup::finish_build() {
    const int n = order();
    if (n > 4096) throw ClosureBound("SGroup: too large for table arithmetic");
    keys_.resize(n);
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        keys_[i] = quat_key(elems_[i]);
        index.emplace(keys_[i], i);
    }
    id_ = index.at(quat_key(Quat::one(conductor_)));

    // Exact products are needed only against the generators; every other
    // column follows from the BFS structure b = parent(b) * gen.
    std::vector<int> tgen(static_cast<size_t>(n) * std::max<size_t>(gens_.size(), 1), -1);
    for (int a = 0; a < n; ++a)
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            Quat q = elems_[a] * elems_[gens_[gi]];
            auto it = index.find(quat_key(q));
            if (it == index.end()) throw Error("SGroup: set not closed under multiplication");
            tgen[a * gens_.size() + gi] = it->second;
        }
    table_.assign(static_cast<size_t>(n) * n, -1);
    for (int b = 0; b < n; ++b) {
        if (b == id_) {
            for (int a = 0; a < n; ++a) table_[static_cast<size_t>(a) * n + b] = a;
            continue;
        }
        int p = parent_[b], gi = lastgen_[b];
        for (int a = 0; a < n; ++a) {
            int ap = table_[static_cast<size_t>(a) * n + p];
            table_[static_cast<size_t>(a) * n + b] = tgen[ap * gens_.size() + gi];
        }
    }

    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == id_) inv_[a] = b;

    ord_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int p = a, k = 1;
        while (p != id_) {
            p = mul(p, a);
            ++k;
        }
        ord_[a] = k;
    }

    traces_.reserve(n);
    for (int a = 0; a < n; ++a) traces_.push_back(elems_[a].trace());

    auto neg = find(-Quat::one(conductor_));
    neg_one_ = neg ? *neg : -1;
}

void SGroup::build_dihedral_shape(int m) {
    dih_m_ = m;
    int x = gens_.at(0);
    y_idx_ = gens_.at(1);
    xpow_.assign(2 * m, id_);
    for (int a = 1; a < 2 * m; ++a) xpow_[a] = mul(xpow_[a - 1], x);
    decomp_.assign(order(), {-1, -1});
    for (int a = 0; a < 2 * m; ++a) {
        decomp_[xpow_[a]] = {a, 0};
        decomp_[mul(xpow_[a], y_idx_)] = {a, 1};
    }
    for (auto& [a, b] : decomp_)
        if (a < 0) throw Error("SGroup: dihedral coordinates do not cover the group");
}

int SGroup::x_power(int a) const {
    int n = 2 * dih_m_;
    return xpow_[((a % n) + n) % n];
}

SGroup SGroup::cyclic(int m) {
    if (m < 1) throw InvalidParams("cyclic: m >= 1");
    return from_generators(GroupName::C(m), {quat_zeta(m)});
}

SGroup SGroup::binary_dihedral(int m) {
    if (m < 1) throw InvalidParams("binary_dihedral: m >= 1");
    return from_generators(GroupName::D(m), {quat_zeta(2 * m), quat_j()});
}

SGroup SGroup::tetrahedral() {
    return from_generators(GroupName::T(), {quat_i(), quat_j(), quat_varpi()});
}

SGroup SGroup::octahedral() {
    return from_generators(GroupName::O(), {quat_i(), quat_j(), quat_varpi(), quat_gamma()});
}

SGroup SGroup::icosahedral() {
    return from_generators(GroupName::I(), {quat_i(), quat_sigma()});
}

SGroup SGroup::named_group(const GroupName& name) {
    switch (name.kind) {
        case GroupName::Kind::C: return cyclic(name.m);
        case GroupName::Kind::D: return binary_dihedral(name.m);
        case GroupName::Kind::T: return tetrahedral();
        case GroupName::Kind::O: return octahedral();
        case GroupName::Kind::I: return icosahedral();
        case GroupName::Kind::Custom: break;
    }
    throw InvalidParams("named_group: no construction for custom names");
}

namespace {
std::map<std::string, SGroupPtr> g_sgroup_cache;
std::mutex g_sgroup_mutex;
} // namespace

SGroupPtr sgroup(const GroupName& name) {
    std::lock_guard<std::mutex> lock(g_sgroup_mutex);
    auto it = g_sgroup_cache.find(name.str());
    if (it != g_sgroup_cache.end()) return it->second;
    auto ptr = std::make_shared<const SGroup>(SGroup::named_group(name));
    g_sgroup_cache.emplace(name.str(), ptr);
    return ptr;
}

int SGroup::power(int a, long e) const {
    long o = ord_[a];
    e %= o;
    if (e < 0) e += o;
    int p = id_;
    for (long k = 0; k < e; ++k) p = mul(p, a);
    return p;
}

std::optional<int> SGroup::find(const Quat& q) const {
    if (conductor_ % q.conductor() != 0) {
        // Compare at a common conductor without assuming divisibility.
        int n = lcm_int(conductor_, q.conductor());
        Quat target = q.promoted(n);
        for (int i = 0; i < order(); ++i)
            if (elems_[i].promoted(n) == target) return i;
        return std::nullopt;
    }
    std::string key = quat_key(q.promoted(conductor_));
    for (int i = 0; i < order(); ++i)
        if (keys_[i] == key) return i;
    return std::nullopt;
}

std::vector<int> SGroup::subgroup_closure(const std::vector<int>& seed) const {
    std::vector<char> in(order(), 0);
    std::vector<int> queue{id_};
    in[id_] = 1;
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            queue.push_back(s);
        }
    std::vector<int> gens = seed;
    for (size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            int t = mul(queue[head], g);
            if (!in[t]) {
                in[t] = 1;
                queue.push_back(t);
            }
        }
    std::vector<int> out;
    for (int i = 0; i < order(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

bool SGroup::is_subgroup(const std::vector<int>& subset) const {
    std::vector<char> in(order(), 0);
    for (int i : subset) in[i] = 1;
    if (!in[id_]) return false;
    for (int a : subset)
        for (int b : subset)
            if (!in[mul(a, b)]) return false;
    return true;
}

bool SGroup::is_normal(const std::vector<int>& subset) const {
    if (!is_subgroup(subset)) return false;
    std::vector<char> in(order(), 0);
    for (int i : subset) in[i] = 1;
    for (int g = 0; g < order(); ++g)
        for (int h : subset)
            if (!in[mul(mul(g, h), inv_[g])]) return false;
    return true;
}

bool SGroup::is_abelian_subset(const std::vector<int>& subset) const {
    const std::vector<int>& s = subset;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (mul(s[i], s[j]) != mul(s[j], s[i])) return false;
    return true;
}

std::vector<std::vector<int>> SGroup::conjugacy_classes() const {
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<int>> classes;
    for (int e = 0; e < order(); ++e) {
        if (cls[e] >= 0) continue;
        int c = static_cast<int>(classes.size());
        std::vector<int> members;
        for (int g = 0; g < order(); ++g) {
            int t = mul(mul(g, e), inv_[g]);
            if (cls[t] < 0) {
                cls[t] = c;
                members.push_back(t);
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    return classes;
}

std::vector<std::vector<int>> SGroup::normal_subgroup_index_sets() const {
    std::vector<std::vector<int>> out;
    std::set<std::vector<int>> seen;

    std::vector<int> all(order());
    std::iota(all.begin(), all.end(), 0);

    if (is_abelian_subset(all)) {
        // In scope the abelian K are cyclic; every subgroup is a closure of
        // a single element.
        for (int e = 0; e < order(); ++e) {
            auto sub = subgroup_closure({e});
            if (seen.insert(sub).second) out.push_back(std::move(sub));
        }
    } else {
        auto classes = conjugacy_classes();
        int idc = -1;
        for (size_t i = 0; i < classes.size(); ++i)
            if (classes[i].size() == 1 && classes[i][0] == id_) idc = static_cast<int>(i);
        std::vector<int> others;
        for (size_t i = 0; i < classes.size(); ++i)
            if (static_cast<int>(i) != idc) others.push_back(static_cast<int>(i));
        if (others.size() > 22) throw ClosureBound("normal subgroups: too many classes");
        for (uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
            size_t total = 1;
            for (size_t i = 0; i < others.size(); ++i)
                if (mask & (1u << i)) total += classes[others[i]].size();
            if (order() % total != 0) continue;
            std::vector<int> cand{id_};
            for (size_t i = 0; i < others.size(); ++i)
                if (mask & (1u << i))
                    cand.insert(cand.end(), classes[others[i]].begin(), classes[others[i]].end());
            std::sort(cand.begin(), cand.end());
            if (!is_subgroup(cand)) continue;
            if (seen.insert(cand).second) out.push_back(std::move(cand));
        }
    }

    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SGroup SGroup::sub(const std::vector<int>& indices, GroupName name) const {
    if (!is_subgroup(indices)) throw InvalidParams("sub: not a subgroup");
    // Greedy minimal generating set, deterministic over sorted indices.
    std::vector<int> gens;
    std::vector<int> closure{id_};
    for (int i : indices) {
        if (std::binary_search(closure.begin(), closure.end(), i)) continue;
        gens.push_back(i);
        closure = subgroup_closure(gens);
        std::sort(closure.begin(), closure.end());
        if (closure.size() == indices.size()) break;
    }
    std::vector<Quat> gen_quats;
    for (int i : gens) gen_quats.push_back(elems_[i]);
    if (gen_quats.empty()) gen_quats.push_back(Quat::one(conductor_));
    return from_generators(name, gen_quats, order() + 1);
}

std::vector<std::pair<int, int>> SGroup::order_fingerprint(const std::vector<int>& subset) const {
    std::map<int, int> hist;
    if (subset.empty()) {
        for (int i = 0; i < order(); ++i) ++hist[ord_[i]];
    } else {
        for (int i : subset) ++hist[ord_[i]];
    }
    return {hist.begin(), hist.end()};
}

// --- reference fingerprints for quotient identification ------------------

namespace {

using Fingerprint = std::vector<std::pair<int, int>>;

template <typename Mul>
Fingerprint model_fingerprint(int n, int id, Mul&& mul) {
    std::map<int, int> hist;
    for (int e = 0; e < n; ++e) {
        int p = e, k = 1;
        while (p != id) {
            p = mul(p, e);
            ++k;
        }
        ++hist[k];
    }
    return {hist.begin(), hist.end()};
}

// Dihedral of order 2k: (a, b) with b the flip bit, encoded a + k*b.
Fingerprint dihedral_fp(int k) {
    auto mul = [k](int u, int v) {
        int a = u % k, b = u / k, c = v % k, d = v / k;
        int e = b ? (a - c + k) % k : (a + c) % k;
        return e + k * (b ^ d);
    };
    return model_fingerprint(2 * k, 0, mul);
}

// Binary dihedral of order 4k: x^a y^b with x^(2k) = 1, y^2 = x^k,
// y^-1 x y = x^-1; encoded a + 2k*b.
Fingerprint bin_dihedral_fp(int k) {
    int n = 2 * k;
    auto mul = [n, k](int u, int v) {
        int a = u % n, b = u / n, c = v % n, d = v / n;
        int e = b ? (a - c + n) % n : (a + c) % n;
        if (b && d) e = (e + k) % n;
        return e + n * (b ^ d);
    };
    return model_fingerprint(4 * k, 0, mul);
}

// Tiny permutation-group closure, used to derive the Alt/Sym fingerprints
// independently of the quaternionic constructions.
Fingerprint perm_group_fp(int pts, const std::vector<std::vector<int>>& gens) {
    std::vector<std::vector<int>> elems;
    std::map<std::vector<int>, int> index;
    std::vector<int> id(pts);
    std::iota(id.begin(), id.end(), 0);
    elems.push_back(id);
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            std::vector<int> t(pts);
            for (int i = 0; i < pts; ++i) t[i] = g[elems[head][i]];
            if (!index.count(t)) {
                index[t] = static_cast<int>(elems.size());
                elems.push_back(t);
            }
        }
    auto mul = [&](int a, int b) {
        std::vector<int> t(pts);
        for (int i = 0; i < pts; ++i) t[i] = elems[b][elems[a][i]];
        return index.at(t);
    };
    return model_fingerprint(static_cast<int>(elems.size()), 0, mul);
}

const Fingerprint& alt4_fp() {
    static Fingerprint fp = perm_group_fp(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
    return fp;
}
const Fingerprint& sym4_fp() {
    static Fingerprint fp = perm_group_fp(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    return fp;
}
const Fingerprint& alt5_fp() {
    static Fingerprint fp = perm_group_fp(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
    return fp;
}

const Fingerprint& binpoly_fp(GroupName::Kind kind) {
    static std::map<GroupName::Kind, Fingerprint> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(kind);
    if (it == cache.end()) {
        GroupName name{kind, 0};
        it = cache.emplace(kind, sgroup(name)->order_fingerprint()).first;
    }
    return it->second;
}

} // namespace

GroupName identify_subgroup(const SGroup& K, const std::vector<int>& subset) {
    int n = static_cast<int>(subset.size());
    Fingerprint fp = K.order_fingerprint(subset);
    for (auto [o, c] : fp)
        if (o == n) return GroupName::C(n); // cyclic: an element of full order
    if (n % 4 == 0 && n >= 8 && fp == bin_dihedral_fp(n / 4)) return GroupName::D(n / 4);
    if (n == 24 && fp == binpoly_fp(GroupName::Kind::T)) return GroupName::T();
    if (n == 48 && fp == binpoly_fp(GroupName::Kind::O)) return GroupName::O();
    if (n == 120 && fp == binpoly_fp(GroupName::Kind::I)) return GroupName::I();
    // D(1) = <j> is cyclic of order 4 and is caught by the cyclic case.
    return GroupName::custom();
}

std::vector<NamedSubgroup> sgroup_normal_subgroups(const SGroup& K) {
    std::vector<NamedSubgroup> out;
    for (auto& idx : K.normal_subgroup_index_sets()) {
        GroupName name = identify_subgroup(K, idx);
        out.push_back({std::move(idx), name});
    }
    return out;
}

std::string QuotientTag::str() const {
    switch (kind) {
        case Kind::Trivial: return "1";
        case Kind::Cyclic: return "C" + std::to_string(k);
        case Kind::BinDihedral: return "Dbin" + std::to_string(k);
        case Kind::Dihedral: return "Dih" + std::to_string(k);
        case Kind::Sym3: return "Sym3";
        case Kind::Alt4: return "Alt4";
        case Kind::Sym4: return "Sym4";
        case Kind::Alt5: return "Alt5";
        case Kind::BinTet: return "BinT";
        case Kind::BinOct: return "BinO";
        case Kind::BinIco: return "BinI";
    }
    return "?";
}

CosetStructure cosets_of(const SGroup& K, const std::vector<int>& H) {
    if (!K.is_normal(H)) throw InvalidAutomorphism("cosets_of: H is not normal in K");
    CosetStructure cs;
    cs.elt2coset.assign(K.order(), -1);
    for (int e = 0; e < K.order(); ++e) {
        if (cs.elt2coset[e] >= 0) continue;
        std::vector<int> coset;
        for (int h : H) coset.push_back(K.mul(h, e));
        std::sort(coset.begin(), coset.end(), [&](int a, int b) {
            return K.element_key(a) < K.element_key(b);
        });
        int c = static_cast<int>(cs.cosets.size());
        for (int x : coset) cs.elt2coset[x] = c;
        cs.rep.push_back(coset.front());
        cs.cosets.push_back(std::move(coset));
    }
    // Deterministic coset numbering: sort by representative key.
    std::vector<int> perm(cs.cosets.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return K.element_key(cs.rep[a]) < K.element_key(cs.rep[b]);
    });
    CosetStructure sorted;
    sorted.elt2coset.assign(K.order(), -1);
    std::vector<int> newpos(cs.cosets.size());
    for (size_t i = 0; i < perm.size(); ++i) newpos[perm[i]] = static_cast<int>(i);
    for (size_t i = 0; i < perm.size(); ++i) {
        sorted.cosets.push_back(cs.cosets[perm[i]]);
        sorted.rep.push_back(cs.rep[perm[i]]);
    }
    for (int e = 0; e < K.order(); ++e) sorted.elt2coset[e] = newpos[cs.elt2coset[e]];
    sorted.id_coset = sorted.elt2coset[K.id_index()];
    return sorted;
}

QuotientTag quotient_identify(const SGroup& K, const std::vector<int>& H) {
    CosetStructure cs = cosets_of(K, H);
    int q = cs.size();
    auto qmul = [&](int a, int b) { return cs.elt2coset[K.mul(cs.rep[a], cs.rep[b])]; };
    Fingerprint fp = model_fingerprint(q, cs.id_coset, qmul);

    if (q == 1) return {QuotientTag::Kind::Trivial, 0};
    bool cyclic = false;
    for (auto [o, c] : fp)
        if (o == q) cyclic = true;
    if (cyclic) {
        if (q == 4 && K.has_dihedral_shape() && static_cast<int>(H.size()) % 2 == 1)
            return {QuotientTag::Kind::BinDihedral, 1}; // paper's D_1 = C_4 convention
        return {QuotientTag::Kind::Cyclic, q};
    }
    if (q == 4) return {QuotientTag::Kind::Dihedral, 2}; // Klein = dihedral D_2
    if (q % 4 == 0 && q >= 8 && fp == bin_dihedral_fp(q / 4))
        return {QuotientTag::Kind::BinDihedral, q / 4};
    if (q % 2 == 0 && q >= 6 && fp == dihedral_fp(q / 2))
        return q == 6 ? QuotientTag{QuotientTag::Kind::Sym3, 0}
                      : QuotientTag{QuotientTag::Kind::Dihedral, q / 2};
    if (q == 12 && fp == alt4_fp()) return {QuotientTag::Kind::Alt4, 0};
    if (q == 24 && fp == sym4_fp()) return {QuotientTag::Kind::Sym4, 0};
    if (q == 60 && fp == alt5_fp()) return {QuotientTag::Kind::Alt5, 0};
    if (q == 24 && fp == binpoly_fp(GroupName::Kind::T)) return {QuotientTag::Kind::BinTet, 0};
    if (q == 48 && fp == binpoly_fp(GroupName::Kind::O)) return {QuotientTag::Kind::BinOct, 0};
    if (q == 120 && fp == binpoly_fp(GroupName::Kind::I)) return {QuotientTag::Kind::BinIco, 0};
    throw UnrecognizedQuotient("quotient_identify: no candidate matches");
}

// --- QuotAut ---------------------------------------------------------------

QuotAut::QuotAut(SGroupPtr K, std::vector<int> H, std::vector<int> table, std::string desc)
    : K_(std::move(K)), H_(std::move(H)), cs_(cosets_of(*K_, H_)), table_(std::move(table)),
      desc_(std::move(desc)) {}

QuotAut QuotAut::checked(SGroupPtr K, std::vector<int> H, std::vector<int> table,
                         std::string desc) {
    QuotAut aut(std::move(K), std::move(H), std::move(table), std::move(desc));
    const CosetStructure& cs = aut.cs_;
    int q = cs.size();
    if (static_cast<int>(aut.table_.size()) != q)
        throw InvalidAutomorphism("QuotAut: table size mismatch");
    std::vector<char> hit(q, 0);
    for (int c = 0; c < q; ++c) {
        int t = aut.table_[c];
        if (t < 0 || t >= q || hit[t]) throw InvalidAutomorphism("QuotAut: table not bijective");
        hit[t] = 1;
    }
    const SGroup& G = *aut.K_;
    auto qmul = [&](int a, int b) { return cs.elt2coset[G.mul(cs.rep[a], cs.rep[b])]; };
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (aut.table_[qmul(a, b)] != qmul(aut.table_[a], aut.table_[b]))
                throw InvalidAutomorphism("QuotAut: table is not multiplicative");
    for (int c = 0; c < q; ++c)
        if (aut.table_[aut.table_[c]] != c)
            throw InvalidAutomorphism("QuotAut: square is not the identity");
    return aut;
}

QuotAut QuotAut::identity(SGroupPtr K, std::vector<int> H) {
    CosetStructure cs = cosets_of(*K, H);
    std::vector<int> table(cs.size());
    std::iota(table.begin(), table.end(), 0);
    return checked(std::move(K), std::move(H), std::move(table), "id");
}

QuotAut QuotAut::inversion(SGroupPtr K, std::vector<int> H) {
    CosetStructure cs = cosets_of(*K, H);
    std::vector<int> table(cs.size());
    for (int c = 0; c < cs.size(); ++c) table[c] = cs.elt2coset[K->inv(cs.rep[c])];
    return checked(std::move(K), std::move(H), std::move(table), "inv");
}

QuotAut QuotAut::from_element_map(SGroupPtr K, std::vector<int> H,
                                  const std::vector<int>& images, std::string desc) {
    CosetStructure cs = cosets_of(*K, H);
    std::vector<int> table(cs.size(), -1);
    for (int e = 0; e < K->order(); ++e) {
        int c = cs.elt2coset[e];
        int t = cs.elt2coset[images[e]];
        if (table[c] < 0)
            table[c] = t;
        else if (table[c] != t)
            throw InvalidAutomorphism("QuotAut: map is not well-defined on cosets");
    }
    return checked(std::move(K), std::move(H), std::move(table), std::move(desc));
}

QuotAut QuotAut::from_table(SGroupPtr K, std::vector<int> H, std::vector<int> table,
                            std::string desc) {
    return checked(std::move(K), std::move(H), std::move(table), std::move(desc));
}

QuotAut QuotAut::psi(SGroupPtr K, std::vector<int> H, int r) {
    if (!K->has_dihedral_shape()) throw InvalidAutomorphism("psi: K must be binary dihedral");
    int m = K->dihedral_m();
    int ell = static_cast<int>(H.size());
    if ((2 * m) % ell != 0) throw InvalidAutomorphism("psi: |H| must divide 2m");
    int n = 2 * m / ell;
    // H must be the cyclic subgroup <x^n>.
    std::vector<int> hx;
    for (int t = 0; t < ell; ++t) hx.push_back(K->x_power(static_cast<long>(n) * t % (2 * m)));
    std::sort(hx.begin(), hx.end());
    std::vector<int> hs = H;
    std::sort(hs.begin(), hs.end());
    if (hx != hs) throw InvalidAutomorphism("psi: H must be <x^n>");
    long rr = ((r % n) + n) % n;
    if (std::gcd(static_cast<long>(n), rr) != 1 || (rr * rr - 1) % n != 0 ||
        (static_cast<long>(m) * (rr + 1)) % n != 0)
        throw InvalidAutomorphism("psi: (r, n) fails the automorphism conditions");
    std::vector<int> images(K->order());
    for (int e = 0; e < K->order(); ++e) {
        auto [a, b] = K->xy_decompose(e);
        long ea = (static_cast<long>(a) * r + static_cast<long>(b) * m) % (2 * m);
        int img = K->x_power(ea);
        if (b) img = K->mul(img, K->y_index());
        images[e] = img;
    }
    return from_element_map(std::move(K), std::move(H), images, "psi:" + std::to_string(r));
}

QuotAut QuotAut::rho(SGroupPtr K, std::vector<int> H, const Quat& xi) {
    Quat xin = xi.inv();
    std::vector<int> images(K->order());
    for (int e = 0; e < K->order(); ++e) {
        auto idx = K->find(xi * K->element(e) * xin);
        if (!idx) throw InvalidAutomorphism("rho: xi does not normalise K");
        images[e] = *idx;
    }
    std::vector<char> inH(K->order(), 0);
    for (int h : H) inH[h] = 1;
    for (int h : H)
        if (!inH[images[h]]) throw InvalidAutomorphism("rho: xi does not normalise H");
    return from_element_map(std::move(K), std::move(H), images, "rho:" + xi.str());
}

QuotAut QuotAut::beta(SGroupPtr K, std::vector<int> H) {
    if (K->name() != GroupName::O()) throw InvalidAutomorphism("beta: K must be O");
    auto i = K->find(quat_i()), j = K->find(quat_j()), w = K->find(quat_varpi());
    std::vector<int> tsub = K->subgroup_closure({*i, *j, *w});
    std::vector<char> inT(K->order(), 0);
    for (int t : tsub) inT[t] = 1;
    std::vector<int> images(K->order());
    for (int e = 0; e < K->order(); ++e) images[e] = inT[e] ? e : K->neg_index(e);
    return from_element_map(std::move(K), std::move(H), images, "beta");
}

QuotAut QuotAut::theta(SGroupPtr K, std::vector<int> H) {
    if (K->name() != GroupName::I()) throw InvalidAutomorphism("theta: K must be I");
    if (H.size() > 2) throw InvalidAutomorphism("theta: H must be 1 or C2");
    // Generator images: Theta(i) = -i, Theta(sigma) = -(tau + i - tau^-1 k)/2.
    CycNum tau = cyc_tau();
    Rat mhalf(-1, 2);
    Quat theta_sigma = Quat::make(mhalf * tau, mhalf * CycNum::one(20), CycNum::zero(20),
                                  mhalf * (-(tau.inv())));
    auto img_i = K->find(-quat_i());
    auto img_s = K->find(theta_sigma);
    if (!img_i || !img_s) throw InvalidAutomorphism("theta: generator images not in I");
    std::array<int, 2> gen_imgs{*img_i, *img_s};
    std::vector<int> images(K->order());
    for (int e = 0; e < K->order(); ++e) {
        int acc = K->id_index();
        for (int g : K->word(e)) acc = K->mul(acc, gen_imgs[g]);
        images[e] = acc;
    }
    // Word extension does not guarantee multiplicativity; verify it.
    for (int a = 0; a < K->order(); ++a)
        for (int b = 0; b < K->order(); ++b)
            if (images[K->mul(a, b)] != K->mul(images[a], images[b]))
                throw InvalidAutomorphism("theta: extension is not a homomorphism");
    return from_element_map(std::move(K), std::move(H), images, "theta");
}

bool QuotAut::is_identity() const {
    for (int c = 0; c < cs_.size(); ++c)
        if (table_[c] != c) return false;
    return true;
}

QuotAut QuotAut::compose_after(const QuotAut& other) const {
    if (K_ != other.K_ || H_ != other.H_)
        throw InvalidAutomorphism("compose: mismatched K or H");
    std::vector<int> table(cs_.size());
    for (int c = 0; c < cs_.size(); ++c) table[c] = table_[other.table_[c]];
    return checked(K_, H_, std::move(table), desc_ + "*" + other.desc_);
}

bool QuotAut::same_map(const QuotAut& other) const {
    return H_ == other.H_ && table_ == other.table_;
}

QuotAut aut_make(const std::string& desc, SGroupPtr K, std::vector<int> H) {
    if (desc == "id") return QuotAut::identity(std::move(K), std::move(H));
    if (desc == "inv") return QuotAut::inversion(std::move(K), std::move(H));
    if (desc == "beta") return QuotAut::beta(std::move(K), std::move(H));
    if (desc == "theta") return QuotAut::theta(std::move(K), std::move(H));
    if (desc.rfind("psi:", 0) == 0)
        return QuotAut::psi(std::move(K), std::move(H), std::stoi(desc.substr(4)));
    if (desc.rfind("rho:", 0) == 0)
        return QuotAut::rho(std::move(K), std::move(H), quat_const(desc.substr(4)));
    throw InvalidDescriptor("aut_make: unknown automorphism '" + desc + "'");
}

} // namespace qrg
