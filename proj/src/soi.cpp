#include "qrg/soi.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qrg/kernels.hpp"

namespace qrg {

namespace {

// Leading-coefficient-1 normal form of the spanned line.
QVec2 normalized_span(const QVec2& u) {
    if (!u[0].is_zero()) {
        Quat inv = u[0].inv();
        return {Quat::one(u[0].conductor()), inv * u[1]};
    }
    if (u[1].is_zero()) throw InvalidParams("Line: zero spanning vector");
    return {Quat::zero(u[1].conductor()), Quat::one(u[1].conductor())};
}

} // namespace

std::string Line::canonical_key() const {
    QVec2 n = normalized_span(u);
    int c = std::lcm(n[0].conductor(), n[1].conductor());
    std::string out;
    n[0].promoted(c).append_key(out);
    n[1].promoted(c).append_key(out);
    return std::to_string(c) + ':' + out;
}

bool line_contains(const Line& line, const QVec2& v) {
    const QVec2& u = line.u;
    if (!u[0].is_zero()) {
        Quat lambda = v[0] * u[0].inv();
        return lambda * u[1] == v[1];
    }
    if (u[1].is_zero()) throw InvalidParams("line_contains: zero spanning vector");
    if (!v[0].is_zero()) return false;
    return true; // u = (0, *) spans {(0, q)}
}

std::string SoI::canonical_key() const {
    std::string a = first.canonical_key(), b = second.canonical_key();
    if (b < a) std::swap(a, b);
    return a + "||" + b;
}

std::string SoI::str() const {
    auto vec_str = [](const QVec2& v) {
        return "(" + v[0].str() + "," + v[1].str() + ")";
    };
    return "<<" + vec_str(first.u) + "," + vec_str(second.u) + ">>";
}

SoI soi_plus_minus() {
    Quat one = Quat::one();
    return {Line{{one, one}}, Line{{one, -one}}};
}

SoI soi_theta(const Quat& theta) {
    if (theta.is_zero()) throw InvalidParams("soi_theta: theta must be nonzero");
    Quat one = Quat::one(theta.conductor());
    return {Line{{one, theta}}, Line{{theta, one}}};
}

bool soi_preserved(const std::vector<QMat2>& mats, const SoI& s) {
    const QVec2& u = s.first.u;
    const QVec2& v = s.second.u;
    return all_of_elements(mats.size(), [&](std::size_t i) {
        const QMat2& g = mats[i];
        QVec2 ug = u * g;
        QVec2 vg = v * g;
        bool u1 = line_contains(s.first, ug), u2 = line_contains(s.second, ug);
        bool v1 = line_contains(s.first, vg), v2 = line_contains(s.second, vg);
        if (!(u1 || u2) || !(v1 || v2)) return false;
        // The images must hit both lines (a permutation of the pair).
        return (u1 && v2) || (u2 && v1);
    });
}

bool soi_preserved(const BuiltGroup& g, const SoI& s, SoiMode mode) {
    std::vector<QMat2> mats = (mode == SoiMode::Generators && !g.is_st()) ? g.generators()
                                                                          : g.all_elements();
    return soi_preserved(mats, s);
}

SoI SoiSystem::instantiate(const Rat& sample) const {
    if (direction == "1") return soi_plus_minus();
    Rat q = (kind == Kind::Family) ? sample : coeff;
    if (q.is_zero()) throw InvalidParams("SoiSystem: zero coefficient");
    Quat dir = quat_const(direction);
    return soi_theta(q * dir);
}

std::string SoiSystem::str() const {
    if (direction == "1") return "(1,1)";
    std::string c;
    if (kind == Kind::Family)
        c = direction == "delta" ? "r*delta" : ("a*" + direction);
    else
        c = (coeff == Rat(1)) ? direction : coeff.str() + "*" + direction;
    return "(1," + c + ")";
}

namespace {

void classify_dihedral(int m, int ell, int r, SoiClassification& out) {
    if (ell > 2) return; // lemma gate: |H| <= 2
    auto add_concrete = [&](const std::string& dir, Rat coeff = Rat(1)) {
        out.systems.push_back({SoiSystem::Kind::Concrete, dir, coeff});
    };
    auto add_family = [&](const std::string& dir) {
        out.systems.push_back({SoiSystem::Kind::Family, dir, Rat(1)});
    };
    // (i) <<(1,1),(1,-1)>> iff r = 1.
    if (r == 1) add_concrete("1");
    // (ii) (1, a i): r = 1; family when ell = 1, only a = +-1 when ell = 2.
    if (r == 1) {
        if (ell == 1)
            add_family("i");
        else
            add_concrete("i");
    }
    // (iii) (1, j).
    bool j_sys = (ell == 1 && ((m % 4 == 2 && r == m - 1) || (m == 1 && r == 1))) ||
                 (ell == 2 && m <= 2 && r == 1);
    if (j_sys) add_concrete("j");
    // (iv) (1, c k): full family only for m = ell = 1.
    if (m == 1 && ell == 1 && r == 1) {
        add_family("k");
    } else {
        bool k_sys = (ell == 1 && m >= 2 && m % 4 == 2 && r == m - 1) ||
                     (ell == 2 && m <= 2 && r == 1);
        if (k_sys) add_concrete("k");
    }
}

} // namespace

SoiClassification soi_classify(const GroupDesc& desc) {
    SoiClassification out;
    out.group = desc.str();
    if (desc.kind == GroupDesc::Kind::Box) {
        // Extended groups: <<(1,j)>>/<<(1,k)>> exactly for the d = 4 groups.
        bool has = desc.d == 4 && ((desc.K == GroupName::O() && (desc.f == 1 || desc.f == 2)) ||
                                   (desc.K == GroupName::I() && desc.f == 1));
        if (has) {
            out.systems.push_back({SoiSystem::Kind::Concrete, "j", Rat(1)});
            out.systems.push_back({SoiSystem::Kind::Concrete, "k", Rat(1)});
        }
        return out;
    }
    if (desc.kind != GroupDesc::Kind::GKH) throw UnknownFamily("soi_classify: " + desc.str());

    if (desc.K.kind == GroupName::Kind::D) {
        if (desc.phi.rfind("psi:", 0) != 0) throw UnknownFamily("soi_classify: " + desc.str());
        int r = std::stoi(desc.phi.substr(4));
        int ell = 0;
        if (desc.Hname == "1")
            ell = 1;
        else if (desc.Hname.rfind("C:", 0) == 0)
            ell = std::stoi(desc.Hname.substr(2));
        else
            return out; // non-cyclic H: |H| > 2, no extra systems
        classify_dihedral(desc.K.m, ell, r, out);
        return out;
    }
    if (desc.K.kind == GroupName::Kind::C) {
        // Complex-type cyclic family: out of Table 3/4 scope.
        throw UnknownFamily("soi_classify: cyclic family is of complex type");
    }

    // Polyhedral families (Table 2 rows).
    const std::string& H = desc.Hname;
    const std::string& phi = desc.phi;
    bool delta_phi = phi == "rho:delta";
    if (desc.K == GroupName::T()) {
        if (H == "C:2" && delta_phi)
            out.systems.push_back({SoiSystem::Kind::Concrete, "delta", Rat(1)});
        else if (H == "1" && delta_phi)
            out.systems.push_back({SoiSystem::Kind::Family, "delta", Rat(1)});
        return out;
    }
    if (desc.K == GroupName::O()) {
        if ((H == "C:2" && phi == "id") || (H == "1" && phi == "beta"))
            out.systems.push_back({SoiSystem::Kind::Concrete, "1", Rat(1)});
        else if (H == "1" && delta_phi)
            out.systems.push_back({SoiSystem::Kind::Family, "delta", Rat(1)});
        return out;
    }
    if (desc.K == GroupName::I()) {
        if (H == "C:2" && phi == "id")
            out.systems.push_back({SoiSystem::Kind::Concrete, "1", Rat(1)});
        else if (H == "1" && phi == "rho:j")
            out.systems.push_back({SoiSystem::Kind::Family, "j", Rat(1)});
        return out;
    }
    throw UnknownFamily("soi_classify: " + desc.str());
}

std::vector<FoundSoI> soi_search_structured(const BuiltGroup& g, const std::vector<Rat>& samples,
                                            SoiMode mode) {
    std::vector<QMat2> mats = (mode == SoiMode::Generators && !g.is_st()) ? g.generators()
                                                                          : g.all_elements();
    std::optional<int> h = g.h_size();
    bool unit_only = h.has_value() && *h == 2;

    std::vector<std::pair<std::string, SoI>> candidates;
    candidates.emplace_back("(1,1)", soi_plus_minus());
    const char* dirs[] = {"i", "j", "k", "delta"};
    for (const char* dir : dirs) {
        Quat dq = quat_const(dir);
        if (unit_only) {
            candidates.emplace_back(std::string("(1,") + dir + ")", soi_theta(dq));
            continue;
        }
        for (const Rat& q : samples) {
            if (q.is_zero()) continue;
            std::string label = "(1," + (q == Rat(1) ? std::string(dir) : q.str() + "*" + dir) + ")";
            candidates.emplace_back(label, soi_theta(q * dq));
        }
    }

    std::vector<FoundSoI> found;
    std::set<std::string> seen;
    for (auto& [label, s] : candidates) {
        if (!seen.insert(s.canonical_key()).second) continue;
        if (soi_preserved(mats, s)) found.push_back({s, label});
    }
    return found;
}

int soi_random_sweep_hits(const BuiltGroup& g, const SoiClassification& cls, int trials,
                          unsigned seed) {
    std::vector<QMat2> gens = g.generators();
    std::set<std::string> concrete_keys;
    concrete_keys.insert(SoI{Line{{Quat::one(), Quat::zero()}}, Line{{Quat::zero(), Quat::one()}}}
                             .canonical_key());
    std::set<std::string> family_dirs;
    for (const SoiSystem& sys : cls.systems) {
        if (sys.kind == SoiSystem::Kind::Concrete)
            concrete_keys.insert(sys.instantiate().canonical_key());
        else
            family_dirs.insert(sys.direction);
    }
    // The m = 1 binary dihedral groups admit mixed theta = a i + c k systems
    // beyond the tabulated directions (the zeta_2m constraint is vacuous when
    // zeta_2 = -1): the whole span for H = 1, the unit circle for |H| = 2.
    const GroupDesc& desc = g.desc();
    bool m1_dihedral = desc.kind == GroupDesc::Kind::GKH &&
                       desc.K == GroupName::D(1) && desc.phi == "psi:1";
    bool m1_trivial_h = m1_dihedral && desc.Hname == "1";
    bool m1_c2 = m1_dihedral && desc.Hname == "C:2";

    // theta = a i + b j + c k lies in a classified one-parameter family iff
    // the complementary coordinates vanish (delta-direction: c = 0, b = -a).
    auto in_family = [&](const Rat& a, const Rat& b, const Rat& c) {
        if (family_dirs.count("i") && b.is_zero() && c.is_zero()) return true;
        if (family_dirs.count("j") && a.is_zero() && c.is_zero()) return true;
        if (family_dirs.count("k") && a.is_zero() && b.is_zero()) return true;
        if (family_dirs.count("delta") && c.is_zero() && b == -a) return true;
        if (m1_trivial_h && b.is_zero()) return true;
        if (m1_c2 && b.is_zero() && a * a + c * c == Rat(1)) return true;
        return false;
    };

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        Rat a(num(rng), den(rng));
        Rat b(num(rng), den(rng));
        Rat c(num(rng), den(rng));
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        if (in_family(a, b, c)) continue;
        Quat theta = Quat::make(Rat(0), a, b, c);
        SoI s = soi_theta(theta);
        if (concrete_keys.count(s.canonical_key())) continue;
        if (soi_preserved(gens, s)) ++hits;
    }
    return hits;
}

} // namespace qrg
