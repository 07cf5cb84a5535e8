#include "qrg/descriptor.hpp"

#include <sstream>

#include "qrg/conj.hpp"

namespace qrg {

namespace {

std::vector<std::string> split_args(const std::string& body) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : body) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

GroupName parse_sgroup_name(const std::string& s) {
    if (s == "T") return GroupName::T();
    if (s == "O") return GroupName::O();
    if (s == "I") return GroupName::I();
    if (s.rfind("C:", 0) == 0) return GroupName::C(std::stoi(s.substr(2)));
    if (s.rfind("D:", 0) == 0) return GroupName::D(std::stoi(s.substr(2)));
    throw InvalidDescriptor("unknown group '" + s + "'");
}

} // namespace

GroupDesc GroupDesc::parse(const std::string& text) {
    std::string s = strip(text);
    GroupDesc d;
    auto call = [&](const std::string& head) -> std::optional<std::vector<std::string>> {
        if (s.rfind(head + "(", 0) != 0 || s.back() != ')') return std::nullopt;
        std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
        std::vector<std::string> args = split_args(body);
        for (std::string& a : args) a = strip(a);
        return args;
    };

    if (auto args = call("G")) {
        if (args->size() != 3) throw InvalidDescriptor("G(K,H,phi) needs three arguments");
        d.kind = Kind::GKH;
        d.K = parse_sgroup_name((*args)[0]);
        d.Hname = (*args)[1];
        d.phi = (*args)[2];
        return d;
    }
    for (auto [head, f, box] : {std::tuple<const char*, int, bool>{"Cbox", 1, true},
                                {"Cbox2", 2, true},
                                {"Ccirc", 1, false},
                                {"Ccirc2", 2, false},
                                {"Ccirc3", 3, false}}) {
        if (auto args = call(head)) {
            if (args->size() != 2) throw InvalidDescriptor(std::string(head) + "(d,K)");
            d.kind = box ? Kind::Box : Kind::Circ;
            d.d = std::stoi((*args)[0]);
            d.f = f;
            d.K = parse_sgroup_name((*args)[1]);
            return d;
        }
    }
    if (auto args = call("ST")) {
        d.kind = Kind::ST;
        if (args->size() == 1) {
            d.st_primitive = std::stoi((*args)[0]);
            if (d.st_primitive != 12 && d.st_primitive != 13 && d.st_primitive != 22)
                throw InvalidDescriptor("ST(n) supports n in {12, 13, 22}");
            return d;
        }
        if (args->size() == 3 && (*args)[2] == "2") {
            d.st_m = std::stoi((*args)[0]);
            d.st_p = std::stoi((*args)[1]);
            return d;
        }
        throw InvalidDescriptor("ST takes (12|13|22) or (m,p,2)");
    }
    d.kind = Kind::SG;
    d.K = parse_sgroup_name(s);
    return d;
}

std::string GroupDesc::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::GKH:
            os << "G(" << K.str() << ',' << Hname << ',' << phi << ')';
            break;
        case Kind::Box:
            os << (f == 2 ? "Cbox2(" : "Cbox(") << d << ',' << K.str() << ')';
            break;
        case Kind::Circ:
            os << "Ccirc" << (f == 1 ? "" : std::to_string(f)) << '(' << d << ',' << K.str()
               << ')';
            break;
        case Kind::ST:
            if (st_primitive)
                os << "ST(" << st_primitive << ')';
            else
                os << "ST(" << st_m << ',' << st_p << ",2)";
            break;
        case Kind::SG:
            os << K.str();
            break;
    }
    return os.str();
}

BuiltGroup::BuiltGroup(GroupDesc desc) : desc_(std::move(desc)) {
    switch (desc_.kind) {
        case GroupDesc::Kind::GKH: {
            if (desc_.K.kind == GroupName::Kind::C) {
                // Cyclic family; the H descriptor must be cyclic as well.
                if (desc_.Hname.rfind("C:", 0) == 0 && desc_.phi == "inv") {
                    gkh_ = gkh_cyclic(desc_.K.m, std::stoi(desc_.Hname.substr(2)));
                    return;
                }
                if (desc_.Hname == "1" && desc_.phi == "inv") {
                    gkh_ = gkh_cyclic(desc_.K.m, 1);
                    return;
                }
            }
            SGroupPtr K = sgroup(desc_.K);
            std::vector<int> H = subgroup_named_inside(*K, desc_.Hname);
            QuotAut phi = aut_make(desc_.phi, K, std::move(H));
            gkh_ = GKHGroup::build(std::move(phi), desc_.str(), /*standard=*/true);
            return;
        }
        case GroupDesc::Kind::Box:
            ext_ = ExtPolyGroup::boxdot(desc_.d, desc_.f, desc_.K);
            return;
        case GroupDesc::Kind::Circ:
            ext_ = ExtPolyGroup::circ(desc_.d, desc_.f, desc_.K);
            return;
        case GroupDesc::Kind::ST:
            st_ = desc_.st_primitive
                      ? st_build(STDesc{desc_.st_primitive, 0, 0})
                      : st_build(STDesc::imprimitive(desc_.st_m, desc_.st_p));
            return;
        case GroupDesc::Kind::SG:
            sg_ = sgroup(desc_.K);
            return;
    }
}

const GKHGroup& BuiltGroup::gkh() const {
    if (!gkh_) throw InvalidParams("BuiltGroup: not a G(K,H,phi) group");
    return *gkh_;
}

const ExtPolyGroup& BuiltGroup::ext() const {
    if (!ext_) throw InvalidParams("BuiltGroup: not an extended polyhedral group");
    return *ext_;
}

const MatGroupSet& BuiltGroup::st() const {
    if (!st_) throw InvalidParams("BuiltGroup: not a Shephard-Todd group");
    return *st_;
}

int BuiltGroup::order() const {
    if (gkh_) return gkh_->order();
    if (ext_) return ext_->order();
    if (st_) return st_->order();
    return sg_->order();
}

std::vector<QMat2> BuiltGroup::generators() const {
    if (gkh_) return gkh_->generators_mat();
    if (ext_) return ext_->generators_mat();
    if (st_) {
        // For closures keep a small generating set: the stored elements are
        // already a group, so reuse the canonical generators of st_build.
        throw InvalidParams("BuiltGroup: ST groups expose no generator list");
    }
    throw InvalidParams("BuiltGroup: no matrix generators");
}

std::vector<QMat2> BuiltGroup::all_elements() const {
    if (gkh_) return gkh_->materialize_all();
    if (ext_) return ext_->materialize_all();
    if (st_) return st_->elements();
    throw InvalidParams("BuiltGroup: no matrix elements");
}

MatGroupSet BuiltGroup::matgroup() const {
    if (st_) return *st_;
    return MatGroupSet::from_elements(all_elements());
}

int BuiltGroup::reflection_count() const {
    if (gkh_) return static_cast<int>(gkh_->reflections_param().size());
    if (ext_) return static_cast<int>(ext_->reflections_param().size());
    if (st_) return static_cast<int>(st_->reflection_indices().size());
    throw InvalidParams("BuiltGroup: no reflections");
}

std::vector<int> BuiltGroup::reflection_orders() const {
    if (gkh_) return gkh_->reflection_orders_param();
    return matgroup().reflection_order_multiset();
}

bool BuiltGroup::is_reflection_group() const {
    if (gkh_) return gkh_->is_reflection_group();
    if (ext_) return ext_->reflections_generate();
    if (st_) return st_->generated_by(st_->reflection_indices());
    throw InvalidParams("BuiltGroup: not a matrix group");
}

std::optional<int> BuiltGroup::h_size() const {
    if (gkh_) return static_cast<int>(gkh_->H().size());
    return std::nullopt;
}

BuiltGroup build_group(const GroupDesc& desc) { return BuiltGroup(desc); }
BuiltGroup build_group(const std::string& descriptor) {
    return BuiltGroup(GroupDesc::parse(descriptor));
}

} // namespace qrg
