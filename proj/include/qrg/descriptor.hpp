#pragma once

/// Group descriptor grammar shared by the CLI and the catalog:
///   G(K,H,phi)  with K in C:m | D:m | T | O | I,
///               H in 1 | C:l | D:l | X^n | T,
///               phi in id | inv | psi:r | rho:<const> | beta | theta
///   Cbox(d,K), Cbox2(d,O), Ccirc(d,K), Ccirc2(d,O), Ccirc3(d,T)
///   ST(m,p,2), ST(12), ST(13), ST(22)
///   bare subgroups C:m | D:m | T | O | I

#include <optional>
#include <string>
#include <vector>

#include "qrg/extpoly.hpp"
#include "qrg/gkh.hpp"

namespace qrg {

struct GroupDesc {
    enum class Kind { GKH, Box, Circ, ST, SG };
    Kind kind = Kind::GKH;

    // GKH
    GroupName K;
    std::string Hname;
    std::string phi;

    // Box / Circ
    int d = 0;
    int f = 1;

    // ST: st_primitive in {12, 13, 22}, or st_m/st_p for ST(m,p,2)
    int st_primitive = 0;
    int st_m = 0, st_p = 0;

    static GroupDesc parse(const std::string& text);
    std::string str() const;
};

class BuiltGroup {
public:
    explicit BuiltGroup(GroupDesc desc);

    const GroupDesc& desc() const { return desc_; }
    const GKHGroup& gkh() const;
    const ExtPolyGroup& ext() const;
    const MatGroupSet& st() const;
    bool is_gkh() const { return gkh_.has_value(); }
    bool is_ext() const { return ext_.has_value(); }
    bool is_st() const { return st_.has_value(); }

    int order() const;
    std::vector<QMat2> generators() const;
    std::vector<QMat2> all_elements() const;
    MatGroupSet matgroup() const;
    int reflection_count() const;
    std::vector<int> reflection_orders() const; // sorted multiset
    bool is_reflection_group() const;
    /// |H| of the G(K,H,phi) structure; nullopt for Box/ST groups.
    std::optional<int> h_size() const;

private:
    GroupDesc desc_;
    std::optional<GKHGroup> gkh_;
    std::optional<ExtPolyGroup> ext_;
    std::optional<MatGroupSet> st_;
    SGroupPtr sg_; // bare subgroup descriptors
};

BuiltGroup build_group(const GroupDesc& desc);
BuiltGroup build_group(const std::string& descriptor);

} // namespace qrg
