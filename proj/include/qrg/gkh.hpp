#pragma once

/// The imprimitive groups G(K,H,phi): diagonal pairs (xi, eta) with
/// phi(H xi) = H eta, plus their swaps. Elements are enumerated directly
/// from the equaliser definition and stored as index pairs into K, so all
/// group arithmetic is table lookups; exact matrices are materialized for
/// the reflection detector and for conjugation.

#include <string>
#include <unordered_set>
#include <vector>

#include "qrg/matgroup.hpp"
#include "qrg/sgroup.hpp"

namespace qrg {

struct GElem {
    bool anti = false; // diag(a, b) or [[0, a],[b, 0]]
    uint16_t a = 0;
    uint16_t b = 0;

    uint32_t pack() const {
        return (anti ? 0x80000000u : 0u) | (static_cast<uint32_t>(a) << 15) | b;
    }
    friend bool operator==(const GElem&, const GElem&) = default;
};

class GKHGroup {
public:
    static GKHGroup build(QuotAut phi, std::string descriptor = "", bool standard = false);

    const SGroup& K() const { return phi_.K(); }
    const std::vector<int>& H() const { return phi_.H(); }
    const GroupName& Hname() const { return Hname_; }
    const QuotAut& phi() const { return phi_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<GElem>& elements() const { return elems_; }
    const std::string& descriptor() const { return descriptor_; }
    bool standard_copy() const { return standard_; }

    bool contains(const GElem& e) const { return set_.count(e.pack()) > 0; }
    GElem mul(const GElem& x, const GElem& y) const;
    int element_order(const GElem& e) const;

    QMat2 materialize(const GElem& e) const;
    std::vector<QMat2> materialize_all() const;
    MatGroupSet as_matgroup() const;

    /// s, diag(h,1) for minimal generators h of H, and diag(xi, eta) for the
    /// generators xi of K with eta the canonical representative of phi(H xi).
    std::vector<GElem> generators_param() const;
    std::vector<QMat2> generators_mat() const;
    const std::vector<int>& h_generators() const { return h_gens_; }

    /// L_phi = { xi in K : phi(H xi) = H xi^-1 } as K-indices.
    std::vector<int> lset() const;
    /// Lemma criterion: <L_phi> = K.
    bool is_reflection_group() const;

    /// The proof's parametric reflections: diag(h,1), diag(1,h) for h in
    /// H \ 1 and antidiag(xi^-1, xi) for xi in L_phi.
    std::vector<GElem> reflections_param() const;
    std::vector<int> reflection_orders_param() const; // sorted multiset
    /// Reflections accepted by quat_is_reflection over materialized elements.
    std::vector<int> reflection_indices_detector(int order_cap = kDefaultOrderCap) const;
    int reflection_count_detector(int order_cap = kDefaultOrderCap) const;
    bool reflections_generate() const; // closure of parametric reflections

    /// e*g stays inside for every element e and generator g.
    bool closure_check() const;
    /// BFS closure from the parametric generators reproduces the element set.
    bool generator_closure_crosscheck() const;

private:
    QuotAut phi_;
    GroupName Hname_;
    std::vector<int> h_gens_;
    std::vector<GElem> elems_;
    std::unordered_set<uint32_t> set_;
    std::string descriptor_;
    bool standard_ = false;

    explicit GKHGroup(QuotAut phi) : phi_(std::move(phi)) {}
};

// Spec-level constructors and operations.

GKHGroup gkh_build(SGroupPtr K, std::vector<int> H, const std::string& phi_desc);
/// Standard copy G(<zeta_2m, j>, <x^n>, psi_r) with 2m = n*ell.
GKHGroup gkh_standard_dihedral(int m, int ell, int r);
/// K in {T, O, I}, H named one of 1 | C:2 | D:2 | T | D:m..., phi by descriptor.
GKHGroup gkh_polyhedral(const GroupName& K, const std::string& Hname, const std::string& phi_desc);
/// Cyclic family G(C_m, C_ell, inversion).
GKHGroup gkh_cyclic(int m, int ell);
/// Theorem B standard copies: G(D_m, D_m, 1) and G(D_2m, D_m, 1).
GKHGroup theoremB_build(int m, bool doubled);

/// Subgroup of K named by "1", "C:l", "D:l", "T", "X^n" (dihedral <x^n>).
std::vector<int> subgroup_named_inside(const SGroup& K, const std::string& name);

/// Theorem A: admissible r for K = D_m, H = C_ell (2m = n*ell), by the gcd
/// formula.
std::vector<int> valid_r_values(int m, int ell);
/// Independent oracle: abstract x^a y^b model of D_m; enumerates the valid
/// involutive psi_r and keeps those whose L-set generates, normalized to the
/// theorem's range.
std::vector<int> valid_r_values_bruteforce(int m, int ell);

} // namespace qrg
