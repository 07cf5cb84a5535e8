#pragma once

/// Conjugacy machinery: the witness matrices R_{r,theta} and T held
/// unnormalized next to an exact scalar (W conj(W)^T = c I, so conjugation
/// is W g conj(W)^T / c), Shephard-Todd constructions, and the per-theorem
/// verification chains.

#include <optional>
#include <string>
#include <vector>

#include "qrg/gkh.hpp"
#include "qrg/matgroup.hpp"

namespace qrg {

struct Witness {
    std::string desc;
    QMat2 mat;  // unnormalized
    CycNum csq; // mat * conjtranspose(mat) = csq * I, csq totally real

    QMat2 apply(const QMat2& g) const;
};

/// R_{r,theta} stored as [[1, r theta],[-r theta, -1]] with csq = 1 + r^2;
/// requires theta^2 = -1 (NotInvolutiveWitness).
Witness witness_R(const Rat& r, const Quat& theta);
/// T stored as [[1,1],[1,-1]] with csq = 2.
Witness witness_T();
/// M = [[-1+k, -sqrt2 k],[1+k, sqrt2]]/2, unitary (entries in Q(zeta_8)).
Witness witness_M_primST();
Witness witness_diag(const Quat& a, const Quat& b);
/// Verifies W conj(W)^T = c I with c real; NotInvolutiveWitness otherwise.
Witness witness_custom(QMat2 mat, std::string desc);

MatGroupSet conjugate_group(const MatGroupSet& g, const Witness& w);
MatGroupSet conjugate_group(const MatGroupSet& g, const std::vector<Witness>& chain);
bool groups_equal(const MatGroupSet& a, const MatGroupSet& b);

struct STDesc {
    int primitive = 0; // 12, 13 or 22; 0 for the imprimitive series
    int m = 0, p = 0;  // ST(m,p,2)

    static STDesc imprimitive(int m, int p) { return {0, m, p}; }
    static STDesc st12() { return {12, 0, 0}; }
    static STDesc st13() { return {13, 0, 0}; }
    static STDesc st22() { return {22, 0, 0}; }
    std::string str() const;
};

/// ST(m,p,2) by closure of the cyclic-family generators; ST(12), ST(13),
/// ST(22) by closure of the generator matrices of the conjugacy theorems.
MatGroupSet st_build(const STDesc& desc);

/// Exact solve for u with u * g = target * u over the real cyclotomic
/// subfield, certified by checking u <from> u^-1 = <to> setwise.
std::optional<Quat> solve_conjugator(const SGroup& from, const SGroup& to);

/// The diagonal part of a diagonal/antidiagonal matrix set, with the
/// antidiagonal part checked to be s times it (the equaliser shape).
struct DiagPairs {
    std::vector<std::pair<Quat, Quat>> pairs;
};
std::optional<DiagPairs> extract_diag_pairs(const MatGroupSet& s);

/// First-slot entries as a standalone group (the K of the extracted form).
SGroup pairs_to_sgroup(const DiagPairs& dp);

/// Reinterpret the pairs over a standard K: H = { xi : (xi, 1) }, phi from
/// the pair map; nullopt when some entry is not in K or the map is not a
/// valid involutive quotient automorphism.
std::optional<QuotAut> pairs_to_quotaut(const DiagPairs& dp, SGroupPtr K);

struct TheoremInstance {
    std::string params;
    std::vector<std::string> witnesses;
    bool pass = false;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    std::vector<TheoremInstance> instances;
    bool pass = true;
};

/// Tags: TO | primST(i) | primST(ii) | dihedral-cyclic | dihedral-odd |
/// boxdot | centralizer. Bounds: max_m caps the dihedral families; rs are
/// the rational samples for the normalizer checks.
TheoremReport verify_conjugacy_theorem(const std::string& tag, int max_m = 8,
                                       const std::vector<Rat>& rs = {Rat(1), Rat(1, 2), Rat(2)});

/// All theorem tags in canonical order.
std::vector<std::string> conjugacy_theorem_tags();

} // namespace qrg
