#pragma once

/// The complex-type central products C_d o_f K and the extended binary
/// polyhedral groups C_d [.]_f K = (C_d o_f K)# <s>, s = [[0,j],[-j,0]].
/// Elements are pairs (zeta_d^a, xi) from the pullback, stored as small
/// integers modulo the kernel identification (a, xi) ~ (a + d/2, -xi),
/// with an s-bit for the extension.

#include <string>
#include <unordered_set>
#include <vector>

#include "qrg/matgroup.hpp"
#include "qrg/sgroup.hpp"

namespace qrg {

/// Matrix of L(alpha) R(xi) : h -> alpha h conj(xi) on the basis {1, j} of H
/// as a C-space, as a complex-type quaternionic matrix. Multiplicative with
/// kernel {+-(1,1)}. NotComplex / NotUnit guard the arguments.
QMat2 theta_embed(const Quat& alpha, const Quat& xi);

/// s g# s^-1 for complex-type g: equals det(g)^-1 g#.
QMat2 s_matrix(int conductor = 4);

struct EElem {
    uint16_t a = 0; // power of zeta_d
    uint16_t k = 0; // index into K
    uint8_t s = 0;

    uint32_t pack() const {
        return (static_cast<uint32_t>(a) << 16) | (static_cast<uint32_t>(k) << 1) | s;
    }
    friend bool operator==(const EElem&, const EElem&) = default;
};

class ExtPolyGroup {
public:
    /// The complex-type group C_d o_f K (f = |K/H| in {1,2,3}, f | d, d even).
    static ExtPolyGroup circ(int d, int f, const GroupName& K);
    /// The extension by s; f in {1,2} only (InvalidParams otherwise).
    static ExtPolyGroup boxdot(int d, int f, const GroupName& K);

    int d() const { return d_; }
    int f() const { return f_; }
    const GroupName& Kname() const { return Kname_; }
    const SGroup& K() const { return *K_; }
    bool is_boxdot() const { return boxdot_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<EElem>& elements() const { return elems_; }
    std::string descriptor() const;

    EElem canon(int a, int k, int s) const;
    bool contains(const EElem& e) const { return set_.count(e.pack()) > 0; }
    EElem mul(const EElem& x, const EElem& y) const;

    QMat2 materialize(const EElem& e) const;
    std::vector<QMat2> materialize_all() const;
    MatGroupSet as_matgroup() const;
    std::vector<EElem> generators_param() const;
    std::vector<QMat2> generators_mat() const;

    /// Reflections from the parameter criteria: theta(alpha, xi) is a
    /// reflection iff trace(xi) = alpha + alpha^-1 (and it is not the
    /// identity); theta(alpha, xi) s is one iff xi = +-1.
    std::vector<EElem> reflections_param() const;
    bool reflections_generate() const;

    /// Does conjugation by s stabilize the circ part (Lemma criterion)?
    bool s_normalizes_circ() const;

    bool closure_check() const;

private:
    int d_ = 2, f_ = 1;
    GroupName Kname_;
    SGroupPtr K_;
    std::vector<int> H_;       // kernel of psi (f = |K/H|)
    int xf_ = 0;               // psi(zeta_d) = H * xf
    std::vector<int> coset_of_; // K-index -> t with elt in H xf^t
    bool boxdot_ = false;
    std::vector<EElem> elems_;
    std::unordered_set<uint32_t> set_;

    static ExtPolyGroup build(int d, int f, const GroupName& K, bool boxdot);
};

/// Reflection-generation decided from the built group (param-space
/// reflections plus subgroup closure).
bool extpoly_is_reflection_group(int d, int f, const GroupName& K);
/// The theorem's divisibility conditions (the independent route):
/// boxdot T: 6 | d; boxdot O: 4 | d; boxdot_2 O: 4 | d and 16 does not
/// divide d; boxdot I: 4 | d or 6 | d or 10 | d.
bool extpoly_theorem_predicate(int d, int f, const GroupName& K);

/// Complexification A = A1 + A2 j -> [[A1, A2], [-conj A2, conj A1]].
struct CMat4 {
    std::array<CycNum, 16> e; // row-major 4x4

    static CMat4 identity(int n = 1);
    friend CMat4 operator*(const CMat4& x, const CMat4& y);
    friend bool operator==(const CMat4& x, const CMat4& y);
};

CMat4 complexify(const QMat2& a);

} // namespace qrg
