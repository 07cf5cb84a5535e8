#pragma once

/// 2x2 quaternionic matrices acting on row vectors from the right, and the
/// definition-driven reflection test (fixed space of dimension 1).

#include <array>
#include <optional>
#include <string>

#include "qrg/quat.hpp"

namespace qrg {

using QVec2 = std::array<Quat, 2>;

class QMat2 {
    std::array<Quat, 4> e_; // row-major: [ e0 e1 ; e2 e3 ]

public:
    QMat2() : e_{Quat::zero(), Quat::zero(), Quat::zero(), Quat::zero()} {}
    QMat2(Quat a, Quat b, Quat c, Quat d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static QMat2 identity(int n = 4);
    static QMat2 diag(const Quat& a, const Quat& d);
    static QMat2 antidiag(const Quat& b, const Quat& c); // [[0,b],[c,0]]
    static QMat2 swap_s(int n = 4);                      // [[0,1],[1,0]]

    const Quat& at(int r, int c) const { return e_[r * 2 + c]; }
    Quat& at(int r, int c) { return e_[r * 2 + c]; }

    int conductor() const;
    QMat2 promoted(int n) const;

    QMat2 conjtranspose() const;
    bool is_unitary() const;
    QMat2 inverse_of_unitary() const; // NotUnitary if not unitary
    bool is_identity() const;
    bool is_complex_type() const; // all entries have w = 0
    bool is_diagonal() const;
    bool is_antidiagonal() const;

    int order(int cap = kDefaultOrderCap) const;

    friend QMat2 operator*(const QMat2& a, const QMat2& b);
    friend QMat2 operator*(const CycNum& c, const QMat2& a); // central scalars only
    friend bool operator==(const QMat2& a, const QMat2& b);
    friend bool operator!=(const QMat2& a, const QMat2& b) { return !(a == b); }

    QMat2 scaled(const CycNum& c) const; // entrywise left multiplication
    QMat2 negated() const;

    /// Row vector action v -> v A.
    friend QVec2 operator*(const QVec2& v, const QMat2& a);

    std::string str() const; // row-major [a,b;c,d] of Quat serializations
    void append_key(std::string& out) const;
    uint64_t hash() const;
};

struct ReflectionInfo {
    bool is_reflection = false;
    int order = 0;   // set only for reflections
    QVec2 root{};    // unnormalized; spans the orthogonal complement of Fix
};

/// Dimension of the fixed space {v : vA = v} as a left H-subspace (0, 1, 2).
int fixed_space_dim(const QMat2& a);

/// Classifies a finite-order unitary as a reflection (fixed space of
/// dimension one) and reports its order and an unnormalized root.
/// check_unitary guards the precondition; NotFiniteOrder past order_cap.
ReflectionInfo quat_is_reflection(const QMat2& a, int order_cap = kDefaultOrderCap,
                                  bool check_unitary = true);

/// Hermitian inner product (u|v) = sum u_h conj(v_h).
Quat inner(const QVec2& u, const QVec2& v);

} // namespace qrg
