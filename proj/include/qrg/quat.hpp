#pragma once

/// Exact quaternions over cyclotomic scalars. A Quat is z + w*j with z, w in
/// Q(zeta_n) for a shared conductor n divisible by 4 (so that i = zeta_4
/// lives in the scalar field). Multiplication uses
///   (z1 + w1 j)(z2 + w2 j) = (z1 z2 - w1 conj(w2)) + (z1 w2 + w1 conj(z2)) j.

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qrg/cyclotomic.hpp"

namespace qrg {

inline constexpr int kDefaultOrderCap = 240;

class Quat {
    int n_ = 4;
    CycNum z_, w_;

public:
    Quat() : z_(CycNum::zero(4)), w_(CycNum::zero(4)) {}
    Quat(const CycNum& z, const CycNum& w);

    /// From real coordinates a0 + a1 i + a2 j + a3 k. Each coordinate must be
    /// fixed by conjugation (NotRealCoordinate otherwise).
    static Quat make(const CycNum& a0, const CycNum& a1, const CycNum& a2, const CycNum& a3);
    static Quat make(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3);

    static Quat zero(int n = 4) { return Quat(CycNum::zero(n), CycNum::zero(n)); }
    static Quat one(int n = 4) { return Quat(CycNum::one(n), CycNum::zero(n)); }
    static Quat from_complex(const CycNum& z);

    int conductor() const { return n_; }
    const CycNum& z() const { return z_; }
    const CycNum& w() const { return w_; }

    /// Coordinates in the 1, i, j, k basis (each a real CycNum).
    std::array<CycNum, 4> coords() const;

    Quat promoted(int m) const;

    bool is_zero() const { return z_.is_zero() && w_.is_zero(); }
    bool is_complex() const { return w_.is_zero(); }
    bool is_unit() const;

    Quat conj() const;
    CycNum norm() const;  // q * conj(q), totally real
    CycNum trace() const; // q + conj(q)
    Quat inv() const;     // DivisionByZero on zero
    Quat operator-() const;
    Quat pow(long e) const;

    /// Multiplicative order by iterated multiplication; NotFiniteOrder if it
    /// exceeds the cap.
    int order(int cap = kDefaultOrderCap) const;

    friend Quat operator*(const Quat& a, const Quat& b);
    friend Quat operator+(const Quat& a, const Quat& b);
    friend Quat operator-(const Quat& a, const Quat& b);
    friend bool operator==(const Quat& a, const Quat& b);
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

    /// Left scalar action by a complex cyclotomic value.
    friend Quat operator*(const CycNum& c, const Quat& q);
    friend Quat operator*(const Rat& c, const Quat& q);

    /// q[a0,a1,a2,a3] when all coordinates are rational, else q{z=...,w=...}.
    std::string str() const;

    void append_key(std::string& out) const;
    uint64_t hash() const;
};

// Named constants used by the finite subgroups of the unit quaternions.
Quat quat_i();
Quat quat_j();
Quat quat_k();
Quat quat_zeta(int m);                    // conductor lcm(4, m)
Quat quat_varpi();                        // (-1 + i + j + k)/2, conductor 4
Quat quat_gamma();                        // (1 + i)/sqrt(2) = zeta_8, conductor 8
Quat quat_delta();                        // (i - j)/sqrt(2), conductor 8
Quat quat_sigma();                        // (tau^-1 + i + tau j)/2, conductor 20
CycNum cyc_tau();                         // (1 + sqrt(5))/2, conductor 20
CycNum cyc_sqrt2();                       // zeta_8 + zeta_8^-1, conductor 8
CycNum cyc_sqrt5();                       // 1 + 2(zeta_5 + zeta_5^4), conductor 20

/// Lookup by name: zeta(m) | varpi | gamma | sigma | delta | i | j | k.
/// (tau is a scalar; fetch it with cyc_tau.)
Quat quat_const(const std::string& name);

} // namespace qrg
