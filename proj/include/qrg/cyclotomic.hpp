#pragma once

/// Exact cyclotomic field arithmetic. A CycNum is an element of Q(zeta_n)
/// stored as its coordinate vector in the power basis 1, zeta, ...,
/// zeta^(phi(n)-1) of Q[x]/Phi_n(x). The representation at a fixed conductor
/// is a normal form, so equality of values is equality of (promoted)
/// coefficient vectors. Conductors are never minimized.

#include <cstdint>
#include <string>
#include <vector>

#include "qrg/rat.hpp"

namespace qrg {

int euler_phi(int n);

/// Monic Phi_n as a dense coefficient vector (degree phi(n)). Computed once
/// per conductor by dividing x^n - 1 by the proper-divisor cyclotomics;
/// memoized behind a mutex.
const std::vector<Rat>& cyclotomic_poly(int n);

class CycNum {
    int n_ = 1;
    std::vector<Rat> c_{Rat(0)};

    CycNum(int n, std::vector<Rat> c) : n_(n), c_(std::move(c)) {}

public:
    CycNum() = default;

    static CycNum zero(int n = 1);
    static CycNum one(int n = 1);
    static CycNum from_rat(const Rat& r, int n = 1);
    /// The class of x in Q[x]/Phi_n: a primitive n-th root of unity.
    static CycNum zeta(int n);
    /// Coefficient vector must have exactly phi(n) entries.
    static CycNum from_coeffs(int n, std::vector<Rat> coeffs);
    /// Reduce an arbitrary polynomial in zeta_n mod Phi_n.
    static CycNum from_poly(int n, const std::vector<Rat>& poly);

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    /// Value-preserving embedding into Q(zeta_m); requires conductor() | m.
    CycNum promoted(int m) const;

    bool is_zero() const;
    bool is_rational() const;
    Rat rat_value() const; // requires is_rational()
    bool is_real() const { return *this == conj(); }

    CycNum conj() const; // zeta_n -> zeta_n^(n-1); complex conjugation
    CycNum operator-() const;
    CycNum inv() const;  // DivisionByZero on zero
    CycNum pow(long e) const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Serialization: cyc(n)[c0,c1,...] with rationals as p/q.
    std::string str() const;
    static CycNum parse(const std::string& s);

    /// Raw key of the coefficient vector at this conductor. Containers that
    /// hash CycNums must first promote everything to a common conductor.
    void append_key(std::string& out) const;
    uint64_t hash() const;
};

inline CycNum operator*(const Rat& r, const CycNum& a) { return CycNum::from_rat(r, a.conductor()) * a; }

} // namespace qrg
