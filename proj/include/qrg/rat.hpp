#pragma once

/// Exact rational scalars. Thin value wrapper around GMP's mpq_class that
/// keeps the canonical form invariant (gcd-reduced, positive denominator,
/// zero stored as 0/1) and adds parsing, printing and hashing.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qrg/errors.hpp"

namespace qrg {

class Rat {
    mpq_class v_;

public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(mpq_class(mpz_class(s)));
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw DivisionByZero("Rat: zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return Rat(q);
        } catch (const std::invalid_argument&) {
            throw ParseError("Rat: cannot parse '" + s + "'");
        }
    }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DivisionByZero("Rat: division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

    Rat inv() const {
        if (is_zero()) throw DivisionByZero("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    uint64_t hash() const {
        // Residues mod two large primes; cheap and stable across limbs.
        uint64_t hn = mpz_fdiv_ui(v_.get_num().get_mpz_t(), 0xfffffffbu);
        uint64_t hd = mpz_fdiv_ui(v_.get_den().get_mpz_t(), 0xfffffff1u);
        uint64_t h = hn * 0x9e3779b97f4a7c15ull + hd;
        h ^= h >> 29;
        return h * 0xbf58476d1ce4e5b9ull;
    }
};

inline void hash_combine(uint64_t& seed, uint64_t h) {
    seed ^= h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

} // namespace qrg
