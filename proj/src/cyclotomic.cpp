#include "qrg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qrg {

int euler_phi(int n) {
    if (n <= 0) throw InvalidParams("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Quotient of a by b (exact division, b monic or at least exact), both dense.
std::vector<Rat> poly_div_exact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> rem = a;
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(rem.size()) - 1;
    std::vector<Rat> q(da - db + 1, Rat(0));
    for (int d = da; d >= db; --d) {
        if (rem[d].is_zero()) continue;
        Rat f = rem[d] / b[db];
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * b[i];
    }
    for (const Rat& r : rem)
        if (!r.is_zero()) throw Error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<int, std::vector<Rat>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

const std::vector<Rat>& cyclotomic_poly(int n) {
    if (n <= 0) throw InvalidParams("cyclotomic_poly: n must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed for all divisors
    // bottom-up so the recursion never re-enters the lock.
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (g_phi_cache.count(d)) continue;
        std::vector<Rat> num(d + 1, Rat(0));
        num[0] = Rat(-1);
        num[d] = Rat(1);
        for (int e : divisors) {
            if (e >= d || d % e != 0) continue;
            num = poly_div_exact(num, g_phi_cache.at(e));
        }
        g_phi_cache.emplace(d, std::move(num));
    }
    return g_phi_cache.at(n);
}

namespace {

// Reduce a dense polynomial in zeta_n mod Phi_n; result has phi(n) coeffs.
std::vector<Rat> reduce_mod_phi(std::vector<Rat> p, int n) {
    const std::vector<Rat>& phi = cyclotomic_poly(n);
    int deg_phi = static_cast<int>(phi.size()) - 1;
    for (int d = static_cast<int>(p.size()) - 1; d >= deg_phi; --d) {
        if (p[d].is_zero()) continue;
        Rat f = p[d]; // phi is monic
        for (int i = 0; i <= deg_phi; ++i) p[d - deg_phi + i] -= f * phi[i];
    }
    p.resize(deg_phi, Rat(0));
    return p;
}

} // namespace

CycNum CycNum::zero(int n) { return CycNum(n, std::vector<Rat>(euler_phi(n), Rat(0))); }

CycNum CycNum::one(int n) { return from_rat(Rat(1), n); }

CycNum CycNum::from_rat(const Rat& r, int n) {
    std::vector<Rat> c(euler_phi(n), Rat(0));
    c[0] = r;
    return CycNum(n, std::move(c));
}

CycNum CycNum::zeta(int n) {
    std::vector<Rat> p(2, Rat(0));
    p[1] = Rat(1);
    return from_poly(n, p);
}

CycNum CycNum::from_coeffs(int n, std::vector<Rat> coeffs) {
    if (static_cast<int>(coeffs.size()) != euler_phi(n))
        throw InvalidParams("CycNum: coefficient vector must have phi(n) entries");
    return CycNum(n, std::move(coeffs));
}

CycNum CycNum::from_poly(int n, const std::vector<Rat>& poly) {
    return CycNum(n, reduce_mod_phi(poly, n));
}

CycNum CycNum::promoted(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw NotADivisor("CycNum: conductor does not divide target");
    int k = m / n_;
    std::vector<Rat> p(static_cast<size_t>(c_.size() - 1) * k + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) p[i * k] = c_[i];
    return from_poly(m, p);
}

bool CycNum::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat CycNum::rat_value() const {
    if (!is_rational()) throw Error("CycNum: value is not rational");
    return c_[0];
}

CycNum CycNum::conj() const {
    // The Galois automorphism zeta -> zeta^(n-1) (= complex conjugation
    // under zeta -> e^(2 pi i / n)).
    if (n_ <= 2) return *this;
    std::vector<Rat> p(n_, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        p[(i * static_cast<size_t>(n_ - 1)) % n_] += c_[i];
    }
    return from_poly(n_, p);
}

CycNum CycNum::operator-() const {
    std::vector<Rat> c = c_;
    for (Rat& r : c) r = -r;
    return CycNum(n_, std::move(c));
}

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
} // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
    int n = lcm_int(a.n_, b.n_);
    CycNum pa = a.promoted(n), pb = b.promoted(n);
    for (size_t i = 0; i < pa.c_.size(); ++i) pa.c_[i] += pb.c_[i];
    return pa;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    int n = lcm_int(a.n_, b.n_);
    CycNum pa = a.promoted(n), pb = b.promoted(n);
    for (size_t i = 0; i < pa.c_.size(); ++i) pa.c_[i] -= pb.c_[i];
    return pa;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    int n = lcm_int(a.n_, b.n_);
    CycNum pa = a.promoted(n), pb = b.promoted(n);
    std::vector<Rat> p(2 * pa.c_.size(), Rat(0));
    for (size_t i = 0; i < pa.c_.size(); ++i) {
        if (pa.c_[i].is_zero()) continue;
        for (size_t j = 0; j < pb.c_.size(); ++j) {
            if (pb.c_[j].is_zero()) continue;
            p[i + j] += pa.c_[i] * pb.c_[j];
        }
    }
    return CycNum::from_poly(n, p);
}

CycNum CycNum::inv() const {
    if (is_zero()) throw DivisionByZero("CycNum: inverse of zero");
    // Extended Euclid in Q[x]: u * this + v * Phi_n = 1 (Phi_n irreducible).
    std::vector<Rat> r0 = cyclotomic_poly(n_);
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back().is_zero()) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)}; // coefficients of `this`
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    while (true) {
        trim(r1);
        if (r1.empty()) throw Error("CycNum: gcd with Phi_n is not constant");
        if (r1.size() == 1) break;
        // r0 = q*r1 + rem
        std::vector<Rat> rem = r0;
        int db = static_cast<int>(r1.size()) - 1;
        std::vector<Rat> q(std::max<int>(static_cast<int>(rem.size()) - db, 1), Rat(0));
        for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
            if (rem[d].is_zero()) continue;
            Rat f = rem[d] / r1[db];
            q[d - db] = f;
            for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * r1[i];
        }
        trim(rem);
        // s_{k+1} = s_{k-1} - q * s_k
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        trim(s1);
    }
    Rat lead = r1[0];
    std::vector<Rat> u = s1;
    for (Rat& x : u) x = x / lead;
    return from_poly(n_, u);
}

CycNum operator/(const CycNum& a, const CycNum& b) {
    int n = lcm_int(a.n_, b.n_);
    return a.promoted(n) * b.promoted(n).inv();
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNum base = *this;
    CycNum acc = CycNum::one(n_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const CycNum& a, const CycNum& b) {
    int n = lcm_int(a.n_, b.n_);
    CycNum pa = a.promoted(n), pb = b.promoted(n);
    return pa.c_ == pb.c_;
}

std::string CycNum::str() const {
    std::ostringstream os;
    os << "cyc(" << n_ << ")[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i].str();
    }
    os << ']';
    return os.str();
}

CycNum CycNum::parse(const std::string& s) {
    if (s.rfind("cyc(", 0) != 0) throw ParseError("CycNum: expected cyc(n)[...]");
    auto close = s.find(')');
    auto lb = s.find('[', close);
    auto rb = s.rfind(']');
    if (close == std::string::npos || lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError("CycNum: malformed '" + s + "'");
    int n = std::stoi(s.substr(4, close - 4));
    std::vector<Rat> coeffs;
    std::string body = s.substr(lb + 1, rb - lb - 1);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) coeffs.push_back(Rat::parse(tok));
    return from_coeffs(n, std::move(coeffs));
}

void CycNum::append_key(std::string& out) const {
    for (const Rat& r : c_) {
        out += r.str();
        out += ';';
    }
}

uint64_t CycNum::hash() const {
    uint64_t seed = static_cast<uint64_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (const Rat& r : c_) hash_combine(seed, r.hash());
    return seed;
}

} // namespace qrg
