#include "qrg/quat.hpp"

#include <numeric>
#include <sstream>

namespace qrg {

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

CycNum imag_unit(int n) { return CycNum::zeta(4).promoted(n); }
} // namespace

Quat::Quat(const CycNum& z, const CycNum& w) {
    n_ = lcm_int(4, lcm_int(z.conductor(), w.conductor()));
    z_ = z.promoted(n_);
    w_ = w.promoted(n_);
}

Quat Quat::make(const CycNum& a0, const CycNum& a1, const CycNum& a2, const CycNum& a3) {
    for (const CycNum* a : {&a0, &a1, &a2, &a3})
        if (!a->is_real()) throw NotRealCoordinate("Quat: coordinate not fixed by conjugation");
    int n = lcm_int(4, std::lcm(std::lcm(a0.conductor(), a1.conductor()),
                                std::lcm(a2.conductor(), a3.conductor())));
    CycNum i = imag_unit(n);
    return Quat(a0.promoted(n) + i * a1.promoted(n), a2.promoted(n) + i * a3.promoted(n));
}

Quat Quat::make(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
    return make(CycNum::from_rat(a0), CycNum::from_rat(a1), CycNum::from_rat(a2),
                CycNum::from_rat(a3));
}

Quat Quat::from_complex(const CycNum& z) { return Quat(z, CycNum::zero(z.conductor())); }

std::array<CycNum, 4> Quat::coords() const {
    CycNum i = imag_unit(n_);
    Rat half(1, 2);
    CycNum a0 = half * (z_ + z_.conj());
    CycNum a1 = half * ((z_ - z_.conj()) / i);
    CycNum a2 = half * (w_ + w_.conj());
    CycNum a3 = half * ((w_ - w_.conj()) / i);
    return {a0, a1, a2, a3};
}

Quat Quat::promoted(int m) const { return Quat(z_.promoted(m), w_.promoted(m)); }

bool Quat::is_unit() const { return norm() == CycNum::one(); }

Quat Quat::conj() const { return Quat(z_.conj(), -w_); }

CycNum Quat::norm() const { return z_ * z_.conj() + w_ * w_.conj(); }

CycNum Quat::trace() const { return z_ + z_.conj(); }

Quat Quat::inv() const {
    if (is_zero()) throw DivisionByZero("Quat: inverse of zero");
    CycNum n = norm();
    Quat c = conj();
    return Quat(c.z() / n, c.w() / n);
}

Quat Quat::operator-() const { return Quat(-z_, -w_); }

Quat Quat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Quat base = *this;
    Quat acc = Quat::one(n_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int Quat::order(int cap) const {
    Quat id = Quat::one(n_);
    Quat p = *this;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * *this;
    }
    throw NotFiniteOrder("Quat: order exceeds cap");
}

Quat operator*(const Quat& a, const Quat& b) {
    int n = lcm_int(a.n_, b.n_);
    const Quat pa = a.promoted(n), pb = b.promoted(n);
    CycNum z = pa.z_ * pb.z_ - pa.w_ * pb.w_.conj();
    CycNum w = pa.z_ * pb.w_ + pa.w_ * pb.z_.conj();
    return Quat(z, w);
}

Quat operator+(const Quat& a, const Quat& b) { return Quat(a.z_ + b.z_, a.w_ + b.w_); }
Quat operator-(const Quat& a, const Quat& b) { return Quat(a.z_ - b.z_, a.w_ - b.w_); }

bool operator==(const Quat& a, const Quat& b) { return a.z_ == b.z_ && a.w_ == b.w_; }

Quat operator*(const CycNum& c, const Quat& q) { return Quat(c * q.z_, c * q.w_); }
Quat operator*(const Rat& c, const Quat& q) {
    return Quat(CycNum::from_rat(c) * q.z_, CycNum::from_rat(c) * q.w_);
}

std::string Quat::str() const {
    auto a = coords();
    bool rational = true;
    for (const CycNum& x : a) rational = rational && x.is_rational();
    std::ostringstream os;
    if (rational) {
        os << "q[" << a[0].rat_value().str() << ',' << a[1].rat_value().str() << ','
           << a[2].rat_value().str() << ',' << a[3].rat_value().str() << ']';
    } else {
        os << "q{z=" << z_.str() << ",w=" << w_.str() << '}';
    }
    return os.str();
}

void Quat::append_key(std::string& out) const {
    z_.append_key(out);
    out += '|';
    w_.append_key(out);
    out += '#';
}

uint64_t Quat::hash() const {
    uint64_t seed = z_.hash();
    hash_combine(seed, w_.hash());
    return seed;
}

Quat quat_i() { return Quat(CycNum::zeta(4), CycNum::zero(4)); }
Quat quat_j() { return Quat(CycNum::zero(4), CycNum::one(4)); }
Quat quat_k() { return Quat(CycNum::zero(4), CycNum::zeta(4)); }

Quat quat_zeta(int m) {
    if (m < 1) throw InvalidParams("quat_zeta: m must be positive");
    int n = lcm_int(4, m);
    return Quat(CycNum::zeta(m).promoted(n), CycNum::zero(n));
}

Quat quat_varpi() { return Quat::make(Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)); }

CycNum cyc_sqrt2() {
    CycNum z8 = CycNum::zeta(8);
    return z8 + z8.pow(-1);
}

CycNum cyc_sqrt5() {
    CycNum z5 = CycNum::zeta(5).promoted(20);
    return CycNum::one(20) + Rat(2) * (z5 + z5.pow(4));
}

CycNum cyc_tau() { return Rat(1, 2) * (CycNum::one(20) + cyc_sqrt5()); }

Quat quat_gamma() {
    CycNum inv_sqrt2 = cyc_sqrt2().inv();
    return Quat(inv_sqrt2 * (CycNum::one(8) + imag_unit(8)), CycNum::zero(8));
}

Quat quat_delta() {
    CycNum inv_sqrt2 = cyc_sqrt2().inv().promoted(8);
    return Quat(inv_sqrt2 * imag_unit(8), -inv_sqrt2);
}

Quat quat_sigma() {
    CycNum tau = cyc_tau();
    Rat half(1, 2);
    CycNum z = half * (tau.inv() + imag_unit(20));
    CycNum w = half * tau;
    return Quat(z, w);
}

Quat quat_const(const std::string& name) {
    if (name == "i") return quat_i();
    if (name == "j") return quat_j();
    if (name == "k") return quat_k();
    if (name == "varpi") return quat_varpi();
    if (name == "gamma") return quat_gamma();
    if (name == "sigma") return quat_sigma();
    if (name == "delta") return quat_delta();
    if (name.rfind("zeta(", 0) == 0 && name.back() == ')')
        return quat_zeta(std::stoi(name.substr(5, name.size() - 6)));
    throw UnknownConstant("quat_const: unknown constant '" + name + "'");
}

} // namespace qrg
