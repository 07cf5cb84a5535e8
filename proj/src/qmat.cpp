#include "qrg/qmat.hpp"

#include <numeric>
#include <sstream>

namespace qrg {

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }
} // namespace

QMat2 QMat2::identity(int n) {
    return QMat2(Quat::one(n), Quat::zero(n), Quat::zero(n), Quat::one(n));
}

QMat2 QMat2::diag(const Quat& a, const Quat& d) {
    int n = lcm_int(a.conductor(), d.conductor());
    return QMat2(a.promoted(n), Quat::zero(n), Quat::zero(n), d.promoted(n));
}

QMat2 QMat2::antidiag(const Quat& b, const Quat& c) {
    int n = lcm_int(b.conductor(), c.conductor());
    return QMat2(Quat::zero(n), b.promoted(n), c.promoted(n), Quat::zero(n));
}

QMat2 QMat2::swap_s(int n) {
    return QMat2(Quat::zero(n), Quat::one(n), Quat::one(n), Quat::zero(n));
}

int QMat2::conductor() const {
    int n = 4;
    for (const Quat& q : e_) n = lcm_int(n, q.conductor());
    return n;
}

QMat2 QMat2::promoted(int n) const {
    return QMat2(e_[0].promoted(n), e_[1].promoted(n), e_[2].promoted(n), e_[3].promoted(n));
}

QMat2 QMat2::conjtranspose() const {
    return QMat2(e_[0].conj(), e_[2].conj(), e_[1].conj(), e_[3].conj());
}

bool QMat2::is_unitary() const {
    return (*this * conjtranspose()) == QMat2::identity();
}

QMat2 QMat2::inverse_of_unitary() const {
    if (!is_unitary()) throw NotUnitary("QMat2: matrix is not unitary");
    return conjtranspose();
}

bool QMat2::is_identity() const { return *this == QMat2::identity(); }

bool QMat2::is_complex_type() const {
    for (const Quat& q : e_)
        if (!q.is_complex()) return false;
    return true;
}

bool QMat2::is_diagonal() const { return e_[1].is_zero() && e_[2].is_zero(); }
bool QMat2::is_antidiagonal() const { return e_[0].is_zero() && e_[3].is_zero(); }

int QMat2::order(int cap) const {
    QMat2 id = QMat2::identity(conductor());
    QMat2 p = *this;
    for (int k = 1; k <= cap; ++k) {
        if (p == id) return k;
        p = p * *this;
    }
    throw NotFiniteOrder("QMat2: order exceeds cap");
}

QMat2 operator*(const QMat2& a, const QMat2& b) {
    return QMat2(a.e_[0] * b.e_[0] + a.e_[1] * b.e_[2], a.e_[0] * b.e_[1] + a.e_[1] * b.e_[3],
                 a.e_[2] * b.e_[0] + a.e_[3] * b.e_[2], a.e_[2] * b.e_[1] + a.e_[3] * b.e_[3]);
}

QMat2 operator*(const CycNum& c, const QMat2& a) { return a.scaled(c); }

QMat2 QMat2::scaled(const CycNum& c) const {
    return QMat2(c * e_[0], c * e_[1], c * e_[2], c * e_[3]);
}

QMat2 QMat2::negated() const { return QMat2(-e_[0], -e_[1], -e_[2], -e_[3]); }

bool operator==(const QMat2& a, const QMat2& b) {
    for (int i = 0; i < 4; ++i)
        if (a.e_[i] != b.e_[i]) return false;
    return true;
}

QVec2 operator*(const QVec2& v, const QMat2& a) {
    return {v[0] * a.at(0, 0) + v[1] * a.at(1, 0), v[0] * a.at(0, 1) + v[1] * a.at(1, 1)};
}

std::string QMat2::str() const {
    std::ostringstream os;
    os << '[' << e_[0].str() << ',' << e_[1].str() << ';' << e_[2].str() << ',' << e_[3].str()
       << ']';
    return os.str();
}

void QMat2::append_key(std::string& out) const {
    for (const Quat& q : e_) q.append_key(out);
}

uint64_t QMat2::hash() const {
    uint64_t seed = 0x51ab2e9c3d7f4b61ull;
    for (const Quat& q : e_) hash_combine(seed, q.hash());
    return seed;
}

Quat inner(const QVec2& u, const QVec2& v) {
    return u[0] * v[0].conj() + u[1] * v[1].conj();
}

int fixed_space_dim(const QMat2& m) {
    int n = m.conductor();
    QMat2 a = m.promoted(n);
    Quat A = a.at(0, 0) - Quat::one(n);
    Quat B = a.at(0, 1);
    Quat C = a.at(1, 0);
    Quat D = a.at(1, 1) - Quat::one(n);
    // Solve v (M - I) = 0 for row vectors v = (v1, v2):
    //   v1 A + v2 C = 0,  v1 B + v2 D = 0.
    if (!A.is_zero()) {
        Quat t = D - C * A.inv() * B;
        return t.is_zero() ? 1 : 0;
    }
    if (!C.is_zero()) return B.is_zero() ? 1 : 0;
    // A = 0, C = 0: first equation is trivial.
    if (B.is_zero() && D.is_zero()) return 2;
    return 1;
}

namespace {

// A spanning vector of the (one-dimensional) fixed space.
QVec2 fixed_vector(const QMat2& m) {
    int n = m.conductor();
    QMat2 a = m.promoted(n);
    Quat A = a.at(0, 0) - Quat::one(n);
    Quat B = a.at(0, 1);
    Quat C = a.at(1, 0);
    Quat D = a.at(1, 1) - Quat::one(n);
    if (!A.is_zero()) return {-(C * A.inv()), Quat::one(n)};
    if (!C.is_zero()) return {Quat::one(n), Quat::zero(n)};
    if (!B.is_zero()) return {-(D * B.inv()), Quat::one(n)};
    return {Quat::one(n), Quat::zero(n)};
}

} // namespace

ReflectionInfo quat_is_reflection(const QMat2& a, int order_cap, bool check_unitary) {
    if (check_unitary && !a.is_unitary()) throw NotUnitary("quat_is_reflection: not unitary");
    ReflectionInfo info;
    if (fixed_space_dim(a) != 1) return info;
    info.is_reflection = true;
    info.order = a.order(order_cap);
    // Root = any vector orthogonal to the fixed line:
    // (r|u) = r1 conj(u1) + r2 conj(u2) = 0.
    QVec2 u = fixed_vector(a);
    int n = a.conductor();
    Quat u1c = u[0].conj(), u2c = u[1].conj();
    if (u2c.is_zero())
        info.root = {Quat::zero(n), Quat::one(n)};
    else
        info.root = {Quat::one(n), -(u1c * u2c.inv())};
    return info;
}

} // namespace qrg
