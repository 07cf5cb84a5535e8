#include "qrg/matgroup.hpp"

#include <algorithm>
#include <numeric>

#include "qrg/kernels.hpp"

namespace qrg {

namespace {
int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

std::string mat_key(const QMat2& m) {
    std::string s;
    m.append_key(s);
    return s;
}
} // namespace

MatGroupSet MatGroupSet::from_elements(std::vector<QMat2> elems) {
    MatGroupSet g;
    int n = 4;
    for (const QMat2& m : elems) n = lcm_int(n, m.conductor());
    g.conductor_ = n;
    g.elems_.reserve(elems.size());
    for (QMat2& m : elems) {
        QMat2 p = m.promoted(n);
        std::string key = mat_key(p);
        if (!g.index_.emplace(key, static_cast<int>(g.elems_.size())).second)
            throw SizeMismatch("MatGroupSet: duplicate element");
        g.elems_.push_back(std::move(p));
    }
    return g;
}

MatGroupSet MatGroupSet::closure(const std::vector<QMat2>& gens, int cap) {
    MatGroupSet g;
    int n = 4;
    for (const QMat2& m : gens) n = lcm_int(n, m.conductor());
    g.conductor_ = n;

    auto push = [&](QMat2 m) -> bool {
        std::string key = mat_key(m);
        if (g.index_.count(key)) return false;
        if (static_cast<int>(g.elems_.size()) >= cap)
            throw ClosureBound("MatGroupSet: closure exceeds cap");
        g.index_.emplace(std::move(key), static_cast<int>(g.elems_.size()));
        g.elems_.push_back(std::move(m));
        return true;
    };

    push(QMat2::identity(n));
    std::vector<QMat2> pgens;
    for (const QMat2& m : gens) pgens.push_back(m.promoted(n));
    for (const QMat2& m : pgens) push(m);

    std::vector<int> frontier(g.elems_.size());
    std::iota(frontier.begin(), frontier.end(), 0);
    while (!frontier.empty()) {
        // Products of the frontier with every generator; the multiply is the
        // hot part and runs data-parallel, insertion stays sequential.
        std::vector<QMat2> products(frontier.size() * pgens.size());
        const std::vector<QMat2>& elems = g.elems_;
        transform_elements(products.size(), [&](std::size_t t) {
            products[t] = elems[frontier[t / pgens.size()]] * pgens[t % pgens.size()];
        });
        std::vector<int> next;
        for (QMat2& p : products) {
            int before = static_cast<int>(g.elems_.size());
            if (push(std::move(p))) next.push_back(before);
        }
        frontier = std::move(next);
    }
    return g;
}

std::optional<int> MatGroupSet::find(const QMat2& m) const {
    if (conductor_ % m.conductor() == 0) {
        auto it = index_.find(mat_key(m.promoted(conductor_)));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    int n = lcm_int(conductor_, m.conductor());
    QMat2 target = m.promoted(n);
    for (int i = 0; i < order(); ++i)
        if (elems_[i].promoted(n) == target) return i;
    return std::nullopt;
}

bool MatGroupSet::equals(const MatGroupSet& other) const {
    if (order() != other.order()) return false;
    if (conductor_ == other.conductor_) {
        for (const auto& [key, idx] : index_)
            if (!other.index_.count(key)) return false;
        return true;
    }
    int n = lcm_int(conductor_, other.conductor_);
    std::unordered_map<std::string, int> mine;
    for (const QMat2& m : elems_) mine.emplace(mat_key(m.promoted(n)), 1);
    for (const QMat2& m : other.elems_)
        if (!mine.count(mat_key(m.promoted(n)))) return false;
    return true;
}

bool MatGroupSet::closed_under(const std::vector<QMat2>& gens) const {
    for (const QMat2& g : gens) {
        QMat2 pg = g.promoted(conductor_);
        bool ok = all_of_elements(elems_.size(), [&](std::size_t i) {
            return contains(elems_[i] * pg);
        });
        if (!ok) return false;
    }
    return true;
}

bool MatGroupSet::generated_by(const std::vector<int>& subset) const {
    std::vector<char> in(order(), 0);
    std::vector<int> queue;
    auto id = find(QMat2::identity(conductor_));
    if (!id) return false;
    in[*id] = 1;
    queue.push_back(*id);
    for (int s : subset)
        if (!in[s]) {
            in[s] = 1;
            queue.push_back(s);
        }
    for (size_t head = 0; head < queue.size(); ++head) {
        for (int s : subset) {
            QMat2 p = elems_[queue[head]] * elems_[s];
            auto idx = find(p);
            if (!idx) throw Error("generated_by: set is not closed");
            if (!in[*idx]) {
                in[*idx] = 1;
                queue.push_back(*idx);
            }
        }
    }
    return queue.size() == elems_.size();
}

MatGroupSet MatGroupSet::mapped(const std::function<QMat2(const QMat2&)>& f) const {
    std::vector<QMat2> out(elems_.size());
    transform_elements(elems_.size(), [&](std::size_t i) { out[i] = f(elems_[i]); });
    return from_elements(std::move(out));
}

std::vector<int> MatGroupSet::reflection_indices(int order_cap) const {
    std::vector<uint8_t> mask = reflection_mask(elems_, order_cap);
    std::vector<int> out;
    for (int i = 0; i < order(); ++i)
        if (mask[i]) out.push_back(i);
    return out;
}

std::vector<int> MatGroupSet::reflection_order_multiset(int order_cap) const {
    std::vector<int> orders = reflection_orders(elems_, order_cap);
    std::vector<int> out;
    for (int o : orders)
        if (o > 0) out.push_back(o);
    std::sort(out.begin(), out.end());
    return out;
}

bool MatGroupSet::all_complex_type() const {
    for (const QMat2& m : elems_)
        if (!m.is_complex_type()) return false;
    return true;
}

std::string MatGroupSet::canonical_digest() const {
    std::vector<std::string> keys;
    keys.reserve(elems_.size());
    for (const auto& [key, idx] : index_) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const std::string& k : keys) {
        out += k;
        out += '\n';
    }
    return out;
}

} // namespace qrg
