#pragma once

/// A finite set of 2x2 quaternionic matrices held at a common conductor,
/// with hash-consed canonical forms: the serialized coefficient vector of
/// every entry keys an intern table, so membership tests are O(1) and set
/// equality is exact.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrg/qmat.hpp"

namespace qrg {

class MatGroupSet {
    int conductor_ = 4;
    std::vector<QMat2> elems_;
    std::unordered_map<std::string, int> index_;

public:
    MatGroupSet() = default;

    /// Intern the given elements (must be pairwise distinct values).
    static MatGroupSet from_elements(std::vector<QMat2> elems);
    /// Breadth-first closure of the generating set; ClosureBound past cap.
    static MatGroupSet closure(const std::vector<QMat2>& gens, int cap = 40000);

    int order() const { return static_cast<int>(elems_.size()); }
    int conductor() const { return conductor_; }
    const QMat2& element(int i) const { return elems_[i]; }
    const std::vector<QMat2>& elements() const { return elems_; }

    std::optional<int> find(const QMat2& m) const;
    bool contains(const QMat2& m) const { return find(m).has_value(); }

    bool equals(const MatGroupSet& other) const;

    /// Closed under products with every element of gens?
    bool closed_under(const std::vector<QMat2>& gens) const;

    /// Subgroup generated by the listed elements equals the whole set?
    bool generated_by(const std::vector<int>& subset) const;

    MatGroupSet mapped(const std::function<QMat2(const QMat2&)>& f) const;

    std::vector<int> reflection_indices(int order_cap = kDefaultOrderCap) const;
    std::vector<int> reflection_order_multiset(int order_cap = kDefaultOrderCap) const;
    bool all_complex_type() const;

    /// Sorted canonical keys joined; byte-stable across runs.
    std::string canonical_digest() const;
};

} // namespace qrg
