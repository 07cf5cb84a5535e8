#pragma once

/// Finite subgroups of the unit quaternions: cyclic C_m, binary dihedral
/// D_m = <zeta_2m, j>, and the binary tetra-/octa-/icosahedral groups
/// T = <i,j,varpi>, O = <i,j,varpi,gamma>, I = <i,sigma>. Elements are
/// enumerated by breadth-first closure with generator words recorded; all
/// later group arithmetic runs on element indices through a precomputed
/// multiplication table.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qrg/quat.hpp"

namespace qrg {

struct GroupName {
    enum class Kind { C, D, T, O, I, Custom };
    Kind kind = Kind::Custom;
    int m = 0; // parameter for C and D

    static GroupName C(int m) { return {Kind::C, m}; }
    static GroupName D(int m) { return {Kind::D, m}; }
    static GroupName T() { return {Kind::T, 0}; }
    static GroupName O() { return {Kind::O, 0}; }
    static GroupName I() { return {Kind::I, 0}; }
    static GroupName custom() { return {Kind::Custom, 0}; }

    std::string str() const;
    friend bool operator==(const GroupName&, const GroupName&) = default;
};

class SGroup {
public:
    static SGroup cyclic(int m);
    static SGroup binary_dihedral(int m);
    static SGroup tetrahedral();
    static SGroup octahedral();
    static SGroup icosahedral();
    static SGroup named_group(const GroupName& name);
    /// Closure of exact unit quaternions; ClosureBound past cap.
    static SGroup from_generators(GroupName name, const std::vector<Quat>& gens, int cap = 10000);

    const GroupName& name() const { return name_; }
    int order() const { return static_cast<int>(elems_.size()); }
    int conductor() const { return conductor_; }
    const Quat& element(int i) const { return elems_[i]; }
    const std::vector<Quat>& elements() const { return elems_; }
    const std::vector<int>& generator_indices() const { return gens_; }
    const std::vector<int>& word(int i) const { return words_[i]; }
    int id_index() const { return id_; }
    int neg_index(int i) const { return mul(neg_one_, i); } // index of -element
    int neg_one_index() const { return neg_one_; }

    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * elems_.size() + b]; }
    int inv(int a) const { return inv_[a]; }
    int power(int a, long e) const;
    int element_order(int a) const { return ord_[a]; }
    const CycNum& trace_of(int a) const { return traces_[a]; }
    std::optional<int> find(const Quat& q) const;

    /// Serialized canonical form at the group conductor; the fixed total
    /// order used for coset representatives.
    const std::string& element_key(int i) const { return keys_[i]; }

    // Subsets are sorted index vectors.
    std::vector<int> subgroup_closure(const std::vector<int>& seed) const;
    bool is_subgroup(const std::vector<int>& subset) const;
    bool is_normal(const std::vector<int>& subset) const;
    bool is_abelian_subset(const std::vector<int>& subset) const;
    std::vector<std::vector<int>> conjugacy_classes() const;
    std::vector<std::vector<int>> normal_subgroup_index_sets() const;

    /// Standalone SGroup from a subset (shares the ambient conductor).
    SGroup sub(const std::vector<int>& indices, GroupName name = GroupName::custom()) const;

    /// Order statistics (order, multiplicity), sorted; the whole group when
    /// subset is empty.
    std::vector<std::pair<int, int>> order_fingerprint(const std::vector<int>& subset = {}) const;

    // Binary dihedral coordinates x^a y^b (only when built as D(m)).
    bool has_dihedral_shape() const { return dih_m_ > 0; }
    int dihedral_m() const { return dih_m_; }
    int x_power(int a) const;                 // index of x^a
    int y_index() const { return y_idx_; }
    std::pair<int, int> xy_decompose(int i) const { return decomp_[i]; }

private:
    GroupName name_;
    int conductor_ = 4;
    std::vector<Quat> elems_;
    std::vector<std::string> keys_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> words_;
    std::vector<int> parent_;  // BFS predecessor: e = parent * gens[lastgen]
    std::vector<int> lastgen_;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<int> ord_;
    std::vector<CycNum> traces_;
    int id_ = 0;
    int neg_one_ = 0;
    // dihedral coordinates
    int dih_m_ = 0;
    int y_idx_ = -1;
    std::vector<int> xpow_;
    std::vector<std::pair<int, int>> decomp_;

    void finish_build();
    void build_dihedral_shape(int m);
};

using SGroupPtr = std::shared_ptr<const SGroup>;

/// Shared named groups (cached; T/O/I are built once).
SGroupPtr sgroup(const GroupName& name);

// --- subgroup naming and quotient identification -------------------------

struct NamedSubgroup {
    std::vector<int> indices;
    GroupName name; // identified structure (Custom when unrecognized)
};

/// All normal subgroups of K, identified. Sorted by (order, rep keys).
std::vector<NamedSubgroup> sgroup_normal_subgroups(const SGroup& K);

/// Identify a subgroup's isomorphism type among {1, C(k), D(k), T, O, I}.
GroupName identify_subgroup(const SGroup& K, const std::vector<int>& subset);

struct QuotientTag {
    enum class Kind {
        Trivial, Cyclic, BinDihedral, Dihedral, Sym3, Alt4, Sym4, Alt5,
        BinTet, BinOct, BinIco
    };
    Kind kind = Kind::Trivial;
    int k = 0; // parameter for Cyclic/BinDihedral/Dihedral

    std::string str() const;
    friend bool operator==(const QuotientTag&, const QuotientTag&) = default;
};

/// Identify K/H by order, element-order statistics and abelianness;
/// UnrecognizedQuotient when no candidate matches.
QuotientTag quotient_identify(const SGroup& K, const std::vector<int>& H);

// --- cosets and order <= 2 automorphisms of K/H --------------------------

struct CosetStructure {
    std::vector<std::vector<int>> cosets; // sorted internally by element key
    std::vector<int> elt2coset;
    std::vector<int> rep; // canonical representative (minimal key)
    int id_coset = 0;

    int size() const { return static_cast<int>(cosets.size()); }
};

CosetStructure cosets_of(const SGroup& K, const std::vector<int>& H);

class QuotAut {
public:
    static QuotAut identity(SGroupPtr K, std::vector<int> H);
    /// phi(H xi) = H xi^-1; valid (and involutive) whenever K/H is abelian.
    static QuotAut inversion(SGroupPtr K, std::vector<int> H);
    /// psi_r on K = D(m) with H = <x^n>: x^a y^b -> x^(ar+bm) y^b mod H.
    static QuotAut psi(SGroupPtr K, std::vector<int> H, int r);
    /// rho(xi): H eta -> H xi eta xi^-1 (xi must normalize K and H).
    static QuotAut rho(SGroupPtr K, std::vector<int> H, const Quat& xi);
    /// Central automorphism of O: fixes T, negates O \ T.
    static QuotAut beta(SGroupPtr K, std::vector<int> H);
    /// Outer automorphism of I pinned by Theta(i) = -i,
    /// Theta(sigma) = -(tau + i - tau^-1 k)/2, extended along generator words.
    static QuotAut theta(SGroupPtr K, std::vector<int> H);
    static QuotAut from_element_map(SGroupPtr K, std::vector<int> H,
                                    const std::vector<int>& images, std::string desc);
    /// From a coset table (indices of cosets_of(K, H)); fully verified.
    static QuotAut from_table(SGroupPtr K, std::vector<int> H, std::vector<int> table,
                              std::string desc);

    const SGroup& K() const { return *K_; }
    SGroupPtr K_ptr() const { return K_; }
    const std::vector<int>& H() const { return H_; }
    const CosetStructure& cosets() const { return cs_; }
    int apply_coset(int c) const { return table_[c]; }
    int apply_elt(int e) const { return table_[cs_.elt2coset[e]]; }
    /// phi(H xi) as a sorted element-index set.
    const std::vector<int>& image_coset_elems(int e) const { return cs_.cosets[apply_elt(e)]; }
    bool is_identity() const;
    const std::string& desc() const { return desc_; }
    const std::vector<int>& table() const { return table_; }

    /// this . other (apply other first); verified to still be an involution.
    QuotAut compose_after(const QuotAut& other) const;
    bool same_map(const QuotAut& other) const;

private:
    SGroupPtr K_;
    std::vector<int> H_;
    CosetStructure cs_;
    std::vector<int> table_;
    std::string desc_;

    QuotAut(SGroupPtr K, std::vector<int> H, std::vector<int> table, std::string desc);
    static QuotAut checked(SGroupPtr K, std::vector<int> H, std::vector<int> table,
                           std::string desc);
};

/// Convenience: automorphism by descriptor "id|inv|psi:r|rho:<name>|beta|theta".
QuotAut aut_make(const std::string& desc, SGroupPtr K, std::vector<int> H);

} // namespace qrg
