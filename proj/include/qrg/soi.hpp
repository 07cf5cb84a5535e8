#pragma once

/// Systems of imprimitivity for the rank-two groups: membership tests for
/// pairs of lines, preservation checks (generator or whole-group mode), the
/// structured candidate search of the lemma, and the per-family classifier
/// reproducing the tables.

#include <string>
#include <vector>

#include "qrg/descriptor.hpp"
#include "qrg/qmat.hpp"

namespace qrg {

struct Line {
    QVec2 u; // spanning vector, nonzero

    std::string canonical_key() const; // key of the leading-1 normalized span
};

/// v in H*u, solved from the first nonzero coordinate.
bool line_contains(const Line& line, const QVec2& v);

struct SoI {
    Line first, second; // distinct lines

    std::string canonical_key() const; // sorted pair of line keys
    std::string str() const;
};

/// System with u = (1,1), v = (1,-1).
SoI soi_plus_minus();
/// System with u = (1,theta), v = (theta,1); theta nonzero, purely imaginary.
SoI soi_theta(const Quat& theta);

/// Every matrix maps {line1, line2} onto itself (as a permutation).
bool soi_preserved(const std::vector<QMat2>& mats, const SoI& s);

enum class SoiMode { Generators, Full };
bool soi_preserved(const BuiltGroup& g, const SoI& s, SoiMode mode = SoiMode::Generators);

struct SoiSystem {
    enum class Kind { Concrete, Family };
    Kind kind = Kind::Concrete;
    // direction "1" means the (1,1)/(1,-1) system; otherwise one of
    // "i", "j", "k", "delta" with theta = coeff * direction.
    std::string direction;
    Rat coeff = Rat(1);

    SoI instantiate(const Rat& sample = Rat(1)) const;
    std::string str() const;
};

struct SoiClassification {
    std::string group;
    std::vector<SoiSystem> systems;
    bool in_scope = true;
};

/// The full set of extra systems per the classification theorems;
/// UnknownFamily for descriptors outside Tables 1-5 / boxdot scope.
SoiClassification soi_classify(const GroupDesc& desc);

struct FoundSoI {
    SoI s;
    std::string label; // e.g. "(1,1)", "(1,1/2*i)"
};

/// Tests (1,1)/(1,-1) plus u = (1, q*dir) for dir in {i,j,k,delta} and q in
/// samples; when h_size = 2 only unit thetas are tried. Returns passers in
/// candidate order, deduplicated by canonical key.
std::vector<FoundSoI> soi_search_structured(const BuiltGroup& g, const std::vector<Rat>& samples,
                                            SoiMode mode = SoiMode::Generators);

/// Random theta = a i + b j + c k candidates outside the classified set; the
/// count that pass (expected zero for classified groups).
int soi_random_sweep_hits(const BuiltGroup& g, const SoiClassification& cls, int trials,
                          unsigned seed);

} // namespace qrg
