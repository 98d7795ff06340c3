#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grassten {

/// One exterior monomial e_{i1}e_{i2}...e_{ik}, i1 < i2 < ... < ik, stored as
/// a bitmask (index i <-> bit i-1). The empty mask is the unit 1.
/// Generator indices run from 1; ranks up to 63 are supported.
struct ExteriorMonomial {
    std::uint64_t bits = 0;

    static constexpr unsigned kMaxRank = 63;

    static ExteriorMonomial unit() { return {}; }
    static ExteriorMonomial generator(unsigned index);
    static ExteriorMonomial from_indices(const std::vector<unsigned>& indices);

    unsigned length() const { return static_cast<unsigned>(__builtin_popcountll(bits)); }
    bool is_unit() const { return bits == 0; }
    bool contains(unsigned index) const { return index >= 1 && (bits >> (index - 1)) & 1u; }
    unsigned max_index() const;
    std::vector<unsigned> indices() const;

    bool operator==(const ExteriorMonomial& o) const { return bits == o.bits; }
    bool operator!=(const ExteriorMonomial& o) const { return bits != o.bits; }
    bool operator<(const ExteriorMonomial& o) const { return bits < o.bits; }

    /// "e1e2e5"; the unit renders as "1".
    std::string str() const;
};

struct SignedMonomial {
    int sign;  // +1 or -1
    ExteriorMonomial monomial;
};

/// Product in the exterior algebra: empty optional iff the index sets
/// intersect; otherwise the sorted union with the interleaving sign.
std::optional<SignedMonomial> ext_mul(ExteriorMonomial a, ExteriorMonomial b);

/// Parity of the permutation merging two disjoint sorted index sets
/// (number of pairs i in a, j in b with i > j, mod 2).
int merge_sign(std::uint64_t a, std::uint64_t b);

/// Z2-degree assignment on the generators. Three families:
///   k_star:   ||e_i|| = 1 iff i <= k
///   infinity: ||e_i|| = 1 iff i even
///   k:        ||e_i|| = 0 iff i <= k
class GradingMap {
public:
    enum class Family { KStar, Infinity, K };

    GradingMap() : family_(Family::KStar), k_(0) {}
    GradingMap(Family family, unsigned k = 0) : family_(family), k_(k) {}

    static GradingMap k_star(unsigned k) { return {Family::KStar, k}; }
    static GradingMap infinity() { return {Family::Infinity}; }
    static GradingMap k(unsigned k) { return {Family::K, k}; }

    Family family() const { return family_; }
    unsigned parameter() const { return k_; }

    int degree_of_generator(unsigned index) const;
    /// Bitmask of degree-1 generators among indices 1..rank.
    std::uint64_t degree_mask(unsigned rank) const;

    bool operator==(const GradingMap& o) const {
        return family_ == o.family_ && (family_ == Family::Infinity || k_ == o.k_);
    }

    std::string str() const;

private:
    Family family_;
    unsigned k_;
};

/// Sum in Z2 of the generator degrees; the unit has degree 0.
int monomial_degree(ExteriorMonomial m, const GradingMap& g);

}  // namespace grassten
