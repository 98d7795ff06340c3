#include "grassten/grassmann.hpp"

#include <stdexcept>

namespace grassten {

ExteriorMonomial ExteriorMonomial::generator(unsigned index) {
    if (index < 1 || index > kMaxRank) throw std::out_of_range("generator index out of range");
    return {std::uint64_t{1} << (index - 1)};
}

ExteriorMonomial ExteriorMonomial::from_indices(const std::vector<unsigned>& indices) {
    ExteriorMonomial m;
    for (unsigned i : indices) {
        ExteriorMonomial g = generator(i);
        if (m.bits & g.bits) throw std::invalid_argument("duplicate generator index");
        m.bits |= g.bits;
    }
    return m;
}

unsigned ExteriorMonomial::max_index() const {
    if (bits == 0) return 0;
    return 64 - static_cast<unsigned>(__builtin_clzll(bits));
}

std::vector<unsigned> ExteriorMonomial::indices() const {
    std::vector<unsigned> out;
    std::uint64_t b = bits;
    while (b) {
        unsigned i = static_cast<unsigned>(__builtin_ctzll(b));
        out.push_back(i + 1);
        b &= b - 1;
    }
    return out;
}

std::string ExteriorMonomial::str() const {
    if (bits == 0) return "1";
    std::string s;
    for (unsigned i : indices()) s += "e" + std::to_string(i);
    return s;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
    // For each index j in b, count indices of a above j.
    unsigned inversions = 0;
    std::uint64_t rest = b;
    while (rest) {
        unsigned j = static_cast<unsigned>(__builtin_ctzll(rest));
        rest &= rest - 1;
        std::uint64_t above = (j == 63) ? 0 : (a >> (j + 1));
        inversions += static_cast<unsigned>(__builtin_popcountll(above));
    }
    return (inversions & 1u) ? -1 : 1;
}

std::optional<SignedMonomial> ext_mul(ExteriorMonomial a, ExteriorMonomial b) {
    if (a.bits & b.bits) return std::nullopt;
    return SignedMonomial{merge_sign(a.bits, b.bits), ExteriorMonomial{a.bits | b.bits}};
}

int GradingMap::degree_of_generator(unsigned index) const {
    switch (family_) {
        case Family::KStar:
            return index <= k_ ? 1 : 0;
        case Family::Infinity:
            return index % 2 == 0 ? 1 : 0;
        case Family::K:
            return index <= k_ ? 0 : 1;
    }
    return 0;
}

std::uint64_t GradingMap::degree_mask(unsigned rank) const {
    if (rank > ExteriorMonomial::kMaxRank) throw std::out_of_range("rank too large");
    std::uint64_t all = rank == 0 ? 0 : (~std::uint64_t{0} >> (64 - rank));
    switch (family_) {
        case Family::KStar:
            return all & (k_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << std::min(k_, rank)) - 1));
        case Family::Infinity: {
            std::uint64_t even = 0xAAAAAAAAAAAAAAAAull;  // bits 1,3,5,... <-> indices 2,4,6,...
            return all & even;
        }
        case Family::K:
            return all & ~((k_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << std::min(k_, rank)) - 1));
    }
    return 0;
}

std::string GradingMap::str() const {
    switch (family_) {
        case Family::KStar:
            return std::to_string(k_) + "*";
        case Family::Infinity:
            return "inf";
        case Family::K:
            return std::to_string(k_);
    }
    return "?";
}

int monomial_degree(ExteriorMonomial m, const GradingMap& g) {
    unsigned rank = m.max_index();
    if (rank == 0) return 0;
    return __builtin_popcountll(m.bits & g.degree_mask(rank)) & 1;
}

}  // namespace grassten
