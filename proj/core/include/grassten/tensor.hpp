#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "grassten/grassmann.hpp"
#include "grassten/scalar.hpp"

namespace grassten {

/// Element (i,j) of Z2 x Z2.
struct BiDegree {
    int left = 0;
    int right = 0;

    BiDegree operator+(BiDegree o) const { return {(left + o.left) & 1, (right + o.right) & 1}; }
    bool operator==(BiDegree o) const { return left == o.left && right == o.right; }
    bool operator!=(BiDegree o) const { return !(*this == o); }

    /// Bicharacter pairing: parity of left*left' + right*right'. Two basis
    /// elements with disjoint supports commute iff the pairing is 0 and
    /// anticommute iff it is 1.
    int pairing(BiDegree o) const { return (left * o.left + right * o.right) & 1; }

    std::string str() const {
        return "(" + std::to_string(left) + "," + std::to_string(right) + ")";
    }
};

/// Basis element (left) tensor (right) of the tensor square, i.e. an ascending
/// product of the atoms e_i(x)1 (all left generators) and 1(x)e_j.
struct BasisElement {
    ExteriorMonomial left;
    ExteriorMonomial right;

    static BasisElement unit() { return {}; }

    bool is_unit() const { return left.is_unit() && right.is_unit(); }
    unsigned support_size() const { return left.length() + right.length(); }

    bool operator==(const BasisElement& o) const { return left == o.left && right == o.right; }
    bool operator!=(const BasisElement& o) const { return !(*this == o); }
    bool operator<(const BasisElement& o) const {
        if (left != o.left) return left < o.left;
        return right < o.right;
    }

    /// "e1e2(x)e3"; empty factors render as "1".
    std::string str() const { return left.str() + "(x)" + right.str(); }
};

/// Atom set of a basis element, tagged by tensor side.
struct Support {
    std::uint64_t left = 0;
    std::uint64_t right = 0;

    bool empty() const { return left == 0 && right == 0; }
    bool intersects(const Support& o) const { return (left & o.left) || (right & o.right); }
    Support united(const Support& o) const { return {left | o.left, right | o.right}; }
    bool operator==(const Support& o) const { return left == o.left && right == o.right; }
};

inline Support support(const BasisElement& b) { return {b.left.bits, b.right.bits}; }

/// g(b) = (|left| mod 2, |right| mod 2).
inline BiDegree bidegree(const BasisElement& b) {
    return {static_cast<int>(b.left.length() & 1), static_cast<int>(b.right.length() & 1)};
}

struct SignedBasisElement {
    int sign;
    BasisElement element;
};

/// Ordinary tensor-product multiplication: (a(x)b)(c(x)d) = ac(x)bd, per-factor
/// exterior signs, zero exactly on overlapping supports.
std::optional<SignedBasisElement> mul_basis(const BasisElement& a, const BasisElement& b);

/// Z2-degree assignment on the tensor square: either induced by a pair of
/// generator degree maps, or one of the three quotients of the Z2xZ2-grading:
///   quotient 1: even part A_(0,0) + A_(1,1)   (the canonical grading)
///   quotient 2: even part A_(0,0) + A_(1,0)
///   quotient 3: even part A_(0,0) + A_(0,1)
class GradingScheme {
public:
    struct Tensor {
        GradingMap left;
        GradingMap right;
    };

    static GradingScheme tensor(GradingMap left, GradingMap right) {
        return GradingScheme(Tensor{left, right});
    }
    static GradingScheme quotient(int variant);

    bool is_tensor() const { return std::holds_alternative<Tensor>(v_); }
    bool is_quotient() const { return !is_tensor(); }
    const Tensor& tensor_maps() const { return std::get<Tensor>(v_); }
    int quotient_variant() const { return std::get<int>(v_); }

    /// Degree of a bidegree class under a quotient grading.
    int alpha_of_bidegree(BiDegree g) const;
    /// True iff alpha is a function of the bidegree alone (quotient schemes).
    bool alpha_factors_through_bidegree() const { return is_quotient(); }

    int alpha(const BasisElement& b) const;

    bool operator==(const GradingScheme& o) const;
    std::string str() const;

    /// Parses "Q1"|"Q2"|"Q3"|"E(<k>*|inf|<k>)xE(...)".
    static GradingScheme parse(const std::string& spec);

private:
    explicit GradingScheme(Tensor t) : v_(t) {}
    explicit GradingScheme(int q) : v_(q) {}
    std::variant<Tensor, int> v_;
};

/// Finite linear combination of basis elements; zero coefficients are absent.
class TensorElement {
public:
    using Terms = std::map<BasisElement, Scalar>;

    TensorElement() = default;
    static TensorElement zero() { return {}; }
    static TensorElement unit() { return basis(BasisElement::unit()); }
    static TensorElement basis(const BasisElement& b, Scalar c = Scalar::one());

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const BasisElement& b, const Scalar& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement operator-() const;

    TensorElement& operator*=(const Scalar& c);
    friend TensorElement operator*(TensorElement a, const Scalar& c) { return a *= c; }
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    /// True iff every term is homogeneous of the same alpha-degree d.
    bool is_homogeneous(const GradingScheme& s, int d) const;

    /// Projection onto the terms with the given bidegree.
    TensorElement bidegree_component(BiDegree g) const;

    std::string str() const;

private:
    Terms terms_;
};

TensorElement commutator(const TensorElement& a, const TensorElement& b);
TensorElement jordan(const TensorElement& a, const TensorElement& b);

}  // namespace grassten
