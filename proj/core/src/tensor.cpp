#include "grassten/tensor.hpp"

#include <stdexcept>

namespace grassten {

std::optional<SignedBasisElement> mul_basis(const BasisElement& a, const BasisElement& b) {
    if ((a.left.bits & b.left.bits) || (a.right.bits & b.right.bits)) return std::nullopt;
    int sign = merge_sign(a.left.bits, b.left.bits) * merge_sign(a.right.bits, b.right.bits);
    return SignedBasisElement{
        sign, BasisElement{ExteriorMonomial{a.left.bits | b.left.bits},
                           ExteriorMonomial{a.right.bits | b.right.bits}}};
}

GradingScheme GradingScheme::quotient(int variant) {
    if (variant < 1 || variant > 3) throw std::invalid_argument("quotient variant must be 1, 2 or 3");
    return GradingScheme(variant);
}

int GradingScheme::alpha_of_bidegree(BiDegree g) const {
    switch (quotient_variant()) {
        case 1:
            return (g.left + g.right) & 1;
        case 2:
            return g.right;
        case 3:
            return g.left;
    }
    return 0;
}

int GradingScheme::alpha(const BasisElement& b) const {
    if (is_quotient()) return alpha_of_bidegree(bidegree(b));
    const Tensor& t = tensor_maps();
    return (monomial_degree(b.left, t.left) + monomial_degree(b.right, t.right)) & 1;
}

bool GradingScheme::operator==(const GradingScheme& o) const {
    if (is_quotient() != o.is_quotient()) return false;
    if (is_quotient()) return quotient_variant() == o.quotient_variant();
    return tensor_maps().left == o.tensor_maps().left && tensor_maps().right == o.tensor_maps().right;
}

std::string GradingScheme::str() const {
    if (is_quotient()) return "Q" + std::to_string(quotient_variant());
    return "E(" + tensor_maps().left.str() + ")xE(" + tensor_maps().right.str() + ")";
}

namespace {

GradingMap parse_map(const std::string& s) {
    if (s == "inf") return GradingMap::infinity();
    if (!s.empty() && s.back() == '*') {
        return GradingMap::k_star(static_cast<unsigned>(std::stoul(s.substr(0, s.size() - 1))));
    }
    return GradingMap::k(static_cast<unsigned>(std::stoul(s)));
}

}  // namespace

GradingScheme GradingScheme::parse(const std::string& spec) {
    if (spec == "Q1") return quotient(1);
    if (spec == "Q2") return quotient(2);
    if (spec == "Q3") return quotient(3);
    // E(<spec>)xE(<spec>)
    auto bad = [&]() -> GradingScheme {
        throw std::invalid_argument("bad scheme spec: " + spec + " (expected Q1|Q2|Q3|E(..)xE(..))");
    };
    if (spec.size() < 9 || spec.substr(0, 2) != "E(") return bad();
    std::size_t close1 = spec.find(')');
    if (close1 == std::string::npos) return bad();
    if (spec.substr(close1, 4) != ")xE(") return bad();
    std::size_t close2 = spec.find(')', close1 + 4);
    if (close2 == std::string::npos || close2 + 1 != spec.size()) return bad();
    try {
        GradingMap l = parse_map(spec.substr(2, close1 - 2));
        GradingMap r = parse_map(spec.substr(close1 + 4, close2 - close1 - 4));
        return tensor(l, r);
    } catch (const std::invalid_argument&) {
        return bad();
    } catch (const std::out_of_range&) {
        return bad();
    }
}

TensorElement TensorElement::basis(const BasisElement& b, Scalar c) {
    TensorElement e;
    e.add_term(b, c);
    return e;
}

void TensorElement::add_term(const BasisElement& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [b1, c1] : a.terms()) {
        for (const auto& [b2, c2] : b.terms()) {
            auto m = mul_basis(b1, b2);
            if (!m) continue;
            Scalar c = c1 * c2;
            if (m->sign < 0) c = -c;
            r.add_term(m->element, c);
        }
    }
    return r;
}

bool TensorElement::is_homogeneous(const GradingScheme& s, int d) const {
    for (const auto& [b, c] : terms_)
        if (s.alpha(b) != d) return false;
    return true;
}

TensorElement TensorElement::bidegree_component(BiDegree g) const {
    TensorElement r;
    for (const auto& [b, c] : terms_)
        if (bidegree(b) == g) r.terms_.emplace(b, c);
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (c.is_one()) {
            s += b.str();
        } else {
            s += c.str() + "*" + b.str();
        }
    }
    return s;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
    return a * b - b * a;
}

TensorElement jordan(const TensorElement& a, const TensorElement& b) {
    return a * b + b * a;
}

}  // namespace grassten
