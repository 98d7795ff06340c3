#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grassten/scalar.hpp"
#include "grassten/tensor.hpp"

namespace grassten {

/// Variable of the free 2-graded algebra: y_i are even, z_i are odd.
struct Variable {
    enum class Parity : std::uint8_t { Y = 0, Z = 1 };

    Parity parity = Parity::Y;
    std::uint32_t index = 1;

    static Variable y(std::uint32_t i) { return {Parity::Y, i}; }
    static Variable z(std::uint32_t i) { return {Parity::Z, i}; }

    bool is_even() const { return parity == Parity::Y; }

    bool operator==(const Variable& o) const { return parity == o.parity && index == o.index; }
    bool operator!=(const Variable& o) const { return !(*this == o); }
    bool operator<(const Variable& o) const {
        if (parity != o.parity) return parity < o.parity;
        return index < o.index;
    }

    std::string str() const { return (is_even() ? "y" : "z") + std::to_string(index); }
};

using Word = std::vector<Variable>;

std::string word_str(const Word& w);

/// Degree of each occurring variable.
using MultiDegree = std::map<Variable, unsigned>;

MultiDegree word_multidegree(const Word& w);

/// Polynomial of the free algebra as a canonical word -> coefficient map.
class GradedPolynomial {
public:
    using Terms = std::map<Word, Scalar>;

    GradedPolynomial() = default;
    static GradedPolynomial zero() { return {}; }
    static GradedPolynomial constant(const Scalar& c);
    static GradedPolynomial variable(Variable v);
    static GradedPolynomial word(const Word& w, Scalar c = Scalar::one());

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Word& w, const Scalar& c);

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
    GradedPolynomial operator-() const;
    GradedPolynomial& operator*=(const Scalar& c);
    friend GradedPolynomial operator*(const Scalar& c, GradedPolynomial a) { return a *= c; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);

    bool operator==(const GradedPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const GradedPolynomial& o) const { return !(*this == o); }

    std::set<Variable> variables() const;
    bool is_multihomogeneous() const;
    /// Requires a multihomogeneous nonzero input.
    MultiDegree multidegree() const;
    bool is_multilinear() const;
    unsigned total_degree() const;

    /// Replaces every occurrence of v by the given polynomial.
    GradedPolynomial substitute(Variable v, const GradedPolynomial& image) const;

    std::string str() const;

private:
    Terms terms_;
};

GradedPolynomial poly_commutator(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial poly_jordan(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial poly_pow(const GradedPolynomial& a, unsigned e);

/// Partition of the terms by multidegree vector; the parts sum to the input.
std::vector<GradedPolynomial> multihomogeneous_components(const GradedPolynomial& f);

struct Linearization {
    GradedPolynomial poly;
    /// Original variable -> its fresh copies (only variables of degree >= 2).
    std::map<Variable, std::vector<Variable>> copies;
};

/// Full linearization of a multihomogeneous polynomial: every variable of
/// degree d is replaced by d fresh variables of the same parity, occurrences
/// distributed over all bijections. Identifying the copies again yields
/// (prod d_i!) times the input. Throws on non-multihomogeneous input.
Linearization multilinearize(const GradedPolynomial& f);

/// Membership in the subalgebra generated by the odd variables and all
/// nontrivial commutators, decided by shift invariance: f is Y-proper iff
/// substituting y -> y + 1 leaves f unchanged for every even variable y.
bool is_Y_proper(const GradedPolynomial& f);

/// Evaluates f under variable -> element. Every occurring variable needs an
/// image; words multiply left to right.
TensorElement eval(const GradedPolynomial& f, const std::map<Variable, TensorElement>& images);

}  // namespace grassten
