#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grassten {

/// Session-wide coefficient field: characteristic 0 (exact rationals) or an
/// odd prime p (residues mod p). Set once before doing arithmetic; values
/// created under one field must not be mixed with values from another.
void set_field_char(std::uint32_t p);
std::uint32_t field_char();

class field_mismatch : public std::logic_error {
public:
    field_mismatch() : std::logic_error("scalar arithmetic across different fields") {}
};

/// Exact field element. In characteristic 0 a fully reduced fraction with
/// positive denominator; in characteristic p a residue in [0, p).
class Scalar {
public:
    Scalar() : Scalar(0) {}
    Scalar(std::int64_t n);                       // NOLINT: implicit by design
    Scalar(std::int64_t num, std::int64_t den);   // char 0 only unless den invertible

    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Order is structural (for use as map keys), not a field order.
    bool operator<(const Scalar& o) const;

    Scalar inverse() const;

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::uint32_t characteristic() const { return char_; }

    /// "3", "-5/2"; residues print as their canonical representative.
    std::string str() const;

    /// Parses what str() emits. Throws std::invalid_argument on bad input.
    static Scalar parse(const std::string& text);

private:
    void reduce();
    void check(const Scalar& o) const {
        if (char_ != o.char_) throw field_mismatch();
    }

    std::int64_t num_;
    std::int64_t den_;
    std::uint32_t char_;
};

/// n! in the current field.
Scalar factorial(unsigned n);

}  // namespace grassten
