#include "grassten/scalar.hpp"

#include <atomic>
#include <numeric>

namespace grassten {

namespace {

std::atomic<std::uint32_t> g_char{0};

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

void set_field_char(std::uint32_t p) {
    if (p != 0 && !is_odd_prime(p))
        throw std::invalid_argument("field characteristic must be 0 or an odd prime");
    g_char.store(p, std::memory_order_relaxed);
}

std::uint32_t field_char() { return g_char.load(std::memory_order_relaxed); }

Scalar::Scalar(std::int64_t n) : num_(n), den_(1), char_(field_char()) {
    if (char_ != 0) {
        std::int64_t p = char_;
        num_ = ((n % p) + p) % p;
    }
}

Scalar::Scalar(std::int64_t num, std::int64_t den) : num_(num), den_(den), char_(field_char()) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (char_ != 0) {
        *this = Scalar(num) / Scalar(den);
        return;
    }
    reduce();
}

void Scalar::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (char_ == 0) {
        r.num_ = -num_;
    } else {
        r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(char_) - num_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (char_ != 0) {
        num_ = (num_ + o.num_) % char_;
        return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    num_ = narrow(n);
    den_ = narrow(d);
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (char_ != 0) {
        num_ = static_cast<std::int64_t>(
            static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_) % char_);
        return *this;
    }
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    num_ = narrow(n);
    den_ = narrow(d);
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
    if (num_ == 0) throw std::domain_error("division by zero");
    Scalar r = *this;
    if (char_ == 0) {
        std::swap(r.num_, r.den_);
        r.reduce();
    } else {
        r.num_ = static_cast<std::int64_t>(
            mod_pow(static_cast<std::uint64_t>(num_), char_ - 2, char_));
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check(o);
    return num_ == o.num_ && den_ == o.den_;
}

bool Scalar::operator<(const Scalar& o) const {
    check(o);
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

std::string Scalar::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(std::stoll(text));
        return Scalar(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad scalar literal: " + text);
    }
}

Scalar factorial(unsigned n) {
    Scalar r = Scalar::one();
    for (unsigned i = 2; i <= n; ++i) r *= Scalar(static_cast<std::int64_t>(i));
    return r;
}

}  // namespace grassten
