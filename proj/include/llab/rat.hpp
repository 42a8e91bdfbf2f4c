#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "llab/error.hpp"

namespace llab {

using Int = boost::multiprecision::mpz_int;

// Exact rational number. Always in lowest terms with positive denominator
// (the GMP backend canonicalizes after every operation). No rounding ever.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(n) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = boost::multiprecision::mpq_rational(num) /
             boost::multiprecision::mpq_rational(den);
    }
    Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

    Int num() const { return numerator(v_); }
    Int den() const { return denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator(v_) == 1; }
    int sgn() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Serialized form "p/q", with "/q" omitted when q = 1.
    std::string to_string() const;
    // Strict inverse of to_string: optional '-', digits, optional "/digits".
    static Rat parse(const std::string& text);

    static Rat abs(const Rat& a) { return a.sgn() < 0 ? -a : a; }
    static Rat pow(const Rat& base, unsigned long exp);

private:
    explicit Rat(boost::multiprecision::mpq_rational v) : v_(std::move(v)) {}
    boost::multiprecision::mpq_rational v_;
};

// Integer binomial C(n, k); zero for k < 0 or n < k when n >= 0; for negative
// n uses the polynomial convention C(n,k) = n(n-1)...(n-k+1)/k!.
Int binom_int(const Int& n, long k);

// Number of degree-deg monomials in nvars variables (stars and bars,
// with the 0-variable convention: 1 if deg = 0 else 0).
Int count_monomials(long deg, long nvars);

} // namespace llab
