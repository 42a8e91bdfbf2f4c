#pragma once

#include <map>
#include <string>
#include <utility>

#include "llab/rat.hpp"

namespace llab {

// Exact bivariate polynomial in formal variables (s,t). Terms map exponent
// pairs to nonzero rational coefficients; the map is the canonical form, so
// equality is data equality.
class BivarPoly {
public:
    using Key = std::pair<long, long>; // (s-exponent, t-exponent)

    BivarPoly() = default;
    static BivarPoly constant(const Rat& c);
    static BivarPoly monomial(long i, long j, const Rat& c);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long total_degree() const; // -1 for the zero polynomial

    Rat coeff(long i, long j) const;
    void add_term(long i, long j, const Rat& c);

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { a += b; return a; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { a -= b; return a; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    BivarPoly scaled(const Rat& c) const;

    Rat evaluate(const Rat& s, const Rat& t) const;

    friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

    // Human-readable form like "1/2*s^2 + s*t + 1", lex order on (i,j).
    std::string to_string() const;

private:
    std::map<Key, Rat> terms_;
};

enum class BinomVar { s, t, st }; // st means the combined variable s+t

// The degree-k polynomial binom(v + shift, k) in the chosen variable(s),
// expanded with exact rational coefficients. Matches the integer binomial at
// every integer point.
BivarPoly binom_poly(BinomVar var, long shift, long k);

// Unique polynomial of total degree <= degree_bound through the grid, via
// the two-variable Newton forward-difference scheme. The grid must cover
// [0, degree_bound]^2; every supplied point is then verified against the
// result and any mismatch (non-polynomial data) raises an input error.
BivarPoly interpolate_grid(const std::map<std::pair<long, long>, Rat>& values,
                           long degree_bound);

} // namespace llab
