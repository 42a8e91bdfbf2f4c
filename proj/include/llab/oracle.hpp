#pragma once

#include <functional>
#include <vector>

#include "llab/bivar_poly.hpp"
#include "llab/rat.hpp"
#include "llab/schemes.hpp"

namespace llab {

// Largest bigraded monomial basis the brute-force rank computations accept.
inline constexpr long kMonomialGuard = 1000000;

// Hilbert function of the quotient by the given generators in the given
// product ambient, at bidegree (s, t). Computes the exact rank of the span of
// all generator multiples: binomial minors give monomial identifications,
// linear generators kill monomials, so the rank is tracked by a union-find
// over the monomial basis plus a zero node.
Int hf_generators(const BiAmbient& amb, const IdealGenerators& gens, long s, long t);

// Same value by dense row reduction over Q; small inputs only (cross-check).
Int hf_generators_dense(const BiAmbient& amb, const IdealGenerators& gens, long s, long t);

// Counting oracle for the minor scheme: splits a monomial into its pure
// x-tail degree a, pure y-head degree b, and a standard block monomial, the
// block classes of joint degree (s-a)+(t-b) being counted by m+1 variables.
// Accepts m = -1 (empty block forces a = s, b = t).
Int hf_minor_combinatorial(const MinorScheme& sch, long s, long t);

// Rank oracle for the minor scheme via hf_generators on its intrinsic ideal.
Int hf_linear_algebra(const MinorScheme& sch, long s, long t);

// Hilbert function of the reduced union: rank of the evaluation map sending
// each bidegree-(s, t) monomial of P^r x P^r to the tuple of its pullbacks
// along every component's parameterization.
Int hf_union(const UnionSpec& spec, long s, long t);

struct Mismatch {
    long s = 0;
    long t = 0;
    Int expected; // oracle value
    Rat got;      // closed-form value

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct CertifyResult {
    bool pass = false;
    std::vector<Mismatch> mismatches;
};

// Checks the closed form against the oracle on the full grid [0, G]^2.
// Requires G at least the total degree of the closed form, so agreement on
// the grid determines the polynomial.
CertifyResult certify(const BivarPoly& closed_form, long grid_bound,
                      const std::function<Int(long, long)>& oracle);

} // namespace llab
