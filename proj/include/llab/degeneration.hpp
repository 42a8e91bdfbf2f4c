#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "llab/mat.hpp"
#include "llab/rat.hpp"
#include "llab/rng.hpp"
#include "llab/schemes.hpp"

namespace llab {

// One bidegree-(1,1) generator of the family ideal over the z-line:
// x_i y_j - z^zpow x_j y_i with i < j. Same-block pairs have zpow = 0.
struct FamilyGenerator {
    long i = 0;
    long j = 0;
    long zpow = 0;

    friend bool operator==(const FamilyGenerator&, const FamilyGenerator&) = default;
};

// Flat family in P^r x P^r over the affine z-line: the general fiber is the
// diagonal (all plain minors, z = 1), the special fiber z = 0 is the chain
// union described by the block data. The weight of coordinate j is
// n - block(j), so weights decrease along later blocks.
struct DegenerationFamily {
    UnionSpec spec;
    std::vector<long> eps;            // coordinate weights, size r+1
    std::vector<FamilyGenerator> gens; // all pairs i < j, lex order
};

// Requires a full spec: the blocks must cover every coordinate.
DegenerationFamily make_family(const UnionSpec& spec);

// Fiber generators at z = z0 as (r+1) x (r+1) coefficient matrices; entry
// (i, j) multiplies x_i y_j.
std::vector<Mat> specialize(const DegenerationFamily& fam, const Rat& z0);

// Value of one generator at z = z0 on the point (x, y).
Rat eval_generator(const FamilyGenerator& g, const Rat& z0, const std::vector<Rat>& x,
                   const std::vector<Rat>& y);

// Whether the z = 0 fiber of the generator vanishes identically on
// component k, decided symbolically through the component's
// parameterization pullback.
bool generator_vanishes_symbolically(const UnionSpec& spec, long k, const FamilyGenerator& g);

// The arc through a generic point of component k: coordinates c_j z^{e_j} on
// the x side and c_j z^{f_j} on the y side stay on the family for every z,
// and the z -> 0 limit (divide each side by its lowest present power)
// recovers the point.
struct MovingPoint {
    std::vector<Rat> c;
    std::vector<long> x_powers; // e_j
    std::vector<long> y_powers; // f_j
    std::vector<Rat> x_limit;
    std::vector<Rat> y_limit;
};

// Requires (x, y) on component k with nonzero block parts on both sides
// (the construction pivots on a block anchor); input error otherwise.
MovingPoint limit_of_point(const DegenerationFamily& fam, const std::vector<Rat>& x,
                           const std::vector<Rat>& y, long k);

// Seeded random point of component k with nonzero block parts: zero head /
// random tail on the x side, random head / zero tail on the y side, and a
// shared block direction scaled independently on each side.
std::pair<std::vector<Rat>, std::vector<Rat>> random_point_on_component(
    const DegenerationFamily& fam, long k, Rng& rng);

struct SampleReport {
    long samples = 0;
    std::vector<long> per_component;
    bool generators_vanish = true; // all z = 0 generators vanish at every sample
    bool limits_match = true;      // limit_of_point returns every sample point
    bool pass() const { return generators_vanish && limits_match; }
};

// Draws `samples` seeded random points on random components and checks both
// membership facts numerically.
SampleReport sample_containment(const DegenerationFamily& fam, std::uint64_t seed, long samples);

} // namespace llab
