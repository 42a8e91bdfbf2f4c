#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "llab/mat.hpp"
#include "llab/schemes.hpp"

namespace llab {

// A degree-d chain of vector spaces joined by transfer maps in both
// directions, with marked kernel subspaces and a chosen (r+1)-dimensional
// space of sections at every level.
//
//   up[i]   : level i   -> level i+1   (kernel Z0[i],   image inside Y0[i+1])
//   down[i] : level i+1 -> level i     (kernel Y0[i+1], image inside Z0[i])
//
// Compositions both ways vanish, each V[i] has dimension r+1 and is carried
// into its neighbours by the maps, Y0 and Z0 meet trivially at every level,
// and the chain is anchored by V[0] meeting Y0[0] trivially and V[d] meeting
// Z0[d] trivially.
struct ExplicitLimitSeries {
    long d = 0;
    long r = 0;
    std::vector<long> ambient; // d+1 dimensions N_i
    std::vector<Mat> up;       // d maps, up[i] is N_{i+1} x N_i
    std::vector<Mat> down;     // d maps, down[i] is N_i x N_{i+1}
    std::vector<Subspace> Y0;  // d+1
    std::vector<Subspace> Z0;  // d+1
    std::vector<Subspace> V;   // d+1
};

struct ValidationIssue {
    std::string category; // shape, dimension, linkage, composition, kernel,
                          // image, marked, boundary
    std::string detail;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
    bool valid = false;
    std::vector<ValidationIssue> issues;
};

// Checks every axiom and reports each violation with its category. A shape
// violation (mismatched sizes or dimensions) stops the deeper checks, which
// would not be well posed.
ValidationReport validate(const ExplicitLimitSeries& ls);

// y[i] = dim(V[i] meet Y0[i]), z[i] = dim(V[i] meet Z0[i]).
struct BoundaryDims {
    std::vector<long> y;
    std::vector<long> z;
};

BoundaryDims boundary_dims(const ExplicitLimitSeries& ls);

// The two intersection subspaces at every level.
struct BoundarySubspaces {
    std::vector<Subspace> vy; // V[i] meet Y0[i]
    std::vector<Subspace> vz; // V[i] meet Z0[i]
};

BoundarySubspaces boundary_subspaces(const ExplicitLimitSeries& ls);

// Exactness of the chain of section spaces, decided two independent ways
// that provably agree on valid series:
//   by_subspace : Im(up[i]|V[i]) = V[i+1] meet Y0[i+1] and
//                 Im(down[i]|V[i+1]) = V[i] meet Z0[i] for every link;
//   by_dimension: z[i] + y[i+1] = r+1 for every link (valid series always
//                 satisfy >=).
struct ExactnessReport {
    bool exact = false;
    bool by_subspace = false;
    bool by_dimension = false;
    std::vector<long> failing_links; // links i where the dimension test fails
};

// Requires a valid series (input error otherwise).
ExactnessReport is_exact(const ExplicitLimitSeries& ls);

// Moves a level-`from` vector to level `to` through the chain maps.
std::vector<Rat> transport(const ExplicitLimitSeries& ls, long from, long to,
                           std::vector<Rat> v);

// Canonical diagonal data of a valid exact series. At level i the subspace
// W_i = (V_i meet Y0_i) + (V_i meet Z0_i) is extended to V_i by c_i new
// sections picked greedily from V_i's canonical basis (lowest pivot first),
// so the output is deterministic. The c_i sum to r+1; level i is listed
// c_i times in jump_indices.
struct Diagonalization {
    std::vector<long> counts;       // c_i, one per level
    std::vector<long> jump_indices; // ascending, r+1 entries
    std::vector<long> jumps;        // distinct levels with c_i > 0
    std::vector<long> mults;        // run length minus one per distinct jump
    std::vector<Mat> sections;      // sections[i] is c_i x N_i
};

Diagonalization diagonalize(const ExplicitLimitSeries& ls);

// Levels whose stratum is nonempty: { i : y_i <= r and z_i <= r }. The set
// is always a contiguous interval on valid series; empty means a degenerate
// series and raises an input error.
struct LevelRange {
    long lo = 0;
    long hi = 0;
};

LevelRange empty_range(const ExplicitLimitSeries& ls);

// Determinantal scheme attached to level i of a valid exact series:
// p = y_i, q = z_i, m = r - p - q (m = -1 signals the full product).
// Raises an input error outside [0, d] or when level i's stratum is empty.
MinorScheme pg_component(const ExplicitLimitSeries& ls, long i);

// Union spec assembled from the diagonal multiplicities; always full.
UnionSpec pg_union(const ExplicitLimitSeries& ls);

// Deterministically builds a valid exact series realizing the requested
// jump indices (nondecreasing, r+1 values in [0, d]): a standard-position
// chain of marked slots padded by extra kernel directions, conjugated at
// every level by a seeded random change of basis.
ExplicitLimitSeries generate_exact(std::uint64_t seed, long r, long d,
                                   const std::vector<long>& jump_indices);

} // namespace llab
