#pragma once

#include <optional>
#include <vector>

#include "llab/rng.hpp"

namespace llab {

// A vanishing sequence for degree d: strictly increasing values in [0, d],
// at least one entry. Raises an input error otherwise.
void check_vanishing_sequence(long d, const std::vector<long>& a);

struct PieceDims {
    long dim_y = 0;
    long dim_z = 0;

    long total() const { return dim_y + dim_z; }
    friend bool operator==(const PieceDims&, const PieceDims&) = default;
};

// Dimensions of the degree-split piece at ell in [0, d]: the Y side counts
// entries of aY that are >= d - ell, the Z side entries of aZ that are
// >= ell; the piece is empty (nullopt) when either count vanishes, else a
// product of projective spaces of dimensions (countY - 1, countZ - 1).
std::optional<PieceDims> piece_dims(long d, const std::vector<long>& a_y,
                                    const std::vector<long>& a_z, long ell);

// A component of the fiber: a maximal run of splits sharing one dimension
// pair. ell_lo is the canonical representative.
struct FiberComponent {
    long ell_lo = 0;
    long ell_hi = 0;
    PieceDims dims;

    friend bool operator==(const FiberComponent&, const FiberComponent&) = default;
};

// Component list by scanning all pieces: nonempty pieces grouped into runs
// of equal dimensions, keeping the runs maximal under the componentwise
// order on (dim_y, dim_z).
std::vector<FiberComponent> components_by_maximality(long d, const std::vector<long>& a_y,
                                                     const std::vector<long>& a_z);

// Component list by exact-hit witnesses: indices i, j with
// aY[i] = d - ell_lo, aZ[j] = ell_hi, ell_lo <= ell_hi,
// aY[i-1] < d - ell_hi and aZ[j-1] < ell_lo (out-of-range entries read as
// -infinity). Each witness marks the run [ell_lo, ell_hi] with dimensions
// (|aY| - i - 1, |aZ| - j - 1).
std::vector<FiberComponent> components_by_witness(long d, const std::vector<long>& a_y,
                                                  const std::vector<long>& a_z);

// Both methods, which provably coincide; the agreement is re-checked here.
std::vector<FiberComponent> components(long d, const std::vector<long>& a_y,
                                       const std::vector<long>& a_z);

struct EhResult {
    bool exists = false;
    std::vector<long> witness_y; // r+1 chosen values, increasing
    std::vector<long> witness_z;
};

// Whether (r+1)-term subsequences bY of aY and bZ of aZ exist with
// bY[s] + bZ[r-s] >= d for every s. The top r+1 entries of each sequence
// are the dominant choice, so checking them decides the question; they are
// returned as the witness on success.
EhResult eh_exists_greedy(long d, long r, const std::vector<long>& a_y,
                          const std::vector<long>& a_z);

// Same question by exhausting all subsequence pairs (small inputs).
bool eh_exists_brute(long d, long r, const std::vector<long>& a_y,
                     const std::vector<long>& a_z);

// Greedy answer, cross-checked against the exhaustive search whenever the
// pair count is small enough to enumerate.
EhResult eh_exists(long d, long r, const std::vector<long>& a_y,
                   const std::vector<long>& a_z);

// Existence of sections forces every fiber component to have dimension at
// least r; the converse can fail, which is the interesting direction.
struct NoGrdsReport {
    bool eh = false;
    bool fiber_empty = false;
    long min_dim = -1; // over components; -1 when the fiber is empty
    bool consistent = false;        // eh implies a nonempty fiber with min_dim >= r
    bool converse_failure = false;  // min_dim >= r yet no sections exist
};

NoGrdsReport no_grds_check(long d, long r, const std::vector<long>& a_y,
                           const std::vector<long>& a_z);

struct FiberProblem {
    long d = 0;
    long r = 0;
    std::vector<long> a_y;
    std::vector<long> a_z;
};

// Seeded random instance: d in [1, max_d], r in [1, max_r], both sequences
// nonempty random subsets of [0, d].
FiberProblem random_fiber_problem(Rng& rng, long max_d, long max_r);

} // namespace llab
