#pragma once

#include <optional>
#include <string>
#include <vector>

#include "llab/bivar_poly.hpp"

namespace llab {

// Determinantal scheme descriptor. For m >= 0 it is the subscheme of
// P^{m+q} x P^{m+p} cut by the 2x2 minors x_i y_j - x_j y_i over
// p <= i < j <= m+p, with x-coordinates indexed p..m+p+q and y-coordinates
// 0..m+p. m = -1 denotes the degenerate full product P^{q-1} x P^{p-1}.
struct MinorScheme {
    long p = 0;
    long q = 0;
    long m = 0;

    friend bool operator==(const MinorScheme&, const MinorScheme&) = default;
};

// Chain of blocks inside P^r x P^r: multiplicities m_0..m_n with offsets
// p_0 = 0, p_i = p_{i-1} + m_{i-1} + 1 and complements q_i = r - m_i - p_i.
struct UnionSpec {
    long r = 0;
    std::vector<long> mults;
    std::vector<long> p_seq;
    std::vector<long> q_seq;
    bool full = false; // p_n + m_n = r

    long n() const { return static_cast<long>(mults.size()) - 1; }

    friend bool operator==(const UnionSpec&, const UnionSpec&) = default;
};

struct Coordinate {
    char axis = 'x'; // 'x' or 'y'
    long index = 0;

    std::string name() const { return std::string(1, axis) + std::to_string(index); }
    friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

struct MinorPair {
    long i = 0;
    long j = 0; // generator x_i y_j - x_j y_i, i < j

    friend bool operator==(const MinorPair&, const MinorPair&) = default;
};

struct IdealGenerators {
    std::vector<Coordinate> linear; // coordinates set to zero
    std::vector<MinorPair> minors;  // one per unordered pair, i < j

    friend bool operator==(const IdealGenerators&, const IdealGenerators&) = default;
};

// Coordinate index lists of a product of projective spaces.
struct BiAmbient {
    std::vector<long> x_indices;
    std::vector<long> y_indices;
};

// Validates the block constraint Sum(m_i + 1) <= r+1 and derives the offset
// sequences and the fullness flag.
UnionSpec make_union_spec(long r, const std::vector<long>& mults);

// Closed-form bivariate Hilbert polynomial of the minor scheme; requires
// m >= 0 (the m = -1 case is hilbert_product's).
BivarPoly hilbert_minor(const MinorScheme& sch);

// Full-product case m = -1: binom(s+q-1, q-1) * binom(t+p-1, p-1).
BivarPoly hilbert_product(const MinorScheme& sch);

// Dispatch on m.
BivarPoly hilbert_poly(const MinorScheme& sch);

// Closed-form bivariate Hilbert polynomial of the union.
BivarPoly hilbert_union(const UnionSpec& spec);

struct ComponentEmbedding {
    MinorScheme scheme;
    std::vector<Coordinate> vanishing; // embedding into P^r x P^r
};

// The n+1 component schemes with their linear embeddings
// V(x_0..x_{p_i-1}, y_{m_i+p_i+1}..y_r).
std::vector<ComponentEmbedding> component_schemes(const UnionSpec& spec);

// Intersection of component k with the union of its predecessors:
// V(x_0..x_{p_k-1}, y_{p_k}..y_r), a product P^{r-p_k} x P^{p_k-1}.
struct ProductSpace {
    long dim_x = 0;
    long dim_y = 0;
    std::vector<Coordinate> vanishing;

    BivarPoly hilbert() const;
};

ProductSpace consecutive_intersection(const UnionSpec& spec, long n_index);

// Intrinsic minor ideal of Q_{p,q,m} in its own ambient space.
IdealGenerators minor_generators(const MinorScheme& sch);

// Ideal of component k of the union inside P^r x P^r: the embedding's
// vanishing coordinates plus the block's minors.
IdealGenerators embedded_generators(const UnionSpec& spec, long k);

// Ambient coordinate lists: intrinsic for a minor scheme, and P^r x P^r.
BiAmbient ambient_of(const MinorScheme& sch);
BiAmbient ambient_pr_r(long r);

// Block index of coordinate j under a full spec (the unique k with
// p_k <= j <= p_k + m_k).
long block_of(const UnionSpec& spec, long j);

// Variables of the parameterization of component k inside P^r x P^r:
//   x_j = 0 (j < p_k), alpha * v_{j-p_k} (block), free (j > p_k+m_k)
//   y_j = free (j < p_k), beta * v_{j-p_k} (block), 0 (j > p_k+m_k)
// Monomials in these variables are encoded as sorted (var id, exponent)
// lists; a variable id is one of alpha, beta, v_u, xtail_j, ytail_j.
struct ParamVar {
    enum class Kind { alpha, beta, v, xtail, ytail };
    Kind kind;
    long index = 0;

    friend auto operator<=>(const ParamVar&, const ParamVar&) = default;
};

using ParamMonomial = std::vector<std::pair<ParamVar, long>>; // sorted by var

// Pullback of the single coordinate to component k's parameterization:
// nullopt when the coordinate vanishes identically on the component.
std::optional<ParamMonomial> coordinate_pullback(const UnionSpec& spec, long k,
                                                 const Coordinate& c);

ParamMonomial param_product(const ParamMonomial& a, const ParamMonomial& b);

} // namespace llab
