#include "llab/schemes.hpp"

#include <algorithm>

#include "llab/error.hpp"

namespace llab {

UnionSpec make_union_spec(long r, const std::vector<long>& mults) {
    if (r < 0) throw input_error("invalid union spec: r must be nonnegative");
    if (mults.empty()) throw input_error("invalid union spec: needs at least one block");
    long used = 0;
    for (long m : mults) {
        if (m < 0) throw input_error("invalid union spec: multiplicities must be nonnegative");
        used += m + 1;
    }
    if (used > r + 1)
        throw input_error("invalid union spec: blocks need " + std::to_string(used) +
                          " coordinates but only " + std::to_string(r + 1) + " exist");
    UnionSpec spec;
    spec.r = r;
    spec.mults = mults;
    spec.p_seq.resize(mults.size());
    spec.q_seq.resize(mults.size());
    spec.p_seq[0] = 0;
    for (std::size_t i = 1; i < mults.size(); ++i)
        spec.p_seq[i] = spec.p_seq[i - 1] + mults[i - 1] + 1;
    for (std::size_t i = 0; i < mults.size(); ++i)
        spec.q_seq[i] = r - mults[i] - spec.p_seq[i];
    spec.full = spec.p_seq.back() + mults.back() == r;
    return spec;
}

BivarPoly hilbert_minor(const MinorScheme& sch) {
    if (sch.m < 0)
        throw input_error("hilbert_minor requires m >= 0; the degenerate case is a product");
    if (sch.p < 0 || sch.q < 0) throw input_error("hilbert_minor requires p, q >= 0");
    BivarPoly acc;
    for (long l = 0; l <= sch.m; ++l)
        acc += binom_poly(BinomVar::s, sch.q + l, sch.q + l) *
               binom_poly(BinomVar::t, sch.p + sch.m - l, sch.p + sch.m - l);
    for (long l = 0; l < sch.m; ++l)
        acc -= binom_poly(BinomVar::s, sch.q + l, sch.q + l) *
               binom_poly(BinomVar::t, sch.p + sch.m - 1 - l, sch.p + sch.m - 1 - l);
    return acc;
}

BivarPoly hilbert_product(const MinorScheme& sch) {
    if (sch.m != -1) throw input_error("hilbert_product requires m = -1");
    if (sch.p < 1 || sch.q < 1)
        throw input_error("hilbert_product requires p, q >= 1");
    return binom_poly(BinomVar::s, sch.q - 1, sch.q - 1) *
           binom_poly(BinomVar::t, sch.p - 1, sch.p - 1);
}

BivarPoly hilbert_poly(const MinorScheme& sch) {
    if (sch.m >= 0) return hilbert_minor(sch);
    if (sch.m == -1) return hilbert_product(sch);
    throw input_error("hilbert_poly requires m >= -1");
}

BivarPoly hilbert_union(const UnionSpec& spec) {
    const long top = spec.p_seq.back() + spec.mults.back();
    BivarPoly acc;
    for (long l = 0; l <= top; ++l)
        acc += binom_poly(BinomVar::s, spec.r - l, spec.r - l) *
               binom_poly(BinomVar::t, l, l);
    for (long l = 0; l < top; ++l)
        acc -= binom_poly(BinomVar::s, spec.r - 1 - l, spec.r - 1 - l) *
               binom_poly(BinomVar::t, l, l);
    return acc;
}

std::vector<ComponentEmbedding> component_schemes(const UnionSpec& spec) {
    std::vector<ComponentEmbedding> out;
    out.reserve(spec.mults.size());
    for (std::size_t i = 0; i < spec.mults.size(); ++i) {
        ComponentEmbedding ce;
        ce.scheme = MinorScheme{spec.p_seq[i], spec.q_seq[i], spec.mults[i]};
        for (long j = 0; j < spec.p_seq[i]; ++j) ce.vanishing.push_back({'x', j});
        for (long j = spec.p_seq[i] + spec.mults[i] + 1; j <= spec.r; ++j)
            ce.vanishing.push_back({'y', j});
        out.push_back(std::move(ce));
    }
    return out;
}

BivarPoly ProductSpace::hilbert() const {
    return binom_poly(BinomVar::s, dim_x, dim_x) * binom_poly(BinomVar::t, dim_y, dim_y);
}

ProductSpace consecutive_intersection(const UnionSpec& spec, long n_index) {
    if (n_index < 1 || n_index > spec.n())
        throw input_error("consecutive_intersection needs a component with a predecessor");
    ProductSpace ps;
    const long p = spec.p_seq[static_cast<std::size_t>(n_index)];
    ps.dim_x = spec.r - p;
    ps.dim_y = p - 1;
    for (long j = 0; j < p; ++j) ps.vanishing.push_back({'x', j});
    for (long j = p; j <= spec.r; ++j) ps.vanishing.push_back({'y', j});
    return ps;
}

IdealGenerators minor_generators(const MinorScheme& sch) {
    if (sch.m < -1) throw input_error("minor_generators requires m >= -1");
    IdealGenerators gens;
    for (long i = sch.p; i < sch.p + sch.m; ++i)
        for (long j = i + 1; j <= sch.p + sch.m; ++j) gens.minors.push_back({i, j});
    return gens;
}

IdealGenerators embedded_generators(const UnionSpec& spec, long k) {
    if (k < 0 || k > spec.n()) throw input_error("component index out of range");
    const auto comps = component_schemes(spec);
    IdealGenerators gens;
    gens.linear = comps[static_cast<std::size_t>(k)].vanishing;
    const long p = spec.p_seq[static_cast<std::size_t>(k)];
    const long m = spec.mults[static_cast<std::size_t>(k)];
    for (long i = p; i < p + m; ++i)
        for (long j = i + 1; j <= p + m; ++j) gens.minors.push_back({i, j});
    return gens;
}

BiAmbient ambient_of(const MinorScheme& sch) {
    if (sch.m < -1) throw input_error("ambient_of requires m >= -1");
    BiAmbient amb;
    for (long j = sch.p; j <= sch.m + sch.p + sch.q; ++j) amb.x_indices.push_back(j);
    for (long j = 0; j <= sch.m + sch.p; ++j) amb.y_indices.push_back(j);
    return amb;
}

BiAmbient ambient_pr_r(long r) {
    BiAmbient amb;
    for (long j = 0; j <= r; ++j) {
        amb.x_indices.push_back(j);
        amb.y_indices.push_back(j);
    }
    return amb;
}

long block_of(const UnionSpec& spec, long j) {
    if (!spec.full) throw input_error("block_of requires a full union spec");
    if (j < 0 || j > spec.r) throw input_error("coordinate index out of range");
    for (std::size_t k = 0; k < spec.mults.size(); ++k)
        if (j <= spec.p_seq[k] + spec.mults[k]) return static_cast<long>(k);
    throw input_error("coordinate index out of range");
}

std::optional<ParamMonomial> coordinate_pullback(const UnionSpec& spec, long k,
                                                 const Coordinate& c) {
    if (k < 0 || k > spec.n()) throw input_error("component index out of range");
    const long p = spec.p_seq[static_cast<std::size_t>(k)];
    const long m = spec.mults[static_cast<std::size_t>(k)];
    const long j = c.index;
    if (j < 0 || j > spec.r) throw input_error("coordinate index out of range");
    if (c.axis == 'x') {
        if (j < p) return std::nullopt;
        if (j <= p + m)
            return ParamMonomial{{ParamVar{ParamVar::Kind::alpha, 0}, 1},
                                 {ParamVar{ParamVar::Kind::v, j - p}, 1}};
        return ParamMonomial{{ParamVar{ParamVar::Kind::xtail, j}, 1}};
    }
    if (c.axis == 'y') {
        if (j < p) return ParamMonomial{{ParamVar{ParamVar::Kind::ytail, j}, 1}};
        if (j <= p + m)
            return ParamMonomial{{ParamVar{ParamVar::Kind::beta, 0}, 1},
                                 {ParamVar{ParamVar::Kind::v, j - p}, 1}};
        return std::nullopt;
    }
    throw input_error("coordinate axis must be 'x' or 'y'");
}

ParamMonomial param_product(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial out;
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia].first < b[ib].first) {
            out.push_back(a[ia++]);
        } else if (b[ib].first < a[ia].first) {
            out.push_back(b[ib++]);
        } else {
            out.push_back({a[ia].first, a[ia].second + b[ib].second});
            ++ia;
            ++ib;
        }
    }
    while (ia < a.size()) out.push_back(a[ia++]);
    while (ib < b.size()) out.push_back(b[ib++]);
    return out;
}

} // namespace llab
