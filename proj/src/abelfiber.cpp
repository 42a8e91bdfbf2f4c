#include "llab/abelfiber.hpp"

#include <algorithm>
#include <stdexcept>

#include "llab/error.hpp"
#include "llab/rat.hpp"

namespace llab {

void check_vanishing_sequence(long d, const std::vector<long>& a) {
    if (d < 0) throw input_error("vanishing sequence needs d >= 0");
    if (a.empty()) throw input_error("vanishing sequence must be nonempty");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < 0 || a[k] > d)
            throw input_error("vanishing sequence entries must lie in [0, d]");
        if (k > 0 && a[k] <= a[k - 1])
            throw input_error("vanishing sequence must be strictly increasing");
    }
}

namespace {

long count_at_least(const std::vector<long>& a, long bound) {
    // a is strictly increasing.
    return static_cast<long>(a.end() - std::lower_bound(a.begin(), a.end(), bound));
}

} // namespace

std::optional<PieceDims> piece_dims(long d, const std::vector<long>& a_y,
                                    const std::vector<long>& a_z, long ell) {
    check_vanishing_sequence(d, a_y);
    check_vanishing_sequence(d, a_z);
    if (ell < 0 || ell > d) throw input_error("split degree must lie in [0, d]");
    const long cy = count_at_least(a_y, d - ell);
    const long cz = count_at_least(a_z, ell);
    if (cy == 0 || cz == 0) return std::nullopt;
    return PieceDims{cy - 1, cz - 1};
}

std::vector<FiberComponent> components_by_maximality(long d, const std::vector<long>& a_y,
                                                     const std::vector<long>& a_z) {
    check_vanishing_sequence(d, a_y);
    check_vanishing_sequence(d, a_z);
    // Runs of equal dimensions over the nonempty pieces. The Y dimension is
    // nondecreasing and the Z dimension nonincreasing in ell, so a run is
    // dominated exactly when some other piece matches or exceeds both.
    struct Run {
        long lo, hi;
        PieceDims dims;
    };
    std::vector<Run> runs;
    for (long ell = 0; ell <= d; ++ell) {
        const auto dims = piece_dims(d, a_y, a_z, ell);
        if (!dims) continue;
        if (!runs.empty() && runs.back().hi == ell - 1 && runs.back().dims == *dims) {
            runs.back().hi = ell;
        } else {
            runs.push_back({ell, ell, *dims});
        }
    }
    std::vector<FiberComponent> out;
    for (const auto& run : runs) {
        bool dominated = false;
        for (const auto& other : runs) {
            if (other.lo == run.lo) continue;
            if (other.dims.dim_y >= run.dims.dim_y && other.dims.dim_z >= run.dims.dim_z)
                dominated = true;
        }
        if (!dominated) out.push_back({run.lo, run.hi, run.dims});
    }
    return out;
}

std::vector<FiberComponent> components_by_witness(long d, const std::vector<long>& a_y,
                                                  const std::vector<long>& a_z) {
    check_vanishing_sequence(d, a_y);
    check_vanishing_sequence(d, a_z);
    const long p = static_cast<long>(a_y.size());
    const long q = static_cast<long>(a_z.size());
    std::vector<FiberComponent> out;
    for (long i = 0; i < p; ++i) {
        const long lo = d - a_y[static_cast<std::size_t>(i)];
        // The unique candidate partner: the least aZ entry at or above lo.
        const auto it = std::lower_bound(a_z.begin(), a_z.end(), lo);
        if (it == a_z.end()) continue;
        const long j = static_cast<long>(it - a_z.begin());
        const long hi = *it;
        if (i > 0 && a_y[static_cast<std::size_t>(i - 1)] >= d - hi) continue;
        if (j > 0 && a_z[static_cast<std::size_t>(j - 1)] >= lo) continue;
        out.push_back({lo, hi, PieceDims{p - i - 1, q - j - 1}});
    }
    std::sort(out.begin(), out.end(),
              [](const FiberComponent& a, const FiberComponent& b) { return a.ell_lo < b.ell_lo; });
    return out;
}

std::vector<FiberComponent> components(long d, const std::vector<long>& a_y,
                                       const std::vector<long>& a_z) {
    auto by_max = components_by_maximality(d, a_y, a_z);
    auto by_wit = components_by_witness(d, a_y, a_z);
    if (by_max != by_wit)
        throw std::logic_error("component lists from the two methods disagree");
    return by_max;
}

EhResult eh_exists_greedy(long d, long r, const std::vector<long>& a_y,
                          const std::vector<long>& a_z) {
    check_vanishing_sequence(d, a_y);
    check_vanishing_sequence(d, a_z);
    if (r < 0) throw input_error("rank must be nonnegative");
    EhResult res;
    const long p = static_cast<long>(a_y.size());
    const long q = static_cast<long>(a_z.size());
    if (p < r + 1 || q < r + 1) return res;
    for (long s = 0; s <= r; ++s)
        if (a_y[static_cast<std::size_t>(p - 1 - r + s)] +
                a_z[static_cast<std::size_t>(q - 1 - s)] <
            d)
            return res;
    res.exists = true;
    res.witness_y.assign(a_y.end() - (r + 1), a_y.end());
    res.witness_z.assign(a_z.end() - (r + 1), a_z.end());
    return res;
}

bool eh_exists_brute(long d, long r, const std::vector<long>& a_y,
                     const std::vector<long>& a_z) {
    check_vanishing_sequence(d, a_y);
    check_vanishing_sequence(d, a_z);
    if (r < 0) throw input_error("rank must be nonnegative");
    const long p = static_cast<long>(a_y.size());
    const long q = static_cast<long>(a_z.size());
    if (p < r + 1 || q < r + 1) return false;
    if (p > 24 || q > 24)
        throw resource_error("exhaustive subsequence search limited to 24 entries");
    if (binom_int(Int(p), r + 1) * binom_int(Int(q), r + 1) > 10000000)
        throw resource_error("exhaustive subsequence search would exceed 10^7 pairs");
    const auto picks = [&](const std::vector<long>& a) {
        std::vector<std::vector<long>> out;
        const auto n = static_cast<unsigned long>(a.size());
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            if (__builtin_popcountl(mask) != r + 1) continue;
            std::vector<long> pick;
            for (unsigned long b = 0; b < n; ++b)
                if (mask & (1UL << b)) pick.push_back(a[b]);
            out.push_back(std::move(pick));
        }
        return out;
    };
    const auto ys = picks(a_y);
    const auto zs = picks(a_z);
    for (const auto& by : ys)
        for (const auto& bz : zs) {
            bool ok = true;
            for (long s = 0; s <= r && ok; ++s)
                ok = by[static_cast<std::size_t>(s)] + bz[static_cast<std::size_t>(r - s)] >= d;
            if (ok) return true;
        }
    return false;
}

EhResult eh_exists(long d, long r, const std::vector<long>& a_y,
                   const std::vector<long>& a_z) {
    EhResult res = eh_exists_greedy(d, r, a_y, a_z);
    const long p = static_cast<long>(a_y.size());
    const long q = static_cast<long>(a_z.size());
    const bool feasible = p <= 24 && q <= 24 && r + 1 <= p && r + 1 <= q &&
                          binom_int(Int(p), r + 1) * binom_int(Int(q), r + 1) <= 10000000;
    if (feasible && eh_exists_brute(d, r, a_y, a_z) != res.exists)
        throw std::logic_error("greedy and exhaustive section tests disagree");
    return res;
}

NoGrdsReport no_grds_check(long d, long r, const std::vector<long>& a_y,
                           const std::vector<long>& a_z) {
    NoGrdsReport rep;
    rep.eh = eh_exists(d, r, a_y, a_z).exists;
    const auto comps = components(d, a_y, a_z);
    rep.fiber_empty = comps.empty();
    if (!rep.fiber_empty) {
        rep.min_dim = comps.front().dims.total();
        for (const auto& c : comps) rep.min_dim = std::min(rep.min_dim, c.dims.total());
    }
    rep.consistent = !rep.eh || (!rep.fiber_empty && rep.min_dim >= r);
    rep.converse_failure = !rep.eh && !rep.fiber_empty && rep.min_dim >= r;
    return rep;
}

FiberProblem random_fiber_problem(Rng& rng, long max_d, long max_r) {
    if (max_d < 1 || max_r < 1) throw input_error("random fiber problem needs max_d, max_r >= 1");
    FiberProblem fp;
    fp.d = rng.in_range(1, max_d);
    fp.r = rng.in_range(1, max_r);
    const auto subset = [&]() {
        std::vector<long> a;
        for (long v = 0; v <= fp.d; ++v)
            if (rng.coin()) a.push_back(v);
        if (a.empty()) a.push_back(rng.below(fp.d + 1));
        return a;
    };
    fp.a_y = subset();
    fp.a_z = subset();
    return fp;
}

} // namespace llab
