#include "llab/degeneration.hpp"

#include <algorithm>

#include "llab/error.hpp"

namespace llab {

DegenerationFamily make_family(const UnionSpec& spec) {
    if (!spec.full)
        throw input_error("degeneration family requires a full union spec: the blocks "
                          "must cover all r+1 coordinates");
    DegenerationFamily fam;
    fam.spec = spec;
    const long n = spec.n();
    for (long j = 0; j <= spec.r; ++j) fam.eps.push_back(n - block_of(spec, j));
    for (long i = 0; i <= spec.r; ++i)
        for (long j = i + 1; j <= spec.r; ++j)
            fam.gens.push_back({i, j, fam.eps[static_cast<std::size_t>(i)] -
                                          fam.eps[static_cast<std::size_t>(j)]});
    return fam;
}

std::vector<Mat> specialize(const DegenerationFamily& fam, const Rat& z0) {
    std::vector<Mat> out;
    const auto n = static_cast<std::size_t>(fam.spec.r) + 1;
    out.reserve(fam.gens.size());
    for (const auto& g : fam.gens) {
        Mat m(n, n);
        m.at(static_cast<std::size_t>(g.i), static_cast<std::size_t>(g.j)) = Rat(1);
        m.at(static_cast<std::size_t>(g.j), static_cast<std::size_t>(g.i)) =
            -Rat::pow(z0, static_cast<unsigned long>(g.zpow));
        out.push_back(std::move(m));
    }
    return out;
}

Rat eval_generator(const FamilyGenerator& g, const Rat& z0, const std::vector<Rat>& x,
                   const std::vector<Rat>& y) {
    const auto i = static_cast<std::size_t>(g.i);
    const auto j = static_cast<std::size_t>(g.j);
    if (i >= x.size() || j >= x.size() || x.size() != y.size())
        throw input_error("generator index outside the point's coordinates");
    return x[i] * y[j] - Rat::pow(z0, static_cast<unsigned long>(g.zpow)) * x[j] * y[i];
}

bool generator_vanishes_symbolically(const UnionSpec& spec, long k, const FamilyGenerator& g) {
    const auto xi = coordinate_pullback(spec, k, {'x', g.i});
    const auto yj = coordinate_pullback(spec, k, {'y', g.j});
    const bool first_zero = !xi || !yj;
    if (g.zpow > 0) return first_zero; // the fiber generator is the bare monomial x_i y_j
    const auto xj = coordinate_pullback(spec, k, {'x', g.j});
    const auto yi = coordinate_pullback(spec, k, {'y', g.i});
    const bool second_zero = !xj || !yi;
    if (first_zero || second_zero) return first_zero && second_zero;
    return param_product(*xi, *yj) == param_product(*xj, *yi);
}

MovingPoint limit_of_point(const DegenerationFamily& fam, const std::vector<Rat>& x,
                           const std::vector<Rat>& y, long k) {
    const UnionSpec& spec = fam.spec;
    if (k < 0 || k > spec.n()) throw input_error("component index out of range");
    const auto n = static_cast<std::size_t>(spec.r) + 1;
    if (x.size() != n || y.size() != n)
        throw input_error("point coordinates must have length r+1");
    const long p = spec.p_seq[static_cast<std::size_t>(k)];
    const long m = spec.mults[static_cast<std::size_t>(k)];

    for (long j = 0; j < p; ++j)
        if (!x[static_cast<std::size_t>(j)].is_zero())
            throw input_error("point is not on the component: x head must vanish");
    for (long j = p + m + 1; j <= spec.r; ++j)
        if (!y[static_cast<std::size_t>(j)].is_zero())
            throw input_error("point is not on the component: y tail must vanish");
    for (long i = p; i <= p + m; ++i)
        for (long j = i + 1; j <= p + m; ++j)
            if (x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] !=
                x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(i)])
                throw input_error("point is not on the component: block minors do not vanish");

    long anchor = -1;
    for (long j = p; j <= p + m; ++j)
        if (!x[static_cast<std::size_t>(j)].is_zero()) {
            anchor = j;
            break;
        }
    if (anchor < 0)
        throw input_error("limit needs a generic point: the x block part vanishes");
    if (y[static_cast<std::size_t>(anchor)].is_zero())
        throw input_error("limit needs a generic point: the y block part vanishes");
    const Rat scale = x[static_cast<std::size_t>(anchor)] / y[static_cast<std::size_t>(anchor)];

    MovingPoint mp;
    const long eps_star = spec.n() - k;
    for (long j = 0; j <= spec.r; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        mp.c.push_back(j < p ? scale * y[uj] : x[uj]);
        mp.x_powers.push_back(j < p ? fam.eps[uj] : eps_star);
        mp.y_powers.push_back(mp.x_powers.back() - fam.eps[uj]);
    }

    const auto limit = [&](const std::vector<long>& powers) {
        long pmin = 0;
        bool seen = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (mp.c[j].is_zero()) continue;
            if (!seen || powers[j] < pmin) pmin = powers[j];
            seen = true;
        }
        std::vector<Rat> out(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!mp.c[j].is_zero() && powers[j] == pmin) out[j] = mp.c[j];
        return out;
    };
    mp.x_limit = limit(mp.x_powers);
    mp.y_limit = limit(mp.y_powers);
    return mp;
}

namespace {

Rat small_nonzero(Rng& rng) {
    const long v = rng.in_range(1, 3);
    return Rat(rng.coin() ? v : -v);
}

} // namespace

std::pair<std::vector<Rat>, std::vector<Rat>> random_point_on_component(
    const DegenerationFamily& fam, long k, Rng& rng) {
    const UnionSpec& spec = fam.spec;
    if (k < 0 || k > spec.n()) throw input_error("component index out of range");
    const long p = spec.p_seq[static_cast<std::size_t>(k)];
    const long m = spec.mults[static_cast<std::size_t>(k)];
    std::vector<Rat> v(static_cast<std::size_t>(m) + 1);
    for (;;) {
        bool nonzero = false;
        for (auto& e : v) {
            e = Rat(rng.in_range(-3, 3));
            if (!e.is_zero()) nonzero = true;
        }
        if (nonzero) break;
    }
    const Rat alpha = small_nonzero(rng);
    const Rat beta = small_nonzero(rng);
    std::vector<Rat> x(static_cast<std::size_t>(spec.r) + 1);
    std::vector<Rat> y(static_cast<std::size_t>(spec.r) + 1);
    for (long j = 0; j <= spec.r; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if (j < p) {
            y[uj] = Rat(rng.in_range(-3, 3));
        } else if (j <= p + m) {
            x[uj] = alpha * v[static_cast<std::size_t>(j - p)];
            y[uj] = beta * v[static_cast<std::size_t>(j - p)];
        } else {
            x[uj] = Rat(rng.in_range(-3, 3));
        }
    }
    return {std::move(x), std::move(y)};
}

SampleReport sample_containment(const DegenerationFamily& fam, std::uint64_t seed, long samples) {
    if (samples < 0) throw input_error("sample count must be nonnegative");
    Rng rng(seed);
    SampleReport rep;
    rep.per_component.assign(static_cast<std::size_t>(fam.spec.n()) + 1, 0);
    for (long s = 0; s < samples; ++s) {
        const long k = rng.below(fam.spec.n() + 1);
        ++rep.per_component[static_cast<std::size_t>(k)];
        const auto [x, y] = random_point_on_component(fam, k, rng);
        for (const auto& g : fam.gens)
            if (!eval_generator(g, Rat(0), x, y).is_zero()) rep.generators_vanish = false;
        const auto mp = limit_of_point(fam, x, y, k);
        if (mp.x_limit != x) rep.limits_match = false;
        // The y limit is the y side rescaled by the block anchor ratio.
        bool proportional = true;
        bool limit_nonzero = false;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!mp.y_limit[i].is_zero()) limit_nonzero = true;
            for (std::size_t j = i + 1; j < y.size(); ++j)
                if (mp.y_limit[i] * y[j] != mp.y_limit[j] * y[i]) proportional = false;
        }
        if (!proportional || !limit_nonzero) rep.limits_match = false;
        ++rep.samples;
    }
    return rep;
}

} // namespace llab
