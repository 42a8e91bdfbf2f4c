#include "llab/limitseries.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "llab/error.hpp"
#include "llab/rng.hpp"

namespace llab {

namespace {

std::string at_level(const char* what, long i) {
    return std::string(what) + " at level " + std::to_string(i);
}

std::string at_link(const char* what, long i) {
    return std::string(what) + " at link " + std::to_string(i) + " -> " + std::to_string(i + 1);
}

std::vector<Rat> unit_vector(std::size_t n, std::size_t j) {
    std::vector<Rat> v(n);
    v[j] = Rat(1);
    return v;
}

} // namespace

ValidationReport validate(const ExplicitLimitSeries& ls) {
    ValidationReport rep;
    auto issue = [&rep](const char* cat, std::string detail) {
        rep.issues.push_back({cat, std::move(detail)});
    };

    if (ls.d < 0) issue("shape", "degree d must be nonnegative");
    if (ls.r < 0) issue("shape", "rank r must be nonnegative");
    if (!rep.issues.empty()) return rep;

    const std::size_t levels = static_cast<std::size_t>(ls.d) + 1;
    if (ls.ambient.size() != levels)
        issue("shape", "ambient dimension list must have d+1 entries");
    if (ls.up.size() != levels - 1) issue("shape", "up must hold d maps");
    if (ls.down.size() != levels - 1) issue("shape", "down must hold d maps");
    if (ls.Y0.size() != levels) issue("shape", "Y0 must hold d+1 subspaces");
    if (ls.Z0.size() != levels) issue("shape", "Z0 must hold d+1 subspaces");
    if (ls.V.size() != levels) issue("shape", "V must hold d+1 subspaces");
    if (!rep.issues.empty()) return rep;

    for (std::size_t i = 0; i < levels; ++i) {
        const long n = ls.ambient[i];
        if (n < 0) issue("shape", at_level("negative ambient dimension", static_cast<long>(i)));
        const auto un = static_cast<std::size_t>(n < 0 ? 0 : n);
        if (ls.Y0[i].ambient_dim() != un)
            issue("shape", at_level("Y0 ambient mismatch", static_cast<long>(i)));
        if (ls.Z0[i].ambient_dim() != un)
            issue("shape", at_level("Z0 ambient mismatch", static_cast<long>(i)));
        if (ls.V[i].ambient_dim() != un)
            issue("shape", at_level("V ambient mismatch", static_cast<long>(i)));
    }
    for (std::size_t i = 0; i + 1 < levels; ++i) {
        const auto ni = static_cast<std::size_t>(ls.ambient[i]);
        const auto nj = static_cast<std::size_t>(ls.ambient[i + 1]);
        if (ls.up[i].rows() != nj || ls.up[i].cols() != ni)
            issue("shape", at_link("up map has wrong dimensions", static_cast<long>(i)));
        if (ls.down[i].rows() != ni || ls.down[i].cols() != nj)
            issue("shape", at_link("down map has wrong dimensions", static_cast<long>(i)));
    }
    if (!rep.issues.empty()) return rep;

    const std::size_t want = static_cast<std::size_t>(ls.r) + 1;
    for (std::size_t i = 0; i < levels; ++i)
        if (ls.V[i].dim() != want)
            issue("dimension", at_level("V has wrong dimension", static_cast<long>(i)) +
                                   ": " + std::to_string(ls.V[i].dim()) + " instead of " +
                                   std::to_string(want));

    for (std::size_t i = 0; i + 1 < levels; ++i) {
        const long li = static_cast<long>(i);
        if (!ls.V[i + 1].contains(image(ls.up[i], ls.V[i])))
            issue("linkage", at_link("up does not carry V into V", li));
        if (!ls.V[i].contains(image(ls.down[i], ls.V[i + 1])))
            issue("linkage", at_link("down does not carry V into V", li));
        if (!(ls.down[i] * ls.up[i]).is_zero())
            issue("composition", at_link("down after up is nonzero", li));
        if (!(ls.up[i] * ls.down[i]).is_zero())
            issue("composition", at_link("up after down is nonzero", li));
        if (kernel_basis(ls.up[i]) != ls.Z0[i])
            issue("kernel", at_link("kernel of up is not Z0", li));
        if (kernel_basis(ls.down[i]) != ls.Y0[i + 1])
            issue("kernel", at_link("kernel of down is not Y0", li));
        if (!ls.Y0[i + 1].contains(
                image(ls.up[i], Subspace::full(static_cast<std::size_t>(ls.ambient[i])))))
            issue("image", at_link("image of up escapes Y0", li));
        if (!ls.Z0[i].contains(
                image(ls.down[i], Subspace::full(static_cast<std::size_t>(ls.ambient[i + 1])))))
            issue("image", at_link("image of down escapes Z0", li));
    }

    for (std::size_t i = 0; i < levels; ++i)
        if (intersect(ls.Y0[i], ls.Z0[i]).dim() != 0)
            issue("marked", at_level("Y0 and Z0 overlap", static_cast<long>(i)));

    if (intersect(ls.V.front(), ls.Y0.front()).dim() != 0)
        issue("boundary", "V meets Y0 at level 0");
    if (intersect(ls.V.back(), ls.Z0.back()).dim() != 0)
        issue("boundary", at_level("V meets Z0", ls.d));

    rep.valid = rep.issues.empty();
    return rep;
}

BoundarySubspaces boundary_subspaces(const ExplicitLimitSeries& ls) {
    BoundarySubspaces bs;
    for (std::size_t i = 0; i < ls.V.size(); ++i) {
        bs.vy.push_back(intersect(ls.V[i], ls.Y0[i]));
        bs.vz.push_back(intersect(ls.V[i], ls.Z0[i]));
    }
    return bs;
}

BoundaryDims boundary_dims(const ExplicitLimitSeries& ls) {
    BoundaryDims bd;
    const auto bs = boundary_subspaces(ls);
    for (const auto& s : bs.vy) bd.y.push_back(static_cast<long>(s.dim()));
    for (const auto& s : bs.vz) bd.z.push_back(static_cast<long>(s.dim()));
    return bd;
}

ExactnessReport is_exact(const ExplicitLimitSeries& ls) {
    if (!validate(ls).valid) throw input_error("exactness is only defined for a valid series");
    ExactnessReport rep;
    const auto bs = boundary_subspaces(ls);
    rep.by_subspace = true;
    rep.by_dimension = true;
    for (long i = 0; i < ls.d; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const bool up_ok = image(ls.up[ui], ls.V[ui]) == bs.vy[ui + 1];
        const bool down_ok = image(ls.down[ui], ls.V[ui + 1]) == bs.vz[ui];
        if (!up_ok || !down_ok) rep.by_subspace = false;
        const long zi = static_cast<long>(bs.vz[ui].dim());
        const long yn = static_cast<long>(bs.vy[ui + 1].dim());
        if (zi + yn != ls.r + 1) {
            rep.by_dimension = false;
            rep.failing_links.push_back(i);
        }
    }
    rep.exact = rep.by_subspace && rep.by_dimension;
    return rep;
}

std::vector<Rat> transport(const ExplicitLimitSeries& ls, long from, long to,
                           std::vector<Rat> v) {
    if (from < 0 || from > ls.d || to < 0 || to > ls.d)
        throw input_error("transport level out of range");
    if (v.size() != static_cast<std::size_t>(ls.ambient[static_cast<std::size_t>(from)]))
        throw input_error("transport vector has wrong dimension");
    if (to > from)
        for (long k = from; k < to; ++k) v = ls.up[static_cast<std::size_t>(k)].apply(v);
    else if (to < from)
        for (long k = from - 1; k >= to; --k) v = ls.down[static_cast<std::size_t>(k)].apply(v);
    return v;
}

Diagonalization diagonalize(const ExplicitLimitSeries& ls) {
    if (!validate(ls).valid) throw input_error("diagonalize requires a valid series");
    if (!is_exact(ls).exact) throw input_error("diagonalize requires an exact series");

    Diagonalization out;
    const auto bs = boundary_subspaces(ls);
    for (long i = 0; i <= ls.d; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        Subspace cur = sum(bs.vy[ui], bs.vz[ui]);
        std::vector<std::vector<Rat>> chosen;
        for (std::size_t rrow = 0; rrow < ls.V[ui].dim(); ++rrow) {
            const auto cand = ls.V[ui].basis().row(rrow);
            if (cur.contains(cand)) continue;
            chosen.push_back(cand);
            cur = sum(cur, Subspace::span(cur.ambient_dim(), {cand}));
        }
        const long c = static_cast<long>(chosen.size());
        out.counts.push_back(c);
        for (long k = 0; k < c; ++k) out.jump_indices.push_back(i);
        Mat sec(chosen.size(), static_cast<std::size_t>(ls.ambient[ui]));
        for (std::size_t k = 0; k < chosen.size(); ++k) sec.set_row(k, chosen[k]);
        out.sections.push_back(std::move(sec));
    }
    if (static_cast<long>(out.jump_indices.size()) != ls.r + 1)
        throw std::logic_error("diagonalization produced the wrong section count");
    for (std::size_t k = 0; k < out.jump_indices.size();) {
        std::size_t e = k;
        while (e < out.jump_indices.size() && out.jump_indices[e] == out.jump_indices[k]) ++e;
        out.jumps.push_back(out.jump_indices[k]);
        out.mults.push_back(static_cast<long>(e - k) - 1);
        k = e;
    }
    return out;
}

LevelRange empty_range(const ExplicitLimitSeries& ls) {
    if (!validate(ls).valid) throw input_error("level range requires a valid series");
    const auto bd = boundary_dims(ls);
    long lo = -1;
    long hi = -1;
    for (long i = 0; i <= ls.d; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (bd.y[ui] <= ls.r && bd.z[ui] <= ls.r) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0)
        throw input_error("degenerate series: the section space is trivial at every level");
    return {lo, hi};
}

MinorScheme pg_component(const ExplicitLimitSeries& ls, long i) {
    if (!is_exact(ls).exact) throw input_error("level schemes require an exact series");
    if (i < 0 || i > ls.d) throw input_error("level index out of range");
    const auto bd = boundary_dims(ls);
    const auto ui = static_cast<std::size_t>(i);
    if (bd.y[ui] > ls.r || bd.z[ui] > ls.r)
        throw input_error("empty stratum at level " + std::to_string(i));
    return MinorScheme{bd.y[ui], bd.z[ui], ls.r - bd.y[ui] - bd.z[ui]};
}

UnionSpec pg_union(const ExplicitLimitSeries& ls) {
    const auto diag = diagonalize(ls);
    return make_union_spec(ls.r, diag.mults);
}

namespace {

Mat random_invertible(std::size_t n, Rng& rng) {
    Mat l = Mat::identity(n);
    Mat u = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) l.at(i, j) = Rat(rng.in_range(-2, 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u.at(i, j) = Rat(rng.in_range(-2, 2));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t k = n; k > 1; --k)
        std::swap(perm[k - 1], perm[static_cast<std::size_t>(rng.below(static_cast<long>(k)))]);
    Mat p(n, n);
    for (std::size_t i = 0; i < n; ++i) p.at(i, perm[i]) = Rat(1);
    return l * u * p;
}

} // namespace

ExplicitLimitSeries generate_exact(std::uint64_t seed, long r, long d,
                                   const std::vector<long>& jump_indices) {
    if (r < 0 || d < 0) throw input_error("generator requires r >= 0 and d >= 0");
    if (static_cast<long>(jump_indices.size()) != r + 1)
        throw input_error("generator needs exactly r+1 jump indices");
    for (std::size_t k = 0; k < jump_indices.size(); ++k) {
        if (jump_indices[k] < 0 || jump_indices[k] > d)
            throw input_error("jump indices must lie in [0, d]");
        if (k > 0 && jump_indices[k] < jump_indices[k - 1])
            throw input_error("jump indices must be nondecreasing");
    }

    Rng rng(seed);
    const std::size_t levels = static_cast<std::size_t>(d) + 1;

    // Padding block sizes. The up maps need room for extraY + extraM inside
    // the next level's extraY block; the down maps need the mirror image.
    std::vector<long> em(levels), ey(levels), ez(levels);
    for (auto& v : em) v = rng.below(2);
    ey[0] = rng.below(2);
    for (std::size_t i = 0; i + 1 < levels; ++i) ey[i + 1] = ey[i] + em[i] + rng.below(2);
    ez[levels - 1] = rng.below(2);
    for (std::size_t i = levels - 1; i > 0; --i) ez[i - 1] = ez[i] + em[i] + rng.below(2);

    ExplicitLimitSeries ls;
    ls.d = d;
    ls.r = r;
    std::vector<long> ybase(levels), zbase(levels), mbase(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        ybase[i] = r + 1;
        zbase[i] = r + 1 + ey[i];
        mbase[i] = r + 1 + ey[i] + ez[i];
        ls.ambient.push_back(r + 1 + ey[i] + ez[i] + em[i]);
    }

    // Standard position: slots 0..r carry the sections, each dying upward at
    // its jump index; the extra blocks realize the prescribed kernels.
    for (std::size_t i = 0; i + 1 < levels; ++i) {
        const auto ni = static_cast<std::size_t>(ls.ambient[i]);
        const auto nj = static_cast<std::size_t>(ls.ambient[i + 1]);
        const long li = static_cast<long>(i);
        Mat u(nj, ni);
        for (long j = 0; j <= r; ++j)
            if (jump_indices[static_cast<std::size_t>(j)] <= li)
                u.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = Rat(1);
        for (long a = 0; a < ey[i]; ++a)
            u.at(static_cast<std::size_t>(ybase[i + 1] + a),
                 static_cast<std::size_t>(ybase[i] + a)) = Rat(1);
        for (long a = 0; a < em[i]; ++a)
            u.at(static_cast<std::size_t>(ybase[i + 1] + ey[i] + a),
                 static_cast<std::size_t>(mbase[i] + a)) = Rat(1);
        ls.up.push_back(std::move(u));

        Mat dn(ni, nj);
        for (long j = 0; j <= r; ++j)
            if (jump_indices[static_cast<std::size_t>(j)] >= li + 1)
                dn.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = Rat(1);
        for (long a = 0; a < ez[i + 1]; ++a)
            dn.at(static_cast<std::size_t>(zbase[i] + a),
                  static_cast<std::size_t>(zbase[i + 1] + a)) = Rat(1);
        for (long a = 0; a < em[i + 1]; ++a)
            dn.at(static_cast<std::size_t>(zbase[i] + ez[i + 1] + a),
                  static_cast<std::size_t>(mbase[i + 1] + a)) = Rat(1);
        ls.down.push_back(std::move(dn));
    }

    for (std::size_t i = 0; i < levels; ++i) {
        const auto n = static_cast<std::size_t>(ls.ambient[i]);
        const long li = static_cast<long>(i);
        std::vector<std::vector<Rat>> yrows, zrows, vrows;
        for (long j = 0; j <= r; ++j) {
            const long jj = jump_indices[static_cast<std::size_t>(j)];
            vrows.push_back(unit_vector(n, static_cast<std::size_t>(j)));
            if (jj < li) yrows.push_back(unit_vector(n, static_cast<std::size_t>(j)));
            if (jj > li) zrows.push_back(unit_vector(n, static_cast<std::size_t>(j)));
        }
        for (long a = 0; a < ey[i]; ++a)
            yrows.push_back(unit_vector(n, static_cast<std::size_t>(ybase[i] + a)));
        for (long a = 0; a < ez[i]; ++a)
            zrows.push_back(unit_vector(n, static_cast<std::size_t>(zbase[i] + a)));
        ls.Y0.push_back(Subspace::span(n, yrows));
        ls.Z0.push_back(Subspace::span(n, zrows));
        ls.V.push_back(Subspace::span(n, vrows));
    }

    // Hide the standard position behind a random change of basis per level.
    std::vector<Mat> g(levels), ginv(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        g[i] = random_invertible(static_cast<std::size_t>(ls.ambient[i]), rng);
        ginv[i] = inverse(g[i]);
    }
    for (std::size_t i = 0; i + 1 < levels; ++i) {
        ls.up[i] = g[i + 1] * ls.up[i] * ginv[i];
        ls.down[i] = g[i] * ls.down[i] * ginv[i + 1];
    }
    for (std::size_t i = 0; i < levels; ++i) {
        const auto n = static_cast<std::size_t>(ls.ambient[i]);
        auto push = [&](const Subspace& s) {
            std::vector<std::vector<Rat>> rows;
            for (std::size_t k = 0; k < s.dim(); ++k) rows.push_back(g[i].apply(s.basis().row(k)));
            return Subspace::span(n, rows);
        };
        ls.Y0[i] = push(ls.Y0[i]);
        ls.Z0[i] = push(ls.Z0[i]);
        ls.V[i] = push(ls.V[i]);
    }
    return ls;
}

} // namespace llab
