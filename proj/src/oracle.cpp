#include "llab/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "llab/error.hpp"
#include "llab/mat.hpp"

namespace llab {

namespace {

long count_long(long deg, long nvars) {
    return count_monomials(deg, nvars).convert_to<long>();
}

// All exponent vectors of total degree deg in nvars variables, lexicographic.
std::vector<std::vector<int>> compositions(long deg, long nvars) {
    std::vector<std::vector<int>> out;
    if (deg < 0 || nvars < 0) return out;
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, long pos, long rem) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(rem);
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            cur[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, deg);
    return out;
}

// Lexicographic rank of a degree-deg exponent vector, inverse to the
// enumeration order of compositions().
long rank_composition(const std::vector<int>& a, long deg) {
    const long n = static_cast<long>(a.size());
    long rank = 0;
    long rem = deg;
    for (long p = 0; p + 1 < n; ++p) {
        for (long v = 0; v < a[static_cast<std::size_t>(p)]; ++v)
            rank += count_long(rem - v, n - 1 - p);
        rem -= a[static_cast<std::size_t>(p)];
    }
    return rank;
}

struct UnionFind {
    std::vector<long> parent;
    std::vector<long> size;

    explicit UnionFind(long n)
        : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0L);
    }

    long find(long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }

    void unite(long a, long b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
    }
};

long position_of(const std::vector<long>& indices, long coord, const char* axis) {
    const auto it = std::find(indices.begin(), indices.end(), coord);
    if (it == indices.end())
        throw input_error(std::string("generator references ") + axis +
                          std::to_string(coord) + " outside the ambient space");
    return static_cast<long>(it - indices.begin());
}

} // namespace

Int hf_generators(const BiAmbient& amb, const IdealGenerators& gens, long s, long t) {
    if (s < 0 || t < 0) return 0;
    const long nx = static_cast<long>(amb.x_indices.size());
    const long ny = static_cast<long>(amb.y_indices.size());
    const Int total = count_monomials(s, nx) * count_monomials(t, ny);
    if (total > kMonomialGuard)
        throw resource_error("bidegree (" + std::to_string(s) + ", " + std::to_string(t) +
                             ") needs " + total.str() + " monomials, over the limit of " +
                             std::to_string(kMonomialGuard));
    if (total == 0) return 0;

    const long cx = count_long(s, nx);
    const long cy = count_long(t, ny);
    const long zero_node = cx * cy;
    UnionFind uf(zero_node + 1);

    const auto xcomps = compositions(s, nx);
    const auto ycomps = compositions(t, ny);

    for (const Coordinate& c : gens.linear) {
        if (c.axis == 'x') {
            const long pos = position_of(amb.x_indices, c.index, "x");
            for (long xi = 0; xi < cx; ++xi)
                if (xcomps[static_cast<std::size_t>(xi)][static_cast<std::size_t>(pos)] > 0)
                    for (long yi = 0; yi < cy; ++yi) uf.unite(xi * cy + yi, zero_node);
        } else if (c.axis == 'y') {
            const long pos = position_of(amb.y_indices, c.index, "y");
            for (long yi = 0; yi < cy; ++yi)
                if (ycomps[static_cast<std::size_t>(yi)][static_cast<std::size_t>(pos)] > 0)
                    for (long xi = 0; xi < cx; ++xi) uf.unite(xi * cy + yi, zero_node);
        } else {
            throw input_error("coordinate axis must be 'x' or 'y'");
        }
    }

    if (!gens.minors.empty() && s >= 1 && t >= 1) {
        const auto xsub = compositions(s - 1, nx);
        const auto ysub = compositions(t - 1, ny);
        for (const MinorPair& mp : gens.minors) {
            const long pix = position_of(amb.x_indices, mp.i, "x");
            const long pjx = position_of(amb.x_indices, mp.j, "x");
            const long piy = position_of(amb.y_indices, mp.i, "y");
            const long pjy = position_of(amb.y_indices, mp.j, "y");
            // Rank pairs of a + e_i and a + e_j over all degree-(s-1) vectors.
            std::vector<std::pair<long, long>> xr;
            xr.reserve(xsub.size());
            for (auto a : xsub) {
                ++a[static_cast<std::size_t>(pix)];
                const long ri = rank_composition(a, s);
                --a[static_cast<std::size_t>(pix)];
                ++a[static_cast<std::size_t>(pjx)];
                xr.emplace_back(ri, rank_composition(a, s));
            }
            std::vector<std::pair<long, long>> yr;
            yr.reserve(ysub.size());
            for (auto b : ysub) {
                ++b[static_cast<std::size_t>(pjy)];
                const long rj = rank_composition(b, t);
                --b[static_cast<std::size_t>(pjy)];
                ++b[static_cast<std::size_t>(piy)];
                yr.emplace_back(rj, rank_composition(b, t));
            }
            // x_i y_j * mu = x_j y_i * mu for mu = a * b.
            for (const auto& [axi, bxj] : xr)
                for (const auto& [ayj, byi] : yr) uf.unite(axi * cy + ayj, bxj * cy + byi);
        }
    }

    std::vector<long> roots;
    roots.reserve(static_cast<std::size_t>(zero_node + 1));
    for (long v = 0; v <= zero_node; ++v) roots.push_back(uf.find(v));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return Int(static_cast<long>(roots.size()) - 1);
}

Int hf_generators_dense(const BiAmbient& amb, const IdealGenerators& gens, long s, long t) {
    if (s < 0 || t < 0) return 0;
    const long nx = static_cast<long>(amb.x_indices.size());
    const long ny = static_cast<long>(amb.y_indices.size());
    const Int total = count_monomials(s, nx) * count_monomials(t, ny);
    constexpr long dense_guard = 3000;
    if (total > dense_guard)
        throw resource_error("dense cross-check limited to " + std::to_string(dense_guard) +
                             " monomials");
    if (total == 0) return 0;

    const long cx = count_long(s, nx);
    const long cy = count_long(t, ny);
    const long cols = cx * cy;
    std::vector<std::vector<Rat>> rows;

    const auto xcomps = compositions(s, nx);
    const auto ycomps = compositions(t, ny);
    for (const Coordinate& c : gens.linear) {
        if (c.axis == 'x') {
            const long pos = position_of(amb.x_indices, c.index, "x");
            for (long xi = 0; xi < cx; ++xi)
                if (xcomps[static_cast<std::size_t>(xi)][static_cast<std::size_t>(pos)] > 0)
                    for (long yi = 0; yi < cy; ++yi) {
                        std::vector<Rat> row(static_cast<std::size_t>(cols));
                        row[static_cast<std::size_t>(xi * cy + yi)] = Rat(1);
                        rows.push_back(std::move(row));
                    }
        } else {
            const long pos = position_of(amb.y_indices, c.index, "y");
            for (long yi = 0; yi < cy; ++yi)
                if (ycomps[static_cast<std::size_t>(yi)][static_cast<std::size_t>(pos)] > 0)
                    for (long xi = 0; xi < cx; ++xi) {
                        std::vector<Rat> row(static_cast<std::size_t>(cols));
                        row[static_cast<std::size_t>(xi * cy + yi)] = Rat(1);
                        rows.push_back(std::move(row));
                    }
        }
    }
    if (!gens.minors.empty() && s >= 1 && t >= 1) {
        const auto xsub = compositions(s - 1, nx);
        const auto ysub = compositions(t - 1, ny);
        for (const MinorPair& mp : gens.minors) {
            const long pix = position_of(amb.x_indices, mp.i, "x");
            const long pjx = position_of(amb.x_indices, mp.j, "x");
            const long piy = position_of(amb.y_indices, mp.i, "y");
            const long pjy = position_of(amb.y_indices, mp.j, "y");
            for (auto a : xsub)
                for (auto b : ysub) {
                    auto ai = a;
                    ++ai[static_cast<std::size_t>(pix)];
                    auto bj = b;
                    ++bj[static_cast<std::size_t>(pjy)];
                    auto aj = a;
                    ++aj[static_cast<std::size_t>(pjx)];
                    auto bi = b;
                    ++bi[static_cast<std::size_t>(piy)];
                    const long ida = rank_composition(ai, s) * cy + rank_composition(bj, t);
                    const long idb = rank_composition(aj, s) * cy + rank_composition(bi, t);
                    std::vector<Rat> row(static_cast<std::size_t>(cols));
                    row[static_cast<std::size_t>(ida)] += Rat(1);
                    row[static_cast<std::size_t>(idb)] -= Rat(1);
                    rows.push_back(std::move(row));
                }
        }
    }

    if (rows.empty()) return Int(cols);
    Mat m(rows.size(), static_cast<std::size_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return Int(cols - static_cast<long>(rref(m).rank));
}

Int hf_minor_combinatorial(const MinorScheme& sch, long s, long t) {
    if (sch.m < -1) throw input_error("hf_minor_combinatorial requires m >= -1");
    if (sch.p < 0 || sch.q < 0)
        throw input_error("hf_minor_combinatorial requires p, q >= 0");
    if (s < 0 || t < 0) return 0;
    Int acc = 0;
    for (long a = 0; a <= s; ++a)
        for (long b = 0; b <= t; ++b)
            acc += count_monomials(a, sch.q) * count_monomials(b, sch.p) *
                   count_monomials(s - a + t - b, sch.m + 1);
    return acc;
}

Int hf_linear_algebra(const MinorScheme& sch, long s, long t) {
    if (sch.m < -1) throw input_error("hf_linear_algebra requires m >= -1");
    return hf_generators(ambient_of(sch), minor_generators(sch), s, t);
}

namespace {

// Parameter-monomial exponent layout for component k: alpha, beta, the block
// variables v_0..v_m, then the free tail coordinates in ambient order.
std::vector<long> pullback_exponents(const UnionSpec& spec, long k,
                                     const std::vector<int>& a, const std::vector<int>& b,
                                     bool& vanishes) {
    const long p = spec.p_seq[static_cast<std::size_t>(k)];
    const long m = spec.mults[static_cast<std::size_t>(k)];
    const long r = spec.r;
    vanishes = false;
    std::vector<long> e(static_cast<std::size_t>(r + 3), 0);
    // e[0] = alpha, e[1] = beta, e[2 + u] = v_u, then xtail (q slots) and
    // ytail (p slots).
    const std::size_t xtail_base = static_cast<std::size_t>(2 + m + 1);
    const std::size_t ytail_base = xtail_base + static_cast<std::size_t>(r - p - m);
    for (long j = 0; j <= r; ++j) {
        const int aj = a[static_cast<std::size_t>(j)];
        if (aj > 0) {
            if (j < p) {
                vanishes = true;
                return e;
            }
            if (j <= p + m) {
                e[0] += aj;
                e[static_cast<std::size_t>(2 + j - p)] += aj;
            } else {
                e[xtail_base + static_cast<std::size_t>(j - p - m - 1)] += aj;
            }
        }
        const int bj = b[static_cast<std::size_t>(j)];
        if (bj > 0) {
            if (j > p + m) {
                vanishes = true;
                return e;
            }
            if (j >= p) {
                e[1] += bj;
                e[static_cast<std::size_t>(2 + j - p)] += bj;
            } else {
                e[ytail_base + static_cast<std::size_t>(j)] += bj;
            }
        }
    }
    return e;
}

} // namespace

Int hf_union(const UnionSpec& spec, long s, long t) {
    if (s < 0 || t < 0) return 0;
    const long r = spec.r;
    const Int total = count_monomials(s, r + 1) * count_monomials(t, r + 1);
    if (total > kMonomialGuard)
        throw resource_error("bidegree (" + std::to_string(s) + ", " + std::to_string(t) +
                             ") needs " + total.str() + " monomials, over the limit of " +
                             std::to_string(kMonomialGuard));

    const auto xcomps = compositions(s, r + 1);
    const auto ycomps = compositions(t, r + 1);
    const long ncomp = spec.n() + 1;

    // Global column ids per (component, parameter monomial).
    std::map<std::pair<long, std::vector<long>>, long> col_ids;
    std::vector<std::vector<long>> rows;
    rows.reserve(xcomps.size() * ycomps.size());
    for (const auto& a : xcomps)
        for (const auto& b : ycomps) {
            std::vector<long> row;
            for (long k = 0; k < ncomp; ++k) {
                bool vanishes = false;
                auto e = pullback_exponents(spec, k, a, b, vanishes);
                if (vanishes) continue;
                auto key = std::make_pair(k, std::move(e));
                auto [it, fresh] =
                    col_ids.try_emplace(std::move(key), static_cast<long>(col_ids.size()));
                row.push_back(it->second);
            }
            if (!row.empty()) {
                std::sort(row.begin(), row.end());
                rows.push_back(std::move(row));
            }
        }

    // Identical rows are dependent; keep one of each.
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // A row holding a column no other row touches is independent; peeling it
    // off cascades.
    std::unordered_map<long, long> occ;
    for (const auto& row : rows)
        for (long c : row) ++occ[c];
    std::vector<bool> removed(rows.size(), false);
    long rank = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        std::unordered_map<long, std::size_t> sole_row;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (removed[i]) continue;
            for (long c : rows[i])
                if (occ[c] == 1) sole_row[c] = i;
        }
        for (const auto& [c, i] : sole_row) {
            if (removed[i]) continue;
            removed[i] = true;
            ++rank;
            for (long cc : rows[i]) --occ[cc];
            progress = true;
        }
    }

    // Exact sparse elimination over Q for whatever is left.
    std::unordered_map<long, std::vector<std::pair<long, Rat>>> pivots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (removed[i]) continue;
        std::vector<std::pair<long, Rat>> row;
        row.reserve(rows[i].size());
        for (long c : rows[i]) row.emplace_back(c, Rat(1));
        while (!row.empty()) {
            const long lead = row.front().first;
            const auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const Rat inv = Rat(1) / row.front().second;
                for (auto& [c, v] : row) v *= inv;
                pivots.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            // row -= row.lead_coeff * pivot (pivot is monic at lead).
            const Rat f = row.front().second;
            std::vector<std::pair<long, Rat>> merged;
            merged.reserve(row.size() + it->second.size());
            std::size_t ia = 0;
            std::size_t ib = 0;
            const auto& piv = it->second;
            while (ia < row.size() && ib < piv.size()) {
                if (row[ia].first < piv[ib].first) {
                    merged.push_back(row[ia++]);
                } else if (piv[ib].first < row[ia].first) {
                    merged.emplace_back(piv[ib].first, -(f * piv[ib].second));
                    ++ib;
                } else {
                    Rat v = row[ia].second - f * piv[ib].second;
                    if (!v.is_zero()) merged.emplace_back(row[ia].first, std::move(v));
                    ++ia;
                    ++ib;
                }
            }
            while (ia < row.size()) merged.push_back(row[ia++]);
            while (ib < piv.size()) {
                merged.emplace_back(piv[ib].first, -(f * piv[ib].second));
                ++ib;
            }
            row = std::move(merged);
        }
    }
    return Int(rank);
}

CertifyResult certify(const BivarPoly& closed_form, long grid_bound,
                      const std::function<Int(long, long)>& oracle) {
    if (grid_bound < 0) throw input_error("certify requires a nonnegative grid bound");
    if (grid_bound < closed_form.total_degree())
        throw input_error("certify grid bound " + std::to_string(grid_bound) +
                          " is below the polynomial's total degree " +
                          std::to_string(closed_form.total_degree()));
    CertifyResult res;
    for (long s = 0; s <= grid_bound; ++s)
        for (long t = 0; t <= grid_bound; ++t) {
            const Int expected = oracle(s, t);
            const Rat got = closed_form.evaluate(Rat(s), Rat(t));
            if (got != Rat(expected)) res.mismatches.push_back({s, t, expected, got});
        }
    res.pass = res.mismatches.empty();
    return res;
}

} // namespace llab
