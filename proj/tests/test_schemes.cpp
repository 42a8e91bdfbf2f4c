#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "llab/error.hpp"
#include "llab/schemes.hpp"

using namespace llab;

namespace {

// All multiplicity lists with Sum(m_i + 1) <= r + 1.
std::vector<std::vector<long>> all_mult_lists(long r) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    const std::function<void(long)> rec = [&](long budget) {
        if (!cur.empty()) out.push_back(cur);
        for (long m = 0; m + 1 <= budget; ++m) {
            cur.push_back(m);
            rec(budget - m - 1);
            cur.pop_back();
        }
    };
    rec(r + 1);
    return out;
}

} // namespace

TEST_CASE("union spec derives offsets, complements, and fullness") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    CHECK(spec.p_seq == std::vector<long>{0, 2, 3});
    CHECK(spec.q_seq == std::vector<long>{3, 2, 0});
    CHECK(spec.full);
    CHECK(spec.n() == 2);

    const auto part = make_union_spec(4, {1, 0});
    CHECK(part.p_seq == std::vector<long>{0, 2});
    CHECK(part.q_seq == std::vector<long>{3, 2});
    CHECK_FALSE(part.full);

    CHECK(make_union_spec(0, {0}).full);
}

TEST_CASE("union spec rejects malformed input") {
    CHECK_THROWS_AS(make_union_spec(-1, {0}), Error);
    CHECK_THROWS_AS(make_union_spec(2, {}), Error);
    CHECK_THROWS_AS(make_union_spec(2, {0, -1}), Error);
    CHECK_THROWS_AS(make_union_spec(2, {1, 1}), Error);   // 2+2 > 3
    CHECK_THROWS_AS(make_union_spec(1, {0, 0, 0}), Error); // 3 > 2
}

TEST_CASE("diagonal-case closed form collapses to one binomial") {
    for (long m = 0; m <= 3; ++m)
        CHECK(hilbert_minor({0, 0, m}) == binom_poly(BinomVar::st, m, m));
}

TEST_CASE("frozen closed forms for small schemes") {
    // p = q = 0, m = 1: 1 + s + t
    const auto diag1 = hilbert_minor({0, 0, 1});
    CHECK(diag1.coeff(0, 0) == Rat(1));
    CHECK(diag1.coeff(1, 0) == Rat(1));
    CHECK(diag1.coeff(0, 1) == Rat(1));
    CHECK(diag1.total_degree() == 1);

    // degenerate product P^{q-1} x P^{p-1}
    CHECK(hilbert_product({1, 1, -1}) == BivarPoly::constant(Rat(1)));
    const auto prod21 = hilbert_product({2, 1, -1}); // P^0 x P^1
    CHECK(prod21 == binom_poly(BinomVar::t, 1, 1));

    // dispatch
    CHECK(hilbert_poly({1, 1, -1}) == hilbert_product({1, 1, -1}));
    CHECK(hilbert_poly({0, 0, 2}) == hilbert_minor({0, 0, 2}));
    CHECK_THROWS_AS(hilbert_poly({1, 1, -2}), Error);
    CHECK_THROWS_AS(hilbert_minor({1, 1, -1}), Error);
    CHECK_THROWS_AS(hilbert_product({0, 1, -1}), Error);
    CHECK_THROWS_AS(hilbert_product({1, 1, 0}), Error);
}

TEST_CASE("total degree of the minor closed form is m + p + q") {
    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q)
            for (long m = 0; m <= 3; ++m)
                CHECK(hilbert_minor({p, q, m}).total_degree() == m + p + q);
}

TEST_CASE("frozen closed forms for small unions") {
    // r = 1, blocks [0, 0]: the full chain, 1 + s + t
    const auto u11 = hilbert_union(make_union_spec(1, {0, 0}));
    CHECK(u11 == binom_poly(BinomVar::st, 1, 1));

    // r = 2, blocks [0, 0]: C(s+2,2) + (s+1)t
    const auto u2 = hilbert_union(make_union_spec(2, {0, 0}));
    auto expected = binom_poly(BinomVar::s, 2, 2);
    expected += binom_poly(BinomVar::s, 1, 1) * binom_poly(BinomVar::t, 0, 1);
    CHECK(u2 == expected);

    // r = 2, single block [0]: one point's worth of x-space, C(s+2,2)
    CHECK(hilbert_union(make_union_spec(2, {0})) == binom_poly(BinomVar::s, 2, 2));

    // single full block [r] is the diagonal scheme
    for (long r = 0; r <= 4; ++r)
        CHECK(hilbert_union(make_union_spec(r, {r})) == binom_poly(BinomVar::st, r, r));
}

TEST_CASE("full unions share the diagonal Hilbert polynomial") {
    for (long r = 0; r <= 5; ++r)
        for (const auto& mults : all_mult_lists(r)) {
            const auto spec = make_union_spec(r, mults);
            if (!spec.full) continue;
            CHECK(hilbert_union(spec) == binom_poly(BinomVar::st, r, r));
        }
}

TEST_CASE("union polynomial obeys the component recursion") {
    // P(0..k) = P(0..k-1) + P(component k) - P(intersection)
    for (long r = 1; r <= 5; ++r)
        for (const auto& mults : all_mult_lists(r)) {
            if (mults.size() < 2) continue;
            const auto spec = make_union_spec(r, mults);
            const std::vector<long> head(mults.begin(), mults.end() - 1);
            const auto prev = make_union_spec(r, head);
            const long k = spec.n();
            const MinorScheme comp{spec.p_seq[k], spec.q_seq[k], spec.mults[k]};
            const auto inter = consecutive_intersection(spec, k);
            CHECK(hilbert_union(spec) ==
                  hilbert_union(prev) + hilbert_poly(comp) - inter.hilbert());
        }
}

TEST_CASE("consecutive intersections are coordinate products") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    const auto inter = consecutive_intersection(spec, 1); // meets block at p_1 = 2
    CHECK(inter.dim_x == 2); // P^{r - p_k} x P^{p_k - 1}
    CHECK(inter.dim_y == 1);
    // V(x_0, x_1, y_2, y_3, y_4)
    std::vector<Coordinate> expect_vanish{
        {'x', 0}, {'x', 1}, {'y', 2}, {'y', 3}, {'y', 4}};
    CHECK(inter.vanishing == expect_vanish);
    CHECK(inter.hilbert() ==
          binom_poly(BinomVar::s, 2, 2) * binom_poly(BinomVar::t, 1, 1));
    CHECK_THROWS_AS(consecutive_intersection(spec, 0), Error);
    CHECK_THROWS_AS(consecutive_intersection(spec, 3), Error);
}

TEST_CASE("component schemes and their embeddings") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    const auto comps = component_schemes(spec);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].scheme == MinorScheme{0, 3, 1});
    CHECK(comps[1].scheme == MinorScheme{2, 2, 0});
    CHECK(comps[2].scheme == MinorScheme{3, 0, 1});
    // component 1: V(x_0, x_1, y_3, y_4)
    std::vector<Coordinate> expect{{'x', 0}, {'x', 1}, {'y', 3}, {'y', 4}};
    CHECK(comps[1].vanishing == expect);
    // first component has no x head, last has no y tail
    CHECK(comps[0].vanishing ==
          std::vector<Coordinate>{{'y', 2}, {'y', 3}, {'y', 4}});
    CHECK(comps[2].vanishing ==
          std::vector<Coordinate>{{'x', 0}, {'x', 1}, {'x', 2}});
}

TEST_CASE("minor ideals list the block minors") {
    const auto gens = minor_generators({1, 1, 1});
    CHECK(gens.linear.empty());
    REQUIRE(gens.minors.size() == 1);
    CHECK(gens.minors[0] == MinorPair{1, 2});

    const auto g2 = minor_generators({0, 0, 2});
    CHECK(g2.minors.size() == 3); // C(3, 2)

    const auto amb = ambient_of({1, 2, 1});
    CHECK(amb.x_indices == std::vector<long>{1, 2, 3, 4}); // p .. m+p+q
    CHECK(amb.y_indices == std::vector<long>{0, 1, 2});    // 0 .. m+p

    const auto pr = ambient_pr_r(2);
    CHECK(pr.x_indices == std::vector<long>{0, 1, 2});
    CHECK(pr.y_indices == std::vector<long>{0, 1, 2});
}

TEST_CASE("embedded ideals combine vanishing coordinates with block minors") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    const auto g0 = embedded_generators(spec, 0);
    CHECK(g0.linear == std::vector<Coordinate>{{'y', 2}, {'y', 3}, {'y', 4}});
    REQUIRE(g0.minors.size() == 1);
    CHECK(g0.minors[0] == MinorPair{0, 1}); // block 0 covers coordinates 0, 1

    const auto g2 = embedded_generators(spec, 2);
    CHECK(g2.linear ==
          std::vector<Coordinate>{{'x', 0}, {'x', 1}, {'x', 2}});
    REQUIRE(g2.minors.size() == 1);
    CHECK(g2.minors[0] == MinorPair{3, 4});

    const auto g1 = embedded_generators(spec, 1); // single-point block, no minors
    CHECK(g1.minors.empty());
    CHECK_THROWS_AS(embedded_generators(spec, 3), Error);
}

TEST_CASE("block lookup requires a full spec") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    CHECK(block_of(spec, 0) == 0);
    CHECK(block_of(spec, 1) == 0);
    CHECK(block_of(spec, 2) == 1);
    CHECK(block_of(spec, 3) == 2);
    CHECK(block_of(spec, 4) == 2);
    CHECK_THROWS_AS(block_of(spec, 5), Error);
    CHECK_THROWS_AS(block_of(make_union_spec(4, {1, 0}), 0), Error);
}

TEST_CASE("coordinate pullbacks follow the three-zone parameterization") {
    const auto spec = make_union_spec(4, {1, 0, 1});
    const long k = 1; // block at p_1 = 2, m_1 = 0

    // x head vanishes
    CHECK_FALSE(coordinate_pullback(spec, k, {'x', 0}).has_value());
    CHECK_FALSE(coordinate_pullback(spec, k, {'x', 1}).has_value());
    // y tail vanishes
    CHECK_FALSE(coordinate_pullback(spec, k, {'y', 3}).has_value());
    CHECK_FALSE(coordinate_pullback(spec, k, {'y', 4}).has_value());

    // block coordinate on the x side: alpha * v_0
    const auto xb = coordinate_pullback(spec, k, {'x', 2});
    REQUIRE(xb.has_value());
    const ParamMonomial expect_xb{{{ParamVar::Kind::alpha, 0}, 1},
                                  {{ParamVar::Kind::v, 0}, 1}};
    CHECK(*xb == expect_xb);

    // free x tail and free y head
    const auto xt = coordinate_pullback(spec, k, {'x', 4});
    REQUIRE(xt.has_value());
    CHECK(*xt == ParamMonomial{{{ParamVar::Kind::xtail, 4}, 1}});
    const auto yh = coordinate_pullback(spec, k, {'y', 0});
    REQUIRE(yh.has_value());
    CHECK(*yh == ParamMonomial{{{ParamVar::Kind::ytail, 0}, 1}});

    // products merge sorted exponent lists
    const auto prod = param_product(*xb, *xb);
    const ParamMonomial expect_sq{{{ParamVar::Kind::alpha, 0}, 2},
                                  {{ParamVar::Kind::v, 0}, 2}};
    CHECK(prod == expect_sq);
    const auto mixed = param_product(*xb, *yh);
    CHECK(mixed.size() == 3);
}
