#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "llab/error.hpp"
#include "llab/json_io.hpp"
#include "llab/limitseries.hpp"

using namespace llab;

namespace {

// Two-level chain with one-dimensional section spaces:
//   level 0 basis (e1, e2), level 1 basis (f1, f2)
//   up: e1 -> f2, e2 -> 0      down: f1 -> e2, f2 -> 0
ExplicitLimitSeries tiny_chain() {
    ExplicitLimitSeries ls;
    ls.d = 1;
    ls.r = 0;
    ls.ambient = {2, 2};
    ls.up = {Mat{{0, 0}, {1, 0}}};
    ls.down = {Mat{{0, 0}, {1, 0}}};
    ls.Y0 = {Subspace(2), Subspace::span(2, Mat{{0, 1}})};
    ls.Z0 = {Subspace::span(2, Mat{{0, 1}}), Subspace::span(2, Mat{{1, 0}})};
    ls.V = {Subspace::span(2, Mat{{1, 0}}), Subspace::span(2, Mat{{0, 1}})};
    return ls;
}

bool has_category(const ValidationReport& rep, const std::string& cat) {
    return std::any_of(rep.issues.begin(), rep.issues.end(),
                       [&](const ValidationIssue& is) { return is.category == cat; });
}

} // namespace

TEST_CASE("hand-built chain is valid and exact") {
    const auto ls = tiny_chain();
    const auto rep = validate(ls);
    CHECK(rep.valid);
    CHECK(rep.issues.empty());

    const auto dims = boundary_dims(ls);
    CHECK(dims.y == std::vector<long>{0, 1});
    CHECK(dims.z == std::vector<long>{0, 0});

    const auto ex = is_exact(ls);
    CHECK(ex.exact);
    CHECK(ex.by_subspace);
    CHECK(ex.by_dimension);
    CHECK(ex.failing_links.empty());
}

TEST_CASE("valid but non-exact chain is detected both ways") {
    auto ls = tiny_chain();
    ls.V[0] = Subspace::span(2, Mat{{0, 1}}); // sections killed by the up map
    const auto rep = validate(ls);
    CHECK(rep.valid);

    const auto ex = is_exact(ls);
    CHECK_FALSE(ex.exact);
    CHECK_FALSE(ex.by_subspace);
    CHECK_FALSE(ex.by_dimension);
    CHECK(ex.failing_links == std::vector<long>{0});

    // valid series always satisfy the one-sided bound
    const auto dims = boundary_dims(ls);
    for (long i = 0; i < ls.d; ++i)
        CHECK(dims.z[i] + dims.y[i + 1] >= ls.r + 1);

    // every level is degenerate here, so no stratum survives
    CHECK_THROWS_AS(empty_range(ls), Error);
}

TEST_CASE("validation reports the violated axiom") {
    {
        auto ls = tiny_chain();
        ls.up[0] = Mat{{0, 0, 0}, {1, 0, 0}}; // wrong shape
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "shape"));
    }
    {
        auto ls = tiny_chain();
        ls.V[0] = Subspace::span(2, Mat{{1, 0}, {0, 1}}); // dim != r + 1
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "dimension"));
    }
    {
        auto ls = tiny_chain();
        ls.V[1] = Subspace::span(2, Mat{{1, 0}}); // up image leaves V
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "linkage"));
    }
    {
        auto ls = tiny_chain();
        ls.down[0] = Mat{{1, 0}, {0, 0}}; // up then down no longer vanishes
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "composition"));
    }
    {
        auto ls = tiny_chain();
        ls.Z0[0] = Subspace::span(2, Mat{{1, 0}}); // not the kernel of up
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "kernel"));
    }
    {
        auto ls = tiny_chain();
        ls.Y0[1] = Subspace::span(2, Mat{{1, 0}}); // up image escapes the mark
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "image"));
    }
    {
        auto ls = tiny_chain();
        ls.Z0[1] = Subspace::span(2, Mat{{0, 1}}); // meets Y0 at level 1
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "marked"));
        CHECK(has_category(rep, "boundary")); // V[d] now meets Z0[d] too
    }
    {
        auto ls = tiny_chain();
        ls.V[0] = Subspace::span(2, Mat{{0, 1}});
        ls.Y0[0] = Subspace::span(2, Mat{{0, 1}});
        ls.Z0[0] = Subspace(2);
        // kernel of up is e2 = Y0[0] now, so the kernel axiom breaks as well
        const auto rep = validate(ls);
        CHECK_FALSE(rep.valid);
        CHECK(has_category(rep, "boundary"));
    }
}

TEST_CASE("exactness refuses invalid series") {
    auto ls = tiny_chain();
    ls.up[0] = Mat{{0, 0, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(is_exact(ls), Error);
}

TEST_CASE("generated series are valid, exact, and roundtrip their jumps") {
    const std::vector<std::pair<long, std::vector<long>>> cases = {
        {0, {0}},          // r = 0, d = 0
        {1, {0, 2}},       // gap
        {2, {0, 0, 3}},    // repeated jump
        {3, {1, 1, 2, 2}}, // interior jumps only
    };
    std::uint64_t seed = 11;
    for (const auto& [r, jumps] : cases) {
        const long d = *std::max_element(jumps.begin(), jumps.end());
        const auto ls = generate_exact(seed++, r, d + 1, jumps);
        CHECK(ls.r == r);
        CHECK(ls.d == d + 1);

        const auto rep = validate(ls);
        REQUIRE(rep.valid);
        const auto ex = is_exact(ls);
        CHECK(ex.exact);

        const auto diag = diagonalize(ls);
        CHECK(diag.jump_indices == jumps);
        CHECK(std::accumulate(diag.counts.begin(), diag.counts.end(), 0L) == r + 1);

        // jumps / mults encode the same multiset
        std::vector<long> expanded;
        for (std::size_t i = 0; i < diag.jumps.size(); ++i)
            for (long c = 0; c <= diag.mults[i]; ++c) expanded.push_back(diag.jumps[i]);
        CHECK(expanded == diag.jump_indices);
    }
}

TEST_CASE("generator validates its jump data") {
    CHECK_THROWS_AS(generate_exact(1, 1, 3, {0}), Error);       // wrong count
    CHECK_THROWS_AS(generate_exact(1, 1, 3, {2, 1}), Error);    // decreasing
    CHECK_THROWS_AS(generate_exact(1, 1, 3, {0, 4}), Error);    // beyond d
    CHECK_THROWS_AS(generate_exact(1, 1, 3, {-1, 2}), Error);   // negative
    CHECK_THROWS_AS(generate_exact(1, -1, 3, {}), Error);       // bad rank
}

TEST_CASE("chain monotonicity of the boundary dimensions") {
    const auto ls = generate_exact(23, 3, 6, {0, 2, 2, 5});
    const auto dims = boundary_dims(ls);
    for (long i = 0; i < ls.d; ++i) {
        CHECK(dims.y[i] <= dims.y[i + 1]);
        CHECK(dims.z[i] >= dims.z[i + 1]);
    }
}

TEST_CASE("diagonal sections transport to a basis at every level") {
    const auto ls = generate_exact(5, 2, 4, {0, 2, 4});
    const auto diag = diagonalize(ls);
    for (long target = 0; target <= ls.d; ++target) {
        std::vector<std::vector<Rat>> rows;
        for (long lvl = 0; lvl <= ls.d; ++lvl)
            for (std::size_t c = 0; c < diag.sections[lvl].rows(); ++c)
                rows.push_back(transport(ls, lvl, target, diag.sections[lvl].row(c)));
        const auto span = Subspace::span(ls.ambient[target], rows);
        CHECK(span == ls.V[target]);
    }
}

TEST_CASE("transport validates its levels") {
    const auto ls = tiny_chain();
    CHECK_THROWS_AS(transport(ls, 0, 2, {Rat(1), Rat(0)}), Error);
    CHECK_THROWS_AS(transport(ls, -1, 0, {Rat(1), Rat(0)}), Error);
    CHECK_THROWS_AS(transport(ls, 0, 1, {Rat(1)}), Error); // wrong length
    // a round trip through the chain annihilates (compositions vanish)
    const auto fwd = transport(ls, 0, 1, {Rat(1), Rat(0)});
    const auto back = transport(ls, 1, 0, fwd);
    CHECK(std::all_of(back.begin(), back.end(), [](const Rat& v) { return v.is_zero(); }));
}

TEST_CASE("level range and level schemes") {
    // refined-style series: every level in range
    const auto ls = generate_exact(5, 2, 4, {0, 2, 4});
    const auto range = empty_range(ls);
    CHECK(range.lo == 0);
    CHECK(range.hi == 4);

    CHECK(pg_component(ls, 0) == MinorScheme{0, 2, 0});
    CHECK(pg_component(ls, 1) == MinorScheme{1, 2, -1});
    CHECK(pg_component(ls, 2) == MinorScheme{1, 1, 0});
    CHECK(pg_component(ls, 3) == MinorScheme{2, 1, -1});
    CHECK(pg_component(ls, 4) == MinorScheme{2, 0, 0});
    CHECK_THROWS_AS(pg_component(ls, 5), Error);
    CHECK_THROWS_AS(pg_component(ls, -1), Error);

    // p + q + m = r at every level
    for (long i = range.lo; i <= range.hi; ++i) {
        const auto sch = pg_component(ls, i);
        CHECK(sch.p + sch.q + sch.m == ls.r);
    }

    const auto spec = pg_union(ls);
    CHECK(spec.full);
    CHECK(spec.r == 2);
    CHECK(spec.mults == std::vector<long>{0, 0, 0});
}

TEST_CASE("concentrated jumps shrink the level range") {
    // all sections jump at level 1 of a length-3 chain
    const auto ls = generate_exact(9, 1, 3, {1, 1});
    const auto dims = boundary_dims(ls);
    const auto range = empty_range(ls);
    for (long i = range.lo; i <= range.hi; ++i) {
        CHECK(dims.y[i] <= ls.r);
        CHECK(dims.z[i] <= ls.r);
    }
    CHECK((range.lo > 0 || range.hi < 3));
    const auto spec = pg_union(ls);
    CHECK(spec.mults == std::vector<long>{1});
    CHECK(spec.r == 1);
    // a stratum outside the range is empty
    if (range.hi < 3) CHECK_THROWS_AS(pg_component(ls, 3), Error);
    if (range.lo > 0) CHECK_THROWS_AS(pg_component(ls, 0), Error);
}

TEST_CASE("series survive the JSON roundtrip bit for bit") {
    const auto ls = generate_exact(77, 2, 3, {0, 1, 3});
    const auto ls2 = series_of_json(json_of(ls));
    CHECK(ls2.d == ls.d);
    CHECK(ls2.r == ls.r);
    CHECK(ls2.ambient == ls.ambient);
    CHECK(ls2.up == ls.up);
    CHECK(ls2.down == ls.down);
    CHECK(ls2.Y0 == ls.Y0);
    CHECK(ls2.Z0 == ls.Z0);
    CHECK(ls2.V == ls.V);
    // canonical dump is stable
    CHECK(dump_report(json_of(ls)) == dump_report(json_of(ls2)));
}

TEST_CASE("series JSON validates structure and format tag") {
    const auto ls = tiny_chain();
    auto j = json_of(ls);
    j["format"] = "llab/999";
    CHECK_THROWS_AS(series_of_json(j), Error);
    auto k = json_of(ls);
    k.erase("up");
    CHECK_THROWS_AS(series_of_json(k), Error);
    CHECK_THROWS_AS(parse_text("{not json"), Error);
}
