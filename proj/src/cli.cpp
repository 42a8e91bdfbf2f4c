#include "llab/cli.hpp"

#include <cstdint>
#include <functional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "llab/abelfiber.hpp"
#include "llab/degeneration.hpp"
#include "llab/error.hpp"
#include "llab/json_io.hpp"
#include "llab/limitseries.hpp"
#include "llab/oracle.hpp"
#include "llab/schemes.hpp"

namespace llab::cli {

namespace {

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        const std::string tok =
            text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty()) throw input_error("empty entry in integer list '" + text + "'");
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw input_error("bad integer '" + tok + "' in list");
        }
        if (used != tok.size()) throw input_error("bad integer '" + tok + "' in list");
        out.push_back(v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

Json envelope(const std::string& verb) {
    Json j;
    j["format"] = kFormatTag;
    j["verb"] = verb;
    return j;
}

Json poly_payload(const BivarPoly& p) {
    return Json{{"text", p.to_string()}, {"terms", json_of(p)}, {"total_degree", p.total_degree()}};
}

Json spec_payload(const UnionSpec& spec) {
    Json comps = Json::array();
    for (const auto& ce : component_schemes(spec))
        comps.push_back(Json{{"p", ce.scheme.p}, {"q", ce.scheme.q}, {"m", ce.scheme.m}});
    return Json{{"r", spec.r},     {"mults", spec.mults}, {"p_seq", spec.p_seq},
                {"q_seq", spec.q_seq}, {"full", spec.full},   {"components", std::move(comps)}};
}

Json certify_payload(const CertifyResult& res) {
    Json mism = Json::array();
    for (const auto& mm : res.mismatches)
        mism.push_back(Json{{"s", mm.s},
                            {"t", mm.t},
                            {"expected", json_of(mm.expected)},
                            {"got", mm.got.to_string()}});
    return Json{{"pass", res.pass}, {"mismatches", std::move(mism)}};
}

Json no_grds_payload(const NoGrdsReport& rep) {
    return Json{{"eh", rep.eh},
                {"fiber_empty", rep.fiber_empty},
                {"min_dim", rep.min_dim},
                {"consistent", rep.consistent},
                {"converse_failure", rep.converse_failure}};
}

struct Verdict {
    int exit_code = 0;
    Json payload;
};

} // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"Toolkit for chain Hilbert functions, section-space chains, "
                 "split fibers, and flat degenerations"};
    app.require_subcommand(0, 1);

    // hilbert-minor
    long hm_p = 0, hm_q = 0, hm_m = 0;
    std::vector<long> hm_eval;
    auto* hm = app.add_subcommand("hilbert-minor",
                                  "Closed-form Hilbert polynomial of a determinantal scheme");
    hm->add_option("--p", hm_p, "head offset p")->required();
    hm->add_option("--q", hm_q, "tail size q")->required();
    hm->add_option("--m", hm_m, "block multiplicity m (-1 for the full product)")->required();
    hm->add_option("--eval", hm_eval, "evaluate at (s, t)")->expected(2);

    // hilbert-union
    long hu_r = 0;
    std::string hu_mults;
    std::vector<long> hu_eval;
    auto* hu = app.add_subcommand("hilbert-union",
                                  "Closed-form Hilbert polynomial of a chain union");
    hu->add_option("--r", hu_r, "ambient rank r")->required();
    hu->add_option("--mults", hu_mults, "comma list of block multiplicities")->required();
    hu->add_option("--eval", hu_eval, "evaluate at (s, t)")->expected(2);

    // certify
    std::string ct_target = "minor";
    std::string ct_oracle = "both";
    long ct_p = 0, ct_q = 0, ct_m = 0, ct_r = 0, ct_grid = -1;
    std::string ct_mults;
    auto* ct = app.add_subcommand("certify",
                                  "Check a closed form against brute-force oracles on a grid");
    ct->add_option("--target", ct_target, "minor or union")
        ->check(CLI::IsMember({"minor", "union"}));
    ct->add_option("--p", ct_p, "minor: head offset p");
    ct->add_option("--q", ct_q, "minor: tail size q");
    ct->add_option("--m", ct_m, "minor: block multiplicity m");
    ct->add_option("--r", ct_r, "union: ambient rank r");
    ct->add_option("--mults", ct_mults, "union: comma list of multiplicities");
    ct->add_option("--grid", ct_grid, "grid bound G (default: the total degree)");
    ct->add_option("--oracle", ct_oracle, "minor oracle: combinatorial, rank, or both")
        ->check(CLI::IsMember({"combinatorial", "rank", "both"}));

    // fiber
    long fb_d = 0, fb_ell = -1;
    std::string fb_ay, fb_az;
    auto* fb = app.add_subcommand("fiber", "Components of a split fiber from vanishing data");
    fb->add_option("--d", fb_d, "degree d")->required();
    fb->add_option("--aY", fb_ay, "comma list, vanishing sequence at the Y side")->required();
    fb->add_option("--aZ", fb_az, "comma list, vanishing sequence at the Z side")->required();
    fb->add_option("--ell", fb_ell, "also report the piece at this split degree");

    // eh
    long eh_d = 0, eh_r = 0;
    std::string eh_ay, eh_az;
    auto* eh = app.add_subcommand("eh", "Existence of rank-r section subsequences");
    eh->add_option("--d", eh_d, "degree d")->required();
    eh->add_option("--r", eh_r, "rank r")->required();
    eh->add_option("--aY", eh_ay, "comma list, vanishing sequence at the Y side")->required();
    eh->add_option("--aZ", eh_az, "comma list, vanishing sequence at the Z side")->required();

    // no-grds-scan
    std::uint64_t ng_seed = 1;
    long ng_count = 100, ng_max_d = 10, ng_max_r = 4;
    auto* ng = app.add_subcommand(
        "no-grds-scan", "Scan random vanishing data for dimension/existence mismatches");
    ng->add_option("--seed", ng_seed, "random seed");
    ng->add_option("--count", ng_count, "number of random instances");
    ng->add_option("--max-d", ng_max_d, "largest degree to draw");
    ng->add_option("--max-r", ng_max_r, "largest rank to draw");

    // series-validate
    std::string sv_in;
    auto* sv = app.add_subcommand("series-validate", "Validate a series file and test exactness");
    sv->add_option("--in", sv_in, "series JSON file")->required();

    // series-diagonalize
    std::string sd_in;
    auto* sd = app.add_subcommand("series-diagonalize",
                                  "Jump indices and diagonal sections of an exact series");
    sd->add_option("--in", sd_in, "series JSON file")->required();

    // series-pg
    std::string sp_in;
    long sp_level = -1;
    bool sp_have_level = false;
    auto* sp = app.add_subcommand("series-pg",
                                  "Level schemes and the union spec of an exact series");
    sp->add_option("--in", sp_in, "series JSON file")->required();
    auto* sp_level_opt = sp->add_option("--level", sp_level, "single level to report");

    // degenerate
    long dg_r = 0;
    std::string dg_mults, dg_z;
    auto* dg = app.add_subcommand("degenerate",
                                  "Family generators joining the diagonal to a chain union");
    dg->add_option("--r", dg_r, "ambient rank r")->required();
    dg->add_option("--mults", dg_mults, "comma list of block multiplicities")->required();
    dg->add_option("--z", dg_z, "also specialize the generators at this rational z");

    // sample
    long smp_r = 0, smp_count = 100;
    std::uint64_t smp_seed = 1;
    std::string smp_mults;
    auto* smp = app.add_subcommand(
        "sample", "Randomly test component membership and point limits of a family");
    smp->add_option("--r", smp_r, "ambient rank r")->required();
    smp->add_option("--mults", smp_mults, "comma list of block multiplicities")->required();
    smp->add_option("--seed", smp_seed, "random seed");
    smp->add_option("--count", smp_count, "number of sample points");

    std::ostringstream cap_out, cap_err;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, cap_out, cap_err);
        return {code == 0 ? 0 : 2, cap_out.str() + cap_err.str()};
    }
    sp_have_level = sp_level_opt->count() > 0;

    std::string verb;
    std::function<Verdict()> handler;

    if (hm->parsed()) {
        verb = "hilbert-minor";
        handler = [&]() {
            const MinorScheme sch{hm_p, hm_q, hm_m};
            const BivarPoly poly = hilbert_poly(sch);
            Json j;
            j["input"] = Json{{"p", hm_p}, {"q", hm_q}, {"m", hm_m}};
            j["polynomial"] = poly_payload(poly);
            if (!hm_eval.empty())
                j["eval"] = Json{{"s", hm_eval[0]},
                                 {"t", hm_eval[1]},
                                 {"value", poly.evaluate(Rat(hm_eval[0]), Rat(hm_eval[1])).to_string()}};
            return Verdict{0, std::move(j)};
        };
    } else if (hu->parsed()) {
        verb = "hilbert-union";
        handler = [&]() {
            const UnionSpec spec = make_union_spec(hu_r, parse_long_list(hu_mults));
            const BivarPoly poly = hilbert_union(spec);
            Json j;
            j["input"] = Json{{"r", hu_r}, {"mults", spec.mults}};
            j["spec"] = spec_payload(spec);
            j["polynomial"] = poly_payload(poly);
            if (!hu_eval.empty())
                j["eval"] = Json{{"s", hu_eval[0]},
                                 {"t", hu_eval[1]},
                                 {"value", poly.evaluate(Rat(hu_eval[0]), Rat(hu_eval[1])).to_string()}};
            return Verdict{0, std::move(j)};
        };
    } else if (ct->parsed()) {
        verb = "certify";
        handler = [&]() {
            Json j;
            bool pass = true;
            if (ct_target == "minor") {
                const MinorScheme sch{ct_p, ct_q, ct_m};
                const BivarPoly poly = hilbert_poly(sch);
                const long grid = ct_grid >= 0 ? ct_grid : std::max(poly.total_degree(), 0L);
                j["input"] = Json{{"target", "minor"}, {"p", ct_p},   {"q", ct_q},
                                  {"m", ct_m},         {"grid", grid}, {"oracle", ct_oracle}};
                if (ct_oracle != "rank") {
                    const auto res = certify(poly, grid, [&](long s, long t) {
                        return hf_minor_combinatorial(sch, s, t);
                    });
                    j["combinatorial"] = certify_payload(res);
                    pass = pass && res.pass;
                }
                if (ct_oracle != "combinatorial") {
                    const auto res = certify(
                        poly, grid, [&](long s, long t) { return hf_linear_algebra(sch, s, t); });
                    j["rank"] = certify_payload(res);
                    pass = pass && res.pass;
                }
            } else {
                const UnionSpec spec = make_union_spec(ct_r, parse_long_list(ct_mults));
                const BivarPoly poly = hilbert_union(spec);
                const long grid = ct_grid >= 0 ? ct_grid : std::max(poly.total_degree(), 0L);
                j["input"] = Json{{"target", "union"},
                                  {"r", ct_r},
                                  {"mults", spec.mults},
                                  {"grid", grid}};
                const auto res =
                    certify(poly, grid, [&](long s, long t) { return hf_union(spec, s, t); });
                j["rank"] = certify_payload(res);
                pass = res.pass;
            }
            j["pass"] = pass;
            return Verdict{pass ? 0 : 1, std::move(j)};
        };
    } else if (fb->parsed()) {
        verb = "fiber";
        handler = [&]() {
            const auto ay = parse_long_list(fb_ay);
            const auto az = parse_long_list(fb_az);
            const auto comps = components(fb_d, ay, az);
            Json j;
            j["input"] = Json{{"d", fb_d}, {"a_y", ay}, {"a_z", az}};
            Json list = Json::array();
            for (const auto& c : comps)
                list.push_back(Json{{"ell_lo", c.ell_lo},
                                    {"ell_hi", c.ell_hi},
                                    {"dim_y", c.dims.dim_y},
                                    {"dim_z", c.dims.dim_z},
                                    {"dim", c.dims.total()}});
            j["components"] = std::move(list);
            j["fiber_empty"] = comps.empty();
            if (fb_ell >= 0) {
                const auto dims = piece_dims(fb_d, ay, az, fb_ell);
                j["piece"] = dims ? Json{{"ell", fb_ell},
                                         {"dim_y", dims->dim_y},
                                         {"dim_z", dims->dim_z}}
                                  : Json(nullptr);
            }
            return Verdict{0, std::move(j)};
        };
    } else if (eh->parsed()) {
        verb = "eh";
        handler = [&]() {
            const auto ay = parse_long_list(eh_ay);
            const auto az = parse_long_list(eh_az);
            const auto res = eh_exists(eh_d, eh_r, ay, az);
            Json j;
            j["input"] = Json{{"d", eh_d}, {"r", eh_r}, {"a_y", ay}, {"a_z", az}};
            j["exists"] = res.exists;
            if (res.exists) {
                j["witness_y"] = res.witness_y;
                j["witness_z"] = res.witness_z;
            }
            return Verdict{0, std::move(j)};
        };
    } else if (ng->parsed()) {
        verb = "no-grds-scan";
        handler = [&]() {
            Json j;
            j["input"] = Json{{"seed", ng_seed},
                              {"count", ng_count},
                              {"max_d", ng_max_d},
                              {"max_r", ng_max_r}};
            const std::vector<long> fix_ay{0, 2};
            const std::vector<long> fix_az{0, 1};
            const auto fix = no_grds_check(2, 1, fix_ay, fix_az);
            j["fixture"] = no_grds_payload(fix);
            j["fixture_converse_failure"] = fix.converse_failure;
            Rng rng(ng_seed);
            long violations = 0;
            long converse = 0;
            Json examples = Json::array();
            for (long i = 0; i < ng_count; ++i) {
                const auto fp = random_fiber_problem(rng, ng_max_d, ng_max_r);
                const auto rep = no_grds_check(fp.d, fp.r, fp.a_y, fp.a_z);
                if (!rep.consistent) ++violations;
                if (rep.converse_failure) {
                    ++converse;
                    if (examples.size() < 10)
                        examples.push_back(Json{{"d", fp.d},
                                                {"r", fp.r},
                                                {"a_y", fp.a_y},
                                                {"a_z", fp.a_z},
                                                {"min_dim", rep.min_dim}});
                }
            }
            j["scanned"] = ng_count;
            j["violations"] = violations;
            j["converse_failures"] = converse;
            j["examples"] = std::move(examples);
            const bool pass = violations == 0 && fix.converse_failure;
            j["pass"] = pass;
            return Verdict{pass ? 0 : 1, std::move(j)};
        };
    } else if (sv->parsed()) {
        verb = "series-validate";
        handler = [&]() {
            const ExplicitLimitSeries ls = series_of_json(load_file(sv_in));
            const auto rep = validate(ls);
            Json j;
            j["input"] = Json{{"file", sv_in}, {"d", ls.d}, {"r", ls.r}};
            j["valid"] = rep.valid;
            Json issues = Json::array();
            for (const auto& is : rep.issues)
                issues.push_back(Json{{"category", is.category}, {"detail", is.detail}});
            j["issues"] = std::move(issues);
            if (rep.valid) {
                const auto ex = is_exact(ls);
                j["exactness"] = Json{{"exact", ex.exact},
                                      {"by_subspace", ex.by_subspace},
                                      {"by_dimension", ex.by_dimension},
                                      {"failing_links", ex.failing_links}};
            }
            return Verdict{rep.valid ? 0 : 1, std::move(j)};
        };
    } else if (sd->parsed()) {
        verb = "series-diagonalize";
        handler = [&]() {
            const ExplicitLimitSeries ls = series_of_json(load_file(sd_in));
            const auto diag = diagonalize(ls);
            Json j;
            j["input"] = Json{{"file", sd_in}, {"d", ls.d}, {"r", ls.r}};
            j["counts"] = diag.counts;
            j["jump_indices"] = diag.jump_indices;
            j["jumps"] = diag.jumps;
            j["mults"] = diag.mults;
            Json secs = Json::array();
            for (const auto& m : diag.sections) secs.push_back(json_of(m));
            j["sections"] = std::move(secs);
            return Verdict{0, std::move(j)};
        };
    } else if (sp->parsed()) {
        verb = "series-pg";
        handler = [&]() {
            const ExplicitLimitSeries ls = series_of_json(load_file(sp_in));
            Json j;
            j["input"] = Json{{"file", sp_in}, {"d", ls.d}, {"r", ls.r}};
            if (sp_have_level) {
                const MinorScheme sch = pg_component(ls, sp_level);
                j["level"] = sp_level;
                j["scheme"] = Json{{"p", sch.p}, {"q", sch.q}, {"m", sch.m}};
            } else {
                const auto range = empty_range(ls);
                j["level_range"] = Json{{"lo", range.lo}, {"hi", range.hi}};
                Json levels = Json::array();
                for (long i = range.lo; i <= range.hi; ++i) {
                    const MinorScheme sch = pg_component(ls, i);
                    levels.push_back(
                        Json{{"level", i}, {"p", sch.p}, {"q", sch.q}, {"m", sch.m}});
                }
                j["levels"] = std::move(levels);
                j["union"] = spec_payload(pg_union(ls));
            }
            return Verdict{0, std::move(j)};
        };
    } else if (dg->parsed()) {
        verb = "degenerate";
        handler = [&]() {
            const UnionSpec spec = make_union_spec(dg_r, parse_long_list(dg_mults));
            const DegenerationFamily fam = make_family(spec);
            Json j;
            j["input"] = Json{{"r", dg_r}, {"mults", spec.mults}};
            j["eps"] = fam.eps;
            Json gens = Json::array();
            const bool have_z = !dg_z.empty();
            const Rat z0 = have_z ? Rat::parse(dg_z) : Rat(0);
            for (const auto& g : fam.gens) {
                Json gj{{"i", g.i}, {"j", g.j}, {"zpow", g.zpow}};
                if (have_z)
                    gj["back_coeff"] =
                        (-Rat::pow(z0, static_cast<unsigned long>(g.zpow))).to_string();
                gens.push_back(std::move(gj));
            }
            j["generators"] = std::move(gens);
            if (have_z) j["z"] = z0.to_string();
            return Verdict{0, std::move(j)};
        };
    } else if (smp->parsed()) {
        verb = "sample";
        handler = [&]() {
            const UnionSpec spec = make_union_spec(smp_r, parse_long_list(smp_mults));
            const DegenerationFamily fam = make_family(spec);
            const auto rep = sample_containment(fam, smp_seed, smp_count);
            Json j;
            j["input"] = Json{{"r", smp_r},
                              {"mults", spec.mults},
                              {"seed", smp_seed},
                              {"count", smp_count}};
            j["samples"] = rep.samples;
            j["per_component"] = rep.per_component;
            j["generators_vanish"] = rep.generators_vanish;
            j["limits_match"] = rep.limits_match;
            j["pass"] = rep.pass();
            return Verdict{rep.pass() ? 0 : 1, std::move(j)};
        };
    } else {
        return {2, app.help() + "\n"};
    }

    try {
        Verdict v = handler();
        Json out = envelope(verb);
        out.update(v.payload);
        return {v.exit_code, dump_report(out)};
    } catch (const llab::Error& e) {
        Json out = envelope(verb);
        out["error"] = e.what();
        out["error_kind"] = e.kind() == llab::Error::Kind::input ? "input" : "resource";
        return {e.kind() == llab::Error::Kind::input ? 2 : 3, dump_report(out)};
    }
}

} // namespace llab::cli
