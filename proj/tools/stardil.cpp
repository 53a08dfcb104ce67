// stardil: command-line front end for the dilation library.
//
// Every command reads JSON documents, prints a JSON report to stdout (or a
// short text summary with --human) and exits 0 when every executed check
// passed, 1 when some check failed, and 2 on usage/parse/runtime errors.

#include <CLI11.hpp>
#include <Eigen/Core>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stardil/algebroid.hpp"
#include "stardil/ckt.hpp"
#include "stardil/dilation.hpp"
#include "stardil/graph_free.hpp"
#include "stardil/io.hpp"
#include "stardil/left_regular.hpp"
#include "stardil/psd_map.hpp"
#include "stardil/sg_core.hpp"

using namespace stardil;
using io::json;

namespace {

struct Options {
    double tol = tol::verify;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool human = false;
    std::string out;
    int lmax = 2;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << text;
}

// Accumulates the report; `pass` may only be lowered.
struct Report {
    json j;
    bool pass = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Report(const std::string& command) {
        j["command"] = command;
        j["inputs"] = json::object();
        j["verdicts"] = json::object();
        j["residuals"] = json::object();
        j["witnesses"] = json::object();
        j["tolerances"] = json::object();
    }
    void input(const std::string& name, const std::string& bytes) {
        j["inputs"][name] = io::digest(bytes);
    }
    void verdict(const std::string& name, bool ok) {
        j["verdicts"][name] = ok ? "PASS" : "FAIL";
        pass = pass && ok;
    }
    void residual(const std::string& name, double v) { j["residuals"][name] = v; }
    void tolerance(const std::string& name, double v) { j["tolerances"][name] = v; }

    int finish(const Options& opt) {
        j["verdict"] = pass ? "PASS" : "FAIL";
        if (opt.seed_set) j["seed"] = opt.seed;
        j["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                      start)
                .count();
        if (opt.human) {
            std::cout << j["command"].get<std::string>() << ": "
                      << (pass ? "PASS" : "FAIL") << "\n";
            for (auto& [k, v] : j["verdicts"].items())
                std::cout << "  " << k << ": " << v.get<std::string>() << "\n";
            for (auto& [k, v] : j["residuals"].items())
                std::cout << "  " << k << " = " << v.dump() << "\n";
            if (!j["witnesses"].empty())
                std::cout << "  witnesses: " << j["witnesses"].dump() << "\n";
        } else {
            std::cout << io::canonical_dump(j);
        }
        return pass ? 0 : 1;
    }
};

json flags_to_json(const ClassificationFlags& f) {
    json j;
    j["has_unit"] = f.has_unit;
    j["has_star"] = f.has_star;
    j["transitive"] = f.transitive;
    j["principal"] = f.principal;
    j["inverse_semigroupoid"] = f.inverse_semigroupoid;
    j["groupoid"] = f.groupoid;
    j["left_cancellative"] = f.left_cancellative;
    return j;
}

json verify_to_json(const VerifyReport& r) {
    json j;
    j["reconstruction"] = r.reconstruction;
    j["multiplicativity"] = r.multiplicativity;
    j["adjoint"] = r.adjoint;
    j["block_support"] = r.block_support;
    j["orthogonality"] = r.orthogonality;
    j["range_products"] = r.range_products;
    j["unit_sum"] = r.unit_sum;
    j["minimality_defect"] = r.minimality_defect;
    return j;
}

// ------------------------------------------------------------------ commands

int cmd_validate(const Options& opt, const std::string& path) {
    Report rep("validate");
    const std::string text = read_file(path);
    rep.input("sgd", text);
    SemigroupoidTable t = io::sgd_from_json(io::parse_text(text));
    ValidationReport r = validate(t);
    rep.verdict("axioms", r.ok());
    json viols = json::array();
    for (const Violation& v : r.violations)
        viols.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
    rep.j["witnesses"]["violations"] = std::move(viols);
    return rep.finish(opt);
}

int cmd_classify(const Options& opt, const std::string& path) {
    Report rep("classify");
    const std::string text = read_file(path);
    rep.input("sgd", text);
    SemigroupoidTable t = io::sgd_from_json(io::parse_text(text));
    rep.j["classification"] = flags_to_json(classify(t));
    rep.verdict("classified", true);
    return rep.finish(opt);
}

int cmd_free_gen(const Options& opt, const std::string& path, const std::string& flavor) {
    Report rep("free-gen");
    const std::string text = read_file(path);
    rep.input("graph", text);
    DirectedGraph g = io::graph_from_json(io::parse_text(text));
    TruncatedFreeTable t;
    if (flavor == "plain")
        t = free_semigroupoid(g, opt.lmax, true);
    else if (flavor == "starred")
        t = free_star_semigroupoid(g, opt.lmax);
    else if (flavor == "groupoid")
        t = free_groupoid(g, opt.lmax);
    else
        throw Error("unknown flavor: " + flavor + " (plain|starred|groupoid)");
    rep.j["elements"] = t.table.n_elements;
    rep.j["l_max"] = t.l_max;
    rep.j["truncated"] = t.table.truncated;
    rep.verdict("axioms", validate(t.table).ok());
    if (!opt.out.empty())
        write_file(opt.out, io::canonical_dump(io::sgd_to_json(t.table)));
    return rep.finish(opt);
}

int cmd_psd_check(const Options& opt, const std::string& path) {
    Report rep("psd-check");
    const std::string text = read_file(path);
    rep.input("map", text);
    CoherentMap t = io::map_from_json(io::parse_text(text));
    CoherenceReport coh = check_coherent(t);
    rep.verdict("coherent", coh.ok());
    PsdReport r = check_psd(t);
    rep.tolerance("psd", r.tolerance);
    rep.verdict("psd", r.pass());
    json lmins = json::object();
    for (const auto& [s, lm] : r.fiber_lambda_min) lmins[std::to_string(s)] = lm;
    rep.j["residuals"]["fiber_lambda_min"] = std::move(lmins);
    rep.j["residuals"]["not_checkable_fibers"] = r.not_checkable;
    if (r.verdict == PsdVerdict::fail) rep.j["witnesses"]["fiber"] = r.witness_fiber;
    return rep.finish(opt);
}

int cmd_bound(const Options& opt, const std::string& path) {
    Report rep("bound");
    const std::string text = read_file(path);
    rep.input("map", text);
    CoherentMap t = io::map_from_json(io::parse_text(text));
    json bounds = json::object();
    for (int a = 0; a < t.table.n_elements; ++a)
        bounds[std::to_string(a)] = bound_constant(t, a);
    rep.j["bounds"] = std::move(bounds);
    rep.verdict("bounded", true);
    return rep.finish(opt);
}

int cmd_dilate(const Options& opt, const std::string& path) {
    Report rep("dilate");
    const std::string text = read_file(path);
    rep.input("map", text);
    CoherentMap t = io::map_from_json(io::parse_text(text));
    Dilation d = dilate(t);
    VerifyReport r = verify_dilation(t, d);
    rep.j["residuals"] = verify_to_json(r);
    rep.tolerance("verify", opt.tol);
    rep.verdict("dilation", r.max_residual() < opt.tol && r.minimality_defect == 0);
    if (!opt.out.empty())
        write_file(opt.out, io::canonical_dump(io::dilation_to_json(d)));
    return rep.finish(opt);
}

int cmd_verify(const Options& opt, const std::string& map_path,
               const std::string& dil_path) {
    Report rep("verify");
    const std::string mtext = read_file(map_path);
    const std::string dtext = read_file(dil_path);
    rep.input("map", mtext);
    rep.input("dilation", dtext);
    CoherentMap t = io::map_from_json(io::parse_text(mtext));
    Dilation d = io::dilation_from_json(io::parse_text(dtext));
    VerifyReport r = verify_dilation(t, d);
    rep.j["residuals"] = verify_to_json(r);
    rep.tolerance("verify", opt.tol);
    rep.verdict("residuals", r.max_residual() < opt.tol);
    rep.verdict("minimal", r.minimality_defect == 0);
    return rep.finish(opt);
}

int cmd_equiv(const Options& opt, const std::string& map_path,
              const std::string& a_path, const std::string& b_path) {
    Report rep("equiv");
    const std::string mtext = read_file(map_path);
    const std::string atext = read_file(a_path);
    const std::string btext = read_file(b_path);
    rep.input("map", mtext);
    rep.input("dilation_a", atext);
    rep.input("dilation_b", btext);
    CoherentMap t = io::map_from_json(io::parse_text(mtext));
    Dilation d1 = io::dilation_from_json(io::parse_text(atext));
    Dilation d2 = io::dilation_from_json(io::parse_text(btext));
    EquivalenceWitness w = unitary_equivalence(d1, d2, t);
    rep.residual("unitarity", w.unitarity);
    rep.residual("intertwining", w.intertwining);
    rep.residual("v_matching", w.v_matching);
    rep.tolerance("verify", opt.tol);
    rep.verdict("equivalent", w.pass(opt.tol));
    return rep.finish(opt);
}

int cmd_minimalize(const Options& opt, const std::string& map_path,
                   const std::string& dil_path) {
    Report rep("minimalize");
    const std::string mtext = read_file(map_path);
    const std::string dtext = read_file(dil_path);
    rep.input("map", mtext);
    rep.input("dilation", dtext);
    CoherentMap t = io::map_from_json(io::parse_text(mtext));
    Dilation d = io::dilation_from_json(io::parse_text(dtext));
    Dilation m = minimalize(d, t);
    VerifyReport r = verify_dilation(t, m);
    rep.j["residuals"] = verify_to_json(r);
    rep.tolerance("verify", opt.tol);
    rep.verdict("minimal", r.minimality_defect == 0 && r.max_residual() < opt.tol);
    if (!opt.out.empty())
        write_file(opt.out, io::canonical_dump(io::dilation_to_json(m)));
    return rep.finish(opt);
}

int cmd_embed(const Options& opt, const std::string& map_path,
              const std::string& dil_path) {
    Report rep("embed");
    const std::string mtext = read_file(map_path);
    const std::string dtext = read_file(dil_path);
    rep.input("map", mtext);
    rep.input("dilation", dtext);
    CoherentMap t = io::map_from_json(io::parse_text(mtext));
    Dilation d = io::dilation_from_json(io::parse_text(dtext));
    UnitalEmbedding e = embed_unital(t, d);
    rep.residual("isometry", e.isometry_residual);
    rep.residual("compression", e.compression_residual);
    rep.tolerance("verify", opt.tol);
    rep.verdict("embedding",
                e.isometry_residual < opt.tol && e.compression_residual < opt.tol);
    return rep.finish(opt);
}

int cmd_ckt_check(const Options& opt, const std::string& path) {
    Report rep("ckt-check");
    const std::string text = read_file(path);
    rep.input("family", text);
    CKTFamily f = io::family_from_json(io::parse_text(text));
    CKTReport r = validate_ckt(f, opt.tol);
    rep.tolerance("verify", r.tolerance);
    rep.verdict("projections", r.pass_projections);
    rep.verdict("condition_I", r.pass_i);
    rep.verdict("condition_CKT", r.pass_ckt);
    rep.j["verdicts"]["condition_CK"] = r.pass_ck ? "PASS" : "FAIL";
    rep.j["verdicts"]["nondegenerate"] = r.nondegenerate ? "PASS" : "FAIL";
    rep.residual("projection", r.projection_residual);
    rep.residual("orthogonality", r.orthogonality_residual);
    rep.residual("condition_I", r.condition_i_residual);
    rep.residual("nondegeneracy", r.nondegeneracy_residual);
    json lmins = json::object();
    for (const auto& [v, lm] : r.ckt_lambda_min) lmins[std::to_string(v)] = lm;
    rep.j["residuals"]["ckt_lambda_min"] = std::move(lmins);
    json cks = json::object();
    for (const auto& [v, res] : r.ck_residual) cks[std::to_string(v)] = res;
    rep.j["residuals"]["ck_residual"] = std::move(cks);
    return rep.finish(opt);
}

int cmd_induce(const Options& opt, const std::string& path) {
    Report rep("induce");
    const std::string text = read_file(path);
    rep.input("family", text);
    CKTFamily f = io::family_from_json(io::parse_text(text));
    InducedRep r = induce_representation(f, opt.lmax, opt.tol);
    rep.j["elements"] = r.tft.table.n_elements;
    RestrictedOrthReport orth = check_restricted_orthogonality(r);
    rep.residual("restricted_orthogonality", orth.max_residual);
    rep.j["residuals"]["pairs_checked"] = orth.pairs_checked;
    rep.j["residuals"]["pairs_skipped"] = orth.pairs_skipped;
    rep.tolerance("verify", opt.tol);
    rep.verdict("induced", orth.max_residual < opt.tol);
    if (!opt.out.empty())
        write_file(opt.out, io::canonical_dump(io::map_to_json(r.map)));
    return rep.finish(opt);
}

int cmd_leftreg(const Options& opt, const std::string& path,
                const std::string& aggregation) {
    Report rep("leftreg");
    const std::string text = read_file(path);
    rep.input("sgd", text);
    SemigroupoidTable t = io::sgd_from_json(io::parse_text(text));
    AggregationMap tau;
    if (aggregation == "full") {
        tau.tau.assign(t.n_objects, 0);
    } else if (aggregation == "injective") {
        tau.tau.resize(t.n_objects);
        for (int s = 0; s < t.n_objects; ++s) tau.tau[s] = s;
    } else {
        throw Error("unknown aggregation: " + aggregation + " (full|injective)");
    }
    LeftRegularSpace sp = left_regular(t, tau);
    LeftRegularReport r = check_lr_properties(sp, t, opt.tol);
    json profiles = json::object();
    for (int g = 0; g < t.n_elements; ++g) {
        MultiplicityProfile p = multiplicity_profile(t, g);
        profiles[std::to_string(g)] = {
            {"max_multiplicity", p.max_multiplicity},
            {"closable", p.closable},
            {"partial_isometry_expected", p.partial_isometry_expected}};
    }
    rep.j["multiplicity_profiles"] = std::move(profiles);
    rep.j["overflow"] = sp.has_overflow();
    rep.residual("partial_isometry", r.partial_isometry_residual);
    rep.residual("projection", r.projection_residual);
    rep.residual("multiplicativity", r.multiplicativity_residual);
    rep.residual("orthogonality", r.orthogonality_residual);
    rep.residual("max_norm_excess", r.max_norm_excess);
    rep.tolerance("verify", opt.tol);
    rep.verdict("norm_bound", r.norm_bound_ok);
    rep.verdict("properties",
                r.partial_isometry_residual < opt.tol &&
                    r.projection_residual < opt.tol &&
                    r.orthogonality_residual < opt.tol &&
                    (!r.multiplicativity_checked ||
                     r.multiplicativity_residual < opt.tol));
    return rep.finish(opt);
}

int cmd_amplify(const Options& opt, const std::string& map_path,
                const std::string& amp_path) {
    Report rep("amplify");
    const std::string mtext = read_file(map_path);
    const std::string atext = read_file(amp_path);
    rep.input("map", mtext);
    rep.input("amplified", atext);
    CoherentMap t = io::map_from_json(io::parse_text(mtext));
    AmplifiedElement a = io::amplified_from_json(io::parse_text(atext));
    CMatrix m = amplify_map(t, a);
    rep.j["matrix"] = io::matrix_to_json(m);
    if (m.rows() == m.cols() && max_abs(m - m.adjoint()) < 1e-12)
        rep.j["residuals"]["lambda_min"] = hermitian_eig_min(m);
    rep.verdict("amplified", true);
    return rep.finish(opt);
}

int cmd_cp_check(const Options& opt, const std::string& path, int n_max, int trials) {
    Report rep("cp-check");
    const std::string text = read_file(path);
    rep.input("map", text);
    CoherentMap t = io::map_from_json(io::parse_text(text));
    CpReport r = sample_cp_check(t, n_max, trials, opt.seed, opt.tol);
    rep.j["n_max"] = r.n_max;
    rep.j["trials"] = r.trials;
    rep.residual("worst_lambda_min", r.worst_lambda_min);
    rep.tolerance("verify", opt.tol);
    rep.verdict("cp_sampled", r.pass);
    if (r.failed)
        rep.j["witnesses"]["first_fail"] = {{"n", r.first_fail.n},
                                            {"trial", r.first_fail.trial},
                                            {"lambda_min", r.first_fail.lambda_min}};
    return rep.finish(opt);
}

int cmd_sqrt_series(const Options& opt, const std::string& path) {
    Report rep("sqrt-series");
    const std::string text = read_file(path);
    rep.input("matrix", text);
    CMatrix a = io::matrix_from_json(io::parse_text(text), "/");
    CMatrix b = sqrt_one_minus(a, opt.tol);
    const double sq = max_abs(b * b - (CMatrix::Identity(a.cols(), a.cols()) -
                                       a.adjoint() * a));
    rep.j["matrix"] = io::matrix_to_json(b);
    rep.residual("square", sq);
    rep.residual("hermitian", max_abs(b - b.adjoint()));
    rep.tolerance("verify", opt.tol);
    rep.verdict("series", sq < opt.tol);
    if (!opt.out.empty()) write_file(opt.out, io::canonical_dump(io::matrix_to_json(b)));
    return rep.finish(opt);
}

int cmd_form_rep(const Options& opt, const std::string& path) {
    Report rep("form-rep");
    const std::string text = read_file(path);
    rep.input("form", text);
    json j = io::parse_text(text);
    if (!j.contains("sgd")) throw io::ParseError("/sgd", "missing embedded sgd");
    SemigroupoidTable t = io::sgd_from_json(j["sgd"]);
    if (!j.contains("omega") || !j["omega"].is_array() ||
        static_cast<int>(j["omega"].size()) != t.n_elements)
        throw io::ParseError("/omega", "omega must list one [re, im] per element");
    std::vector<std::complex<double>> omega;
    for (const json& v : j["omega"]) {
        if (!v.is_array() || v.size() != 2)
            throw io::ParseError("/omega", "complex numbers are [re, im] pairs");
        omega.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    FormRep r = positive_form_rep(omega, t);
    rep.residual("pairing", r.pairing_residual);
    rep.residual("orthogonality", r.orthogonality_residual);
    rep.j["residuals"]["minimality_defect"] = r.minimality_defect;
    rep.tolerance("verify", opt.tol);
    rep.verdict("cyclic_rep", r.pairing_residual < opt.tol &&
                                  r.orthogonality_residual < opt.tol &&
                                  r.minimality_defect == 0);
    if (!opt.out.empty())
        write_file(opt.out, io::canonical_dump(io::dilation_to_json(r.dil)));
    return rep.finish(opt);
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("STARDIL_THREADS"))
        Eigen::setNbThreads(std::max(1, std::atoi(threads)));

    CLI::App app{"Constructive dilations of operator-valued maps on *-semigroupoids"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--tol", opt.tol, "verification budget")->capture_default_str();
    auto* seed_opt = app.add_option("--seed", opt.seed, "sampling seed");
    app.add_flag("--human", opt.human, "text summary instead of JSON");
    app.add_option("--out", opt.out, "write the produced document here");
    app.add_option("--lmax", opt.lmax, "truncation bound")->capture_default_str();

    std::string sgd_path, map_path, dil_path, dil_b_path, graph_path, family_path,
        amp_path, matrix_path, form_path;
    std::string flavor = "plain", aggregation = "full";
    int n_max = 3, trials = 100;

    auto* c_validate = app.add_subcommand("validate", "check the *-semigroupoid axioms");
    c_validate->add_option("sgd", sgd_path)->required();
    auto* c_classify = app.add_subcommand("classify", "structural classification flags");
    c_classify->add_option("sgd", sgd_path)->required();
    auto* c_free = app.add_subcommand("free-gen", "generate a truncated free table");
    c_free->add_option("graph", graph_path)->required();
    c_free->add_option("--flavor", flavor, "plain|starred|groupoid")
        ->capture_default_str();
    auto* c_psd = app.add_subcommand("psd-check", "fiberwise positivity check");
    c_psd->add_option("map", map_path)->required();
    auto* c_bound = app.add_subcommand("bound", "minimal boundedness constants");
    c_bound->add_option("map", map_path)->required();
    auto* c_dilate = app.add_subcommand("dilate", "construct the minimal dilation");
    c_dilate->add_option("map", map_path)->required();
    auto* c_verify = app.add_subcommand("verify", "verify a dilation against a map");
    c_verify->add_option("map", map_path)->required();
    c_verify->add_option("dilation", dil_path)->required();
    auto* c_equiv = app.add_subcommand("equiv", "unitary equivalence of two dilations");
    c_equiv->add_option("map", map_path)->required();
    c_equiv->add_option("dilation_a", dil_path)->required();
    c_equiv->add_option("dilation_b", dil_b_path)->required();
    auto* c_min = app.add_subcommand("minimalize", "compress onto the minimal span");
    c_min->add_option("map", map_path)->required();
    c_min->add_option("dilation", dil_path)->required();
    auto* c_embed = app.add_subcommand("embed", "unital isometric embedding");
    c_embed->add_option("map", map_path)->required();
    c_embed->add_option("dilation", dil_path)->required();
    auto* c_ckt = app.add_subcommand("ckt-check", "validate a Cuntz-Krieger-Toeplitz family");
    c_ckt->add_option("family", family_path)->required();
    auto* c_induce = app.add_subcommand("induce", "induce the free-*-semigroupoid representation");
    c_induce->add_option("family", family_path)->required();
    auto* c_lr = app.add_subcommand("leftreg", "left regular representation report");
    c_lr->add_option("sgd", sgd_path)->required();
    c_lr->add_option("--aggregation", aggregation, "full|injective")
        ->capture_default_str();
    auto* c_amp = app.add_subcommand("amplify", "apply the amplified map");
    c_amp->add_option("map", map_path)->required();
    c_amp->add_option("amplified", amp_path)->required();
    auto* c_cp = app.add_subcommand("cp-check", "sampled complete-positivity check");
    c_cp->add_option("map", map_path)->required();
    c_cp->add_option("--nmax", n_max, "max amplification order")->capture_default_str();
    c_cp->add_option("--trials", trials, "trials per order")->capture_default_str();
    auto* c_sqrt = app.add_subcommand("sqrt-series", "B*-square-root series of I - a*a");
    c_sqrt->add_option("matrix", matrix_path)->required();
    auto* c_form = app.add_subcommand("form-rep", "cyclic representation of a positive form");
    c_form->add_option("form", form_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.seed_set = seed_opt->count() > 0;

    try {
        if (*c_validate) return cmd_validate(opt, sgd_path);
        if (*c_classify) return cmd_classify(opt, sgd_path);
        if (*c_free) return cmd_free_gen(opt, graph_path, flavor);
        if (*c_psd) return cmd_psd_check(opt, map_path);
        if (*c_bound) return cmd_bound(opt, map_path);
        if (*c_dilate) return cmd_dilate(opt, map_path);
        if (*c_verify) return cmd_verify(opt, map_path, dil_path);
        if (*c_equiv) return cmd_equiv(opt, map_path, dil_path, dil_b_path);
        if (*c_min) return cmd_minimalize(opt, map_path, dil_path);
        if (*c_embed) return cmd_embed(opt, map_path, dil_path);
        if (*c_ckt) return cmd_ckt_check(opt, family_path);
        if (*c_induce) return cmd_induce(opt, family_path);
        if (*c_lr) return cmd_leftreg(opt, sgd_path, aggregation);
        if (*c_amp) return cmd_amplify(opt, map_path, amp_path);
        if (*c_cp) return cmd_cp_check(opt, map_path, n_max, trials);
        if (*c_sqrt) return cmd_sqrt_series(opt, matrix_path);
        if (*c_form) return cmd_form_rep(opt, form_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
