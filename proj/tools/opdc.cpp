// opdc: orthogonal-polynomial spectral-transformation toolkit.
//
// Subcommands: families {bi|cbi|rw}, szego, pencil,
// transform {christoffel|sdg|rescale|chihara},
// verify {identities|bi-chain|rw-bridge|darboux|quad-algebra}, chain.
//
// Exit codes: 0 success / all checks pass, 1 a verification suite found a
// violation, 2 usage or parameter errors (poles, degenerate factors).

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "opdc/dressing.hpp"
#include "opdc/errors.hpp"
#include "opdc/families.hpp"
#include "opdc/json_io.hpp"
#include "opdc/transforms.hpp"
#include "opdc/verify_suites.hpp"

namespace {

using opdc::BIParameters;
using opdc::Rational;
using opdc::ReflectionSequence;
using opdc::RWParameters;
using json = opdc::io::json;

Rational rat(const std::string& text) { return Rational::parse(text); }

double float_flag(const std::string& text) {
    // accepts "p/q" as well as decimal literals
    try {
        return rat(text).to_double();
    } catch (const opdc::ParseError&) {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw;
        return v;
    }
}

/// Reflection data from --a: the comma list is repeated periodically when
/// an operation needs more entries than supplied.
ReflectionSequence periodic_sequence(const std::string& list_text) {
    std::vector<Rational> a = opdc::io::parse_rational_list(list_text);
    if (a.empty()) throw opdc::ParseError("--a needs at least one entry");
    return ReflectionSequence::from_generator(
        [a](int n) { return a[static_cast<std::size_t>(n) % a.size()]; }, "periodic");
}

struct BIFlags {
    std::string rho1, rho2, r1, r2;

    void attach(CLI::App* cmd) {
        cmd->add_option("--rho1", rho1)->required();
        cmd->add_option("--rho2", rho2)->required();
        cmd->add_option("--r1", r1)->required();
        cmd->add_option("--r2", r2)->required();
    }
    BIParameters params() const { return BIParameters{rat(rho1), rat(rho2), rat(r1), rat(r2)}; }
    json to_json() const {
        return json{{"rho1", rat(rho1).str()},
                    {"rho2", rat(rho2).str()},
                    {"r1", rat(r1).str()},
                    {"r2", rat(r2).str()}};
    }
};

struct RWFlags {
    std::string beta1, beta2, beta3, beta4;

    void attach(CLI::App* cmd) {
        cmd->add_option("--beta1", beta1)->required();
        cmd->add_option("--beta2", beta2)->required();
        cmd->add_option("--beta3", beta3)->required();
        cmd->add_option("--beta4", beta4)->required();
    }
    RWParameters params() const { return RWParameters{rat(beta1), rat(beta2), rat(beta3), rat(beta4)}; }
    json to_json() const {
        return json{{"beta1", rat(beta1).str()},
                    {"beta2", rat(beta2).str()},
                    {"beta3", rat(beta3).str()},
                    {"beta4", rat(beta4).str()}};
    }
};

void emit(const json& j, const std::string& output, const std::string& csv) {
    if (output == "csv") std::cout << csv;
    else std::cout << j.dump(2) << "\n";
}

std::string suites_csv(const std::vector<opdc::SuiteResult>& suites) {
    std::string out = "suite,trials,pass\n";
    for (const auto& s : suites)
        out += s.name + "," + std::to_string(s.trials) + "," + (s.pass ? "true" : "false") + "\n";
    return out;
}

int finish_suites(const std::vector<opdc::SuiteResult>& suites, const std::string& output) {
    json arr = json::array();
    bool all = true;
    for (const auto& s : suites) {
        arr.push_back(opdc::io::to_json(s));
        all = all && s.pass;
    }
    emit(json{{"suites", arr}, {"all_pass", all}}, output, suites_csv(suites));
    if (!all) {
        for (const auto& s : suites)
            if (!s.pass) std::cerr << "violation in " << s.name << ": " << s.detail << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal polynomials on the unit circle, spectral transformations, "
                 "Bannai-Ito / Racah-Wilson coefficient families, and dressing-chain verification"};
    app.require_subcommand(1);

    std::string output = "json";
    app.add_option("--output", output, "output format")->check(CLI::IsMember({"json", "csv"}));
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "seed for randomized suites (OPDC_SEED overrides)");
    int bound = 20;
    app.add_option("--bound", bound, "numerator/denominator bound for random rational draws");

    // OPDC_SEED takes precedence over --seed
    auto effective_seed = [&seed]() -> std::uint64_t {
        if (const char* env = std::getenv("OPDC_SEED")) return std::strtoull(env, nullptr, 10);
        return seed;
    };

    int rc = 0;

    // families ---------------------------------------------------------
    auto* families = app.add_subcommand("families", "closed-form recurrence coefficient tables");
    families->require_subcommand(1);
    int fam_n = 10;

    auto* fam_bi = families->add_subcommand("bi", "Bannai-Ito A_n, C_n and recurrence");
    BIFlags bi_flags;
    bi_flags.attach(fam_bi);
    fam_bi->add_option("-n,--depth", fam_n);
    fam_bi->callback([&] {
        auto coeffs = opdc::bi_coeffs(bi_flags.params(), fam_n);
        json j{{"family", "bannai-ito"}, {"params", bi_flags.to_json()}, {"n", fam_n}};
        std::string csv = "k,A,C,b,u\n";
        for (int k = 0; k < fam_n; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            j["A" + std::to_string(k)] = coeffs.A[i].str();
            j["C" + std::to_string(k)] = coeffs.C[i].str();
            csv += std::to_string(k) + "," + coeffs.A[i].str() + "," + coeffs.C[i].str() + "," +
                   coeffs.rec.b[i].str() + "," + coeffs.rec.u[i].str() + "\n";
        }
        j["recurrence"] = opdc::io::to_json(coeffs.rec);
        emit(j, output, csv);
    });

    auto* fam_cbi = families->add_subcommand("cbi", "complementary Bannai-Ito v_n and recurrence");
    BIFlags cbi_flags;
    cbi_flags.attach(fam_cbi);
    fam_cbi->add_option("-n,--depth", fam_n);
    fam_cbi->callback([&] {
        auto coeffs = opdc::cbi_coeffs(cbi_flags.params(), fam_n);
        json j{{"family", "complementary-bannai-ito"}, {"params", cbi_flags.to_json()}, {"n", fam_n}};
        std::string csv = "k,v\n";
        for (int k = 0; k < fam_n; ++k) {
            j["v" + std::to_string(k)] = coeffs.v[static_cast<std::size_t>(k)].str();
            csv += std::to_string(k) + "," + coeffs.v[static_cast<std::size_t>(k)].str() + "\n";
        }
        j["recurrence"] = opdc::io::to_json(coeffs.rec);
        j["seed"] = opdc::io::to_json(opdc::bi_seed(cbi_flags.params()));
        emit(j, output, csv);
    });

    auto* fam_rw = families->add_subcommand("rw", "Racah-Wilson A_n, C_n");
    RWFlags rw_flags;
    rw_flags.attach(fam_rw);
    fam_rw->add_option("-n,--depth", fam_n);
    fam_rw->callback([&] {
        auto coeffs = opdc::rw_coeffs(rw_flags.params(), fam_n);
        json j{{"family", "racah-wilson"}, {"params", rw_flags.to_json()}, {"n", fam_n}};
        std::string csv = "k,A,C\n";
        for (int k = 0; k < fam_n; ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            j["A" + std::to_string(k)] = coeffs.A[i].str();
            j["C" + std::to_string(k)] = coeffs.C[i].str();
            csv += std::to_string(k) + "," + coeffs.A[i].str() + "," + coeffs.C[i].str() + "\n";
        }
        emit(j, output, csv);
    });

    // szego --------------------------------------------------------------
    auto* szego = app.add_subcommand("szego", "monic Szego pair (Phi_n, Phi_n*)");
    std::string szego_a;
    int szego_n = 5;
    szego->add_option("--a", szego_a, "comma list of reflection parameters (repeated periodically)")
        ->required();
    szego->add_option("-n,--degree", szego_n);
    szego->callback([&] {
        ReflectionSequence seq = periodic_sequence(szego_a);
        opdc::SzegoPair pair = opdc::szego_polynomials(seq, szego_n);
        json j = opdc::io::to_json(pair);
        j["classification"] = opdc::io::to_json(opdc::classify(seq, szego_n));
        std::string csv = "k,phi,phi_star\n";
        for (int k = 0; k <= szego_n; ++k)
            csv += std::to_string(k) + "," + pair.phi.coeff(k).str() + "," + pair.phi_star.coeff(k).str() +
                   "\n";
        emit(j, output, csv);
    });

    // pencil --------------------------------------------------------------
    auto* pencil = app.add_subcommand("pencil", "three-term data of K(lambda) = L + lambda M");
    std::string pencil_a, pencil_lambda = "1", pencil_x = "0";
    int pencil_n = 10;
    bool pencil_matrix = false, pencil_spectrum = false;
    pencil->add_option("--a", pencil_a)->required();
    pencil->add_option("--lambda", pencil_lambda)->required();
    pencil->add_option("--x", pencil_x);
    pencil->add_option("-n,--depth", pencil_n);
    bool pencil_lmu = false;
    pencil->add_flag("--matrix", pencil_matrix, "include the float truncation of K(lambda) - x I");
    pencil->add_flag("--dump-lmu", pencil_lmu, "include dense row-major truncations of L, M, U = LM");
    pencil->add_flag("--spectrum", pencil_spectrum, "emit eigenvalues (CSV: one per line, ascending)");
    pencil->callback([&] {
        ReflectionSequence seq = periodic_sequence(pencil_a);
        Rational lambda = rat(pencil_lambda);
        opdc::PencilRecurrence rec = opdc::pencil_recurrence(seq, lambda, pencil_n);
        json j = opdc::io::to_json(rec);
        std::string csv = "k,b,u\n";
        for (int k = 0; k < pencil_n; ++k)
            csv += std::to_string(k) + "," + rec.b[static_cast<std::size_t>(k)].str() + "," +
                   rec.u[static_cast<std::size_t>(k)].str() + "\n";
        if (pencil_matrix)
            j["matrix"] = opdc::io::to_json(
                opdc::build_pencil_matrix(seq, lambda.to_double(), rat(pencil_x).to_double(), pencil_n));
        if (pencil_lmu) {
            auto [l, mm] = opdc::build_lm(seq, pencil_n);
            j["L"] = opdc::io::dense_to_json(l.mat);
            j["M"] = opdc::io::dense_to_json(mm.mat);
            j["U"] = opdc::io::dense_to_json(l.mat * mm.mat);
        }
        if (pencil_spectrum) {
            std::vector<double> b, u;
            double x = rat(pencil_x).to_double();
            for (int k = 0; k < pencil_n; ++k) {
                b.push_back(rec.b[static_cast<std::size_t>(k)].to_double() - x);
                u.push_back(rec.u[static_cast<std::size_t>(k)].to_double());
            }
            std::vector<double> ev = opdc::monic_tridiag_eigenvalues(b, u);
            json arr = json::array();
            for (double v : ev) arr.push_back(v);
            j["spectrum"] = arr;
            csv = opdc::io::csv_spectrum(ev);
        }
        emit(j, output, csv);
    });

    // transform ----------------------------------------------------------
    auto* transform = app.add_subcommand("transform", "spectral-transformation pipelines");
    transform->require_subcommand(1);

    auto* t_chr = transform->add_subcommand("christoffel", "kernel step at theta");
    std::string chr_b, chr_u, chr_theta;
    t_chr->add_option("--b", chr_b)->required();
    t_chr->add_option("--u", chr_u)->required();
    t_chr->add_option("--theta", chr_theta)->required();
    t_chr->callback([&] {
        opdc::ThreeTermRecurrence rec;
        rec.b = opdc::io::parse_rational_list(chr_b);
        rec.u = opdc::io::parse_rational_list(chr_u);
        if (rec.b.size() != rec.u.size()) throw opdc::ParseError("--b and --u need equal lengths");
        opdc::ChristoffelResult cr = opdc::christoffel(rec, rat(chr_theta));
        opdc::ThreeTermRecurrence back = opdc::geronimus_reconstruct(cr);
        bool exact = true;
        for (int k = 0; k < back.depth(); ++k) {
            std::size_t i = static_cast<std::size_t>(k);
            exact = exact && back.b[i] == rec.b[i] && back.u[i] == rec.u[i];
        }
        json j{{"theta", cr.theta.str()},
               {"A", opdc::io::rationals_to_json(cr.A)},
               {"C", opdc::io::rationals_to_json(cr.C)},
               {"transformed", opdc::io::to_json(cr.transformed)},
               {"geronimus_roundtrip_exact", exact}};
        std::string csv = "k,A,C\n";
        for (std::size_t k = 0; k < cr.A.size(); ++k)
            csv += std::to_string(k) + "," + cr.A[k].str() + "," + cr.C[k].str() + "\n";
        emit(j, output, csv);
        if (!exact) throw opdc::IdentityViolation("Geronimus roundtrip differs from the input");
    });

    auto* t_sdg = transform->add_subcommand("sdg", "theta = lambda + 1 kernel step of the pencil");
    std::string sdg_a, sdg_lambda;
    int sdg_n = 10;
    t_sdg->add_option("--a", sdg_a)->required();
    t_sdg->add_option("--lambda", sdg_lambda)->required();
    t_sdg->add_option("-n,--depth", sdg_n);
    t_sdg->callback([&] {
        opdc::SDGResult sdg = opdc::sdg_step(periodic_sequence(sdg_a), rat(sdg_lambda), sdg_n);
        json j{{"lambda", sdg.lambda.str()},
               {"ustar", opdc::io::rationals_to_json(sdg.ustar)},
               {"A", opdc::io::rationals_to_json(sdg.A)},
               {"C", opdc::io::rationals_to_json(sdg.C)},
               {"unif", opdc::io::to_json(sdg.unif)}};
        std::string csv = "k,ustar\n";
        for (std::size_t k = 0; k < sdg.ustar.size(); ++k)
            csv += std::to_string(k) + "," + sdg.ustar[k].str() + "\n";
        emit(j, output, csv);
    });

    auto* t_res = transform->add_subcommand("rescale", "S_n recurrence with chi = lambda0 s - 1/s");
    std::string res_a, res_lambda, res_sqrt, res_lambda0;
    int res_n = 10;
    t_res->add_option("--a", res_a)->required();
    t_res->add_option("--lambda", res_lambda)->required();
    t_res->add_option("--sqrt-lambda", res_sqrt, "exact rational square root of lambda")->required();
    t_res->add_option("--lambda0", res_lambda0)->required();
    t_res->add_option("-n,--depth", res_n);
    t_res->callback([&] {
        Rational lambda = rat(res_lambda), lambda0 = rat(res_lambda0);
        opdc::SDGResult sdg = opdc::sdg_step(periodic_sequence(res_a), lambda * lambda0, res_n);
        opdc::RescaleResult res = opdc::rescale(sdg, lambda, rat(res_sqrt), lambda0);
        json j{{"chi", res.chi.str()}, {"s", opdc::io::to_json(res.s_rec)}};
        std::string csv = "k,b,u\n";
        for (int k = 0; k < res.s_rec.depth(); ++k)
            csv += std::to_string(k) + "," + res.s_rec.b[static_cast<std::size_t>(k)].str() + "," +
                   res.s_rec.u[static_cast<std::size_t>(k)].str() + "\n";
        emit(j, output, csv);
    });

    auto* t_chi = transform->add_subcommand("chihara", "quadratic-split recurrence from (A, C)");
    std::string chi_a, chi_c, chi_chi;
    int chi_n = 10;
    t_chi->add_option("--A", chi_a)->required();
    t_chi->add_option("--C", chi_c)->required();
    t_chi->add_option("--chi", chi_chi)->required();
    t_chi->add_option("-n,--depth", chi_n);
    t_chi->callback([&] {
        opdc::ThreeTermRecurrence rec =
            opdc::chihara_split(opdc::io::parse_rational_list(chi_a), opdc::io::parse_rational_list(chi_c),
                                rat(chi_chi), chi_n);
        json j{{"chi", rat(chi_chi).str()}, {"split", opdc::io::to_json(rec)}};
        std::string csv = "k,b,u\n";
        for (int k = 0; k < rec.depth(); ++k)
            csv += std::to_string(k) + "," + rec.b[static_cast<std::size_t>(k)].str() + "," +
                   rec.u[static_cast<std::size_t>(k)].str() + "\n";
        emit(j, output, csv);
    });

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "machine verification suites");
    verify->require_subcommand(1);

    auto* v_id = verify->add_subcommand("identities", "matrix identities on truncations");
    std::string vid_a = "0", vid_lambda = "1/2", vid_lambda0 = "1";
    int vid_n = 64;
    bool vid_grid = false;
    std::string vid_rho1, vid_rho2, vid_r1, vid_r2;
    v_id->add_option("--a", vid_a, "comma list, repeated periodically");
    v_id->add_option("--lambda", vid_lambda);
    v_id->add_option("--lambda0", vid_lambda0);
    v_id->add_option("-n,--dim", vid_n);
    v_id->add_option("--rho1", vid_rho1, "use the Bannai-Ito generator instead of --a");
    v_id->add_option("--rho2", vid_rho2);
    v_id->add_option("--r1", vid_r1);
    v_id->add_option("--r2", vid_r2);
    v_id->add_flag("--grid-diagnostic", vid_grid,
                   "fit the complementary Bannai-Ito spectrum to two arithmetic progressions");
    v_id->callback([&] {
        ReflectionSequence seq = periodic_sequence(vid_a);
        std::optional<opdc::GridProbe> probe;
        std::optional<BIParameters> bi;
        if (!vid_rho1.empty()) {
            bi = BIParameters{rat(vid_rho1), rat(vid_rho2), rat(vid_r1), rat(vid_r2)};
            seq = ReflectionSequence::from_generator(opdc::bi_reflection_generator(*bi), "bannai-ito");
        }
        if (vid_grid) {
            if (!bi) throw opdc::ParseError("--grid-diagnostic needs the Bannai-Ito parameters");
            opdc::CBICoeffs cbi = opdc::cbi_coeffs(*bi, vid_n);
            opdc::GridProbe p;
            for (int k = 0; k < vid_n; ++k) {
                p.b.push_back(cbi.rec.b[static_cast<std::size_t>(k)].to_double());
                p.u.push_back(cbi.rec.u[static_cast<std::size_t>(k)].to_double());
            }
            probe = std::move(p);
        }
        opdc::IdentityReport report =
            opdc::verify_identities(seq, float_flag(vid_lambda), float_flag(vid_lambda0), vid_n, probe);
        std::string csv = "identity,n,interior,max_residual,tolerance,pass\n";
        for (const auto& c : report.checks)
            csv += "\"" + c.name + "\"," + std::to_string(c.n) + "," + std::to_string(c.interior) + "," +
                   opdc::io::format_double(c.max_residual) + "," + opdc::io::format_double(c.tolerance) +
                   "," + (c.pass ? "true" : "false") + "\n";
        emit(opdc::io::to_json(report), output, csv);
        if (!report.all_pass) {
            for (const auto& c : report.checks)
                if (!c.informational && !c.pass)
                    std::cerr << "violation: " << c.name << " residual " << c.max_residual << " > "
                              << c.tolerance << "\n";
            rc = 1;
        }
    });

    auto* v_bi = verify->add_subcommand("bi-chain", "exact Bannai-Ito identity suites");
    int v_trials = 100, v_depth = 50;
    v_bi->add_option("--trials", v_trials);
    v_bi->add_option("-n,--depth", v_depth);
    v_bi->callback(
        [&] { rc = finish_suites(opdc::bi_chain_suites(effective_seed(), v_trials, v_depth, bound), output); });

    auto* v_rw = verify->add_subcommand("rw-bridge", "exact Racah-Wilson bridge suite");
    int vrw_trials = 100, vrw_depth = 50;
    v_rw->add_option("--trials", vrw_trials);
    v_rw->add_option("-n,--depth", vrw_depth);
    v_rw->callback([&] {
        rc = finish_suites({opdc::suite_rw_bridge(effective_seed(), vrw_trials, vrw_depth, bound)}, output);
    });

    auto* v_dx = verify->add_subcommand("darboux", "Cholesky/LU Darboux isospectrality suite");
    int vdx_trials = 20, vdx_n = 20;
    v_dx->add_option("--trials", vdx_trials);
    v_dx->add_option("-n,--dim", vdx_n);
    v_dx->callback(
        [&] { rc = finish_suites({opdc::suite_darboux(effective_seed(), vdx_trials, vdx_n)}, output); });

    auto* v_qa = verify->add_subcommand("quad-algebra", "quadratic-algebra nullspace suite");
    int vqa_n = 32;
    v_qa->add_option("-n,--dim", vqa_n);
    v_qa->callback([&] { rc = finish_suites({opdc::suite_quad_algebra(effective_seed(), vqa_n)}, output); });

    // chain -----------------------------------------------------------------
    auto* chain = app.add_subcommand("chain", "1-periodic dressing-chain step report");
    std::string ch_a = "0", ch_lambda, ch_x, ch_lambda_t;
    int ch_n = 16;
    chain->add_option("--a", ch_a, "comma list, repeated periodically");
    chain->add_option("--lambda", ch_lambda)->required();
    chain->add_option("--x", ch_x)->required();
    chain->add_option("--lambda-t", ch_lambda_t)->required();
    chain->add_option("-n,--dim", ch_n);
    chain->callback([&] {
        opdc::ChainStepReport report = opdc::chain_step(
            periodic_sequence(ch_a), float_flag(ch_lambda), float_flag(ch_x), float_flag(ch_lambda_t), ch_n);
        std::string csv = "x_t,residual,trivial\n";
        for (const auto& s : report.solutions)
            csv += opdc::io::format_double(s.x_t) + "," + opdc::io::format_double(s.residual) + "," +
                   (s.trivial ? "true" : "false") + "\n";
        emit(opdc::io::to_json(report), output, csv);
    });

    // global flags (--output, --seed, --bound) may appear after subcommands
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough();
        for (auto* sub : cmd->get_subcommands([](CLI::App*) { return true; })) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const opdc::IdentityViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const opdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
