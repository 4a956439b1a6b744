// qlattice: analyze transition probabilities on the projection lattice of a
// finite-dimensional complex Hilbert space.
//
// Commands:
//   check              validate a matrix file as a projection
//   tp                 full transition-probability report for a pair
//   gen                write generated example pairs to matrix files
//   demo no-deterministic   emit the dispersion-free-state exclusion certificate
//   suite              run the property battery
//
// Exit codes: 0 success, 1 domain/validation error, 2 parse/I-O error,
// 3 suite or verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qlattice/io.hpp"
#include "qlattice/suite.hpp"

namespace {

using namespace qlat;

ToleranceConfig g_tol;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json input_record(const std::string& path, const MatrixFile& f) {
    return {{"path", path},
            {"label", f.label},
            {"dim", f.dim},
            {"hash", io::content_hash(slurp(path))}};
}

void emit_report(const nlohmann::json& report, const std::string& json_path) {
    if (json_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) throw ParseError("cannot open for writing: " + json_path);
        out << report.dump(2) << "\n";
    }
}

Projection load_projection(const std::string& path) {
    MatrixFile f = io::read_matrix_file(path);
    return Projection::validate(f.entries, g_tol);
}

int run_check(const std::string& path) {
    MatrixFile f = io::read_matrix_file(path);
    nlohmann::json report;
    report["command"] = "check";
    report["input"] = input_record(path, f);
    report["tolerances"] = io::tolerance_to_json(g_tol);
    try {
        Projection p = Projection::validate(f.entries, g_tol);
        report["valid"] = true;
        report["rank"] = p.rank();
        emit_report(report, "");
        std::cerr << "valid projection, dim " << p.dim() << ", rank " << p.rank() << "\n";
        return 0;
    } catch (const NotHermitianError& e) {
        report["valid"] = false;
        report["reason"] = "not_hermitian";
        report["residual"] = e.residual;
    } catch (const NotIdempotentError& e) {
        report["valid"] = false;
        report["reason"] = "not_idempotent";
        report["residual"] = e.residual;
    } catch (const DomainError& e) {
        report["valid"] = false;
        report["reason"] = e.what();
    }
    emit_report(report, "");
    std::cerr << "not a valid projection: " << report["reason"] << "\n";
    return 1;
}

int run_tp(const std::string& path_p, const std::string& path_q, const std::string& json_path) {
    MatrixFile fp = io::read_matrix_file(path_p);
    MatrixFile fq = io::read_matrix_file(path_q);
    Projection p = Projection::validate(fp.entries, g_tol);
    Projection q = Projection::validate(fq.entries, g_tol);

    nlohmann::json report;
    report["command"] = "tp";
    report["inputs"] = {input_record(path_p, fp), input_record(path_q, fq)};
    report["tolerances"] = io::tolerance_to_json(g_tol);

    ClassificationReport sym = transition::symmetry_report(p, q, g_tol);
    RankFeasibility feas = transition::rank_feasible(p, q);
    const double estimate = transition::trace_estimate(p, q);

    report["result"] = io::symmetry_to_json(sym);
    report["rank_feasibility"] = {{"nonzero_possible", feas.nonzero_possible},
                                  {"nontrivial_possible", feas.nontrivial_possible}};
    report["trace_estimate"] = {{"value", estimate},
                                {"repr", io::format_double(estimate)},
                                {"bits", io::hex_bits(estimate)},
                                {"is_meaningful", sym.forward.exists}};
    emit_report(report, json_path);

    const auto& fwd = sym.forward;
    std::cerr << "P(q|p): " << (fwd.exists ? io::format_double(*fwd.value) : "does not exist")
              << " [" << to_string(fwd.classification) << "]"
              << (fwd.numerically_ambiguous ? " (numerically ambiguous)" : "") << "\n";
    std::cerr << "P(p|q): "
              << (sym.backward.exists ? io::format_double(*sym.backward.value) : "does not exist")
              << " [" << to_string(sym.backward.classification) << "]\n";
    return 0;
}

Vector parse_ket(const std::string& text) {
    // Comma-separated entries, each "re" or "re:im".
    std::vector<Complex> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        double re = 0.0, im = 0.0;
        const auto colon = tok.find(':');
        try {
            if (colon == std::string::npos) {
                re = std::stod(tok);
            } else {
                re = std::stod(tok.substr(0, colon));
                im = std::stod(tok.substr(colon + 1));
            }
        } catch (const std::exception&) {
            throw ParseError("cannot parse ket entry: " + tok);
        }
        entries.emplace_back(re, im);
    }
    if (entries.empty()) throw ParseError("empty ket");
    Vector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) v(static_cast<Eigen::Index>(i)) = entries[i];
    return v;
}

std::vector<int> parse_mask(const std::string& text) {
    std::vector<int> mask;
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("mask must consist of 0s and 1s");
        mask.push_back(c - '0');
    }
    return mask;
}

int emit_pair(const ProjectionPair& pair, const std::string& out_p, const std::string& out_q,
              const std::string& kind, const nlohmann::json& params) {
    io::write_matrix_file(out_p, pair.first.matrix(), "p");
    io::write_matrix_file(out_q, pair.second.matrix(), "q");

    nlohmann::json report;
    report["command"] = "gen";
    report["generator"] = kind;
    report["params"] = params;
    report["files"] = {out_p, out_q};
    report["tolerances"] = io::tolerance_to_json(g_tol);
    report["predicted"] = io::transition_to_json(
        transition::transition_probability(pair.first, pair.second, g_tol));
    emit_report(report, "");
    std::cerr << "wrote " << out_p << " and " << out_q << "\n";
    return 0;
}

int run_demo(int dim, std::uint64_t seed, const std::string& out, const std::string& json_path) {
    ExclusionCertificate cert = states::deterministic_exclusion_certificate(dim, seed, g_tol);
    nlohmann::json report;
    report["command"] = "demo no-deterministic";
    report["seed"] = seed;
    report["tolerances"] = io::tolerance_to_json(g_tol);
    report["certificate"] = io::certificate_to_json(cert);
    if (dim == 2)
        report["note"] = "dim 2: the exclusion covers linear states only";
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw ParseError("cannot open for writing: " + out);
        f << report["certificate"].dump(2) << "\n";
    }
    emit_report(report, json_path);
    std::cerr << "exclusion certificate for dim " << dim << ": "
              << (cert.verified ? "verified" : "VERIFICATION FAILED") << "\n";
    return cert.verified ? 0 : 3;
}

int run_suite(int dim, int trials, std::uint64_t seed, const std::string& json_path) {
    SuiteReport report = suite::run(dim, trials, seed, g_tol);
    nlohmann::json j;
    j["command"] = "suite";
    j["tolerances"] = io::tolerance_to_json(g_tol);
    j["report"] = suite::to_json(report);
    emit_report(j, json_path);
    for (const auto& p : report.properties)
        std::cerr << (p.passed() ? "pass" : "FAIL") << "  " << p.name << "  (" << p.trials
                  << " trials, worst residual " << io::format_double(p.worst_residual) << ")\n";
    return report.all_passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transition probabilities on the Hilbert-space projection lattice"};
    app.require_subcommand(1);

    app.add_option("--eps-structural", g_tol.eps_structural, "validation tolerance");
    app.add_option("--eps-exist", g_tol.eps_exist, "existence-decision tolerance");
    app.add_option("--eps-rank", g_tol.eps_rank, "relative singular-value cutoff");

    std::string path_a, path_b, json_path, out_p = "p.json", out_q = "q.json", out_cert;
    int dim = 4, trials = 100, count = 10;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "validate a matrix file as a projection");
    check->add_option("file", path_a, "matrix file")->required();

    auto* tp = app.add_subcommand("tp", "transition-probability report for a pair");
    tp->add_option("p", path_a, "projection p")->required();
    tp->add_option("q", path_b, "projection q")->required();
    tp->add_option("--json", json_path, "write the JSON report to this path");

    auto* gen = app.add_subcommand("gen", "generate example pairs");
    gen->require_subcommand(1);
    double s1 = 0.6, s2 = 0.0, s3 = 0.8;
    std::string psi_text = "1,0", phi_text, mask_p_text, mask_q_text;

    auto* gen4 = gen->add_subcommand("example4", "rank-2 equiangular pair in dim 4");
    gen4->add_option("--s1", s1);
    gen4->add_option("--s2", s2);
    gen4->add_option("--s3", s3);

    auto* gen_r1 = gen->add_subcommand("rank1", "pair of rank-1 projections");
    gen_r1->add_option("--psi", psi_text, "ket, comma-separated re[:im]")->required();
    gen_r1->add_option("--phi", phi_text, "ket, comma-separated re[:im]")->required();

    auto* gen_comm = gen->add_subcommand("commuting", "diagonal pair with no transition");
    gen_comm->add_option("--mask-p", mask_p_text)->required();
    gen_comm->add_option("--mask-q", mask_q_text)->required();

    auto* gen_asym = gen->add_subcommand("asymmetric", "forward exists, backward does not");
    gen_asym->add_option("--dim", dim);
    gen_asym->add_option("--seed", seed);

    auto* gen_conj = gen->add_subcommand("conjugate", "conjugated copies of a stored pair");
    std::string conj_p, conj_q, out_dir = ".";
    gen_conj->add_option("--p", conj_p, "projection p file")->required();
    gen_conj->add_option("--q", conj_q, "projection q file")->required();
    gen_conj->add_option("--seed", seed);
    gen_conj->add_option("--n", count, "number of conjugated pairs");
    gen_conj->add_option("--out-dir", out_dir);

    for (auto* sub : {gen4, gen_r1, gen_comm, gen_asym}) {
        sub->add_option("--out-p", out_p, "output file for p");
        sub->add_option("--out-q", out_q, "output file for q");
    }

    auto* demo = app.add_subcommand("demo", "demonstrations");
    demo->require_subcommand(1);
    auto* nodet = demo->add_subcommand("no-deterministic",
                                       "certificate excluding dispersion-free states");
    nodet->add_option("--dim", dim)->required();
    nodet->add_option("--seed", seed);
    nodet->add_option("--out", out_cert, "write the bare certificate to this path");
    nodet->add_option("--json", json_path, "write the full JSON report to this path");

    auto* suite_cmd = app.add_subcommand("suite", "run the property battery");
    suite_cmd->add_option("--dim", dim)->required();
    suite_cmd->add_option("--trials", trials)->required();
    suite_cmd->add_option("--seed", seed);
    suite_cmd->add_option("--json", json_path, "write the JSON report to this path");

    try {
        app.parse(argc, argv);

        if (*check) return run_check(path_a);
        if (*tp) return run_tp(path_a, path_b, json_path);
        if (*gen4)
            return emit_pair(examples::two_plane_pair({s1, s2, s3}, g_tol), out_p, out_q,
                             "example4", {{"s1", s1}, {"s2", s2}, {"s3", s3}});
        if (*gen_r1)
            return emit_pair(examples::rank1_pair(parse_ket(psi_text), parse_ket(phi_text), g_tol),
                             out_p, out_q, "rank1", {{"psi", psi_text}, {"phi", phi_text}});
        if (*gen_comm)
            return emit_pair(examples::commuting_no_transition_pair(parse_mask(mask_p_text),
                                                                    parse_mask(mask_q_text), g_tol),
                             out_p, out_q, "commuting",
                             {{"mask_p", mask_p_text}, {"mask_q", mask_q_text}});
        if (*gen_asym)
            return emit_pair(examples::asymmetric_pair(dim, seed, g_tol), out_p, out_q,
                             "asymmetric", {{"dim", dim}, {"seed", seed}});
        if (*gen_conj) {
            Projection p = load_projection(conj_p);
            Projection q = load_projection(conj_q);
            auto family = examples::conjugated_family(p, q, seed, count);
            nlohmann::json files = nlohmann::json::array();
            for (std::size_t i = 0; i < family.size(); ++i) {
                const std::string fp = out_dir + "/p_" + std::to_string(i) + ".json";
                const std::string fq = out_dir + "/q_" + std::to_string(i) + ".json";
                io::write_matrix_file(fp, family[i].first.matrix(), "p_" + std::to_string(i));
                io::write_matrix_file(fq, family[i].second.matrix(), "q_" + std::to_string(i));
                files.push_back({fp, fq});
            }
            nlohmann::json report;
            report["command"] = "gen";
            report["generator"] = "conjugate";
            report["params"] = {{"seed", seed}, {"n", count}};
            report["files"] = files;
            report["tolerances"] = io::tolerance_to_json(g_tol);
            report["predicted"] = io::transition_to_json(
                transition::transition_probability(p, q, g_tol));
            emit_report(report, "");
            return 0;
        }
        if (*nodet) return run_demo(dim, seed, out_cert, json_path);
        if (*suite_cmd) return run_suite(dim, trials, seed, json_path);
        return 1;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
