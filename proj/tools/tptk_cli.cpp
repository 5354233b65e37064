// Command-line front end: parses sequence specs, dispatches to the
// verification modules, and prints a single JSON report on stdout.
// Exit codes: 0 verified/holds, 1 refuted, 2 inconclusive, 3 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tptk/json_io.hpp"
#include "tptk/quotients.hpp"
#include "tptk/realroots.hpp"
#include "tptk/theta.hpp"
#include "tptk/toeplitz.hpp"

namespace {

using tptk::Json;
using tptk::Rational;

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct CommonOpts {
    std::string spec_text;
    std::string spec_file;
    long seed = 0;
    long precision_bits = 128;
    std::string tol = "1/10000";
    int order = 5;
    int window = 16;
    int nmax = 16;
    int lmax = 4;
    int trunc = 24;
    std::string a2;
};

void add_spec_options(CLI::App* cmd, CommonOpts& opts) {
    auto* spec = cmd->add_option("--spec", opts.spec_text, "inline SequenceSpec JSON");
    auto* file = cmd->add_option("--file", opts.spec_file, "path to a SequenceSpec JSON file");
    spec->excludes(file);
}

tptk::SequenceSpec load_spec(const CommonOpts& opts) {
    if (!opts.spec_text.empty()) return tptk::parse_spec(opts.spec_text);
    if (!opts.spec_file.empty()) {
        std::ifstream in(opts.spec_file);
        if (!in) throw std::invalid_argument("cannot open " + opts.spec_file);
        std::stringstream buf;
        buf << in.rdbuf();
        return tptk::parse_spec(buf.str());
    }
    throw std::invalid_argument("a sequence spec is required (--spec or --file)");
}

Json minor_certificate_json(const tptk::MinorCertificate& cert) {
    Json j;
    j["rows"] = cert.request.rows;
    j["cols"] = cert.request.cols;
    j["value"] = tptk::to_string(cert.value);
    return j;
}

const char* verdict_name(tptk::Verdict v) {
    switch (v) {
        case tptk::Verdict::Pass: return "pass";
        case tptk::Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

const char* role_name(tptk::PointRole r) {
    switch (r) {
        case tptk::PointRole::Unit: return "unit";
        case tptk::PointRole::X0: return "x0";
        case tptk::PointRole::Hat: return "hat";
        default: return "endpoint";
    }
}

Json certificate_json(const tptk::AlternationCertificate& cert) {
    Json j;
    j["n"] = cert.n;
    j["a_squared"] = tptk::to_string(cert.a_squared);
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.note.empty()) j["note"] = cert.note;
    if (cert.cross_check_root_count)
        j["cross_check_root_count"] = *cert.cross_check_root_count;
    Json pts = Json::array();
    for (const auto& p : cert.points) {
        Json pj;
        pj["role"] = role_name(p.role);
        if (p.role == tptk::PointRole::Hat) pj["m"] = p.m;
        pj["x"] = tptk::interval_to_json(p.x);
        pj["value"] = tptk::interval_to_json(p.value);
        if (p.exact_value) pj["exact_value"] = tptk::to_string(*p.exact_value);
        pj["expected_sign"] = p.expected_sign;
        pj["observed_sign"] = p.observed_sign;
        pts.push_back(std::move(pj));
    }
    j["points"] = std::move(pts);
    return j;
}

// Shared report skeleton; exit status is derived from the verdict field.
class Report {
public:
    Report(const std::string& command, const CommonOpts& opts) {
        start_ = std::chrono::steady_clock::now();
        j_["schema_version"] = "1";
        j_["command"] = command;
        j_["config"]["seed"] = opts.seed;
        j_["config"]["precision_bits"] = opts.precision_bits;
    }

    Json& body() { return j_; }

    int finish(const std::string& verdict, int exit_code) {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        j_["verdict"] = verdict;
        j_["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cout << j_.dump(2) << std::endl;
        return exit_code;
    }

private:
    Json j_;
    std::chrono::steady_clock::time_point start_;
};

int run_check_tp(const CommonOpts& opts) {
    Report report("check-tp", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["order"] = opts.order;
    report.body()["inputs"]["window"] = opts.window;
    tptk::CoefficientSequence seq = tptk::materialize(spec, opts.window + opts.order);
    tptk::TPWitness witness = tptk::check_tp_window(seq, opts.order, opts.window);
    report.body()["min_value"] = tptk::to_string(witness.min_value);
    if (witness.pass) return report.finish("pass", kExitVerified);
    report.body()["certificate"] = minor_certificate_json(*witness.failing);
    return report.finish("fail", kExitRefuted);
}

int run_quotients(const CommonOpts& opts) {
    Report report("quotients", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["nmax"] = opts.nmax;
    tptk::CoefficientSequence seq = tptk::materialize(spec, opts.nmax);
    tptk::SecondQuotients q = tptk::second_quotients(seq, opts.nmax);
    report.body()["q"] = tptk::rationals_to_json(q.values());
    return report.finish("computed", kExitVerified);
}

int run_hutchinson(const CommonOpts& opts) {
    Report report("hutchinson", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["nmax"] = opts.nmax;
    tptk::CoefficientSequence seq = tptk::materialize(spec, opts.nmax);
    tptk::SecondQuotients q = tptk::second_quotients(seq, opts.nmax);
    report.body()["q"] = tptk::rationals_to_json(q.values());
    bool holds = tptk::hutchinson_holds(q);
    return holds ? report.finish("holds", kExitVerified)
                 : report.finish("refuted", kExitRefuted);
}

int run_lemma1(const CommonOpts& opts) {
    Report report("lemma1", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["nmax"] = opts.nmax;
    tptk::CoefficientSequence seq = tptk::materialize(spec, opts.nmax);
    tptk::SecondQuotients q = tptk::second_quotients(seq, opts.nmax);
    tptk::NecessaryReport chain = tptk::lemma1_chain(q);
    report.body()["values"] = tptk::rationals_to_json(chain.values);
    report.body()["q2_at_least_2"] = chain.q2_at_least_2;
    if (chain.first_violation) {
        report.body()["first_violation"] = *chain.first_violation;
        return report.finish("refuted", kExitRefuted);
    }
    return report.finish("holds", kExitVerified);
}

int run_d_ineq(const CommonOpts& opts) {
    Report report("d-ineq", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["nmax"] = opts.nmax;
    tptk::CoefficientSequence seq = tptk::materialize(spec, opts.nmax);
    tptk::SecondQuotients q = tptk::second_quotients(seq, opts.nmax);
    tptk::DReport d = tptk::d_inequalities(q);
    report.body()["delta2"] = tptk::rationals_to_json(d.delta2);
    report.body()["d3"] = tptk::to_string(d.d3);
    report.body()["d4"] = tptk::to_string(d.d4);
    report.body()["delta3"] = tptk::rationals_to_json(d.delta3);
    bool all = d.d3_nonnegative && d.d4_nonnegative && d.all_delta2_nonnegative &&
               d.all_delta3_nonnegative;
    return all ? report.finish("holds", kExitVerified)
               : report.finish("refuted", kExitRefuted);
}

int run_verify_st1(const CommonOpts& opts) {
    Report report("verify-st1", opts);
    if (opts.spec_text.empty() && opts.spec_file.empty())
        throw std::invalid_argument("verify-st1 needs --spec or --file");
    std::string text = opts.spec_text;
    if (text.empty()) {
        std::ifstream in(opts.spec_file);
        if (!in) throw std::invalid_argument("cannot open " + opts.spec_file);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Json j = Json::parse(text);
    report.body()["inputs"]["spec"] = j;

    tptk::TheoremSt1Verdict verdict;
    if (j.contains("poles")) {
        tptk::MeromorphicGF gf;
        gf.numerator = tptk::Polynomial(tptk::rationals_from_json(j.at("numerator")));
        for (const auto& pj : j.at("poles"))
            gf.poles.push_back({tptk::rational_from_json(pj.at("beta")),
                                pj.value("multiplicity", 1)});
        verdict = tptk::classify_theorem_st1(gf);
    } else if (j.contains("beta")) {
        tptk::RationalGF gf{tptk::Polynomial(tptk::rationals_from_json(j.at("numerator"))),
                            tptk::rational_from_json(j.at("beta")),
                            j.value("pole_order", 1)};
        verdict = tptk::classify_theorem_st1(gf);
    } else if (j.contains("coeffs")) {
        verdict = tptk::classify_theorem_st1(
            tptk::Polynomial(tptk::rationals_from_json(j.at("coeffs"))));
    } else {
        throw std::invalid_argument(
            "verify-st1 input must carry \"coeffs\", \"beta\", or \"poles\"");
    }

    switch (verdict.st1_case) {
        case tptk::St1Case::EntireLPI: report.body()["case"] = "entire_lpi"; break;
        case tptk::St1Case::RationalOK: report.body()["case"] = "rational_ok"; break;
        default: report.body()["case"] = "not_applicable"; break;
    }
    report.body()["reason"] = verdict.reason;
    if (verdict.derivative_num)
        report.body()["derivative_numerator"] =
            tptk::rationals_to_json(verdict.derivative_num->coeffs());
    if (verdict.positive_root) {
        Json w;
        w["lo"] = tptk::to_string(verdict.positive_root->lo);
        w["hi"] = tptk::to_string(verdict.positive_root->hi);
        if (verdict.positive_root->exact)
            w["exact"] = tptk::to_string(*verdict.positive_root->exact);
        report.body()["positive_root"] = std::move(w);
    }
    return verdict.derivative_preserved ? report.finish("preserved", kExitVerified)
                                        : report.finish("refuted", kExitRefuted);
}

int run_th1_audit(const CommonOpts& opts) {
    Report report("th1-audit", opts);
    tptk::SequenceSpec spec = load_spec(opts);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["nmax"] = opts.nmax;
    report.body()["inputs"]["lmax"] = opts.lmax;
    report.body()["inputs"]["trunc"] = opts.trunc;
    tptk::Th1Audit audit = tptk::th1_audit(spec, opts.nmax, opts.lmax, opts.trunc);
    report.body()["all_truncations_real_rooted"] = audit.all_truncations_real_rooted;
    if (audit.failing_l) {
        report.body()["failing_l"] = *audit.failing_l;
        return report.finish("vacuous", kExitRefuted);
    }
    report.body()["min_q"] = tptk::to_string(*audit.min_q);
    report.body()["min_q_above_3"] = audit.min_q_above_3;
    // evidence at truncation scale only, not a proof for min_q <= 3
    return audit.min_q_above_3 ? report.finish("supported", kExitVerified)
                               : report.finish("inconclusive", kExitInconclusive);
}

int run_verify_th3(const CommonOpts& opts, bool cross_check) {
    Report report("verify-th3", opts);
    if (opts.a2.empty()) throw std::invalid_argument("verify-th3 needs --a2");
    tptk::SequenceSpec spec = load_spec(opts);
    Rational a2 = tptk::parse_rational(opts.a2);
    report.body()["inputs"]["spec"] = tptk::spec_to_json(spec);
    report.body()["inputs"]["a2"] = tptk::to_string(a2);
    report.body()["inputs"]["nmax"] = opts.nmax;
    tptk::PrecisionConfig prec{opts.precision_bits};
    tptk::Th3Report th3 = tptk::verify_th3(spec, a2, opts.nmax, prec, cross_check);
    report.body()["convolved_coeffs"] = tptk::rationals_to_json(th3.convolved_coeffs);
    Json certs = Json::array();
    for (const auto& cert : th3.certificates) certs.push_back(certificate_json(cert));
    report.body()["certificates"] = std::move(certs);
    if (th3.all_pass) return report.finish("pass", kExitVerified);
    if (th3.any_fail) return report.finish("fail", kExitRefuted);
    return report.finish("inconclusive", kExitInconclusive);
}

int run_estimate(const CommonOpts& opts, const std::string& constant, int trunc) {
    Report report("estimate", opts);
    report.body()["inputs"]["constant"] = constant;
    tptk::ThresholdName name;
    if (constant == "q_infinity")
        name = tptk::ThresholdName::QInfinity;
    else if (constant == "a0_squared")
        name = tptk::ThresholdName::A0Squared;
    else if (constant == "ll13_root")
        name = tptk::ThresholdName::Ll13Root;
    else
        throw std::invalid_argument("unknown constant \"" + constant + "\"");
    Rational tol = tptk::parse_rational(opts.tol);
    report.body()["inputs"]["tol"] = tptk::to_string(tol);
    tptk::ThresholdReport th = tptk::estimate_constant(name, tol, trunc);
    report.body()["bracket"] = Json::array({tptk::to_string(th.lo), tptk::to_string(th.hi)});
    report.body()["estimate"] = tptk::to_string(th.estimate);
    report.body()["estimate_decimal"] = mpq_get_d(th.estimate.get_mpq_t());
    report.body()["iterations"] = th.iterations;
    if (th.trunc_degree > 0) report.body()["trunc_degree"] = th.trunc_degree;
    if (!th.tail_guard.empty()) report.body()["tail_guard"] = th.tail_guard;
    if (th.estimate_squared) {
        report.body()["estimate_squared"] = tptk::to_string(*th.estimate_squared);
        report.body()["estimate_squared_decimal"] =
            mpq_get_d(th.estimate_squared->get_mpq_t());
    }
    return report.finish("computed", kExitVerified);
}

int run_hadamard(const CommonOpts& opts, const std::string& right_text) {
    Report report("hadamard", opts);
    tptk::SequenceSpec left = load_spec(opts);
    tptk::SequenceSpec right = tptk::parse_spec(right_text);
    report.body()["inputs"]["left"] = tptk::spec_to_json(left);
    report.body()["inputs"]["right"] = tptk::spec_to_json(right);
    report.body()["inputs"]["window"] = opts.window;
    tptk::CoefficientSequence product = tptk::hadamard(
        tptk::materialize(left, opts.window), tptk::materialize(right, opts.window));
    report.body()["coeffs"] = tptk::rationals_to_json(product.coeffs);
    return report.finish("computed", kExitVerified);
}

int run_explore_c1(const CommonOpts& opts, const std::string& grid_text) {
    Report report("explore-c1", opts);
    tptk::SequenceSpec candidate = load_spec(opts);
    report.body()["inputs"]["candidate"] = tptk::spec_to_json(candidate);

    std::vector<tptk::SequenceSpec> grid;
    if (!grid_text.empty()) {
        Json gj = Json::parse(grid_text);
        if (!gj.is_array() || gj.empty())
            throw std::invalid_argument("--grid must be a nonempty JSON array of specs");
        for (const auto& item : gj) grid.push_back(tptk::spec_from_json(item));
    } else {
        grid.push_back({tptk::GeometricSpec{Rational(1), Rational(1)}});
        grid.push_back({tptk::ExponentialSpec{}});
        grid.push_back({tptk::AsweFiniteSpec{Rational(1), 0, {Rational(1), Rational(1)},
                                             {}, Rational(0)}});
    }
    Json grid_json = Json::array();
    for (const auto& g : grid) grid_json.push_back(tptk::spec_to_json(g));
    report.body()["inputs"]["grid"] = std::move(grid_json);
    report.body()["inputs"]["order"] = opts.order;
    report.body()["inputs"]["window"] = opts.window;

    // phase 1: the necessary condition (remainder truncations real-rooted)
    tptk::Th1Audit audit = tptk::th1_audit(candidate, opts.nmax, opts.lmax, opts.trunc);
    Json phase1;
    phase1["all_truncations_real_rooted"] = audit.all_truncations_real_rooted;
    if (audit.failing_l) phase1["failing_l"] = *audit.failing_l;
    if (audit.min_q) phase1["min_q"] = tptk::to_string(*audit.min_q);
    report.body()["phase1"] = std::move(phase1);
    if (audit.failing_l) return report.finish("refuted", kExitRefuted);

    // phase 2: bounded negative-minor search over the Hadamard grid
    int horizon = opts.window + opts.order;
    tptk::CoefficientSequence cand_seq = tptk::materialize(candidate, horizon);
    Json cells = Json::array();
    std::optional<Json> counterexample;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        tptk::CoefficientSequence product =
            tptk::hadamard(cand_seq, tptk::materialize(grid[i], horizon));
        auto cert = tptk::find_negative_minor(product, opts.order, opts.window);
        Json cell;
        cell["grid_index"] = i;
        cell["negative_minor_found"] = cert.has_value();
        if (cert) {
            cell["certificate"] = minor_certificate_json(*cert);
            if (!counterexample) counterexample = cell;
        }
        cells.push_back(std::move(cell));
    }
    report.body()["phase2"] = std::move(cells);
    if (counterexample) {
        report.body()["counterexample"] = *counterexample;
        return report.finish("refuted", kExitRefuted);
    }
    report.body()["note"] = "no counterexample within bounds";
    return report.finish("inconclusive", kExitInconclusive);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"totally positive sequence verification toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--seed", opts.seed, "seed echoed into the report");
    app.add_option("--precision-bits", opts.precision_bits, "working precision in bits")
        ->check(CLI::Range(64L, 1L << 20));

    auto* check_tp = app.add_subcommand("check-tp", "windowed total positivity check");
    add_spec_options(check_tp, opts);
    check_tp->add_option("--order", opts.order, "max minor order");
    check_tp->add_option("--window", opts.window, "index window bound");

    auto* quotients = app.add_subcommand("quotients", "second quotients of a sequence");
    add_spec_options(quotients, opts);
    quotients->add_option("--nmax", opts.nmax, "largest quotient index");

    auto* hutchinson = app.add_subcommand("hutchinson", "check q_n >= 4 for all n");
    add_spec_options(hutchinson, opts);
    hutchinson->add_option("--nmax", opts.nmax, "largest quotient index");

    auto* lemma1 = app.add_subcommand("lemma1", "necessary-condition inequality chain");
    add_spec_options(lemma1, opts);
    lemma1->add_option("--nmax", opts.nmax, "largest quotient index");

    auto* d_ineq = app.add_subcommand("d-ineq", "determinant inequality report");
    add_spec_options(d_ineq, opts);
    d_ineq->add_option("--nmax", opts.nmax, "largest quotient index");

    auto* verify_st1 =
        app.add_subcommand("verify-st1", "derivative-preservation classifier");
    add_spec_options(verify_st1, opts);

    auto* th1_audit = app.add_subcommand("th1-audit", "remainder truncation audit");
    add_spec_options(th1_audit, opts);
    th1_audit->add_option("--nmax", opts.nmax, "largest quotient index");
    th1_audit->add_option("--lmax", opts.lmax, "largest remainder index");
    th1_audit->add_option("--trunc", opts.trunc, "truncation degree");

    bool cross_check = false;
    auto* verify_th3 = app.add_subcommand("verify-th3", "sign-alternation certificates");
    add_spec_options(verify_th3, opts);
    verify_th3->add_option("--a2", opts.a2, "a^2 as a rational")->required();
    verify_th3->add_option("--nmax", opts.nmax, "largest certificate degree");
    verify_th3->add_flag("--cross-check", cross_check, "exact positive-root counts");

    std::string constant;
    int estimate_trunc = 40;
    auto* estimate = app.add_subcommand("estimate", "threshold constant bisection");
    estimate->add_option("constant", constant, "q_infinity | a0_squared | ll13_root")
        ->required();
    estimate->add_option("--tol", opts.tol, "bracket half-width tolerance");
    estimate->add_option("--trunc", estimate_trunc, "truncation degree (q_infinity)");

    std::string right_text;
    auto* hadamard = app.add_subcommand("hadamard", "termwise product of two sequences");
    add_spec_options(hadamard, opts);
    hadamard->add_option("--right", right_text, "second SequenceSpec JSON")->required();
    hadamard->add_option("--window", opts.window, "materialization horizon");

    std::string grid_text;
    auto* explore = app.add_subcommand("explore-c1", "preserver-conjecture exploration");
    add_spec_options(explore, opts);
    explore->add_option("--grid", grid_text, "JSON array of SequenceSpecs");
    explore->add_option("--order", opts.order, "max minor order");
    explore->add_option("--window", opts.window, "index window bound");
    explore->add_option("--nmax", opts.nmax, "largest quotient index");
    explore->add_option("--lmax", opts.lmax, "largest remainder index");
    explore->add_option("--trunc", opts.trunc, "truncation degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check_tp->parsed()) return run_check_tp(opts);
        if (quotients->parsed()) return run_quotients(opts);
        if (hutchinson->parsed()) return run_hutchinson(opts);
        if (lemma1->parsed()) return run_lemma1(opts);
        if (d_ineq->parsed()) return run_d_ineq(opts);
        if (verify_st1->parsed()) return run_verify_st1(opts);
        if (th1_audit->parsed()) return run_th1_audit(opts);
        if (verify_th3->parsed()) return run_verify_th3(opts, cross_check);
        if (estimate->parsed()) return run_estimate(opts, constant, estimate_trunc);
        if (hadamard->parsed()) return run_hadamard(opts, right_text);
        if (explore->parsed()) return run_explore_c1(opts, grid_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
    return kExitUsage;
}
