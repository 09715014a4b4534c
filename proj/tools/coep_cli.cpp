// Command-line front end: Moore-Penrose computation/verification,
// classification reports, theorem-audit sweeps and perturbation studies.
//
// Exit codes: 0 success / all properties hold, 2 mathematical negative,
// 64 usage or parse error, 70 internal numerical failure.

#include "coep/batch.hpp"
#include "coep/classification.hpp"
#include "coep/json_io.hpp"
#include "coep/mult_operators.hpp"
#include "coep/perturbation.hpp"
#include "coep/pseudoinverse.hpp"
#include "coep/rng.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

using coep::CMat;
using coep::Complex;
using coep::NormSpec;
using coep::ordered_json;
using coep::ToleranceConfig;

struct CommonOpts {
    std::string norm = "l2";
    bool table = false;
    std::string out_path;
    ToleranceConfig tol;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--norm", o.norm, "norm: l1, l2, linf or lp:<p>");
    cmd->add_flag("--table", o.table, "human-readable table instead of JSON");
    cmd->add_option("--out", o.out_path, "write the report to a file");
    cmd->add_option("--tol-rank", o.tol.rank_tol, "relative rank tolerance");
    cmd->add_option("--tol-residual", o.tol.residual_tol, "residual tolerance");
    cmd->add_option("--tol-invert", o.tol.invertibility_tol,
                    "reciprocal-condition invertibility threshold");
    cmd->add_option("--tol-angle", o.tol.angle_tol, "principal-angle tolerance");
    cmd->add_option("--tol-hermitian", o.tol.hermitian_tol,
                    "hermitian defect tolerance");
}

void emit(const CommonOpts& o, const ordered_json& j, const std::string& table) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) throw std::runtime_error("cannot write " + o.out_path);
        os = &file;
    }
    if (o.table)
        *os << table;
    else
        *os << j.dump(2) << '\n';
}

Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::pair<int, int> parse_dims(const std::string& s) {
    auto dots = s.find("..");
    int lo, hi;
    if (dots == std::string::npos) {
        lo = hi = std::stoi(s);
    } else {
        lo = std::stoi(s.substr(0, dots));
        hi = std::stoi(s.substr(dots + 2));
    }
    if (lo < 1 || hi > 16 || lo > hi)
        throw std::invalid_argument("--dims must lie within 1..16");
    return {lo, hi};
}

// ---------------------------------------------------------------- mp ----

int cmd_mp(const CommonOpts& o, const std::string& input,
           const std::string& candidate) {
    NormSpec norm = coep::norm_from_string(o.norm);
    CMat a = coep::load_matrix(input);
    coep::require_square(a, "mp");

    ordered_json j;
    std::ostringstream table;
    bool valid = false;

    if (!candidate.empty()) {
        CMat x = coep::load_matrix(candidate);
        auto cert = coep::mp_verify(a, x, norm, o.tol);
        valid = cert.valid(o.tol);
        j["mode"] = "verify";
        j["certificate"] = coep::certificate_to_json(cert, o.tol);
        table << "verify: " << (valid ? "valid" : "invalid")
              << " (residuals " << cert.residual_axa << ", "
              << cert.residual_xax << ")\n";
    } else if (norm.kind == NormSpec::Kind::L2) {
        auto [x, cert] = coep::mp_inverse_euclidean(a, o.tol);
        valid = cert.valid(o.tol);
        j["mode"] = "compute";
        j["mp_inverse"] = coep::matrix_to_json(x);
        j["certificate"] = coep::certificate_to_json(cert, o.tol);
        table << "mp inverse:\n" << x << "\nvalid: " << valid << "\n";
    } else {
        auto outcome = coep::mp_search_diagonalizable(a, norm, o.tol);
        j["mode"] = "search";
        j["candidates_tried"] = outcome.candidates_tried;
        if (outcome.found) {
            valid = true;
            j["mp_inverse"] = coep::matrix_to_json(outcome.found->first);
            j["certificate"] =
                coep::certificate_to_json(outcome.found->second, o.tol);
            table << "mp inverse found:\n" << outcome.found->first << "\n";
        } else {
            j["found"] = false;
            j["note"] = outcome.note;
            table << "no mp inverse found: " << outcome.note << "\n";
        }
    }
    emit(o, j, table.str());
    return valid ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------- classify ----

int cmd_classify(const CommonOpts& o, const std::string& input) {
    NormSpec norm = coep::norm_from_string(o.norm);
    CMat a = coep::load_matrix(input);
    auto rep = coep::classify(a, norm, o.tol);
    ordered_json j = coep::classification_to_json(rep);

    std::ostringstream table;
    table << "mp_invertible   " << rep.mp_invertible << "\n"
          << "ep              " << rep.ep << "\n"
          << "co_ep           " << rep.co_ep << "\n"
          << "bi_ep           " << rep.bi_ep << "\n"
          << "hermitian_co_ep " << rep.hermitian_co_ep << "\n";
    emit(o, j, table.str());
    return rep.mp_invertible ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------- audit ----

struct InstanceSpec {
    CMat a;
    std::string cls;
};

InstanceSpec make_instance(std::size_t index, std::uint64_t seed, int lo,
                           int hi) {
    const int span = hi - lo + 1;
    int n = lo + int(index % std::size_t(span));
    std::uint64_t sub = seed * 1000003ULL + index;
    switch (index % 6) {
        case 0: {
            int m = (n % 2 == 0) ? n : (n + 1 <= 16 ? n + 1 : n - 1);
            if (m < 2) m = 2;
            return {coep::gen_hermitian_coep(m, sub), "hermitian_coep"};
        }
        case 1: {
            int m = (n % 2 == 0) ? n : (n + 1 <= 16 ? n + 1 : n - 1);
            if (m < 2) m = 2;
            return {coep::gen_coep_non_hermitian(m, sub), "coep_non_hermitian"};
        }
        case 2:
            return {coep::gen_ep(n, sub), "ep"};
        case 3:
            return {coep::gen_random(n, sub), "random"};
        case 4:
            return {CMat::Zero(n, n), "zero"};
        default:
            return {CMat::Identity(n, n), "identity"};
    }
}

struct AuditRow {
    std::string cls;
    int n = 0;
    bool agree = false;
    ordered_json detail;
};

int cmd_audit(const CommonOpts& o, const std::string& suite, int count,
              std::uint64_t seed, const std::string& dims,
              const std::optional<std::string>& lambda_s,
              const std::optional<std::string>& mu_s) {
    NormSpec norm = coep::norm_from_string(o.norm);
    auto [lo, hi] = parse_dims(dims);
    if (count < 1) throw std::invalid_argument("--count must be >= 1");
    static const std::vector<std::string> kSuites = {
        "thm7", "thm5", "cor8", "cor9", "pro37", "pro38", "thm39", "prop8"};
    // validate eagerly: a throw from inside the parallel batch would abort
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
        throw std::invalid_argument("unknown audit suite: " + suite);
    if (lambda_s) (void)parse_complex(*lambda_s);
    if (mu_s) (void)parse_complex(*mu_s);

    auto run_one = [&](std::size_t i) -> AuditRow {
        InstanceSpec inst = make_instance(i, seed, lo, hi);
        auto [a_dag, cert] = coep::mp_inverse_euclidean(inst.a, o.tol);
        coep::Rng lam_rng = coep::Rng(seed).fork(0xabcd + i);
        auto draw_nonzero = [&]() {
            Complex z;
            do {
                z = lam_rng.cgaussian();
            } while (std::abs(z) < 0.1);
            return z;
        };
        Complex lambda = lambda_s ? parse_complex(*lambda_s) : draw_nonzero();
        Complex mu = mu_s ? parse_complex(*mu_s) : draw_nonzero();

        AuditRow row;
        row.cls = inst.cls;
        row.n = int(inst.a.rows());
        if (suite == "thm7") {
            auto audit = coep::audit_thm7(inst.a, a_dag, lambda, mu, o.tol);
            row.agree = audit.all_agree();
            row.detail = coep::audit_to_json(audit);
        } else if (suite == "thm5") {
            auto audit = coep::audit_thm5(inst.a, a_dag, norm, o.tol);
            row.agree = audit.all_agree();
            row.detail = coep::audit_to_json(audit);
        } else if (suite == "cor8") {
            auto audit = coep::audit_cor8(inst.a, a_dag, lambda, mu, o.tol);
            row.agree = audit.all_agree();
            row.detail = coep::audit_to_json(audit);
        } else if (suite == "cor9") {
            auto audit = coep::audit_cor9(inst.a, a_dag, o.tol);
            row.agree = audit.all_agree();
            row.detail = coep::audit_to_json(audit);
        } else if (suite == "pro37") {
            auto pair = coep::check_pro37(inst.a, a_dag, o.tol);
            row.agree = pair.agree();
            row.detail = {{"lhs", pair.lhs}, {"rhs", pair.rhs}};
        } else if (suite == "pro38") {
            auto pair = coep::check_pro38(inst.a, a_dag, o.tol);
            row.agree = pair.agree();
            row.detail = {{"lhs", pair.lhs}, {"rhs", pair.rhs}};
        } else if (suite == "thm39") {
            auto rep = coep::check_thm39(inst.a, a_dag, o.tol);
            row.agree = rep.agree();
            row.detail = {{"invertible", rep.invertible},
                          {"conditions", rep.conditions}};
        } else if (suite == "prop8") {
            auto rep = coep::audit_prop8(inst.a, a_dag, lambda, mu, o.tol);
            row.agree = rep.pass();
            row.detail = {{"image_equality_range", rep.image_equality_range},
                          {"image_inclusion_range", rep.image_inclusion_range},
                          {"image_equality_corange", rep.image_equality_corange},
                          {"image_inclusion_corange", rep.image_inclusion_corange},
                          {"triple", rep.triple},
                          {"triple_agrees", rep.triple_agrees},
                          {"iv_applicable", rep.iv_applicable},
                          {"iv_holds", rep.iv_holds},
                          {"v_applicable", rep.v_applicable},
                          {"v_holds", rep.v_holds}};
        } else {
            throw std::invalid_argument("unknown audit suite: " + suite);
        }
        if (!row.agree) row.detail["matrix"] = coep::matrix_to_json(inst.a);
        return row;
    };

    auto rows = coep::run_parallel(std::size_t(count), run_one);

    ordered_json j;
    j["suite"] = suite;
    j["count"] = count;
    j["seed"] = seed;
    j["dims"] = {lo, hi};
    j["norm"] = coep::norm_to_json(norm);
    int disagreements = 0;
    ordered_json results = ordered_json::array();
    ordered_json dumped = ordered_json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ordered_json r;
        r["index"] = i;
        r["class"] = rows[i].cls;
        r["n"] = rows[i].n;
        r["agree"] = rows[i].agree;
        results.push_back(std::move(r));
        if (!rows[i].agree) {
            ++disagreements;
            ordered_json d = rows[i].detail;
            d["index"] = i;
            dumped.push_back(std::move(d));
        }
    }
    j["results"] = std::move(results);
    j["disagreements"] = std::move(dumped);
    j["all_agree"] = disagreements == 0;

    std::ostringstream table;
    table << "suite " << suite << ": " << count - disagreements << "/" << count
          << " instances agree\n";
    emit(o, j, table.str());
    return disagreements == 0 ? kExitOk : kExitNegative;
}

// ------------------------------------------------------------ perturb ----

int cmd_perturb(const CommonOpts& o, const std::string& input,
                const std::vector<double>& eps_grid, std::uint64_t seed) {
    NormSpec norm = coep::norm_from_string(o.norm);
    CMat a = coep::load_matrix(input);
    coep::require_square(a, "perturb");
    auto [a_dag, cert] = coep::mp_inverse_euclidean(a, o.tol);
    if (!cert.valid(o.tol)) return kExitNegative;

    bool all_hold = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream table;
    table << "eps  contraction  realized  bound  bracket  reverse\n";

    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        double eps = eps_grid[i];
        CMat b = coep::gen_perturbation(a, a_dag, eps, seed + i, norm, o.tol);
        coep::PerturbationPair pair{a, a_dag, b, norm};
        auto cond = coep::satisfies_condition_p(pair, o.tol);
        auto err = coep::error_bound(pair, o.tol);
        auto bracket = coep::norm_bracket(pair, o.tol);
        auto rev = coep::reverse_condition(pair, o.tol);
        auto pm = coep::perturbed_mp(pair, o.tol);

        bool bound_holds = err.realized <= err.bound * (1.0 + 1e-12) + 1e-12;
        bool bracket_holds = bracket.holds();
        bool reverse_ok = !rev.applicable || rev.holds;
        bool cert_ok = pm.certificate.valid(o.tol);
        all_hold = all_hold && cond.satisfied && bound_holds && bracket_holds &&
                   reverse_ok && cert_ok;

        ordered_json r;
        r["eps"] = eps;
        r["contraction"] = cond.contraction;
        r["realized_error"] = err.realized;
        r["error_bound"] = err.bound;
        r["norm_bracket"] = {bracket.lower, bracket.value, bracket.upper};
        r["reverse_condition"] =
            rev.applicable ? (rev.holds ? "holds" : "fails") : "not-applicable";
        r["certificate_valid"] = cert_ok;
        rows.push_back(std::move(r));

        table << eps << "  " << cond.contraction << "  " << err.realized
              << "  " << err.bound << "  [" << bracket.lower << ", "
              << bracket.value << ", " << bracket.upper << "]  "
              << (rev.applicable ? (rev.holds ? "holds" : "fails") : "n/a")
              << "\n";
    }

    ordered_json j;
    j["seed"] = seed;
    j["norm"] = coep::norm_to_json(norm);
    j["rows"] = std::move(rows);
    j["all_bounds_hold"] = all_hold;
    emit(o, j, table.str());
    return all_hold ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- gen ----

int cmd_gen(const CommonOpts& o, const std::string& cls, int n,
            std::uint64_t seed) {
    CMat a;
    if (cls == "hermitian-coep")
        a = coep::gen_hermitian_coep(n, seed);
    else if (cls == "coep")
        a = coep::gen_coep_non_hermitian(n, seed);
    else if (cls == "ep")
        a = coep::gen_ep(n, seed);
    else if (cls == "random")
        a = coep::gen_random(n, seed);
    else
        throw std::invalid_argument("unknown class: " + cls);

    std::ostringstream table;
    table << a << "\n";
    emit(o, coep::matrix_to_json(a), table.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"co-EP matrix algebra toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string input, candidate;
    auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse / verification");
    mp->add_option("input", input, "matrix JSON file")->required();
    mp->add_option("candidate", candidate, "candidate inverse to verify");
    add_common(mp, opts);

    std::string cls_input;
    auto* classify = app.add_subcommand("classify", "EP / co-EP classification");
    classify->add_option("input", cls_input, "matrix JSON file")->required();
    add_common(classify, opts);

    std::string suite, dims = "2..6";
    int count = 100;
    std::uint64_t seed = 0;
    std::optional<std::string> lambda_s, mu_s;
    auto* audit = app.add_subcommand("audit", "theorem audit sweep");
    audit->add_option("suite", suite,
                      "thm7, thm5, cor8, cor9, pro37, pro38, thm39 or prop8")
        ->required();
    audit->add_option("--count", count, "number of instances");
    audit->add_option("--seed", seed, "random seed");
    audit->add_option("--dims", dims, "dimension range a..b (within 1..16)");
    audit->add_option("--lambda", lambda_s, "fixed lambda as re,im");
    audit->add_option("--mu", mu_s, "fixed mu as re,im");
    add_common(audit, opts);

    std::string pert_input;
    std::vector<double> eps_grid{0.1, 0.3, 0.49};
    std::uint64_t pert_seed = 0;
    auto* perturb = app.add_subcommand("perturb", "condition-(P) sweep");
    perturb->add_option("input", pert_input, "matrix JSON file")->required();
    perturb->add_option("--eps", eps_grid, "epsilon grid");
    perturb->add_option("--seed", pert_seed, "random seed");
    add_common(perturb, opts);

    std::string gen_cls;
    int gen_n = 4;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a class instance");
    gen->add_option("class", gen_cls, "hermitian-coep, coep, ep or random")
        ->required();
    gen->add_option("--dims", gen_n, "dimension (within 1..16)");
    gen->add_option("--seed", gen_seed, "random seed");
    add_common(gen, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        opts.tol.validate();
        if (mp->parsed()) return cmd_mp(opts, input, candidate);
        if (classify->parsed()) return cmd_classify(opts, cls_input);
        if (audit->parsed())
            return cmd_audit(opts, suite, count, seed, dims, lambda_s, mu_s);
        if (perturb->parsed())
            return cmd_perturb(opts, pert_input, eps_grid, pert_seed);
        if (gen->parsed()) {
            if (gen_n < 1 || gen_n > 16)
                throw std::invalid_argument("--dims must lie within 1..16");
            return cmd_gen(opts, gen_cls, gen_n, gen_seed);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
