// Command-line front end: sequence tables, certificate verification,
// zeta(3) enclosures and digits, the lcm(1..n) = O(3^n) lemma suite,
// the irrationality-criterion checks, and rational refutation demos.
//
// Exit codes: 0 all checks passed, 1 a check verifiably failed,
// 2 usage or input error.

#include "apery/cauchy.hpp"
#include "apery/certlib.hpp"
#include "apery/criterion.hpp"
#include "apery/dsl.hpp"
#include "apery/hanson.hpp"
#include "apery/numkit.hpp"
#include "apery/sequences.hpp"
#include "apery/shiftalg.hpp"
#include "apery/telescope.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace apery;
using namespace apery::certlib;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string rat_str(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

int cmd_seq(long max_n, const std::string& format) {
    if (format == "csv") {
        std::cout << "n,a,b_num,b_den,w,rho\n";
        for (long n = 0; n <= max_n; ++n) {
            Rat b = seq::b(n);
            std::cout << n << "," << seq::a(n).str() << "," << num(b).str() << ","
                      << den(b).str() << "," << rat_str(seq::casoratian_w(n)) << ","
                      << rat_str(seq::rho(n)) << "\n";
        }
    } else if (format == "json") {
        Json rows = Json::array();
        for (long n = 0; n <= max_n; ++n) {
            Rat b = seq::b(n);
            rows.push_back({{"n", n},
                            {"a", seq::a(n).str()},
                            {"b_num", num(b).str()},
                            {"b_den", den(b).str()},
                            {"w", rat_str(seq::casoratian_w(n))},
                            {"rho", rat_str(seq::rho(n))}});
        }
        std::cout << Json{{"schema", 1}, {"rows", rows}}.dump(2) << "\n";
    } else {  // text
        for (long n = 0; n <= max_n; ++n)
            std::cout << "n=" << n << " a=" << seq::a(n).str()
                      << " b=" << rat_str(seq::b(n))
                      << " w=" << rat_str(seq::casoratian_w(n))
                      << " rho=" << rat_str(seq::rho(n)) << "\n";
    }
    return kExitOk;
}

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Verifies one named stanza against its built-in meaning. The
// binomial_sum pair is handled jointly by the caller.
CheckResult check_stanza(const AnnRec& rec) {
    CheckResult r{rec.name, false, ""};
    if (rec.name == "apery_a" || rec.name == "apery_b") {
        if (!rec.op.univariate_in_n()) {
            r.detail = "expected an operator in Sn only";
            return r;
        }
        SeqEvaluator y = rec.name == "apery_a"
                             ? SeqEvaluator([](long n) { return Rat(seq::a(n)); })
                             : SeqEvaluator([](long n) { return seq::b(n); });
        for (long n = 0; n <= 100; ++n) {
            if (rec.op.apply_seq(y, n) != 0) {
                r.detail = "operator does not annihilate the sequence at n=" +
                           std::to_string(n);
                return r;
            }
        }
        r.ok = true;
        r.detail = "annihilates the sequence for 0 <= n <= 100";
        return r;
    }
    if (rec.name == "pascal") {
        auto id = identity_from_operator(rec, "C");
        Verdict v = verify_hyper_identity(id, standard_terms());
        r.ok = v.ok;
        r.detail = v.ok ? "symbolic telescoping identity holds" : v.detail;
        return r;
    }
    if (rec.name == "telescope_u") {
        auto id = identity_from_operator(rec, "lambda");
        Verdict v = verify_hyper_identity(id, standard_terms());
        if (!v.ok) {
            r.detail = v.detail;
            return r;
        }
        Verdict pw = verify_pointwise(id, {{"lambda", seq::lambda_evaluator()}},
                                      triangle_grid(1, 20, 0));
        r.ok = pw.ok;
        r.detail = pw.ok ? "symbolic identity holds; pointwise confirmed on 0 <= k <= n <= 20"
                         : pw.detail;
        return r;
    }
    r.detail = "unknown stanza name";
    return r;
}

int cmd_verify(const std::string& path, bool as_json) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read certificate file: " << path << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<AnnRec> recs;
    try {
        recs = parse_certificates(buf.str());
    } catch (const ParseError& e) {
        std::cerr << "parse error in " << path << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (recs.empty()) {
        std::cerr << "error: no stanzas in " << path << "\n";
        return kExitUsage;
    }
    std::vector<CheckResult> results;
    const AnnRec* binom_p = nullptr;
    const AnnRec* binom_q = nullptr;
    for (const auto& rec : recs) {
        if (rec.name == "binomial_sum_P") binom_p = &rec;
        else if (rec.name == "binomial_sum_Q") binom_q = &rec;
        else results.push_back(check_stanza(rec));
    }
    if (binom_p || binom_q) {
        CheckResult r{"binomial_sum", false, ""};
        if (!binom_p || !binom_q) {
            r.detail = "need both binomial_sum_P and binomial_sum_Q stanzas";
        } else if (!binom_p->op.univariate_in_n() || !binom_q->op.univariate_in_n()) {
            r.detail = "P and Q must be operators in Sn only";
        } else {
            long beta = binom_p->op.order_in_n();
            CtVerdict v = ct_sum_check(binom_p->op, binom_q->op, seq::binom_evaluator(),
                                       0, beta, Proviso{}, 0, 30);
            if (!v.annihilates()) {
                r.detail = v.ok ? "right-hand side did not telescope to zero" : v.detail;
            } else {
                bool closed = true;
                Int pw = 1;
                for (long n = 0; n <= 30; ++n, pw *= 2) {
                    Rat total = 0;
                    for (long k = 0; k <= n; ++k) total += Rat(binomial(n, k));
                    if (total != Rat(pw)) {
                        closed = false;
                        r.detail = "sum_k C(n,k) != 2^n at n=" + std::to_string(n);
                        break;
                    }
                }
                if (closed) {
                    r.ok = true;
                    r.detail = "P annihilates sum_k C(n,k) and the sum equals 2^n for n <= 30";
                }
            }
        }
        results.push_back(r);
    }
    bool all_ok = true;
    for (const auto& r : results) all_ok = all_ok && r.ok;
    if (as_json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name},
                           {"status", r.ok ? "accepted" : "rejected"},
                           {"detail", r.detail}});
        std::cout << Json{{"schema", 1}, {"certificate", path}, {"ok", all_ok},
                          {"results", arr}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : results)
            std::cout << r.name << ": " << (r.ok ? "accepted" : "rejected")
                      << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    }
    return all_ok ? kExitOk : kExitFail;
}

int cmd_zeta3(int digits, bool as_json) {
    long n = zeta3_digits_witness(digits);
    Enclosure e = zeta3_enclosure(n);
    auto s = digits_from_enclosure(e, digits);
    if (!s) {
        std::cerr << "error: enclosure too wide at n=" << n << "\n";
        return kExitFail;
    }
    if (as_json) {
        std::cout << Json{{"schema", 1},
                          {"digits", digits},
                          {"value", *s},
                          {"witness_n", n},
                          {"lo", rat_str(e.lo)},
                          {"hi", rat_str(e.hi)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "zeta(3) = " << *s << "\n"
                  << "certified by the enclosure at n=" << n << ":\n"
                  << "  lo = " << rat_str(e.lo) << "\n"
                  << "  hi = " << rat_str(e.hi) << "\n";
    }
    return kExitOk;
}

int cmd_hanson(long max_n, bool as_json) {
    long lcm_n = std::max(max_n, 4 * max_n);
    hanson::SuiteReport rep = hanson::run_suite(max_n, lcm_n);
    hanson::LcmGrowthReport growth = hanson::lcm_bigO_3n_report(max_n);
    if (as_json) {
        Json arr = Json::array();
        for (const auto& c : rep.checks)
            arr.push_back({{"name", c.name}, {"scope", c.scope},
                           {"status", c.ok ? "accepted" : "rejected"}});
        std::cout << Json{{"schema", 1},
                          {"max_n", rep.max_n},
                          {"lcm_max_n", rep.lcm_max_n},
                          {"ok", rep.all_ok()},
                          {"checks", arr},
                          {"max_lcm_over_3n", rat_str(growth.max_ratio)},
                          {"max_lcm_over_3n_at", growth.max_ratio_n},
                          {"bound_decreasing_from", growth.decreasing_from}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& c : rep.checks)
            std::cout << c.name << " [" << c.scope << "]: "
                      << (c.ok ? "accepted" : "rejected") << "\n";
        std::cout << "max lcm(1..n)/3^n = " << rat_str(growth.max_ratio) << " at n="
                  << growth.max_ratio_n << "\n"
                  << "certified bound strictly decreasing from n="
                  << growth.decreasing_from << "\n";
    }
    return rep.all_ok() ? kExitOk : kExitFail;
}

int cmd_criterion(long max_n, bool as_json) {
    criterion::Verdict integ = criterion::integrality_check(std::min(max_n, 100L));
    criterion::Verdict growth = criterion::growth_check(std::max(max_n, 52L));
    criterion::Verdict pos = criterion::positivity_check(std::min(max_n, 60L));
    criterion::DecayTable decay = criterion::decay_table(max_n);
    bool all_ok = integ.ok && growth.ok && pos.ok;
    if (as_json) {
        std::cout << Json{{"schema", 1},
                          {"max_n", max_n},
                          {"ok", all_ok},
                          {"integrality", {{"ok", integ.ok}, {"detail", integ.detail}}},
                          {"growth", {{"ok", growth.ok}, {"detail", growth.detail}}},
                          {"positivity", {{"ok", pos.ok}, {"detail", pos.detail}}},
                          {"decay",
                           {{"decreasing_from", decay.n0},
                            {"final_bound", rat_str(decay.rows.back().bound)}}}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "integrality: " << (integ.ok ? "accepted" : "rejected")
                  << (integ.detail.empty() ? "" : " (" + integ.detail + ")") << "\n"
                  << "growth: " << (growth.ok ? "accepted" : "rejected")
                  << (growth.detail.empty() ? "" : " (" + growth.detail + ")") << "\n"
                  << "positivity: " << (pos.ok ? "accepted" : "rejected")
                  << (pos.detail.empty() ? "" : " (" + pos.detail + ")") << "\n"
                  << "decay bound lcm^3*8/a decreasing from n=" << decay.n0
                  << ", value at n=" << max_n << ": "
                  << rat_str(decay.rows.back().bound) << "\n";
    }
    return all_ok ? kExitOk : kExitFail;
}

int cmd_refute(const std::string& target, long max_n, bool as_json) {
    auto slash = target.find('/');
    Int p, q;
    try {
        p = Int(target.substr(0, slash));
        q = slash == std::string::npos ? Int(1) : Int(target.substr(slash + 1));
    } catch (const std::exception&) {
        std::cerr << "error: refutation target must be an integer or p/q\n";
        return kExitUsage;
    }
    if (q <= 0) {
        std::cerr << "error: refutation target must have positive denominator\n";
        return kExitUsage;
    }
    criterion::RefutationReport rep = criterion::contradiction_demo(p, q, max_n);
    if (as_json) {
        std::cout << Json{{"schema", 1},
                          {"target", p.str() + "/" + q.str()},
                          {"max_n", max_n},
                          {"refuted", rep.refuted},
                          {"witness_n", rep.witness_n},
                          {"detail", rep.detail}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << p.str() << "/" << q.str() << ": "
                  << (rep.refuted ? "refuted" : "not refuted") << " (" << rep.detail
                  << ")\n";
    }
    return rep.refuted ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for the zeta(3) irrationality certificates"};
    app.require_subcommand(1);

    long seq_max_n = 10;
    std::string seq_format = "text";
    auto* seq_cmd = app.add_subcommand("seq", "Tabulate a_n, b_n, w_n, rho_n");
    seq_cmd->add_option("--max-n", seq_max_n, "Largest index to tabulate")
        ->check(CLI::NonNegativeNumber);
    seq_cmd->add_option("--format", seq_format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));

    std::string cert_path;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate file");
    verify_cmd->add_option("--cert", cert_path, "Certificate file")->required();
    verify_cmd->add_flag("--json", verify_json, "JSON report");

    int digits = 20;
    bool zeta_json = false;
    auto* zeta_cmd = app.add_subcommand("zeta3", "Certified decimal digits of zeta(3)");
    zeta_cmd->add_option("--digits", digits, "Number of certified digits")
        ->check(CLI::Range(1, 60));
    zeta_cmd->add_flag("--json", zeta_json, "JSON report");

    long hanson_max_n = 500;
    bool hanson_json = false;
    auto* hanson_cmd = app.add_subcommand("hanson", "lcm(1..n) = O(3^n) lemma suite");
    hanson_cmd->add_option("--max-n", hanson_max_n, "Range bound")
        ->check(CLI::Range(2L, 5000L));
    hanson_cmd->add_flag("--json", hanson_json, "JSON report");

    long crit_max_n = 120;
    bool crit_json = false;
    auto* crit_cmd = app.add_subcommand("criterion", "Irrationality-criterion checks");
    crit_cmd->add_option("--max-n", crit_max_n, "Range bound")
        ->check(CLI::Range(52L, 2000L));
    crit_cmd->add_flag("--json", crit_json, "JSON report");

    std::string refute_target;
    long refute_max_n = 50;
    bool refute_json = false;
    auto* refute_cmd = app.add_subcommand("refute", "Refute zeta(3) = p/q");
    refute_cmd->add_option("target", refute_target, "Rational target p/q")->required();
    refute_cmd->add_option("--max-n", refute_max_n, "Scan bound")
        ->check(CLI::Range(2L, 2000L));
    refute_cmd->add_flag("--json", refute_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (seq_cmd->parsed()) return cmd_seq(seq_max_n, seq_format);
        if (verify_cmd->parsed()) return cmd_verify(cert_path, verify_json);
        if (zeta_cmd->parsed()) return cmd_zeta3(digits, zeta_json);
        if (hanson_cmd->parsed()) return cmd_hanson(hanson_max_n, hanson_json);
        if (crit_cmd->parsed()) return cmd_criterion(crit_max_n, crit_json);
        if (refute_cmd->parsed()) return cmd_refute(refute_target, refute_max_n, refute_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
