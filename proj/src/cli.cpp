#include "lucas/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "lucas/errors.hpp"
#include "lucas/seq_core.hpp"

namespace lucas::cli {

Json to_json(const ResidueClass& r) {
    return Json{{"value", r.value().to_string()}, {"modulus", r.modulus().to_string()}};
}

Json to_json(const ModResult& r) {
    if (const auto* rc = std::get_if<ResidueClass>(&r)) return to_json(*rc);
    return Json{{"trivial_modulus", std::get<TrivialModulus>(r).modulus_term.to_string()}};
}

Json to_json(const CongruenceReport& report) {
    Json inputs{{"p", report.p.to_string()}, {"q", report.q.to_string()}, {"k", report.k}, {"n", report.n}};
    inputs["r"] = report.r ? Json(*report.r) : Json(nullptr);
    Json j{{"family", std::string(to_string(report.family))}, {"inputs", std::move(inputs)}};
    j["lhs"] = to_json(report.lhs);
    j["rhs"] = to_json(report.rhs);
    j["case_tag"] = report.case_tag ? Json(std::string(to_string(*report.case_tag))) : Json(nullptr);
    j["holds"] = report.holds;
    return j;
}

Json to_json(const PrimalityVerdict& verdict, bool with_timing) {
    Json j{{"n", verdict.n},
           {"method", verdict.method},
           {"sum_residue", to_json(verdict.sum_residue)},
           {"criterion_says_prime", verdict.criterion_says_prime},
           {"oracle_says_prime", verdict.oracle_says_prime},
           {"agree", verdict.agree}};
    if (with_timing) j["elapsed_ns"] = verdict.elapsed.count();
    return j;
}

Json to_json(const DivisorSumBreakdown& breakdown) {
    Json terms = Json::array();
    for (const auto& t : breakdown.terms) {
        terms.push_back(Json{{"d", t.divisor}, {"phi", t.phi}, {"contribution", t.contribution.to_string()}});
    }
    return Json{{"n", breakdown.n},
                {"terms", std::move(terms)},
                {"total", breakdown.total.to_string()},
                {"is_integer", breakdown.is_integer}};
}

Json to_json(const ScanReport& report, bool with_timing) {
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) mismatches.push_back(Json{{"n", m.n}, {"detail", m.detail}});
    Json j{{"from", report.from},
           {"to", report.to},
           {"method", std::string(to_string(report.method))},
           {"checked", report.checked},
           {"skipped", report.skipped},
           {"mismatches", std::move(mismatches)},
           {"workers", report.workers},
           {"stopped_early", report.stopped_early}};
    if (with_timing) j["wall_time_ns"] = report.wall_time.count();
    return j;
}

namespace {

struct Globals {
    bool pretty = false;
    bool no_timing = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Index to_index(const std::string& text, const char* name) {
    const Integer v = Integer::from_string(text);
    if (v.sign() < 0) throw UsageError(std::string(name) + " must be nonnegative");
    return v.to_u64();
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// eval -------------------------------------------------------------------

struct EvalArgs {
    std::string p, q, n, modulus;
    bool with_v = false;
};

int do_eval(const EvalArgs& a, const Globals& g, std::ostream& out) {
    const LucasParams params = make_params(Integer::from_string(a.p), Integer::from_string(a.q));
    const Index n = to_index(a.n, "-n");
    Integer u = u_at(params, n);
    std::optional<Integer> v;
    if (a.with_v) v = v_at(params, n);
    std::optional<Integer> m;
    if (!a.modulus.empty()) {
        m = Integer::from_string(a.modulus);
        u = ResidueClass(u, *m).value();  // BadModulus for m <= 1
        if (v) v = ResidueClass(*v, *m).value();
    }
    if (g.pretty) {
        const std::string args = "(" + a.p + "," + a.q + ")";
        const std::string suffix = m ? " (mod " + m->to_string() + ")" : "";
        out << "U_" << n << args << " = " << u << suffix << '\n';
        if (v) out << "V_" << n << args << " = " << *v << suffix << '\n';
        return kOk;
    }
    Json j{{"p", params.p().to_string()}, {"q", params.q().to_string()}, {"n", n}};
    if (m) j["modulus"] = m->to_string();
    j["u"] = u.to_string();
    if (v) j["v"] = v->to_string();
    emit(out, j);
    return kOk;
}

// congruence -------------------------------------------------------------

struct CongruenceArgs {
    std::string family, p, q, k, n, r;
};

int do_congruence(const CongruenceArgs& a, const Globals& g, std::ostream& out) {
    const auto family = parse_family(a.family);
    if (!family) throw UsageError("unknown family '" + a.family + "'");
    const bool general = *family == Family::Lemma1 || *family == Family::Lemma2 || *family == Family::Cor6 ||
                         *family == Family::Cor7 || *family == Family::Shift || *family == Family::Main;
    if (general && (a.p.empty() || a.q.empty())) throw UsageError("family " + a.family + " needs -p and -q");
    if (a.k.empty() || a.n.empty()) throw UsageError("congruence needs -k and -n");
    if (*family == Family::Shift && a.r.empty()) throw UsageError("family shift needs -r");

    const LucasParams params = general ? make_params(Integer::from_string(a.p), Integer::from_string(a.q))
                                       : fibonacci_params();
    std::optional<Index> r;
    if (!a.r.empty()) r = to_index(a.r, "-r");
    const auto report = check_congruence(*family, params, to_index(a.k, "-k"), to_index(a.n, "-n"), r);

    if (g.pretty) {
        out << a.family << " (P,Q)=(" << report.p << "," << report.q << ") k=" << report.k << " n=" << report.n;
        if (report.r) out << " r=" << *report.r;
        out << "\n  lhs: " << to_string(report.lhs) << "\n  rhs: " << to_string(report.rhs) << '\n';
        if (report.case_tag) out << "  case: " << to_string(*report.case_tag) << '\n';
        out << "  " << (report.holds ? "holds" : "VIOLATED") << '\n';
    } else {
        emit(out, to_json(report));
    }
    return report.holds ? kOk : kMismatch;
}

// primetest / explore -----------------------------------------------------

struct PrimetestArgs {
    std::string method, n;
};

void pretty_verdict(std::ostream& out, const PrimalityVerdict& v, bool timing) {
    out << v.method << " n=" << v.n << "\n  sum residue: " << v.sum_residue.to_string()
        << "\n  criterion: " << (v.criterion_says_prime ? "prime" : "composite")
        << "\n  oracle:    " << (v.oracle_says_prime ? "prime" : "composite")
        << "\n  " << (v.agree ? "agree" : "DISAGREE") << '\n';
    if (timing) out << "  elapsed: " << v.elapsed.count() << " ns\n";
}

int do_primetest(const PrimetestArgs& a, const Globals& g, std::ostream& out) {
    const bool timing = !g.no_timing;
    if (a.method == "oracle") {
        const Integer n = Integer::from_string(a.n);
        const bool prime = is_prime_oracle(n);
        if (g.pretty) {
            out << n << " is " << (prime ? "prime" : "composite") << '\n';
        } else {
            emit(out, Json{{"n", n.to_string()}, {"method", "oracle"}, {"oracle_says_prime", prime}});
        }
        return kOk;
    }

    const Index n = to_index(a.n, "-n");
    if (a.method == "divisor-sum") {
        const auto start = std::chrono::steady_clock::now();
        const auto b = divisor_sum_breakdown(n);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        const bool oracle = is_prime_oracle(static_cast<std::uint64_t>(n));
        const bool agree = b.is_integer == oracle;
        if (g.pretty) {
            out << "divisor-sum n=" << n << '\n';
            for (const auto& t : b.terms) {
                out << "  d=" << t.divisor << " phi=" << t.phi << " contribution=" << t.contribution.to_string() << '\n';
            }
            out << "  total: " << b.total.to_string() << (b.is_integer ? " (integer)" : " (not an integer)") << '\n'
                << "  " << (agree ? "agree" : "DISAGREE") << '\n';
        } else {
            Json j = to_json(b);
            j["method"] = "divisor-sum";
            j["criterion_says_prime"] = b.is_integer;
            j["oracle_says_prime"] = oracle;
            j["agree"] = agree;
            if (timing) j["elapsed_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count();
            emit(out, j);
        }
        return agree ? kOk : kMismatch;
    }

    PrimalityVerdict v = [&] {
        if (a.method == "mersenne-sum") return mersenne_primality_test(n, SumPath::Fast);
        if (a.method == "mersenne-sum-direct") return mersenne_primality_test(n, SumPath::Direct);
        if (a.method == "fib-sum") return fibonacci_primality_test(n, SumPath::Fast);
        if (a.method == "fib-sum-direct") return fibonacci_primality_test(n, SumPath::Direct);
        throw UsageError("unknown method '" + a.method + "'");
    }();
    if (g.pretty) {
        pretty_verdict(out, v, timing);
    } else {
        emit(out, to_json(v, timing));
    }
    return v.agree ? kOk : kMismatch;
}

int do_explore(const std::string& n_text, const Globals& g, std::ostream& out) {
    const Index n = to_index(n_text, "-n");
    const ResidueClass direct = fibonacci_sum_residue_direct(n);
    std::optional<ResidueClass> fast;
    if (n >= 5 && n % 4 == 1) fast = fibonacci_sum_residue_fast(n);
    const bool prime = is_prime_oracle(static_cast<std::uint64_t>(n));
    if (g.pretty) {
        out << "fibonacci sum n=" << n << "\n  direct: " << direct.to_string() << '\n';
        if (fast) out << "  fast:   " << fast->to_string() << '\n';
        out << "  oracle: " << (prime ? "prime" : "composite") << '\n';
    } else {
        Json j{{"n", n}, {"method", "fib-sum-explore"}, {"direct_residue", to_json(direct)}};
        j["fast_residue"] = fast ? to_json(*fast) : Json(nullptr);
        j["oracle_says_prime"] = prime;
        emit(out, j);
    }
    return kOk;
}

// scan -------------------------------------------------------------------

struct ScanArgs {
    std::string method, from, to;
    unsigned workers = 0;
    bool fail_fast = false;
};

int do_scan(const ScanArgs& a, const Globals& g, std::ostream& out) {
    const auto method = parse_scan_method(a.method);
    if (!method) throw UsageError("unknown scan method '" + a.method + "'");
    const Index from = to_index(a.from, "--from");
    const Index to = to_index(a.to, "--to");
    if (from > to) throw UsageError("--from must not exceed --to");

    ScanOptions options;
    options.workers = resolve_worker_count(a.workers > 0 ? std::optional<unsigned>(a.workers) : std::nullopt);
    options.fail_fast = a.fail_fast;
    const ScanReport report = run_scan(*method, from, to, options);

    if (g.pretty) {
        out << std::left << std::setw(12) << "method" << to_string(report.method) << '\n'
            << std::setw(12) << "range" << report.from << ".." << report.to << '\n'
            << std::setw(12) << "checked" << report.checked << '\n'
            << std::setw(12) << "skipped" << report.skipped.size() << '\n'
            << std::setw(12) << "mismatches" << report.mismatches.size() << '\n'
            << std::setw(12) << "workers" << report.workers << '\n';
        if (!g.no_timing) {
            out << std::setw(12) << "wall time"
                << std::chrono::duration_cast<std::chrono::milliseconds>(report.wall_time).count() << " ms\n";
        }
        for (const auto& m : report.mismatches) out << "  n=" << std::setw(8) << m.n << m.detail << '\n';
    } else {
        emit(out, to_json(report, !g.no_timing));
    }
    return report.mismatches.empty() ? kOk : kMismatch;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lucas-sequence congruences and sum-based primality criteria"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--pretty", g.pretty, "Human-readable output instead of JSON lines");
    app.add_flag("--no-timing", g.no_timing, "Omit timing fields");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate U_n (and optionally V_n)");
    eval_cmd->fallthrough();
    eval_cmd->add_option("-p", eval.p, "P coefficient")->required();
    eval_cmd->add_option("-q", eval.q, "Q coefficient")->required();
    eval_cmd->add_option("-n", eval.n, "Index")->required();
    eval_cmd->add_option("--mod", eval.modulus, "Reduce modulo m > 1");
    eval_cmd->add_flag("--v", eval.with_v, "Also print V_n");

    CongruenceArgs cong;
    auto* cong_cmd = app.add_subcommand("congruence", "Check one congruence instance");
    cong_cmd->fallthrough();
    cong_cmd->add_option("--family", cong.family,
                         "lemma1, lemma2, cor6, cor7, shift, main, fib19, fib20, fib21, mersenne22")
        ->required();
    cong_cmd->add_option("-p", cong.p, "P coefficient");
    cong_cmd->add_option("-q", cong.q, "Q coefficient");
    cong_cmd->add_option("-k", cong.k, "k");
    cong_cmd->add_option("-n", cong.n, "n");
    cong_cmd->add_option("-r", cong.r, "Shift r (shift family)");

    PrimetestArgs prime;
    auto* prime_cmd = app.add_subcommand("primetest", "Evaluate a primality criterion against the oracle");
    prime_cmd->fallthrough();
    prime_cmd->add_option("--method", prime.method,
                          "mersenne-sum, mersenne-sum-direct, fib-sum, fib-sum-direct, divisor-sum, oracle")
        ->required();
    prime_cmd->add_option("-n", prime.n, "n")->required();

    std::string explore_n;
    auto* explore_cmd = app.add_subcommand("explore", "Report Fibonacci sum residues for any n >= 3, no verdict");
    explore_cmd->fallthrough();
    explore_cmd->add_option("-n", explore_n, "n")->required();

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Parallel agreement sweep over an index range");
    scan_cmd->fallthrough();
    scan_cmd->add_option("--method", scan.method,
                         "mersenne-sum, mersenne-sum-direct, fib-sum, fib-sum-direct, remark, divisor-sum, "
                         "congruence-grid, identity-grid, apparition, primitive-divisor")
        ->required();
    scan_cmd->add_option("--from", scan.from, "First index")->required();
    scan_cmd->add_option("--to", scan.to, "Last index")->required();
    scan_cmd->add_option("--workers", scan.workers, "Worker threads (default: LUCAS_WORKERS or all cores)");
    scan_cmd->add_flag("--fail-fast", scan.fail_fast, "Stop at the first mismatch");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "UsageError", e.what());
        return kUsage;
    }

    try {
        if (*eval_cmd) return do_eval(eval, g, out);
        if (*cong_cmd) return do_congruence(cong, g, out);
        if (*prime_cmd) return do_primetest(prime, g, out);
        if (*explore_cmd) return do_explore(explore_n, g, out);
        if (*scan_cmd) return do_scan(scan, g, out);
    } catch (const UsageError& e) {
        emit_error(err, "UsageError", e.what());
        return kUsage;
    } catch (const LucasError& e) {
        const bool math = e.code() == ErrorCode::InternalInvariantViolation || e.code() == ErrorCode::InexactDivision;
        emit_error(err, std::string(to_string(e.code())), e.what());
        return math ? kMismatch : kUsage;
    }
    return kUsage;
}

}  // namespace lucas::cli
