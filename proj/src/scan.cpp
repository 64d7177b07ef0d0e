#include "lucas/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "lucas/congruence.hpp"
#include "lucas/errors.hpp"
#include "lucas/primality.hpp"
#include "lucas/seq_core.hpp"

namespace lucas {

namespace {

constexpr std::array<std::pair<ScanMethod, std::string_view>, 10> kMethodNames{{
    {ScanMethod::MersenneSum, "mersenne-sum"},
    {ScanMethod::MersenneSumDirect, "mersenne-sum-direct"},
    {ScanMethod::FibSum, "fib-sum"},
    {ScanMethod::FibSumDirect, "fib-sum-direct"},
    {ScanMethod::Remark, "remark"},
    {ScanMethod::DivisorSum, "divisor-sum"},
    {ScanMethod::CongruenceGrid, "congruence-grid"},
    {ScanMethod::IdentityGrid, "identity-grid"},
    {ScanMethod::Apparition, "apparition"},
    {ScanMethod::PrimitiveDivisor, "primitive-divisor"},
}};

using Outcome = IndexOutcome;

Outcome skip() { return {Outcome::Kind::Skip, {}}; }
Outcome ok() { return {Outcome::Kind::Ok, {}}; }
Outcome failure(std::string detail) { return {Outcome::Kind::Fail, std::move(detail)}; }

std::string yes_no(bool b) { return b ? "prime" : "composite"; }

std::vector<LucasParams> grid_params() {
    std::vector<LucasParams> out;
    for (int p = kGridPMin; p <= kGridPMax; ++p) {
        for (int q = kGridQMin; q <= kGridQMax; ++q) {
            if (std::gcd(p, q) == 1) out.push_back(make_params(p, q));
        }
    }
    return out;
}

std::string label(const LucasParams& params) {
    return "(P,Q)=(" + params.p().to_string() + "," + params.q().to_string() + ")";
}

Outcome verdict_outcome(const PrimalityVerdict& v) {
    if (v.agree) return ok();
    return failure("criterion says " + yes_no(v.criterion_says_prime) + ", oracle says " +
                   yes_no(v.oracle_says_prime) + ", residue " + v.sum_residue.to_string());
}

bool in_fib_criterion_domain(Index n) { return n >= 5 && n % 4 == 1 && n != 9 && n != 25; }

Outcome check_index(ScanMethod method, Index n) {
    switch (method) {
        case ScanMethod::MersenneSum:
            if (n < 2) return skip();
            return verdict_outcome(mersenne_primality_test(n, SumPath::Fast));
        case ScanMethod::MersenneSumDirect: {
            if (n < 2) return skip();
            auto v = mersenne_primality_test(n, SumPath::Direct);
            auto fast = mersenne_sum_residue_fast(n);
            if (fast != v.sum_residue) {
                return failure("direct " + v.sum_residue.to_string() + " != fast " + fast.to_string());
            }
            return verdict_outcome(v);
        }
        case ScanMethod::FibSum:
            if (!in_fib_criterion_domain(n)) return skip();
            return verdict_outcome(fibonacci_primality_test(n, SumPath::Fast));
        case ScanMethod::FibSumDirect: {
            if (!in_fib_criterion_domain(n)) return skip();
            auto v = fibonacci_primality_test(n, SumPath::Direct);
            auto fast = fibonacci_sum_residue_fast(n);
            if (fast != v.sum_residue) {
                return failure("direct " + v.sum_residue.to_string() + " != fast " + fast.to_string());
            }
            return verdict_outcome(v);
        }
        case ScanMethod::Remark:
            if (n < 3 || n % 4 != 3) return skip();
            if (remark_check(n)) return ok();
            return failure("sum residue " + fibonacci_sum_residue_direct(n).to_string());
        case ScanMethod::DivisorSum: {
            if (n < 2) return skip();
            const auto b = divisor_sum_breakdown(n);
            const bool prime = is_prime_oracle(static_cast<std::uint64_t>(n));
            if (b.is_integer != prime) {
                return failure("total " + b.total.to_string() + " but n is " + yes_no(prime));
            }
            if (prime && !(b.total == Rational(Integer(n - 1), 1))) {
                return failure("prime n with total " + b.total.to_string());
            }
            return ok();
        }
        case ScanMethod::CongruenceGrid: {
            if (n == 0) return skip();
            auto r = congruence_grid_for_k(n);
            if (r.failures.empty()) return ok();
            return failure(r.failures.front() + (r.failures.size() > 1 ? " (+" + std::to_string(r.failures.size() - 1) + " more)" : ""));
        }
        case ScanMethod::IdentityGrid: {
            auto r = identity_grid_for_m(n);
            if (r.failures.empty()) return ok();
            return failure(r.failures.front());
        }
        case ScanMethod::Apparition: {
            if (n < 3 || n == 5 || !is_prime_oracle(static_cast<std::uint64_t>(n))) return skip();
            const Index rank = rank_of_apparition_fib(n);
            const auto target = static_cast<std::int64_t>(n) - legendre_symbol(5, n);
            if (target % static_cast<std::int64_t>(rank) == 0) return ok();
            return failure("rank " + std::to_string(rank) + " does not divide " + std::to_string(target));
        }
        case ScanMethod::PrimitiveDivisor: {
            if (n == 0) return skip();
            const bool expect_none = n == 1 || n == 2 || n == 6 || n == 12;
            const auto p = primitive_prime_divisor(fibonacci_params(), n);
            if (p.has_value() != expect_none) return ok();
            return failure(p ? "unexpected primitive divisor " + p->to_string() : "no primitive divisor found");
        }
    }
    return skip();
}

}  // namespace

std::string_view to_string(ScanMethod method) {
    for (const auto& [m, name] : kMethodNames) {
        if (m == method) return name;
    }
    return "unknown";
}

std::optional<ScanMethod> parse_scan_method(std::string_view name) {
    for (const auto& [m, n] : kMethodNames) {
        if (n == name) return m;
    }
    return std::nullopt;
}

GridResult congruence_grid_for_k(Index k) {
    GridResult out;
    auto record = [&](const CongruenceReport& rep, const std::string& where) {
        if (is_trivial(rep.lhs)) return;
        ++out.compared;
        if (!rep.holds) {
            out.failures.push_back(where + " " + std::string(to_string(rep.family)) + ": lhs " +
                                   to_string(rep.lhs) + ", rhs " + to_string(rep.rhs));
        }
    };
    auto agree = [&](const ModResult& a, const ModResult& b, const std::string& what) {
        if (!(a == b)) out.failures.push_back(what + ": " + to_string(a) + " vs " + to_string(b));
    };

    const LucasParams fib = fibonacci_params();
    const LucasParams mersenne = mersenne_params();
    for (const auto& params : grid_params()) {
        for (Index n = 0; n <= kGridNMax; ++n) {
            const std::string where = label(params) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
            try {
                for (Family f : {Family::Lemma1, Family::Lemma2, Family::Cor6, Family::Cor7, Family::Main}) {
                    record(check_congruence(f, params, k, n), where);
                }
                for (Index r = 0; r <= kGridRMax; ++r) {
                    record(check_congruence(Family::Shift, params, k, n, r), where + " r=" + std::to_string(r));
                }
                agree(lemma1_rhs(params, k, n), corollary_ratio_rhs(params, k, n), where + " lemma1 vs cor6");
                agree(lemma2_rhs(params, k, n), corollary_shift_rhs(params, k, n), where + " lemma2 vs cor7");
                agree(general_shift_rhs(params, k, n, 1), corollary_shift_rhs(params, k, n), where + " shift(r=1) vs cor7");

                if (params == fib) {
                    record(check_congruence(Family::Fib19, params, k, n), where);
                    record(check_congruence(Family::Fib20, params, k, n), where);
                    agree(fibonacci_rhs_family(k, n, FibFamily::NextTerm), lemma2_rhs(fib, k, n), where + " fib19 vs lemma2");
                    agree(fibonacci_rhs_family(k, n, FibFamily::RatioModK), lemma1_rhs(fib, k, n), where + " fib20 vs lemma1");
                    if (n >= 1) {
                        record(check_congruence(Family::Fib21, params, k, n), where);
                        agree(fibonacci_rhs_family(k, n, FibFamily::RatioModN), main_theorem_rhs(fib, n, k).residue,
                              where + " fib21 vs main");
                    }
                }
                if (params == mersenne && n >= 2) {
                    record(check_congruence(Family::Mersenne22, params, k, n), where);
                    agree(mersenne_ratio_rhs(n, k), main_theorem_rhs(mersenne, n, k).residue, where + " mersenne22 vs main");
                }
            } catch (const LucasError& e) {
                out.failures.push_back(where + ": " + e.what());
            }
        }
    }
    return out;
}

GridResult identity_grid_for_m(Index m) {
    GridResult out;
    for (const auto& params : grid_params()) {
        const std::string where = label(params) + " m=" + std::to_string(m);
        for (Index n = 0; n <= m; ++n) {
            ++out.compared;
            if (!check_addition_identity(params, m, n)) out.failures.push_back(where + " n=" + std::to_string(n) + " addition");
        }
        out.compared += 2;
        if (!check_v_from_u(params, m)) out.failures.push_back(where + " V from U");
        if (!check_norm_identity(params, m)) out.failures.push_back(where + " norm");
        for (Index y = 1; m >= 1 && y <= m; ++y) {
            ++out.compared;
            if (!check_strong_divisibility(params, m, y)) out.failures.push_back(where + " y=" + std::to_string(y) + " gcd");
        }
    }
    return out;
}

unsigned resolve_worker_count(std::optional<unsigned> requested) {
    if (requested && *requested > 0) return *requested;
    if (const char* env = std::getenv("LUCAS_WORKERS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

ScanReport run_scan(ScanMethod method, Index from, Index to, const ScanOptions& options) {
    return run_indexed_scan(method, from, to, options, [method](Index n) { return check_index(method, n); });
}

ScanReport run_indexed_scan(ScanMethod method, Index from, Index to, const ScanOptions& options,
                            const IndexCheck& check) {
    if (from > to) fail(ErrorCode::InvalidArgument, "scan needs from <= to");
    const auto start = std::chrono::steady_clock::now();
    const Index count = to - from + 1;
    const unsigned workers = std::max(1U, options.workers);

    std::vector<std::optional<Outcome>> outcomes(count);
    std::atomic<Index> next{0};
    std::atomic<bool> stop{false};

    auto work = [&] {
        for (Index i = next.fetch_add(1); i < count && !stop.load(); i = next.fetch_add(1)) {
            Outcome o;
            try {
                o = check(from + i);
            } catch (const LucasError& e) {
                o = failure(e.what());
            }
            if (o.kind == Outcome::Kind::Fail && options.fail_fast) stop.store(true);
            outcomes[i] = std::move(o);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }

    ScanReport report;
    report.from = from;
    report.to = to;
    report.method = method;
    report.workers = workers;
    for (Index i = 0; i < count; ++i) {
        if (!outcomes[i]) {
            report.stopped_early = true;
            continue;
        }
        switch (outcomes[i]->kind) {
            case Outcome::Kind::Skip: report.skipped.push_back(from + i); break;
            case Outcome::Kind::Ok: ++report.checked; break;
            case Outcome::Kind::Fail:
                ++report.checked;
                report.mismatches.push_back({from + i, std::move(outcomes[i]->detail)});
                break;
        }
    }
    report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace lucas
