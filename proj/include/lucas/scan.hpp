#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucas/integer.hpp"

namespace lucas {

enum class ScanMethod {
    MersenneSum,        // fast-path Mersenne criterion vs oracle
    MersenneSumDirect,  // direct path vs oracle, and direct == fast
    FibSum,             // fast-path Fibonacci criterion vs oracle (n = 1 mod 4)
    FibSumDirect,       // direct path vs oracle, and direct == fast
    Remark,             // Fibonacci sum vanishes for n = 3 mod 4
    DivisorSum,         // exact divisor sum is an integer iff n prime
    CongruenceGrid,     // index is k; all families over the (P,Q,n,r) grid
    IdentityGrid,       // index is m; addition/V/norm identities and gcd law
    Apparition,         // index is p; rank of apparition divides p - (5/p)
    PrimitiveDivisor,   // index is n; F_n lacks a primitive prime iff n in {1,2,6,12}
};

std::string_view to_string(ScanMethod method);
std::optional<ScanMethod> parse_scan_method(std::string_view name);

struct Mismatch {
    Index n;
    std::string detail;
};

struct ScanReport {
    Index from = 0;
    Index to = 0;
    ScanMethod method = ScanMethod::MersenneSum;
    Index checked = 0;
    std::vector<Index> skipped;      // inputs outside the method's hypotheses
    std::vector<Mismatch> mismatches;
    std::chrono::nanoseconds wall_time{0};
    unsigned workers = 1;
    bool stopped_early = false;       // fail-fast hit a mismatch
};

struct ScanOptions {
    unsigned workers = 1;
    bool fail_fast = false;
};

/// Worker count: the explicit value if given, else LUCAS_WORKERS, else the
/// hardware concurrency (at least 1).
unsigned resolve_worker_count(std::optional<unsigned> requested);

struct IndexOutcome {
    enum class Kind { Skip, Ok, Fail } kind = Kind::Skip;
    std::string detail;
};

using IndexCheck = std::function<IndexOutcome(Index)>;

/// Parallel driver behind run_scan: applies check to every index in
/// [from, to]. A LucasError thrown by check counts as a mismatch.
ScanReport run_indexed_scan(ScanMethod method, Index from, Index to, const ScanOptions& options,
                            const IndexCheck& check);

/// Runs the agreement check for every index in [from, to] across worker
/// threads. Results are ordered by index regardless of completion order.
/// Throws InvalidArgument when from > to.
ScanReport run_scan(ScanMethod method, Index from, Index to, const ScanOptions& options);

// Grid used by CongruenceGrid and IdentityGrid: 1 <= P <= 5, -3 <= Q <= 3,
// gcd(P, Q) = 1.
inline constexpr int kGridPMin = 1;
inline constexpr int kGridPMax = 5;
inline constexpr int kGridQMin = -3;
inline constexpr int kGridQMax = 3;
inline constexpr Index kGridNMax = 12;
inline constexpr Index kGridRMax = 6;

/// Mismatch descriptions for one k of the congruence grid; empty when all hold.
/// Also reports how many nontrivial instances were compared.
struct GridResult {
    std::vector<std::string> failures;
    Index compared = 0;
};
GridResult congruence_grid_for_k(Index k);
GridResult identity_grid_for_m(Index m);

}  // namespace lucas
