#pragma once

#include "interlacing/polynomial.hpp"
#include "interlacing/real_roots.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace interlacing {

enum class Verdict {
    Interlaces,
    DoesNotInterlace,
    DegreeMismatch,
    /// f or g has a non-real root, so the chain is not even defined.
    NotRealRooted,
};

/// Weak follows the printed chain (every comparison is <=); Strict demands <.
enum class ChainMode { Weak, Strict };

/// One slot of the merged chain r_1, s_1, r_2, ..., s_{n-1}, r_n.
struct ChainEntry {
    char source = 'f';               ///< 'f' for r_k, 'g' for s_k
    std::size_t root_index = 0;      ///< k, 1-based
    std::size_t interval_index = 0;  ///< index into the source RootIntervals
};

/// chain[position] > chain[position + 1] (or == in strict mode).
struct FailureWitness {
    std::size_t position = 0;
    std::string lhs;  ///< e.g. "s_1"
    std::string rhs;  ///< e.g. "r_2"
    bool equal = false;
};

struct InterlaceReport {
    Verdict verdict = Verdict::DegreeMismatch;
    ChainMode mode = ChainMode::Weak;
    std::vector<ChainEntry> chain_certificate;
    std::optional<FailureWitness> failure_witness;
    std::size_t f_root_count = 0;  ///< with multiplicity
    std::size_t g_root_count = 0;
    bool f_real_rooted = true;
    bool g_real_rooted = true;
    int f_leading_sign = 0;
    int g_leading_sign = 0;
};

struct PencilReport {
    std::vector<Rational> alphas_tested;
    std::optional<Rational> witness;
    std::optional<std::size_t> witness_index;
    std::size_t failing_count = 0;
    bool all_real = true;
    /// lc(f) and lc(g) have opposite signs. Recorded, not interpreted.
    bool opposite_leading_signs = false;
};

enum class Consistency {
    Consistent,
    /// DoesNotInterlace, but no sampled alpha exposed a non-real pencil.
    ConsistentUnfalsified,
    Inconsistent,
};

struct CrosscheckReport {
    Consistency verdict = Consistency::Consistent;
    std::string details;
    InterlaceReport interlace;
    PencilReport pencil;
};

/// Exact three-way comparison of the root of `pa` isolated by `a` against
/// the root of `pb` isolated by `b`. Equality is certified through
/// gcd(pa, pb); otherwise both intervals are bisected until disjoint.
int compare_roots(RootInterval a, const Polynomial& pa, RootInterval b, const Polynomial& pb);

InterlaceReport interlaces_by_roots(const RootIntervals& roots_f, const RootIntervals& roots_g,
                                    ChainMode mode = ChainMode::Weak);

/// Requires nonzero f and g (throws InvalidInput). Degree mismatch and
/// non-real-rootedness are verdicts, not errors.
InterlaceReport interlaces_exact(const Polynomial& f, const Polynomial& g,
                                 ChainMode mode = ChainMode::Weak);

inline constexpr std::uint64_t kDefaultAlphaSeed = 0x1A7E41ACEULL;

/// {0, +-1/2, +-2^0, ..., +-2^10} followed by `random_count` seeded rationals
/// with numerator in [-10^4, 10^4] and denominator in [1, 10^4].
std::vector<Rational> default_alphas(std::size_t random_count = 64,
                                     std::uint64_t seed = kDefaultAlphaSeed);

/// Tests is_real_rooted(f + alpha g) for every alpha, OpenMP-parallel.
/// The witness is the failing alpha with the smallest input index.
/// Throws InvalidInput unless deg f = deg g + 1.
PencilReport pencil_scan(const Polynomial& f, const Polynomial& g, const std::vector<Rational>& alphas);

/// Single-threaded reference for pencil_scan; must produce an identical report.
PencilReport pencil_scan_serial(const Polynomial& f, const Polynomial& g,
                                const std::vector<Rational>& alphas);

CrosscheckReport hko_crosscheck(const Polynomial& f, const Polynomial& g,
                                const std::vector<Rational>& alphas);

std::string to_string(Verdict v);
std::string to_string(Consistency c);

}  // namespace interlacing
