#include "interlacing/interlace.hpp"

#include "interlacing/errors.hpp"
#include "interlacing/random.hpp"

#include <algorithm>

namespace interlacing {

namespace {

std::vector<std::size_t> expand_with_multiplicity(const RootIntervals& roots) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roots.intervals.size(); ++i) {
        for (int m = 0; m < roots.intervals[i].multiplicity; ++m) out.push_back(i);
    }
    return out;
}

std::string label(const ChainEntry& e) { return std::string(1, e.source == 'f' ? 'r' : 's') + "_" + std::to_string(e.root_index); }

}  // namespace

int compare_roots(RootInterval a, const Polynomial& pa, RootInterval b, const Polynomial& pb) {
    bool equality_checked = false;
    while (true) {
        if (a.hi <= b.lo) return -1;
        if (b.hi <= a.lo) return 1;
        if (!equality_checked) {
            equality_checked = true;
            const Polynomial shared = poly_gcd(pa, pb);
            if (!shared.is_constant()) {
                // Endpoints of a and b are non-roots of pa and pb respectively,
                // hence non-roots of their gcd.
                const Rational lo = std::max(a.lo, b.lo);
                const Rational hi = std::min(a.hi, b.hi);
                if (count_roots_in(build_sturm(shared), lo, hi) > 0) return 0;
            }
        }
        bisect_once(a, pa);
        bisect_once(b, pb);
    }
}

InterlaceReport interlaces_by_roots(const RootIntervals& roots_f, const RootIntervals& roots_g, ChainMode mode) {
    InterlaceReport report;
    report.mode = mode;
    report.f_leading_sign = sgn(roots_f.source.leading());
    report.g_leading_sign = sgn(roots_g.source.leading());
    const auto fs = expand_with_multiplicity(roots_f);
    const auto gs = expand_with_multiplicity(roots_g);
    report.f_root_count = fs.size();
    report.g_root_count = gs.size();
    if (fs.empty() || gs.size() + 1 != fs.size()) {
        report.verdict = Verdict::DegreeMismatch;
        return report;
    }

    std::vector<ChainEntry> chain;
    chain.reserve(fs.size() + gs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
        chain.push_back({'f', k + 1, fs[k]});
        if (k < gs.size()) chain.push_back({'g', k + 1, gs[k]});
    }

    const auto interval_of = [&](const ChainEntry& e) -> const RootInterval& {
        return e.source == 'f' ? roots_f.intervals[e.interval_index] : roots_g.intervals[e.interval_index];
    };
    const auto poly_of = [&](const ChainEntry& e) -> const Polynomial& {
        return e.source == 'f' ? roots_f.squarefree : roots_g.squarefree;
    };

    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const ChainEntry& left = chain[i];
        const ChainEntry& right = chain[i + 1];
        const int cmp = compare_roots(interval_of(left), poly_of(left), interval_of(right), poly_of(right));
        const bool ok = mode == ChainMode::Weak ? cmp <= 0 : cmp < 0;
        if (!ok) {
            report.verdict = Verdict::DoesNotInterlace;
            report.failure_witness = FailureWitness{i, label(left), label(right), cmp == 0};
            return report;
        }
    }
    report.verdict = Verdict::Interlaces;
    report.chain_certificate = std::move(chain);
    return report;
}

InterlaceReport interlaces_exact(const Polynomial& f, const Polynomial& g, ChainMode mode) {
    if (f.is_zero() || g.is_zero()) throw InvalidInput("interlacing is undefined for the zero polynomial");
    InterlaceReport report;
    report.mode = mode;
    report.f_leading_sign = sgn(f.leading());
    report.g_leading_sign = sgn(g.leading());
    report.f_root_count = static_cast<std::size_t>(f.degree());
    report.g_root_count = static_cast<std::size_t>(g.degree());
    if (f.degree() != g.degree() + 1) {
        report.verdict = Verdict::DegreeMismatch;
        return report;
    }
    report.f_real_rooted = is_real_rooted(f);
    report.g_real_rooted = is_real_rooted(g);
    if (!report.f_real_rooted || !report.g_real_rooted) {
        report.verdict = Verdict::NotRealRooted;
        return report;
    }
    return interlaces_by_roots(isolate_roots(f), isolate_roots(g), mode);
}

std::vector<Rational> default_alphas(std::size_t random_count, std::uint64_t seed) {
    std::vector<Rational> alphas{Rational(0), Rational(1, 2), Rational(-1, 2)};
    Rational power = 1;
    for (int k = 0; k <= 10; ++k) {
        alphas.push_back(power);
        alphas.push_back(-power);
        power *= 2;
    }
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) alphas.push_back(rng.rational(10000));
    return alphas;
}

namespace {

void check_pencil_degrees(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree() + 1) {
        throw InvalidInput("pencil requires deg f = deg g + 1, got " + std::to_string(f.degree()) + " and " +
                           std::to_string(g.degree()));
    }
}

PencilReport assemble(const Polynomial& f, const Polynomial& g, const std::vector<Rational>& alphas,
                      const std::vector<char>& real) {
    PencilReport report;
    report.alphas_tested = alphas;
    report.opposite_leading_signs = sgn(f.leading()) * sgn(g.leading()) < 0;
    for (std::size_t i = 0; i < real.size(); ++i) {
        if (real[i]) continue;
        ++report.failing_count;
        if (!report.witness_index) {
            report.witness_index = i;
            report.witness = alphas[i];
        }
    }
    report.all_real = report.failing_count == 0;
    return report;
}

}  // namespace

PencilReport pencil_scan(const Polynomial& f, const Polynomial& g, const std::vector<Rational>& alphas) {
    check_pencil_degrees(f, g);
    std::vector<char> real(alphas.size(), 1);
    const auto count = static_cast<std::ptrdiff_t>(alphas.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        real[idx] = is_real_rooted(lin_comb(f, g, alphas[idx])) ? 1 : 0;
    }
    return assemble(f, g, alphas, real);
}

PencilReport pencil_scan_serial(const Polynomial& f, const Polynomial& g, const std::vector<Rational>& alphas) {
    check_pencil_degrees(f, g);
    std::vector<char> real(alphas.size(), 1);
    for (std::size_t i = 0; i < alphas.size(); ++i) real[i] = is_real_rooted(lin_comb(f, g, alphas[i])) ? 1 : 0;
    return assemble(f, g, alphas, real);
}

CrosscheckReport hko_crosscheck(const Polynomial& f, const Polynomial& g, const std::vector<Rational>& alphas) {
    CrosscheckReport out;
    out.interlace = interlaces_exact(f, g);
    out.pencil = pencil_scan(f, g, alphas);
    const bool interlaces = out.interlace.verdict == Verdict::Interlaces;
    if (interlaces && !out.pencil.all_real) {
        out.verdict = Consistency::Inconsistent;
        out.details = "roots interlace but f + alpha g is not real-rooted at alpha = " + to_string(*out.pencil.witness);
    } else if (!interlaces && out.pencil.all_real) {
        out.verdict = Consistency::ConsistentUnfalsified;
        out.details = "verdict " + to_string(out.interlace.verdict) + "; no sampled alpha exposes a non-real pencil";
    } else if (interlaces) {
        out.details = "roots interlace; every sampled pencil is real-rooted";
    } else {
        out.details = "verdict " + to_string(out.interlace.verdict) + "; witness alpha = " + to_string(*out.pencil.witness);
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Interlaces: return "Interlaces";
        case Verdict::DoesNotInterlace: return "DoesNotInterlace";
        case Verdict::DegreeMismatch: return "DegreeMismatch";
        case Verdict::NotRealRooted: return "NotRealRooted";
    }
    return "?";
}

std::string to_string(Consistency c) {
    switch (c) {
        case Consistency::Consistent: return "Consistent";
        case Consistency::ConsistentUnfalsified: return "ConsistentUnfalsified";
        case Consistency::Inconsistent: return "Inconsistent";
    }
    return "?";
}

}  // namespace interlacing
