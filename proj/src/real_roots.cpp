#include "interlacing/real_roots.hpp"

#include "interlacing/errors.hpp"

#include <algorithm>
#include <numeric>

namespace interlacing {

namespace {

SturmChain chain_of_squarefree(Polynomial p0) {
    SturmChain out;
    out.chain.push_back(std::move(p0));
    if (out.chain.back().is_constant()) return out;
    out.chain.push_back(derivative(out.chain.back()));
    while (!out.chain.back().is_constant()) {
        const auto& a = out.chain[out.chain.size() - 2];
        const auto& b = out.chain.back();
        Polynomial next = -divmod(a, b).second;
        // Squarefree input keeps the remainder sequence nonzero down to a constant.
        if (next.is_zero()) throw InternalInconsistency("Sturm chain hit zero on squarefree input");
        out.chain.push_back(std::move(next));
    }
    return out;
}

/// Picks a point strictly inside (lo, hi) that is not a root of p. The
/// midpoint is preferred; otherwise one of deg(p) + 1 evenly spaced points
/// is guaranteed to miss every root.
Rational split_point(const Polynomial& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (sgn(evaluate(p, mid)) != 0) return mid;
    const long slots = p.degree() + 2;
    for (long j = 1; j < slots; ++j) {
        Rational t = lo + (hi - lo) * Rational(j, slots);
        t.canonicalize();
        if (sgn(evaluate(p, t)) != 0) return t;
    }
    throw InternalInconsistency("no root-free split point found");
}

Rational power_of_two_beyond(const Rational& bound) {
    Rational p = 1;
    while (p <= bound) p *= 2;
    return p;
}

}  // namespace

int SturmChain::variations_at(const Rational& t) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sgn(evaluate(q, t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int RootIntervals::total_multiplicity() const {
    return std::accumulate(intervals.begin(), intervals.end(), 0,
                           [](int acc, const RootInterval& r) { return acc + r.multiplicity; });
}

SturmChain build_sturm(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("Sturm chain of the zero polynomial");
    return chain_of_squarefree(squarefree_part(p));
}

int count_roots_in(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw InvalidInput("count_roots_in requires lo < hi");
    const Polynomial& p0 = chain.base();
    if (sgn(evaluate(p0, lo)) == 0 || sgn(evaluate(p0, hi)) == 0) {
        throw EndpointIsRoot("interval endpoint " + to_string(sgn(evaluate(p0, lo)) == 0 ? lo : hi) +
                             " is a root; nudge the endpoint");
    }
    return chain.variations_at(lo) - chain.variations_at(hi);
}

int count_roots_nudged(const SturmChain& chain, Rational& lo, Rational& hi) {
    if (!(lo < hi)) throw InvalidInput("count_roots_nudged requires lo < hi");
    const Polynomial& p0 = chain.base();
    const Rational limit = power_of_two_beyond(cauchy_bound(p0));
    // Every root lies inside (-limit, limit), so the sequences below converge
    // onto a root-free region and terminate after at most deg(p0) steps each.
    while (sgn(evaluate(p0, lo)) == 0) lo -= (lo + limit) / 2;
    while (sgn(evaluate(p0, hi)) == 0) hi += (limit - hi) / 2;
    return count_roots_in(chain, lo, hi);
}

Rational cauchy_bound(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("root bound of the zero polynomial");
    Rational best = 0;
    const Rational lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rational ratio = abs(p.coeffs()[static_cast<std::size_t>(k)]) / lead;
        if (ratio > best) best = ratio;
    }
    return best + 1;
}

bool is_real_rooted(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("real-rootedness of the zero polynomial");
    const Polynomial sqf = squarefree_part(p);
    if (sqf.degree() == 0) return true;
    const SturmChain chain = chain_of_squarefree(sqf);
    const Rational m = cauchy_bound(sqf);
    return count_roots_in(chain, -m, m) == sqf.degree();
}

RootIntervals isolate_roots(const Polynomial& p) {
    if (p.is_zero()) throw InvalidInput("root isolation of the zero polynomial");
    RootIntervals out;
    out.source = p;
    out.squarefree = squarefree_part(p);
    if (out.squarefree.degree() == 0) return out;

    const SturmChain chain = chain_of_squarefree(out.squarefree);
    const Rational m = cauchy_bound(out.squarefree);

    struct Pending {
        Rational lo, hi;
        int vlo, vhi;
    };
    // Depth-first, right half pushed first so intervals come out ascending.
    std::vector<Pending> stack{{-m, m, chain.variations_at(-m), chain.variations_at(m)}};
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        const int count = cur.vlo - cur.vhi;
        if (count == 0) continue;
        if (count == 1) {
            out.intervals.push_back({cur.lo, cur.hi, 1});
            continue;
        }
        Rational mid = split_point(out.squarefree, cur.lo, cur.hi);
        const int vmid = chain.variations_at(mid);
        stack.push_back({mid, cur.hi, vmid, cur.vhi});
        stack.push_back({cur.lo, std::move(mid), cur.vlo, vmid});
    }

    // Multiplicities from the gcd tower p, gcd(p, p'), gcd(q, q'), ...: a root
    // of multiplicity k survives exactly k - 1 levels.
    Polynomial level = p;
    while (true) {
        level = poly_gcd(level, derivative(level));
        if (level.is_constant()) break;
        const SturmChain tower = build_sturm(level);
        for (auto& r : out.intervals) {
            if (count_roots_in(tower, r.lo, r.hi) > 0) ++r.multiplicity;
        }
    }
    return out;
}

void bisect_once(RootInterval& interval, const Polynomial& squarefree) {
    Rational mid = (interval.lo + interval.hi) / 2;
    const int s_mid = sgn(evaluate(squarefree, mid));
    if (s_mid == 0) {
        const Rational quarter = interval.width() / 4;
        interval.lo = mid - quarter;
        interval.hi = mid + quarter;
        return;
    }
    if (sgn(evaluate(squarefree, interval.lo)) == s_mid) {
        interval.lo = std::move(mid);
    } else {
        interval.hi = std::move(mid);
    }
}

RootIntervals refine_to(RootIntervals roots, const Rational& width) {
    if (sgn(width) <= 0) throw InvalidInput("refinement width must be positive");
    for (auto& r : roots.intervals) {
        while (r.width() > width) bisect_once(r, roots.squarefree);
    }
    return roots;
}

}  // namespace interlacing
