#pragma once

#include "interlacing/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace interlacing {

/// Sturm sequence p0 = squarefree part, p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i),
/// ending at a nonzero constant.
struct SturmChain {
    std::vector<Polynomial> chain;

    const Polynomial& base() const { return chain.front(); }
    /// Sign variations of the chain evaluated at t (zeros skipped).
    int variations_at(const Rational& t) const;
};

/// Open interval (lo, hi) holding exactly one distinct root of the source
/// polynomial; `multiplicity` is that root's multiplicity in the source.
/// Endpoints are never roots.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;

    Rational width() const { return hi - lo; }
};

/// Ordered, pairwise disjoint isolating intervals for the real roots of
/// `source`. `squarefree` is kept so intervals can be refined and compared
/// exactly later on.
struct RootIntervals {
    Polynomial source;
    Polynomial squarefree;
    std::vector<RootInterval> intervals;

    std::size_t distinct_count() const { return intervals.size(); }
    /// Roots counted with multiplicity.
    int total_multiplicity() const;
};

SturmChain build_sturm(const Polynomial& p);

/// Distinct real roots of the chain's base polynomial in (lo, hi].
/// Requires lo < hi and neither endpoint a root (throws EndpointIsRoot;
/// use count_roots_nudged to move the endpoints automatically).
int count_roots_in(const SturmChain& chain, const Rational& lo, const Rational& hi);

/// Like count_roots_in, but an endpoint that hits a root is pushed outward
/// by half its distance to the next power of two beyond the root bound,
/// repeatedly, until it is not a root. The returned count refers to the
/// adjusted interval, which is reported back through lo/hi.
int count_roots_nudged(const SturmChain& chain, Rational& lo, Rational& hi);

/// 1 + max |c_i / c_deg|. Every complex root lies strictly inside (-M, M).
Rational cauchy_bound(const Polynomial& p);

/// True iff every complex root of p is real (multiplicity respected).
bool is_real_rooted(const Polynomial& p);

RootIntervals isolate_roots(const Polynomial& p);

/// Bisects every interval wider than `width` until it is not.
RootIntervals refine_to(RootIntervals roots, const Rational& width);

/// Halves one isolating interval of the squarefree polynomial in place.
/// If the midpoint is itself the root, the interval shrinks symmetrically
/// around it instead.
void bisect_once(RootInterval& interval, const Polynomial& squarefree);

}  // namespace interlacing
