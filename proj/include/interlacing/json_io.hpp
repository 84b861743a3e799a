#pragma once

#include "interlacing/hermitian.hpp"
#include "interlacing/interlace.hpp"
#include "interlacing/polynomial.hpp"
#include "interlacing/real_roots.hpp"

#include <json.hpp>

#include <utility>

namespace interlacing {

using Json = nlohmann::json;

/// ["c0", "c1", ...] ascending degree, each "p" or "p/q".
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// [{"lo": "p/q", "hi": "p/q", "mult": k}, ...]
Json to_json(const RootIntervals& roots);
/// Rebuilds intervals for `source`, checking that each one isolates exactly
/// one root with the stated multiplicity.
RootIntervals root_intervals_from_json(const Json& j, const Polynomial& source);

/// {"n": 3, "entries": [[["re", "im"], ...], ...]}
Json to_json(const HermitianMatrix& m);
/// Diagnostics name the offending field; a symmetry violation names (i, j).
HermitianMatrix matrix_from_json(const Json& j);

/// {"f": [...], "g": [...]}
Json pair_to_json(const Polynomial& f, const Polynomial& g);
std::pair<Polynomial, Polynomial> pair_from_json(const Json& j);

Json to_json(const InterlaceReport& r);
Json to_json(const PencilReport& r);
Json to_json(const CrosscheckReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const CauchyReport& r);

}  // namespace interlacing
