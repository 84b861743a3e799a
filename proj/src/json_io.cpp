#include "interlacing/json_io.hpp"

#include "interlacing/errors.hpp"

#include <string>

namespace interlacing {

namespace {

Rational rational_field(const Json& j, const std::string& where) {
    if (!j.is_string()) throw InvalidInput(where + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("polynomial: expected an array of coefficient strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        coeffs.push_back(rational_field(j[i], "polynomial coefficient " + std::to_string(i)));
    }
    return Polynomial(std::move(coeffs));
}

Json to_json(const RootIntervals& roots) {
    Json out = Json::array();
    for (const auto& r : roots.intervals) {
        out.push_back({{"lo", to_string(r.lo)}, {"hi", to_string(r.hi)}, {"mult", r.multiplicity}});
    }
    return out;
}

RootIntervals root_intervals_from_json(const Json& j, const Polynomial& source) {
    if (!j.is_array()) throw InvalidInput("root intervals: expected an array");
    RootIntervals out;
    out.source = source;
    out.squarefree = squarefree_part(source);
    const SturmChain chain = build_sturm(source);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "root interval " + std::to_string(i);
        RootInterval r;
        r.lo = rational_field(member(j[i], "lo", where), where + ".lo");
        r.hi = rational_field(member(j[i], "hi", where), where + ".hi");
        const Json& mult = member(j[i], "mult", where);
        if (!mult.is_number_integer() || mult.get<int>() < 1) throw InvalidInput(where + ".mult: expected integer >= 1");
        r.multiplicity = mult.get<int>();
        if (!out.intervals.empty() && r.lo < out.intervals.back().hi) {
            throw InvalidInput(where + ": overlaps or precedes the previous interval");
        }
        try {
            if (count_roots_in(chain, r.lo, r.hi) != 1) throw InvalidInput(where + ": does not isolate exactly one root");
        } catch (const EndpointIsRoot&) {
            throw InvalidInput(where + ": endpoint is a root");
        }
        out.intervals.push_back(std::move(r));
    }
    if (out.total_multiplicity() > source.degree()) {
        throw InvalidInput("root intervals: multiplicities exceed the degree");
    }
    return out;
}

Json to_json(const HermitianMatrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(Json::array({to_string(m(i, j).re), to_string(m(i, j).im)}));
        entries.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"entries", std::move(entries)}};
}

HermitianMatrix matrix_from_json(const Json& j) {
    const Json& nfield = member(j, "n", "matrix");
    if (!nfield.is_number_unsigned() || nfield.get<std::size_t>() == 0) {
        throw InvalidInput("matrix.n: expected a positive integer");
    }
    const auto n = nfield.get<std::size_t>();
    const Json& entries = member(j, "entries", "matrix");
    if (!entries.is_array() || entries.size() != n) {
        throw InvalidInput("matrix.entries: expected " + std::to_string(n) + " rows");
    }
    SquareMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != n) {
            throw InvalidInput("matrix.entries[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::string where = "matrix.entries[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            const Json& cell = row[c];
            if (!cell.is_array() || cell.size() != 2) throw InvalidInput(where + ": expected [\"re\", \"im\"]");
            m(r, c) = GaussianRational(rational_field(cell[0], where + ".re"), rational_field(cell[1], where + ".im"));
        }
    }
    if (auto bad = hermitian_violation(m)) {
        throw InvalidInput("matrix is not Hermitian: entry (" + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second) + ") is not the conjugate of entry (" +
                           std::to_string(bad->second) + ", " + std::to_string(bad->first) + ")");
    }
    return HermitianMatrix(std::move(m));
}

Json pair_to_json(const Polynomial& f, const Polynomial& g) { return {{"f", to_json(f)}, {"g", to_json(g)}}; }

std::pair<Polynomial, Polynomial> pair_from_json(const Json& j) {
    Polynomial f;
    Polynomial g;
    try {
        f = polynomial_from_json(member(j, "f", "pair"));
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("pair.f: ") + e.what());
    }
    try {
        g = polynomial_from_json(member(j, "g", "pair"));
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("pair.g: ") + e.what());
    }
    return {std::move(f), std::move(g)};
}

Json to_json(const InterlaceReport& r) {
    Json out{{"verdict", to_string(r.verdict)},
             {"mode", r.mode == ChainMode::Weak ? "weak" : "strict"},
             {"f_root_count", r.f_root_count},
             {"g_root_count", r.g_root_count},
             {"f_real_rooted", r.f_real_rooted},
             {"g_real_rooted", r.g_real_rooted},
             {"f_leading_sign", r.f_leading_sign},
             {"g_leading_sign", r.g_leading_sign}};
    if (!r.chain_certificate.empty()) {
        Json chain = Json::array();
        for (const auto& e : r.chain_certificate) {
            chain.push_back({{"source", std::string(1, e.source)},
                             {"root_index", e.root_index},
                             {"interval_index", e.interval_index}});
        }
        out["chain_certificate"] = std::move(chain);
    }
    if (r.failure_witness) {
        const auto& w = *r.failure_witness;
        out["failure_witness"] = {{"position", w.position}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"equal", w.equal}};
    }
    return out;
}

Json to_json(const PencilReport& r) {
    Json alphas = Json::array();
    for (const auto& a : r.alphas_tested) alphas.push_back(to_string(a));
    Json out{{"alphas_tested", std::move(alphas)},
             {"all_real", r.all_real},
             {"failing_count", r.failing_count},
             {"opposite_leading_signs", r.opposite_leading_signs},
             {"witness", nullptr}};
    if (r.witness) {
        out["witness"] = to_string(*r.witness);
        out["witness_index"] = *r.witness_index;
    }
    return out;
}

Json to_json(const CrosscheckReport& r) {
    return {{"verdict", to_string(r.verdict)},
            {"details", r.details},
            {"interlace", to_json(r.interlace)},
            {"pencil", to_json(r.pencil)}};
}

Json to_json(const IdentityReport& r) {
    return {{"alpha", to_string(r.alpha)},
            {"convention", "char_poly(A_alpha) = char_poly(A) - alpha * char_poly(B), char_poly(M) = det(xI - M)"},
            {"lhs_coeffs", to_json(r.lhs_coeffs)},
            {"rhs_sum_coeffs", to_json(r.rhs_sum_coeffs)},
            {"exact_match", r.exact_match}};
}

Json to_json(const CauchyReport& r) {
    return {{"deleted_index", r.deleted_index},
            {"eigen_intervals_A", to_json(r.eigen_intervals_A)},
            {"eigen_intervals_B", to_json(r.eigen_intervals_B)},
            {"interlace", to_json(r.interlace)}};
}

}  // namespace interlacing
