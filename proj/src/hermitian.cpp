#include "interlacing/hermitian.hpp"

#include "interlacing/errors.hpp"

#include <string>

namespace interlacing {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const Rational norm = b.re * b.re + b.im * b.im;
    if (sgn(norm) == 0) throw InvalidInput("division by zero Gaussian rational");
    return {Rational((a.re * b.re + a.im * b.im) / norm), Rational((a.im * b.re - a.re * b.im) / norm)};
}

SquareMatrix SquareMatrix::from_rows(const MatrixRows& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw InvalidInput("matrix is not square: row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

SquareMatrix SquareMatrix::identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

MatrixRows SquareMatrix::rows() const {
    MatrixRows out(n_, std::vector<GaussianRational>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    const std::size_t n = a.size();
    SquareMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) = out(i, j) + aik * b(k, j);
        }
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i; j < m.size(); ++j) {
            if (!(m(i, j) == m(j, i).conj())) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

bool is_hermitian(const SquareMatrix& m) { return !hermitian_violation(m).has_value(); }

bool is_hermitian(const MatrixRows& rows) { return is_hermitian(SquareMatrix::from_rows(rows)); }

HermitianMatrix::HermitianMatrix(SquareMatrix m) : m_(std::move(m)) {
    if (auto bad = hermitian_violation(m_)) {
        throw InvalidInput("matrix is not Hermitian at (" + std::to_string(bad->first) + ", " +
                           std::to_string(bad->second) + ")");
    }
}

GaussianRational det_exact(const SquareMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return GaussianRational(1);

    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).re.get_den_mpz_t());
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).im.get_den_mpz_t());
        }
    }
    SquareMatrix w(n);
    const Rational s(scale);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = {Rational(m(i, j).re * s), Rational(m(i, j).im * s)};
    }

    bool negate = false;
    GaussianRational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && w(p, k).is_zero()) ++p;
            if (p == n) return GaussianRational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            }
            w(i, k) = GaussianRational(0);
        }
        prev = w(k, k);
    }

    GaussianRational det = w(n - 1, n - 1);
    if (negate) det = -det;
    Rational denom = 1;
    for (std::size_t i = 0; i < n; ++i) denom *= s;
    return {Rational(det.re / denom), Rational(det.im / denom)};
}

Polynomial char_poly(const HermitianMatrix& a) {
    const std::size_t n = a.size();
    const SquareMatrix& am = a.matrix();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    std::vector<GaussianRational> c(n + 1);
    c[n] = GaussianRational(1);
    SquareMatrix prod(n);
    for (std::size_t k = 1; k <= n; ++k) {
        SquareMatrix mk = prod;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k + 1];
        prod = am * mk;
        GaussianRational trace(0);
        for (std::size_t i = 0; i < n; ++i) trace = trace + prod(i, i);
        c[n - k] = -trace / GaussianRational(static_cast<long>(k));
    }
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(c[i].im) != 0) {
            throw InternalInconsistency("characteristic polynomial coefficient of x^" + std::to_string(i) +
                                        " has imaginary part " + to_string(c[i].im));
        }
        coeffs[i] = c[i].re;
    }
    return Polynomial(std::move(coeffs));
}

HermitianMatrix principal_submatrix(const HermitianMatrix& a, std::size_t k) {
    const std::size_t n = a.size();
    if (n < 2) throw InvalidInput("principal submatrix needs n >= 2");
    if (k >= n) throw InvalidInput("deleted index " + std::to_string(k) + " out of range for n = " + std::to_string(n));
    SquareMatrix out(n - 1);
    for (std::size_t i = 0, oi = 0; i < n; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, oj = 0; j < n; ++j) {
            if (j == k) continue;
            out(oi, oj++) = a(i, j);
        }
        ++oi;
    }
    return HermitianMatrix(std::move(out));
}

IdentityReport bordered_identity(const HermitianMatrix& a, const Rational& alpha) {
    const std::size_t n = a.size();
    if (n < 2) throw InvalidInput("bordered identity needs n >= 2");
    SquareMatrix shifted = a.matrix();
    shifted(n - 1, n - 1) = shifted(n - 1, n - 1) + GaussianRational(alpha);

    IdentityReport report;
    report.alpha = alpha;
    report.lhs_coeffs = char_poly(HermitianMatrix(std::move(shifted)));
    report.rhs_sum_coeffs = bordered_pencil(a, alpha);
    report.exact_match = report.lhs_coeffs == report.rhs_sum_coeffs;
    return report;
}

Polynomial bordered_pencil(const HermitianMatrix& a, const Rational& alpha) {
    return lin_comb(char_poly(a), char_poly(principal_submatrix(a, a.size() - 1)), -alpha);
}

Rational default_eigen_width() { return Rational(1, 1u << 20); }

RootIntervals eigen_intervals(const HermitianMatrix& a, const Rational& width) {
    RootIntervals roots = refine_to(isolate_roots(char_poly(a)), width);
    if (roots.total_multiplicity() != static_cast<int>(a.size())) {
        throw InternalInconsistency("Hermitian matrix of size " + std::to_string(a.size()) + " has only " +
                                    std::to_string(roots.total_multiplicity()) + " real eigenvalues");
    }
    return roots;
}

CauchyReport cauchy_check(const HermitianMatrix& a, std::size_t k, const Rational& width) {
    CauchyReport report;
    report.deleted_index = k;
    const HermitianMatrix b = principal_submatrix(a, k);
    report.eigen_intervals_A = eigen_intervals(a, width);
    report.eigen_intervals_B = eigen_intervals(b, width);
    report.interlace = interlaces_by_roots(report.eigen_intervals_A, report.eigen_intervals_B);
    if (report.interlace.verdict != Verdict::Interlaces) {
        throw InternalInconsistency("eigenvalues of the principal submatrix (deleted index " + std::to_string(k) +
                                    ") do not interlace: " + to_string(report.interlace.verdict));
    }
    return report;
}

HermitianMatrix random_hermitian(SplitMix64& rng, std::size_t n, std::int64_t bound) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const long re = rng.uniform_int(-bound, bound);
            const long im = i == j ? 0 : rng.uniform_int(-bound, bound);
            m(i, j) = GaussianRational(Rational(re), Rational(im));
            m(j, i) = m(i, j).conj();
        }
    }
    return HermitianMatrix(std::move(m));
}

}  // namespace interlacing
