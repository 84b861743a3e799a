#pragma once

#include "interlacing/interlace.hpp"
#include "interlacing/polynomial.hpp"
#include "interlacing/random.hpp"
#include "interlacing/real_roots.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace interlacing {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Throws InvalidInput on division by zero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    GaussianRational operator-() const { return {-re, -im}; }
};

using MatrixRows = std::vector<std::vector<GaussianRational>>;

/// Dense square matrix of Gaussian rationals, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}
    /// Throws InvalidInput if the rows do not form a square.
    static SquareMatrix from_rows(const MatrixRows& rows);
    static SquareMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    MatrixRows rows() const;
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<GaussianRational> data_;
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

/// First (i, j) with m(i, j) != conj(m(j, i)), scanning row-major.
std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(const SquareMatrix& m);

bool is_hermitian(const SquareMatrix& m);
/// Throws InvalidInput for non-square input.
bool is_hermitian(const MatrixRows& rows);

/// A SquareMatrix known to equal its conjugate transpose.
class HermitianMatrix {
public:
    /// Throws InvalidInput naming the first offending (i, j).
    explicit HermitianMatrix(SquareMatrix m);
    static HermitianMatrix from_rows(const MatrixRows& rows) { return HermitianMatrix(SquareMatrix::from_rows(rows)); }

    std::size_t size() const { return m_.size(); }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const SquareMatrix& matrix() const { return m_; }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    SquareMatrix m_;
};

/// Fraction-free (Bareiss) elimination after clearing denominators, so every
/// intermediate is a Gaussian integer and each division is exact.
GaussianRational det_exact(const SquareMatrix& m);

/// Monic det(xI - A) by Faddeev-LeVerrier over Gaussian rationals. Throws
/// InternalInconsistency if any coefficient keeps a nonzero imaginary part.
Polynomial char_poly(const HermitianMatrix& a);

/// Deletes row and column k. Throws InvalidInput if k >= n or n < 2.
HermitianMatrix principal_submatrix(const HermitianMatrix& a, std::size_t k);

/// Determinant linearity in the last row, in monic form.
///
/// With A = [[B, c], [c*, d]] and A_alpha the same matrix with d replaced by
/// d + alpha, expanding det(A_alpha - xI) along its last row gives
///
///     det(A_alpha - xI) = det(A - xI) + alpha det(B - xI).
///
/// Multiplying through by (-1)^n turns every det(M - xI) into the monic
/// char_poly(M), and det(B - xI) picks up one fewer sign, so the checked form is
///
///     char_poly(A_alpha) = char_poly(A) - alpha char_poly(B).
struct IdentityReport {
    Rational alpha;
    Polynomial lhs_coeffs;      ///< char_poly(A_alpha)
    Polynomial rhs_sum_coeffs;  ///< char_poly(A) - alpha char_poly(B)
    bool exact_match = false;
};

/// Throws InvalidInput for n < 2.
IdentityReport bordered_identity(const HermitianMatrix& a, const Rational& alpha);

/// char_poly(A) - alpha char_poly(B), B the leading (n-1) block.
Polynomial bordered_pencil(const HermitianMatrix& a, const Rational& alpha);

/// 2^-20
Rational default_eigen_width();

/// Isolating intervals for the spectrum of A, refined to `width`. Throws
/// InternalInconsistency unless the multiplicities sum to n.
RootIntervals eigen_intervals(const HermitianMatrix& a, const Rational& width = default_eigen_width());

struct CauchyReport {
    std::size_t deleted_index = 0;
    RootIntervals eigen_intervals_A;
    RootIntervals eigen_intervals_B;
    InterlaceReport interlace;
};

/// Eigenvalues of A against those of A with row/column k removed. A verdict
/// other than Interlaces throws InternalInconsistency.
CauchyReport cauchy_check(const HermitianMatrix& a, std::size_t k,
                          const Rational& width = default_eigen_width());

/// n x n Hermitian matrix with integer real/imaginary parts in [-bound, bound].
/// Draw order: for i in 0..n-1, for j in i..n-1: re, then im unless i == j.
/// The lower triangle mirrors the conjugate of the upper one.
HermitianMatrix random_hermitian(SplitMix64& rng, std::size_t n, std::int64_t bound);

}  // namespace interlacing
