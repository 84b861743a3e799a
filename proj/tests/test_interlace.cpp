#include "interlacing/errors.hpp"
#include "interlacing/interlace.hpp"
#include "interlacing/random.hpp"
#include "interlacing/suite.hpp"

#include <gtest/gtest.h>

using namespace interlacing;

namespace {

Polynomial poly_of(std::vector<Rational> roots) { return Polynomial::from_roots(roots); }
RootIntervals roots_of(std::vector<Rational> roots) { return isolate_roots(poly_of(std::move(roots))); }

}  // namespace

TEST(InterlacesByRoots, Examples) {
    const auto yes = interlaces_by_roots(roots_of({-1, 1}), roots_of({0}));
    EXPECT_EQ(yes.verdict, Verdict::Interlaces);
    EXPECT_FALSE(yes.failure_witness);
    ASSERT_EQ(yes.chain_certificate.size(), 3u);
    EXPECT_EQ(yes.chain_certificate[1].source, 'g');

    const auto no = interlaces_by_roots(roots_of({0, 2}), roots_of({3}));
    EXPECT_EQ(no.verdict, Verdict::DoesNotInterlace);
    ASSERT_TRUE(no.failure_witness);
    EXPECT_EQ(no.failure_witness->lhs, "s_1");
    EXPECT_EQ(no.failure_witness->rhs, "r_2");
    EXPECT_EQ(no.failure_witness->position, 1u);
    EXPECT_TRUE(no.chain_certificate.empty());

    const auto degenerate = interlaces_by_roots(roots_of({0, 0}), roots_of({0}));
    EXPECT_EQ(degenerate.verdict, Verdict::Interlaces);
}

TEST(InterlacesByRoots, StrictModeRejectsEqualities) {
    const auto r = interlaces_by_roots(roots_of({0, 0}), roots_of({0}), ChainMode::Strict);
    EXPECT_EQ(r.verdict, Verdict::DoesNotInterlace);
    ASSERT_TRUE(r.failure_witness);
    EXPECT_TRUE(r.failure_witness->equal);
    EXPECT_EQ(interlaces_by_roots(roots_of({-1, 1}), roots_of({0}), ChainMode::Strict).verdict, Verdict::Interlaces);
}

TEST(InterlacesByRoots, DegreeMismatchIsAVerdict) {
    EXPECT_EQ(interlaces_by_roots(roots_of({-1, 1}), roots_of({0, 3})).verdict, Verdict::DegreeMismatch);
    // Roots counted with multiplicity: {1,1,2} vs {1} is 3 vs 1.
    EXPECT_EQ(interlaces_by_roots(roots_of({1, 1, 2}), roots_of({1})).verdict, Verdict::DegreeMismatch);
}

TEST(InterlacesByRoots, IrrationalEqualRootsAreCertifiedEqual) {
    // f = (x^2 - 2)(x - 3), g = (x^2 - 2): shared sqrt 2 and -sqrt 2.
    const Polynomial q{-2, 0, 1};
    const auto f = isolate_roots(q * Polynomial{-3, 1});
    const auto g = isolate_roots(q);
    EXPECT_EQ(interlaces_by_roots(f, g).verdict, Verdict::Interlaces);
    EXPECT_EQ(compare_roots(f.intervals[1], f.squarefree, g.intervals[1], g.squarefree), 0);
    EXPECT_EQ(compare_roots(f.intervals[0], f.squarefree, g.intervals[1], g.squarefree), -1);
}

TEST(CompareRoots, SeparatesCloseIrrationals) {
    // sqrt 2 vs 1414214/1000000: differ by < 1e-6.
    const auto a = isolate_roots(Polynomial{-2, 0, 1});
    const Polynomial b{Rational(-1414214, 1000000), 1};
    const auto bi = isolate_roots(b);
    EXPECT_EQ(compare_roots(a.intervals[1], a.squarefree, bi.intervals[0], bi.squarefree), -1);
    EXPECT_EQ(compare_roots(bi.intervals[0], bi.squarefree, a.intervals[1], a.squarefree), 1);
}

TEST(InterlacesExact, Examples) {
    EXPECT_EQ(interlaces_exact(Polynomial{-1, 0, 1}, Polynomial{0, 1}).verdict, Verdict::Interlaces);
    EXPECT_EQ(interlaces_exact(Polynomial{0, -2, 1}, Polynomial{-3, 1}).verdict, Verdict::DoesNotInterlace);
    const Polynomial f = poly_of({1, 2, 3});
    const Polynomial g = poly_of({Rational(3, 2), Rational(5, 2)});
    EXPECT_EQ(interlaces_exact(f, g).verdict, Verdict::Interlaces);
}

TEST(InterlacesExact, ReportsPreconditionFailuresDistinctly) {
    const auto not_real = interlaces_exact(Polynomial{1, 0, 1}, Polynomial{0, 1});
    EXPECT_EQ(not_real.verdict, Verdict::NotRealRooted);
    EXPECT_FALSE(not_real.f_real_rooted);
    EXPECT_TRUE(not_real.g_real_rooted);

    EXPECT_EQ(interlaces_exact(Polynomial{-1, 0, 1}, Polynomial{-1, 0, 1}).verdict, Verdict::DegreeMismatch);
    EXPECT_THROW(interlaces_exact(Polynomial{}, Polynomial{0, 1}), InvalidInput);
    EXPECT_THROW(interlaces_exact(Polynomial{0, 1}, Polynomial{}), InvalidInput);

    const auto signs = interlaces_exact(Polynomial{1, 0, -1}, Polynomial{0, 1});
    EXPECT_EQ(signs.f_leading_sign, -1);
    EXPECT_EQ(signs.g_leading_sign, 1);
    EXPECT_EQ(signs.verdict, Verdict::Interlaces);
}

TEST(DefaultAlphas, GridThenSeededRandom) {
    const auto a = default_alphas();
    ASSERT_EQ(a.size(), 3u + 22u + 64u);
    EXPECT_EQ(a[0], 0);
    EXPECT_EQ(a[1], Rational(1, 2));
    EXPECT_EQ(a[2], Rational(-1, 2));
    EXPECT_EQ(a[3], 1);
    EXPECT_EQ(a[24], -1024);
    for (std::size_t i = 25; i < a.size(); ++i) {
        EXPECT_LE(abs(a[i].get_num()), 10000);
        EXPECT_LE(a[i].get_den(), 10000);
    }
    EXPECT_EQ(a, default_alphas());
    EXPECT_NE(a, default_alphas(64, 99));
}

TEST(PencilScan, Examples) {
    const auto all = pencil_scan(Polynomial{-1, 0, 1}, Polynomial{0, 1}, default_alphas());
    EXPECT_TRUE(all.all_real);
    EXPECT_FALSE(all.witness);

    const std::vector<Rational> alphas{1, -1, -2};
    const auto w = pencil_scan(Polynomial{0, -2, 1}, Polynomial{-3, 1}, alphas);
    EXPECT_FALSE(w.all_real);
    ASSERT_TRUE(w.witness);
    EXPECT_EQ(*w.witness, -1);
    EXPECT_EQ(*w.witness_index, 1u);
    EXPECT_EQ(w.failing_count, 2u);

    EXPECT_TRUE(pencil_scan(Polynomial{0, 1}, Polynomial{1}, default_alphas()).all_real);
    EXPECT_THROW(pencil_scan(Polynomial{-1, 0, 1}, Polynomial{1}, alphas), InvalidInput);
    EXPECT_THROW(pencil_scan(Polynomial{0, 1}, Polynomial{}, alphas), InvalidInput);
}

TEST(PencilScan, ParallelMatchesSerialReference) {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const RootPair roots = random_root_pair(rng, n, 6, (rng.next() & 1U) != 0);
        const Polynomial f = poly_of(roots.f);
        const Polynomial g = poly_of(roots.g);
        const auto alphas = default_alphas(16, rng.next());
        const auto par = pencil_scan(f, g, alphas);
        const auto ser = pencil_scan_serial(f, g, alphas);
        EXPECT_EQ(par.all_real, ser.all_real);
        EXPECT_EQ(par.witness, ser.witness);
        EXPECT_EQ(par.witness_index, ser.witness_index);
        EXPECT_EQ(par.failing_count, ser.failing_count);
    }
}

TEST(HkoCrosscheck, Examples) {
    const auto a = hko_crosscheck(Polynomial{-1, 0, 1}, Polynomial{0, 1}, default_alphas());
    EXPECT_EQ(a.verdict, Consistency::Consistent);
    EXPECT_EQ(a.interlace.verdict, Verdict::Interlaces);

    const auto b = hko_crosscheck(Polynomial{0, -2, 1}, Polynomial{-3, 1}, default_alphas());
    EXPECT_EQ(b.verdict, Consistency::Consistent);
    ASSERT_TRUE(b.pencil.witness);
    EXPECT_LT(*b.pencil.witness, 0);

    const auto c = hko_crosscheck(poly_of({1, 2, 3}), poly_of({Rational(3, 2), Rational(5, 2)}), default_alphas());
    EXPECT_EQ(c.verdict, Consistency::Consistent);
    EXPECT_TRUE(c.pencil.all_real);
}

TEST(HkoCrosscheck, MissingWitnessIsUnfalsifiedNotInconsistent) {
    const auto r = hko_crosscheck(Polynomial{0, -2, 1}, Polynomial{-3, 1}, {0, 1});
    EXPECT_EQ(r.interlace.verdict, Verdict::DoesNotInterlace);
    EXPECT_EQ(r.verdict, Consistency::ConsistentUnfalsified);
}

// Properties.

TEST(InterlaceProperties, ShiftInvariance) {
    SplitMix64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const RootPair roots = random_root_pair(rng, n, 5, (rng.next() & 1U) != 0);
        const Polynomial f = poly_of(roots.f);
        const Polynomial g = poly_of(roots.g);
        const Rational t = rng.rational(20);
        EXPECT_EQ(interlaces_exact(shift(f, t), shift(g, t)).verdict, interlaces_exact(f, g).verdict);
    }
}

TEST(InterlaceProperties, PositiveScaleInvariance) {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const RootPair roots = random_root_pair(rng, n, 5, (rng.next() & 1U) != 0);
        const Polynomial f = poly_of(roots.f);
        const Polynomial g = poly_of(roots.g);
        Rational c = abs(rng.rational(30)) + Rational(1, 7);
        Rational d = abs(rng.rational(30)) + Rational(1, 3);
        EXPECT_EQ(interlaces_by_roots(isolate_roots(f * c), isolate_roots(g * d)).verdict,
                  interlaces_by_roots(isolate_roots(f), isolate_roots(g)).verdict);
    }
}

TEST(InterlaceProperties, VerdictMatchesDirectChainInspection) {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        const RootPair roots = random_root_pair(rng, n, 4, (rng.next() & 1U) != 0);
        const bool expected = chain_interlaces(roots.f, roots.g);
        EXPECT_EQ(expected, !roots.swapped);
        const auto verdict = interlaces_exact(poly_of(roots.f), poly_of(roots.g)).verdict;
        EXPECT_EQ(verdict, expected ? Verdict::Interlaces : Verdict::DoesNotInterlace);
    }
}

TEST(InterlaceProperties, ForwardDirectionAndContrapositive) {
    SplitMix64 rng(54);
    const auto alphas = default_alphas(24, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        const RootPair roots = random_root_pair(rng, n, 6, (rng.next() & 1U) != 0);
        const Polynomial f = poly_of(roots.f);
        const Polynomial g = poly_of(roots.g);
        const auto verdict = interlaces_exact(f, g).verdict;
        const auto pencil = pencil_scan(f, g, alphas);
        if (verdict == Verdict::Interlaces) EXPECT_TRUE(pencil.all_real);
        if (pencil.witness) EXPECT_EQ(verdict, Verdict::DoesNotInterlace);
    }
}

TEST(InterlaceProperties, AppendingSharedRootPreservesInterlacing) {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        RootPair roots = random_root_pair(rng, n, 6, false);
        ASSERT_EQ(interlaces_by_roots(roots_of(roots.f), roots_of(roots.g)).verdict, Verdict::Interlaces);
        const Rational shared = rng.rational(8);
        roots.f.push_back(shared);
        roots.g.push_back(shared);
        EXPECT_EQ(interlaces_by_roots(roots_of(roots.f), roots_of(roots.g)).verdict, Verdict::Interlaces);
    }
}
