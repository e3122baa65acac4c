#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using fk::Rational;
using fk::Zp;

TEST(Scalar, ZpArithmeticMatchesIntegerResidues) {
    const std::uint64_t p = 7;
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            Zp x(a, p), y(b, p);
            EXPECT_EQ((x + y).residue(), static_cast<std::uint64_t>(oracle::md(a + b, 7)));
            EXPECT_EQ((x * y).residue(), static_cast<std::uint64_t>(oracle::md(a * b, 7)));
            if (!y.is_zero()) EXPECT_EQ(x / y * y, x);
        }
}

TEST(Scalar, ZpRejectsMixedModuli) {
    EXPECT_THROW(Zp(1, 3) + Zp(1, 5), fk::FieldMismatchError);
    EXPECT_THROW((void)Zp(0, 5).inverse(), std::domain_error);
}

TEST(Scalar, RationalParseCanonicalises) {
    EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("-3"), Rational(-3, 1));
    EXPECT_EQ(Rational::parse("-3").to_string(), "-3");
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Scalar, FieldParse) {
    EXPECT_EQ(fk::FieldSpec::parse("Q"), QQ());
    EXPECT_EQ(fk::FieldSpec::parse("F5"), GF(5));
    EXPECT_EQ(fk::FieldSpec::parse("Fp:3"), GF(3));
    EXPECT_THROW(fk::FieldSpec::parse("F4"), std::invalid_argument);
    EXPECT_THROW(fk::FieldSpec::parse("R"), std::invalid_argument);
}

namespace {

PMat random_pmat(fk::Index r, fk::Index c, std::uint64_t p, std::mt19937_64& rng) {
    PMat m(r, c);
    for (fk::Index i = 0; i < r; ++i)
        for (fk::Index j = 0; j < c; ++j) m(i, j) = Zp(static_cast<long>(rng() % p), p);
    return m;
}

oracle::IMat rows_of(const PMat& m) {
    oracle::IMat out(static_cast<std::size_t>(m.rows()));
    for (fk::Index i = 0; i < m.rows(); ++i)
        for (fk::Index j = 0; j < m.cols(); ++j) out[i].push_back(static_cast<long>(m(i, j).residue()));
    return out;
}

}  // namespace

TEST(Linalg, RankAndKernelAgreeWithBruteForceOverF2AndF3) {
    std::mt19937_64 rng(11);
    for (std::uint64_t p : {2u, 3u}) {
        for (int trial = 0; trial < 40; ++trial) {
            const fk::Index r = 1 + static_cast<fk::Index>(rng() % 4), c = 1 + static_cast<fk::Index>(rng() % 5);
            PMat m = random_pmat(r, c, p, rng);
            // p^nullity = number of solutions of m x = 0, counted directly
            long solutions = 0;
            oracle::for_each_vector(static_cast<int>(c), static_cast<long>(p), [&](const oracle::IVec& x) {
                for (fk::Index i = 0; i < r; ++i) {
                    long s = 0;
                    for (fk::Index j = 0; j < c; ++j) s += static_cast<long>(m(i, j).residue()) * x[j];
                    if (s % static_cast<long>(p)) return;
                }
                ++solutions;
            });
            const fk::Index rk = fk::rank(m);
            long expect = 1;
            for (fk::Index k = 0; k < c - rk; ++k) expect *= static_cast<long>(p);
            EXPECT_EQ(solutions, expect);
            EXPECT_EQ(rk, oracle::rank_mod(rows_of(m), static_cast<long>(p)));
            PMat k = fk::kernel(m);
            EXPECT_EQ(k.cols(), c - rk);
            EXPECT_TRUE(fk::is_zero(m * k));
        }
    }
}

TEST(Linalg, InverseAndSolveOverQ) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        QMat m(4, 4);
        for (fk::Index i = 0; i < 4; ++i)
            for (fk::Index j = 0; j < 4; ++j) m(i, j) = fk::random_scalar<Rational>(rng, QQ());
        auto inv = fk::invert(m);
        if (fk::rank(m) < 4) {
            EXPECT_FALSE(inv.has_value());
            continue;
        }
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(QMat(m * *inv), fk::identity<Rational>(4, QQ()));
        QMat b(4, 1);
        for (fk::Index i = 0; i < 4; ++i) b(i, 0) = Rational(static_cast<long>(i) - 1, 3);
        auto x = fk::solve(m, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(QMat(m * *x), b);
    }
}

TEST(Linalg, SolveReportsInconsistency) {
    QMat a(2, 1), b(2, 1);
    a << Rational(1), Rational(1);
    b << Rational(1), Rational(2);
    EXPECT_FALSE(fk::solve(a, b).has_value());
}

TEST(Linalg, QuotientProjectionKillsRelations) {
    std::mt19937_64 rng(3);
    PMat w = random_pmat(5, 2, 5, rng);
    auto q = fk::make_quotient(w, 5);
    EXPECT_EQ(q.dim(), 5 - fk::rank(w));
    EXPECT_TRUE(fk::is_zero(q.projection * w));
    EXPECT_EQ(PMat(q.projection * q.section), fk::identity<Zp>(q.dim(), GF(5)));
}

TEST(Linalg, FieldRootsOverFp) {
    // x^2 - 1 over F_5
    fk::Poly<Zp> poly{Zp(-1, 5), Zp(0, 5), Zp(1, 5)};
    auto roots = fk::field_roots(poly, GF(5));
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots) EXPECT_TRUE(fk::evaluate(poly, r).is_zero());
}
