#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using fk::Rational;
using fk::Zp;

namespace {

template <class S>
fk::FrobeniusStructure<S> default_structure(const fk::PresetObject<S>& obj) {
    if (!obj.default_lambda.empty()) return fk::build_frobenius(obj.algebra, fk::named_lambda(obj, obj.default_lambda));
    if (obj.hopf) return fk::hopf_frobenius_lambda(*obj.hopf).structure;
    auto l = fk::find_frobenius_form(obj.algebra, 1, 40);
    if (!l) throw std::runtime_error("no form for " + obj.name);
    return fk::build_frobenius(obj.algebra, *l);
}

struct Case {
    std::string preset;
    std::string field;
};

std::string case_name(const ::testing::TestParamInfo<Case>& info) {
    std::string s = info.param.preset + "_" + info.param.field;
    for (auto& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
    return s;
}

const auto kFrobeniusCases = ::testing::Values(
    Case{"matrix:2", "Q"}, Case{"matrix:3", "F5"}, Case{"dual-numbers", "Q"}, Case{"dual-numbers", "F2"},
    Case{"cyclic:2", "F2"}, Case{"cyclic:3", "F3"}, Case{"cyclic:3", "Q"}, Case{"symmetric:3", "Q"},
    Case{"symmetric:3", "F2"}, Case{"symmetric:3", "F3"}, Case{"dual-symmetric:3", "F3"}, Case{"sweedler", "Q"},
    Case{"sweedler", "F3"}, Case{"taft:3:2", "F7"}, Case{"smash-cyclic:2", "Q"}, Case{"dualnum-c2", "F3"});

class FrobeniusProperties : public ::testing::TestWithParam<Case> {
protected:
    template <class S>
    void check_all() {
        const auto f = fk::FieldSpec::parse(GetParam().field);
        const auto obj = fk::make_preset<S>(GetParam().preset, f);
        const auto& alg = obj.algebra;
        const auto fs = default_structure(obj);
        const fk::Index d = alg.dim();

        // dual basis: lambda(b_i y_j) = delta_ij
        for (fk::Index i = 0; i < d; ++i)
            for (fk::Index j = 0; j < d; ++j) {
                fk::Vec<S> prod = fk::multiply(alg, alg.basis(i), fk::Vec<S>(fs.y.col(j)));
                EXPECT_EQ(fs.lambda.dot(prod), i == j ? alg.one() : alg.zero_scalar());
            }

        std::mt19937_64 rng(77);
        for (int t = 0; t < 25; ++t) {
            fk::Vec<S> a = fk::random_element(alg, rng), b = fk::random_element(alg, rng);
            // Nakayama: lambda(ab) = lambda(b alpha(a))
            fk::Vec<S> alpha_a = fs.nakayama * a;
            EXPECT_EQ(fs.lambda.dot(fk::multiply(alg, a, b)), fs.lambda.dot(fk::multiply(alg, b, alpha_a)));
            // tau kills commutators; x -> lambda(x tau(a)) is a trace form, which
            // through the Nakayama relation reads b tau(a) = tau(a) alpha(b)
            EXPECT_TRUE(fk::is_zero(fk::higman_trace_apply(fs, fk::commutator(alg, a, b))));
            fk::Vec<S> ta = fk::higman_trace_apply(fs, a);
            EXPECT_EQ(fk::multiply(alg, b, ta), fk::multiply<S>(alg, ta, fs.nakayama * b));
            EXPECT_EQ(ta, fk::higman_trace_alternative(alg, fs, a));
            // casimir operator is central too
            fk::Vec<S> ca = fk::casimir_apply(alg, fs, a);
            EXPECT_EQ(fk::multiply(alg, ca, b), fk::multiply(alg, b, ca));
            // t(a) is the form x -> lambda(x tau(a))
            fk::Vec<S> tm = fk::t_map(alg, a);
            for (fk::Index k = 0; k < d; ++k) EXPECT_EQ(tm(k), fs.lambda.dot(fk::multiply(alg, alg.basis(k), ta)));
        }
        EXPECT_EQ(fk::Mat<S>(fs.nakayama * fs.tau), fk::Mat<S>(fs.tau * fs.nakayama));
        EXPECT_TRUE(fk::all_pass(fk::verify_frobenius_structure(alg, fs, 20, 3)));
        EXPECT_TRUE(fk::all_pass(fk::verify_higman_lemma(alg, fs, 20, 3)));
        const auto an = fk::analyze(alg);
        EXPECT_TRUE(fk::all_pass(fk::socle_factorization_check(an, fs).checks));
    }
};

}  // namespace

TEST_P(FrobeniusProperties, StructureInvariants) {
    if (fk::FieldSpec::parse(GetParam().field).is_prime_field())
        check_all<Zp>();
    else
        check_all<Rational>();
}

INSTANTIATE_TEST_SUITE_P(Presets, FrobeniusProperties, kFrobeniusCases, case_name);

TEST(Frobenius, HigmanTraceMatchesDirectDualBasisOracle) {
    for (auto [name, p] : {std::pair{"symmetric:3", 3ul}, std::pair{"sweedler", 5ul}, std::pair{"dual-numbers", 2ul},
                           std::pair{"matrix:2", 3ul}, std::pair{"taft:3:2", 7ul}}) {
        auto obj = fk::make_preset<Zp>(name, GF(p));
        auto fs = default_structure(obj);
        auto t = oracle::table_of(obj.algebra);
        auto lam = ints_of(fs.lambda);
        for (fk::Index k = 0; k < obj.algebra.dim(); ++k)
            EXPECT_EQ(ints_of(fk::higman_trace_apply(fs, obj.algebra.basis(k))), oracle::higman_trace(t, lam, t.basis(static_cast<int>(k))))
                << name << " b" << k;
    }
}

TEST(Frobenius, MatrixAlgebraTraceIsTraceTimesIdentity) {
    for (fk::Index n : {2, 3}) {
        auto obj = fk::make_preset<Zp>("matrix:" + std::to_string(n), GF(5));
        auto fs = fk::build_frobenius(obj.algebra, fk::named_lambda(obj, "matrix-trace"));
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        for (int t = 0; t < 20; ++t) {
            PVec a = fk::random_element(obj.algebra, rng);
            Zp tr(0, 5);
            for (fk::Index j = 0; j < n; ++j) tr += a(j * n + j);
            EXPECT_EQ(fk::higman_trace_apply(fs, a), PVec(tr * obj.algebra.unit()));
        }
    }
}

TEST(Frobenius, GroupAlgebraTraceIsConjugationSum) {
    auto g = fk::symmetric_group(3);
    auto h = fk::group_algebra<Rational>(g, QQ());
    auto fs = fk::hopf_frobenius_lambda(h).structure;
    for (int k = 0; k < g.order(); ++k) {
        QVec expect = h.algebra.zero();
        for (int x = 0; x < g.order(); ++x) expect(g.table[g.table[x][k]][g.inverse[x]]) += Rational(1);
        EXPECT_EQ(fk::higman_trace_apply(fs, h.algebra.basis(k)), expect);
    }
}

TEST(Frobenius, UpperTriangularIsNotFrobenius) {
    auto alg = fk::make_preset<Rational>("upper-triangular:2", QQ()).algebra;
    EXPECT_FALSE(fk::find_frobenius_form(alg, 1, 50).has_value());
    EXPECT_THROW(fk::build_frobenius(alg, vec_of<Rational>({1, 1, 1}, QQ())), fk::NotFrobeniusError);
}

TEST(Frobenius, ChangeOfFormRecoversTheUnit) {
    auto alg = fk::make_preset<Rational>("sweedler", QQ()).algebra;
    auto fs = fk::build_frobenius(alg, fk::find_frobenius_form(alg, 2, 40).value());
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        QVec u = fk::random_element(alg, rng);
        if (!fk::is_unit(alg, u)) continue;
        QVec lam2 = fk::regular_rep(alg, u, fk::Side::Right).transpose() * fs.lambda;
        auto w = fk::change_of_form(alg, fs, fk::build_frobenius(alg, lam2));
        // lambda'(x) = lambda(x u) determines u
        EXPECT_EQ(w.u, u);
        EXPECT_EQ(fk::multiply(alg, w.u, w.u_inverse), alg.unit());
    }
}

TEST(Frobenius, SymmetricAlgebrasHaveTrivialNakayama) {
    for (const char* name : {"symmetric:3", "matrix:2", "dual-numbers"}) {
        auto obj = fk::make_preset<Rational>(name, QQ());
        auto fs = default_structure(obj);
        EXPECT_EQ(fs.nakayama, fk::identity<Rational>(obj.algebra.dim(), QQ())) << name;
    }
    auto sw = fk::make_preset<Rational>("sweedler", QQ());
    EXPECT_NE(default_structure(sw).nakayama, fk::identity<Rational>(4, QQ()));
}
