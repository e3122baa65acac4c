#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using fk::Rational;
using fk::Zp;

namespace {

using IntMat = std::vector<std::vector<long>>;

// Equality up to simultaneous permutation of rows and columns.
bool same_up_to_permutation(const IntMat& a, const IntMat& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[perm[i]][perm[j]] == b[i][j];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

template <class S>
fk::FrobeniusStructure<S> hopf_structure(const fk::PresetObject<S>& obj) {
    return fk::hopf_frobenius_lambda(*obj.hopf).structure;
}

}  // namespace

TEST(Cartan, KnownGroupAlgebraMatrices) {
    struct Known {
        const char* preset;
        std::uint64_t p;
        IntMat c;
        long det;
    };
    for (const auto& k : {Known{"symmetric:3", 3, {{2, 1}, {1, 2}}, 3}, Known{"symmetric:3", 2, {{2, 0}, {0, 1}}, 2},
                          Known{"cyclic:2", 2, {{2}}, 2}, Known{"cyclic:3", 3, {{3}}, 3},
                          Known{"sweedler", 3, {{1, 1}, {1, 1}}, 0}, Known{"cyclic:4", 2, {{4}}, 4}}) {
        auto an = fk::analyze(fk::make_preset<Zp>(k.preset, GF(k.p)).algebra);
        auto c = fk::cartan_matrix(an);
        EXPECT_TRUE(same_up_to_permutation(c.matrix, k.c)) << k.preset << " F" << k.p;
        EXPECT_EQ(c.det, k.det) << k.preset;
    }
}

TEST(Cartan, SemisimpleAlgebrasHaveIdentityCartan) {
    for (const char* name : {"symmetric:3", "matrix:3", "dual-symmetric:3"}) {
        auto an = fk::analyze(fk::make_preset<Rational>(name, QQ()).algebra);
        EXPECT_TRUE(fk::cartan_matrix(an).is_identity()) << name;
    }
}

TEST(HattoriStallings, RankIsAdditiveAndConjugationInvariant) {
    auto an = fk::analyze(fk::make_preset<Zp>("symmetric:3", GF(3)).algebra);
    const auto& alg = an.algebra;
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        auto p1 = fk::random_presentation(an, rng), p2 = fk::random_presentation(an, rng);
        ASSERT_TRUE(fk::is_idempotent_matrix(alg, p1.e));
        // conjugation does not change the class
        EXPECT_EQ(fk::hs_rank(alg, an.trace, p1.e), fk::hs_rank(alg, an.trace, p1.diagonal));
        auto joined = fk::block_join(alg, p1.e, p2.e);
        EXPECT_EQ(fk::hs_rank(alg, an.trace, joined),
                  PVec(fk::hs_rank(alg, an.trace, p1.e) + fk::hs_rank(alg, an.trace, p2.e)));
        // dim P = rank over k of the presented module
        EXPECT_EQ(fk::presentation_module(alg, p1.e).dim, fk::presentation_module(alg, p1.diagonal).dim);
    }
}

TEST(HattoriStallings, RejectsNonIdempotent) {
    auto alg = fk::make_preset<Rational>("dual-numbers", QQ()).algebra;
    auto t = fk::trace_space(alg);
    EXPECT_THROW(fk::hs_rank(alg, t, fk::single(vec_of<Rational>({2, 0}, QQ()))), fk::NotIdempotentError);
}

TEST(HattoriStallings, CharacterOfFreeModuleIsTheRegularTrace) {
    auto alg = fk::make_preset<Rational>("sweedler", QQ()).algebra;
    QVec chi = fk::character(fk::regular_module(alg));
    for (fk::Index k = 0; k < 4; ++k) EXPECT_EQ(chi(k), fk::trace(alg.left_mult(k)));
}

class BassDiagram : public ::testing::TestWithParam<std::pair<std::string, std::string>> {};

TEST_P(BassDiagram, PimsAndRandomPresentations) {
    const auto f = fk::FieldSpec::parse(GetParam().second);
    auto run = [&](auto tag) {
        using S = decltype(tag);
        auto an = fk::analyze(fk::make_preset<S>(GetParam().first, f).algebra);
        ASSERT_TRUE(an.is_split());
        for (const auto& e : an.split->idempotents.idempotents)
            EXPECT_EQ(fk::verify_bass_diagram(an, fk::single(e), "pim").verdict, fk::Verdict::Pass);
        std::mt19937_64 rng(12);
        for (int t = 0; t < 8; ++t)
            EXPECT_EQ(fk::verify_bass_diagram(an, fk::random_presentation(an, rng).e, "r").verdict, fk::Verdict::Pass);
        EXPECT_TRUE(fk::all_pass(fk::verify_splitting_isomorphisms(an)));
    };
    if (f.is_prime_field())
        run(Zp{});
    else
        run(Rational{});
}

INSTANTIATE_TEST_SUITE_P(Presets, BassDiagram,
                         ::testing::Values(std::pair{"symmetric:3", "F3"}, std::pair{"symmetric:3", "Q"},
                                           std::pair{"sweedler", "F5"}, std::pair{"dualnum-c2", "F3"},
                                           std::pair{"upper-triangular:3", "Q"}, std::pair{"taft:3:2", "F7"}));

TEST(MainTheorem, RanksAgreeOnGroupAlgebras) {
    struct Known {
        const char* preset;
        const char* field;
        fk::Index rank;
    };
    for (const auto& k : {Known{"symmetric:3", "Q", 3}, Known{"cyclic:2", "F2", 0}, Known{"cyclic:3", "F3", 0},
                          Known{"cyclic:5", "F5", 0}, Known{"symmetric:3", "F3", 1}, Known{"symmetric:3", "F2", 1}}) {
        const auto f = fk::FieldSpec::parse(k.field);
        auto check = [&](auto tag) {
            using S = decltype(tag);
            auto obj = fk::make_preset<S>(k.preset, f);
            auto an = fk::analyze(obj.algebra);
            auto rep = fk::verify_main_theorem(an, hopf_structure(obj), 10, 1);
            EXPECT_EQ(rep.rank_c, k.rank) << k.preset << " " << k.field;
            EXPECT_EQ(rep.rank_tau, k.rank) << k.preset << " " << k.field;
            EXPECT_FALSE(fk::any_fail(rep.checks));
        };
        if (f.is_prime_field())
            check(Zp{});
        else
            check(Rational{});
    }
}

TEST(MainTheorem, ConditionsOnS3) {
    auto q = fk::make_preset<Rational>("symmetric:3", QQ());
    auto rq = fk::verify_main_theorem(fk::analyze(q.algebra), hopf_structure(q), 10, 1);
    EXPECT_EQ(rq.semisimple, fk::Tri::True);
    EXPECT_EQ(rq.identity_cartan, fk::Tri::True);
    EXPECT_EQ(rq.unimodular_cartan, fk::Tri::True);

    auto p = fk::make_preset<Zp>("symmetric:3", GF(3));
    auto rp = fk::verify_main_theorem(fk::analyze(p.algebra), hopf_structure(p), 10, 1);
    EXPECT_EQ(rp.semisimple, fk::Tri::False);
    EXPECT_EQ(rp.unimodular_cartan, fk::Tri::False);
    EXPECT_EQ(rp.cartan.det, 3);
}

TEST(MainTheorem, DecidedVerdictsNeverContradictEachOther) {
    for (const char* spec : {"dual-numbers", "sweedler", "taft:3:2", "dualnum-c2", "cyclic:3", "matrix:2", "symmetric:3"}) {
        auto obj = fk::make_preset<Zp>(spec, GF(7));
        auto an = fk::analyze(obj.algebra);
        auto l = fk::find_frobenius_form(obj.algebra, 5, 40);
        ASSERT_TRUE(l.has_value()) << spec;
        auto rep = fk::verify_main_theorem(an, fk::build_frobenius(obj.algebra, *l), 10, 5);
        EXPECT_EQ(rep.rank_c, rep.rank_tau) << spec;
        std::vector<fk::Tri> decided;
        for (auto t : {rep.semisimple, rep.identity_cartan, rep.unimodular_cartan})
            if (t != fk::Tri::Inconclusive) decided.push_back(t);
        for (auto t : decided) EXPECT_EQ(t, decided.front()) << spec;
    }
}
