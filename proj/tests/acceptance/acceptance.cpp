// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "frobkit/runner.hpp"

using namespace frobkit;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

struct Target {
    std::string preset;
    std::string field;
};

// Every preset that carries a Frobenius form, with a field it is defined over.
const std::vector<Target> kFrobeniusPresets{
    {"matrix:2", "Q"},      {"matrix:3", "F5"},     {"dual-numbers", "Q"},    {"dual-numbers", "F2"},
    {"cyclic:2", "F2"},     {"cyclic:3", "Q"},      {"cyclic:3", "F3"},       {"cyclic:5", "F5"},
    {"symmetric:3", "Q"},   {"symmetric:3", "F2"},  {"symmetric:3", "F3"},    {"dual-cyclic:3", "Q"},
    {"dual-symmetric:3", "F3"}, {"sweedler", "Q"},  {"sweedler", "F3"},       {"taft:3:2", "F7"},
    {"smash-cyclic:3", "Q"}, {"dualnum-c2", "F3"},
};

const std::vector<Target> kHopfPresets{
    {"cyclic:2", "F2"},    {"cyclic:3", "Q"},      {"cyclic:3", "F3"},          {"cyclic:5", "F5"},
    {"symmetric:3", "Q"},  {"symmetric:3", "F2"},  {"symmetric:3", "F3"},       {"dual-cyclic:3", "Q"},
    {"dual-symmetric:3", "F3"}, {"sweedler", "Q"}, {"sweedler", "F3"},         {"taft:3:2", "F7"},
};

std::string label(const Target& t) { return t.preset + "/" + t.field; }

template <class Fn>
void with_preset(const Target& t, Fn&& fn) {
    const FieldSpec f = FieldSpec::parse(t.field);
    if (f.is_prime_field())
        fn(make_preset<Zp>(t.preset, f));
    else
        fn(make_preset<Rational>(t.preset, f));
}

template <class S>
FrobeniusStructure<S> chosen_form(const PresetObject<S>& obj) {
    if (!obj.default_lambda.empty()) return build_frobenius(obj.algebra, named_lambda(obj, obj.default_lambda));
    if (obj.hopf) return hopf_frobenius_lambda(*obj.hopf).structure;
    auto l = find_frobenius_form(obj.algebra, kDefaultSeed, 40);
    if (!l) throw Failure("no Frobenius form found for " + obj.name);
    return build_frobenius(obj.algebra, *l);
}

void require_checks(const Checks& cs, const std::string& where) {
    for (const auto& c : cs)
        if (c.verdict != Verdict::Pass) throw Failure(where + ": " + c.name + " " + to_string(c.verdict) + " " + c.detail + " " + c.witness);
}

template <class S>
ModuleRep<S> trivial_module(const HopfData<S>& h) {
    ModuleRep<S> v{1, {}};
    for (Index k = 0; k < h.dim(); ++k) v.action.push_back(Mat<S>::Constant(1, 1, h.counit(k)));
    return v;
}

// 1. closed forms of the Higman trace
std::string criterion1() {
    for (Index n : {2, 3}) {
        const FieldSpec f = FieldSpec::prime(5);
        auto obj = make_preset<Zp>("matrix:" + std::to_string(n), f);
        auto fs = build_frobenius(obj.algebra, named_lambda(obj, "matrix-trace"));
        std::mt19937_64 rng(kDefaultSeed + static_cast<std::uint64_t>(n));
        for (int t = 0; t < 50; ++t) {
            Vec<Zp> a = random_element(obj.algebra, rng);
            Zp tr = scalar<Zp>(0, f);
            for (Index j = 0; j < n; ++j) tr += a(j * n + j);
            require(higman_trace_apply(fs, a) == Vec<Zp>(tr * obj.algebra.unit()), "M_" + std::to_string(n) + "(F5) at " + format_vector(a));
        }
    }
    int groups = 0;
    for (const char* g : {"cyclic:2", "cyclic:3", "symmetric:3"})
        for (const char* field : {"Q", "F2", "F3"})
            with_preset({g, field}, [&](const auto& obj) {
                using S = typename std::decay_t<decltype(obj.algebra.unit())>::Scalar;
                const auto& alg = obj.algebra;
                auto fs = hopf_frobenius_lambda(*obj.hopf).structure;
                std::mt19937_64 rng(kDefaultSeed);
                std::vector<Vec<S>> samples;
                for (Index k = 0; k < alg.dim(); ++k) samples.push_back(alg.basis(k));
                for (int t = 0; t < 20; ++t) samples.push_back(random_element(alg, rng));
                for (const auto& a : samples) {
                    Vec<S> conj = alg.zero();
                    for (Index x = 0; x < alg.dim(); ++x)
                        conj += multiply(alg, multiply(alg, alg.basis(x), a), Vec<S>(obj.hopf->antipode.col(x)));
                    require(higman_trace_apply(fs, a) == conj, std::string(g) + "/" + field + " at " + format_vector(a));
                }
                ++groups;
            });
    return "tau = trace(a) 1 on M_2(F5), M_3(F5) for 50 random a; tau = sum g a g^-1 on " + std::to_string(groups) +
           " group algebras";
}

// 2. Higman lemma on every Frobenius preset with 200 random pairs
std::string criterion2() {
    for (const auto& t : kFrobeniusPresets)
        with_preset(t, [&](const auto& obj) {
            auto fs = chosen_form(obj);
            require_checks(verify_higman_lemma(obj.algebra, fs, 200, kDefaultSeed), label(t));
        });
    return std::to_string(kFrobeniusPresets.size()) +
           " presets, 200 pairs each (upper-triangular:n has no Frobenius form and is excluded)";
}

// 3. rank(c (x) k) = rank tau
std::string criterion3() {
    struct Expect {
        Target t;
        Index rank;  // -1: only equality is required
    };
    std::ostringstream out;
    for (const auto& e : {Expect{{"symmetric:3", "Q"}, 3}, Expect{{"cyclic:2", "F2"}, 0}, Expect{{"cyclic:3", "F3"}, 0},
                          Expect{{"cyclic:5", "F5"}, 0}, Expect{{"symmetric:3", "F3"}, 1}, Expect{{"symmetric:3", "F2"}, -1}})
        with_preset(e.t, [&](const auto& obj) {
            auto an = analyze(obj.algebra);
            auto rep = verify_main_theorem(an, chosen_form(obj), kDefaultTrials, kDefaultSeed);
            require(rep.rank_c == rep.rank_tau, label(e.t) + ": rank C = " + std::to_string(rep.rank_c) + ", rank tau = " +
                                                    std::to_string(rep.rank_tau));
            if (e.rank >= 0) require(rep.rank_c == e.rank, label(e.t) + ": rank " + std::to_string(rep.rank_c));
            for (const auto& c : rep.checks)
                if (c.name == "main-theorem.cartan-oracles") require(c.verdict == Verdict::Pass, label(e.t) + ": " + c.detail);
            if (e.t.preset == "symmetric:3" && e.t.field == "F3") {
                const auto& m = rep.cartan.matrix;
                require(m.size() == 2 && m[0][0] == 2 && m[1][1] == 2 && m[0][1] == 1 && m[1][0] == 1,
                        "Cartan matrix of F3[S3] is not [[2,1],[1,2]]");
            }
            out << label(e.t) << "=" << rep.rank_c << " ";
        });
    return "ranks " + out.str();
}

// 4. the equivalences (i) <=> (ii) <=> (iii)
std::string criterion4() {
    auto q = make_preset<Rational>("symmetric:3", FieldSpec::rationals());
    auto rq = verify_main_theorem(analyze(q.algebra), chosen_form(q), kDefaultTrials, kDefaultSeed);
    require(rq.semisimple == Tri::True && rq.identity_cartan == Tri::True && rq.unimodular_cartan == Tri::True,
            "Q[S3] conditions are not all TRUE");
    auto p = make_preset<Zp>("symmetric:3", FieldSpec::prime(3));
    auto rp = verify_main_theorem(analyze(p.algebra), chosen_form(p), kDefaultTrials, kDefaultSeed);
    require(rp.semisimple == Tri::False && rp.unimodular_cartan == Tri::False && rp.cartan.det == 3,
            "F3[S3]: expected (i) FALSE, (iii) FALSE, det C = 3");
    int decided = 0, runs = 0;
    for (const auto& t : kFrobeniusPresets)
        with_preset(t, [&](const auto& obj) {
            auto an = analyze(obj.algebra);
            if (!an.is_split()) return;
            auto rep = verify_main_theorem(an, chosen_form(obj), kDefaultTrials, kDefaultSeed);
            ++runs;
            for (const auto& c : rep.checks)
                if (c.name == "main-theorem.equivalences") {
                    require(c.verdict != Verdict::Fail, label(t) + ": " + c.detail);
                    decided += c.verdict == Verdict::Pass;
                }
        });
    return "Q[S3] all TRUE, F3[S3] (i),(iii) FALSE; " + std::to_string(decided) + "/" + std::to_string(runs) +
           " split presets fully decided, none contradictory";
}

// 5. Bass diagram for PIMs and 20 random presentations per preset
std::string criterion5() {
    int count = 0, skipped = 0;
    for (const auto& t : kFrobeniusPresets)
        with_preset(t, [&](const auto& obj) {
            auto an = analyze(obj.algebra);
            if (!an.is_split()) {
                ++skipped;
                return;
            }
            for (std::size_t i = 0; i < an.split->idempotents.idempotents.size(); ++i, ++count)
                require_checks({verify_bass_diagram(an, single(an.split->idempotents.idempotents[i]), "pim")}, label(t));
            std::mt19937_64 rng(kDefaultSeed);
            for (int k = 0; k < 20; ++k, ++count)
                require_checks({verify_bass_diagram(an, random_presentation(an, rng).e, "random")}, label(t));
        });
    return std::to_string(count) + " presentations verified (" + std::to_string(skipped) +
           " presets skipped: field does not split them)";
}

// 6. Hopf layer
std::string criterion6() {
    for (auto [g, field] : {std::pair{"cyclic:2", "F2"}, std::pair{"cyclic:3", "F3"}, std::pair{"cyclic:3", "Q"},
                            std::pair{"symmetric:3", "Q"}, std::pair{"symmetric:3", "F2"}, std::pair{"symmetric:3", "F3"},
                            std::pair{"cyclic:5", "F5"}})
        with_preset({g, field}, [&](const auto& obj) {
            using S = typename std::decay_t<decltype(obj.algebra.unit())>::Scalar;
            const auto& h = *obj.hopf;
            const FieldSpec& f = h.algebra.field();
            Vec<S> sum = Vec<S>::Constant(h.dim(), scalar<S>(1, f));
            for (auto side : {Side::Left, Side::Right}) {
                auto ints = integrals(h, side);
                require(ints.basis.cols() == 1 && in_span(ints.basis, sum), std::string(g) + "/" + field + ": integrals");
            }
            auto hf = hopf_frobenius_lambda(h);
            require(hf.lambda.dot(hf.Lambda) == scalar<S>(1, f), "lambda(Lambda) != 1");
            auto di = distinguished_ideal(h);
            // d(kG) is generated by epsilon(sum g) = |G|
            const S order = scalar<S>(static_cast<long>(h.dim()), f);
            require(di.is_zero == order.is_zero(), std::string(g) + "/" + field + ": dH");
        });
    for (const auto& t : kHopfPresets)
        with_preset(t, [&](const auto& obj) {
            auto di = distinguished_ideal(*obj.hopf);
            require(!di.is_zero == (analyze(obj.algebra).rad.dim() == 0), label(t) + ": Larson-Sweedler");
            require_checks(hopf_frobenius_lambda(*obj.hopf).checks, label(t));
        });
    auto sw = sweedler_algebra<Rational>(FieldSpec::rationals());
    require_checks(validate_hopf(sw), "sweedler");
    require(!is_involutory(sw), "sweedler reported involutory");
    auto sq = s_squared_inner(sw, kDefaultSeed, kDefaultTrials);
    require(sq.witness.has_value(), "no u with S^2 = Ad u");
    auto fs = hopf_frobenius_lambda(sw).structure;
    Vec<Rational> v = multiply(sw.algebra, sq.witness->u_inverse, higman_trace_apply(fs, sq.witness->u));
    require(in_span(Mat<Rational>(sw.algebra.unit()), v), "u^-1 tau(u) is not a scalar");
    return "kG integrals, normalisation and dH; Larson-Sweedler on " + std::to_string(kHopfPresets.size()) +
           " Hopf presets; H4 non-involutory with u = " + format_vector(sq.witness->u);
}

// 7. Galois layer
std::string criterion7() {
    for (const auto& t : kHopfPresets)
        with_preset(t, [&](const auto& obj) {
            auto c = comodule_from_hopf(*obj.hopf);
            auto g = galois_check(c);
            require(g.is_galois && g.left_is_galois, label(t) + ": H over itself is not Galois");
            require_checks(g.checks, label(t));
            auto mb = regular_module(c.b);
            auto la = regular_module(g.a_algebra);
            require_checks(verify_tensor_lemma(g, mb, la, regular_module(c.h.algebra)), label(t));
            require_checks(verify_tensor_lemma(g, mb, la, trivial_module(c.h)), label(t));
        });
    for (const auto& t : {Target{"cyclic:3", "F3"}, Target{"cyclic:2", "F2"}})
        with_preset(t, [&](const auto& obj) {
            auto an = analyze(obj.algebra);
            auto g = galois_check(comodule_from_hopf(*obj.hopf));
            require_checks(ind_res_check(an, g, regular_module(obj.algebra), "regular"), label(t));
            for (const auto& s : an.split->simples) require_checks(ind_res_check(an, g, s, "simple"), label(t));
        });
    return std::to_string(kHopfPresets.size()) + " Hopf presets Galois over k, gamma/delta inverse; Ind Res = . [H] on F3[C3], F2[C2]";
}

// 8. product formula
std::string criterion8() {
    int count = 0;
    for (const auto& t : {Target{"cyclic:2", "F2"}, Target{"symmetric:3", "F3"}, Target{"symmetric:3", "Q"}})
        with_preset(t, [&](const auto& obj) {
            using S = typename std::decay_t<decltype(obj.algebra.unit())>::Scalar;
            const auto& h = *obj.hopf;
            auto an = analyze(h.algebra);
            auto g = galois_check(comodule_from_hopf(h));
            std::vector<ModuleRep<S>> vs{trivial_module(h), regular_module(h.algebra)};
            for (const auto& s : an.split->simples) vs.push_back(s);
            std::vector<AlgMatrix<S>> ms{single(h.algebra.unit()), alg_matrix_identity(h.algebra, 2)};
            for (const auto& e : an.split->idempotents.idempotents) ms.push_back(single(e));
            for (const auto& m : ms)
                for (const auto& v : vs) {
                    require_checks(product_formula_check(an, g, m, v, "case"), label(t));
                    ++count;
                }
        });
    return std::to_string(count) + " (M, V) pairs";
}

// 9. divisibility
std::string criterion9() {
    int count = 0;
    for (const auto& t : {Target{"cyclic:2", "F2"}, Target{"cyclic:3", "F3"}}) {
        JobSpec job;
        job.preset = t.preset;
        job.field = FieldSpec::parse(t.field);
        job.suites = {"divisibility"};
        Report r = run(job);
        bool saw_proposition = false;
        for (const auto& s : r.suites)
            for (const auto& c : s.checks) {
                require(c.verdict == Verdict::Pass, label(t) + ": " + c.name + " " + to_string(c.verdict) + " " + c.detail);
                saw_proposition = saw_proposition || c.name.find(".proposition") != std::string::npos;
            }
        require(saw_proposition, label(t) + ": no proposition check was run");
        // the presentations the suite generates: free of rank 1 and 2, PIMs, random ones
        auto obj = make_preset<Zp>(t.preset, *job.field);
        auto an = analyze(obj.algebra);
        const auto p = static_cast<Index>(job.field->characteristic);
        std::vector<AlgMatrix<Zp>> es{single(obj.algebra.unit()), alg_matrix_identity(obj.algebra, 2)};
        for (const auto& e : an.split->idempotents.idempotents) es.push_back(single(e));
        std::mt19937_64 rng(job.seed);
        for (int k = 0; k < job.trials; ++k) es.push_back(random_presentation(an, rng).e);
        for (const auto& e : es) {
            require(presentation_module(obj.algebra, e).dim % p == 0, label(t) + ": projective of dimension prime to p");
            ++count;
        }
    }
    JobSpec sw;
    sw.preset = "sweedler";
    sw.suites = {"divisibility"};
    Report r = run(sw);
    require(r.count(Verdict::Fail) == 0 && r.count(Verdict::NotApplicable) == 1, "sweedler divisibility is not NOT-APPLICABLE");
    return std::to_string(count) + " projectives with dim divisible by p; Sweedler NOT-APPLICABLE";
}

// 10. byte-identical report bodies
std::string criterion10() {
    int jobs = 0;
    for (const auto& t : {Target{"symmetric:3", "F3"}, Target{"sweedler", "Q"}, Target{"dualnum-c2", "F3"}, Target{"matrix:2", "Q"}})
        for (const auto& suite : all_suites()) {
            JobSpec job;
            job.preset = t.preset;
            job.field = FieldSpec::parse(t.field);
            job.suites = {suite};
            job.trials = 5;
            const std::string a = report_body(run(job)).dump(), b = report_body(run(job)).dump();
            require(a == b, label(t) + " " + suite + ": report bodies differ");
            ++jobs;
        }
    return std::to_string(jobs) + " jobs re-run with identical bodies";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"Higman trace closed forms", criterion1},   {"Higman lemma identities", criterion2},
        {"rank(C (x) k) = rank tau", criterion3},     {"semisimplicity equivalences", criterion4},
        {"Bass diagram", criterion5},                 {"Hopf layer", criterion6},
        {"Galois layer", criterion7},                 {"product formula", criterion8},
        {"divisibility theorem", criterion9},         {"determinism", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string verdict = "PASS", detail;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failed;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << verdict << " criterion " << i + 1 << " (" << criteria[i].first << "): " << detail << " ["
                  << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    }
    return failed ? 1 : 0;
}
