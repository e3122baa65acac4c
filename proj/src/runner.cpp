#include "frobkit/runner.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

namespace frobkit {

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> suites{"frobenius", "bass", "main-theorem", "hopf",
                                                 "galois", "product-formula", "divisibility"};
    return suites;
}

namespace {

json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Checks tagged(Checks cs, const std::string& tag) {
    for (auto& c : cs) c.name += "[" + tag + "]";
    return cs;
}

template <class S>
struct FormResult {
    std::optional<FrobeniusStructure<S>> structure;
    std::string source;
    Check failure;
};

template <ExactScalar S>
class Session {
public:
    Session(const JobSpec& job, PresetObject<S> obj, bool is_preset, std::optional<Vec<S>> lambda, std::string lambda_name)
        : job_(job), obj_(std::move(obj)), is_preset_(is_preset), lambda_(std::move(lambda)),
          lambda_name_(std::move(lambda_name)) {
        if (!job_.lambda.empty()) lambda_name_ = job_.lambda;
        if (lambda_name_.empty() && !lambda_) lambda_name_ = obj_.default_lambda;
        if (!lambda_name_.empty()) {
            try {
                lambda_ = named_lambda(obj_, lambda_name_);
            } catch (const NotFrobeniusHopfError& e) {
                named_error_ = e.what();
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("lambda: ") + e.what());
            }
        }
        if (obj_.comodule)
            comodule_ = obj_.comodule;
        else if (obj_.hopf)
            comodule_ = comodule_from_hopf(*obj_.hopf);
    }

    Report run(const std::vector<std::string>& suites, json job_echo) {
        Report rep;
        rep.job = std::move(job_echo);
        fill_info(rep.info);
        for (const auto& s : suites) {
            auto start = std::chrono::steady_clock::now();
            Checks cs;
            try {
                cs = dispatch(s);
            } catch (const DoesNotSplitError& e) {
                cs.push_back(not_applicable(s + ".split", std::string("field does not split the algebra: ") + e.what()));
            } catch (const std::exception& e) {
                cs.push_back(fail(s + ".error", e.what()));
            }
            std::map<std::string, int> seen;
            for (auto& c : cs)
                if (int k = seen[c.name]++; k > 0) c.name += "#" + std::to_string(k + 1);
            auto stop = std::chrono::steady_clock::now();
            rep.suites.push_back({s, std::move(cs), std::chrono::duration<double, std::milli>(stop - start).count()});
        }
        return rep;
    }

    void fill_info(json& info) {
        const auto& alg = obj_.algebra;
        const auto& a = an();
        info["name"] = obj_.name;
        info["dim"] = alg.dim();
        info["radical_dim"] = a.rad.dim();
        info["radical_nilpotency"] = a.rad_nilpotency;
        info["center_dim"] = a.center.dim();
        info["trace_space_dim"] = a.trace.t_dim();
        info["commutative"] = is_commutative(alg);
        info["split"] = a.is_split();
        if (a.split) {
            json dims = json::array();
            for (auto d : a.split->idempotents.simple_dims) dims.push_back(d);
            info["simple_dims"] = dims;
            try {
                auto c = cartan_matrix(a);
                info["cartan"] = c.matrix;
                info["cartan_det"] = c.det.get_str();
            } catch (const std::exception& e) {
                info["cartan_error"] = e.what();
            }
        } else {
            info["split_error"] = a.split_error;
        }
        auto& f = form();
        info["frobenius_form"] = f.structure ? f.source : std::string("none");
        if (f.structure) {
            info["symmetric"] = f.structure->nakayama == identity<S>(alg.dim(), alg.field());
            info["rank_tau"] = rank(f.structure->tau);
        }
        if (obj_.hopf) {
            info["involutory"] = is_involutory(*obj_.hopf);
            auto di = distinguished_ideal(*obj_.hopf);
            info["distinguished_ideal"] = di.is_zero ? "0" : "k (generator " + di.generator.to_string() + ")";
        }
        if (comodule_) {
            info["coinvariants_dim"] = galois().coinvariant_basis.cols();
            info["galois"] = galois().is_galois;
        }
    }

private:
    const AnalyzedAlgebra<S>& an() {
        if (!an_) an_ = analyze(obj_.algebra);
        return *an_;
    }

    const AnalyzedAlgebra<S>& hopf_an() {
        if (obj_.hopf && !obj_.comodule) return an();
        if (!hopf_an_) hopf_an_ = analyze(comodule_->h.algebra);
        return *hopf_an_;
    }

    const GaloisExtension<S>& galois() {
        if (!galois_) galois_ = galois_check(*comodule_);
        return *galois_;
    }

    const AnalyzedAlgebra<S>& coinvariant_an() {
        if (!a_an_) a_an_ = analyze(galois().a_algebra);
        return *a_an_;
    }

    FormResult<S>& form() {
        if (form_) return *form_;
        form_.emplace();
        auto& out = *form_;
        const auto& alg = obj_.algebra;
        if (lambda_) {
            try {
                out.structure = build_frobenius(alg, *lambda_);
                out.source = lambda_name_.empty() ? "input vector" : lambda_name_;
                return out;
            } catch (const NotFrobeniusError& e) {
                out.failure = fail("frobenius.form", std::string("supplied form is not a Frobenius form: ") + e.what());
                return out;
            }
        }
        if (obj_.hopf && named_error_.empty()) {
            try {
                out.structure = hopf_frobenius_lambda(*obj_.hopf).structure;
                out.source = "hopf-integral";
                return out;
            } catch (const NotFrobeniusHopfError&) {
            }
        }
        const int tries = std::max(job_.trials, 20);
        if (auto l = find_frobenius_form(alg, job_.seed, tries)) {
            out.structure = build_frobenius(alg, *l);
            out.source = "search";
            return out;
        }
        bool same = true;
        for (Index k = 0; k < alg.dim() && same; ++k)
            same = trace(alg.left_mult(k)) == trace(regular_rep(alg, alg.basis(k), Side::Right));
        out.failure = same ? Check{"frobenius.form", Verdict::Inconclusive,
                                   "no Frobenius form among " + std::to_string(alg.dim() + tries) + " candidates", ""}
                           : not_applicable("frobenius.form", "A is not Frobenius: the regular and coregular characters differ");
        return out;
    }

    std::optional<Vec<S>> hopf_unit() {
        if (!obj_.hopf) return std::nullopt;
        auto sq = s_squared_inner(*obj_.hopf, job_.seed, job_.trials);
        if (sq.witness) return sq.witness->u;
        return std::nullopt;
    }

    bool preset_is(const std::string& prefix) const { return is_preset_ && obj_.name.rfind(prefix, 0) == 0; }

    ModuleRep<S> trivial_hopf_module() const {
        const auto& h = comodule_->h;
        ModuleRep<S> v{1, {}};
        for (Index k = 0; k < h.dim(); ++k) v.action.push_back(Mat<S>::Constant(1, 1, h.counit(k)));
        return v;
    }

    Checks dispatch(const std::string& s) {
        if (s == "frobenius") return suite_frobenius();
        if (s == "bass") return suite_bass();
        if (s == "main-theorem") return suite_main();
        if (s == "hopf") return suite_hopf();
        if (s == "galois") return suite_galois();
        if (s == "product-formula") return suite_product();
        if (s == "divisibility") return suite_divisibility();
        throw InputError("unknown suite " + s);
    }

    Checks suite_frobenius() {
        auto& f = form();
        if (!f.structure) return {f.failure};
        const auto& alg = obj_.algebra;
        const auto& fs = *f.structure;
        Checks out{pass("frobenius.form", "lambda from " + f.source, format_vector(fs.lambda))};
        // identity checks sample pairs, which are cheap; trials counts constructed objects
        const int pairs = kPairsPerTrial * job_.trials;
        append(out, verify_frobenius_structure(alg, fs, pairs, job_.seed));
        append(out, verify_higman_lemma(alg, fs, pairs, job_.seed));
        append(out, socle_factorization_check(an(), fs).checks);

        std::mt19937_64 rng(job_.seed ^ 0x51ed27u);
        Vec<S> u0 = alg.unit();
        for (int t = 0; t < job_.trials; ++t)
            if (Vec<S> c = random_element(alg, rng); is_unit(alg, c)) {
                u0 = c;
                break;
            }
        Vec<S> lambda2 = regular_rep(alg, u0, Side::Right).transpose() * fs.lambda;
        try {
            UnitWitness<S> w = change_of_form(alg, fs, build_frobenius(alg, lambda2));
            const bool ok = multiply(alg, w.u, w.u_inverse) == alg.unit();
            out.push_back(verdict_of(ok, "frobenius.change-of-form", "lambda' = lambda(. u) recovered with its unit",
                                     "u=" + format_vector(w.u)));
        } catch (const InconsistentStructuresError& e) {
            out.push_back(fail("frobenius.change-of-form", e.what()));
        }

        if (preset_is("matrix:")) {
            const Index n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(alg.dim()))));
            std::string bad;
            for (int t = 0; t < job_.trials && bad.empty(); ++t) {
                Vec<S> a = random_element(alg, rng);
                S tr = alg.zero_scalar();
                for (Index j = 0; j < n; ++j) tr += a(j * n + j);
                if (higman_trace_apply(fs, a) != tr * alg.unit()) bad = "a=" + format_vector(a);
            }
            out.push_back(verdict_of(bad.empty(), "frobenius.closed-form",
                                     "tau(a) = trace(a) 1 on " + std::to_string(job_.trials) + " random a", bad));
        } else if (obj_.hopf && (preset_is("cyclic:") || preset_is("symmetric:"))) {
            std::string bad;
            for (Index k = 0; k < alg.dim() && bad.empty(); ++k) {
                Vec<S> a = alg.basis(k), conj = alg.zero();
                for (Index g = 0; g < alg.dim(); ++g)
                    conj += multiply(alg, multiply(alg, alg.basis(g), a), Vec<S>(obj_.hopf->antipode.col(g)));
                if (higman_trace_apply(fs, a) != conj) bad = "a=b" + std::to_string(k);
            }
            out.push_back(verdict_of(bad.empty(), "frobenius.closed-form", "tau(a) = sum_g g a g^-1 on a basis", bad));
        }
        return out;
    }

    Checks suite_bass() {
        const auto& a = an();
        const auto& alg = obj_.algebra;
        Checks out{verify_bass_diagram(a, single(alg.unit()), "free")};
        if (a.split) {
            const auto& es = a.split->idempotents.idempotents;
            bool k0_ok = true;
            for (std::size_t i = 0; i < es.size(); ++i) {
                out.push_back(verify_bass_diagram(a, single(es[i]), "pim" + std::to_string(i)));
                auto cls = k0_class(a, single(es[i]));
                for (std::size_t j = 0; j < cls.size(); ++j) k0_ok = k0_ok && cls[j] == (i == j ? 1 : 0);
            }
            out.push_back(verdict_of(k0_ok, "k0.pim-classes", "the top of each PIM is its own simple"));
        }
        std::mt19937_64 rng(job_.seed);
        for (int t = 0; t < job_.trials; ++t)
            out.push_back(verify_bass_diagram(a, random_presentation(a, rng).e, "random" + std::to_string(t)));
        return out;
    }

    Checks suite_main() {
        auto& f = form();
        if (!f.structure) return {f.failure};
        auto rep = verify_main_theorem(an(), *f.structure, job_.trials, job_.seed, hopf_unit());
        Checks out = rep.checks;
        append(out, verify_splitting_isomorphisms(an()));
        return out;
    }

    Checks suite_hopf() {
        if (!obj_.hopf) return {not_applicable("hopf", "input has no Hopf structure")};
        const auto& h = *obj_.hopf;
        Checks out = validate_hopf(h);
        if (any_fail(out)) return out;
        out.push_back(pass("hopf.involutory", std::string("involutory=") + (is_involutory(h) ? "true" : "false")));
        auto right = integrals(h, Side::Right), left = integrals(h, Side::Left);
        out.push_back(pass("hopf.integrals", "one-dimensional left and right integral spaces",
                           "right=" + format_vector(Vec<S>(right.basis.col(0))) +
                               " left=" + format_vector(Vec<S>(left.basis.col(0)))));
        try {
            auto hf = hopf_frobenius_lambda(h);
            append(out, hf.checks);
            append(out, tagged(socle_factorization_check(an(), hf.structure).checks, "hopf-form"));
        } catch (const NotFrobeniusHopfError& e) {
            out.push_back(fail("hopf.lambda-normalized", e.what()));
        }
        auto di = distinguished_ideal(h);
        append(out, di.checks);
        out.push_back(verdict_of(!di.is_zero == (an().rad.dim() == 0), "hopf.larson-sweedler",
                                 std::string("dH ") + (di.is_zero ? "= 0" : "!= 0") + ", dim rad H = " +
                                     std::to_string(an().rad.dim())));
        append(out, s_squared_inner(h, job_.seed, job_.trials).checks);
        if (preset_is("cyclic:") || preset_is("symmetric:")) {
            Vec<S> col = right.basis.col(0);
            bool constant = true;
            for (Index k = 1; k < col.size(); ++k) constant = constant && col(k) == col(0);
            out.push_back(verdict_of(constant && !col(0).is_zero(), "hopf.group-integral", "integrals are the multiples of sum_g g"));
            const S order = scalar<S>(static_cast<long>(h.dim()), h.algebra.field());
            out.push_back(verdict_of(di.generator == order * col(0), "hopf.group-distinguished",
                                     "epsilon(sum_g g) = |G| = " + order.to_string()));
        }
        return out;
    }

    Checks suite_galois() {
        if (!comodule_) return {not_applicable("galois", "input has no comodule or Hopf structure")};
        const auto& c = *comodule_;
        Checks out = validate_comodule(c);
        if (any_fail(out)) return out;
        const auto& g = galois();
        append(out, g.checks);
        bool inv = true;
        Mat<S> u = kron(identity<S>(c.b.dim(), c.b.field()), Mat<S>(c.h.algebra.unit()));
        for (Index k = 0; k < g.coinvariant_basis.cols(); ++k)
            inv = inv && Vec<S>(c.coaction * g.coinvariant_basis.col(k)) == Vec<S>(u * g.coinvariant_basis.col(k));
        out.push_back(verdict_of(inv, "galois.coinvariants", "dim A = " + std::to_string(g.coinvariant_basis.cols()) +
                                                                  ", every basis vector satisfies rho(a) = a (x) 1"));
        ModuleRep<S> reg_b = regular_module(c.b), reg_a = regular_module(g.a_algebra), reg_h = regular_module(c.h.algebra);
        append(out, tagged(verify_tensor_lemma(g, reg_b, reg_a, reg_h), "V=regular"));
        append(out, tagged(verify_tensor_lemma(g, reg_b, reg_a, trivial_hopf_module()), "V=trivial"));
        append(out, ind_res_check(an(), g, reg_b, "regular"));
        if (an().split)
            for (std::size_t i = 0; i < an().split->simples.size(); ++i)
                append(out, ind_res_check(an(), g, an().split->simples[i], "simple" + std::to_string(i)));
        append(out, hattori_functoriality(coinvariant_an(), g));
        append(out, verify_hstar_action(c, job_.seed, job_.trials));
        return out;
    }

    std::vector<std::pair<std::string, AlgMatrix<S>>> presentations(bool random) {
        const auto& alg = obj_.algebra;
        std::vector<std::pair<std::string, AlgMatrix<S>>> out{{"free1", single(alg.unit())},
                                                              {"free2", alg_matrix_identity(alg, 2)}};
        if (an().split)
            for (std::size_t i = 0; i < an().split->idempotents.idempotents.size(); ++i)
                out.emplace_back("pim" + std::to_string(i), single(an().split->idempotents.idempotents[i]));
        if (random) {
            std::mt19937_64 rng(job_.seed);
            for (int t = 0; t < job_.trials; ++t) out.emplace_back("random" + std::to_string(t), random_presentation(an(), rng).e);
        }
        return out;
    }

    Checks suite_product() {
        if (!comodule_) return {not_applicable("product-formula", "input has no comodule or Hopf structure")};
        const auto& g = galois();
        std::vector<std::pair<std::string, ModuleRep<S>>> vs{{"trivial", trivial_hopf_module()},
                                                             {"regular", regular_module(comodule_->h.algebra)}};
        if (hopf_an().split)
            for (std::size_t j = 0; j < hopf_an().split->simples.size(); ++j)
                vs.emplace_back("simple" + std::to_string(j), hopf_an().split->simples[j]);
        Checks out;
        for (const auto& [ml, e] : presentations(false))
            for (const auto& [vl, v] : vs) append(out, product_formula_check(an(), g, e, v, ml + "." + vl));
        return out;
    }

    Checks suite_divisibility() {
        if (!comodule_) return {not_applicable("divisibility", "input has no comodule or Hopf structure")};
        const auto& g = galois();
        Checks out;
        for (const auto& [label, e] : presentations(true)) {
            Checks cs = divisibility_check(an(), coinvariant_an(), g, e, label);
            if (cs.size() == 1 && cs.front().verdict != Verdict::Pass && cs.front().verdict != Verdict::Fail) {
                cs.front().name = "divisibility.hypotheses";
                return cs;
            }
            append(out, cs);
        }
        return out;
    }

    JobSpec job_;
    PresetObject<S> obj_;
    bool is_preset_;
    std::optional<Vec<S>> lambda_;
    std::string lambda_name_;
    std::string named_error_;
    std::optional<ComoduleAlgebra<S>> comodule_;
    std::optional<AnalyzedAlgebra<S>> an_, hopf_an_, a_an_;
    std::optional<GaloisExtension<S>> galois_;
    std::optional<FormResult<S>> form_;
};

template <ExactScalar S>
Session<S> open_session(const JobSpec& job, const FieldSpec& field, const json* doc) {
    if (doc) {
        Document<S> d;
        try {
            d = parse_document<S>(*doc);
        } catch (const SchemaError& e) {
            throw InputError(e.what());
        }
        PresetObject<S> obj{d.name.empty() ? job.input : d.name, d.algebra, d.hopf, d.comodule, ""};
        return Session<S>(job, std::move(obj), false, d.lambda, d.lambda_name);
    }
    try {
        return Session<S>(job, make_preset<S>(job.preset, field), true, std::nullopt, "");
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

struct Loaded {
    FieldSpec field;
    std::optional<json> doc;
};

Loaded load(const JobSpec& job) {
    if (job.input.empty() == job.preset.empty()) throw InputError("give exactly one of an input document or a preset");
    Loaded out;
    if (!job.input.empty()) {
        out.doc = read_document(job.input);
        try {
            out.field = document_field(*out.doc);
        } catch (const SchemaError& e) {
            throw InputError(e.what());
        }
        if (job.field && *job.field != out.field)
            throw InputError("--field " + job.field->to_string() + " does not match the document field " + out.field.to_string());
    } else {
        out.field = job.field.value_or(FieldSpec::rationals());
    }
    return out;
}

json job_echo(const JobSpec& job, const FieldSpec& field, const std::vector<std::string>& suites) {
    json j;
    j["input"] = job.input.empty() ? "preset:" + job.preset : job.input;
    j["field"] = field.to_string();
    j["suites"] = suites;
    j["seed"] = job.seed;
    j["trials"] = job.trials;
    if (!job.lambda.empty()) j["lambda"] = job.lambda;
    return j;
}

template <ExactScalar S>
Report run_typed(const JobSpec& job, const Loaded& l, const std::vector<std::string>& suites) {
    auto session = open_session<S>(job, l.field, l.doc ? &*l.doc : nullptr);
    return session.run(suites, job_echo(job, l.field, suites));
}

}  // namespace

Report run(const JobSpec& job) {
    std::vector<std::string> suites = job.suites.empty() ? all_suites() : job.suites;
    for (const auto& s : suites)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) throw InputError("unknown suite '" + s + "'");
    if (job.trials < 1) throw InputError("trials must be positive");
    Loaded l = load(job);
    return l.field.is_prime_field() ? run_typed<Zp>(job, l, suites) : run_typed<Rational>(job, l, suites);
}

Report analyze(const JobSpec& job) {
    Loaded l = load(job);
    return l.field.is_prime_field() ? run_typed<Zp>(job, l, {}) : run_typed<Rational>(job, l, {});
}

}  // namespace frobkit
