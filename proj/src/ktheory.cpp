#include "frobkit/ktheory.hpp"

namespace frobkit {

template <ExactScalar S>
AlgMatrix<S> alg_matrix_zero(const Algebra<S>& alg, Index n) {
    return {n, std::vector<Vec<S>>(static_cast<std::size_t>(n * n), alg.zero())};
}

template <ExactScalar S>
AlgMatrix<S> alg_matrix_identity(const Algebra<S>& alg, Index n) {
    auto m = alg_matrix_zero(alg, n);
    for (Index i = 0; i < n; ++i) m.at(i, i) = alg.unit();
    return m;
}

template <ExactScalar S>
AlgMatrix<S> alg_matrix_multiply(const Algebra<S>& alg, const AlgMatrix<S>& x, const AlgMatrix<S>& y) {
    if (x.n != y.n) throw DimensionError("algebra matrices of different size");
    auto out = alg_matrix_zero(alg, x.n);
    for (Index i = 0; i < x.n; ++i)
        for (Index k = 0; k < x.n; ++k) {
            if (is_zero(x.at(i, k))) continue;
            for (Index j = 0; j < x.n; ++j) out.at(i, j) += multiply(alg, x.at(i, k), y.at(k, j));
        }
    return out;
}

template <ExactScalar S>
bool is_idempotent_matrix(const Algebra<S>& alg, const AlgMatrix<S>& e) {
    return alg_matrix_multiply(alg, e, e).entries == e.entries;
}

template <ExactScalar S>
AlgMatrix<S> block_join(const Algebra<S>& alg, const AlgMatrix<S>& e, const AlgMatrix<S>& f) {
    auto out = alg_matrix_zero(alg, e.n + f.n);
    for (Index i = 0; i < e.n; ++i)
        for (Index j = 0; j < e.n; ++j) out.at(i, j) = e.at(i, j);
    for (Index i = 0; i < f.n; ++i)
        for (Index j = 0; j < f.n; ++j) out.at(e.n + i, e.n + j) = f.at(i, j);
    return out;
}

template <ExactScalar S>
AlgMatrix<S> single(const Vec<S>& e) {
    return {1, {e}};
}

template <ExactScalar S>
Vec<S> hs_rank_element(const Algebra<S>& alg, const AlgMatrix<S>& e) {
    Vec<S> r = alg.zero();
    for (Index i = 0; i < e.n; ++i) r += e.at(i, i);
    return r;
}

template <ExactScalar S>
Vec<S> hs_rank(const Algebra<S>& alg, const TraceSpace<S>& t, const AlgMatrix<S>& e) {
    if (!is_idempotent_matrix(alg, e)) throw NotIdempotentError("presentation matrix is not idempotent");
    return t.coordinates * hs_rank_element(alg, e);
}

template <ExactScalar S>
Vec<S> character(const ModuleRep<S>& v) {
    Vec<S> chi(static_cast<Index>(v.action.size()));
    for (std::size_t k = 0; k < v.action.size(); ++k) chi(static_cast<Index>(k)) = trace(v.action[k]);
    return chi;
}

template <ExactScalar S>
Vec<S> t_map(const Algebra<S>& alg, const Vec<S>& a) {
    const Index n = alg.dim();
    Mat<S> ra = regular_rep(alg, a, Side::Right);
    Vec<S> form(n);
    for (Index k = 0; k < n; ++k) {
        S t = alg.zero_scalar();
        const Mat<S>& lk = alg.left_mult(k);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (!lk(i, j).is_zero() && !ra(j, i).is_zero()) t += lk(i, j) * ra(j, i);
        form(k) = t;
    }
    return form;
}

template <ExactScalar S>
ModuleRep<S> presentation_module(const Algebra<S>& alg, const AlgMatrix<S>& e) {
    const Index d = alg.dim(), n = e.n;
    // row vector (v_1..v_n) -> (sum_i v_i e_ij)_j; block (j,i) is R_{e_ij}
    Mat<S> right = zeros<S>(n * d, n * d, alg.field());
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (!is_zero(e.at(i, j))) right.block(j * d, i * d, d, d) = regular_rep(alg, e.at(i, j), Side::Right);
    Mat<S> basis = column_basis(right);
    ModuleRep<S> free{n * d, {}};
    for (Index k = 0; k < d; ++k) {
        Mat<S> m = zeros<S>(n * d, n * d, alg.field());
        for (Index i = 0; i < n; ++i) m.block(i * d, i * d, d, d) = alg.left_mult(k);
        free.action.push_back(std::move(m));
    }
    return restrict_to_submodule(free, basis);
}

template <ExactScalar S>
RandomPresentation<S> random_presentation(const AnalyzedAlgebra<S>& an, std::mt19937_64& rng, Index max_n) {
    const auto& alg = an.algebra;
    std::vector<Vec<S>> pool{alg.zero(), alg.unit()};
    if (an.split)
        for (const auto& e : an.split->idempotents.idempotents) pool.push_back(e);
    const Index n = 1 + static_cast<Index>(rng() % static_cast<std::uint64_t>(max_n));
    auto diag = alg_matrix_zero(alg, n);
    for (Index i = 0; i < n; ++i) diag.at(i, i) = pool[rng() % pool.size()];
    auto e = diag;
    if (n > 1) {
        for (Index step = 0; step < 2 * n; ++step) {
            Index i = static_cast<Index>(rng() % static_cast<std::uint64_t>(n));
            Index j = static_cast<Index>(rng() % static_cast<std::uint64_t>(n - 1));
            if (j >= i) ++j;
            Vec<S> c = random_element(alg, rng);
            auto u = alg_matrix_identity(alg, n), uinv = alg_matrix_identity(alg, n);
            u.at(i, j) = c;
            uinv.at(i, j) = -c;
            e = alg_matrix_multiply(alg, alg_matrix_multiply(alg, u, e), uinv);
        }
    }
    return {e, diag};
}

bool CartanData::is_identity() const {
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix.size(); ++j)
            if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

template <ExactScalar S>
CartanData cartan_matrix(const AnalyzedAlgebra<S>& an) {
    const auto& sd = an.require_split();
    const auto& alg = an.algebra;
    const auto& es = sd.idempotents.idempotents;
    const std::size_t s = es.size();
    CartanData out;
    out.matrix.assign(s, std::vector<long>(s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        auto layers = composition_factors(an, left_ideal_module(alg, es[i]));
        for (std::size_t j = 0; j < s; ++j) {
            Mat<S> sandwich(alg.dim(), alg.dim());
            for (Index k = 0; k < alg.dim(); ++k) sandwich.col(k) = multiply(alg, multiply(alg, es[j], alg.basis(k)), es[i]);
            const long dim = static_cast<long>(rank(sandwich));
            if (dim != layers[j])
                throw InternalInconsistencyError("Cartan entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 "): dim e_j A e_i = " + std::to_string(dim) +
                                                 " but the radical layers count " + std::to_string(layers[j]));
            out.matrix[i][j] = dim;
        }
    }
    Mat<Rational> cq(static_cast<Index>(s), static_cast<Index>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) cq(static_cast<Index>(i), static_cast<Index>(j)) = Rational(out.matrix[i][j]);
    // determinant by elimination over Q
    {
        Mat<Rational> m = cq;
        Rational det(1);
        const Index n = m.rows();
        for (Index c = 0; c < n; ++c) {
            Index piv = c;
            while (piv < n && m(piv, c).is_zero()) ++piv;
            if (piv == n) {
                det = Rational(0);
                break;
            }
            if (piv != c) {
                m.row(piv).swap(m.row(c));
                det = -det;
            }
            det *= m(c, c);
            for (Index r = c + 1; r < n; ++r) {
                if (m(r, c).is_zero()) continue;
                Rational f = m(r, c) / m(c, c);
                for (Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
            }
        }
        out.det = det.numerator();
    }
    const auto& field = alg.field();
    if (field.is_prime_field()) {
        Mat<Zp> cp(cq.rows(), cq.cols());
        for (Index i = 0; i < cq.rows(); ++i)
            for (Index j = 0; j < cq.cols(); ++j)
                cp(i, j) = Zp(out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], field.characteristic);
        out.rank_char = rank(cp);
    } else {
        out.rank_char = rank(cq);
    }
    return out;
}

template <ExactScalar S>
Check verify_bass_diagram(const AnalyzedAlgebra<S>& an, const AlgMatrix<S>& e, const std::string& label) {
    const auto& alg = an.algebra;
    if (!is_idempotent_matrix(alg, e)) return fail("bass." + label, "presentation is not idempotent");
    ModuleRep<S> p = presentation_module(alg, e);
    Vec<S> chi = character(p);
    Vec<S> r = an.trace.projector * hs_rank_element(alg, e);
    Vec<S> t = t_map(alg, r);
    return verdict_of(chi == t, "bass." + label,
                      "chi_P = t(r(P)) for P of dimension " + std::to_string(p.dim) + " (n=" + std::to_string(e.n) + ")",
                      chi == t ? std::string{} : "chi=" + format_vector(chi) + " t(r)=" + format_vector(t));
}

template <ExactScalar S>
Checks verify_splitting_isomorphisms(const AnalyzedAlgebra<S>& an) {
    Checks out;
    if (!an.split) {
        out.push_back(not_applicable("splitting.r-chi-isomorphisms", an.split_error));
        return out;
    }
    const auto& sd = *an.split;
    const Algebra<S>& q = an.top.algebra;
    TraceSpace<S> tq = trace_space(q);
    const Index s = static_cast<Index>(sd.top_idempotents.size()), t = tq.t_dim();
    Mat<S> r_tilde(t, s), chi_tilde(s, t);
    for (Index i = 0; i < s; ++i) r_tilde.col(i) = tq.coordinates * sd.top_idempotents.idempotents[i];
    for (Index j = 0; j < s; ++j) {
        Vec<S> chi = character(sd.simples[j]);
        for (Index c = 0; c < t; ++c) chi_tilde(j, c) = chi.dot(an.top.section * tq.representatives.col(c));
    }
    const bool ok = s == t && rank(r_tilde) == s && rank(chi_tilde) == s;
    out.push_back(verdict_of(ok, "splitting.r-chi-isomorphisms",
                             std::to_string(s) + " simples, dim T(A/rad A) = " + std::to_string(t) +
                                 ", rank r~ = " + std::to_string(rank(r_tilde)) +
                                 ", rank chi~ = " + std::to_string(rank(chi_tilde)) +
                                 (ok ? "" : " (splitting succeeded, so this indicates an upstream bug)")));
    return out;
}

template <ExactScalar S>
std::vector<long> k0_class(const AnalyzedAlgebra<S>& an, const AlgMatrix<S>& e) {
    ModuleRep<S> p = presentation_module(an.algebra, e);
    auto layers = radical_filtration(an, p);
    ModuleRep<S> top = quotient_module(p, layers.size() > 1 ? layers[1] : Mat<S>(p.dim, 0));
    return composition_factors(an, top);
}

template <ExactScalar S>
MainTheoremReport<S> verify_main_theorem(const AnalyzedAlgebra<S>& an, const FrobeniusStructure<S>& fs, int trials,
                                         std::uint64_t seed, const std::optional<Vec<S>>& hopf_u) {
    const auto& alg = an.algebra;
    MainTheoremReport<S> rep;
    try {
        rep.cartan = cartan_matrix(an);
    } catch (const DoesNotSplitError& e) {
        rep.checks.push_back(not_applicable("main-theorem.rank", std::string("field does not split A: ") + e.what()));
        rep.checks.push_back(not_applicable("main-theorem.equivalences", "field does not split A"));
        return rep;
    } catch (const InternalInconsistencyError& e) {
        rep.checks.push_back(fail("main-theorem.cartan-oracles", e.what()));
        return rep;
    }
    rep.checks.push_back(pass("main-theorem.cartan-oracles", "dim e_j A e_i agrees with radical-layer counts; " +
                                                                 rep.cartan.convention));
    rep.rank_c = rep.cartan.rank_char;
    rep.rank_tau = rank(fs.tau);
    rep.checks.push_back(verdict_of(rep.rank_c == rep.rank_tau, "main-theorem.rank",
                                    "rank(C (x) k) = " + std::to_string(rep.rank_c) +
                                        ", rank tau = " + std::to_string(rep.rank_tau)));

    auto sf = socle_factorization_check(an, fs);
    append(rep.checks, sf.checks);
    const Index tdim = sf.tau_tilde.cols();
    if (sf.rank < tdim) {
        Mat<S> k = kernel(sf.tau_tilde);
        rep.tau_condition = Tri::True;
        rep.tau_witness = "kernel vector of tau~: " + format_vector(Vec<S>(k.col(0)));
    } else {
        auto maps_to_unit = [&](const Vec<S>& a) { return is_unit(alg, higman_trace_apply(fs, a)); };
        for (Index c = 0; c < tdim && rep.tau_condition != Tri::True; ++c)
            if (maps_to_unit(sf.representatives.col(c))) {
                rep.tau_condition = Tri::True;
                rep.tau_witness = "tau of representative " + format_vector(Vec<S>(sf.representatives.col(c))) +
                                  " is a unit";
            }
        std::mt19937_64 rng(seed);
        for (int t = 0; t < trials && rep.tau_condition != Tri::True && tdim > 0; ++t) {
            Vec<S> a = alg.zero();
            for (Index c = 0; c < tdim; ++c) a += random_scalar<S>(rng, alg.field()) * sf.representatives.col(c);
            if (!is_zero(sf.coordinates * a) && maps_to_unit(a)) {
                rep.tau_condition = Tri::True;
                rep.tau_witness = "tau(" + format_vector(a) + ") is a unit";
            }
        }
        if (rep.tau_condition != Tri::True && hopf_u && maps_to_unit(*hopf_u)) {
            rep.tau_condition = Tri::True;
            rep.tau_witness = "tau(u) is a unit for the unit u conjugating S^2";
        }
        if (rep.tau_condition != Tri::True && an.rad.dim() > 0) {
            // tau~ is injective and lands in soc A, which is a proper ideal when rad A != 0
            rep.tau_condition = Tri::False;
            rep.tau_witness = "tau~ injective with image in soc A, a proper ideal";
        } else if (rep.tau_condition != Tri::True && tdim == 1) {
            rep.tau_condition = Tri::False;
            rep.tau_witness = "T(A/rad A) is a line and tau of its generator is not a unit";
        }
    }

    const bool char_divides = alg.field().is_prime_field()
                                  ? rep.cartan.det % mpz_class(static_cast<unsigned long>(alg.field().characteristic)) == 0
                                  : rep.cartan.det == 0;
    rep.semisimple = tri_of(an.rad.dim() == 0);
    rep.identity_cartan = tri_and(tri_of(rep.cartan.is_identity()), rep.tau_condition);
    rep.unimodular_cartan = tri_and(tri_of(!char_divides), rep.tau_condition);

    const std::string summary = std::string("(i) semisimple: ") + to_string(rep.semisimple) +
                                "; (ii) C = Id and cond: " + to_string(rep.identity_cartan) +
                                "; (iii) char does not divide det C (" + rep.cartan.det.get_str() +
                                ") and cond: " + to_string(rep.unimodular_cartan) +
                                "; cond alone: " + to_string(rep.tau_condition);
    std::vector<Tri> decided;
    for (Tri t : {rep.semisimple, rep.identity_cartan, rep.unimodular_cartan})
        if (t != Tri::Inconclusive) decided.push_back(t);
    bool agree = true;
    for (Tri t : decided) agree = agree && t == decided.front();
    Verdict v = !agree ? Verdict::Fail : decided.size() == 3 ? Verdict::Pass : Verdict::Inconclusive;
    rep.checks.push_back({"main-theorem.equivalences", v, summary, rep.tau_witness});
    return rep;
}

#define FROBKIT_INSTANTIATE_KTHEORY(S)                                                                               \
    template AlgMatrix<S> alg_matrix_zero<S>(const Algebra<S>&, Index);                                              \
    template AlgMatrix<S> alg_matrix_identity<S>(const Algebra<S>&, Index);                                          \
    template AlgMatrix<S> alg_matrix_multiply<S>(const Algebra<S>&, const AlgMatrix<S>&, const AlgMatrix<S>&);       \
    template bool is_idempotent_matrix<S>(const Algebra<S>&, const AlgMatrix<S>&);                                   \
    template AlgMatrix<S> block_join<S>(const Algebra<S>&, const AlgMatrix<S>&, const AlgMatrix<S>&);                \
    template AlgMatrix<S> single<S>(const Vec<S>&);                                                                  \
    template Vec<S> hs_rank_element<S>(const Algebra<S>&, const AlgMatrix<S>&);                                      \
    template Vec<S> hs_rank<S>(const Algebra<S>&, const TraceSpace<S>&, const AlgMatrix<S>&);                        \
    template Vec<S> character<S>(const ModuleRep<S>&);                                                               \
    template Vec<S> t_map<S>(const Algebra<S>&, const Vec<S>&);                                                      \
    template ModuleRep<S> presentation_module<S>(const Algebra<S>&, const AlgMatrix<S>&);                            \
    template RandomPresentation<S> random_presentation<S>(const AnalyzedAlgebra<S>&, std::mt19937_64&, Index);       \
    template CartanData cartan_matrix<S>(const AnalyzedAlgebra<S>&);                                                 \
    template Check verify_bass_diagram<S>(const AnalyzedAlgebra<S>&, const AlgMatrix<S>&, const std::string&);       \
    template Checks verify_splitting_isomorphisms<S>(const AnalyzedAlgebra<S>&);                                     \
    template std::vector<long> k0_class<S>(const AnalyzedAlgebra<S>&, const AlgMatrix<S>&);                          \
    template MainTheoremReport<S> verify_main_theorem<S>(const AnalyzedAlgebra<S>&, const FrobeniusStructure<S>&,    \
                                                         int, std::uint64_t, const std::optional<Vec<S>>&);

FROBKIT_INSTANTIATE_KTHEORY(Rational)
FROBKIT_INSTANTIATE_KTHEORY(Zp)

}  // namespace frobkit
