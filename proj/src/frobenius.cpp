#include "frobkit/frobenius.hpp"

namespace frobkit {

template <ExactScalar S>
FrobeniusStructure<S> build_frobenius(const Algebra<S>& alg, const Vec<S>& lambda) {
    const Index n = alg.dim();
    if (lambda.size() != n) throw DimensionError("lambda has the wrong length");
    FrobeniusStructure<S> fs;
    fs.lambda = lambda;
    fs.gram = Mat<S>(n, n);
    for (Index i = 0; i < n; ++i) fs.gram.row(i) = (lambda.transpose() * alg.left_mult(i)).eval();
    auto inv = invert(fs.gram);
    if (!inv) throw NotFrobeniusError("Gram matrix of lambda is singular (rank " + std::to_string(rank(fs.gram)) +
                                      " of " + std::to_string(n) + ")");
    fs.y = *inv;
    fs.nakayama = fs.y * Mat<S>(fs.gram.transpose());

    if (fs.nakayama * alg.unit() != alg.unit()) throw InternalInconsistencyError("Nakayama map does not fix 1");
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Vec<S> lhs = fs.nakayama * alg.left_mult(i).col(j);
            Vec<S> rhs = multiply<S>(alg, fs.nakayama.col(i), fs.nakayama.col(j));
            if (lhs != rhs)
                throw InternalInconsistencyError("Nakayama map is not multiplicative at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
        }

    fs.tau = zeros<S>(n, n, alg.field());
    for (Index k = 0; k < n; ++k) {
        Vec<S> col = alg.zero();
        for (Index i = 0; i < n; ++i) col += alg.left_mult(i) * (alg.left_mult(k) * fs.y.col(i));
        fs.tau.col(k) = col;
    }
    return fs;
}

template <ExactScalar S>
Vec<S> higman_trace_apply(const FrobeniusStructure<S>& fs, const Vec<S>& a) {
    return fs.tau * a;
}

template <ExactScalar S>
Vec<S> higman_trace_alternative(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a) {
    Vec<S> out = alg.zero();
    for (Index i = 0; i < alg.dim(); ++i)
        out += multiply(alg, multiply<S>(alg, fs.y.col(i), a), Vec<S>(fs.nakayama.col(i)));
    return out;
}

template <ExactScalar S>
Vec<S> casimir_apply(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a) {
    Vec<S> out = alg.zero();
    for (Index i = 0; i < alg.dim(); ++i) out += multiply(alg, multiply<S>(alg, fs.y.col(i), a), alg.basis(i));
    return out;
}

template <ExactScalar S>
S bilinear_form(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a, const Vec<S>& b) {
    return fs.lambda.dot(multiply(alg, a, b)) + alg.zero_scalar();
}

namespace {

template <ExactScalar S>
std::string pair_witness(const Vec<S>& a, const Vec<S>& b) {
    return "a=" + format_vector(a) + " b=" + format_vector(b);
}

}  // namespace

template <ExactScalar S>
Checks verify_frobenius_structure(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, int trials,
                                  std::uint64_t seed) {
    const Index n = alg.dim();
    Checks out;
    {
        // a = sum_i lambda(a y_i) x_i and a = sum_i lambda(x_i a) y_i on basis a
        std::string bad;
        for (Index k = 0; k < n && bad.empty(); ++k) {
            Vec<S> a = alg.basis(k), r1 = alg.zero(), r2 = alg.zero();
            for (Index i = 0; i < n; ++i) {
                r1 += fs.lambda.dot(multiply<S>(alg, a, fs.y.col(i))) * alg.basis(i);
                r2 += fs.lambda.dot(multiply(alg, alg.basis(i), a)) * Vec<S>(fs.y.col(i));
            }
            if (r1 != a || r2 != a) bad = "a=b" + std::to_string(k);
        }
        out.push_back(verdict_of(bad.empty(), "frobenius.dual-basis-reconstruction",
                                 "a = sum lambda(a y_i) x_i = sum lambda(x_i a) y_i on every basis vector", bad));
    }
    {
        std::string bad = fs.nakayama * alg.unit() == alg.unit() ? "" : "alpha(1) != 1";
        for (Index i = 0; i < n && bad.empty(); ++i)
            for (Index j = 0; j < n; ++j)
                if (fs.nakayama * alg.left_mult(i).col(j) !=
                    multiply<S>(alg, fs.nakayama.col(i), fs.nakayama.col(j))) {
                    bad = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
        out.push_back(verdict_of(bad.empty(), "frobenius.nakayama-automorphism",
                                 "alpha(ab) = alpha(a)alpha(b), alpha(1) = 1 and lambda(ab) = lambda(b alpha(a))", bad));
    }

    std::mt19937_64 rng(seed);
    std::string alt_bad, cas_bad;
    for (int t = 0; t < trials && alt_bad.empty() && cas_bad.empty(); ++t) {
        Vec<S> a = random_element(alg, rng);
        if (higman_trace_alternative(alg, fs, a) != higman_trace_apply(fs, a)) alt_bad = "a=" + format_vector(a);
        Vec<S> c = casimir_apply(alg, fs, a);
        for (Index k = 0; k < n; ++k)
            if (commutator<S>(alg, c, alg.basis(k)) != alg.zero()) {
                cas_bad = "a=" + format_vector(a);
                break;
            }
    }
    out.push_back(verdict_of(alt_bad.empty(), "frobenius.higman-second-formula",
                             "tau(a) = sum y_i a alpha(x_i) on " + std::to_string(trials) + " random a", alt_bad));
    out.push_back(verdict_of(cas_bad.empty(), "frobenius.casimir-central",
                             "sum y_i a x_i lies in the center", cas_bad));

    const bool symmetric = fs.nakayama == identity<S>(n, alg.field());
    if (symmetric) {
        std::string bad;
        for (int t = 0; t < trials && bad.empty(); ++t) {
            Vec<S> a = random_element(alg, rng);
            if (casimir_apply(alg, fs, a) != higman_trace_apply(fs, a)) bad = "a=" + format_vector(a);
        }
        out.push_back(verdict_of(bad.empty(), "frobenius.casimir-equals-tau", "symmetric form: Casimir = tau", bad));
    }

    Mat<S> z = center(alg).basis;
    std::string zbad;
    for (Index c = 0; c < z.cols() && zbad.empty(); ++c)
        for (Index k = 0; k < n; ++k) {
            Vec<S> zc = z.col(c);
            if (higman_trace_apply(fs, multiply(alg, zc, alg.basis(k))) !=
                multiply(alg, zc, higman_trace_apply(fs, alg.basis(k)))) {
                zbad = "z=" + format_vector(zc) + " a=b" + std::to_string(k);
                break;
            }
        }
    out.push_back(verdict_of(zbad.empty(), "frobenius.tau-center-linear", "tau(z a) = z tau(a) for central z", zbad));
    return out;
}

template <ExactScalar S>
Checks verify_higman_lemma(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, int trials, std::uint64_t seed) {
    const Index n = alg.dim();
    std::mt19937_64 rng(seed);
    std::string bad[3];
    for (int t = 0; t < trials; ++t) {
        Vec<S> a = random_element(alg, rng);
        Vec<S> b = random_element(alg, rng);
        Vec<S> ta = higman_trace_apply(fs, a), tb = higman_trace_apply(fs, b);
        if (bad[0].empty()) {
            Mat<S> ra = regular_rep(alg, a, Side::Right);
            for (Index k = 0; k < n; ++k) {
                S lhs = alg.zero_scalar();
                const Mat<S>& lk = alg.left_mult(k);
                for (Index i = 0; i < n; ++i)
                    for (Index j = 0; j < n; ++j)
                        if (!lk(i, j).is_zero() && !ra(j, i).is_zero()) lhs += lk(i, j) * ra(j, i);
                if (lhs != bilinear_form(alg, fs, alg.basis(k), ta)) {
                    bad[0] = "a=" + format_vector(a) + " x=b" + std::to_string(k);
                    break;
                }
            }
        }
        if (bad[1].empty() && bilinear_form(alg, fs, ta, b) != bilinear_form(alg, fs, a, tb))
            bad[1] = pair_witness(a, b);
        if (bad[2].empty() && multiply(alg, a, tb) != multiply<S>(alg, tb, fs.nakayama * a))
            bad[2] = pair_witness(a, b);
    }
    Checks out;
    const std::string on = " on " + std::to_string(trials) + " random pairs";
    out.push_back(verdict_of(bad[0].empty(), "higman.trace-form", "Tr(L_x R_a) = lambda(x tau(a))" + on, bad[0]));
    out.push_back(verdict_of(bad[1].empty(), "higman.self-adjoint", "beta(tau a, b) = beta(a, tau b)" + on, bad[1]));
    out.push_back(
        verdict_of(bad[2].empty(), "higman.twisted-central", "a tau(b) = tau(b) alpha(a)" + on, bad[2]));
    out.push_back(verdict_of(fs.nakayama * fs.tau == fs.tau * fs.nakayama, "higman.commutes-with-nakayama",
                             "alpha tau = tau alpha as matrices"));
    Mat<S> comm = commutator_spanning_set(alg);
    Mat<S> image = fs.tau * comm;
    std::string cbad;
    for (Index c = 0; c < image.cols(); ++c)
        if (!is_zero(image.col(c))) {
            cbad = "[b" + std::to_string(c / n) + ",b" + std::to_string(c % n) + "]";
            break;
        }
    out.push_back(verdict_of(cbad.empty(), "higman.kills-commutators",
                             "tau vanishes on all " + std::to_string(n * n) + " basis commutators", cbad));
    return out;
}

template <ExactScalar S>
UnitWitness<S> change_of_form(const Algebra<S>& alg, const FrobeniusStructure<S>& fs,
                              const FrobeniusStructure<S>& fs2) {
    if (fs.lambda.size() != alg.dim() || fs2.lambda.size() != alg.dim())
        throw InconsistentStructuresError("structures belong to algebras of different dimension");
    Vec<S> u = fs.y * fs2.lambda;
    auto uinv = inverse_element(alg, u);
    if (!uinv) throw InconsistentStructuresError("the element u with lambda' = u lambda is not a unit");
    for (Index k = 0; k < alg.dim(); ++k) {
        Vec<S> b = alg.basis(k);
        if (fs.lambda.dot(multiply(alg, b, u)) != fs2.lambda(k))
            throw InternalInconsistencyError("lambda'(x) != lambda(x u)");
        Vec<S> conj = multiply(alg, multiply<S>(alg, u, fs.nakayama * b), *uinv);
        if (conj != fs2.nakayama * b) throw InternalInconsistencyError("alpha' != u alpha u^-1");
        if (fs2.tau * b != multiply<S>(alg, fs.tau * b, *uinv)) throw InternalInconsistencyError("tau' != tau u^-1");
    }
    return {u, *uinv};
}

template <ExactScalar S>
SocleFactorization<S> socle_factorization_check(const AnalyzedAlgebra<S>& an, const FrobeniusStructure<S>& fs) {
    const auto& alg = an.algebra;
    const Index n = alg.dim();
    SocleFactorization<S> out;
    const Mat<S>& rad = an.rad.basis;
    out.checks.push_back(verdict_of(is_zero(fs.tau * rad), "socle.tau-kills-radical", "tau(rad A) = 0"));
    bool ann = true;
    for (Index k = 0; k < rad.cols() && ann; ++k)
        ann = is_zero(regular_rep<S>(alg, rad.col(k), Side::Left) * fs.tau);
    out.checks.push_back(verdict_of(ann, "socle.radical-annihilates-image", "(rad A) tau(a) = 0"));

    Mat<S> left = socle(alg, Side::Left, an.rad).basis;
    Mat<S> right = socle(alg, Side::Right, an.rad).basis;
    Mat<S> img = column_basis(fs.tau);
    bool inside = true;
    for (Index c = 0; c < img.cols() && inside; ++c)
        inside = in_span<S>(left, img.col(c)) && in_span<S>(right, img.col(c));
    out.checks.push_back(verdict_of(inside, "socle.image-in-socle", "Im tau lies in the left and right socle"));
    const bool same = left.cols() == right.cols() && intersect_spans(left, right).cols() == left.cols();
    out.checks.push_back(verdict_of(same, "socle.left-equals-right",
                                    "dim left socle " + std::to_string(left.cols()) + ", right " +
                                        std::to_string(right.cols())));

    Mat<S> kill(n, rad.cols() + an.trace.commutator_basis.cols());
    kill << rad, an.trace.commutator_basis;
    auto q = make_quotient<S>(kill, n);
    out.representatives = q.section;
    out.coordinates = q.projection;
    out.tau_tilde = fs.tau * q.section;
    out.rank = out.tau_tilde.cols() ? rank(out.tau_tilde) : 0;
    const Index t_top = trace_space(an.top.algebra).t_dim();
    out.checks.push_back(verdict_of(q.dim() == t_top && is_zero(fs.tau * q.relations), "socle.tau-tilde-well-defined",
                                    "tau factors through T(A/rad A) of dimension " + std::to_string(t_top)));
    out.checks.push_back(verdict_of(out.rank == rank(fs.tau), "socle.rank-tau-tilde",
                                    "rank tau~ = rank tau = " + std::to_string(out.rank)));
    return out;
}

template <ExactScalar S>
std::optional<Vec<S>> find_frobenius_form(const Algebra<S>& alg, std::uint64_t seed, int trials) {
    auto works = [&](const Vec<S>& l) {
        Mat<S> g(alg.dim(), alg.dim());
        for (Index i = 0; i < alg.dim(); ++i) g.row(i) = (l.transpose() * alg.left_mult(i)).eval();
        return rank(g) == alg.dim();
    };
    for (Index k = alg.dim() - 1; k >= 0; --k)
        if (works(alg.basis(k))) return alg.basis(k);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Vec<S> l = random_element(alg, rng);
        if (works(l)) return l;
    }
    return std::nullopt;
}

#define FROBKIT_INSTANTIATE_FROBENIUS(S)                                                                            \
    template FrobeniusStructure<S> build_frobenius<S>(const Algebra<S>&, const Vec<S>&);                            \
    template Vec<S> higman_trace_apply<S>(const FrobeniusStructure<S>&, const Vec<S>&);                             \
    template Vec<S> higman_trace_alternative<S>(const Algebra<S>&, const FrobeniusStructure<S>&, const Vec<S>&);    \
    template Vec<S> casimir_apply<S>(const Algebra<S>&, const FrobeniusStructure<S>&, const Vec<S>&);               \
    template S bilinear_form<S>(const Algebra<S>&, const FrobeniusStructure<S>&, const Vec<S>&, const Vec<S>&);     \
    template Checks verify_frobenius_structure<S>(const Algebra<S>&, const FrobeniusStructure<S>&, int,             \
                                                  std::uint64_t);                                                   \
    template Checks verify_higman_lemma<S>(const Algebra<S>&, const FrobeniusStructure<S>&, int, std::uint64_t);    \
    template UnitWitness<S> change_of_form<S>(const Algebra<S>&, const FrobeniusStructure<S>&,                      \
                                              const FrobeniusStructure<S>&);                                        \
    template SocleFactorization<S> socle_factorization_check<S>(const AnalyzedAlgebra<S>&,                          \
                                                                const FrobeniusStructure<S>&);                      \
    template std::optional<Vec<S>> find_frobenius_form<S>(const Algebra<S>&, std::uint64_t, int);

FROBKIT_INSTANTIATE_FROBENIUS(Rational)
FROBKIT_INSTANTIATE_FROBENIUS(Zp)

}  // namespace frobkit
