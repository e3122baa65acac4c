#include "frobkit/hopf.hpp"

namespace frobkit {

namespace {

template <ExactScalar S>
Mat<S> reshape_square(const Vec<S>& v, Index d) {
    Mat<S> m(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) m(i, j) = v(i * d + j);
    return m;
}

template <ExactScalar S>
Vec<S> flatten_square(const Mat<S>& m) {
    const Index d = m.rows();
    Vec<S> v(d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) v(i * d + j) = m(i, j);
    return v;
}

std::string at(const char* what, Index i) { return std::string(what) + "=" + std::to_string(i); }

}  // namespace

template <ExactScalar S>
Mat<S> comul_matrix_of(const HopfData<S>& h, const Vec<S>& a) {
    return reshape_square<S>(h.comul * a, h.dim());
}

template <ExactScalar S>
Vec<S> tensor_multiply(const Algebra<S>& alg, const Vec<S>& x, const Vec<S>& y) {
    const Index d = alg.dim();
    Mat<S> xm = reshape_square(x, d), ym = reshape_square(y, d);
    Mat<S> z = zeros<S>(d, d, alg.field());
    for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q)
            if (!xm(p, q).is_zero()) z += xm(p, q) * (alg.left_mult(p) * ym * alg.left_mult(q).transpose());
    return flatten_square(z);
}

template <ExactScalar S>
Checks validate_hopf(const HopfData<S>& h) {
    const auto& alg = h.algebra;
    const Index d = h.dim();
    Checks out;
    if (h.comul.rows() != d * d || h.comul.cols() != d || h.counit.size() != d || h.antipode.rows() != d ||
        h.antipode.cols() != d) {
        out.push_back(fail("hopf.shapes", "structure maps have the wrong shape"));
        return out;
    }
    const S one = alg.one();

    std::string coassoc;
    for (Index k = 0; k < d && coassoc.empty(); ++k) {
        Mat<S> dk = comul_matrix_of(h, alg.basis(k));
        Vec<S> left = zero_vec<S>(d * d * d, alg.field()), right = left;
        for (Index p = 0; p < d; ++p)
            for (Index q = 0; q < d; ++q) {
                if (dk(p, q).is_zero()) continue;
                for (Index a = 0; a < d; ++a)
                    for (Index b = 0; b < d; ++b) {
                        const S& l = h.comul(a * d + b, p);
                        if (!l.is_zero()) left(a * d * d + b * d + q) += dk(p, q) * l;
                        const S& r = h.comul(a * d + b, q);
                        if (!r.is_zero()) right(p * d * d + a * d + b) += dk(p, q) * r;
                    }
            }
        if (left != right) coassoc = at("k", k);
    }
    out.push_back(verdict_of(coassoc.empty(), "hopf.coassociativity", "(Delta x id)Delta = (id x Delta)Delta", coassoc));

    std::string counit;
    for (Index k = 0; k < d && counit.empty(); ++k) {
        Mat<S> dk = comul_matrix_of(h, alg.basis(k));
        if (dk.transpose() * h.counit != alg.basis(k) || dk * h.counit != alg.basis(k)) counit = at("k", k);
    }
    out.push_back(verdict_of(counit.empty(), "hopf.counit", "(eps x id)Delta = id = (id x eps)Delta", counit));

    std::string mult;
    Vec<S> unit_sq = flatten_square<S>(alg.unit() * alg.unit().transpose());
    if (h.comul * alg.unit() != unit_sq) mult = "Delta(1) != 1 x 1";
    for (Index i = 0; i < d && mult.empty(); ++i)
        for (Index j = 0; j < d; ++j) {
            Vec<S> lhs = h.comul * alg.left_mult(i).col(j);
            Vec<S> rhs = tensor_multiply<S>(alg, h.comul.col(i), h.comul.col(j));
            if (lhs != rhs) {
                mult = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    out.push_back(verdict_of(mult.empty(), "hopf.comul-algebra-map", "Delta(ab) = Delta(a)Delta(b), Delta(1) = 1 x 1",
                             mult));

    std::string eps;
    if (h.counit.dot(alg.unit()) != one) eps = "eps(1) != 1";
    for (Index i = 0; i < d && eps.empty(); ++i)
        for (Index j = 0; j < d; ++j)
            if (h.counit.dot(alg.left_mult(i).col(j)) != h.counit(i) * h.counit(j)) {
                eps = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
    out.push_back(verdict_of(eps.empty(), "hopf.counit-algebra-map", "eps(ab) = eps(a)eps(b), eps(1) = 1", eps));

    std::string anti;
    for (Index k = 0; k < d && anti.empty(); ++k) {
        Mat<S> dk = comul_matrix_of(h, alg.basis(k));
        Vec<S> l = alg.zero(), r = alg.zero();
        for (Index p = 0; p < d; ++p)
            for (Index q = 0; q < d; ++q) {
                if (dk(p, q).is_zero()) continue;
                l += dk(p, q) * multiply<S>(alg, h.antipode.col(p), alg.basis(q));
                r += dk(p, q) * multiply<S>(alg, alg.basis(p), h.antipode.col(q));
            }
        Vec<S> target = h.counit(k) * alg.unit();
        if (l != target || r != target) anti = at("k", k);
    }
    out.push_back(verdict_of(anti.empty(), "hopf.antipode", "m(S x id)Delta = u eps = m(id x S)Delta", anti));
    return out;
}

template <ExactScalar S>
void require_valid_hopf(const HopfData<S>& h) {
    for (const auto& c : validate_hopf(h))
        if (c.verdict != Verdict::Pass) throw AxiomError(c.name, c.witness.empty() ? c.detail : c.witness);
}

template <ExactScalar S>
bool is_involutory(const HopfData<S>& h) {
    return h.antipode * h.antipode == identity<S>(h.dim(), h.algebra.field());
}

template <ExactScalar S>
IntegralSpace<S> integrals(const HopfData<S>& h, Side side) {
    const auto& alg = h.algebra;
    const Index d = h.dim();
    Mat<S> stacked(d * d, d);
    for (Index b = 0; b < d; ++b) {
        Mat<S> m = side == Side::Right ? regular_rep(alg, alg.basis(b), Side::Right) : alg.left_mult(b);
        stacked.middleRows(b * d, d) = m - h.counit(b) * identity<S>(d, alg.field());
    }
    IntegralSpace<S> out{side, kernel(stacked)};
    if (out.basis.cols() != 1)
        throw NotFrobeniusHopfError(std::string(side == Side::Right ? "right" : "left") + " integrals have dimension " +
                                    std::to_string(out.basis.cols()));
    if (side == Side::Right) {
        auto left = integrals(h, Side::Left);
        Vec<S> image = h.antipode * out.basis.col(0);
        if (is_zero(image) || !in_span<S>(left.basis, image))
            throw InternalInconsistencyError("S does not map right integrals onto left integrals");
    }
    return out;
}

template <ExactScalar S>
HopfData<S> dual_hopf(const HopfData<S>& h) {
    const auto& alg = h.algebra;
    const Index d = h.dim();
    std::vector<Mat<S>> left(static_cast<std::size_t>(d), zeros<S>(d, d, alg.field()));
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            for (Index k = 0; k < d; ++k) left[i](k, j) = h.comul(i * d + j, k);
    std::vector<std::string> names;
    for (const auto& n : alg.names()) names.push_back("f_" + n);
    HopfData<S> out;
    out.algebra = Algebra<S>(alg.field(), std::move(left), h.counit, std::move(names));
    out.comul = zeros<S>(d * d, d, alg.field());
    for (Index k = 0; k < d; ++k)
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) out.comul(i * d + j, k) = alg.left_mult(i)(k, j);
    out.counit = alg.unit();
    out.antipode = h.antipode.transpose();
    out.name = "dual of " + h.name;
    return out;
}

template <ExactScalar S>
HopfFrobenius<S> hopf_frobenius_lambda(const HopfData<S>& h) {
    const auto& alg = h.algebra;
    const Index d = h.dim();
    HopfFrobenius<S> out;
    Vec<S> Lambda = integrals(h, Side::Right).basis.col(0);
    HopfData<S> hs = dual_hopf(h);
    Vec<S> lambda = integrals(hs, Side::Left).basis.col(0);
    S pairing = lambda.dot(Lambda) + alg.zero_scalar();
    if (pairing.is_zero()) throw NotFrobeniusHopfError("lambda(Lambda) = 0; the integrals cannot be normalized");
    out.lambda = lambda * pairing.inverse();
    out.Lambda = Lambda;
    out.structure = build_frobenius(alg, out.lambda);
    out.checks.push_back(verdict_of(out.lambda.dot(out.Lambda) == alg.one(), "hopf.lambda-normalized",
                                    "lambda(Lambda) = 1", "Lambda=" + format_vector(out.Lambda)));

    Mat<S> dl = comul_matrix_of(h, out.Lambda);
    std::string dual_bad, tau_bad;
    for (Index k = 0; k < d; ++k) {
        Vec<S> a = alg.basis(k), rec = alg.zero(), tau = alg.zero();
        for (Index p = 0; p < d; ++p)
            for (Index q = 0; q < d; ++q) {
                if (dl(p, q).is_zero()) continue;
                Vec<S> sp = h.antipode.col(p);
                rec += (dl(p, q) * out.lambda.dot(multiply(alg, a, sp))) * alg.basis(q);
                tau += dl(p, q) * multiply(alg, multiply(alg, alg.basis(q), a), sp);
            }
        if (dual_bad.empty() && rec != a) dual_bad = "a=b" + std::to_string(k);
        if (tau_bad.empty() && tau != higman_trace_apply(out.structure, a)) tau_bad = "a=b" + std::to_string(k);
    }
    out.checks.push_back(verdict_of(dual_bad.empty(), "hopf.dual-bases-from-integral",
                                    "a = sum lambda(a S(Lambda_1)) Lambda_2 on every basis vector", dual_bad));
    out.checks.push_back(verdict_of(tau_bad.empty(), "hopf.tau-from-integral",
                                    "tau(a) = sum Lambda_2 a S(Lambda_1) on every basis vector", tau_bad));
    return out;
}

template <ExactScalar S>
DistinguishedIdeal<S> distinguished_ideal(const HopfData<S>& h) {
    Vec<S> right = integrals(h, Side::Right).basis.col(0);
    Vec<S> left = h.antipode * right;
    DistinguishedIdeal<S> out;
    out.generator = h.counit.dot(left) + h.algebra.zero_scalar();
    out.is_zero = out.generator.is_zero();
    S from_right = h.counit.dot(right) + h.algebra.zero_scalar();
    out.checks.push_back(verdict_of(from_right == out.generator, "hopf.distinguished-ideal-sides",
                                    "eps(left integral) = " + out.generator.to_string() +
                                        ", eps(right integral) = " + from_right.to_string()));
    return out;
}

template <ExactScalar S>
SquaredAntipodeResult<S> s_squared_inner(const HopfData<S>& h, std::uint64_t seed, int trials) {
    const auto& alg = h.algebra;
    const Index d = h.dim();
    Mat<S> s2 = h.antipode * h.antipode;
    Mat<S> stacked(d * d, d);
    for (Index a = 0; a < d; ++a)
        stacked.middleRows(a * d, d) =
            regular_rep<S>(alg, s2.col(a), Side::Right) - alg.left_mult(a);
    Mat<S> sol = kernel(stacked);
    SquaredAntipodeResult<S> out;
    out.solution_dim = sol.cols();

    auto attempt = [&](const Vec<S>& u) {
        ++out.searched;
        if (auto inv = inverse_element(alg, u)) {
            out.witness = UnitWitness<S>{u, *inv};
            return true;
        }
        return false;
    };
    bool found = false;
    if (s2 == identity<S>(d, alg.field())) found = attempt(alg.unit());
    for (Index c = 0; c < sol.cols() && !found; ++c) found = attempt(sol.col(c));
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials && !found && sol.cols() > 0; ++t) {
        Vec<S> u = alg.zero();
        for (Index c = 0; c < sol.cols(); ++c) u += random_scalar<S>(rng, alg.field()) * sol.col(c);
        found = attempt(u);
    }
    if (!found) {
        out.checks.push_back({"hopf.s-squared-inner", Verdict::Inconclusive,
                              "no unit found among " + std::to_string(out.searched) + " candidates in a " +
                                  std::to_string(sol.cols()) + "-dimensional solution space",
                              {}});
        return out;
    }
    const auto& w = *out.witness;
    out.checks.push_back(pass("hopf.s-squared-inner", "S^2 = u^-1 (.) u", "u=" + format_vector(w.u)));
    try {
        auto hf = hopf_frobenius_lambda(h);
        Vec<S> q = multiply<S>(alg, w.u_inverse, higman_trace_apply(hf.structure, w.u));
        Vec<S> expected = (h.counit.dot(hf.Lambda) + alg.zero_scalar()) * alg.unit();
        out.checks.push_back(verdict_of(q == expected, "hopf.u-inverse-tau-u",
                                        "u^-1 tau(u) = eps(Lambda) 1", "u^-1 tau(u)=" + format_vector(q)));
    } catch (const NotFrobeniusHopfError& e) {
        out.checks.push_back(not_applicable("hopf.u-inverse-tau-u", e.what()));
    }
    return out;
}

#define FROBKIT_INSTANTIATE_HOPF(S)                                                           \
    template Mat<S> comul_matrix_of<S>(const HopfData<S>&, const Vec<S>&);                    \
    template Vec<S> tensor_multiply<S>(const Algebra<S>&, const Vec<S>&, const Vec<S>&);      \
    template Checks validate_hopf<S>(const HopfData<S>&);                                     \
    template void require_valid_hopf<S>(const HopfData<S>&);                                  \
    template bool is_involutory<S>(const HopfData<S>&);                                       \
    template IntegralSpace<S> integrals<S>(const HopfData<S>&, Side);                         \
    template HopfData<S> dual_hopf<S>(const HopfData<S>&);                                    \
    template HopfFrobenius<S> hopf_frobenius_lambda<S>(const HopfData<S>&);                   \
    template DistinguishedIdeal<S> distinguished_ideal<S>(const HopfData<S>&);                \
    template SquaredAntipodeResult<S> s_squared_inner<S>(const HopfData<S>&, std::uint64_t, int);

FROBKIT_INSTANTIATE_HOPF(Rational)
FROBKIT_INSTANTIATE_HOPF(Zp)

}  // namespace frobkit
