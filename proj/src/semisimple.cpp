#include "frobkit/semisimple.hpp"

#include <cmath>

namespace frobkit {

template <ExactScalar S>
bool is_idempotent(const Algebra<S>& alg, const Vec<S>& e) {
    return multiply(alg, e, e) == e;
}

template <ExactScalar S>
std::vector<Vec<S>> central_idempotents(const Algebra<S>& alg) {
    Mat<S> z = center(alg).basis;
    std::vector<Vec<S>> blocks{alg.unit()};
    for (Index c = 0; c < z.cols(); ++c) {
        std::vector<Vec<S>> next;
        for (const auto& f : blocks) {
            Vec<S> zf = multiply<S>(alg, z.col(c), f);
            Poly<S> mu = minimal_polynomial(alg, zf, f);
            if (mu.size() <= 2) {
                next.push_back(f);
                continue;
            }
            auto roots = roots_of_split_squarefree(mu, alg.field());
            for (std::size_t r = 0; r < roots.size(); ++r) {
                Vec<S> e = f;
                for (std::size_t s = 0; s < roots.size(); ++s) {
                    if (s == r) continue;
                    Vec<S> factor = (zf - roots[s] * f) * (roots[r] - roots[s]).inverse();
                    e = multiply(alg, e, factor);
                }
                next.push_back(e);
            }
        }
        blocks = std::move(next);
    }
    return blocks;
}

namespace {

template <ExactScalar S>
Mat<S> corner_basis(const Algebra<S>& alg, const Vec<S>& e) {
    Mat<S> all(alg.dim(), alg.dim());
    for (Index k = 0; k < alg.dim(); ++k) all.col(k) = multiply(alg, multiply(alg, e, alg.basis(k)), e);
    return column_basis(all);
}

// Idempotent g in the left ideal C*y of the corner C = eAe with v g = v for
// every v in C*y. Exists because C is simple; g is a proper sub-idempotent.
template <ExactScalar S>
std::optional<Vec<S>> right_unit_of_left_ideal(const Algebra<S>& alg, const Mat<S>& corner, const Vec<S>& y) {
    Mat<S> gens(alg.dim(), corner.cols());
    for (Index k = 0; k < corner.cols(); ++k) gens.col(k) = multiply<S>(alg, corner.col(k), y);
    Mat<S> ideal = column_basis(gens);
    const Index m = ideal.cols(), n = alg.dim();
    if (m == 0) return std::nullopt;
    Mat<S> lhs(n * m, m);
    Mat<S> rhs(n * m, 1);
    for (Index t = 0; t < m; ++t) {
        for (Index j = 0; j < m; ++j) lhs.block(t * n, j, n, 1) = multiply<S>(alg, ideal.col(t), ideal.col(j));
        rhs.block(t * n, 0, n, 1) = ideal.col(t);
    }
    auto c = solve<S>(lhs, rhs);
    if (!c) return std::nullopt;
    Vec<S> g = ideal * c->col(0);
    if (!is_idempotent(alg, g)) throw InternalInconsistencyError("right unit of a left ideal is not idempotent");
    return g;
}

// x in the corner with a minimal polynomial of degree >= 2 having a root.
template <ExactScalar S>
std::optional<std::pair<Vec<S>, S>> splitting_element(const Algebra<S>& alg, const Mat<S>& corner, const Vec<S>& e) {
    auto try_one = [&](const Vec<S>& x) -> std::optional<std::pair<Vec<S>, S>> {
        Poly<S> mu = minimal_polynomial(alg, x, e);
        if (mu.size() < 3) return std::nullopt;
        auto roots = field_roots(mu, alg.field());
        if (roots.empty()) return std::nullopt;
        return std::make_pair(x, roots.front());
    };
    const Index c = corner.cols();
    for (Index i = 0; i < c; ++i)
        if (auto r = try_one(corner.col(i))) return r;
    for (Index i = 0; i < c; ++i)
        for (Index j = i + 1; j < c; ++j)
            if (auto r = try_one(corner.col(i) + corner.col(j))) return r;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < 64; ++trial) {
        Vec<S> x = alg.zero();
        for (Index i = 0; i < c; ++i) x += random_scalar<S>(rng, alg.field()) * corner.col(i);
        if (auto r = try_one(x)) return r;
    }
    return std::nullopt;
}

template <ExactScalar S>
Vec<S> primitive_in_block(const Algebra<S>& alg, const Vec<S>& f) {
    Vec<S> e = f;
    while (true) {
        Mat<S> corner = corner_basis(alg, e);
        if (corner.cols() == 1) return e;
        auto found = splitting_element(alg, corner, e);
        if (!found)
            throw DoesNotSplitError("a " + std::to_string(corner.cols()) +
                                    "-dimensional corner has no element with a root in " + alg.field().to_string());
        Vec<S> y = found->first - found->second * e;
        auto g = right_unit_of_left_ideal(alg, corner, y);
        if (!g || is_zero(*g) || *g == e) throw InternalInconsistencyError("corner reduction made no progress");
        e = *g;
    }
}

}  // namespace

template <ExactScalar S>
PrimitiveIdempotentSet<S> split_semisimple(const Algebra<S>& alg) {
    PrimitiveIdempotentSet<S> out;
    auto blocks = central_idempotents(alg);
    int label = 0;
    for (const auto& f : blocks) {
        Index block_dim = corner_basis(alg, f).cols();
        auto n = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(block_dim))));
        if (n * n != block_dim)
            throw DoesNotSplitError("central block of dimension " + std::to_string(block_dim) +
                                    " is not a full matrix algebra over " + alg.field().to_string());
        out.idempotents.push_back(primitive_in_block(alg, f));
        out.block_labels.push_back(label++);
        out.simple_dims.push_back(n);
    }
    return out;
}

template <ExactScalar S>
PrimitiveIdempotentSet<S> lift_idempotents(const Algebra<S>& alg, const QuotientAlgebra<S>& top,
                                           const PrimitiveIdempotentSet<S>& on_top, Index nilpotency) {
    PrimitiveIdempotentSet<S> out = on_top;
    out.idempotents.clear();
    Vec<S> fixed = alg.zero();
    for (const auto& ebar : on_top.idempotents) {
        Vec<S> comp = alg.unit() - fixed;
        Vec<S> x = multiply(alg, multiply<S>(alg, comp, top.section * ebar), comp);
        Index steps = 0;
        while (!is_idempotent(alg, x)) {
            if (++steps > nilpotency + 1) throw InternalInconsistencyError("idempotent lifting did not converge");
            Vec<S> x2 = multiply(alg, x, x);
            Vec<S> x3 = multiply(alg, x2, x);
            x = scalar<S>(3, alg.field()) * x2 - scalar<S>(2, alg.field()) * x3;
        }
        if (top.projection * x != ebar) throw InternalInconsistencyError("lifted idempotent changed modulo rad");
        fixed += x;
        out.idempotents.push_back(x);
    }
    return out;
}

template <ExactScalar S>
ModuleRep<S> left_ideal_module(const Algebra<S>& alg, const Vec<S>& e) {
    Mat<S> gens(alg.dim(), alg.dim());
    for (Index k = 0; k < alg.dim(); ++k) gens.col(k) = multiply(alg, alg.basis(k), e);
    Mat<S> basis = column_basis(gens);
    return restrict_to_submodule(regular_module(alg), basis);
}

template <ExactScalar S>
std::vector<ModuleRep<S>> simples(const Algebra<S>& alg, const QuotientAlgebra<S>& top,
                                  const PrimitiveIdempotentSet<S>& on_top) {
    std::vector<ModuleRep<S>> out;
    const Algebra<S>& q = top.algebra;
    for (const auto& e : on_top.idempotents) {
        ModuleRep<S> over_top = left_ideal_module(q, e);
        ModuleRep<S> m{over_top.dim, {}};
        for (Index j = 0; j < alg.dim(); ++j) m.action.push_back(act<S>(over_top, top.projection.col(j)));
        out.push_back(std::move(m));
    }
    return out;
}

template <class S>
const SplitData<S>& AnalyzedAlgebra<S>::require_split() const {
    if (!split) throw DoesNotSplitError(split_error);
    return *split;
}

template <ExactScalar S>
AnalyzedAlgebra<S> analyze(const Algebra<S>& alg) {
    AnalyzedAlgebra<S> an;
    an.algebra = alg;
    an.trace = trace_space(alg);
    an.rad = radical(alg);
    an.rad_nilpotency = *nilpotency_index(alg, an.rad.basis);
    an.center = center(alg);
    an.top = quotient(alg, an.rad.basis);
    try {
        SplitData<S> sd;
        sd.top_idempotents = split_semisimple(an.top.algebra);
        sd.idempotents = lift_idempotents(alg, an.top, sd.top_idempotents, an.rad_nilpotency);
        sd.simples = simples(alg, an.top, sd.top_idempotents);
        an.split = std::move(sd);
    } catch (const DoesNotSplitError& e) {
        an.split_error = e.what();
    } catch (const std::runtime_error& e) {
        an.split_error = std::string("splitting search aborted: ") + e.what();
    }
    return an;
}

template <ExactScalar S>
std::vector<Mat<S>> radical_filtration(const AnalyzedAlgebra<S>& an, const ModuleRep<S>& m) {
    std::vector<Mat<S>> layers{identity<S>(m.dim, an.algebra.field())};
    std::vector<Mat<S>> rad_actions;
    for (Index k = 0; k < an.rad.dim(); ++k) rad_actions.push_back(act<S>(m, an.rad.basis.col(k)));
    while (layers.back().cols() > 0) {
        const Mat<S>& cur = layers.back();
        Mat<S> gens(m.dim, cur.cols() * static_cast<Index>(rad_actions.size()));
        for (std::size_t k = 0; k < rad_actions.size(); ++k)
            gens.middleCols(static_cast<Index>(k) * cur.cols(), cur.cols()) = rad_actions[k] * cur;
        Mat<S> next = column_basis(gens);
        if (next.cols() == cur.cols()) throw InternalInconsistencyError("radical filtration is not decreasing");
        layers.push_back(std::move(next));
    }
    return layers;
}

template <ExactScalar S>
std::vector<long> composition_factors(const AnalyzedAlgebra<S>& an, const ModuleRep<S>& m) {
    const auto& sd = an.require_split();
    auto layers = radical_filtration(an, m);
    std::vector<long> mult(sd.idempotents.size(), 0);
    Index total = 0;
    for (std::size_t i = 0; i < sd.idempotents.size(); ++i) {
        Mat<S> e = act<S>(m, sd.idempotents.idempotents[i]);
        for (std::size_t k = 0; k + 1 < layers.size(); ++k) {
            Index hi = layers[k].cols() ? rank<S>(e * layers[k]) : 0;
            Index lo = layers[k + 1].cols() ? rank<S>(e * layers[k + 1]) : 0;
            mult[i] += static_cast<long>(hi - lo);
        }
        if (mult[i] != static_cast<long>(rank<S>(e)))
            throw InternalInconsistencyError("layer count disagrees with rank of the idempotent");
        total += mult[i] * sd.simples[i].dim;
    }
    if (total != m.dim) throw InternalInconsistencyError("composition factors do not account for the dimension");
    return mult;
}

#define FROBKIT_INSTANTIATE_SEMISIMPLE(S)                                                                            \
    template bool is_idempotent<S>(const Algebra<S>&, const Vec<S>&);                                                \
    template std::vector<Vec<S>> central_idempotents<S>(const Algebra<S>&);                                          \
    template PrimitiveIdempotentSet<S> split_semisimple<S>(const Algebra<S>&);                                       \
    template PrimitiveIdempotentSet<S> lift_idempotents<S>(const Algebra<S>&, const QuotientAlgebra<S>&,             \
                                                           const PrimitiveIdempotentSet<S>&, Index);                 \
    template ModuleRep<S> left_ideal_module<S>(const Algebra<S>&, const Vec<S>&);                                    \
    template std::vector<ModuleRep<S>> simples<S>(const Algebra<S>&, const QuotientAlgebra<S>&,                      \
                                                  const PrimitiveIdempotentSet<S>&);                                 \
    template struct AnalyzedAlgebra<S>;                                                                              \
    template AnalyzedAlgebra<S> analyze<S>(const Algebra<S>&);                                                       \
    template std::vector<Mat<S>> radical_filtration<S>(const AnalyzedAlgebra<S>&, const ModuleRep<S>&);              \
    template std::vector<long> composition_factors<S>(const AnalyzedAlgebra<S>&, const ModuleRep<S>&);

FROBKIT_INSTANTIATE_SEMISIMPLE(Rational)
FROBKIT_INSTANTIATE_SEMISIMPLE(Zp)

}  // namespace frobkit
