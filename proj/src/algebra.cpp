#include "frobkit/algebra.hpp"

namespace frobkit {

template <class S>
Algebra<S>::Algebra(FieldSpec field, std::vector<Mat<S>> left, Vec<S> unit, std::vector<std::string> names)
    : field_(field), left_(std::move(left)), unit_(std::move(unit)), names_(std::move(names)) {
    require_field_kind<S>(field_);
    const Index n = dim();
    if (n == 0) throw DimensionError("algebra of dimension 0");
    if (unit_.size() != n) throw DimensionError("unit vector has the wrong length");
    for (const auto& l : left_)
        if (l.rows() != n || l.cols() != n) throw DimensionError("structure matrix has the wrong shape");
    if (names_.empty())
        for (Index i = 0; i < n; ++i) names_.push_back("b" + std::to_string(i));
    // bind every entry to the field so unbound constants never leak out
    for (auto& l : left_)
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < n; ++i) l(i, j) = l(i, j) + zero_scalar();
    for (Index i = 0; i < n; ++i) unit_(i) = unit_(i) + zero_scalar();

    // associativity: (b_i b_j) b_k = b_i (b_j b_k)  <=>  L_{b_i b_j} = L_{b_i} L_{b_j}
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Mat<S> lhs = regular_rep<S>(*this, left_[i].col(j), Side::Left);
            Mat<S> rhs = left_[i] * left_[j];
            if (lhs != rhs) {
                for (Index k = 0; k < n; ++k)
                    if (lhs.col(k) != rhs.col(k))
                        throw AxiomError("associativity",
                                         "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + ")");
            }
        }
    Mat<S> lu = regular_rep<S>(*this, unit_, Side::Left);
    Mat<S> ru = regular_rep<S>(*this, unit_, Side::Right);
    for (Index i = 0; i < n; ++i) {
        if (lu.col(i) != basis(i)) throw AxiomError("left unit law", "i=" + std::to_string(i));
        if (ru.col(i) != basis(i)) throw AxiomError("right unit law", "i=" + std::to_string(i));
    }
}

template <class S>
Algebra<S> Algebra<S>::trusted(FieldSpec field, std::vector<Mat<S>> left, Vec<S> unit,
                               std::vector<std::string> names) {
    Algebra a;
    a.field_ = field;
    a.left_ = std::move(left);
    a.unit_ = std::move(unit);
    a.names_ = std::move(names);
    if (a.names_.empty())
        for (Index i = 0; i < a.dim(); ++i) a.names_.push_back("b" + std::to_string(i));
    return a;
}

template <class S>
Vec<S> Algebra<S>::basis(Index i) const {
    Vec<S> v = zero();
    v(i) = one();
    return v;
}

template <ExactScalar S>
Algebra<S> algebra_from_table(const FieldSpec& field, Index dim, const std::function<Vec<S>(Index, Index)>& product,
                              const Vec<S>& unit, std::vector<std::string> names) {
    std::vector<Mat<S>> left(static_cast<std::size_t>(dim), zeros<S>(dim, dim, field));
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j) {
            Vec<S> c = product(i, j);
            if (c.size() != dim) throw DimensionError("product vector has the wrong length");
            left[i].col(j) = c;
        }
    return Algebra<S>(field, std::move(left), unit, std::move(names));
}

template <ExactScalar S>
Vec<S> multiply(const Algebra<S>& alg, const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != alg.dim() || b.size() != alg.dim())
        throw DimensionError("multiply: vector length differs from algebra dimension");
    Vec<S> out = alg.zero();
    for (Index i = 0; i < alg.dim(); ++i)
        if (!a(i).is_zero()) out += a(i) * (alg.left_mult(i) * b);
    return out;
}

template <ExactScalar S>
Mat<S> regular_rep(const Algebra<S>& alg, const Vec<S>& a, Side side) {
    const Index n = alg.dim();
    if (a.size() != n) throw DimensionError("regular_rep: vector length differs from algebra dimension");
    Mat<S> out = zeros<S>(n, n, alg.field());
    if (side == Side::Left) {
        for (Index i = 0; i < n; ++i)
            if (!a(i).is_zero()) out += a(i) * alg.left_mult(i);
    } else {
        for (Index j = 0; j < n; ++j) out.col(j) = alg.left_mult(j) * a;
    }
    return out;
}

template <ExactScalar S>
Vec<S> commutator(const Algebra<S>& alg, const Vec<S>& a, const Vec<S>& b) {
    return multiply(alg, a, b) - multiply(alg, b, a);
}

template <ExactScalar S>
Mat<S> commutator_spanning_set(const Algebra<S>& alg) {
    const Index n = alg.dim();
    Mat<S> out = zeros<S>(n, n * n, alg.field());
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out.col(i * n + j) = alg.left_mult(i).col(j) - alg.left_mult(j).col(i);
    return out;
}

template <ExactScalar S>
TraceSpace<S> trace_space(const Algebra<S>& alg) {
    TraceSpace<S> t;
    auto q = make_quotient<S>(commutator_spanning_set(alg), alg.dim());
    t.commutator_basis = q.relations;
    t.representatives = q.section;
    t.coordinates = q.projection;
    t.projector = q.section * q.projection;
    return t;
}

template <ExactScalar S>
Subspace<S> center(const Algebra<S>& alg) {
    const Index n = alg.dim();
    Mat<S> stacked(n * n, n);
    for (Index i = 0; i < n; ++i)
        stacked.middleRows(i * n, n) = alg.left_mult(i) - regular_rep(alg, alg.basis(i), Side::Right);
    return {kernel(stacked), Subspace<S>::Label::Center};
}

namespace {

// Residues of an integer matrix modulo a small prime power.
using IntMat = std::vector<std::vector<std::uint64_t>>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::uint64_t mod) {
    const std::size_t n = a.size();
    IntMat c(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!a[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i][j] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(a[i][k]) * b[k][j] + c[i][j]) % mod);
        }
    return c;
}

IntMat int_pow(IntMat base, std::uint64_t e, std::uint64_t mod) {
    const std::size_t n = base.size();
    IntMat r(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1 % mod;
    while (e) {
        if (e & 1) r = int_mul(r, base, mod);
        e >>= 1;
        if (e) base = int_mul(base, base, mod);
    }
    return r;
}

// g_i(w) = Tr(L~^{p^i}) / p^i mod p, where L~ lifts L_w to integers in [0,p).
Zp generalized_trace(const Algebra<Zp>& alg, const Vec<Zp>& w, unsigned i) {
    const std::uint64_t p = alg.field().characteristic;
    std::uint64_t pi = 1;
    for (unsigned k = 0; k < i; ++k) pi *= p;
    const std::uint64_t mod = pi * p;
    Mat<Zp> l = regular_rep(alg, w, Side::Left);
    const auto n = static_cast<std::size_t>(alg.dim());
    IntMat x(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) x[r][c] = l(static_cast<Index>(r), static_cast<Index>(c)).residue();
    for (unsigned k = 0; k < i; ++k) x = int_pow(std::move(x), p, mod);
    std::uint64_t tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr = (tr + x[r][r]) % mod;
    if (tr % pi != 0) throw InternalInconsistencyError("p-power trace not divisible by p^i");
    return Zp(static_cast<long>((tr / pi) % p), p);
}

}  // namespace

template <ExactScalar S>
Subspace<S> radical(const Algebra<S>& alg) {
    const Index n = alg.dim();
    std::vector<S> traces;
    for (Index k = 0; k < n; ++k) traces.push_back(trace(alg.left_mult(k)));
    Mat<S> current = identity<S>(n, alg.field());

    if constexpr (ScalarTraits<S>::kind == FieldSpec::Kind::Rationals) {
        Mat<S> form(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                S t(0);
                const auto& c = alg.left_mult(i);
                for (Index k = 0; k < n; ++k)
                    if (!c(k, j).is_zero()) t += c(k, j) * traces[k];
                form(i, j) = t;
            }
        current = kernel(form);
    } else {
        const std::uint64_t p = alg.field().characteristic;
        unsigned levels = 0;
        for (std::uint64_t q = p; q <= static_cast<std::uint64_t>(n); q *= p) ++levels;
        for (unsigned i = 0; i <= levels && current.cols() > 0; ++i) {
            Mat<S> g(n, current.cols());
            for (Index j = 0; j < current.cols(); ++j)
                for (Index k = 0; k < n; ++k) {
                    Vec<S> w = multiply<S>(alg, current.col(j), alg.basis(k));
                    if (i == 0) {
                        S t = alg.zero_scalar();
                        for (Index r = 0; r < n; ++r)
                            if (!w(r).is_zero()) t += w(r) * traces[r];
                        g(k, j) = t;
                    } else {
                        g(k, j) = generalized_trace(alg, w, i);
                    }
                }
            current = column_basis<S>(current * kernel(g));
        }
    }
    Subspace<S> rad{current, Subspace<S>::Label::Radical};
    if (!is_two_sided_ideal(alg, rad.basis) || !nilpotency_index(alg, rad.basis))
        throw InternalInconsistencyError("computed radical is not a nilpotent ideal");
    return rad;
}

template <ExactScalar S>
Subspace<S> socle(const Algebra<S>& alg, Side side, const Subspace<S>& rad) {
    const Index n = alg.dim();
    if (rad.dim() == 0) return {identity<S>(n, alg.field()), Subspace<S>::Label::Socle};
    Mat<S> stacked(n * rad.dim(), n);
    for (Index k = 0; k < rad.dim(); ++k)
        stacked.middleRows(k * n, n) =
            regular_rep<S>(alg, rad.basis.col(k), side == Side::Left ? Side::Left : Side::Right);
    return {kernel(stacked), Subspace<S>::Label::Socle};
}

template <ExactScalar S>
Subspace<S> socle(const Algebra<S>& alg, Side side) {
    return socle(alg, side, radical(alg));
}

template <ExactScalar S>
Mat<S> product_span(const Algebra<S>& alg, const Mat<S>& x, const Mat<S>& y) {
    Mat<S> all(alg.dim(), x.cols() * y.cols());
    for (Index i = 0; i < x.cols(); ++i)
        for (Index j = 0; j < y.cols(); ++j) all.col(i * y.cols() + j) = multiply<S>(alg, x.col(i), y.col(j));
    return column_basis(all);
}

template <ExactScalar S>
std::optional<Index> nilpotency_index(const Algebra<S>& alg, const Mat<S>& ideal) {
    if (ideal.cols() == 0) return Index{0};
    Mat<S> p = ideal;
    Index k = 1;
    while (p.cols() > 0) {
        if (k > alg.dim()) return std::nullopt;
        p = product_span(alg, p, ideal);
        ++k;
    }
    return k;
}

template <ExactScalar S>
bool is_two_sided_ideal(const Algebra<S>& alg, const Mat<S>& ideal) {
    if (ideal.cols() == 0) return true;
    for (Index k = 0; k < alg.dim(); ++k) {
        Mat<S> l = alg.left_mult(k) * ideal;
        Mat<S> r = regular_rep<S>(alg, alg.basis(k), Side::Right) * ideal;
        for (Index c = 0; c < ideal.cols(); ++c)
            if (!in_span<S>(ideal, l.col(c)) || !in_span<S>(ideal, r.col(c))) return false;
    }
    return true;
}

template <ExactScalar S>
QuotientAlgebra<S> quotient(const Algebra<S>& alg, const Mat<S>& ideal) {
    if (!is_two_sided_ideal(alg, ideal)) throw InternalInconsistencyError("quotient by a non-ideal");
    auto q = make_quotient<S>(ideal, alg.dim());
    const Index m = q.dim();
    std::vector<Mat<S>> left;
    std::vector<std::string> names;
    for (Index i = 0; i < m; ++i) {
        Index src = 0;
        while (q.section(src, i).is_zero()) ++src;
        left.push_back(q.projection * alg.left_mult(src) * q.section);
        names.push_back(alg.names()[src]);
    }
    Vec<S> unit = q.projection * alg.unit();
    return {Algebra<S>::trusted(alg.field(), std::move(left), std::move(unit), std::move(names)), q.projection,
            q.section};
}

template <ExactScalar S>
Algebra<S> subalgebra(const Algebra<S>& alg, const Mat<S>& basis) {
    const Index m = basis.cols();
    auto unit = solve<S>(basis, Mat<S>(alg.unit()));
    if (!unit) throw AxiomError("subalgebra unit", "1 not in span");
    std::vector<Mat<S>> left(static_cast<std::size_t>(m), zeros<S>(m, m, alg.field()));
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            auto c = solve<S>(basis, Mat<S>(multiply<S>(alg, basis.col(i), basis.col(j))));
            if (!c) throw AxiomError("subalgebra closure", "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            left[i].col(j) = c->col(0);
        }
    return Algebra<S>::trusted(alg.field(), std::move(left), unit->col(0));
}

template <ExactScalar S>
Poly<S> minimal_polynomial(const Algebra<S>& alg, const Vec<S>& x, const Vec<S>& unit) {
    Mat<S> powers(alg.dim(), 1);
    powers.col(0) = unit;
    Vec<S> cur = unit;
    for (Index k = 1; k <= alg.dim() + 1; ++k) {
        cur = multiply(alg, x, cur);
        if (auto c = solve<S>(powers, Mat<S>(cur))) {
            Poly<S> mu;
            for (Index i = 0; i < k; ++i) mu.push_back(-(*c)(i, 0) + alg.zero_scalar());
            mu.push_back(alg.one());
            return mu;
        }
        powers.conservativeResize(Eigen::NoChange, k + 1);
        powers.col(k) = cur;
    }
    throw InternalInconsistencyError("minimal polynomial degree exceeds dimension");
}

template <ExactScalar S>
std::optional<Vec<S>> inverse_element(const Algebra<S>& alg, const Vec<S>& a) {
    auto x = solve<S>(regular_rep(alg, a, Side::Left), Mat<S>(alg.unit()));
    if (!x) return std::nullopt;
    Vec<S> inv = x->col(0);
    if (multiply(alg, inv, a) != alg.unit()) return std::nullopt;
    return inv;
}

template <ExactScalar S>
bool is_unit(const Algebra<S>& alg, const Vec<S>& a) {
    return rank<S>(regular_rep(alg, a, Side::Left)) == alg.dim();
}

template <ExactScalar S>
bool is_commutative(const Algebra<S>& alg) {
    for (Index i = 0; i < alg.dim(); ++i)
        for (Index j = i + 1; j < alg.dim(); ++j)
            if (alg.left_mult(i).col(j) != alg.left_mult(j).col(i)) return false;
    return true;
}

template <ExactScalar S>
Vec<S> random_element(const Algebra<S>& alg, std::mt19937_64& rng) {
    Vec<S> v(alg.dim());
    for (Index i = 0; i < alg.dim(); ++i) v(i) = random_scalar<S>(rng, alg.field());
    return v;
}

template <ExactScalar S>
Vec<S> power(const Algebra<S>& alg, const Vec<S>& a, unsigned k) {
    Vec<S> r = alg.unit();
    for (unsigned i = 0; i < k; ++i) r = multiply(alg, r, a);
    return r;
}

// --- modules ----------------------------------------------------------------

template <ExactScalar S>
Mat<S> act(const ModuleRep<S>& m, const Vec<S>& a) {
    if (a.size() != static_cast<Index>(m.action.size())) throw DimensionError("act: element length mismatch");
    Mat<S> out = Mat<S>::Zero(m.dim, m.dim);
    for (Index i = 0; i < a.size(); ++i)
        if (!a(i).is_zero()) out += a(i) * m.action[i];
    return out;
}

template <ExactScalar S>
std::string module_defect(const Algebra<S>& alg, const ModuleRep<S>& m) {
    const Index n = alg.dim();
    if (static_cast<Index>(m.action.size()) != n) return "expected " + std::to_string(n) + " action matrices";
    for (Index i = 0; i < n; ++i)
        if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim)
            return "action matrix " + std::to_string(i) + " has the wrong shape";
    if (act(m, alg.unit()) != identity<S>(m.dim, alg.field())) return "unit does not act as the identity";
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (m.action[i] * m.action[j] != act<S>(m, alg.left_mult(i).col(j)))
                return "action(b" + std::to_string(i) + ")action(b" + std::to_string(j) + ") != action(b" +
                       std::to_string(i) + "b" + std::to_string(j) + ")";
    return {};
}

template <ExactScalar S>
ModuleRep<S> regular_module(const Algebra<S>& alg) {
    return {alg.dim(), alg.left_mults()};
}

template <ExactScalar S>
ModuleRep<S> direct_sum(const ModuleRep<S>& a, const ModuleRep<S>& b) {
    ModuleRep<S> out{a.dim + b.dim, {}};
    for (std::size_t k = 0; k < a.action.size(); ++k) {
        Mat<S> m = Mat<S>::Zero(out.dim, out.dim);
        m.topLeftCorner(a.dim, a.dim) = a.action[k];
        m.bottomRightCorner(b.dim, b.dim) = b.action[k];
        out.action.push_back(std::move(m));
    }
    return out;
}

template <ExactScalar S>
ModuleRep<S> restrict_to_submodule(const ModuleRep<S>& m, const Mat<S>& basis) {
    ModuleRep<S> out{basis.cols(), {}};
    for (const auto& a : m.action) {
        auto c = solve<S>(basis, a * basis);
        if (!c) throw InternalInconsistencyError("restrict_to_submodule: subspace is not invariant");
        out.action.push_back(*c);
    }
    return out;
}

template <ExactScalar S>
ModuleRep<S> quotient_module(const ModuleRep<S>& m, const Mat<S>& sub) {
    auto q = make_quotient<S>(sub, m.dim);
    ModuleRep<S> out{q.dim(), {}};
    for (const auto& a : m.action) out.action.push_back(q.projection * a * q.section);
    return out;
}

template <ExactScalar S>
Mat<S> submodule_generated(const ModuleRep<S>& m, const Mat<S>& generators) {
    Mat<S> span = column_basis(generators);
    while (true) {
        Mat<S> all(m.dim, span.cols() * (1 + static_cast<Index>(m.action.size())));
        all.leftCols(span.cols()) = span;
        for (std::size_t k = 0; k < m.action.size(); ++k)
            all.middleCols(span.cols() * static_cast<Index>(k + 1), span.cols()) = m.action[k] * span;
        Mat<S> next = column_basis(all);
        if (next.cols() == span.cols()) return span;
        span = std::move(next);
    }
}

#define FROBKIT_INSTANTIATE_ALGEBRA(S)                                                                            \
    template class Algebra<S>;                                                                                     \
    template Algebra<S> algebra_from_table<S>(const FieldSpec&, Index, const std::function<Vec<S>(Index, Index)>&, \
                                              const Vec<S>&, std::vector<std::string>);                            \
    template Vec<S> multiply<S>(const Algebra<S>&, const Vec<S>&, const Vec<S>&);                                  \
    template Mat<S> regular_rep<S>(const Algebra<S>&, const Vec<S>&, Side);                                        \
    template Vec<S> commutator<S>(const Algebra<S>&, const Vec<S>&, const Vec<S>&);                                \
    template Mat<S> commutator_spanning_set<S>(const Algebra<S>&);                                                 \
    template TraceSpace<S> trace_space<S>(const Algebra<S>&);                                                      \
    template Subspace<S> center<S>(const Algebra<S>&);                                                             \
    template Subspace<S> radical<S>(const Algebra<S>&);                                                            \
    template Subspace<S> socle<S>(const Algebra<S>&, Side, const Subspace<S>&);                                    \
    template Subspace<S> socle<S>(const Algebra<S>&, Side);                                                        \
    template Mat<S> product_span<S>(const Algebra<S>&, const Mat<S>&, const Mat<S>&);                              \
    template std::optional<Index> nilpotency_index<S>(const Algebra<S>&, const Mat<S>&);                           \
    template bool is_two_sided_ideal<S>(const Algebra<S>&, const Mat<S>&);                                         \
    template QuotientAlgebra<S> quotient<S>(const Algebra<S>&, const Mat<S>&);                                     \
    template Algebra<S> subalgebra<S>(const Algebra<S>&, const Mat<S>&);                                           \
    template Poly<S> minimal_polynomial<S>(const Algebra<S>&, const Vec<S>&, const Vec<S>&);                       \
    template std::optional<Vec<S>> inverse_element<S>(const Algebra<S>&, const Vec<S>&);                           \
    template bool is_unit<S>(const Algebra<S>&, const Vec<S>&);                                                    \
    template bool is_commutative<S>(const Algebra<S>&);                                                            \
    template Vec<S> random_element<S>(const Algebra<S>&, std::mt19937_64&);                                        \
    template Vec<S> power<S>(const Algebra<S>&, const Vec<S>&, unsigned);                                          \
    template Mat<S> act<S>(const ModuleRep<S>&, const Vec<S>&);                                                    \
    template std::string module_defect<S>(const Algebra<S>&, const ModuleRep<S>&);                                 \
    template ModuleRep<S> regular_module<S>(const Algebra<S>&);                                                    \
    template ModuleRep<S> direct_sum<S>(const ModuleRep<S>&, const ModuleRep<S>&);                                 \
    template ModuleRep<S> restrict_to_submodule<S>(const ModuleRep<S>&, const Mat<S>&);                            \
    template ModuleRep<S> quotient_module<S>(const ModuleRep<S>&, const Mat<S>&);                                  \
    template Mat<S> submodule_generated<S>(const ModuleRep<S>&, const Mat<S>&);

FROBKIT_INSTANTIATE_ALGEBRA(Rational)
FROBKIT_INSTANTIATE_ALGEBRA(Zp)

}  // namespace frobkit
