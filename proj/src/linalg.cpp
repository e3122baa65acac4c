#include "frobkit/linalg.hpp"

#include <algorithm>

namespace frobkit {

template <ExactScalar S>
void require_uniform_field(const Mat<S>& m) {
    if constexpr (ScalarTraits<S>::kind == FieldSpec::Kind::PrimeField) {
        std::uint64_t p = 0;
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i) {
                auto q = m(i, j).modulus();
                if (!q) continue;
                if (p && q != p)
                    throw FieldMismatchError("matrix mixes F" + std::to_string(p) + " and F" + std::to_string(q));
                p = q;
            }
    }
}

template <ExactScalar S>
Rref<S> rref(const Mat<S>& m) {
    require_uniform_field(m);
    Rref<S> out;
    out.reduced = m;
    Mat<S>& a = out.reduced;
    const Index rows = a.rows(), cols = a.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (!a(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        const S inv = S(1) / a(r, c);
        for (Index j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const S f = a(i, c);
            for (Index j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

template <ExactScalar S>
Index rank(const Mat<S>& m) {
    return rref(m).rank;
}

template <ExactScalar S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows())
        throw DimensionError("solve: " + std::to_string(a.rows()) + " rows vs " + std::to_string(b.rows()));
    const Index n = a.cols();
    Mat<S> aug(a.rows(), n + b.cols());
    aug << a, b;
    auto rr = rref(aug);
    Mat<S> x = Mat<S>::Zero(n, b.cols());
    for (Index k = 0; k < rr.rank; ++k) {
        Index c = rr.pivots[k];
        if (c >= n) return std::nullopt;
        x.row(c) = rr.reduced.row(k).tail(b.cols());
    }
    return x;
}

template <ExactScalar S>
Mat<S> kernel(const Mat<S>& m) {
    auto rr = rref(m);
    const Index n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    Mat<S> k = Mat<S>::Zero(n, n - rr.rank);
    Index col = 0;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        k(f, col) = S(1);
        for (Index r = 0; r < rr.rank; ++r) k(rr.pivots[r], col) = -rr.reduced(r, f);
        ++col;
    }
    return k;
}

template <ExactScalar S>
std::optional<Mat<S>> invert(const Mat<S>& m) {
    if (m.rows() != m.cols())
        throw DimensionError("invert: non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const Index n = m.rows();
    Mat<S> aug(n, 2 * n);
    aug << m, Mat<S>::Identity(n, n);
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    return Mat<S>(rr.reduced.rightCols(n));
}

template <ExactScalar S>
Mat<S> column_basis(const Mat<S>& m) {
    auto rr = rref(m);
    Mat<S> out(m.rows(), rr.rank);
    for (Index k = 0; k < rr.rank; ++k) out.col(k) = m.col(rr.pivots[k]);
    return out;
}

template <ExactScalar S>
std::vector<Index> complement_indices(const Mat<S>& basis, Index ambient) {
    Mat<S> aug(ambient, basis.cols() + ambient);
    aug << basis, Mat<S>::Identity(ambient, ambient);
    auto rr = rref(aug);
    std::vector<Index> out;
    for (auto c : rr.pivots)
        if (c >= basis.cols()) out.push_back(c - basis.cols());
    return out;
}

template <ExactScalar S>
bool in_span(const Mat<S>& basis, const Vec<S>& v) {
    if (basis.cols() == 0) return is_zero(v);
    return solve<S>(basis, Mat<S>(v)).has_value();
}

template <ExactScalar S>
Mat<S> intersect_spans(const Mat<S>& a, const Mat<S>& b) {
    // x in both iff x = a*s = b*t; solve [a | -b] (s;t) = 0
    Mat<S> stacked(a.rows(), a.cols() + b.cols());
    stacked << a, -b;
    Mat<S> k = kernel(stacked);
    return column_basis<S>(a * k.topRows(a.cols()));
}

template <ExactScalar S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
    Mat<S> out = Mat<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

template <ExactScalar S>
QuotientSpace<S> make_quotient(const Mat<S>& spanning, Index ambient) {
    if (spanning.rows() != ambient) throw DimensionError("make_quotient: relation vectors have the wrong length");
    QuotientSpace<S> q;
    q.relations = column_basis(spanning);
    auto comp = complement_indices(q.relations, ambient);
    const Index w = q.relations.cols(), c = static_cast<Index>(comp.size());
    q.section = Mat<S>::Zero(ambient, c);
    for (Index k = 0; k < c; ++k) q.section(comp[k], k) = S(1);
    Mat<S> full(ambient, ambient);
    full << q.relations, q.section;
    auto inv = invert(full);
    if (!inv) throw InternalInconsistencyError("make_quotient: completed basis is singular");
    q.projection = inv->bottomRows(c);
    (void)w;
    return q;
}

template <ExactScalar S>
S evaluate(const Poly<S>& poly, const S& x) {
    S acc(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

constexpr long kRootSearchCap = 1'000'000;

std::vector<mpz_class> divisors(mpz_class n, long& budget) {
    n = abs(n);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (--budget < 0) throw std::runtime_error("rational root search exceeds 10^6 candidates");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

template <ExactScalar S>
std::vector<S> field_roots(const Poly<S>& monic, const FieldSpec& field) {
    std::vector<S> roots;
    if (monic.size() <= 1) return roots;
    if constexpr (ScalarTraits<S>::kind == FieldSpec::Kind::PrimeField) {
        const auto p = field.characteristic;
        if (p > 10'000'000) throw std::runtime_error("root search over F_p is exhaustive; p too large");
        for (std::uint64_t r = 0; r < p; ++r) {
            S x = scalar<S>(static_cast<long>(r), field);
            if (evaluate(monic, x).is_zero()) roots.push_back(x);
        }
    } else {
        // clear denominators
        mpz_class l = 1;
        for (const auto& c : monic) l = lcm(l, c.denominator());
        std::vector<mpz_class> ints;
        for (const auto& c : monic) ints.push_back(mpz_class(c.value() * l));
        std::size_t low = 0;
        while (low < ints.size() && ints[low] == 0) ++low;
        if (low > 0) roots.push_back(S(0));
        if (ints.size() - low <= 1) return roots;
        long budget = kRootSearchCap;
        auto num_divs = divisors(ints[low], budget);
        auto den_divs = divisors(ints.back(), budget);
        if (static_cast<long>(num_divs.size() * den_divs.size() * 2) > kRootSearchCap)
            throw std::runtime_error("rational root search exceeds 10^6 candidates");
        std::vector<S> seen;
        for (const auto& a : num_divs)
            for (const auto& b : den_divs)
                for (int sign : {1, -1}) {
                    S x(mpq_class(sign * a, b));
                    if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
                    seen.push_back(x);
                    if (evaluate(monic, x).is_zero()) roots.push_back(x);
                }
    }
    return roots;
}

template <ExactScalar S>
std::vector<S> roots_of_split_squarefree(const Poly<S>& monic, const FieldSpec& field) {
    if (monic.empty() || monic.back() != S(1)) throw std::invalid_argument("polynomial must be monic");
    auto roots = field_roots(monic, field);
    const auto degree = monic.size() - 1;
    if (roots.size() != degree)
        throw DoesNotSplitError("degree " + std::to_string(degree) + " polynomial has only " +
                                std::to_string(roots.size()) + " roots in " + field.to_string());
    return roots;
}

#define FROBKIT_INSTANTIATE_LINALG(S)                                                        \
    template void require_uniform_field<S>(const Mat<S>&);                                   \
    template Rref<S> rref<S>(const Mat<S>&);                                                 \
    template Index rank<S>(const Mat<S>&);                                                   \
    template std::optional<Mat<S>> solve<S>(const Mat<S>&, const Mat<S>&);                   \
    template Mat<S> kernel<S>(const Mat<S>&);                                                \
    template std::optional<Mat<S>> invert<S>(const Mat<S>&);                                 \
    template Mat<S> column_basis<S>(const Mat<S>&);                                          \
    template std::vector<Index> complement_indices<S>(const Mat<S>&, Index);                 \
    template bool in_span<S>(const Mat<S>&, const Vec<S>&);                                  \
    template Mat<S> intersect_spans<S>(const Mat<S>&, const Mat<S>&);                        \
    template Mat<S> kron<S>(const Mat<S>&, const Mat<S>&);                                   \
    template QuotientSpace<S> make_quotient<S>(const Mat<S>&, Index);                        \
    template S evaluate<S>(const Poly<S>&, const S&);                                        \
    template std::vector<S> field_roots<S>(const Poly<S>&, const FieldSpec&);                \
    template std::vector<S> roots_of_split_squarefree<S>(const Poly<S>&, const FieldSpec&);

FROBKIT_INSTANTIATE_LINALG(Rational)
FROBKIT_INSTANTIATE_LINALG(Zp)

}  // namespace frobkit
