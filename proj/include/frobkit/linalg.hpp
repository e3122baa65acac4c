#ifndef FROBKIT_LINALG_HPP
#define FROBKIT_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "frobkit/scalar.hpp"

namespace frobkit {

using Index = Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
struct Rref {
    Mat<S> reduced;
    Index rank = 0;
    std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots are chosen as the first nonzero entry
/// in column order so every derived basis is reproducible.
template <ExactScalar S>
Rref<S> rref(const Mat<S>& m);

template <ExactScalar S>
Index rank(const Mat<S>& m);

/// Some x with a*x = b (free variables zero), or nullopt if inconsistent.
template <ExactScalar S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b);

/// Columns form a basis of the null space (one column per free variable).
template <ExactScalar S>
Mat<S> kernel(const Mat<S>& m);

template <ExactScalar S>
std::optional<Mat<S>> invert(const Mat<S>& m);

/// Pivot columns of `m`: an independent subset spanning the column space.
template <ExactScalar S>
Mat<S> column_basis(const Mat<S>& m);

/// Standard basis indices completing the column span of `basis` to the
/// whole space, in increasing order.
template <ExactScalar S>
std::vector<Index> complement_indices(const Mat<S>& basis, Index ambient);

template <ExactScalar S>
bool in_span(const Mat<S>& basis, const Vec<S>& v);

/// Basis of the intersection of two column spans.
template <ExactScalar S>
Mat<S> intersect_spans(const Mat<S>& a, const Mat<S>& b);

template <ExactScalar S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b);

/// Throws FieldMismatchError when entries carry different characteristics.
template <ExactScalar S>
void require_uniform_field(const Mat<S>& m);

/// A quotient V / W of a coordinate space, with a fixed complement.
///
/// `section` holds the chosen standard-basis representatives (ambient x q)
/// and `projection` maps ambient coordinates onto quotient coordinates
/// (q x ambient), killing W; projection * section = identity.
template <class S>
struct QuotientSpace {
    Mat<S> relations;  // basis of W
    Mat<S> section;
    Mat<S> projection;
    [[nodiscard]] Index dim() const { return section.cols(); }
    [[nodiscard]] Index ambient() const { return section.rows(); }
};

template <ExactScalar S>
QuotientSpace<S> make_quotient(const Mat<S>& spanning, Index ambient);

// --- polynomials ------------------------------------------------------------

/// Coefficients from the constant term upwards.
template <class S>
using Poly = std::vector<S>;

template <ExactScalar S>
S evaluate(const Poly<S>& poly, const S& x);

/// Distinct roots lying in the field, ascending by residue / first found.
///
/// Over F_p every residue is evaluated. Over Q the rational root theorem is
/// used; the divisor search is capped at 10^6 candidates.
template <ExactScalar S>
std::vector<S> field_roots(const Poly<S>& monic, const FieldSpec& field);

/// All roots of a monic squarefree polynomial that splits over the field.
/// Throws DoesNotSplitError when fewer than deg roots are found.
template <ExactScalar S>
std::vector<S> roots_of_split_squarefree(const Poly<S>& monic, const FieldSpec& field);

// --- inline helpers ---------------------------------------------------------

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

template <ExactScalar S>
Mat<S> identity(Index n, const FieldSpec& f) {
    Mat<S> m = Mat<S>::Constant(n, n, scalar<S>(0, f));
    for (Index i = 0; i < n; ++i) m(i, i) = scalar<S>(1, f);
    return m;
}

template <ExactScalar S>
Mat<S> zeros(Index r, Index c, const FieldSpec& f) {
    return Mat<S>::Constant(r, c, scalar<S>(0, f));
}

template <ExactScalar S>
Vec<S> zero_vec(Index n, const FieldSpec& f) {
    return Vec<S>::Constant(n, scalar<S>(0, f));
}

template <ExactScalar S>
Vec<S> unit_vec(Index n, Index i, const FieldSpec& f) {
    Vec<S> v = zero_vec<S>(n, f);
    v(i) = scalar<S>(1, f);
    return v;
}

template <ExactScalar S>
S trace(const Mat<S>& m) {
    S t(0);
    for (Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

/// Column vector printed as "[a, b, c]".
template <class Derived>
std::string format_vector(const Eigen::MatrixBase<Derived>& v) {
    std::string s = "[";
    for (Index i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v(i).to_string();
    }
    return s + "]";
}

}  // namespace frobkit

#endif  // FROBKIT_LINALG_HPP
