#ifndef FROBKIT_ALGEBRA_HPP
#define FROBKIT_ALGEBRA_HPP

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobkit/linalg.hpp"

namespace frobkit {

/// Failure of an algebra/coalgebra axiom; `where` names the basis indices.
struct AxiomError : std::runtime_error {
    AxiomError(const std::string& axiom, const std::string& where)
        : std::runtime_error(axiom + " fails at " + where), axiom(axiom), where(where) {}
    std::string axiom;
    std::string where;
};

enum class Side { Left, Right };

/// Finite-dimensional associative unital algebra given by structure
/// constants. Stored as the left regular matrices L_{b_i}, so column j of
/// left_mult(i) holds the coordinates of b_i * b_j.
template <class S>
class Algebra {
public:
    Algebra() = default;

    /// Validates associativity and the unit laws; throws AxiomError.
    Algebra(FieldSpec field, std::vector<Mat<S>> left, Vec<S> unit, std::vector<std::string> names = {});

    /// Skips validation; for internally derived algebras whose axioms are
    /// inherited (quotients, corners, subalgebras of verified algebras).
    static Algebra trusted(FieldSpec field, std::vector<Mat<S>> left, Vec<S> unit,
                           std::vector<std::string> names = {});

    [[nodiscard]] const FieldSpec& field() const { return field_; }
    [[nodiscard]] Index dim() const { return static_cast<Index>(left_.size()); }
    [[nodiscard]] const Vec<S>& unit() const { return unit_; }
    [[nodiscard]] const Mat<S>& left_mult(Index i) const { return left_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const std::vector<Mat<S>>& left_mults() const { return left_; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] Vec<S> basis(Index i) const;
    [[nodiscard]] Vec<S> zero() const { return Vec<S>::Constant(dim(), scalar<S>(0, field_)); }
    [[nodiscard]] S one() const { return scalar<S>(1, field_); }
    [[nodiscard]] S zero_scalar() const { return scalar<S>(0, field_); }

private:
    FieldSpec field_;
    std::vector<Mat<S>> left_;
    Vec<S> unit_;
    std::vector<std::string> names_;
};

/// Builds the algebra from a product table; `product(i, j)` returns the
/// coordinates of b_i * b_j.
template <ExactScalar S>
Algebra<S> algebra_from_table(const FieldSpec& field, Index dim, const std::function<Vec<S>(Index, Index)>& product,
                              const Vec<S>& unit, std::vector<std::string> names = {});

template <class S>
struct Subspace {
    enum class Label { Radical, Socle, Center, Custom };
    Mat<S> basis;  // independent columns
    Label label = Label::Custom;
    [[nodiscard]] Index dim() const { return basis.cols(); }
};

template <class S>
struct TraceSpace {
    Mat<S> commutator_basis;  // columns span [A,A]
    Mat<S> representatives;   // standard basis vectors spanning the complement
    Mat<S> coordinates;       // t_dim x dim: a -> coordinates of T(a)
    Mat<S> projector;         // dim x dim, idempotent, kernel = [A,A]
    [[nodiscard]] Index t_dim() const { return coordinates.rows(); }
};

/// A/I materialised as a fresh algebra together with the linear maps.
template <class S>
struct QuotientAlgebra {
    Algebra<S> algebra;
    Mat<S> projection;  // dim(A/I) x dim(A)
    Mat<S> section;     // dim(A) x dim(A/I), standard-basis representatives
};

template <ExactScalar S>
Vec<S> multiply(const Algebra<S>& alg, const Vec<S>& a, const Vec<S>& b);

/// L_a (x -> a x) or R_a (x -> x a).
template <ExactScalar S>
Mat<S> regular_rep(const Algebra<S>& alg, const Vec<S>& a, Side side);

/// All n^2 commutators b_i b_j - b_j b_i as columns.
template <ExactScalar S>
Mat<S> commutator_spanning_set(const Algebra<S>& alg);

template <ExactScalar S>
TraceSpace<S> trace_space(const Algebra<S>& alg);

template <ExactScalar S>
Subspace<S> center(const Algebra<S>& alg);

/// Jacobson radical. Characteristic 0: kernel of the trace form
/// (a, b) -> Tr(L_ab). Characteristic p: iterated p-power trace refinement
/// on the left regular representation.
template <ExactScalar S>
Subspace<S> radical(const Algebra<S>& alg);

/// Left socle {a : rad * a = 0} or right socle {a : a * rad = 0}.
template <ExactScalar S>
Subspace<S> socle(const Algebra<S>& alg, Side side, const Subspace<S>& rad);

template <ExactScalar S>
Subspace<S> socle(const Algebra<S>& alg, Side side);

/// Basis of span{x y : x in X, y in Y}.
template <ExactScalar S>
Mat<S> product_span(const Algebra<S>& alg, const Mat<S>& x, const Mat<S>& y);

/// Smallest k with I^k = 0, or nullopt if I is not nilpotent.
template <ExactScalar S>
std::optional<Index> nilpotency_index(const Algebra<S>& alg, const Mat<S>& ideal);

template <ExactScalar S>
bool is_two_sided_ideal(const Algebra<S>& alg, const Mat<S>& ideal);

template <ExactScalar S>
QuotientAlgebra<S> quotient(const Algebra<S>& alg, const Mat<S>& ideal);

/// Subalgebra spanned by the columns of `basis` (must contain 1 and be
/// closed under multiplication; throws AxiomError otherwise).
template <ExactScalar S>
Algebra<S> subalgebra(const Algebra<S>& alg, const Mat<S>& basis);

/// Monic minimal polynomial of x inside the unital algebra eAe with unit e.
template <ExactScalar S>
Poly<S> minimal_polynomial(const Algebra<S>& alg, const Vec<S>& x, const Vec<S>& unit);

template <ExactScalar S>
std::optional<Vec<S>> inverse_element(const Algebra<S>& alg, const Vec<S>& a);

template <ExactScalar S>
bool is_unit(const Algebra<S>& alg, const Vec<S>& a);

template <ExactScalar S>
bool is_commutative(const Algebra<S>& alg);

/// Lie commutator ab - ba.
template <ExactScalar S>
Vec<S> commutator(const Algebra<S>& alg, const Vec<S>& a, const Vec<S>& b);

template <ExactScalar S>
Vec<S> random_element(const Algebra<S>& alg, std::mt19937_64& rng);

template <ExactScalar S>
Vec<S> power(const Algebra<S>& alg, const Vec<S>& a, unsigned k);

// ---------------------------------------------------------------------------
// Left modules given by action matrices.
// ---------------------------------------------------------------------------

template <class S>
struct ModuleRep {
    Index dim = 0;
    std::vector<Mat<S>> action;  // one dim x dim matrix per algebra basis element
};

/// Empty string when the representation respects unit and products,
/// otherwise a description naming the offending basis pair.
template <ExactScalar S>
std::string module_defect(const Algebra<S>& alg, const ModuleRep<S>& m);

/// Action matrix of an arbitrary element.
template <ExactScalar S>
Mat<S> act(const ModuleRep<S>& m, const Vec<S>& a);

template <ExactScalar S>
ModuleRep<S> regular_module(const Algebra<S>& alg);

template <ExactScalar S>
ModuleRep<S> direct_sum(const ModuleRep<S>& a, const ModuleRep<S>& b);

/// Submodule spanned by `basis` columns (assumed invariant), in that basis.
template <ExactScalar S>
ModuleRep<S> restrict_to_submodule(const ModuleRep<S>& m, const Mat<S>& basis);

/// Quotient module M / W for an invariant subspace W.
template <ExactScalar S>
ModuleRep<S> quotient_module(const ModuleRep<S>& m, const Mat<S>& sub);

/// Smallest invariant subspace containing the columns of `generators`.
template <ExactScalar S>
Mat<S> submodule_generated(const ModuleRep<S>& m, const Mat<S>& generators);

}  // namespace frobkit

#endif  // FROBKIT_ALGEBRA_HPP
