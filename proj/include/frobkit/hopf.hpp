#ifndef FROBKIT_HOPF_HPP
#define FROBKIT_HOPF_HPP

#include "frobkit/frobenius.hpp"

namespace frobkit {

struct NotFrobeniusHopfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structure maps of a finite-dimensional Hopf algebra. Tensor-square
/// coordinates use index i*dim + j for b_i (x) b_j; column k of `comul` is
/// Delta(b_k).
template <class S>
struct HopfData {
    Algebra<S> algebra;
    Mat<S> comul;     // dim^2 x dim
    Vec<S> counit;    // epsilon(b_k)
    Mat<S> antipode;  // dim x dim
    std::string name;
    [[nodiscard]] Index dim() const { return algebra.dim(); }
};

/// Product in H (x) H of two tensor-square coordinate vectors.
template <ExactScalar S>
Vec<S> tensor_multiply(const Algebra<S>& alg, const Vec<S>& x, const Vec<S>& y);

/// The five axiom families; each failure names a basis index.
template <ExactScalar S>
Checks validate_hopf(const HopfData<S>& h);

/// Throws AxiomError on the first failing family.
template <ExactScalar S>
void require_valid_hopf(const HopfData<S>& h);

template <ExactScalar S>
bool is_involutory(const HopfData<S>& h);

template <class S>
struct IntegralSpace {
    Side side = Side::Right;
    Mat<S> basis;
};

/// Kernel of the stacked system; throws NotFrobeniusHopfError unless it is
/// one-dimensional. For the right side also checks S(right) = left.
template <ExactScalar S>
IntegralSpace<S> integrals(const HopfData<S>& h, Side side);

/// H* with multiplication dual to Delta, comultiplication dual to the
/// product, unit epsilon, counit evaluation at 1 and antipode S^T.
template <ExactScalar S>
HopfData<S> dual_hopf(const HopfData<S>& h);

template <class S>
struct HopfFrobenius {
    Vec<S> lambda;  // left integral of H*, coordinates on the dual basis
    Vec<S> Lambda;  // right integral of H with lambda(Lambda) = 1
    FrobeniusStructure<S> structure;
    Checks checks;
};

/// Throws NotFrobeniusHopfError when lambda(Lambda) = 0.
template <ExactScalar S>
HopfFrobenius<S> hopf_frobenius_lambda(const HopfData<S>& h);

template <class S>
struct DistinguishedIdeal {
    S generator;  // epsilon(S(Lambda_right)), a generator of the left integral line
    bool is_zero = true;
    Checks checks;
};

template <ExactScalar S>
DistinguishedIdeal<S> distinguished_ideal(const HopfData<S>& h);

template <class S>
struct SquaredAntipodeResult {
    std::optional<UnitWitness<S>> witness;
    Index solution_dim = 0;
    int searched = 0;
    Checks checks;
};

/// Unit u with u S^2(a) = a u, so S^2 = u^-1 (.) u; when found, checks that
/// u^-1 tau(u) is a scalar and equals epsilon(Lambda) for the normalized
/// Hopf form.
template <ExactScalar S>
SquaredAntipodeResult<S> s_squared_inner(const HopfData<S>& h, std::uint64_t seed, int trials);

/// Apply a linear map given on basis coordinates to an element's Delta.
template <ExactScalar S>
Mat<S> comul_matrix_of(const HopfData<S>& h, const Vec<S>& a);  // dim x dim, (i,j) coefficient of b_i (x) b_j

}  // namespace frobkit

#endif  // FROBKIT_HOPF_HPP
