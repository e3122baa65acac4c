#ifndef FROBKIT_FROBENIUS_HPP
#define FROBKIT_FROBENIUS_HPP

#include <cstdint>

#include "frobkit/check.hpp"
#include "frobkit/semisimple.hpp"

namespace frobkit {

struct NotFrobeniusError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentStructuresError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frobenius form lambda with its derived data. The x-basis is the
/// algebra's own basis; column i of `y` is the dual vector y_i, so that
/// lambda(b_j y_i) = delta_ij.
template <class S>
struct FrobeniusStructure {
    Vec<S> lambda;    // lambda(b_i)
    Mat<S> gram;      // gram(i,j) = lambda(b_i b_j)
    Mat<S> y;         // dual basis, as columns
    Mat<S> nakayama;  // alpha, with lambda(ab) = lambda(b alpha(a))
    Mat<S> tau;       // Higman trace a -> sum_i b_i a y_i
};

template <class S>
struct UnitWitness {
    Vec<S> u;
    Vec<S> u_inverse;
};

/// Throws NotFrobeniusError if the Gram matrix is singular, and
/// InternalInconsistencyError if the Nakayama map fails to be an automorphism.
template <ExactScalar S>
FrobeniusStructure<S> build_frobenius(const Algebra<S>& alg, const Vec<S>& lambda);

template <ExactScalar S>
Vec<S> higman_trace_apply(const FrobeniusStructure<S>& fs, const Vec<S>& a);

/// sum_i y_i a alpha(x_i), the second expression for tau.
template <ExactScalar S>
Vec<S> higman_trace_alternative(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a);

/// sum_i y_i a x_i.
template <ExactScalar S>
Vec<S> casimir_apply(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a);

/// lambda(a b).
template <ExactScalar S>
S bilinear_form(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, const Vec<S>& a, const Vec<S>& b);

/// Dual-basis reconstruction, Nakayama automorphism, the second formula for
/// tau, Casimir centrality and Z(A)-linearity of tau.
template <ExactScalar S>
Checks verify_frobenius_structure(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, int trials,
                                  std::uint64_t seed);

/// The five trace-lemma identities on `trials` seeded random pairs.
template <ExactScalar S>
Checks verify_higman_lemma(const Algebra<S>& alg, const FrobeniusStructure<S>& fs, int trials, std::uint64_t seed);

/// u with lambda' = u lambda, i.e. lambda'(x) = lambda(x u); also checks the
/// induced relations between the Nakayama maps and the Higman traces.
/// Throws InconsistentStructuresError when no unit u exists.
template <ExactScalar S>
UnitWitness<S> change_of_form(const Algebra<S>& alg, const FrobeniusStructure<S>& fs,
                              const FrobeniusStructure<S>& fs2);

template <class S>
struct SocleFactorization {
    Checks checks;
    Mat<S> representatives;  // basis of a complement of rad + [A,A] in A
    Mat<S> coordinates;      // A -> T(A/rad) coordinates
    Mat<S> tau_tilde;        // dim(A) x dim T(A/rad)
    Index rank = 0;
};

template <ExactScalar S>
SocleFactorization<S> socle_factorization_check(const AnalyzedAlgebra<S>& an, const FrobeniusStructure<S>& fs);

/// Searches for a Frobenius form: coordinate functionals first, then seeded
/// random forms. Returns nullopt when none of the candidates works.
template <ExactScalar S>
std::optional<Vec<S>> find_frobenius_form(const Algebra<S>& alg, std::uint64_t seed, int trials);

}  // namespace frobkit

#endif  // FROBKIT_FROBENIUS_HPP
