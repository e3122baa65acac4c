#ifndef FROBKIT_KTHEORY_HPP
#define FROBKIT_KTHEORY_HPP

#include <random>

#include "frobkit/frobenius.hpp"

namespace frobkit {

struct NotIdempotentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// n x n matrix with entries in A, stored row-major.
template <class S>
struct AlgMatrix {
    Index n = 0;
    std::vector<Vec<S>> entries;

    Vec<S>& at(Index i, Index j) { return entries[static_cast<std::size_t>(i * n + j)]; }
    const Vec<S>& at(Index i, Index j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

/// Idempotent matrix e presenting P = A^n e (row vectors, right multiplication).
template <class S>
using IdempotentPresentation = AlgMatrix<S>;

template <ExactScalar S>
AlgMatrix<S> alg_matrix_zero(const Algebra<S>& alg, Index n);

template <ExactScalar S>
AlgMatrix<S> alg_matrix_identity(const Algebra<S>& alg, Index n);

template <ExactScalar S>
AlgMatrix<S> alg_matrix_multiply(const Algebra<S>& alg, const AlgMatrix<S>& x, const AlgMatrix<S>& y);

template <ExactScalar S>
bool is_idempotent_matrix(const Algebra<S>& alg, const AlgMatrix<S>& e);

/// Block-diagonal join e (+) f.
template <ExactScalar S>
AlgMatrix<S> block_join(const Algebra<S>& alg, const AlgMatrix<S>& e, const AlgMatrix<S>& f);

/// 1 x 1 presentation A e for an idempotent e of A.
template <ExactScalar S>
AlgMatrix<S> single(const Vec<S>& e);

/// sum_i e_ii as an element of A (a representative of r(P)).
template <ExactScalar S>
Vec<S> hs_rank_element(const Algebra<S>& alg, const AlgMatrix<S>& e);

/// r(P) in trace-space coordinates; throws NotIdempotentError if e^2 != e.
template <ExactScalar S>
Vec<S> hs_rank(const Algebra<S>& alg, const TraceSpace<S>& t, const AlgMatrix<S>& e);

/// chi_V(b_k) = Tr(action of b_k).
template <ExactScalar S>
Vec<S> character(const ModuleRep<S>& v);

/// The form b -> Tr(L_b R_a).
template <ExactScalar S>
Vec<S> t_map(const Algebra<S>& alg, const Vec<S>& a);

/// P = A^n e as a left module, on a basis of the image of right
/// multiplication by e.
template <ExactScalar S>
ModuleRep<S> presentation_module(const Algebra<S>& alg, const AlgMatrix<S>& e);

template <class S>
struct RandomPresentation {
    AlgMatrix<S> e;         // conjugated
    AlgMatrix<S> diagonal;  // before conjugation
};

/// Diagonal idempotent with entries from {0, 1, primitive idempotents},
/// conjugated by a product of elementary matrices I + c E_ij.
template <ExactScalar S>
RandomPresentation<S> random_presentation(const AnalyzedAlgebra<S>& an, std::mt19937_64& rng, Index max_n = 3);

struct CartanData {
    std::vector<std::vector<long>> matrix;  // C_ij = [P_i : S_j]
    Index rank_char = 0;                    // rank of C over the prime field
    mpz_class det;
    std::string convention = "C_ij = [P_i : S_j] = dim e_j A e_i";

    [[nodiscard]] bool is_identity() const;
};

/// Throws InternalInconsistencyError when dim e_j A e_i disagrees with the
/// radical-layer count, DoesNotSplitError when A is not split.
template <ExactScalar S>
CartanData cartan_matrix(const AnalyzedAlgebra<S>& an);

/// chi_P = t(r(P)) as linear forms on A.
template <ExactScalar S>
Check verify_bass_diagram(const AnalyzedAlgebra<S>& an, const AlgMatrix<S>& e, const std::string& label);

/// r~ and chi~ on T(A/rad A) have full rank (splitting-field isomorphisms).
template <ExactScalar S>
Checks verify_splitting_isomorphisms(const AnalyzedAlgebra<S>& an);

/// PIM multiplicities of P, read off from the top P / rad P.
template <ExactScalar S>
std::vector<long> k0_class(const AnalyzedAlgebra<S>& an, const AlgMatrix<S>& e);

template <class S>
struct MainTheoremReport {
    Checks checks;
    Index rank_c = 0;
    Index rank_tau = 0;
    Tri semisimple = Tri::Inconclusive;  // (i)
    Tri identity_cartan = Tri::Inconclusive;  // (ii)
    Tri unimodular_cartan = Tri::Inconclusive;  // (iii)
    Tri tau_condition = Tri::Inconclusive;
    std::string tau_witness;
    CartanData cartan;
};

/// Rank equality and the three equivalent conditions. `hopf_u` is the unit
/// conjugating S^2, tried as an extra certificate when available.
template <ExactScalar S>
MainTheoremReport<S> verify_main_theorem(const AnalyzedAlgebra<S>& an, const FrobeniusStructure<S>& fs, int trials,
                                         std::uint64_t seed, const std::optional<Vec<S>>& hopf_u = std::nullopt);

}  // namespace frobkit

#endif  // FROBKIT_KTHEORY_HPP
