#ifndef FROBKIT_GALOIS_HPP
#define FROBKIT_GALOIS_HPP

#include "frobkit/hopf.hpp"
#include "frobkit/ktheory.hpp"

namespace frobkit {

/// Right H-comodule algebra. Column k of `coaction` is rho(b_k) in B (x) H
/// coordinates, index b * dim H + h.
template <class S>
struct ComoduleAlgebra {
    Algebra<S> b;
    HopfData<S> h;
    Mat<S> coaction;
    std::string name;
};

template <ExactScalar S>
Checks validate_comodule(const ComoduleAlgebra<S>& c);

template <ExactScalar S>
void require_valid_comodule(const ComoduleAlgebra<S>& c);

/// B = H with rho = Delta.
template <ExactScalar S>
ComoduleAlgebra<S> comodule_from_hopf(const HopfData<S>& h);

/// rho(b) = b (x) 1.
template <ExactScalar S>
ComoduleAlgebra<S> trivial_comodule(const Algebra<S>& b, const HopfData<S>& h);

/// A # H for an H-module-algebra action; `action[k]` is the matrix of h_k on
/// A. Basis a_i # h_j at index i * dim H + j. Throws AxiomError when the
/// action is not a module-algebra action.
template <ExactScalar S>
ComoduleAlgebra<S> smash_product(const Algebra<S>& a, const HopfData<S>& h, const std::vector<Mat<S>>& action);

/// Product in the tensor product algebra X (x) Y, coordinates x_i (x) y_j at
/// i * dim Y + j.
template <ExactScalar S>
Vec<S> tensor_product_multiply(const Algebra<S>& x, const Algebra<S>& y, const Vec<S>& u, const Vec<S>& v);

template <class S>
struct Coinvariants {
    Mat<S> basis;  // columns in B coordinates
    Algebra<S> algebra;
};

template <ExactScalar S>
Coinvariants<S> coinvariants(const ComoduleAlgebra<S>& c);

template <class S>
struct GaloisExtension {
    ComoduleAlgebra<S> comodule;
    Mat<S> coinvariant_basis;
    Algebra<S> a_algebra;
    QuotientSpace<S> tensor_BAB;
    Mat<S> rho_prime;  // b (x) b~ -> rho(b)(b~ (x) 1)
    Mat<S> rho_left;   // b (x) b~ -> (b (x) 1)rho(b~)
    bool is_galois = false;
    bool left_is_galois = false;
    Checks checks;
};

template <ExactScalar S>
GaloisExtension<S> galois_check(const ComoduleAlgebra<S>& c);

/// b(m (x) v) = sum b_0 m (x) b_1 v, basis m * dim V + v.
template <ExactScalar S>
ModuleRep<S> diagonal_module(const ComoduleAlgebra<S>& c, const ModuleRep<S>& m, const ModuleRep<S>& v);

/// Restriction of a B-module to A = B^coH (action indexed by the coinvariant basis).
template <ExactScalar S>
ModuleRep<S> restrict_to_coinvariants(const GaloisExtension<S>& g, const ModuleRep<S>& m);

/// B (x)_A L as a quotient of B (x) L (index i * dim L + l) with its left B-action.
template <class S>
struct BalancedTensor {
    QuotientSpace<S> space;
    Index dim_l = 0;
    ModuleRep<S> module;
};

template <ExactScalar S>
BalancedTensor<S> balanced_tensor(const GaloisExtension<S>& g, const ModuleRep<S>& l);

/// Part (a) for M and part (b) for (L, V).
template <ExactScalar S>
Checks verify_tensor_lemma(const GaloisExtension<S>& g, const ModuleRep<S>& m, const ModuleRep<S>& l,
                           const ModuleRep<S>& v);

/// Composition factors of B (x)_A Res M and of M (x) H agree. `label` tags check names.
template <ExactScalar S>
Checks ind_res_check(const AnalyzedAlgebra<S>& b, const GaloisExtension<S>& g, const ModuleRep<S>& m,
                     const std::string& label);

/// chi of B (x)_A Ae equals t_B(iota(e)) for the primitive idempotents of A and for 1.
template <ExactScalar S>
Checks hattori_functoriality(const AnalyzedAlgebra<S>& a, const GaloisExtension<S>& g);

/// b . f = sum b_0 f(S b_1) on an element of B. Throws std::invalid_argument
/// when f does not vanish on [H,H].
template <ExactScalar S>
Vec<S> hstar_right_action(const ComoduleAlgebra<S>& c, const Vec<S>& b, const Vec<S>& f);

/// Convolution (f * g)(h) = sum f(h_1) g(h_2).
template <ExactScalar S>
Vec<S> convolve(const HopfData<S>& h, const Vec<S>& f, const Vec<S>& g);

/// Basis of trace forms on H, as columns.
template <ExactScalar S>
Mat<S> trace_forms(const Algebra<S>& alg);

/// Well-definedness on T(B), unit law and associativity with convolution.
template <ExactScalar S>
Checks verify_hstar_action(const ComoduleAlgebra<S>& c, std::uint64_t seed, int trials);

/// r_B(M (x) V) from the transported idempotent against r_B(M) . chi_V.
template <ExactScalar S>
Checks product_formula_check(const AnalyzedAlgebra<S>& b, const GaloisExtension<S>& g, const AlgMatrix<S>& e,
                             const ModuleRep<S>& v, const std::string& label);

/// Hypotheses, integral facts, the membership statement and divisibility
/// of rank_A(Res M). `a` is the analysed coinvariant algebra.
template <ExactScalar S>
Checks divisibility_check(const AnalyzedAlgebra<S>& b, const AnalyzedAlgebra<S>& a, const GaloisExtension<S>& g,
                          const AlgMatrix<S>& e, const std::string& label);

}  // namespace frobkit

#endif  // FROBKIT_GALOIS_HPP
