#ifndef FROBKIT_SEMISIMPLE_HPP
#define FROBKIT_SEMISIMPLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobkit/algebra.hpp"

namespace frobkit {

/// One primitive idempotent per simple module, pairwise orthogonal.
template <class S>
struct PrimitiveIdempotentSet {
    std::vector<Vec<S>> idempotents;
    std::vector<int> block_labels;     // central block each idempotent lives in
    std::vector<Index> simple_dims;    // n_i where the block is M_{n_i}(k)
    [[nodiscard]] std::size_t size() const { return idempotents.size(); }
};

/// Primitive idempotents of a semisimple algebra over a splitting field.
/// Throws DoesNotSplitError when some minimal polynomial has no root in k.
template <ExactScalar S>
PrimitiveIdempotentSet<S> split_semisimple(const Algebra<S>& alg);

/// Central primitive idempotents of a semisimple algebra.
template <ExactScalar S>
std::vector<Vec<S>> central_idempotents(const Algebra<S>& alg);

/// Lifts idempotents of A/rad (given in quotient coordinates) to A.
template <ExactScalar S>
PrimitiveIdempotentSet<S> lift_idempotents(const Algebra<S>& alg, const QuotientAlgebra<S>& top,
                                           const PrimitiveIdempotentSet<S>& on_top, Index nilpotency);

template <class S>
struct SplitData {
    PrimitiveIdempotentSet<S> top_idempotents;  // in A/rad coordinates
    PrimitiveIdempotentSet<S> idempotents;      // lifted to A
    std::vector<ModuleRep<S>> simples;          // modules over A
};

/// Algebra with its radical, trace space, center and (when the field splits
/// A) primitive idempotents and simples, all computed once up front.
template <class S>
struct AnalyzedAlgebra {
    Algebra<S> algebra;
    TraceSpace<S> trace;
    Subspace<S> rad;
    Index rad_nilpotency = 0;
    Subspace<S> center;
    QuotientAlgebra<S> top;
    std::optional<SplitData<S>> split;
    std::string split_error;  // reason when split is empty

    [[nodiscard]] bool is_split() const { return split.has_value(); }
    /// Throws DoesNotSplitError carrying split_error.
    const SplitData<S>& require_split() const;
};

template <ExactScalar S>
AnalyzedAlgebra<S> analyze(const Algebra<S>& alg);

/// Simple modules S_i = (A/rad) e_i, as modules over A.
template <ExactScalar S>
std::vector<ModuleRep<S>> simples(const Algebra<S>& alg, const QuotientAlgebra<S>& top,
                                  const PrimitiveIdempotentSet<S>& on_top);

/// Multiplicity of each simple in M, by radical filtration. Cross-checked
/// against rank(e_i on M) and the dimension count.
template <ExactScalar S>
std::vector<long> composition_factors(const AnalyzedAlgebra<S>& an, const ModuleRep<S>& m);

/// Radical layers M, rad M, rad^2 M, ... as bases inside M (last one is 0).
template <ExactScalar S>
std::vector<Mat<S>> radical_filtration(const AnalyzedAlgebra<S>& an, const ModuleRep<S>& m);

/// Left ideal A e as a module.
template <ExactScalar S>
ModuleRep<S> left_ideal_module(const Algebra<S>& alg, const Vec<S>& e);

template <ExactScalar S>
bool is_idempotent(const Algebra<S>& alg, const Vec<S>& e);

}  // namespace frobkit

#endif  // FROBKIT_SEMISIMPLE_HPP
