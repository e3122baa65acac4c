#ifndef FROBKIT_PRESETS_HPP
#define FROBKIT_PRESETS_HPP

#include "frobkit/galois.hpp"

namespace frobkit {

/// Finite group as a multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    std::vector<std::string> names;
    [[nodiscard]] int order() const { return static_cast<int>(table.size()); }
};

FiniteGroup cyclic_group(int n);

/// S_n, n <= 4, permutations in lexicographic order; (st)(i) = s(t(i)).
FiniteGroup symmetric_group(int n);

/// Throws std::invalid_argument if the table is not a group with identity 0.
FiniteGroup group_from_table(std::string name, std::vector<std::vector<int>> table);

template <ExactScalar S>
HopfData<S> group_algebra(const FiniteGroup& g, const FieldSpec& field);

template <ExactScalar S>
Algebra<S> matrix_algebra(Index n, const FieldSpec& field);

/// Basis g^a x^b at index b * n + a, x g = root * g x, Delta x = x (x) 1 + g (x) x.
/// Throws std::invalid_argument unless `root` has multiplicative order n.
template <ExactScalar S>
HopfData<S> taft_algebra(int n, const S& root, const FieldSpec& field);

/// Four-dimensional, basis {1, g, x, gx}; characteristic must not be 2.
template <ExactScalar S>
HopfData<S> sweedler_algebra(const FieldSpec& field);

struct PresetInfo {
    std::string name;       // e.g. "cyclic:n"
    std::string kind;       // algebra | hopf | comodule
    std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

template <class S>
struct PresetObject {
    std::string name;
    Algebra<S> algebra;
    std::optional<HopfData<S>> hopf;
    std::optional<ComoduleAlgebra<S>> comodule;
    std::string default_lambda;  // named Frobenius form, empty for a search
};

/// `spec` is name[:param[:param]], e.g. "symmetric:3" or "taft:3:2".
/// Throws std::invalid_argument for unknown names or bad parameters.
template <ExactScalar S>
PresetObject<S> make_preset(const std::string& spec, const FieldSpec& field);

/// Resolves "matrix-trace", "group-coefficient-of-one" and "hopf-integral".
template <ExactScalar S>
Vec<S> named_lambda(const PresetObject<S>& p, const std::string& name);

}  // namespace frobkit

#endif  // FROBKIT_PRESETS_HPP
