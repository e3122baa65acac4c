#include "frobkit/galois.hpp"

namespace frobkit {

namespace {

std::string idx(const std::string& what, Index i) { return what + "=" + std::to_string(i); }

// Sum_{b,h} rho_k(b,h) kron(X_b, Y_h).
template <ExactScalar S>
Mat<S> coaction_kron(const ComoduleAlgebra<S>& c, const Vec<S>& rho, const std::vector<Mat<S>>& x,
                     const std::vector<Mat<S>>& y) {
    const Index dh = c.h.dim();
    Mat<S> out = zeros<S>(x.front().rows() * y.front().rows(), x.front().cols() * y.front().cols(), c.b.field());
    for (Index b = 0; b < c.b.dim(); ++b)
        for (Index h = 0; h < dh; ++h) {
            const S& coef = rho(b * dh + h);
            if (coef.is_zero()) continue;
            out += coef * kron(x[static_cast<std::size_t>(b)], y[static_cast<std::size_t>(h)]);
        }
    return out;
}

template <ExactScalar S>
std::vector<Mat<S>> antipode_twisted(const HopfData<S>& h, const ModuleRep<S>& v) {
    std::vector<Mat<S>> out;
    for (Index t = 0; t < h.dim(); ++t) out.push_back(act(v, Vec<S>(h.antipode.col(t))));
    return out;
}

template <ExactScalar S>
bool is_trace_form(const Algebra<S>& alg, const Vec<S>& f) {
    return is_zero(Vec<S>(commutator_spanning_set(alg).transpose() * f));
}

template <ExactScalar S>
Vec<S> hstar_unchecked(const ComoduleAlgebra<S>& c, const Vec<S>& b, const Vec<S>& f) {
    const Index dh = c.h.dim();
    Vec<S> sf = c.h.antipode.transpose() * f;  // h -> f(S h)
    Vec<S> rho = c.coaction * b;
    Vec<S> out = c.b.zero();
    for (Index i = 0; i < c.b.dim(); ++i) {
        S s = c.b.zero_scalar();
        for (Index h = 0; h < dh; ++h)
            if (!rho(i * dh + h).is_zero()) s += rho(i * dh + h) * sf(h);
        out(i) = s;
    }
    return out;
}

template <ExactScalar S>
ModuleRep<S> tensor_right_trivial(const ModuleRep<S>& l, Index dv, const FieldSpec& f) {
    ModuleRep<S> out{l.dim * dv, {}};
    for (const auto& m : l.action) out.action.push_back(kron(m, identity<S>(dv, f)));
    return out;
}

template <class S>
struct Transport {
    Mat<S> gamma;  // B (x)_A (L (x) V) -> (B (x)_A L) (x) V
    Mat<S> delta;
    Mat<S> gamma_relations;  // images of relations, must vanish
    Mat<S> delta_relations;
};

template <ExactScalar S>
Transport<S> transport_maps(const GaloisExtension<S>& g, const BalancedTensor<S>& xl, const BalancedTensor<S>& x1,
                            const ModuleRep<S>& v) {
    const auto& c = g.comodule;
    const auto& f = c.b.field();
    const Index db = c.b.dim(), dh = c.h.dim(), dl = xl.dim_l, dv = v.dim;
    const auto sv = antipode_twisted(c.h, v);
    Mat<S> gamma_amb = zeros<S>(db * dl * dv, db * dl * dv, f);
    Mat<S> delta_amb = zeros<S>(db * dl * dv, db * dl * dv, f);
    for (Index i = 0; i < db; ++i) {
        Vec<S> rho = c.coaction.col(i);
        for (Index b = 0; b < db; ++b)
            for (Index h = 0; h < dh; ++h) {
                const S& coef = rho(b * dh + h);
                if (coef.is_zero()) continue;
                const Mat<S>& vh = v.action[static_cast<std::size_t>(h)];
                const Mat<S>& svh = sv[static_cast<std::size_t>(h)];
                for (Index l = 0; l < dl; ++l) {
                    // same ambient index layout on both sides: (b * dl + l) * dv + v
                    const Index src = (i * dl + l) * dv, dst = (b * dl + l) * dv;
                    gamma_amb.block(dst, src, dv, dv) += coef * vh;
                    delta_amb.block(dst, src, dv, dv) += coef * svh;
                }
            }
    }
    Mat<S> pl = kron(xl.space.projection, identity<S>(dv, f));
    Mat<S> sl = kron(xl.space.section, identity<S>(dv, f));
    Transport<S> t;
    t.gamma = pl * gamma_amb * x1.space.section;
    t.delta = x1.space.projection * delta_amb * sl;
    t.gamma_relations = pl * gamma_amb * x1.space.relations;
    t.delta_relations = x1.space.projection * delta_amb * kron(xl.space.relations, identity<S>(dv, f));
    return t;
}

template <ExactScalar S>
bool intertwines(const Mat<S>& phi, const ModuleRep<S>& from, const ModuleRep<S>& to) {
    for (std::size_t k = 0; k < from.action.size(); ++k)
        if (phi * from.action[k] != to.action[k] * phi) return false;
    return true;
}

}  // namespace

template <ExactScalar S>
Vec<S> tensor_product_multiply(const Algebra<S>& x, const Algebra<S>& y, const Vec<S>& u, const Vec<S>& v) {
    const Index dx = x.dim(), dy = y.dim();
    Mat<S> vm(dx, dy);
    for (Index r = 0; r < dx; ++r)
        for (Index s = 0; s < dy; ++s) vm(r, s) = v(r * dy + s);
    Mat<S> z = zeros<S>(dx, dy, x.field());
    for (Index p = 0; p < dx; ++p)
        for (Index q = 0; q < dy; ++q) {
            const S& coef = u(p * dy + q);
            if (coef.is_zero()) continue;
            z += coef * (x.left_mult(p) * vm * y.left_mult(q).transpose());
        }
    Vec<S> out(dx * dy);
    for (Index r = 0; r < dx; ++r)
        for (Index s = 0; s < dy; ++s) out(r * dy + s) = z(r, s);
    return out;
}

template <ExactScalar S>
Checks validate_comodule(const ComoduleAlgebra<S>& c) {
    Checks out;
    const Index db = c.b.dim(), dh = c.h.dim();
    const auto& f = c.b.field();
    if (c.coaction.rows() != db * dh || c.coaction.cols() != db) {
        out.push_back(fail("comodule.shapes", "coaction must be (dim B * dim H) x dim B"));
        return out;
    }
    Mat<S> lhs = kron(c.coaction, identity<S>(dh, f)) * c.coaction;
    Mat<S> rhs = kron(identity<S>(db, f), c.h.comul) * c.coaction;
    std::string witness;
    for (Index k = 0; k < db && witness.empty(); ++k)
        if (lhs.col(k) != rhs.col(k)) witness = idx("b", k);
    out.push_back(verdict_of(witness.empty(), "comodule.coassociativity", "(rho (x) id) rho = (id (x) Delta) rho", witness));

    Mat<S> eps_row = c.h.counit.transpose();
    Mat<S> counit = kron(identity<S>(db, f), eps_row) * c.coaction;
    witness.clear();
    for (Index k = 0; k < db && witness.empty(); ++k)
        if (counit.col(k) != identity<S>(db, f).col(k)) witness = idx("b", k);
    out.push_back(verdict_of(witness.empty(), "comodule.counit", "(id (x) epsilon) rho = id", witness));

    witness.clear();
    for (Index i = 0; i < db && witness.empty(); ++i)
        for (Index j = 0; j < db && witness.empty(); ++j) {
            Vec<S> prod = multiply(c.b, c.b.basis(i), c.b.basis(j));
            Vec<S> l = c.coaction * prod;
            Vec<S> r = tensor_product_multiply(c.b, c.h.algebra, Vec<S>(c.coaction.col(i)), Vec<S>(c.coaction.col(j)));
            if (l != r) witness = "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    out.push_back(verdict_of(witness.empty(), "comodule.multiplicative", "rho(ab) = rho(a) rho(b)", witness));

    Vec<S> one_one = kron(Mat<S>(c.b.unit()), Mat<S>(c.h.algebra.unit())).col(0);
    out.push_back(verdict_of(Vec<S>(c.coaction * c.b.unit()) == one_one, "comodule.unit", "rho(1) = 1 (x) 1"));
    return out;
}

template <ExactScalar S>
void require_valid_comodule(const ComoduleAlgebra<S>& c) {
    for (const auto& ch : validate_comodule(c))
        if (ch.verdict == Verdict::Fail) throw AxiomError(ch.name, ch.witness.empty() ? ch.detail : ch.witness);
}

template <ExactScalar S>
ComoduleAlgebra<S> comodule_from_hopf(const HopfData<S>& h) {
    return {h.algebra, h, h.comul, h.name};
}

template <ExactScalar S>
ComoduleAlgebra<S> trivial_comodule(const Algebra<S>& b, const HopfData<S>& h) {
    Mat<S> rho = kron(identity<S>(b.dim(), b.field()), Mat<S>(h.algebra.unit()));
    return {b, h, rho, "trivial"};
}

template <ExactScalar S>
ComoduleAlgebra<S> smash_product(const Algebra<S>& a, const HopfData<S>& h, const std::vector<Mat<S>>& action) {
    const Index da = a.dim(), dh = h.dim();
    const auto& f = a.field();
    if (static_cast<Index>(action.size()) != dh) throw DimensionError("smash product: one action matrix per basis element of H");
    for (const auto& m : action)
        if (m.rows() != da || m.cols() != da) throw DimensionError("smash product: action matrices must be dim A square");
    ModuleRep<S> mod{da, action};
    if (auto defect = module_defect(h.algebra, mod); !defect.empty()) throw AxiomError("module-action", defect);
    for (Index t = 0; t < dh; ++t) {
        Mat<S> delta = comul_matrix_of(h, h.algebra.basis(t));
        if (Vec<S>(action[static_cast<std::size_t>(t)] * a.unit()) != h.counit(t) * a.unit())
            throw AxiomError("module-algebra-unit", idx("h", t));
        for (Index i = 0; i < da; ++i)
            for (Index j = 0; j < da; ++j) {
                Vec<S> lhs = action[static_cast<std::size_t>(t)] * multiply(a, a.basis(i), a.basis(j));
                Vec<S> rhs = a.zero();
                for (Index p = 0; p < dh; ++p)
                    for (Index q = 0; q < dh; ++q)
                        if (!delta(p, q).is_zero())
                            rhs += delta(p, q) * multiply(a, Vec<S>(action[static_cast<std::size_t>(p)].col(i)),
                                                          Vec<S>(action[static_cast<std::size_t>(q)].col(j)));
                if (lhs != rhs)
                    throw AxiomError("module-algebra-product", "h=" + std::to_string(t) + " (i,j)=(" + std::to_string(i) +
                                                                   "," + std::to_string(j) + ")");
            }
    }
    auto product = [&](Index x, Index y) {
        const Index i = x / dh, j = x % dh, k = y / dh, l = y % dh;
        Mat<S> delta = comul_matrix_of(h, h.algebra.basis(j));
        Vec<S> out = zero_vec<S>(da * dh, f);
        for (Index p = 0; p < dh; ++p)
            for (Index q = 0; q < dh; ++q) {
                if (delta(p, q).is_zero()) continue;
                Vec<S> left = multiply(a, a.basis(i), Vec<S>(action[static_cast<std::size_t>(p)].col(k)));
                Vec<S> right = multiply(h.algebra, h.algebra.basis(q), h.algebra.basis(l));
                out += delta(p, q) * kron(Mat<S>(left), Mat<S>(right)).col(0);
            }
        return out;
    };
    Vec<S> unit = kron(Mat<S>(a.unit()), Mat<S>(h.algebra.unit())).col(0);
    std::vector<std::string> names;
    for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < dh; ++j) {
            std::string an = i < static_cast<Index>(a.names().size()) ? a.names()[static_cast<std::size_t>(i)] : "a" + std::to_string(i);
            std::string hn = j < static_cast<Index>(h.algebra.names().size()) ? h.algebra.names()[static_cast<std::size_t>(j)]
                                                                             : "h" + std::to_string(j);
            names.push_back(an + "#" + hn);
        }
    Algebra<S> b = algebra_from_table<S>(f, da * dh, product, unit, names);
    Mat<S> rho = zeros<S>(da * dh * dh, da * dh, f);
    for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < dh; ++j) {
            Vec<S> dj = h.comul.col(j);
            for (Index p = 0; p < dh; ++p)
                for (Index q = 0; q < dh; ++q) rho((i * dh + p) * dh + q, i * dh + j) = dj(p * dh + q);
        }
    ComoduleAlgebra<S> c{b, h, rho, "smash"};
    require_valid_comodule(c);
    return c;
}

template <ExactScalar S>
Coinvariants<S> coinvariants(const ComoduleAlgebra<S>& c) {
    Mat<S> u = kron(identity<S>(c.b.dim(), c.b.field()), Mat<S>(c.h.algebra.unit()));
    Mat<S> basis = kernel(Mat<S>(c.coaction - u));
    return {basis, subalgebra(c.b, basis)};
}

template <ExactScalar S>
GaloisExtension<S> galois_check(const ComoduleAlgebra<S>& c) {
    GaloisExtension<S> g;
    g.comodule = c;
    auto co = coinvariants(c);
    g.coinvariant_basis = co.basis;
    g.a_algebra = co.algebra;
    const Index db = c.b.dim(), dh = c.h.dim(), da = co.basis.cols();
    const auto& f = c.b.field();

    Mat<S> rel = zeros<S>(db * db, db * db * da, f);
    Index col = 0;
    for (Index i = 0; i < db; ++i)
        for (Index a = 0; a < da; ++a) {
            Vec<S> av = co.basis.col(a);
            Vec<S> ba = multiply(c.b, c.b.basis(i), av);
            for (Index j = 0; j < db; ++j) {
                Vec<S> ab = multiply(c.b, av, c.b.basis(j));
                rel.col(col++) = kron(Mat<S>(ba), Mat<S>(c.b.basis(j))).col(0) - kron(Mat<S>(c.b.basis(i)), Mat<S>(ab)).col(0);
            }
        }
    g.tensor_BAB = make_quotient(rel, db * db);

    Mat<S> right_amb(db * dh, db * db), left_amb(db * dh, db * db);
    for (Index i = 0; i < db; ++i)
        for (Index j = 0; j < db; ++j) {
            Vec<S> bj1 = kron(Mat<S>(c.b.basis(j)), Mat<S>(c.h.algebra.unit())).col(0);
            Vec<S> bi1 = kron(Mat<S>(c.b.basis(i)), Mat<S>(c.h.algebra.unit())).col(0);
            right_amb.col(i * db + j) = tensor_product_multiply(c.b, c.h.algebra, Vec<S>(c.coaction.col(i)), bj1);
            left_amb.col(i * db + j) = tensor_product_multiply(c.b, c.h.algebra, bi1, Vec<S>(c.coaction.col(j)));
        }
    g.checks.push_back(verdict_of(is_zero(Mat<S>(right_amb * g.tensor_BAB.relations)) &&
                                      is_zero(Mat<S>(left_amb * g.tensor_BAB.relations)),
                                  "galois.maps-balanced", "both Galois maps vanish on the balancing relations"));
    g.rho_prime = right_amb * g.tensor_BAB.section;
    g.rho_left = left_amb * g.tensor_BAB.section;
    const Index q = g.tensor_BAB.dim();
    g.is_galois = q == db * dh && rank(g.rho_prime) == q;
    g.left_is_galois = q == db * dh && rank(g.rho_left) == q;
    const std::string dims = "dim B (x)_A B = " + std::to_string(q) + ", dim B (x) H = " + std::to_string(db * dh) +
                             ", rank rho' = " + std::to_string(rank(g.rho_prime)) +
                             ", rank 'rho = " + std::to_string(rank(g.rho_left));
    g.checks.push_back(verdict_of(g.is_galois == g.left_is_galois, "galois.left-right-agree", dims));
    g.checks.push_back({"galois.is-galois", Verdict::Pass, g.is_galois ? "H-Galois" : "not H-Galois", dims});
    return g;
}

template <ExactScalar S>
ModuleRep<S> diagonal_module(const ComoduleAlgebra<S>& c, const ModuleRep<S>& m, const ModuleRep<S>& v) {
    ModuleRep<S> out{m.dim * v.dim, {}};
    for (Index k = 0; k < c.b.dim(); ++k) out.action.push_back(coaction_kron(c, Vec<S>(c.coaction.col(k)), m.action, v.action));
    return out;
}

template <ExactScalar S>
ModuleRep<S> restrict_to_coinvariants(const GaloisExtension<S>& g, const ModuleRep<S>& m) {
    ModuleRep<S> out{m.dim, {}};
    for (Index c = 0; c < g.coinvariant_basis.cols(); ++c) out.action.push_back(act(m, Vec<S>(g.coinvariant_basis.col(c))));
    return out;
}

template <ExactScalar S>
BalancedTensor<S> balanced_tensor(const GaloisExtension<S>& g, const ModuleRep<S>& l) {
    const auto& b = g.comodule.b;
    const auto& f = b.field();
    const Index db = b.dim(), dl = l.dim, da = g.coinvariant_basis.cols();
    Mat<S> rel = zeros<S>(db * dl, db * da * dl, f);
    Index col = 0;
    for (Index i = 0; i < db; ++i)
        for (Index a = 0; a < da; ++a) {
            Vec<S> ba = multiply(b, b.basis(i), Vec<S>(g.coinvariant_basis.col(a)));
            const Mat<S>& la = l.action[static_cast<std::size_t>(a)];
            for (Index j = 0; j < dl; ++j)
                rel.col(col++) = kron(Mat<S>(ba), Mat<S>(unit_vec<S>(dl, j, f))).col(0) -
                                 kron(Mat<S>(b.basis(i)), Mat<S>(la.col(j))).col(0);
        }
    BalancedTensor<S> out;
    out.space = make_quotient(rel, db * dl);
    out.dim_l = dl;
    out.module.dim = out.space.dim();
    for (Index k = 0; k < db; ++k)
        out.module.action.push_back(out.space.projection * kron(b.left_mult(k), identity<S>(dl, f)) * out.space.section);
    return out;
}

template <ExactScalar S>
Checks verify_tensor_lemma(const GaloisExtension<S>& g, const ModuleRep<S>& m, const ModuleRep<S>& l,
                           const ModuleRep<S>& v) {
    Checks out;
    const auto& c = g.comodule;
    const auto& f = c.b.field();
    const Index db = c.b.dim(), dh = c.h.dim(), dm = m.dim;

    // (a) B (x)_A M -> M (x) H
    {
        BalancedTensor<S> x = balanced_tensor(g, restrict_to_coinvariants(g, m));
        Mat<S> phi_amb = zeros<S>(dm * dh, db * dm, f);
        for (Index i = 0; i < db; ++i) {
            Vec<S> rho = c.coaction.col(i);
            for (Index b = 0; b < db; ++b)
                for (Index h = 0; h < dh; ++h) {
                    const S& coef = rho(b * dh + h);
                    if (coef.is_zero()) continue;
                    const Mat<S>& mb = m.action[static_cast<std::size_t>(b)];
                    for (Index j = 0; j < dm; ++j)
                        for (Index r = 0; r < dm; ++r)
                            if (!mb(r, j).is_zero()) phi_amb(r * dh + h, i * dm + j) += coef * mb(r, j);
                }
        }
        const bool balanced = is_zero(Mat<S>(phi_amb * x.space.relations));
        Mat<S> phi = phi_amb * x.space.section;
        out.push_back(verdict_of(balanced, "tensor-lemma.a-balanced", "b (x) m -> sum b_0 m (x) b_1 is A-balanced"));
        ModuleRep<S> target = diagonal_module(c, m, regular_module(c.h.algebra));
        out.push_back(verdict_of(intertwines(phi, x.module, target), "tensor-lemma.a-b-linear",
                                 "the map commutes with the B-actions"));
        if (!g.is_galois) {
            out.push_back(not_applicable("tensor-lemma.a-bijective", "extension is not H-Galois"));
        } else {
            const bool bij = phi.rows() == phi.cols() && rank(phi) == phi.rows();
            out.push_back(verdict_of(bij, "tensor-lemma.a-bijective",
                                     "dim B (x)_A M = " + std::to_string(x.space.dim()) +
                                         ", dim M (x) H = " + std::to_string(dm * dh)));
        }
    }

    // (b) gamma and delta
    {
        BalancedTensor<S> xl = balanced_tensor(g, l);
        BalancedTensor<S> x1 = balanced_tensor(g, tensor_right_trivial(l, v.dim, f));
        Transport<S> t = transport_maps(g, xl, x1, v);
        out.push_back(verdict_of(is_zero(t.gamma_relations), "tensor-lemma.b-gamma-well-defined",
                                 "gamma kills the balancing relations of B (x)_A (L (x) V)"));
        out.push_back(verdict_of(is_zero(t.delta_relations), "tensor-lemma.b-delta-well-defined",
                                 "delta kills the balancing relations of (B (x)_A L) (x) V"));
        const bool square = t.gamma.rows() == t.gamma.cols() && t.delta.rows() == t.delta.cols();
        const bool gd = square && t.gamma * t.delta == identity<S>(t.gamma.rows(), f);
        const bool dg = square && t.delta * t.gamma == identity<S>(t.delta.rows(), f);
        const std::string dims = "dims " + std::to_string(x1.space.dim()) + " and " + std::to_string(xl.space.dim() * v.dim);
        out.push_back(verdict_of(gd, "tensor-lemma.b-gamma-delta", "gamma delta = 1 exactly; " + dims));
        out.push_back(verdict_of(dg, "tensor-lemma.b-delta-gamma", "delta gamma = 1 exactly; " + dims));
        ModuleRep<S> x2 = diagonal_module(c, xl.module, v);
        out.push_back(verdict_of(intertwines(t.gamma, x1.module, x2), "tensor-lemma.b-b-linear",
                                 "gamma commutes with the B-actions"));
    }
    return out;
}

template <ExactScalar S>
Checks ind_res_check(const AnalyzedAlgebra<S>& b, const GaloisExtension<S>& g, const ModuleRep<S>& m,
                     const std::string& label) {
    Checks out;
    const std::string name = "ind-res." + label;
    if (!g.is_galois) {
        out.push_back(not_applicable(name, "extension is not H-Galois"));
        return out;
    }
    if (!b.split) {
        out.push_back(not_applicable(name, "field does not split B: " + b.split_error));
        return out;
    }
    BalancedTensor<S> ind = balanced_tensor(g, restrict_to_coinvariants(g, m));
    ModuleRep<S> mh = diagonal_module(g.comodule, m, regular_module(g.comodule.h.algebra));
    auto lhs = composition_factors(b, ind.module);
    auto rhs = composition_factors(b, mh);
    auto fmt = [](const std::vector<long>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    };
    out.push_back(verdict_of(lhs == rhs, name,
                             "[B (x)_A Res M] = " + fmt(lhs) + ", [M (x) H] = " + fmt(rhs) +
                                 " (dims " + std::to_string(ind.module.dim) + ", " + std::to_string(mh.dim) + ")"));
    return out;
}

template <ExactScalar S>
Checks hattori_functoriality(const AnalyzedAlgebra<S>& a, const GaloisExtension<S>& g) {
    Checks out;
    std::vector<Vec<S>> es{a.algebra.unit()};
    if (a.split)
        for (const auto& e : a.split->idempotents.idempotents) es.push_back(e);
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < es.size(); ++i) {
        BalancedTensor<S> x = balanced_tensor(g, left_ideal_module(a.algebra, es[i]));
        Vec<S> lhs = character(x.module);
        Vec<S> rhs = t_map(g.comodule.b, Vec<S>(g.coinvariant_basis * es[i]));
        if (lhs != rhs) {
            ok = false;
            witness = "idempotent " + std::to_string(i) + ": chi=" + format_vector(lhs) + " t=" + format_vector(rhs);
            break;
        }
    }
    out.push_back(verdict_of(ok, "hattori.functoriality",
                             "chi of B (x)_A Ae equals t_B(iota(e)) for " + std::to_string(es.size()) + " idempotents" +
                                 (a.split ? "" : " (A not split: unit only)"),
                             witness));
    return out;
}

template <ExactScalar S>
Vec<S> hstar_right_action(const ComoduleAlgebra<S>& c, const Vec<S>& b, const Vec<S>& f) {
    if (!is_trace_form(c.h.algebra, f)) throw std::invalid_argument("form does not vanish on [H,H]");
    return hstar_unchecked(c, b, f);
}

template <ExactScalar S>
Vec<S> convolve(const HopfData<S>& h, const Vec<S>& f, const Vec<S>& g) {
    Vec<S> fg = kron(Mat<S>(f), Mat<S>(g)).col(0);
    return h.comul.transpose() * fg;
}

template <ExactScalar S>
Mat<S> trace_forms(const Algebra<S>& alg) {
    return kernel(Mat<S>(commutator_spanning_set(alg).transpose()));
}

template <ExactScalar S>
Checks verify_hstar_action(const ComoduleAlgebra<S>& c, std::uint64_t seed, int trials) {
    Checks out;
    const auto& hb = c.h.algebra;
    Mat<S> tf = trace_forms(hb);
    TraceSpace<S> tb = trace_space(c.b);

    bool unital = true;
    for (Index k = 0; k < c.b.dim() && unital; ++k) unital = hstar_unchecked(c, c.b.basis(k), c.h.counit) == c.b.basis(k);
    out.push_back(verdict_of(unital, "hstar.unital", "b . epsilon = b on a basis of B"));

    std::string witness;
    for (Index w = 0; w < tb.commutator_basis.cols() && witness.empty(); ++w)
        for (Index j = 0; j < tf.cols() && witness.empty(); ++j)
            if (!is_zero(Vec<S>(tb.coordinates * hstar_unchecked(c, Vec<S>(tb.commutator_basis.col(w)), Vec<S>(tf.col(j))))))
                witness = "commutator " + std::to_string(w) + ", form " + std::to_string(j);
    out.push_back(verdict_of(witness.empty(), "hstar.well-defined",
                             "[B,B] . f lies in [B,B] for a basis of trace forms on H (" + std::to_string(tf.cols()) + ")",
                             witness));

    std::mt19937_64 rng(seed);
    auto random_form = [&] {
        Vec<S> v = zero_vec<S>(hb.dim(), hb.field());
        for (Index j = 0; j < tf.cols(); ++j) v += random_scalar<S>(rng, hb.field()) * tf.col(j);
        return v;
    };
    bool assoc = true, closed = true;
    for (int t = 0; t < trials && assoc && closed; ++t) {
        Vec<S> b = random_element(c.b, rng), f = random_form(), g = random_form();
        Vec<S> fg = convolve(c.h, f, g);
        closed = is_trace_form(hb, fg);
        assoc = hstar_unchecked(c, hstar_unchecked(c, b, f), g) == hstar_unchecked(c, b, fg);
    }
    out.push_back(verdict_of(closed, "hstar.convolution-closed", "convolution of trace forms is a trace form"));
    out.push_back(verdict_of(assoc, "hstar.associative",
                             "(b . f) . g = b . (f * g) on " + std::to_string(trials) + " random triples"));
    return out;
}

template <ExactScalar S>
Checks product_formula_check(const AnalyzedAlgebra<S>& ban, const GaloisExtension<S>& g, const AlgMatrix<S>& e,
                             const ModuleRep<S>& v, const std::string& label) {
    Checks out;
    const std::string prefix = "product-formula." + label;
    const auto& c = g.comodule;
    const auto& b = c.b;
    const auto& f = b.field();
    const Index db = b.dim(), r = e.n, da = g.coinvariant_basis.cols(), dv = v.dim;
    if (!is_idempotent_matrix(b, e)) {
        out.push_back(fail(prefix, "presentation is not idempotent"));
        return out;
    }
    // L = A^r
    ModuleRep<S> l{0, std::vector<Mat<S>>(static_cast<std::size_t>(da), Mat<S>(0, 0))};
    for (Index i = 0; i < r; ++i) l = i == 0 ? regular_module(g.a_algebra) : direct_sum(l, regular_module(g.a_algebra));
    const Index dl = r * da;
    const Vec<S> a_unit = g.a_algebra.unit();
    auto slot = [&](Index i) { return Vec<S>(kron(Mat<S>(unit_vec<S>(r, i, f)), Mat<S>(a_unit)).col(0)); };

    BalancedTensor<S> xl = balanced_tensor(g, l);
    BalancedTensor<S> x1 = balanced_tensor(g, tensor_right_trivial(l, dv, f));

    // right multiplication by e on B (x)_A A^r = B^r
    Mat<S> e_amb = zeros<S>(db * dl, db * dl, f);
    for (Index ib = 0; ib < db; ++ib)
        for (Index i = 0; i < r; ++i)
            for (Index a = 0; a < da; ++a) {
                Vec<S> beta = multiply(b, b.basis(ib), Vec<S>(g.coinvariant_basis.col(a)));
                Vec<S> img = zero_vec<S>(db * dl, f);
                for (Index j = 0; j < r; ++j)
                    if (!is_zero(e.at(i, j))) img += kron(Mat<S>(multiply(b, beta, e.at(i, j))), Mat<S>(slot(j))).col(0);
                e_amb.col(ib * dl + i * da + a) = img;
            }
    const bool e_defined = is_zero(Mat<S>(xl.space.projection * e_amb * xl.space.relations));
    Mat<S> ex = xl.space.projection * e_amb * xl.space.section;

    Transport<S> t = transport_maps(g, xl, x1, v);
    Mat<S> eprime = t.delta * kron(ex, identity<S>(dv, f)) * t.gamma;
    out.push_back(verdict_of(e_defined && is_zero(t.gamma_relations) && is_zero(t.delta_relations) &&
                                 eprime * eprime == eprime,
                             prefix + ".transported-idempotent",
                             "e' = delta (e (x) 1_V) gamma is a well-defined idempotent"));

    // free basis 1 (x) (x_i (x) v_l) of B (x)_A (A^r (x) V)
    const Index n = r * dv;
    auto w = [&](Index idx) {
        return Vec<S>(kron(Mat<S>(slot(idx / dv)), Mat<S>(unit_vec<S>(dv, idx % dv, f))).col(0));
    };
    Mat<S> psi(x1.space.dim(), n * db);
    for (Index m = 0; m < n; ++m)
        for (Index k = 0; k < db; ++k)
            psi.col(m * db + k) = x1.space.projection * kron(Mat<S>(b.basis(k)), Mat<S>(w(m))).col(0);
    auto psi_inv = invert(psi);
    if (!psi_inv) {
        out.push_back(fail(prefix + ".free-basis", "1 (x) (x_i (x) v_l) is not a B-basis of B (x)_A (A^r (x) V)"));
        return out;
    }
    AlgMatrix<S> big = alg_matrix_zero(b, n);
    for (Index m = 0; m < n; ++m) {
        Vec<S> y = *psi_inv * (eprime * (x1.space.projection * kron(Mat<S>(b.unit()), Mat<S>(w(m))).col(0)));
        for (Index k = 0; k < n; ++k) big.at(m, k) = y.segment(k * db, db);
    }
    const bool big_idem = is_idempotent_matrix(b, big);
    ModuleRep<S> m_mod = presentation_module(b, e);
    ModuleRep<S> mv = diagonal_module(c, m_mod, v);
    const bool chars = big_idem && character(presentation_module(b, big)) == character(mv);
    out.push_back(verdict_of(chars, prefix + ".presents-tensor",
                             "E' is idempotent and B^N E' has the character of M (x) V (N=" + std::to_string(n) + ")"));

    Vec<S> lhs = ban.trace.coordinates * hs_rank_element(b, big);
    Vec<S> rhs = ban.trace.coordinates * hstar_unchecked(c, hs_rank_element(b, e), character(v));
    out.push_back(verdict_of(lhs == rhs, prefix, "r_B(M (x) V) = r_B(M) . chi_V in T(B)",
                             "lhs=" + format_vector(lhs) + " rhs=" + format_vector(rhs)));
    return out;
}

template <ExactScalar S>
Checks divisibility_check(const AnalyzedAlgebra<S>& ban, const AnalyzedAlgebra<S>& aan, const GaloisExtension<S>& g,
                          const AlgMatrix<S>& e, const std::string& label) {
    Checks out;
    const std::string prefix = "divisibility." + label;
    const auto& c = g.comodule;
    const auto& h = c.h;
    const auto& b = c.b;
    const auto& f = b.field();

    // hypotheses
    if (!is_involutory(h)) {
        out.push_back(not_applicable(prefix, "hypothesis fails: H is not involutory (S^2 != id)"));
        return out;
    }
    if (!is_commutative(aan.algebra)) {
        out.push_back(not_applicable(prefix, "hypothesis fails: A is not commutative"));
        return out;
    }
    std::optional<Index> factors;
    const Algebra<S>& top = aan.top.algebra;
    if (top.dim() == 1) {
        factors = 1;
    } else if (f.is_prime_field()) {
        Mat<S> frob(top.dim(), top.dim());
        for (Index k = 0; k < top.dim(); ++k)
            frob.col(k) = power(top, top.basis(k), static_cast<unsigned>(f.characteristic)) - top.basis(k);
        factors = kernel(frob).cols();
    } else if (aan.split) {
        factors = aan.split->idempotents.size();
    }
    if (!factors) {
        out.push_back({prefix, Verdict::Inconclusive, "could not decide whether A has idempotents other than 0 and 1", ""});
        return out;
    }
    if (*factors != 1) {
        out.push_back(not_applicable(prefix, "hypothesis fails: A has idempotents other than 0 and 1 (" +
                                                 std::to_string(*factors) + " blocks)"));
        return out;
    }
    if (is_zero(Vec<S>(ban.trace.coordinates * b.unit()))) {
        out.push_back(not_applicable(prefix, "hypothesis fails: 1 lies in [B,B], so no trace form f has f(1) = 1"));
        return out;
    }
    if (!g.is_galois) {
        out.push_back(not_applicable(prefix, "extension is not H-Galois"));
        return out;
    }

    // integral facts
    HopfData<S> dual = dual_hopf(h);
    Vec<S> lambda = integrals(dual, Side::Left).basis.col(0);
    {
        bool ok = true;
        for (Index k = 0; k < b.dim() && ok; ++k) {
            Vec<S> rho = c.coaction.col(k);
            Vec<S> img = b.zero();
            for (Index i = 0; i < b.dim(); ++i)
                for (Index t = 0; t < h.dim(); ++t)
                    if (!rho(i * h.dim() + t).is_zero()) img(i) += rho(i * h.dim() + t) * lambda(t);
            ok = in_span(g.coinvariant_basis, img);
        }
        out.push_back(verdict_of(ok, prefix + ".integral-invariants", "left integrals of H* map B into A"));
    }
    Vec<S> chi_h = character(regular_module(h.algebra));
    auto di = distinguished_ideal(h);
    out.push_back(verdict_of(Vec<S>(h.antipode.transpose() * chi_h) == chi_h, prefix + ".antipode-fixes-chi",
                             "S*(chi_H) = chi_H"));
    const bool in_line = in_span(Mat<S>(lambda), chi_h) && (is_zero(chi_h) == di.is_zero);
    out.push_back(verdict_of(in_line, prefix + ".chi-in-integrals",
                             std::string("chi_H spans (dH) times the left integrals of H*; dH ") +
                                 (di.is_zero ? "= 0" : "!= 0")));

    // Res M is free over the local algebra A
    ModuleRep<S> m = presentation_module(b, e);
    ModuleRep<S> res = restrict_to_coinvariants(g, m);
    Mat<S> rad_m(m.dim, 0);
    for (Index j = 0; j < aan.rad.basis.cols(); ++j) {
        Mat<S> img = act(res, Vec<S>(aan.rad.basis.col(j)));
        Mat<S> stacked(m.dim, rad_m.cols() + img.cols());
        stacked << rad_m, img;
        rad_m = column_basis(stacked);
    }
    std::vector<Index> gens = complement_indices(rad_m, m.dim);
    const Index k = static_cast<Index>(gens.size()), da = g.coinvariant_basis.cols();
    Mat<S> phi(m.dim, k * da);
    for (Index j = 0; j < k; ++j)
        for (Index a = 0; a < da; ++a) phi.col(j * da + a) = res.action[static_cast<std::size_t>(a)].col(gens[static_cast<std::size_t>(j)]);
    const bool free = phi.rows() == phi.cols() && rank(phi) == phi.rows();
    out.push_back(verdict_of(free, prefix + ".restriction-free",
                             "Res_A M is free of rank " + std::to_string(k) + " over the local algebra A (dim M = " +
                                 std::to_string(m.dim) + ", dim A = " + std::to_string(da) + ")"));
    if (!free) return out;

    // iota(r_A(Res M)) = k * 1 modulo (dH) A + [B,B]
    Vec<S> target = scalar<S>(static_cast<long>(k), f) * b.unit();
    Mat<S> span = ban.trace.commutator_basis;
    if (!di.is_zero) {
        Mat<S> both(b.dim(), span.cols() + da);
        both << span, g.coinvariant_basis;
        span = both;
    }
    out.push_back(verdict_of(in_span(span, target), prefix + ".proposition",
                             std::string("iota(r_A(Res M)) lies in ") + (di.is_zero ? "[B,B]" : "(dH) A + [B,B]")));
    if (di.is_zero) {
        const bool divides = scalar<S>(static_cast<long>(k), f).is_zero();
        out.push_back(verdict_of(divides, prefix + ".theorem",
                                 "dH = 0, so char divides rank_A M = " + std::to_string(k) + " (dim M = " +
                                     std::to_string(m.dim) + ", char " + std::to_string(f.characteristic) + ")"));
    } else {
        out.push_back(pass(prefix + ".theorem", "vacuous: dH is the whole field; rank_A M = " + std::to_string(k)));
    }
    return out;
}

#define FROBKIT_INSTANTIATE_GALOIS(S)                                                                                  \
    template Vec<S> tensor_product_multiply<S>(const Algebra<S>&, const Algebra<S>&, const Vec<S>&, const Vec<S>&);    \
    template Checks validate_comodule<S>(const ComoduleAlgebra<S>&);                                                   \
    template void require_valid_comodule<S>(const ComoduleAlgebra<S>&);                                                \
    template ComoduleAlgebra<S> comodule_from_hopf<S>(const HopfData<S>&);                                             \
    template ComoduleAlgebra<S> trivial_comodule<S>(const Algebra<S>&, const HopfData<S>&);                            \
    template ComoduleAlgebra<S> smash_product<S>(const Algebra<S>&, const HopfData<S>&, const std::vector<Mat<S>>&);   \
    template Coinvariants<S> coinvariants<S>(const ComoduleAlgebra<S>&);                                               \
    template GaloisExtension<S> galois_check<S>(const ComoduleAlgebra<S>&);                                            \
    template ModuleRep<S> diagonal_module<S>(const ComoduleAlgebra<S>&, const ModuleRep<S>&, const ModuleRep<S>&);     \
    template ModuleRep<S> restrict_to_coinvariants<S>(const GaloisExtension<S>&, const ModuleRep<S>&);                 \
    template BalancedTensor<S> balanced_tensor<S>(const GaloisExtension<S>&, const ModuleRep<S>&);                     \
    template Checks verify_tensor_lemma<S>(const GaloisExtension<S>&, const ModuleRep<S>&, const ModuleRep<S>&,        \
                                           const ModuleRep<S>&);                                                       \
    template Checks ind_res_check<S>(const AnalyzedAlgebra<S>&, const GaloisExtension<S>&, const ModuleRep<S>&,        \
                                     const std::string&);                                                              \
    template Checks hattori_functoriality<S>(const AnalyzedAlgebra<S>&, const GaloisExtension<S>&);                    \
    template Vec<S> hstar_right_action<S>(const ComoduleAlgebra<S>&, const Vec<S>&, const Vec<S>&);                    \
    template Vec<S> convolve<S>(const HopfData<S>&, const Vec<S>&, const Vec<S>&);                                     \
    template Mat<S> trace_forms<S>(const Algebra<S>&);                                                                 \
    template Checks verify_hstar_action<S>(const ComoduleAlgebra<S>&, std::uint64_t, int);                             \
    template Checks product_formula_check<S>(const AnalyzedAlgebra<S>&, const GaloisExtension<S>&,                     \
                                             const AlgMatrix<S>&, const ModuleRep<S>&, const std::string&);            \
    template Checks divisibility_check<S>(const AnalyzedAlgebra<S>&, const AnalyzedAlgebra<S>&,                        \
                                          const GaloisExtension<S>&, const AlgMatrix<S>&, const std::string&);

FROBKIT_INSTANTIATE_GALOIS(Rational)
FROBKIT_INSTANTIATE_GALOIS(Zp)

}  // namespace frobkit
