#include "frobkit/presets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frobkit {

namespace {

std::vector<std::string> split_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    return parts;
}

int parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty()) throw std::invalid_argument(what + " must be an integer, got '" + s + "'");
    return v;
}

std::string perm_name(const std::vector<int>& p) {
    std::string s = "[";
    for (int v : p) s += std::to_string(v + 1);
    return s + "]";
}

}  // namespace

FiniteGroup group_from_table(std::string name, std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw std::invalid_argument("group table is empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i) throw std::invalid_argument("element 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw std::invalid_argument("group table is not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    FiniteGroup g;
    g.name = std::move(name);
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0) g.inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[a] < 0) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    g.table = std::move(table);
    for (int a = 0; a < n; ++a) g.names.push_back("g" + std::to_string(a));
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    FiniteGroup g = group_from_table("C" + std::to_string(n), std::move(t));
    g.names[0] = "1";
    for (int a = 1; a < n; ++a) g.names[a] = a == 1 ? "g" : "g^" + std::to_string(a);
    return g;
}

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("symmetric group degree must be between 1 and 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    const int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    FiniteGroup g = group_from_table("S" + std::to_string(n), std::move(t));
    for (int a = 0; a < m; ++a) g.names[a] = perm_name(perms[a]);
    return g;
}

template <ExactScalar S>
HopfData<S> group_algebra(const FiniteGroup& g, const FieldSpec& field) {
    const Index n = g.order();
    auto product = [&](Index i, Index j) { return unit_vec<S>(n, g.table[i][j], field); };
    HopfData<S> h;
    h.algebra = algebra_from_table<S>(field, n, product, unit_vec<S>(n, 0, field), g.names);
    h.comul = zeros<S>(n * n, n, field);
    h.counit = Vec<S>::Constant(n, scalar<S>(1, field));
    h.antipode = zeros<S>(n, n, field);
    for (Index k = 0; k < n; ++k) {
        h.comul(k * n + k, k) = scalar<S>(1, field);
        h.antipode(g.inverse[k], k) = scalar<S>(1, field);
    }
    h.name = "k" + g.name;
    require_valid_hopf(h);
    return h;
}

template <ExactScalar S>
Algebra<S> matrix_algebra(Index n, const FieldSpec& field) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    auto product = [&](Index x, Index y) {
        const Index j = x / n, k = x % n, l = y / n, m = y % n;
        return k == l ? unit_vec<S>(n * n, j * n + m, field) : zero_vec<S>(n * n, field);
    };
    Vec<S> unit = zero_vec<S>(n * n, field);
    std::vector<std::string> names;
    for (Index j = 0; j < n; ++j) {
        unit(j * n + j) = scalar<S>(1, field);
        for (Index k = 0; k < n; ++k) names.push_back("e" + std::to_string(j + 1) + std::to_string(k + 1));
    }
    return algebra_from_table<S>(field, n * n, product, unit, names);
}

template <ExactScalar S>
HopfData<S> taft_algebra(int n, const S& root, const FieldSpec& field) {
    if (n < 2) throw std::invalid_argument("taft algebra needs n >= 2");
    {
        S w = root + scalar<S>(0, field);
        for (int k = 1; k < n; ++k) {
            if (w == scalar<S>(1, field))
                throw std::invalid_argument("root " + root.to_string() + " has order " + std::to_string(k) + ", not " +
                                            std::to_string(n));
            w = w * root;
        }
        if (w != scalar<S>(1, field))
            throw std::invalid_argument("root " + root.to_string() + " is not an n-th root of unity for n=" + std::to_string(n));
    }
    const Index d = static_cast<Index>(n) * n;
    auto at = [n](Index a, Index b) { return b * n + a; };
    std::vector<S> powers(static_cast<std::size_t>(n) * n + 1, scalar<S>(1, field));
    for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * root;
    auto product = [&](Index x, Index y) {
        const Index a = x % n, b = x / n, c = y % n, e = y / n;
        Vec<S> out = zero_vec<S>(d, field);
        if (b + e < n) out(at((a + c) % n, b + e)) = powers[static_cast<std::size_t>((b * c) % n)];
        return out;
    };
    std::vector<std::string> names;
    for (Index b = 0; b < n; ++b)
        for (Index a = 0; a < n; ++a) {
            std::string s;
            if (a > 0) s += a == 1 ? "g" : "g^" + std::to_string(a);
            if (b > 0) s += b == 1 ? "x" : "x^" + std::to_string(b);
            names.push_back(s.empty() ? "1" : s);
        }
    HopfData<S> h;
    h.algebra = algebra_from_table<S>(field, d, product, unit_vec<S>(d, 0, field), names);
    const auto& alg = h.algebra;
    Vec<S> g = alg.basis(at(1, 0)), x = alg.basis(at(0, 1));
    Vec<S> one = alg.unit();
    auto tens = [](const Vec<S>& u, const Vec<S>& v) { return Vec<S>(kron(Mat<S>(u), Mat<S>(v)).col(0)); };
    Vec<S> dg = tens(g, g), dx = tens(x, one) + tens(g, x);
    // S(g) = g^{n-1}, S(x) = -g^{n-1} x
    Vec<S> sg = power(alg, g, static_cast<unsigned>(n - 1));
    Vec<S> sx = -multiply(alg, sg, x);
    h.comul = zeros<S>(d * d, d, field);
    h.counit = zero_vec<S>(d, field);
    h.antipode = zeros<S>(d, d, field);
    for (Index b = 0; b < n; ++b)
        for (Index a = 0; a < n; ++a) {
            Vec<S> delta = tens(one, one), anti = one;
            for (Index i = 0; i < a; ++i) delta = tensor_multiply(alg, delta, dg);
            for (Index i = 0; i < b; ++i) delta = tensor_multiply(alg, delta, dx);
            // S(g^a x^b) = S(x)^b S(g)^a
            for (Index i = 0; i < b; ++i) anti = multiply(alg, anti, sx);
            for (Index i = 0; i < a; ++i) anti = multiply(alg, anti, sg);
            h.comul.col(at(a, b)) = delta;
            h.antipode.col(at(a, b)) = anti;
            if (b == 0) h.counit(at(a, b)) = scalar<S>(1, field);
        }
    h.name = "taft" + std::to_string(n);
    require_valid_hopf(h);
    return h;
}

template <ExactScalar S>
HopfData<S> sweedler_algebra(const FieldSpec& field) {
    if (field.is_prime_field() && field.characteristic == 2)
        throw std::invalid_argument("sweedler algebra needs characteristic different from 2");
    HopfData<S> h = taft_algebra<S>(2, scalar<S>(-1, field), field);
    h.name = "sweedler";
    return h;
}

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog{
        {"matrix:n", "algebra", "full matrix algebra M_n, basis e_jk at index j*n+k"},
        {"upper-triangular:n", "algebra", "upper triangular n x n matrices (not Frobenius for n >= 2)"},
        {"dual-numbers", "algebra", "k[x]/(x^2)"},
        {"cyclic:n", "hopf", "group algebra of the cyclic group C_n"},
        {"symmetric:n", "hopf", "group algebra of S_n, n <= 4"},
        {"dual-cyclic:n", "hopf", "dual of the group algebra of C_n"},
        {"dual-symmetric:n", "hopf", "dual of the group algebra of S_n, n <= 4"},
        {"sweedler", "hopf", "Sweedler's four-dimensional Hopf algebra, char != 2"},
        {"taft:n:root", "hopf", "Taft algebra of dimension n^2 for a root of unity of order n"},
        {"smash-cyclic:n", "comodule", "functions on C_n smashed with kC_n acting by translation"},
        {"dualnum-c2", "comodule", "dual numbers smashed with kC_2 acting by x -> -x"},
    };
    return catalog;
}

template <ExactScalar S>
PresetObject<S> make_preset(const std::string& spec, const FieldSpec& field) {
    require_field_kind<S>(field);
    const auto parts = split_spec(spec);
    if (parts.empty()) throw std::invalid_argument("empty preset name");
    const std::string& name = parts[0];
    auto param = [&](std::size_t i) {
        if (parts.size() <= i) throw std::invalid_argument("preset " + name + " needs a parameter");
        return parse_int(parts[i], name + " parameter");
    };
    auto expect_parts = [&](std::size_t n) {
        if (parts.size() != n) throw std::invalid_argument("preset " + name + " takes " + std::to_string(n - 1) + " parameter(s)");
    };
    PresetObject<S> out;
    out.name = spec;
    auto set_hopf = [&](HopfData<S> h, std::string lambda) {
        out.algebra = h.algebra;
        out.hopf = std::move(h);
        out.default_lambda = std::move(lambda);
    };
    if (name == "matrix") {
        expect_parts(2);
        out.algebra = matrix_algebra<S>(param(1), field);
        out.default_lambda = "matrix-trace";
    } else if (name == "upper-triangular") {
        expect_parts(2);
        const Index n = param(1);
        if (n < 1) throw std::invalid_argument("upper-triangular needs n >= 1");
        std::vector<std::pair<Index, Index>> idx;
        for (Index j = 0; j < n; ++j)
            for (Index k = j; k < n; ++k) idx.emplace_back(j, k);
        const Index d = static_cast<Index>(idx.size());
        auto pos = [&](Index j, Index k) {
            return static_cast<Index>(std::find(idx.begin(), idx.end(), std::make_pair(j, k)) - idx.begin());
        };
        auto product = [&](Index x, Index y) {
            auto [j, k] = idx[static_cast<std::size_t>(x)];
            auto [l, m] = idx[static_cast<std::size_t>(y)];
            return k == l ? unit_vec<S>(d, pos(j, m), field) : zero_vec<S>(d, field);
        };
        Vec<S> unit = zero_vec<S>(d, field);
        std::vector<std::string> names;
        for (auto [j, k] : idx) names.push_back("e" + std::to_string(j + 1) + std::to_string(k + 1));
        for (Index j = 0; j < n; ++j) unit(pos(j, j)) = scalar<S>(1, field);
        out.algebra = algebra_from_table<S>(field, d, product, unit, names);
    } else if (name == "dual-numbers") {
        expect_parts(1);
        auto product = [&](Index x, Index y) {
            return x + y < 2 ? unit_vec<S>(2, x + y, field) : zero_vec<S>(2, field);
        };
        out.algebra = algebra_from_table<S>(field, 2, product, unit_vec<S>(2, 0, field), {"1", "x"});
    } else if (name == "cyclic") {
        expect_parts(2);
        set_hopf(group_algebra<S>(cyclic_group(param(1)), field), "group-coefficient-of-one");
    } else if (name == "symmetric") {
        expect_parts(2);
        set_hopf(group_algebra<S>(symmetric_group(param(1)), field), "group-coefficient-of-one");
    } else if (name == "dual-cyclic" || name == "dual-symmetric") {
        expect_parts(2);
        FiniteGroup g = name == "dual-cyclic" ? cyclic_group(param(1)) : symmetric_group(param(1));
        HopfData<S> h = dual_hopf(group_algebra<S>(g, field));
        h.name = "(k" + g.name + ")*";
        require_valid_hopf(h);
        set_hopf(std::move(h), "hopf-integral");
    } else if (name == "sweedler") {
        expect_parts(1);
        set_hopf(sweedler_algebra<S>(field), "hopf-integral");
    } else if (name == "taft") {
        expect_parts(3);
        S root = ScalarTraits<S>::parse(parts[2], field);
        set_hopf(taft_algebra<S>(param(1), root, field), "hopf-integral");
    } else if (name == "smash-cyclic") {
        expect_parts(2);
        const int n = param(1);
        HopfData<S> h = group_algebra<S>(cyclic_group(n), field);
        auto product = [&](Index x, Index y) { return x == y ? unit_vec<S>(n, x, field) : zero_vec<S>(n, field); };
        Algebra<S> a = algebra_from_table<S>(field, n, product, Vec<S>::Constant(n, scalar<S>(1, field)));
        std::vector<Mat<S>> action;
        for (int s = 0; s < n; ++s) {
            Mat<S> m = zeros<S>(n, n, field);
            for (int i = 0; i < n; ++i) m((i + n - s) % n, i) = scalar<S>(1, field);
            action.push_back(std::move(m));
        }
        out.comodule = smash_product(a, h, action);
        out.comodule->name = spec;
        out.algebra = out.comodule->b;
    } else if (name == "dualnum-c2") {
        expect_parts(1);
        HopfData<S> h = group_algebra<S>(cyclic_group(2), field);
        auto product = [&](Index x, Index y) {
            return x + y < 2 ? unit_vec<S>(2, x + y, field) : zero_vec<S>(2, field);
        };
        Algebra<S> a = algebra_from_table<S>(field, 2, product, unit_vec<S>(2, 0, field), {"1", "x"});
        Mat<S> flip = identity<S>(2, field);
        flip(1, 1) = scalar<S>(-1, field);
        out.comodule = smash_product(a, h, {identity<S>(2, field), flip});
        out.comodule->name = spec;
        out.algebra = out.comodule->b;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return out;
}

template <ExactScalar S>
Vec<S> named_lambda(const PresetObject<S>& p, const std::string& name) {
    const auto& alg = p.algebra;
    if (name == "matrix-trace") {
        const Index d = alg.dim();
        Index n = 1;
        while (n * n < d) ++n;
        Vec<S> l = alg.zero();
        for (Index j = 0; j < n && n * n == d; ++j) l(j * n + j) = alg.one();
        // the unit of M_n is the sum of the diagonal units
        if (n * n != d || alg.unit() != l) throw std::invalid_argument("matrix-trace needs matrix units e_jk at index j*n+k");
        return l;
    }
    if (name == "group-coefficient-of-one") {
        if (alg.unit() != alg.basis(0)) throw std::invalid_argument("group-coefficient-of-one needs basis element 0 to be the unit");
        return unit_vec<S>(alg.dim(), 0, alg.field());
    }
    if (name == "hopf-integral") {
        if (!p.hopf) throw std::invalid_argument("hopf-integral needs a Hopf algebra");
        return hopf_frobenius_lambda(*p.hopf).lambda;
    }
    throw std::invalid_argument("unknown named form '" + name + "'");
}

#define FROBKIT_INSTANTIATE_PRESETS(S)                                                        \
    template HopfData<S> group_algebra<S>(const FiniteGroup&, const FieldSpec&);              \
    template Algebra<S> matrix_algebra<S>(Index, const FieldSpec&);                           \
    template HopfData<S> taft_algebra<S>(int, const S&, const FieldSpec&);                    \
    template HopfData<S> sweedler_algebra<S>(const FieldSpec&);                               \
    template PresetObject<S> make_preset<S>(const std::string&, const FieldSpec&);            \
    template Vec<S> named_lambda<S>(const PresetObject<S>&, const std::string&);

FROBKIT_INSTANTIATE_PRESETS(Rational)
FROBKIT_INSTANTIATE_PRESETS(Zp)

}  // namespace frobkit
