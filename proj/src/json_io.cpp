#include "frobkit/json_io.hpp"

namespace frobkit {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& path, const std::string& k) { return path + "." + k; }

const json& require(const json& obj, const std::string& k, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(k);
    if (it == obj.end()) throw SchemaError(key(path, k), "missing");
    return *it;
}

const json& require_array(const json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt) {
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    if (size && j.size() != *size)
        throw SchemaError(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
}

Index require_index(const json& j, Index bound, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer index");
    const auto v = j.get<long long>();
    if (v < 0 || v >= bound) throw SchemaError(path, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
    return static_cast<Index>(v);
}

template <ExactScalar S>
Vec<S> parse_vector(const json& j, Index n, const FieldSpec& f, const std::string& path) {
    require_array(j, path, static_cast<std::size_t>(n));
    Vec<S> v(n);
    for (Index i = 0; i < n; ++i) v(i) = parse_scalar<S>(j[static_cast<std::size_t>(i)], f, at(path, static_cast<std::size_t>(i)));
    return v;
}

template <ExactScalar S>
Mat<S> parse_matrix(const json& j, Index rows, Index cols, const FieldSpec& f, const std::string& path) {
    require_array(j, path, static_cast<std::size_t>(rows));
    Mat<S> m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const std::string rp = at(path, static_cast<std::size_t>(r));
        Vec<S> row = parse_vector<S>(j[static_cast<std::size_t>(r)], cols, f, rp);
        m.row(r) = row.transpose();
    }
    return m;
}

// [[k, [[i, j, c], ...]], ...] -> column k holds c at i * d2 + j
template <ExactScalar S>
Mat<S> parse_sparse_pairs(const json& j, Index cols, Index d1, Index d2, const FieldSpec& f, const std::string& path) {
    require_array(j, path);
    Mat<S> m = zeros<S>(d1 * d2, cols, f);
    std::vector<bool> seen(static_cast<std::size_t>(cols), false);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string ep = at(path, e);
        require_array(j[e], ep, 2);
        const Index k = require_index(j[e][0], cols, at(ep, 0));
        if (seen[static_cast<std::size_t>(k)]) throw SchemaError(at(ep, 0), "duplicate entry for index " + std::to_string(k));
        seen[static_cast<std::size_t>(k)] = true;
        const json& terms = require_array(j[e][1], at(ep, 1));
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = at(at(ep, 1), t);
            require_array(terms[t], tp, 3);
            const Index a = require_index(terms[t][0], d1, at(tp, 0));
            const Index b = require_index(terms[t][1], d2, at(tp, 1));
            m(a * d2 + b, k) += parse_scalar<S>(terms[t][2], f, at(tp, 2));
        }
    }
    return m;
}

template <ExactScalar S>
json sparse_pairs_json(const Mat<S>& m, Index d2) {
    json out = json::array();
    for (Index k = 0; k < m.cols(); ++k) {
        json terms = json::array();
        for (Index r = 0; r < m.rows(); ++r)
            if (!m(r, k).is_zero()) terms.push_back(json::array({r / d2, r % d2, scalar_json(m(r, k))}));
        if (!terms.empty()) out.push_back(json::array({k, terms}));
    }
    return out;
}

template <ExactScalar S>
json vector_json(const Vec<S>& v) {
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_json(v(i)));
    return out;
}

template <ExactScalar S>
Algebra<S> parse_algebra_block(const json& doc, const FieldSpec& f, const std::string& path) {
    const json& dj = require(doc, "dim", path);
    if (!dj.is_number_integer() || dj.get<long long>() < 1) throw SchemaError(key(path, "dim"), "expected a positive integer");
    const Index d = static_cast<Index>(dj.get<long long>());
    std::vector<std::string> names;
    if (auto it = doc.find("basis_names"); it != doc.end()) {
        require_array(*it, key(path, "basis_names"), static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_string()) throw SchemaError(at(key(path, "basis_names"), i), "expected a string");
            names.push_back((*it)[i].get<std::string>());
        }
    }
    const std::string mp = key(path, "mul");
    const json& mul = require_array(require(doc, "mul", path), mp);
    std::vector<Mat<S>> left(static_cast<std::size_t>(d), zeros<S>(d, d, f));
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(d), std::vector<bool>(static_cast<std::size_t>(d), false));
    for (std::size_t e = 0; e < mul.size(); ++e) {
        const std::string ep = at(mp, e);
        require_array(mul[e], ep, 3);
        const Index i = require_index(mul[e][0], d, at(ep, 0));
        const Index j = require_index(mul[e][1], d, at(ep, 1));
        if (seen[i][j]) throw SchemaError(ep, "duplicate product entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
        seen[i][j] = true;
        const json& terms = require_array(mul[e][2], at(ep, 2));
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = at(at(ep, 2), t);
            require_array(terms[t], tp, 2);
            const Index k = require_index(terms[t][0], d, at(tp, 0));
            left[static_cast<std::size_t>(i)](k, j) += parse_scalar<S>(terms[t][1], f, at(tp, 1));
        }
    }
    Vec<S> unit = parse_vector<S>(require(doc, "unit", path), d, f, key(path, "unit"));
    try {
        return Algebra<S>(f, std::move(left), unit, std::move(names));
    } catch (const AxiomError& e) {
        throw SchemaError(mp, e.what());
    }
}

template <ExactScalar S>
HopfData<S> parse_hopf_block(const json& hj, const Algebra<S>& alg, const std::string& path) {
    const auto& f = alg.field();
    const Index d = alg.dim();
    HopfData<S> h;
    h.algebra = alg;
    h.comul = parse_sparse_pairs<S>(require(hj, "comul", path), d, d, d, f, key(path, "comul"));
    h.counit = parse_vector<S>(require(hj, "counit", path), d, f, key(path, "counit"));
    h.antipode = parse_matrix<S>(require(hj, "antipode", path), d, d, f, key(path, "antipode"));
    h.name = "input";
    for (const auto& c : validate_hopf(h))
        if (c.verdict == Verdict::Fail) throw SchemaError(path, c.name + " fails" + (c.witness.empty() ? "" : " at " + c.witness));
    return h;
}

}  // namespace

FieldSpec parse_field(const json& j, const std::string& path) {
    const json& kind = require(j, "kind", path);
    if (!kind.is_string()) throw SchemaError(key(path, "kind"), "expected \"Q\" or \"Fp\"");
    const auto k = kind.get<std::string>();
    if (k == "Q") return FieldSpec::rationals();
    if (k != "Fp") throw SchemaError(key(path, "kind"), "expected \"Q\" or \"Fp\", got \"" + k + "\"");
    const json& p = require(j, "p", path);
    if (!p.is_number_integer() || p.get<long long>() < 2) throw SchemaError(key(path, "p"), "expected a prime");
    try {
        return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
        throw SchemaError(key(path, "p"), e.what());
    }
}

json field_json(const FieldSpec& f) {
    if (f.is_prime_field()) return json{{"kind", "Fp"}, {"p", f.characteristic}};
    return json{{"kind", "Q"}};
}

template <ExactScalar S>
json scalar_json(const S& s) {
    if constexpr (std::is_same_v<S, Zp>)
        return s.is_bound() ? json(s.residue()) : json(std::stoll(s.to_string()));
    else
        return s.to_string();
}

template <ExactScalar S>
S parse_scalar(const json& j, const FieldSpec& f, const std::string& path) {
    try {
        if (j.is_number_integer()) return scalar<S>(j.get<long>(), f);
        if (j.is_string()) return ScalarTraits<S>::parse(j.get<std::string>(), f);
    } catch (const std::exception& e) {
        throw SchemaError(path, std::string("bad scalar: ") + e.what());
    }
    throw SchemaError(path, "expected an integer or a string \"a/b\"");
}

FieldSpec document_field(const json& doc) {
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    return parse_field(require(doc, "field", "$"));
}

template <ExactScalar S>
Document<S> parse_document(const json& doc) {
    const FieldSpec f = document_field(doc);
    if (ScalarTraits<S>::kind != f.kind) throw SchemaError("$.field", "field kind does not match the requested scalar type");
    Document<S> out;
    if (auto it = doc.find("name"); it != doc.end() && it->is_string()) out.name = it->get<std::string>();
    out.algebra = parse_algebra_block<S>(doc, f, "$");

    if (auto it = doc.find("hopf"); it != doc.end()) out.hopf = parse_hopf_block<S>(*it, out.algebra, "$.hopf");

    if (auto it = doc.find("comodule"); it != doc.end()) {
        const std::string cp = "$.comodule";
        const json& hj = require(*it, "hopf", cp);
        HopfData<S> h;
        if (hj.is_string()) {
            try {
                auto p = make_preset<S>(hj.get<std::string>(), f);
                if (!p.hopf) throw SchemaError(key(cp, "hopf"), "preset " + hj.get<std::string>() + " is not a Hopf algebra");
                h = *p.hopf;
            } catch (const std::invalid_argument& e) {
                throw SchemaError(key(cp, "hopf"), e.what());
            }
        } else if (hj.is_object()) {
            json inner = hj;
            if (!inner.contains("field")) inner["field"] = doc["field"];
            if (parse_field(inner["field"], key(cp, "hopf.field")) != f) throw SchemaError(key(cp, "hopf.field"), "field differs from the document");
            Algebra<S> ha = parse_algebra_block<S>(inner, f, key(cp, "hopf"));
            h = parse_hopf_block<S>(require(inner, "hopf", key(cp, "hopf")), ha, key(cp, "hopf.hopf"));
        } else {
            throw SchemaError(key(cp, "hopf"), "expected a preset name or an inline Hopf document");
        }
        if (auto act = it->find("action"); act != it->end()) {
            require_array(*act, key(cp, "action"), static_cast<std::size_t>(h.dim()));
            std::vector<Mat<S>> action;
            for (std::size_t k = 0; k < act->size(); ++k)
                action.push_back(parse_matrix<S>((*act)[k], out.algebra.dim(), out.algebra.dim(), f, at(key(cp, "action"), k)));
            try {
                out.comodule = smash_product(out.algebra, h, action);
            } catch (const std::exception& e) {
                throw SchemaError(key(cp, "action"), e.what());
            }
            out.algebra = out.comodule->b;
        } else {
            Mat<S> rho = parse_sparse_pairs<S>(require(*it, "coaction", cp), out.algebra.dim(), out.algebra.dim(), h.dim(),
                                               f, key(cp, "coaction"));
            ComoduleAlgebra<S> c{out.algebra, h, rho, out.name.empty() ? "input" : out.name};
            for (const auto& ch : validate_comodule(c))
                if (ch.verdict == Verdict::Fail)
                    throw SchemaError(key(cp, "coaction"), ch.name + " fails" + (ch.witness.empty() ? "" : " at " + ch.witness));
            out.comodule = std::move(c);
        }
    }

    if (auto it = doc.find("lambda"); it != doc.end()) {
        if (it->is_string())
            out.lambda_name = it->get<std::string>();
        else
            out.lambda = parse_vector<S>(*it, out.algebra.dim(), f, "$.lambda");
    }
    return out;
}

template <ExactScalar S>
json emit_document(const PresetObject<S>& p) {
    auto algebra_json = [](const Algebra<S>& alg) {
        json j;
        j["field"] = field_json(alg.field());
        j["dim"] = alg.dim();
        if (!alg.names().empty()) j["basis_names"] = alg.names();
        json mul = json::array();
        for (Index i = 0; i < alg.dim(); ++i)
            for (Index k = 0; k < alg.dim(); ++k) {
                json terms = json::array();
                const Mat<S>& l = alg.left_mult(i);
                for (Index r = 0; r < alg.dim(); ++r)
                    if (!l(r, k).is_zero()) terms.push_back(json::array({r, scalar_json(l(r, k))}));
                if (!terms.empty()) mul.push_back(json::array({i, k, terms}));
            }
        j["mul"] = mul;
        j["unit"] = vector_json(alg.unit());
        return j;
    };
    auto hopf_json = [](const HopfData<S>& h) {
        json j;
        j["comul"] = sparse_pairs_json(h.comul, h.dim());
        j["counit"] = vector_json(h.counit);
        json anti = json::array();
        for (Index r = 0; r < h.dim(); ++r) anti.push_back(vector_json(Vec<S>(h.antipode.row(r).transpose())));
        j["antipode"] = anti;
        return j;
    };
    json out;
    out["name"] = p.name;
    json alg = algebra_json(p.algebra);
    for (auto& [k, v] : alg.items()) out[k] = v;
    if (p.hopf) out["hopf"] = hopf_json(*p.hopf);
    if (p.comodule) {
        json inner = algebra_json(p.comodule->h.algebra);
        inner.erase("field");
        inner["hopf"] = hopf_json(p.comodule->h);
        out["comodule"] = json{{"hopf", inner}, {"coaction", sparse_pairs_json(p.comodule->coaction, p.comodule->h.dim())}};
    }
    if (!p.default_lambda.empty()) out["lambda"] = p.default_lambda;
    return out;
}

#define FROBKIT_INSTANTIATE_JSON(S)                                                   \
    template json scalar_json<S>(const S&);                                           \
    template S parse_scalar<S>(const json&, const FieldSpec&, const std::string&);    \
    template Document<S> parse_document<S>(const json&);                              \
    template json emit_document<S>(const PresetObject<S>&);

FROBKIT_INSTANTIATE_JSON(Rational)
FROBKIT_INSTANTIATE_JSON(Zp)

}  // namespace frobkit
