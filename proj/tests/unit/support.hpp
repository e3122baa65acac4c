// Test helpers and brute-force oracles. The oracles work on plain integer
// structure constants mod p and share no code with the library.
#ifndef FROBKIT_TESTS_SUPPORT_HPP
#define FROBKIT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "frobkit/galois.hpp"
#include "frobkit/json_io.hpp"
#include "frobkit/ktheory.hpp"
#include "frobkit/presets.hpp"

namespace fk = frobkit;

using QMat = fk::Mat<fk::Rational>;
using QVec = fk::Vec<fk::Rational>;
using PMat = fk::Mat<fk::Zp>;
using PVec = fk::Vec<fk::Zp>;

inline fk::FieldSpec QQ() { return fk::FieldSpec::rationals(); }
inline fk::FieldSpec GF(std::uint64_t p) { return fk::FieldSpec::prime(p); }

template <class S>
fk::Vec<S> vec_of(std::initializer_list<long> xs, const fk::FieldSpec& f) {
    fk::Vec<S> v(static_cast<fk::Index>(xs.size()));
    fk::Index i = 0;
    for (long x : xs) v(i++) = fk::scalar<S>(x, f);
    return v;
}

namespace oracle {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

inline long md(long a, long p) { return ((a % p) + p) % p; }

/// c[i][j][k]: coefficient of b_k in b_i b_j.
struct Table {
    long p = 0;
    int d = 0;
    std::vector<std::vector<IVec>> c;
    IVec unit;

    IVec mul(const IVec& x, const IVec& y) const {
        IVec out(d, 0);
        for (int i = 0; i < d; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (!y[j]) continue;
                const long s = x[i] * y[j] % p;
                for (int k = 0; k < d; ++k) out[k] = (out[k] + s * c[i][j][k]) % p;
            }
        }
        return out;
    }
    IVec basis(int i) const {
        IVec v(d, 0);
        v[i] = 1;
        return v;
    }
};

inline Table table_of(const fk::Algebra<fk::Zp>& alg) {
    Table t;
    t.p = static_cast<long>(alg.field().characteristic);
    t.d = static_cast<int>(alg.dim());
    t.c.assign(t.d, std::vector<IVec>(t.d, IVec(t.d, 0)));
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j)
            for (int k = 0; k < t.d; ++k) t.c[i][j][k] = static_cast<long>(alg.left_mult(i)(k, j).residue());
    for (int k = 0; k < t.d; ++k) t.unit.push_back(static_cast<long>(alg.unit()(k).residue()));
    return t;
}

/// Calls f on every vector of F_p^d.
inline void for_each_vector(int d, long p, const std::function<void(const IVec&)>& f) {
    IVec v(d, 0);
    while (true) {
        f(v);
        int i = 0;
        while (i < d && ++v[i] == p) v[i++] = 0;
        if (i == d) return;
    }
}

inline bool is_zero(const IVec& v) {
    for (long x : v)
        if (x) return false;
    return true;
}

inline bool nilpotent(const Table& t, const IVec& x) {
    IVec y = x;
    for (int k = 0; k <= t.d; ++k) {
        if (is_zero(y)) return true;
        y = t.mul(y, x);
    }
    return is_zero(y);
}

/// |rad A| by the characterisation rad A = {x : xa nilpotent for all a}.
inline long radical_size(const Table& t) {
    std::vector<IVec> all;
    for_each_vector(t.d, t.p, [&](const IVec& v) { all.push_back(v); });
    long n = 0;
    for (const auto& x : all) {
        bool in = true;
        for (const auto& a : all)
            if (!nilpotent(t, t.mul(x, a))) {
                in = false;
                break;
            }
        n += in;
    }
    return n;
}

inline long center_size(const Table& t) {
    long n = 0;
    for_each_vector(t.d, t.p, [&](const IVec& x) {
        for (int i = 0; i < t.d; ++i)
            if (t.mul(x, t.basis(i)) != t.mul(t.basis(i), x)) return;
        ++n;
    });
    return n;
}

/// Rank mod p by Gaussian elimination on rows.
inline int rank_mod(IMat rows, long p) {
    int r = 0;
    const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (md(rows[i][c], p)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        long inv = 1;
        for (long k = 1; k < p; ++k)
            if (md(rows[r][c] * k, p) == 1) inv = k;
        for (auto& x : rows[r]) x = md(x * inv, p);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && md(rows[i][c], p)) {
                const long f = md(rows[i][c], p);
                for (int k = 0; k < cols; ++k) rows[i][k] = md(rows[i][k] - f * rows[r][k], p);
            }
        ++r;
    }
    return r;
}

inline int commutator_dim(const Table& t) {
    IMat rows;
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j) {
            IVec a = t.mul(t.basis(i), t.basis(j)), b = t.mul(t.basis(j), t.basis(i));
            for (int k = 0; k < t.d; ++k) a[k] = md(a[k] - b[k], t.p);
            rows.push_back(a);
        }
    return rank_mod(rows, t.p);
}

/// Inverse mod p by Gauss-Jordan on [m | I]; empty when singular.
inline IMat inverse_mod(const IMat& m, long p) {
    const int n = static_cast<int>(m.size());
    IMat a(n, IVec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = md(m[i][j], p);
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c]) {
                piv = i;
                break;
            }
        if (piv < 0) return {};
        std::swap(a[c], a[piv]);
        long inv = 1;
        for (long k = 1; k < p; ++k)
            if (md(a[c][c] * k, p) == 1) inv = k;
        for (auto& x : a[c]) x = md(x * inv, p);
        for (int i = 0; i < n; ++i)
            if (i != c && a[i][c]) {
                const long f = a[i][c];
                for (int k = 0; k < 2 * n; ++k) a[i][k] = md(a[i][k] - f * a[c][k], p);
            }
    }
    IMat out(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

/// Higman trace a -> sum_i b_i a y_i straight from the definition: the dual
/// basis y_j = sum_k (G^-1)_{kj} b_k solves lambda(b_i y_j) = delta_ij.
inline IVec higman_trace(const Table& t, const IVec& lambda, const IVec& a) {
    IMat g(t.d, IVec(t.d, 0));
    auto lam = [&](const IVec& x) {
        long s = 0;
        for (int k = 0; k < t.d; ++k) s += lambda[k] * x[k];
        return md(s, t.p);
    };
    for (int i = 0; i < t.d; ++i)
        for (int j = 0; j < t.d; ++j) g[i][j] = lam(t.mul(t.basis(i), t.basis(j)));
    IMat gi = inverse_mod(g, t.p);
    IVec out(t.d, 0);
    for (int i = 0; i < t.d; ++i) {
        IVec y(t.d, 0);
        for (int k = 0; k < t.d; ++k) y[k] = gi[k][i];
        IVec term = t.mul(t.mul(t.basis(i), a), y);
        for (int k = 0; k < t.d; ++k) out[k] = md(out[k] + term[k], t.p);
    }
    return out;
}

}  // namespace oracle

inline oracle::IVec ints_of(const PVec& v) {
    oracle::IVec out;
    for (fk::Index i = 0; i < v.size(); ++i) out.push_back(static_cast<long>(v(i).residue()));
    return out;
}

#endif  // FROBKIT_TESTS_SUPPORT_HPP
