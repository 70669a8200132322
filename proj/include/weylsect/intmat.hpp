#ifndef WEYLSECT_INTMAT_HPP
#define WEYLSECT_INTMAT_HPP

#include "common.hpp"

#include <algorithm>
#include <cstddef>

namespace weylsect {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

inline IMat imat_zero(size_t m, size_t n) { return IMat(m, IVec(n, Int(0))); }

inline IMat imat_identity(size_t n) {
    IMat a = imat_zero(n, n);
    for (size_t i = 0; i < n; ++i)
        a[i][i] = 1;
    return a;
}

inline IMat imat_mul(const IMat& a, const IMat& b) {
    const size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IMat c = imat_zero(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline IMat imat_transpose(const IMat& a) {
    if (a.empty())
        return {};
    IMat t = imat_zero(a[0].size(), a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

inline IVec imat_apply(const IMat& a, const IVec& x) {
    IVec y(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j)
            y[i] += a[i][j] * x[j];
    return y;
}

/// Smith normal form U A V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... | d_r, d_i >= 0.  vinv is maintained as V^{-1}.
struct SmithForm {
    IMat u;    // rows transform, m x m
    IMat d;    // m x n diagonal
    IMat v;    // cols transform, n x n
    IMat vinv; // V^{-1}
    std::vector<Int> diag() const {
        size_t k = std::min(d.size(), d.empty() ? size_t(0) : d[0].size());
        std::vector<Int> r(k);
        for (size_t i = 0; i < k; ++i)
            r[i] = d[i][i];
        return r;
    }
};

namespace detail {

inline void row_swap(IMat& a, IMat& u, size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
}

inline void row_addmul(IMat& a, IMat& u, size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < a[dst].size(); ++j)
        a[dst][j] += f * a[src][j];
    for (size_t j = 0; j < u[dst].size(); ++j)
        u[dst][j] += f * u[src][j];
}

inline void row_negate(IMat& a, IMat& u, size_t i) {
    for (auto& x : a[i])
        x = -x;
    for (auto& x : u[i])
        x = -x;
}

inline void col_swap(IMat& a, IMat& v, IMat& vinv, size_t i, size_t j) {
    for (auto& row : a)
        std::swap(row[i], row[j]);
    for (auto& row : v)
        std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
}

// col_j += f * col_i;  V^{-1} gets row_i -= f * row_j.
inline void col_addmul(IMat& a, IMat& v, IMat& vinv, size_t j, size_t i, const Int& f) {
    for (auto& row : a)
        row[j] += f * row[i];
    for (auto& row : v)
        row[j] += f * row[i];
    for (size_t k = 0; k < vinv[i].size(); ++k)
        vinv[i][k] -= f * vinv[j][k];
}

inline void col_negate(IMat& a, IMat& v, IMat& vinv, size_t i) {
    for (auto& row : a)
        row[i] = -row[i];
    for (auto& row : v)
        row[i] = -row[i];
    for (auto& x : vinv[i])
        x = -x;
}

} // namespace detail

inline SmithForm smith_normal_form(IMat a) {
    using namespace detail;
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();
    SmithForm s;
    s.u = imat_identity(m);
    s.v = imat_identity(n);
    s.vinv = imat_identity(n);
    if (m == 0 || n == 0) {
        s.d = a;
        return s;
    }
    const size_t steps = std::min(m, n);
    for (size_t t = 0; t < steps; ++t) {
        // Find the nonzero entry of smallest absolute value in the trailing block.
        size_t pi = t, pj = t;
        Int best(0);
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (a[i][j] == 0)
                    continue;
                Int av = a[i][j] < 0 ? Int(-a[i][j]) : a[i][j];
                if (best == 0 || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        if (pi != t)
            row_swap(a, s.u, t, pi);
        if (pj != t)
            col_swap(a, s.v, s.vinv, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0)
                    continue;
                Int q = a[i][t] / a[t][t];
                row_addmul(a, s.u, i, t, -q);
                if (a[i][t] != 0) {
                    row_swap(a, s.u, t, i); // smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0)
                    continue;
                Int q = a[t][j] / a[t][t];
                col_addmul(a, s.v, s.vinv, j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(a, s.v, s.vinv, t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Pivot must divide every entry of the trailing block.
            for (size_t i = t + 1; i < m && clean; ++i)
                for (size_t j = t + 1; j < n && clean; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_addmul(a, s.u, t, i, Int(1));
                        clean = false;
                    }
        }
        if (a[t][t] < 0)
            row_negate(a, s.u, t);
    }
    s.d = std::move(a);
    return s;
}

/// Row Hermite normal form: canonical upper-echelon basis of the row lattice.
/// Returns only the nonzero rows; pivots positive, entries above a pivot
/// reduced into [0, pivot).
inline IMat hermite_row_basis(IMat a) {
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // Euclidean elimination within the column.
        while (true) {
            size_t p = m;
            Int best(0);
            for (size_t i = row; i < m; ++i) {
                if (a[i][col] == 0)
                    continue;
                Int av = a[i][col] < 0 ? Int(-a[i][col]) : a[i][col];
                if (best == 0 || av < best) {
                    best = av;
                    p = i;
                }
            }
            if (p == m)
                break;
            std::swap(a[p], a[row]);
            if (a[row][col] < 0)
                for (auto& x : a[row])
                    x = -x;
            bool done = true;
            for (size_t i = row + 1; i < m; ++i) {
                if (a[i][col] == 0)
                    continue;
                Int q = a[i][col] / a[row][col];
                for (size_t j = 0; j < n; ++j)
                    a[i][j] -= q * a[row][j];
                if (a[i][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a[row][col] == 0)
            continue;
        for (size_t i = 0; i < row; ++i) {
            Int q = a[i][col] / a[row][col];
            if (a[i][col] % a[row][col] < 0)
                q -= 1;
            if (q != 0)
                for (size_t j = 0; j < n; ++j)
                    a[i][j] -= q * a[row][j];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

inline bool lattice_equal(const IMat& gens_a, const IMat& gens_b) {
    return hermite_row_basis(gens_a) == hermite_row_basis(gens_b);
}

/// Membership of v in the row lattice of hnf (a hermite_row_basis output).
inline bool lattice_contains(const IMat& hnf, IVec v) {
    const size_t n = v.size();
    for (const auto& row : hnf) {
        size_t col = 0;
        while (col < n && row[col] == 0)
            ++col;
        if (col == n)
            continue;
        if (v[col] % row[col] != 0)
            continue;
        Int q = v[col] / row[col];
        if (q != 0)
            for (size_t j = 0; j < n; ++j)
                v[j] -= q * row[j];
    }
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

/// Basis of the integer kernel {x : A x = 0}, returned as rows.
inline IMat kernel_basis(const IMat& a) {
    const size_t n = a.empty() ? 0 : a[0].size();
    SmithForm s = smith_normal_form(a);
    IMat ker;
    auto diag = s.diag();
    for (size_t j = 0; j < n; ++j) {
        bool zero = j >= diag.size() || diag[j] == 0;
        if (!zero)
            continue;
        IVec col(n);
        for (size_t i = 0; i < n; ++i)
            col[i] = s.v[i][j];
        ker.push_back(std::move(col));
    }
    return ker;
}

/// Solve A x = b over the integers.  Returns true and fills x on success.
inline bool solve_integer(const IMat& a, const IVec& b, IVec& x) {
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();
    SmithForm s = smith_normal_form(a);
    IVec c = imat_apply(s.u, b);
    IVec y(n, Int(0));
    auto diag = s.diag();
    for (size_t i = 0; i < m; ++i) {
        Int d = i < diag.size() ? diag[i] : Int(0);
        if (d == 0) {
            if (c[i] != 0)
                return false;
        } else {
            if (c[i] % d != 0)
                return false;
            y[i] = c[i] / d;
        }
    }
    x = imat_apply(s.v, y);
    return true;
}

/// Intersection of the row lattices of A and B.
inline IMat lattice_intersection(const IMat& a, const IMat& b) {
    if (a.empty() || b.empty())
        return {};
    const size_t n = a[0].size();
    // x = u A = w B  <=>  (u, w) in ker [A^T | -B^T].
    IMat sys = imat_zero(n, a.size() + b.size());
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < n; ++i)
            sys[i][j] = a[j][i];
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < n; ++i)
            sys[i][a.size() + j] = -b[j][i];
    IMat ker = kernel_basis(sys);
    IMat result;
    for (const auto& uw : ker) {
        IVec x(n, Int(0));
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t i = 0; i < n; ++i)
                x[i] += uw[j] * a[j][i];
        result.push_back(std::move(x));
    }
    return hermite_row_basis(result);
}

inline IMat lattice_sum(IMat a, const IMat& b) {
    for (const auto& row : b)
        a.push_back(row);
    return hermite_row_basis(a);
}

inline bool is_full_lattice(const IMat& gens, size_t n) {
    return lattice_equal(gens, imat_identity(n));
}

} // namespace weylsect

#endif
