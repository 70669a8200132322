#ifndef WEYLSECT_SOLVER_HPP
#define WEYLSECT_SOLVER_HPP

#include "extweyl.hpp"
#include "intmat.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace weylsect {

inline std::string aij_name(int i, int j) {
    return "a_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

/// One homogeneous monomial relation over the a_{i,j}: the exponent vector
/// must evaluate to zeta^{-zconst}.
struct ConstraintRow {
    std::vector<long long> coef; // indexed by p(i,l) = (i-1)*n + (l-1)
    long long zconst = 0;
};

/// The braid equations on the unknown torus elements t_1..t_n, flattened to
/// exponent rows over the n^2 parameters a_{i,j}.
struct ConstraintSystem {
    const IsogenyLattice* lat = nullptr;
    MonomialGroup params; // the a_{i,j}, all free
    std::vector<ConstraintRow> rows;
    std::vector<std::pair<int, int>> row_pair; // (i,k) the row came from

    int rank() const { return lat->rank(); }
    static int pindex(int n, int i, int l) { return (i - 1) * n + (l - 1); }
};

/// For each unordered pair (i,k) the braid equation
///   t_i s_i(t_k) s_i s_k(t_i) ... = t_k s_k(t_i) s_k s_i(t_k) ...
/// with m(i,k) factors per side, expanded through the lattice action.  The
/// canonical-lift factors cancel (equal numbers on both sides), so only the
/// torus actions appear.
inline ConstraintSystem generate_constraints(const IsogenyLattice& lat,
                                             long long modulus = 24) {
    const RootSystem& sys = *lat.sys;
    const int n = sys.rank;
    ConstraintSystem cs;
    cs.lat = &lat;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            names.push_back(aij_name(i, j));
    cs.params = MonomialGroup(modulus, std::move(names));

    std::vector<TorusElement> t;
    for (int i = 1; i <= n; ++i) {
        TorusElement ti(&cs.params, n);
        for (int l = 1; l <= n; ++l)
            ti.set_param_exp(l - 1, ConstraintSystem::pindex(n, i, l), 1);
        t.push_back(std::move(ti));
    }

    auto alternating_product = [&](int first, int second, int m) {
        TorusElement acc = t_identity(cs.params, n);
        WeylWord prefix;
        for (int step = 0; step < m; ++step) {
            int letter = (step % 2 == 0) ? first : second;
            acc = t_mul(acc, weyl_act(lat, prefix, t[letter - 1]));
            prefix.push_back(letter);
        }
        return acc;
    };

    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            int m = sys.coxeter_m[i - 1][k - 1];
            TorusElement lhs = alternating_product(i, k, m);
            TorusElement rhs = alternating_product(k, i, m);
            for (int l = 0; l < n; ++l) {
                ConstraintRow row;
                row.coef.resize(n * n);
                bool nonzero = false;
                for (int p = 0; p < n * n; ++p) {
                    row.coef[p] = lhs.coord(l).e[p] - rhs.coord(l).e[p];
                    nonzero = nonzero || row.coef[p] != 0;
                }
                row.zconst = imod(lhs.coord(l).zeta - rhs.coord(l).zeta, modulus);
                require(row.zconst == 0,
                        "braid rows must be homogeneous in the root of unity");
                if (nonzero || row.zconst != 0) {
                    cs.rows.push_back(std::move(row));
                    cs.row_pair.emplace_back(i, k);
                }
            }
        }
    return cs;
}

inline IMat constraint_matrix(const ConstraintSystem& cs) {
    const size_t n2 = cs.params.nparams();
    IMat m;
    for (const auto& row : cs.rows) {
        IVec r(n2);
        for (size_t p = 0; p < n2; ++p)
            r[p] = row.coef[p];
        m.push_back(std::move(r));
    }
    return m;
}

/// Solved parametrization of all sections: free parameters, torsion
/// parameters with their orders, and the t_i expressed in them.
struct SectionFamily {
    const IsogenyLattice* lat = nullptr;
    MonomialGroup base;               // the a_{i,j}
    MonomialGroup solved;             // kept parameters, orders attached
    std::vector<int> kept_column;     // solved param -> SNF column
    IMat v;                           // unimodular change of parameter basis
    IMat vinv;
    std::vector<Int> diag;            // SNF invariant factors of the rows
    std::vector<TorusElement> values; // t_1..t_n over `solved`
    long long minimal_modulus = 2;
    IMat row_lattice;                 // HNF basis of the constraint rows

    int rank() const { return lat->rank(); }
    std::vector<std::string> free_names() const {
        std::vector<std::string> r;
        for (size_t k = 0; k < solved.nparams(); ++k)
            if (solved.orders[k] == 0)
                r.push_back(solved.params[k]);
        return r;
    }
    std::vector<std::pair<std::string, long long>> torsion_params() const {
        std::vector<std::pair<std::string, long long>> r;
        for (size_t k = 0; k < solved.nparams(); ++k)
            if (solved.orders[k] > 0)
                r.emplace_back(solved.params[k], solved.orders[k]);
        return r;
    }
};

/// Solve the homogeneous monomial system by Smith normal form of the
/// exponent matrix.  Free parameters correspond to zero invariant factors,
/// torsion parameters to factors > 1.
inline SectionFamily solve_constraints(const ConstraintSystem& cs) {
    const int n = cs.rank();
    const size_t n2 = cs.params.nparams();
    SectionFamily fam;
    fam.lat = cs.lat;
    fam.base = cs.params;

    IMat rmat = constraint_matrix(cs);
    fam.row_lattice = hermite_row_basis(rmat);
    SmithForm snf = smith_normal_form(rmat.empty() ? imat_zero(0, n2) : rmat);
    if (rmat.empty()) {
        snf.v = imat_identity(n2);
        snf.vinv = imat_identity(n2);
    }
    fam.v = snf.v;
    fam.vinv = snf.vinv;
    fam.diag.assign(n2, Int(0));
    auto d = snf.diag();
    for (size_t j = 0; j < d.size() && j < n2; ++j)
        fam.diag[j] = d[j];

    std::vector<std::string> names;
    std::vector<long long> orders;
    long long minimal = 2;
    for (size_t j = 0; j < n2; ++j) {
        Int dj = fam.diag[j];
        if (dj == 1)
            continue;
        fam.kept_column.push_back(static_cast<int>(j));
        long long order = dj == 0 ? 0 : checked_ll(dj, "torsion order");
        orders.push_back(order);
        if (order > 1)
            minimal = illcm(minimal, order);
        // Reuse the a_{i,j} name when the new parameter is exactly one of them.
        std::string nm;
        bool unit = false;
        for (size_t p = 0; p < n2 && !unit; ++p) {
            if (snf.vinv[j][p] == 1) {
                bool rest = true;
                for (size_t q = 0; q < n2; ++q)
                    if (q != p && snf.vinv[j][q] != 0) {
                        rest = false;
                        break;
                    }
                if (rest) {
                    nm = cs.params.params[p];
                    unit = true;
                }
            }
        }
        if (!unit)
            nm = "u" + std::to_string(fam.kept_column.size());
        names.push_back(nm);
    }
    fam.minimal_modulus = minimal;
    require(cs.params.modulus % minimal == 0,
            "modulus must be a multiple of the family's minimal modulus " +
                std::to_string(minimal));
    fam.solved = MonomialGroup(cs.params.modulus, names, orders);

    for (int i = 1; i <= n; ++i) {
        TorusElement ti(&fam.solved, n);
        for (int l = 1; l <= n; ++l) {
            int p = ConstraintSystem::pindex(n, i, l);
            for (size_t k = 0; k < fam.kept_column.size(); ++k) {
                Int e = snf.v[p][fam.kept_column[k]];
                if (e != 0)
                    ti.set_param_exp(l - 1, static_cast<int>(k),
                                     checked_ll(e, "value map exponent"));
            }
        }
        fam.values.push_back(std::move(ti));
    }
    return fam;
}

/// Re-substitute the solved values into freshly generated braid equations.
inline bool verify_family(const SectionFamily& fam) {
    const RootSystem& sys = *fam.lat->sys;
    const int n = sys.rank;
    auto alternating = [&](int first, int second, int m) {
        TorusElement acc = t_identity(fam.solved, n);
        WeylWord prefix;
        for (int step = 0; step < m; ++step) {
            int letter = (step % 2 == 0) ? first : second;
            acc = t_mul(acc, weyl_act(*fam.lat, prefix, fam.values[letter - 1]));
            prefix.push_back(letter);
        }
        return acc;
    };
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) {
            int m = sys.coxeter_m[i - 1][k - 1];
            if (!(alternating(i, k, m) == alternating(k, i, m)))
                return false;
        }
    return true;
}

/// Build the Section whose t_i are the family values specialized at the
/// given parameter assignment (zeta exponents).
inline Section specialize_family(const SectionFamily& fam, const MonomialGroup& target,
                                 const std::vector<long long>& assignment) {
    std::vector<TorusElement> vals;
    for (const auto& v : fam.values)
        vals.push_back(specialize(v, target, assignment));
    return Section(*fam.lat, std::move(vals));
}

/// All root-of-unity points of the family at modulus M, flattened to the
/// n^2 zeta exponents of (t_1, ..., t_n).
inline std::set<std::vector<long long>> family_specializations(const SectionFamily& fam,
                                                               long long m) {
    require(m % 2 == 0, "modulus must be even");
    const int n = fam.rank();
    std::vector<long long> domain; // number of values per parameter
    std::vector<long long> step;
    for (size_t k = 0; k < fam.solved.nparams(); ++k) {
        long long d = fam.solved.orders[k];
        if (d == 0) {
            domain.push_back(m);
            step.push_back(1);
        } else {
            require(m % d == 0, "modulus incompatible with torsion order");
            domain.push_back(d);
            step.push_back(m / d);
        }
    }
    std::set<std::vector<long long>> out;
    std::vector<long long> counter(domain.size(), 0);
    while (true) {
        std::vector<long long> u(domain.size());
        for (size_t k = 0; k < domain.size(); ++k)
            u[k] = imod(counter[k] * step[k], m);
        std::vector<long long> flat(n * n);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                long long z = fam.values[i].coord(l).zeta;
                for (size_t k = 0; k < u.size(); ++k)
                    z += fam.values[i].coord(l).e[k] * u[k];
                flat[i * n + l] = imod(z, m);
            }
        out.insert(std::move(flat));
        size_t pos = 0;
        while (pos < domain.size() && ++counter[pos] == domain[pos]) {
            counter[pos] = 0;
            ++pos;
        }
        if (pos == domain.size())
            break;
        if (domain.empty())
            break;
    }
    return out;
}

/// Exhaustive search for sections over the M-th roots of unity: every
/// assignment of zeta exponents to every coordinate of every t_i is tested
/// against the braid relations by direct products of lifts.
inline std::set<std::vector<long long>> brute_force_sections(const IsogenyLattice& lat,
                                                             long long m) {
    const RootSystem& sys = *lat.sys;
    const int n = sys.rank;
    require(n <= 3, "brute force guarded to rank <= 3; use the symbolic solver");
    require(m <= 12 && m % 2 == 0, "brute force guarded to even M <= 12");
    MonomialGroup g(m, {});
    std::set<std::vector<long long>> out;
    std::vector<long long> flat(n * n, 0);

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            pairs.emplace_back(i, k);

    while (true) {
        std::vector<TorusElement> t;
        for (int i = 0; i < n; ++i) {
            TorusElement ti(&g, n);
            for (int l = 0; l < n; ++l)
                ti.set_zeta(l, flat[i * n + l]);
            t.push_back(std::move(ti));
        }
        bool ok = true;
        for (const auto& [i, k] : pairs) {
            int mk = sys.coxeter_m[i - 1][k - 1];
            ExtendedElement lhs = ext_neutral(lat, g);
            ExtendedElement rhs = ext_neutral(lat, g);
            for (int step = 0; step < mk && ok; ++step) {
                int a = (step % 2 == 0) ? i : k;
                int b = (step % 2 == 0) ? k : i;
                lhs = ext_mul(lhs, ExtendedElement(lat, t[a - 1], {a}));
                rhs = ext_mul(rhs, ExtendedElement(lat, t[b - 1], {b}));
            }
            if (!(lhs == rhs)) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.insert(flat);
        int pos = 0;
        while (pos < n * n && ++flat[pos] == m) {
            flat[pos] = 0;
            ++pos;
        }
        if (pos == n * n)
            break;
    }
    return out;
}

} // namespace weylsect

#endif
