#ifndef WEYLSECT_LATTICE_HPP
#define WEYLSECT_LATTICE_HPP

#include "rootsys.hpp"

#include <string>
#include <vector>

namespace weylsect {

enum class IsogenyKind { simply_connected, adjoint, middle_a, coweight };

/// Identifies a cocharacter lattice between the coroot and coweight lattices.
/// For type A the middle isogenies carry the divisor a of n+1; for type D the
/// middle lattices are generated over the coroots by a fundamental coweight
/// (1, n-1 or n).
struct IsogenyTag {
    IsogenyKind kind = IsogenyKind::simply_connected;
    int param = 0;

    static IsogenyTag sc() { return {IsogenyKind::simply_connected, 0}; }
    static IsogenyTag adjoint() { return {IsogenyKind::adjoint, 0}; }
    static IsogenyTag middle(int a) { return {IsogenyKind::middle_a, a}; }
    static IsogenyTag coweight(int i) { return {IsogenyKind::coweight, i}; }

    friend bool operator==(const IsogenyTag& a, const IsogenyTag& b) {
        return a.kind == b.kind && a.param == b.param;
    }

    std::string str() const {
        switch (kind) {
        case IsogenyKind::simply_connected:
            return "sc";
        case IsogenyKind::adjoint:
            return "adjoint";
        case IsogenyKind::middle_a:
            return "middle:" + std::to_string(param);
        case IsogenyKind::coweight:
            return "coweight:" + std::to_string(param);
        }
        return "?";
    }
};

using ActionMat = std::vector<std::vector<long long>>; // rank x rank, columns are images

/// A cocharacter lattice X_*(T) with a chosen basis, the coroot coordinates
/// in that basis, and the integer matrices of the simple reflections.
/// Immutable after construction.
class IsogenyLattice {
  public:
    const RootSystem* sys = nullptr;
    IsogenyTag tag;
    std::vector<std::string> basis_names;
    std::vector<RatVec> basis;                 // ambient coordinates
    std::vector<ActionMat> action;             // per simple reflection
    ActionMat coroot_coords;                   // row i = alpha_i^vee in basis
    std::vector<std::vector<long long>> root_coords; // coroot of every root

    int rank() const { return sys->rank; }

    const ActionMat& action_of(int i) const { return action[i - 1]; }

    /// Exact integer coordinates of the coroot of the given root.
    const std::vector<long long>& coroot_vector(int root_index) const {
        return root_coords[root_index];
    }
    std::vector<long long> coroot_vector(const RatVec& root) const {
        return root_coords[sys->root_index(root)];
    }

    /// Product of action matrices along a word (leftmost letter outermost).
    ActionMat word_matrix(const WeylWord& w) const {
        const int n = rank();
        ActionMat m(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            m[i][i] = 1;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            m = mat_mul(action_of(*it), m);
        return m;
    }

    static ActionMat mat_mul(const ActionMat& a, const ActionMat& b) {
        const size_t n = a.size();
        ActionMat c(n, std::vector<long long>(n, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                if (a[i][k] == 0)
                    continue;
                for (size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    }
};

namespace detail {

/// Fundamental coweight omega_i: the element of the coroot span pairing to
/// delta_{ij} against the simple roots.
inline RatVec fundamental_coweight(const RootSystem& sys, int i) {
    const int n = sys.rank;
    RatMat cols(n);
    for (int k = 1; k <= n; ++k)
        cols[k - 1] = sys.simple_coroot(k);
    // Solve sum_k c_k <alpha_k^vee, alpha_j> = delta_{ij} for the c_k.
    RatMat pairing_cols(n, RatVec(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            pairing_cols[k][j] = Rat(sys.cartan[k][j]);
    RatVec rhs(n, Rat(0));
    rhs[i - 1] = Rat(1);
    RatVec c = solve_in_columns(pairing_cols, rhs);
    RatVec w(sys.ambient_dim, Rat(0));
    for (int k = 0; k < n; ++k)
        w = rv_add(w, rv_scale(c[k], cols[k]));
    return w;
}

inline void check_isogeny(const RootSystem& sys, const IsogenyTag& tag) {
    switch (tag.kind) {
    case IsogenyKind::simply_connected:
    case IsogenyKind::adjoint:
        return;
    case IsogenyKind::middle_a:
        require(sys.type_tag == 'A', "middle:a isogenies exist only in type A");
        require(tag.param > 1 && tag.param < sys.rank + 1,
                "middle isogeny requires 1 < a < n+1");
        require((sys.rank + 1) % tag.param == 0,
                "middle isogeny requires a to divide n+1");
        return;
    case IsogenyKind::coweight:
        require(sys.type_tag == 'D', "coweight isogenies exist only in type D");
        require(tag.param == 1 || tag.param == sys.rank - 1 || tag.param == sys.rank,
                "coweight isogeny must use omega_1, omega_{n-1} or omega_n");
        if (tag.param != 1)
            require(sys.rank % 2 == 0,
                    "coweight omega_{n-1}/omega_n isogenies require even rank");
        return;
    }
}

} // namespace detail

inline IsogenyLattice build_lattice(const RootSystem& sys, const IsogenyTag& tag) {
    detail::check_isogeny(sys, tag);
    IsogenyLattice lat;
    lat.sys = &sys;
    lat.tag = tag;
    const int n = sys.rank;

    auto coroot_name = [](int i) { return "a" + std::to_string(i) + "v"; };
    auto coweight_name = [](int i) { return "w" + std::to_string(i); };

    switch (tag.kind) {
    case IsogenyKind::simply_connected:
        for (int i = 1; i <= n; ++i) {
            lat.basis.push_back(sys.simple_coroot(i));
            lat.basis_names.push_back(coroot_name(i));
        }
        break;
    case IsogenyKind::adjoint:
        if (sys.type_tag == 'E' && sys.rank == 8) {
            // E8 is simply connected and adjoint; the coroots are the basis.
            for (int i = 1; i <= n; ++i) {
                lat.basis.push_back(sys.simple_coroot(i));
                lat.basis_names.push_back(coroot_name(i));
            }
        } else if (sys.type_tag == 'F' || sys.type_tag == 'G') {
            for (int i = 1; i <= n; ++i) {
                lat.basis.push_back(sys.simple_coroot(i));
                lat.basis_names.push_back(coroot_name(i));
            }
        } else {
            for (int i = 1; i <= n; ++i) {
                lat.basis.push_back(detail::fundamental_coweight(sys, i));
                lat.basis_names.push_back(coweight_name(i));
            }
        }
        break;
    case IsogenyKind::middle_a:
        for (int i = 1; i < n; ++i) {
            lat.basis.push_back(sys.simple_coroot(i));
            lat.basis_names.push_back(coroot_name(i));
        }
        lat.basis.push_back(detail::fundamental_coweight(sys, tag.param));
        lat.basis_names.push_back(coweight_name(tag.param));
        break;
    case IsogenyKind::coweight:
        if (tag.param == 1) {
            for (int i = 1; i < n; ++i) {
                lat.basis.push_back(sys.simple_coroot(i));
                lat.basis_names.push_back(coroot_name(i));
            }
            lat.basis.push_back(detail::fundamental_coweight(sys, 1));
            lat.basis_names.push_back(coweight_name(1));
        } else {
            lat.basis.push_back(detail::fundamental_coweight(sys, tag.param));
            lat.basis_names.push_back(coweight_name(tag.param));
            for (int i = 2; i <= n; ++i) {
                lat.basis.push_back(sys.simple_coroot(i));
                lat.basis_names.push_back(coroot_name(i));
            }
        }
        break;
    }

    RatMat basis_cols(lat.basis.begin(), lat.basis.end());
    auto in_basis = [&](const RatVec& v) {
        RatVec c = solve_in_columns(basis_cols, v);
        std::vector<long long> out(n);
        for (int j = 0; j < n; ++j) {
            require(c[j].is_integer(),
                    "lattice coordinates not integral (wrong basis?)");
            out[j] = checked_ll(c[j].num(), "lattice coordinate");
        }
        return out;
    };

    lat.action.resize(n);
    for (int i = 1; i <= n; ++i) {
        ActionMat m(n, std::vector<long long>(n, 0));
        for (int j = 0; j < n; ++j) {
            std::vector<long long> img = in_basis(reflect(sys, i, lat.basis[j]));
            for (int k = 0; k < n; ++k)
                m[k][j] = img[k];
        }
        lat.action[i - 1] = std::move(m);
    }

    lat.coroot_coords.resize(n);
    for (int i = 1; i <= n; ++i)
        lat.coroot_coords[i - 1] = in_basis(sys.simple_coroot(i));

    lat.root_coords.resize(sys.all_roots.size());
    for (size_t r = 0; r < sys.all_roots.size(); ++r)
        lat.root_coords[r] = in_basis(sys.coroots[r]);
    return lat;
}

/// Index [X_*(T) : Q^vee], the order of the quotient the isogeny selects.
inline long long coroot_index(const IsogenyLattice& lat) {
    const int n = lat.rank();
    RatMat m(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = Rat(lat.coroot_coords[i][j]);
    // Determinant by fraction-free elimination over rationals.
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c].is_zero())
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            Rat f = m[i][c] * inv;
            for (int j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    require(det.is_integer(), "coroot index not integral");
    long long d = checked_ll(det.num(), "coroot index");
    return d < 0 ? -d : d;
}

} // namespace weylsect

#endif
