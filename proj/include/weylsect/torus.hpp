#ifndef WEYLSECT_TORUS_HPP
#define WEYLSECT_TORUS_HPP

#include "lattice.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace weylsect {

/// Formal coefficient domain for torus coordinates: monomials
/// zeta^{e0} * prod p_k^{e_k} where zeta is a formal primitive M-th root of
/// unity and the p_k are named parameters.  A parameter may carry a finite
/// order d (then its exponent lives in Z/d); order 0 means free.
struct MonomialGroup {
    long long modulus = 24;
    std::vector<std::string> params;
    std::vector<long long> orders; // 0 = free

    MonomialGroup() = default;
    MonomialGroup(long long m, std::vector<std::string> names)
        : modulus(m), params(std::move(names)), orders(params.size(), 0) {
        require(m > 0 && m % 2 == 0, "modulus must be a positive even integer");
    }
    MonomialGroup(long long m, std::vector<std::string> names,
                  std::vector<long long> ords)
        : modulus(m), params(std::move(names)), orders(std::move(ords)) {
        require(m > 0 && m % 2 == 0, "modulus must be a positive even integer");
        require(params.size() == orders.size(), "params/orders size mismatch");
    }

    size_t nparams() const { return params.size(); }
    int param_index(const std::string& name) const {
        for (size_t i = 0; i < params.size(); ++i)
            if (params[i] == name)
                return static_cast<int>(i);
        throw error("unknown parameter " + name);
    }
    friend bool operator==(const MonomialGroup& a, const MonomialGroup& b) {
        return a.modulus == b.modulus && a.params == b.params && a.orders == b.orders;
    }
};

struct Monomial {
    long long zeta = 0;                 // exponent of the M-th root of unity
    std::vector<long long> e;           // parameter exponents

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.zeta == b.zeta && a.e == b.e;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.zeta != b.zeta)
            return a.zeta < b.zeta;
        return a.e < b.e;
    }
};

class TorusElement {
  public:
    TorusElement() = default;
    TorusElement(const MonomialGroup* g, int rank)
        : g_(g), x_(rank, Monomial{0, std::vector<long long>(g->nparams(), 0)}) {}

    const MonomialGroup& group() const { return *g_; }
    const MonomialGroup* group_ptr() const { return g_; }
    int rank() const { return static_cast<int>(x_.size()); }
    const Monomial& coord(int i) const { return x_[i]; }

    void set_zeta(int i, long long z) {
        x_[i].zeta = imod(z, g_->modulus);
    }
    void mul_zeta(int i, long long z) { set_zeta(i, x_[i].zeta + z); }
    void set_param_exp(int i, int k, long long v) {
        x_[i].e[k] = reduce_exp(k, v);
    }
    void add_param_exp(int i, int k, long long v) {
        x_[i].e[k] = reduce_exp(k, x_[i].e[k] + v);
    }

    bool is_identity() const {
        for (const auto& m : x_) {
            if (m.zeta != 0)
                return false;
            for (long long v : m.e)
                if (v != 0)
                    return false;
        }
        return true;
    }

    friend bool operator==(const TorusElement& a, const TorusElement& b) {
        return a.x_ == b.x_;
    }
    friend bool operator!=(const TorusElement& a, const TorusElement& b) {
        return !(a == b);
    }
    friend bool operator<(const TorusElement& a, const TorusElement& b) {
        return a.x_ < b.x_;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < rank(); ++i) {
            if (i)
                s += ", ";
            s += coord_str(i);
        }
        return s + ")";
    }
    std::string coord_str(int i) const {
        const Monomial& m = x_[i];
        std::string s;
        if (m.zeta != 0) {
            if (2 * m.zeta == g_->modulus)
                s = "-1";
            else
                s = "z^" + std::to_string(m.zeta);
        }
        for (size_t k = 0; k < m.e.size(); ++k) {
            if (m.e[k] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += g_->params[k];
            if (m.e[k] != 1)
                s += "^" + std::to_string(m.e[k]);
        }
        return s.empty() ? "1" : s;
    }

  private:
    long long reduce_exp(int k, long long v) const {
        long long d = g_->orders[k];
        return d > 0 ? imod(v, d) : v;
    }

    const MonomialGroup* g_ = nullptr;
    std::vector<Monomial> x_;

    friend TorusElement t_mul(const TorusElement&, const TorusElement&);
    friend TorusElement t_inv(const TorusElement&);
    friend TorusElement t_pow(const TorusElement&, long long);
    friend TorusElement weyl_act(const IsogenyLattice&, const WeylWord&,
                                 const TorusElement&);
};

inline TorusElement t_identity(const MonomialGroup& g, int rank) {
    return TorusElement(&g, rank);
}

inline TorusElement t_mul(const TorusElement& a, const TorusElement& b) {
    require(a.g_ == b.g_ || *a.g_ == *b.g_, "torus elements from different groups");
    require(a.rank() == b.rank(), "torus elements of different rank");
    TorusElement r = a;
    for (int i = 0; i < r.rank(); ++i) {
        r.mul_zeta(i, b.x_[i].zeta);
        for (size_t k = 0; k < b.x_[i].e.size(); ++k)
            r.add_param_exp(i, static_cast<int>(k), b.x_[i].e[k]);
    }
    return r;
}

inline TorusElement t_inv(const TorusElement& a) {
    TorusElement r(a.g_, a.rank());
    for (int i = 0; i < a.rank(); ++i) {
        r.set_zeta(i, -a.x_[i].zeta);
        for (size_t k = 0; k < a.x_[i].e.size(); ++k)
            r.set_param_exp(i, static_cast<int>(k), -a.x_[i].e[k]);
    }
    return r;
}

inline TorusElement t_pow(const TorusElement& a, long long n) {
    TorusElement r(a.g_, a.rank());
    for (int i = 0; i < a.rank(); ++i) {
        r.set_zeta(i, a.x_[i].zeta * n);
        for (size_t k = 0; k < a.x_[i].e.size(); ++k)
            r.set_param_exp(i, static_cast<int>(k), a.x_[i].e[k] * n);
    }
    return r;
}

/// Action of a Weyl word on a torus element through the lattice matrices:
/// the new j-th coordinate is prod_i x_i^{C[j][i]} with C the word matrix.
inline TorusElement weyl_act(const IsogenyLattice& lat, const WeylWord& w,
                             const TorusElement& t) {
    require(t.rank() == lat.rank(), "torus element rank mismatch");
    ActionMat c = lat.word_matrix(w);
    TorusElement r(t.g_, t.rank());
    for (int j = 0; j < t.rank(); ++j) {
        long long z = 0;
        std::vector<long long> e(t.group().nparams(), 0);
        for (int i = 0; i < t.rank(); ++i) {
            if (c[j][i] == 0)
                continue;
            z += c[j][i] * t.x_[i].zeta;
            for (size_t k = 0; k < e.size(); ++k)
                e[k] += c[j][i] * t.x_[i].e[k];
        }
        r.set_zeta(j, z);
        for (size_t k = 0; k < e.size(); ++k)
            r.set_param_exp(j, static_cast<int>(k), e[k]);
    }
    return r;
}

/// alpha^vee(-1) as a torus element: zeta^{M/2 * d_j} in each coordinate.
inline TorusElement coroot_eval_minus1(const IsogenyLattice& lat,
                                       const MonomialGroup& g, int root_index) {
    const auto& d = lat.coroot_vector(root_index);
    TorusElement r(&g, lat.rank());
    for (int j = 0; j < lat.rank(); ++j)
        r.set_zeta(j, (g.modulus / 2) * d[j]);
    return r;
}

/// Evaluation homomorphism sending each parameter to a power of zeta.
inline TorusElement specialize(const TorusElement& t, const MonomialGroup& target,
                               const std::vector<long long>& assignment) {
    require(assignment.size() == t.group().nparams(),
            "specialize: assignment must cover every parameter");
    TorusElement r(&target, t.rank());
    for (int i = 0; i < t.rank(); ++i) {
        long long z = t.coord(i).zeta;
        for (size_t k = 0; k < assignment.size(); ++k)
            z += t.coord(i).e[k] * assignment[k];
        r.set_zeta(i, z);
    }
    return r;
}

/// Generic multiplicative order: 0 encodes infinite (some free-parameter
/// exponent is nonzero); torsion parameters contribute their generic order.
inline long long torus_order(const TorusElement& t) {
    const MonomialGroup& g = t.group();
    long long ord = 1;
    for (int i = 0; i < t.rank(); ++i) {
        const Monomial& m = t.coord(i);
        for (size_t k = 0; k < m.e.size(); ++k) {
            if (m.e[k] == 0)
                continue;
            if (g.orders[k] == 0)
                return 0;
            long long d = g.orders[k];
            ord = illcm(ord, d / std::gcd(d, m.e[k]));
        }
        if (m.zeta != 0)
            ord = illcm(ord, g.modulus / std::gcd(g.modulus, m.zeta));
    }
    return ord;
}

} // namespace weylsect

#endif
