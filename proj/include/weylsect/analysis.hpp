#ifndef WEYLSECT_ANALYSIS_HPP
#define WEYLSECT_ANALYSIS_HPP

#include "solver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylsect {

/// Per-node orders of the lifts of the simple reflections.  Entry 0 encodes
/// infinite order; finite entries are even.
struct OrderProfile {
    std::vector<long long> orders;

    friend bool operator==(const OrderProfile& a, const OrderProfile& b) {
        return a.orders == b.orders;
    }
    friend bool operator<(const OrderProfile& a, const OrderProfile& b) {
        auto key = [](long long v) {
            return v == 0 ? std::numeric_limits<long long>::max() : v;
        };
        for (size_t i = 0; i < a.orders.size(); ++i) {
            if (key(a.orders[i]) != key(b.orders[i]))
                return key(a.orders[i]) < key(b.orders[i]);
        }
        return false;
    }
    bool all_finite() const {
        for (long long v : orders)
            if (v == 0)
                return false;
        return true;
    }
    bool uniform() const {
        for (long long v : orders)
            if (v != orders[0])
                return false;
        return true;
    }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i)
                s += ",";
            s += orders[i] == 0 ? "inf" : std::to_string(orders[i]);
        }
        return s + ")";
    }
};

/// The square of (t, s_i) is the torus element t * s_i(t) * alpha_i^vee(-1).
inline TorusElement lift_square(const IsogenyLattice& lat, const TorusElement& t,
                                int i) {
    TorusElement sq = t_mul(t, weyl_act(lat, {i}, t));
    return t_mul(sq, coroot_eval_minus1(lat, t.group(), lat.sys->simple_root_idx(i)));
}

/// Order of the lift t * sigma_i: twice the order of its square's torus
/// part; 0 encodes infinite (a free parameter survives in the square).
inline long long lift_order(const IsogenyLattice& lat, const TorusElement& t, int i) {
    long long o = torus_order(lift_square(lat, t, i));
    return o == 0 ? 0 : 2 * o;
}

enum class ProfileCmp { equal, greater, less, incomparable };

/// Product order in the "more homomorphic" direction: p is greater than q
/// when p's lift order is at most q's at every node (infinite counts as
/// larger than every finite order).
inline ProfileCmp profile_order(const OrderProfile& p, const OrderProfile& q) {
    require(p.orders.size() == q.orders.size(), "profiles of different rank");
    auto key = [](long long v) {
        return v == 0 ? std::numeric_limits<long long>::max() : v;
    };
    bool le = true, ge = true;
    for (size_t i = 0; i < p.orders.size(); ++i) {
        if (key(p.orders[i]) > key(q.orders[i]))
            ge = false;
        if (key(p.orders[i]) < key(q.orders[i]))
            le = false;
    }
    if (le && ge)
        return ProfileCmp::equal;
    if (ge)
        return ProfileCmp::greater; // smaller orders everywhere
    if (le)
        return ProfileCmp::less;
    return ProfileCmp::incomparable;
}

inline OrderProfile optimal_profile(const std::vector<OrderProfile>& set) {
    require(!set.empty(), "optimal_profile of empty set");
    for (const auto& p : set) {
        bool max = true;
        for (const auto& q : set) {
            ProfileCmp c = profile_order(p, q);
            if (c != ProfileCmp::equal && c != ProfileCmp::greater) {
                max = false;
                break;
            }
        }
        if (max)
            return p;
    }
    throw error("no unique maximal order profile; this contradicts the "
                "unique-optimum structure and should be reported");
}

/// Cover relations of the profile order (edges point from the more
/// homomorphic profile down).
inline std::vector<std::pair<int, int>> hasse_edges(const std::vector<OrderProfile>& set) {
    std::vector<std::pair<int, int>> edges;
    for (size_t a = 0; a < set.size(); ++a)
        for (size_t b = 0; b < set.size(); ++b) {
            if (profile_order(set[a], set[b]) != ProfileCmp::greater)
                continue;
            bool cover = true;
            for (size_t c = 0; c < set.size() && cover; ++c)
                if (c != a && c != b &&
                    profile_order(set[a], set[c]) == ProfileCmp::greater &&
                    profile_order(set[c], set[b]) == ProfileCmp::greater)
                    cover = false;
            if (cover)
                edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return edges;
}

/// A parameter assignment: zeta exponents, or generic (transcendental) for
/// free parameters left unspecialized.
struct Assignment {
    std::vector<long long> value;
    std::vector<bool> generic;

    static Assignment zeros(size_t n) { return {std::vector<long long>(n, 0),
                                                std::vector<bool>(n, false)}; }
};

struct ProfileEntry {
    OrderProfile profile;
    Assignment witness;
};

struct ProfileEnumeration {
    std::vector<ProfileEntry> entries; // sorted by profile
    long long modulus = 0;
    int free_effective_rank = 0; // rank of the free-parameter exponents in the squares
    std::string warning;

    std::vector<OrderProfile> profiles() const {
        std::vector<OrderProfile> r;
        for (const auto& e : entries)
            r.push_back(e.profile);
        return r;
    }
    const ProfileEntry* find(const OrderProfile& p) const {
        for (const auto& e : entries)
            if (e.profile == p)
                return &e;
        return nullptr;
    }
};

/// All order profiles over root-of-unity specializations at the family's
/// modulus, plus the generic labels of unspecialized free parameters.
/// The image of the specialization map is enumerated as a subgroup of
/// (Z/M)^{n^2}, so widely shared parameters cost nothing.
inline ProfileEnumeration enumerate_profiles(const SectionFamily& fam,
                                             size_t cap = 2000000) {
    const int n = fam.rank();
    const long long m = fam.solved.modulus;
    ProfileEnumeration out;
    out.modulus = m;

    // Squares of the simple lifts, symbolic over the solved parameters.
    std::vector<TorusElement> squares;
    for (int i = 1; i <= n; ++i)
        squares.push_back(lift_square(*fam.lat, fam.values[i - 1], i));

    const size_t np = fam.solved.nparams();
    const size_t ncoord = static_cast<size_t>(n) * n;
    std::vector<long long> kappa(ncoord);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            kappa[i * n + l] = squares[i].coord(l).zeta;

    // Generator of the image subgroup per parameter.
    std::vector<std::vector<long long>> gen(np, std::vector<long long>(ncoord, 0));
    std::vector<long long> stepv(np, 1);
    for (size_t k = 0; k < np; ++k) {
        long long d = fam.solved.orders[k];
        if (d > 0) {
            require(m % d == 0, "modulus incompatible with torsion order");
            stepv[k] = m / d;
        }
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                gen[k][i * n + l] = imod(squares[i].coord(l).e[k] * stepv[k], m);
    }

    // Rank of the free-parameter exponent block (over Q).
    {
        IMat fm;
        for (size_t k = 0; k < np; ++k) {
            if (fam.solved.orders[k] != 0)
                continue;
            IVec row(ncoord);
            for (size_t c = 0; c < ncoord; ++c)
                row[c] = squares[c / n].coord(static_cast<int>(c % n)).e[k];
            fm.push_back(std::move(row));
        }
        out.free_effective_rank = static_cast<int>(hermite_row_basis(fm).size());
        if (out.free_effective_rank > 1)
            out.warning = "free parameters act with rank > 1 on the lift squares; "
                          "partially generic profiles are not enumerated";
    }

    // Closure of the image subgroup with witnesses.
    std::map<std::vector<long long>, std::vector<long long>> image;
    image.emplace(std::vector<long long>(ncoord, 0), std::vector<long long>(np, 0));
    std::vector<std::vector<long long>> queue{std::vector<long long>(ncoord, 0)};
    for (size_t head = 0; head < queue.size(); ++head) {
        auto cur = queue[head];
        auto wit = image.at(cur);
        for (size_t k = 0; k < np; ++k) {
            if (fam.solved.orders[k] == 1)
                continue;
            std::vector<long long> nxt(ncoord);
            for (size_t c = 0; c < ncoord; ++c)
                nxt[c] = imod(cur[c] + gen[k][c], m);
            auto w2 = wit;
            w2[k] = imod(w2[k] + stepv[k], m);
            if (image.emplace(nxt, w2).second) {
                require(image.size() <= cap, "profile image enumeration cap exceeded");
                queue.push_back(nxt);
            }
        }
    }

    std::map<OrderProfile, Assignment> found;
    auto label_from = [&](const std::vector<long long>& v, int i) {
        long long ord = 1;
        for (int l = 0; l < n; ++l) {
            long long z = imod(kappa[i * n + l] + v[i * n + l], m);
            ord = illcm(ord, m / std::gcd(m, z));
        }
        return 2 * ord;
    };
    for (const auto& [v, wit] : image) {
        OrderProfile p;
        for (int i = 0; i < n; ++i)
            p.orders.push_back(label_from(v, i));
        Assignment a{wit, std::vector<bool>(np, false)};
        found.emplace(p, a);
    }

    // Generic labels: free parameters transcendental, torsion enumerated.
    bool any_free_effect = false;
    std::vector<bool> coord_free(ncoord, false);
    for (size_t k = 0; k < np; ++k) {
        if (fam.solved.orders[k] != 0)
            continue;
        for (size_t c = 0; c < ncoord; ++c)
            if (squares[c / n].coord(static_cast<int>(c % n)).e[k] != 0) {
                coord_free[c] = true;
                any_free_effect = true;
            }
    }
    if (any_free_effect) {
        std::map<std::vector<long long>, std::vector<long long>> timage;
        timage.emplace(std::vector<long long>(ncoord, 0), std::vector<long long>(np, 0));
        std::vector<std::vector<long long>> tq{std::vector<long long>(ncoord, 0)};
        for (size_t head = 0; head < tq.size(); ++head) {
            auto cur = tq[head];
            auto wit = timage.at(cur);
            for (size_t k = 0; k < np; ++k) {
                if (fam.solved.orders[k] <= 1)
                    continue;
                std::vector<long long> nxt(ncoord);
                for (size_t c = 0; c < ncoord; ++c)
                    nxt[c] = imod(cur[c] + gen[k][c], m);
                auto w2 = wit;
                w2[k] = imod(w2[k] + stepv[k], m);
                if (timage.emplace(nxt, w2).second)
                    tq.push_back(nxt);
            }
        }
        for (const auto& [v, wit] : timage) {
            OrderProfile p;
            for (int i = 0; i < n; ++i) {
                bool inf = false;
                for (int l = 0; l < n; ++l)
                    inf = inf || coord_free[i * n + l];
                p.orders.push_back(inf ? 0 : label_from(v, i));
            }
            Assignment a{wit, std::vector<bool>(np, false)};
            for (size_t k = 0; k < np; ++k)
                a.generic[k] = fam.solved.orders[k] == 0;
            found.emplace(p, a);
        }
    }

    for (auto& [p, a] : found)
        out.entries.push_back({p, a});
    std::sort(out.entries.begin(), out.entries.end(),
              [](const ProfileEntry& a, const ProfileEntry& b) {
                  return a.profile < b.profile;
              });
    return out;
}

/// Section with the optimal order profile, obtained from the enumeration's
/// witness assignment.
inline Section optimal_section(const SectionFamily& fam,
                               const ProfileEnumeration& prof) {
    OrderProfile best = optimal_profile(prof.profiles());
    const ProfileEntry* e = prof.find(best);
    require(e != nullptr, "optimal profile has no witness");
    for (bool g : e->witness.generic)
        require(!g, "optimal witness must be a root-of-unity specialization");
    return specialize_family(fam, fam.solved, e->witness.value);
}

inline Section conjugate_section(const Section& s, const TorusElement& t) {
    std::vector<TorusElement> vals;
    for (int i = 1; i <= s.lattice().rank(); ++i) {
        TorusElement u = t_mul(s.value(i), t);
        vals.push_back(t_mul(u, t_inv(weyl_act(s.lattice(), {i}, t))));
    }
    return Section(s.lattice(), std::move(vals));
}

/// Exponent matrix of the coboundary t -> (t * s_i(t^{-1}))_i, stacked over
/// the n^2 coordinates; column j tracks the j-th coordinate of t.
inline IMat coboundary_matrix(const IsogenyLattice& lat) {
    const int n = lat.rank();
    IMat b = imat_zero(static_cast<size_t>(n) * n, n);
    for (int i = 1; i <= n; ++i) {
        const ActionMat& c = lat.action_of(i);
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j)
                b[(i - 1) * n + l][j] = (l == j ? 1 : 0) - c[l][j];
    }
    return b;
}

/// Monomials in the a_{i,j} classifying the T-conjugacy classes of the
/// family: each is constant on orbits, and jointly they separate classes.
///
/// The torus of an algebraically closed field is divisible, so the group of
/// classes is exactly Hom(K / Lambda_R, F^x) with K = ker(B^T) the lattice
/// of orbit-constant monomials and Lambda_R the relation lattice (which the
/// coboundary image always annihilates).  A classifying set is therefore a
/// basis of K adapted to Lambda_R.
struct ConjugacyInvariants {
    std::vector<IVec> monomials;     // over the n^2 a_{i,j} exponents
    std::vector<long long> orders;   // 0 = free (infinitely many classes)
    IMat kernel;                     // ker(B^T), the orbit-constant monomials
};

inline ConjugacyInvariants conjugacy_invariants(const SectionFamily& fam) {
    const size_t n2 = static_cast<size_t>(fam.rank()) * fam.rank();
    ConjugacyInvariants inv;

    IMat bt = imat_transpose(coboundary_matrix(*fam.lat));
    inv.kernel = kernel_basis(bt);
    const size_t s = inv.kernel.size();

    // Relations expressed in the kernel basis; they must lie inside it.
    IMat kernel_t = imat_transpose(inv.kernel.empty() ? imat_zero(0, n2)
                                                      : inv.kernel);
    IMat coords;
    for (const auto& r : fam.row_lattice) {
        IVec c;
        require(solve_integer(kernel_t, r, c),
                "braid relation is not conjugation-invariant (internal error)");
        coords.push_back(std::move(c));
    }

    SmithForm snf = smith_normal_form(coords.empty() ? imat_zero(0, s) : coords);
    if (coords.empty()) {
        snf.vinv = imat_identity(s);
    }
    std::vector<Int> d(s, Int(0));
    auto diag = snf.diag();
    for (size_t j = 0; j < diag.size() && j < s; ++j)
        d[j] = diag[j];

    // In the kernel basis k'_t = sum_u Vinv[t][u] k_u the relation lattice
    // becomes the span of the d_t k'_t, so the classes of the k'_t with
    // d_t != 1 generate K / Lambda_R.
    for (size_t t = 0; t < s; ++t) {
        if (d[t] == 1)
            continue;
        IVec mono(n2, Int(0));
        for (size_t u = 0; u < s; ++u) {
            if (snf.vinv[t][u] == 0)
                continue;
            for (size_t p = 0; p < n2; ++p)
                mono[p] += snf.vinv[t][u] * inv.kernel[u][p];
        }
        inv.monomials.push_back(std::move(mono));
        inv.orders.push_back(d[t] == 0 ? 0 : checked_ll(d[t], "class order"));
    }
    return inv;
}

inline std::string monomial_str(const MonomialGroup& base, const IVec& m) {
    std::string s;
    for (size_t p = 0; p < m.size(); ++p) {
        if (m[p] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += base.params[p];
        if (m[p] != 1)
            s += "^" + m[p].str();
    }
    return s.empty() ? "1" : s;
}

/// Value of a classifying monomial on a concrete section (zeta exponents of
/// the flattened t_i coordinates), as an exponent of zeta mod M.
inline long long monomial_value(const IVec& m, const std::vector<long long>& flat,
                                long long modulus) {
    Int acc = 0;
    for (size_t p = 0; p < m.size(); ++p)
        acc += m[p] * flat[p];
    return imod(checked_ll(acc % modulus, "monomial value"), modulus);
}

inline std::vector<long long> flatten_section(const Section& s) {
    const int n = s.lattice().rank();
    std::vector<long long> flat(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int l = 0; l < n; ++l) {
            const Monomial& mo = s.value(i).coord(l);
            for (long long e : mo.e)
                require(e == 0, "flatten_section needs a fully specialized section");
            flat[(i - 1) * n + l] = mo.zeta;
        }
    return flat;
}

/// True when all classifying monomials take equal values on both sections.
inline bool same_class(const ConjugacyInvariants& inv, const Section& s1,
                       const Section& s2) {
    require(&s1.lattice() == &s2.lattice(), "sections over different lattices");
    long long m = s1.group().modulus;
    auto f1 = flatten_section(s1), f2 = flatten_section(s2);
    for (const auto& mono : inv.monomials)
        if (monomial_value(mono, f1, m) != monomial_value(mono, f2, m))
            return false;
    return true;
}

/// Exhaustive search for a conjugating torus element over the M-th roots of
/// unity (cross-check oracle for same_class; small ranks only).
inline bool brute_force_conjugate(const Section& s1, const Section& s2) {
    const IsogenyLattice& lat = s1.lattice();
    const int n = lat.rank();
    const long long m = s1.group().modulus;
    require(n <= 3 && m <= 6, "conjugator search guarded to rank <= 3, M <= 6");
    std::vector<long long> z(n, 0);
    while (true) {
        TorusElement t(&s1.group(), n);
        for (int j = 0; j < n; ++j)
            t.set_zeta(j, z[j]);
        bool match = true;
        Section c = conjugate_section(s1, t);
        for (int i = 1; i <= n && match; ++i)
            match = c.value(i) == s2.value(i);
        if (match)
            return true;
        int pos = 0;
        while (pos < n && ++z[pos] == m) {
            z[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return false;
}

/// ker(B^T): the lattice of monomials constant on every T-orbit.
inline IMat invariant_kernel(const IsogenyLattice& lat) {
    return kernel_basis(imat_transpose(coboundary_matrix(lat)));
}

/// HNF of span(monomials) + Lambda_R: the lattice of invariant monomial
/// functions the classifiers generate, modulo monomials that are 1 on the
/// whole family.  Two complete classifier sets give the same lattice.
inline IMat invariant_function_lattice(const SectionFamily& fam,
                                       const std::vector<IVec>& monomials) {
    IMat gens = fam.row_lattice;
    for (const auto& m : monomials)
        gens.push_back(m);
    return hermite_row_basis(gens);
}

/// Separation criterion: the classifiers generate all of K / Lambda_R.
inline bool classifies_completely(const SectionFamily& fam,
                                  const std::vector<IVec>& monomials) {
    return lattice_equal(invariant_function_lattice(fam, monomials),
                         invariant_kernel(*fam.lat));
}

} // namespace weylsect

#endif
