#ifndef WEYLSECT_KOTTWITZ_HPP
#define WEYLSECT_KOTTWITZ_HPP

#include "analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylsect {

/// Per-power comparison of S(w)^r against S(w^r).
struct LiftCheckReport {
    WeylWord element;
    long long r_max = 0;
    std::vector<bool> ok;                   // index r-1
    std::vector<std::string> discrepancy;   // torus part of S(w)^r / S(w^r) when false
    bool all_ok = true;
};

inline LiftCheckReport lift_check(const Section& s, const WeylWord& w, long long r_max) {
    require(r_max >= 1, "r_max must be at least 1");
    const RootSystem& sys = *s.lattice().sys;
    LiftCheckReport rep;
    rep.element = reduce_word(sys, w);
    rep.r_max = r_max;
    ExtendedElement base = section_eval(s, rep.element);
    ExtendedElement pow = ext_neutral(s.lattice(), s.group());
    WeylElement we = word_element(sys, rep.element);
    for (long long r = 1; r <= r_max; ++r) {
        pow = ext_mul(pow, base);
        ExtendedElement direct =
            section_eval(s, reduced_word(sys, element_power(sys, we, r)));
        bool ok = pow == direct;
        rep.ok.push_back(ok);
        if (!ok) {
            rep.all_ok = false;
            ExtendedElement ratio = ext_mul(pow, ext_inv(direct));
            rep.discrepancy.push_back(ratio.torus_part().str());
        } else {
            rep.discrepancy.push_back("");
        }
    }
    return rep;
}

/// Generator of the length-one-per-node subgroup for a minuscule coweight:
/// the longest element of the parabolic omitting node i times the longest
/// element of W, as a reduced word.
inline WeylWord minuscule_generator(const RootSystem& sys, int node) {
    std::vector<int> subset;
    for (int i = 1; i <= sys.rank; ++i)
        if (i != node)
            subset.push_back(i);
    WeylWord wpi = longest_word(sys, subset);
    WeylWord wpl = longest_word(sys);
    WeylWord prod = wpi;
    prod.insert(prod.end(), wpl.begin(), wpl.end());
    return reduce_word(sys, prod);
}

/// The designated element w_{Pi_n} w_Pi of adjoint C_n in its block-reduced
/// form s_n | s_{n-1} s_n | s_{n-2} s_{n-1} s_n | ... | s_1 s_2 ... s_n.
inline WeylWord cn_adjoint_element(int n) {
    require(n >= 2, "C_n needs n >= 2");
    WeylWord w;
    for (int j = n; j >= 1; --j)
        for (int i = j; i <= n; ++i)
            w.push_back(i);
    return w;
}

enum class CycleCandidate { full_cycle, short_cycle };

/// Candidate generators of the designated subgroup in type A_n: the a-th
/// power of a cycle.  full_cycle rotates all n+1 letters (this is the one
/// whose coroot sums follow the displayed pattern); short_cycle rotates the
/// first n letters only.
inline WeylWord an_cycle_power(const RootSystem& sys, int a,
                               CycleCandidate which = CycleCandidate::full_cycle) {
    require(sys.type_tag == 'A', "cycle powers are a type A construction");
    const int n = sys.rank;
    require(a >= 1 && a <= n, "cycle power out of range");
    WeylWord cycle;
    int top = which == CycleCandidate::full_cycle ? n : n - 1;
    for (int i = 1; i <= top; ++i)
        cycle.push_back(i);
    WeylWord wa;
    for (int r = 0; r < a; ++r)
        wa.insert(wa.end(), cycle.begin(), cycle.end());
    return reduce_word(sys, wa);
}

/// Sum of the coroots over F_w(i), in ambient coordinates.
inline RatVec fw_coroot_sum(const RootSystem& sys, const WeylElement& w, long long i) {
    RatVec sum(sys.ambient_dim, Rat(0));
    for (int r : fw_set(sys, w, i))
        sum = rv_add(sum, sys.coroots[r]);
    return sum;
}

/// Checks whether the candidate's F_{w_a}(i) coroot sums follow the
/// arithmetic pattern  a*i on a block of a coordinates followed by -a on
/// the trailing a*i coordinates (indices read in the n+1 ambient slots).
/// Returns the list of i that were testable and whether all matched.
struct CyclePatternReport {
    std::vector<long long> tested;
    bool matches = true;
};

inline CyclePatternReport an_cycle_pattern_check(const RootSystem& sys, int a,
                                                 const WeylWord& wa) {
    const int n = sys.rank;
    const int amb = sys.ambient_dim; // n + 1
    WeylElement we = word_element(sys, wa);
    long long order = 1;
    WeylElement p = we;
    while (!p.is_identity()) {
        p = p * we;
        ++order;
    }
    CyclePatternReport rep;
    for (long long i = 1; i < order; ++i) {
        long long lo_start = amb - static_cast<long long>(a) * (i + 1) + 1;
        long long hi_start = amb - static_cast<long long>(a) * i + 1;
        if (lo_start < 1)
            break;
        RatVec expect(amb, Rat(0));
        for (long long c = lo_start; c < hi_start; ++c)
            expect[c - 1] = Rat(a * i);
        for (long long c = hi_start; c <= amb; ++c)
            expect[c - 1] = Rat(-a);
        rep.tested.push_back(i);
        if (!(fw_coroot_sum(sys, we, i) == expect))
            rep.matches = false;
    }
    return rep;
}

inline long long weyl_order_of(const RootSystem& sys, const WeylWord& w) {
    WeylElement e = word_element(sys, w);
    WeylElement p = e;
    long long order = 1;
    while (!p.is_identity()) {
        p = p * e;
        ++order;
    }
    return order;
}

} // namespace weylsect

#endif
