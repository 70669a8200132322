#ifndef WEYLSECT_EXTWEYL_HPP
#define WEYLSECT_EXTWEYL_HPP

#include "torus.hpp"

#include <utility>
#include <vector>

namespace weylsect {

/// Indices of the positive roots g with v(g) < 0 and uv(g) > 0.  This is the
/// set whose coroot signs measure the failure of the canonical lifts to
/// multiply: N(u) N(v) = N(uv) * prod_{g} g^vee(-1).
inline std::vector<int> fset(const RootSystem& sys, const WeylElement& u,
                             const WeylElement& v) {
    std::vector<int> out;
    WeylElement uv = u * v;
    for (size_t r = 0; r < sys.all_roots.size(); ++r) {
        if (!sys.positive[r])
            continue;
        int vi = v.image(static_cast<int>(r));
        if (sys.positive[vi])
            continue;
        if (sys.positive[uv.image(static_cast<int>(r))])
            out.push_back(static_cast<int>(r));
    }
    return out;
}

inline std::vector<int> fset(const RootSystem& sys, const WeylWord& u,
                             const WeylWord& v) {
    return fset(sys, word_element(sys, u), word_element(sys, v));
}

/// Cocycle of the twisted product in left normal form: the torus factor c
/// with N(u) N(v) = c * N(uv) when elements are written t * N(w).  Satisfies
/// c(u,v) c(uv,x) = u(c(v,x)) c(u,vx).
inline TorusElement tits_cocycle(const IsogenyLattice& lat, const MonomialGroup& g,
                                 const WeylElement& u, const WeylElement& v) {
    TorusElement c = t_identity(g, lat.rank());
    for (int r : fset(*lat.sys, v.inverse(), u.inverse()))
        c = t_mul(c, coroot_eval_minus1(lat, g, r));
    return c;
}

inline TorusElement tits_cocycle(const IsogenyLattice& lat, const MonomialGroup& g,
                                 const WeylWord& u, const WeylWord& v) {
    return tits_cocycle(lat, g, word_element(*lat.sys, u), word_element(*lat.sys, v));
}

/// An element t * N(w) of the torus normalizer, with w stored as a reduced
/// word together with its root permutation.
class ExtendedElement {
  public:
    ExtendedElement() = default;
    ExtendedElement(const IsogenyLattice& lat, TorusElement t, const WeylWord& w)
        : lat_(&lat), t_(std::move(t)), we_(word_element(*lat.sys, w)),
          w_(reduced_word(*lat.sys, we_)) {}

    const IsogenyLattice& lattice() const { return *lat_; }
    const TorusElement& torus_part() const { return t_; }
    const WeylWord& word() const { return w_; }
    const WeylElement& element() const { return we_; }

    bool is_neutral() const { return t_.is_identity() && we_.is_identity(); }

    friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
        return a.t_ == b.t_ && a.we_ == b.we_;
    }
    friend bool operator!=(const ExtendedElement& a, const ExtendedElement& b) {
        return !(a == b);
    }

  private:
    const IsogenyLattice* lat_ = nullptr;
    TorusElement t_;
    WeylElement we_;
    WeylWord w_;

    friend ExtendedElement ext_mul(const ExtendedElement&, const ExtendedElement&);
};

inline ExtendedElement ext_neutral(const IsogenyLattice& lat, const MonomialGroup& g) {
    return ExtendedElement(lat, t_identity(g, lat.rank()), {});
}

inline ExtendedElement ext_mul(const ExtendedElement& a, const ExtendedElement& b) {
    require(a.lat_ == b.lat_, "extended elements over different lattices");
    const IsogenyLattice& lat = *a.lat_;
    TorusElement t = t_mul(a.t_, weyl_act(lat, a.w_, b.t_));
    t = t_mul(t, tits_cocycle(lat, t.group(), a.we_, b.we_));
    WeylElement we = a.we_ * b.we_;
    ExtendedElement r;
    r.lat_ = a.lat_;
    r.t_ = std::move(t);
    r.we_ = we;
    r.w_ = reduced_word(*lat.sys, we);
    return r;
}

inline ExtendedElement ext_inv(const ExtendedElement& a) {
    const IsogenyLattice& lat = a.lattice();
    WeylWord winv = reduced_word(*lat.sys, a.element().inverse());
    // Solve (t, w)(s, w^{-1}) = 1 for s.
    TorusElement c = tits_cocycle(lat, a.torus_part().group(), a.element(),
                                  a.element().inverse());
    TorusElement s = weyl_act(lat, winv, t_inv(t_mul(a.torus_part(), c)));
    return ExtendedElement(lat, s, winv);
}

inline ExtendedElement ext_pow(const ExtendedElement& a, long long n) {
    if (n < 0)
        return ext_pow(ext_inv(a), -n);
    ExtendedElement r = ext_neutral(a.lattice(), a.torus_part().group());
    for (long long i = 0; i < n; ++i)
        r = ext_mul(r, a);
    return r;
}

/// Canonical lift of w built from the simple lifts along a reduced word.
/// In the (t, w) coordinates its torus part is trivial.
inline ExtendedElement tits_lift(const IsogenyLattice& lat, const MonomialGroup& g,
                                 const WeylWord& w) {
    return ExtendedElement(lat, t_identity(g, lat.rank()), w);
}

/// F_w(i): positive roots g with w^i(g) < 0 and w^{i+1}(g) > 0.
inline std::vector<int> fw_set(const RootSystem& sys, const WeylElement& w, long long i) {
    require(i >= 1, "fw_set requires i >= 1");
    return fset(sys, w, element_power(sys, w, i));
}

inline std::vector<int> fw_set(const RootSystem& sys, const WeylWord& w, long long i) {
    return fw_set(sys, word_element(sys, w), i);
}

/// The torus element D with N(w)^n = N(w^n) * D:
/// prod_{m=1}^{n-1} prod_{g in F_w(m)} g^vee(-1).
inline TorusElement tits_power_discrepancy(const IsogenyLattice& lat,
                                           const MonomialGroup& g,
                                           const WeylWord& w, long long n) {
    require(n >= 1, "tits_power_discrepancy requires n >= 1");
    const RootSystem& sys = *lat.sys;
    WeylElement we = word_element(sys, w);
    TorusElement d = t_identity(g, lat.rank());
    for (long long m = 1; m < n; ++m)
        for (int r : fw_set(sys, we, m))
            d = t_mul(d, coroot_eval_minus1(lat, g, r));
    return d;
}

/// A braid-respecting assignment of torus elements to the simple
/// reflections; the value on s_i is (t_i, s_i).
class Section {
  public:
    Section(const IsogenyLattice& lat, std::vector<TorusElement> values)
        : lat_(&lat), values_(std::move(values)) {
        require(static_cast<int>(values_.size()) == lat.rank(),
                "section needs one torus element per simple reflection");
        require(satisfies_braid(), "section rejected: braid relations fail");
    }

    const IsogenyLattice& lattice() const { return *lat_; }
    const TorusElement& value(int i) const { return values_[i - 1]; }
    const std::vector<TorusElement>& values() const { return values_; }
    const MonomialGroup& group() const { return values_[0].group(); }

    ExtendedElement simple_lift(int i) const {
        return ExtendedElement(*lat_, values_[i - 1], {i});
    }

    bool satisfies_braid() const {
        const RootSystem& sys = *lat_->sys;
        for (int i = 1; i <= sys.rank; ++i)
            for (int k = i + 1; k <= sys.rank; ++k) {
                int m = sys.coxeter_m[i - 1][k - 1];
                ExtendedElement lhs = ext_neutral(*lat_, group());
                ExtendedElement rhs = ext_neutral(*lat_, group());
                for (int step = 0; step < m; ++step) {
                    lhs = ext_mul(lhs, simple_lift(step % 2 == 0 ? i : k));
                    rhs = ext_mul(rhs, simple_lift(step % 2 == 0 ? k : i));
                }
                if (!(lhs == rhs))
                    return false;
            }
        return true;
    }

  private:
    const IsogenyLattice* lat_;
    std::vector<TorusElement> values_;
};

inline Section tits_section(const IsogenyLattice& lat, const MonomialGroup& g) {
    return Section(lat, std::vector<TorusElement>(lat.rank(),
                                                  t_identity(g, lat.rank())));
}

/// Evaluate the section on w along a reduced word; the braid relations make
/// the result independent of the word chosen.
inline ExtendedElement section_eval(const Section& s, const WeylWord& w) {
    const RootSystem& sys = *s.lattice().sys;
    WeylWord red = reduce_word(sys, w);
    ExtendedElement r = ext_neutral(s.lattice(), s.group());
    for (int letter : red)
        r = ext_mul(r, s.simple_lift(letter));
    return r;
}

} // namespace weylsect

#endif
