#ifndef WEYLSECT_ROOTSYS_HPP
#define WEYLSECT_ROOTSYS_HPP

#include "common.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace weylsect {

/// A word in the simple reflections, letters in 1..rank, leftmost letter
/// outermost: [1,2] denotes s_1 s_2, which maps v to s_1(s_2(v)).
using WeylWord = std::vector<int>;

class RootSystem;

/// A Weyl group element, canonically represented by its permutation of the
/// full root set.  perm[r] is the index of the image of root r.
class WeylElement {
  public:
    WeylElement() = default;
    explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}

    const std::vector<int>& perm() const { return perm_; }
    int image(int root_index) const { return perm_[root_index]; }
    bool is_identity() const {
        for (size_t i = 0; i < perm_.size(); ++i)
            if (perm_[i] != static_cast<int>(i))
                return false;
        return true;
    }
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.perm_ == b.perm_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) {
        return !(a == b);
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b) {
        return a.perm_ < b.perm_;
    }

    /// Function composition: (a*b)(v) = a(b(v)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        std::vector<int> p(a.perm_.size());
        for (size_t i = 0; i < p.size(); ++i)
            p[i] = a.perm_[b.perm_[i]];
        return WeylElement(std::move(p));
    }

    WeylElement inverse() const {
        std::vector<int> p(perm_.size());
        for (size_t i = 0; i < perm_.size(); ++i)
            p[perm_[i]] = static_cast<int>(i);
        return WeylElement(std::move(p));
    }

  private:
    std::vector<int> perm_;
};

/// Root datum of an almost-simple type in the Bourbaki coordinates.
/// Immutable after construction; all values exact rationals.
class RootSystem {
  public:
    char type_tag = '?';
    int rank = 0;
    int ambient_dim = 0;
    std::vector<RatVec> simple_roots;              // [i-1] is alpha_i
    std::vector<RatVec> all_roots;                 // canonical sorted order
    std::vector<RatVec> coroots;                   // 2r/(r,r) per root
    std::vector<std::vector<int>> simple_coeffs;   // root = sum c_i alpha_i
    std::vector<bool> positive;                    // per root index
    std::vector<int> negation;                     // index of -root
    std::vector<std::vector<long long>> cartan;    // cartan[i][j] = <a_j, a_i^vee>
    std::vector<std::vector<int>> coxeter_m;       // order of s_i s_j
    std::vector<std::vector<int>> simple_perm;     // per simple i: root permutation

    int root_index(const RatVec& v) const {
        auto it = index_.find(v);
        require(it != index_.end(), "vector is not a root");
        return it->second;
    }
    bool is_root(const RatVec& v) const { return index_.count(v) != 0; }

    int num_positive() const { return static_cast<int>(all_roots.size() / 2); }

    const RatVec& simple_root(int i) const { return simple_roots[i - 1]; }
    const RatVec& simple_coroot(int i) const {
        return coroots[simple_root_index_[i - 1]];
    }
    int simple_root_idx(int i) const { return simple_root_index_[i - 1]; }

    friend RootSystem build_root_system(char type_tag, int rank);

  private:
    std::map<RatVec, int> index_;
    std::vector<int> simple_root_index_;
};

namespace detail {

inline std::vector<RatVec> bourbaki_simple_roots(char t, int n, int& dim) {
    auto e = [&](int i) {
        RatVec v(dim, Rat(0));
        v[i - 1] = Rat(1);
        return v;
    };
    std::vector<RatVec> s;
    switch (t) {
    case 'A': {
        dim = n + 1;
        for (int i = 1; i <= n; ++i)
            s.push_back(rv_sub(e(i), e(i + 1)));
        break;
    }
    case 'B': {
        dim = n;
        for (int i = 1; i < n; ++i)
            s.push_back(rv_sub(e(i), e(i + 1)));
        s.push_back(e(n));
        break;
    }
    case 'C': {
        dim = n;
        for (int i = 1; i < n; ++i)
            s.push_back(rv_sub(e(i), e(i + 1)));
        s.push_back(rv_scale(Rat(2), e(n)));
        break;
    }
    case 'D': {
        dim = n;
        for (int i = 1; i < n; ++i)
            s.push_back(rv_sub(e(i), e(i + 1)));
        s.push_back(rv_add(e(n - 1), e(n)));
        break;
    }
    case 'E': {
        dim = 8;
        RatVec a1(8, Rat(Int(-1), Int(2)));
        a1[0] = Rat(Int(1), Int(2));
        a1[7] = Rat(Int(1), Int(2));
        s.push_back(a1);
        s.push_back(rv_add(e(1), e(2)));
        s.push_back(rv_sub(e(2), e(1)));
        for (int i = 4; i <= n; ++i)
            s.push_back(rv_sub(e(i - 1), e(i - 2)));
        break;
    }
    case 'F': {
        dim = 4;
        s.push_back(rv_sub(e(2), e(3)));
        s.push_back(rv_sub(e(3), e(4)));
        s.push_back(e(4));
        RatVec a4(4, Rat(Int(-1), Int(2)));
        a4[0] = Rat(Int(1), Int(2));
        s.push_back(a4);
        break;
    }
    case 'G': {
        dim = 3;
        s.push_back(rv_sub(e(1), e(2)));
        RatVec a2(3, Rat(0));
        a2[0] = Rat(-2);
        a2[1] = Rat(1);
        a2[2] = Rat(1);
        s.push_back(a2);
        break;
    }
    default:
        throw error(std::string("unknown type tag '") + t + "'");
    }
    return s;
}

inline void check_type_rank(char t, int n) {
    switch (t) {
    case 'A':
        require(n >= 1, "type A requires rank >= 1");
        break;
    case 'B':
        require(n >= 2, "type B requires rank >= 2");
        break;
    case 'C':
        require(n >= 2, "type C requires rank >= 2");
        break;
    case 'D':
        require(n >= 3, "type D requires rank >= 3");
        break;
    case 'E':
        require(n >= 6 && n <= 8, "type E requires rank 6, 7 or 8");
        break;
    case 'F':
        require(n == 4, "type F requires rank 4");
        break;
    case 'G':
        require(n == 2, "type G requires rank 2");
        break;
    default:
        throw error(std::string("unknown type tag '") + t + "'");
    }
}

inline size_t expected_root_count(char t, int n) {
    switch (t) {
    case 'A':
        return static_cast<size_t>(n) * (n + 1);
    case 'B':
    case 'C':
        return 2u * n * n;
    case 'D':
        return 2u * n * (n - 1);
    case 'E':
        return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F':
        return 48;
    case 'G':
        return 12;
    }
    return 0;
}

} // namespace detail

/// Reflection of an ambient vector through the i-th simple root (1-based):
/// v - <v, alpha_i^vee> alpha_i.
inline RatVec reflect(const RootSystem& sys, int i, const RatVec& v) {
    require(i >= 1 && i <= sys.rank, "simple index out of range");
    const RatVec& a = sys.simple_root(i);
    Rat coef = Rat(2) * rv_dot(v, a) / rv_dot(a, a);
    return rv_sub(v, rv_scale(coef, a));
}

inline RootSystem build_root_system(char type_tag, int rank) {
    detail::check_type_rank(type_tag, rank);
    RootSystem sys;
    sys.type_tag = type_tag;
    sys.rank = rank;
    int dim = 0;
    sys.simple_roots = detail::bourbaki_simple_roots(type_tag, rank, dim);
    sys.ambient_dim = dim;

    // Close the simple roots under simple reflections.
    std::set<RatVec> closure(sys.simple_roots.begin(), sys.simple_roots.end());
    std::vector<RatVec> queue(sys.simple_roots);
    while (!queue.empty()) {
        RatVec r = queue.back();
        queue.pop_back();
        for (int i = 1; i <= rank; ++i) {
            RatVec img = reflect(sys, i, r);
            if (closure.insert(img).second)
                queue.push_back(img);
        }
    }
    sys.all_roots.assign(closure.begin(), closure.end());
    require(sys.all_roots.size() == detail::expected_root_count(type_tag, rank),
            "root closure has unexpected size");
    for (size_t r = 0; r < sys.all_roots.size(); ++r)
        sys.index_[sys.all_roots[r]] = static_cast<int>(r);

    sys.simple_root_index_.resize(rank);
    for (int i = 1; i <= rank; ++i)
        sys.simple_root_index_[i - 1] = sys.index_.at(sys.simple_roots[i - 1]);

    // Expansion of each root over the simple roots; signs derive from it.
    RatMat simple_cols(rank);
    for (int i = 0; i < rank; ++i)
        simple_cols[i] = sys.simple_roots[i];
    sys.simple_coeffs.resize(sys.all_roots.size());
    sys.positive.resize(sys.all_roots.size());
    sys.negation.resize(sys.all_roots.size());
    sys.coroots.resize(sys.all_roots.size());
    for (size_t r = 0; r < sys.all_roots.size(); ++r) {
        RatVec coeff = solve_in_columns(simple_cols, sys.all_roots[r]);
        std::vector<int> c(rank);
        bool nonneg = true, nonpos = true;
        for (int i = 0; i < rank; ++i) {
            require(coeff[i].is_integer(), "root has non-integral simple coordinates");
            c[i] = static_cast<int>(checked_ll(coeff[i].num(), "root coefficient"));
            nonneg = nonneg && c[i] >= 0;
            nonpos = nonpos && c[i] <= 0;
        }
        require(nonneg || nonpos, "root with mixed-sign coordinates");
        sys.simple_coeffs[r] = std::move(c);
        sys.positive[r] = nonneg;
        sys.negation[r] = sys.index_.at(rv_neg(sys.all_roots[r]));
        const RatVec& root = sys.all_roots[r];
        sys.coroots[r] = rv_scale(Rat(2) / rv_dot(root, root), root);
    }

    sys.cartan.assign(rank, std::vector<long long>(rank));
    sys.coxeter_m.assign(rank, std::vector<int>(rank));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            Rat v = rv_dot(sys.simple_coroot(i), sys.simple_root(j));
            require(v.is_integer(), "cartan entry not integral");
            sys.cartan[i - 1][j - 1] = checked_ll(v.num(), "cartan entry");
        }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            if (i == j) {
                sys.coxeter_m[i][j] = 1;
                continue;
            }
            long long p = sys.cartan[i][j] * sys.cartan[j][i];
            int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : 0;
            require(m != 0, "invalid cartan product");
            sys.coxeter_m[i][j] = m;
        }

    sys.simple_perm.assign(rank, std::vector<int>(sys.all_roots.size()));
    for (int i = 1; i <= rank; ++i)
        for (size_t r = 0; r < sys.all_roots.size(); ++r)
            sys.simple_perm[i - 1][r] =
                sys.index_.at(reflect(sys, i, sys.all_roots[r]));
    return sys;
}

inline WeylElement identity_element(const RootSystem& sys) {
    std::vector<int> p(sys.all_roots.size());
    for (size_t i = 0; i < p.size(); ++i)
        p[i] = static_cast<int>(i);
    return WeylElement(std::move(p));
}

inline WeylElement simple_reflection(const RootSystem& sys, int i) {
    require(i >= 1 && i <= sys.rank, "simple index out of range");
    return WeylElement(sys.simple_perm[i - 1]);
}

inline WeylElement word_element(const RootSystem& sys, const WeylWord& w) {
    WeylElement e = identity_element(sys);
    for (int letter : w)
        e = e * simple_reflection(sys, letter);
    return e;
}

/// Apply the word to an ambient vector (leftmost letter acts last).
inline RatVec word_action(const RootSystem& sys, const WeylWord& w, RatVec v) {
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        v = reflect(sys, *it, v);
    return v;
}

inline int length(const RootSystem& sys, const WeylElement& e) {
    int l = 0;
    for (size_t r = 0; r < sys.all_roots.size(); ++r)
        if (sys.positive[r] && !sys.positive[e.image(static_cast<int>(r))])
            ++l;
    return l;
}

/// Indices of the positive roots sent negative.
inline std::vector<int> inversion_set(const RootSystem& sys, const WeylElement& e) {
    std::vector<int> inv;
    for (size_t r = 0; r < sys.all_roots.size(); ++r)
        if (sys.positive[r] && !sys.positive[e.image(static_cast<int>(r))])
            inv.push_back(static_cast<int>(r));
    return inv;
}

inline std::vector<int> inversion_set(const RootSystem& sys, const WeylWord& w) {
    return inversion_set(sys, word_element(sys, w));
}

/// Canonical reduced word by iterated smallest-descent extraction.
inline WeylWord reduced_word(const RootSystem& sys, WeylElement e) {
    WeylWord suffix;
    while (true) {
        int descent = 0;
        for (int i = 1; i <= sys.rank; ++i) {
            if (!sys.positive[e.image(sys.simple_root_idx(i))]) {
                descent = i;
                break;
            }
        }
        if (descent == 0)
            break;
        suffix.push_back(descent);
        e = e * simple_reflection(sys, descent);
    }
    std::reverse(suffix.begin(), suffix.end());
    return suffix;
}

inline WeylWord reduce_word(const RootSystem& sys, const WeylWord& w) {
    return reduced_word(sys, word_element(sys, w));
}

inline bool is_reduced(const RootSystem& sys, const WeylWord& w) {
    return static_cast<int>(w.size()) == length(sys, word_element(sys, w));
}

inline bool words_equal(const RootSystem& sys, const WeylWord& a, const WeylWord& b) {
    return word_element(sys, a) == word_element(sys, b);
}

inline WeylElement element_power(const RootSystem& sys, const WeylElement& e, long long n) {
    WeylElement acc = identity_element(sys);
    WeylElement base = n < 0 ? e.inverse() : e;
    long long k = n < 0 ? -n : n;
    while (k-- > 0)
        acc = acc * base;
    return acc;
}

/// Longest element of the parabolic subgroup generated by the given simple
/// indices (all of them when the set is empty); returned as a reduced word.
inline WeylWord longest_word(const RootSystem& sys, std::vector<int> subset = {}) {
    if (subset.empty())
        for (int i = 1; i <= sys.rank; ++i)
            subset.push_back(i);
    WeylWord w;
    WeylElement e = identity_element(sys);
    while (true) {
        int ascent = 0;
        for (int i : subset) {
            if (sys.positive[e.image(sys.simple_root_idx(i))]) {
                ascent = i;
                break;
            }
        }
        if (ascent == 0)
            break;
        w.push_back(ascent);
        e = e * simple_reflection(sys, ascent);
    }
    return w;
}

/// All elements of W; guarded against accidentally enormous groups.
inline std::vector<WeylElement> enumerate_weyl(const RootSystem& sys,
                                               size_t cap = 200000) {
    std::set<WeylElement> seen;
    std::vector<WeylElement> queue{identity_element(sys)};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        WeylElement cur = queue[head];
        for (int i = 1; i <= sys.rank; ++i) {
            WeylElement nxt = cur * simple_reflection(sys, i);
            if (seen.insert(nxt).second) {
                require(seen.size() <= cap, "Weyl group enumeration cap exceeded");
                queue.push_back(nxt);
            }
        }
    }
    return queue;
}

/// All reduced words of an element (exponential; use on small groups only).
inline void all_reduced_words(const RootSystem& sys, const WeylElement& e,
                              WeylWord& prefix, std::vector<WeylWord>& out) {
    bool any = false;
    WeylElement inv = e.inverse();
    for (int i = 1; i <= sys.rank; ++i) {
        // Left descent: l(s_i e) < l(e) iff e^{-1}(alpha_i) < 0.
        if (!sys.positive[inv.image(sys.simple_root_idx(i))]) {
            any = true;
            prefix.push_back(i);
            all_reduced_words(sys, simple_reflection(sys, i) * e, prefix, out);
            prefix.pop_back();
        }
    }
    if (!any)
        out.push_back(prefix);
}

inline std::vector<WeylWord> all_reduced_words(const RootSystem& sys,
                                               const WeylElement& e) {
    std::vector<WeylWord> out;
    WeylWord prefix;
    all_reduced_words(sys, e, prefix, out);
    return out;
}

} // namespace weylsect

#endif
