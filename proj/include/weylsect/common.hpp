#ifndef WEYLSECT_COMMON_HPP
#define WEYLSECT_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylsect {

using Int = boost::multiprecision::cpp_int;

class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond)
        throw error(msg);
}

/// Exact rational number over arbitrary-precision integers.
/// Always normalized: positive denominator, coprime numerator/denominator.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        require(!b.is_zero(), "rational division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

  private:
    void normalize() {
        require(den_ != 0, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline RatVec rv_add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline RatVec rv_sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline RatVec rv_scale(const Rat& c, const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

inline Rat rv_dot(const RatVec& a, const RatVec& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline RatVec rv_neg(const RatVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = -v[i];
    return r;
}

inline bool rv_is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

/// Solve B x = v exactly, where B is m-by-n with columns spanning a space
/// containing v.  Returns the (unique, when columns are independent)
/// coordinate vector x of length n.  Throws if the system is inconsistent.
inline RatVec solve_in_columns(const RatMat& cols, const RatVec& v) {
    const size_t n = cols.size();
    require(n > 0, "solve_in_columns: empty basis");
    const size_t m = cols[0].size();
    // Augmented matrix [cols | v], Gaussian elimination.
    RatMat a(m, RatVec(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j)
            a[i][j] = cols[j][i];
        a[i][n] = v[i];
    }
    std::vector<int> pivot_col_of_row(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && a[p][col].is_zero())
            ++p;
        if (p == m)
            continue;
        std::swap(a[p], a[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j <= n; ++j)
            a[row][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero())
                continue;
            Rat f = a[i][col];
            for (size_t j = col; j <= n; ++j)
                a[i][j] -= f * a[row][j];
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        require(a[i][n].is_zero(), "solve_in_columns: inconsistent system");
    RatVec x(n, Rat(0));
    for (size_t i = 0; i < row; ++i)
        x[pivot_col_of_row[i]] = a[i][n];
    return x;
}

inline long long checked_ll(const Int& v, const char* what) {
    require(v >= std::numeric_limits<long long>::min() &&
                v <= std::numeric_limits<long long>::max(),
            std::string(what) + ": value out of 64-bit range");
    return static_cast<long long>(v);
}

inline long long imod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

inline long long illcm(long long a, long long b) { return std::lcm(a, b); }

} // namespace weylsect

#endif
