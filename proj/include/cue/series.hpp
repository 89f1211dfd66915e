#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cue/rational.hpp"

namespace cue {

// Coefficient protocol for truncated series. Coefficients may carry shape
// (a ParamPoly knows its signature, a nested series its order), so "zero"
// and "one" are derived from a prototype value rather than default-built.
// inv / log / exp are partial: they throw unless the value is a unit /
// equals one / equals zero respectively, matching the series preconditions.
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<Rat> {
    static Rat zero_like(const Rat&) { return Rat(0); }
    static Rat one_like(const Rat&) { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static bool is_one(const Rat& x) { return x == 1; }
    static Rat inv(const Rat& x) {
        if (x == 0) throw std::domain_error("inverse of zero constant term");
        return Rat(1) / x;
    }
    static Rat log(const Rat& x) {
        if (x != 1) throw std::domain_error("series log needs constant term 1");
        return Rat(0);
    }
    static Rat exp(const Rat& x) {
        if (x != 0) throw std::domain_error("series exp needs constant term 0");
        return Rat(1);
    }
    static Rat scale(const Rat& x, const Rat& s) { return x * s; }
};

// Formal power series truncated at a fixed order: exactly order()+1 stored
// coefficients. Binary operations require matching orders; nothing is ever
// extended or shortened implicitly.
template <class C>
class TruncSeries {
public:
    TruncSeries() : order_(0), c_(1, C{}) {}

    TruncSeries(int order, const C& proto)
        : order_(order),
          c_(static_cast<size_t>(order) + 1, CoeffOps<C>::zero_like(proto)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }

    static TruncSeries constant(int order, const C& value) {
        TruncSeries s(order, value);
        s.c_[0] = value;
        return s;
    }

    static TruncSeries from_coeffs(std::vector<C> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
        TruncSeries s;
        s.order_ = static_cast<int>(coeffs.size()) - 1;
        s.c_ = std::move(coeffs);
        return s;
    }

    int order() const { return order_; }
    const C& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
    C& operator[](int i) { return c_.at(static_cast<size_t>(i)); }
    const std::vector<C>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const C& x : c_)
            if (!CoeffOps<C>::is_zero(x)) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r = a;
        for (int i = 0; i <= a.order_; ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r = a;
        for (int i = 0; i <= a.order_; ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (C& x : r.c_) x = CoeffOps<C>::scale(x, Rat(-1));
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check_compatible(b);
        TruncSeries r(a.order_, a.c_[0]);
        for (int i = 0; i <= a.order_; ++i) {
            if (CoeffOps<C>::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= a.order_; ++j) {
                if (CoeffOps<C>::is_zero(b.c_[j])) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    TruncSeries scale(const Rat& s) const {
        TruncSeries r = *this;
        for (C& x : r.c_) x = CoeffOps<C>::scale(x, s);
        return r;
    }

    // b = 1/a via b_0 = inv(a_0), b_n = -b_0 * sum_{k=1..n} a_k b_{n-k}.
    TruncSeries inverse() const {
        TruncSeries b(order_, c_[0]);
        C b0 = CoeffOps<C>::inv(c_[0]);
        b.c_[0] = b0;
        for (int n = 1; n <= order_; ++n) {
            C s = CoeffOps<C>::zero_like(c_[0]);
            for (int k = 1; k <= n; ++k) {
                if (CoeffOps<C>::is_zero(c_[k])) continue;
                s = s + c_[k] * b.c_[n - k];
            }
            b.c_[n] = CoeffOps<C>::scale(b0 * s, Rat(-1));
        }
        return b;
    }

    // g = log f from the derivative recurrence n f_n = sum_{k=1..n} k g_k f_{n-k}.
    TruncSeries log() const {
        TruncSeries g(order_, c_[0]);
        g.c_[0] = CoeffOps<C>::log(c_[0]);
        C inv0 = CoeffOps<C>::inv(c_[0]);
        for (int n = 1; n <= order_; ++n) {
            C s = CoeffOps<C>::zero_like(c_[0]);
            for (int k = 1; k < n; ++k) {
                if (CoeffOps<C>::is_zero(g.c_[k])) continue;
                s = s + CoeffOps<C>::scale(g.c_[k], Rat(k)) * c_[n - k];
            }
            C t = c_[n] - CoeffOps<C>::scale(s, Rat(1, n));
            g.c_[n] = inv0 * t;
        }
        return g;
    }

    // f = exp g from n f_n = sum_{k=1..n} k g_k f_{n-k}.
    TruncSeries exp() const {
        TruncSeries f(order_, c_[0]);
        f.c_[0] = CoeffOps<C>::exp(c_[0]);
        for (int n = 1; n <= order_; ++n) {
            C s = CoeffOps<C>::zero_like(c_[0]);
            for (int k = 1; k <= n; ++k) {
                if (CoeffOps<C>::is_zero(c_[k])) continue;
                s = s + CoeffOps<C>::scale(c_[k], Rat(k)) * f.c_[n - k];
            }
            f.c_[n] = CoeffOps<C>::scale(s, Rat(1, n));
        }
        return f;
    }

private:
    void check_compatible(const TruncSeries& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("series truncation order mismatch");
    }

    int order_;
    std::vector<C> c_;
};

template <class C>
struct CoeffOps<TruncSeries<C>> {
    using S = TruncSeries<C>;
    static S zero_like(const S& x) { return S(x.order(), x[0]); }
    static S one_like(const S& x) { return S::constant(x.order(), CoeffOps<C>::one_like(x[0])); }
    static bool is_zero(const S& x) { return x.is_zero(); }
    static bool is_one(const S& x) {
        if (!CoeffOps<C>::is_one(x[0])) return false;
        for (int i = 1; i <= x.order(); ++i)
            if (!CoeffOps<C>::is_zero(x[i])) return false;
        return true;
    }
    static S inv(const S& x) { return x.inverse(); }
    static S log(const S& x) { return x.log(); }
    static S exp(const S& x) { return x.exp(); }
    static S scale(const S& x, const Rat& s) { return x.scale(s); }
};

// Series in one variable over the rationals (q- or hbar-expansions).
using QSeries = TruncSeries<Rat>;

inline QSeries qseries_zero(int order) { return QSeries(order, Rat(0)); }
inline QSeries qseries_one(int order) { return QSeries::constant(order, Rat(1)); }

// Evaluate the truncated polynomial at a rational point (Horner).
inline Rat qseries_eval(const QSeries& s, const Rat& x) {
    Rat acc = 0;
    for (int i = s.order(); i >= 0; --i) acc = acc * x + s[i];
    return acc;
}

}  // namespace cue
