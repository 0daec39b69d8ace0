#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schubert/checked.hpp"
#include "schubert/errors.hpp"

namespace schubert {

// Dense univariate polynomial over the integers, used for Poincare series,
// cell counts and the quotient formulas. Coefficients are stored from the
// constant term up and kept normalized (no trailing zeros; zero is the
// empty vector).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }

    static IntPolynomial one() { return IntPolynomial({1}); }

    // coeff * t^deg
    static IntPolynomial monomial(std::size_t deg, long long coeff = 1) {
        if (coeff == 0) return zero();
        std::vector<long long> c(deg + 1, 0);
        c[deg] = coeff;
        return IntPolynomial(std::move(c));
    }

    // 1 - t^deg, the building block of every quotient formula here.
    static IntPolynomial one_minus_power(std::size_t deg) {
        if (deg == 0) throw Error("one_minus_power needs a positive exponent");
        std::vector<long long> c(deg + 1, 0);
        c[0] = 1;
        c[deg] = -1;
        return IntPolynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }

    long long coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    const std::vector<long long>& coeffs() const { return c_; }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeff(i), o.coeff(i));
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<long long> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(coeff(i), o.coeff(i));
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                r[i + j] = checked_add(r[i + j], checked_mul(c_[i], o.c_[j]));
            }
        }
        return IntPolynomial(std::move(r));
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    // t^degree * p(1/t): the coefficient sequence reversed.
    IntPolynomial dual() const {
        std::vector<long long> r(c_.rbegin(), c_.rend());
        return IntPolynomial(std::move(r));
    }

    bool is_palindromic() const { return *this == dual(); }

    bool all_ones() const {
        if (c_.empty()) return false;
        return std::all_of(c_.begin(), c_.end(), [](long long v) { return v == 1; });
    }

    long long evaluate_at_one() const {
        long long s = 0;
        for (long long v : c_) s = checked_add(s, v);
        return s;
    }

    // Exact division; throws if the divisor does not divide evenly.
    // The divisors used here are monic up to sign of the leading term
    // (1 - t^d), so integer long division is safe.
    IntPolynomial divide_exact(const IntPolynomial& d) const {
        if (d.is_zero()) throw Error("division by zero polynomial");
        if (is_zero()) return zero();
        long long lead = d.c_.back();
        if (lead != 1 && lead != -1) throw Error("exact division needs a unit leading coefficient");
        if (c_.size() < d.c_.size()) throw Error("polynomial division left a remainder");
        std::vector<long long> rem = c_;
        std::vector<long long> q(c_.size() - d.c_.size() + 1, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            long long top = rem[i + d.c_.size() - 1];
            if (top == 0) continue;
            long long f = (lead == 1) ? top : checked_mul(top, -1);
            q[i] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) {
                rem[i + j] = checked_sub(rem[i + j], checked_mul(f, d.c_[j]));
            }
        }
        for (long long v : rem) {
            if (v != 0) throw Error("polynomial division left a remainder");
        }
        return IntPolynomial(std::move(q));
    }

    // Compact rendering: a digit string like "1112222111" when every
    // coefficient is a single digit, otherwise comma separated.
    std::string digits() const {
        if (c_.empty()) return "0";
        bool single = std::all_of(c_.begin(), c_.end(), [](long long v) { return v >= 0 && v <= 9; });
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!single && i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    std::string pretty() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long long v = c_[i];
            if (v == 0) continue;
            if (!s.empty()) s += (v > 0) ? " + " : " - ";
            else if (v < 0) s += "-";
            long long a = v > 0 ? v : -v;
            if (i == 0) {
                s += std::to_string(a);
            } else {
                if (a != 1) s += std::to_string(a);
                s += "t";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<long long> c_;
};

// Gaussian binomial [m, n]_t, the cell count of the Grassmannian of
// n-planes in m-space, computed by the standard Pascal recursion
// [m, n] = [m-1, n] + t^(m-n) [m-1, n-1].
inline IntPolynomial q_binomial(long long m, long long n) {
    if (n < 0 || m < 0 || n > m) return IntPolynomial::zero();
    static std::map<std::pair<long long, long long>, IntPolynomial> memo;
    auto key = std::make_pair(m, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    IntPolynomial r;
    if (n == 0 || n == m) {
        r = IntPolynomial::one();
    } else {
        r = q_binomial(m - 1, n) +
            IntPolynomial::monomial(static_cast<std::size_t>(m - n)) * q_binomial(m - 1, n - 1);
    }
    memo.emplace(key, r);
    return r;
}

}  // namespace schubert
