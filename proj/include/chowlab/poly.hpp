// poly.hpp
// Dense exact-integer univariate polynomials: the carrier for Hilbert
// series and statistic generating functions, plus the coefficient-level
// property suite (palindromicity, gamma vector, unimodality,
// log-concavity) and the Eulerian / derangement polynomials.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace chowlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(Int v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial zero() { return IntPolynomial(); }

    // t^k with coefficient c.
    static IntPolynomial monomial(int k, Int c = 1) {
        std::vector<Int> v(static_cast<std::size_t>(k) + 1);
        v.back() = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }

    Int coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(k)];
    }

    void add_term(int k, const Int& v) {
        if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1);
        c_[static_cast<std::size_t>(k)] += v;
        normalize();
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<Int> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] += o.c_[i];
        }
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<Int> v(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] -= o.c_[i];
        }
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        std::vector<Int> v(c_.size() + o.c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const Int& s) const {
        std::vector<Int> v = c_;
        for (auto& x : v) x *= s;
        return IntPolynomial(std::move(v));
    }

    // Quotient by t^k; every lower coefficient must vanish.
    IntPolynomial shift_down(int k) const {
        for (int i = 0; i < k; ++i)
            if (coeff(i) != 0) throw std::invalid_argument("shift_down: nonzero low coefficient");
        if (is_zero()) return IntPolynomial();
        std::vector<Int> v(c_.begin() + std::min<std::size_t>(static_cast<std::size_t>(k), c_.size()), c_.end());
        return IntPolynomial(std::move(v));
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return IntPolynomial();
        std::vector<Int> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Int(static_cast<long>(i));
        return IntPolynomial(std::move(v));
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
        return acc;
    }

    Int eval_int(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Int coeff_sum() const {
        Int s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    // Text form "1 + 4*t + t^2"; the zero polynomial prints as "0".
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Int& c = c_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = abs(c);
            if (i == 0) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << "t";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

using HilbertSeries = IntPolynomial;

// --- coefficient-level properties --------------------------------------

// Palindromic with respect to a stated center degree: c_k = c_{D-k}.
inline bool is_palindromic(const IntPolynomial& p, int center_degree) {
    if (center_degree < 0) return p.is_zero();
    for (int k = 0; k <= center_degree; ++k)
        if (p.coeff(k) != p.coeff(center_degree - k)) return false;
    return p.degree() <= center_degree;
}

// Gamma vector of a palindromic polynomial of degree d:
// p = sum_i gamma_i t^i (1+t)^(d-2i). Computed top-down by subtraction;
// each gamma_i is automatically an integer.
inline std::vector<Int> gamma_vector(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    int d = p.degree();
    if (!is_palindromic(p, d)) throw std::invalid_argument("gamma_vector requires a palindromic polynomial");
    std::vector<Int> gamma;
    IntPolynomial rest = p;
    IntPolynomial one_plus_t({Int(1), Int(1)});
    for (int i = 0; 2 * i <= d; ++i) {
        Int gi = rest.coeff(i);
        gamma.push_back(gi);
        IntPolynomial term = IntPolynomial::monomial(i, gi);
        for (int j = 0; j < d - 2 * i; ++j) term = term * one_plus_t;
        rest = rest - term;
    }
    if (!rest.is_zero()) throw std::logic_error("gamma_vector: reconstruction failed");
    return gamma;
}

inline bool is_unimodal(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    std::size_t i = 1;
    while (i < c.size() && c[i] >= c[i - 1]) ++i;
    while (i < c.size() && c[i] <= c[i - 1]) ++i;
    return i >= c.size();
}

// c_i^2 >= c_{i-1} c_{i+1}, with no internal zero between two nonzero
// coefficients.
inline bool is_log_concave(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    if (c.empty()) return true;
    std::size_t lo = 0;
    while (lo < c.size() && c[lo] == 0) ++lo;
    for (std::size_t i = lo; i < c.size(); ++i)
        if (c[i] == 0) return false;  // internal zero (trailing zeros are stripped)
    for (std::size_t i = 1; i + 1 < c.size(); ++i)
        if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
    return true;
}

// --- Eulerian and derangement polynomials -------------------------------
//
// Each is computed by two independent enumerations which must agree:
// ascents over inversion sequences vs descents over permutations
// (resp. ascents over derangement sequences vs excedances over
// derangement permutations).

inline IntPolynomial eulerian_by_ascents(int n) {
    IntPolynomial out;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        out.add_term(ascent_count(e), 1);
    });
    return out;
}

inline IntPolynomial eulerian_by_descents(int n) {
    IntPolynomial out;
    for_each_permutation(GroundSet::canonical(n), [&](const Permutation& p) {
        out.add_term(static_cast<int>(descent_set(p).size()), 1);
    });
    return out;
}

inline IntPolynomial eulerian(int n) {
    if (n < 1) throw std::invalid_argument("eulerian requires n >= 1");
    IntPolynomial a = eulerian_by_ascents(n);
    IntPolynomial b = eulerian_by_descents(n);
    if (a != b) throw std::logic_error("eulerian: ascent and descent routes disagree");
    return a;
}

inline IntPolynomial derangement_by_ascents(int n) {
    IntPolynomial out;
    for_each_inversion_sequence(n, [&](const InversionSequence& e) {
        if (is_derangement_seq(e)) out.add_term(ascent_count(e), 1);
    });
    return out;
}

inline IntPolynomial derangement_by_excedances(int n) {
    IntPolynomial out;
    for_each_permutation(GroundSet::canonical(n), [&](const Permutation& p) {
        if (is_derangement_perm(p)) out.add_term(excedance_count(p), 1);
    });
    return out;
}

inline IntPolynomial derangement_poly(int n) {
    if (n < 2) throw std::invalid_argument("derangement_poly requires n >= 2");
    IntPolynomial a = derangement_by_ascents(n);
    IntPolynomial b = derangement_by_excedances(n);
    if (a != b) throw std::logic_error("derangement_poly: ascent and excedance routes disagree");
    return a;
}

}  // namespace chowlab
