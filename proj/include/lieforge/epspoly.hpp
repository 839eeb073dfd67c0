#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Truncation markers of two scalars are compatible when they are equal or
/// one of them is the full ring (untruncated coerces into the quotient).
/// Two distinct finite truncation orders are an error.
inline std::optional<int> combine_trunc(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) {
        if (*a != *b)
            throw Error("incompatible truncations: mod eps^" + std::to_string(*a + 1) +
                        " vs mod eps^" + std::to_string(*b + 1));
        return a;
    }
    return a ? a : b;
}

/// Polynomial in eps over exact rationals, optionally reduced mod eps^(k+1).
/// Canonical form: coefficients ascending by degree, no trailing zeros, no
/// stored degree above the truncation order. The zero polynomial has an
/// empty coefficient list. Equality is structural (including the marker).
class EpsPoly {
public:
    EpsPoly() = default;
    EpsPoly(const Rational& c, std::optional<int> trunc = std::nullopt) : trunc_(trunc) {
        if (!c.is_zero()) coeffs_.push_back(c);
        normalize();
    }
    EpsPoly(long long c) : EpsPoly(Rational(c)) {}  // implicit for literals

    static EpsPoly monomial(const Rational& c, int degree,
                            std::optional<int> trunc = std::nullopt) {
        if (degree < 0) throw Error("negative eps degree");
        EpsPoly p;
        p.trunc_ = trunc;
        if (!c.is_zero()) {
            p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
            p.coeffs_.back() = c;
        }
        p.normalize();
        return p;
    }
    static EpsPoly eps() { return monomial(1, 1); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const std::optional<int>& trunc() const { return trunc_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the highest stored term; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<size_t>(d)];
    }
    Rational constant_term() const { return coeff(0); }

    EpsPoly operator-() const {
        EpsPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
        EpsPoly r;
        r.trunc_ = combine_trunc(a.trunc_, b.trunc_);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t d = 0; d < r.coeffs_.size(); ++d) r.coeffs_[d] = a.coeff(int(d)) + b.coeff(int(d));
        r.normalize();
        return r;
    }
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
        EpsPoly r;
        r.trunc_ = combine_trunc(a.trunc_, b.trunc_);
        if (a.is_zero() || b.is_zero()) return r;
        size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (r.trunc_) n = std::min(n, static_cast<size_t>(*r.trunc_) + 1);
        r.coeffs_.assign(n, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.normalize();
        return r;
    }
    EpsPoly& operator+=(const EpsPoly& o) { return *this = *this + o; }
    EpsPoly& operator-=(const EpsPoly& o) { return *this = *this - o; }
    EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

    EpsPoly scaled(const Rational& c) const {
        EpsPoly r;
        r.trunc_ = trunc_;
        if (c.is_zero()) return r;
        r.coeffs_ = coeffs_;
        for (auto& x : r.coeffs_) x = x * c;
        return r;
    }

    /// Exact division by a polynomial known to divide *this (used by the
    /// fraction-free determinant). Throws if the division is not exact.
    EpsPoly divexact(const EpsPoly& d) const {
        if (d.is_zero()) throw Error("division by zero");
        if (is_zero()) return EpsPoly(0, combine_trunc(trunc_, d.trunc_));
        size_t ld = 0;
        while (d.coeffs_[ld].is_zero()) ++ld;  // lowest nonzero term of the divisor
        EpsPoly rem = *this;
        EpsPoly q;
        q.trunc_ = combine_trunc(trunc_, d.trunc_);
        while (!rem.is_zero()) {
            size_t lr = 0;
            while (rem.coeffs_[lr].is_zero()) ++lr;
            if (lr < ld) throw Error("inexact polynomial division");
            int shift = static_cast<int>(lr - ld);
            Rational c = rem.coeffs_[lr] / d.coeffs_[ld];
            q += monomial(c, shift, q.trunc_);
            rem -= d * monomial(c, shift);
        }
        return q;
    }

    /// Re-reduces mod eps^(k+1) and marks the result as truncated.
    EpsPoly truncated(int k) const {
        if (k < 0) throw Error("negative truncation order");
        EpsPoly r = *this;
        r.trunc_ = k;
        r.normalize();
        return r;
    }

    /// Evaluates at eps = v by Horner's scheme. Refused on truncated scalars.
    Rational specialize(const Rational& v) const {
        if (trunc_) throw Error("cannot specialize a truncated polynomial");
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    friend bool operator==(const EpsPoly& a, const EpsPoly& b) {
        return a.coeffs_ == b.coeffs_ && a.trunc_ == b.trunc_;
    }
    friend bool operator!=(const EpsPoly& a, const EpsPoly& b) { return !(a == b); }

    /// Canonical textual form: terms ascending by degree joined without
    /// spaces, "-" absorbed into the coefficient. Examples: "1/2", "-1",
    /// "1/2+1/2*eps", "eps^2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = 0; d <= degree(); ++d) {
            const Rational& c = coeffs_[static_cast<size_t>(d)];
            if (c.is_zero()) continue;
            std::string term;
            Rational m = c.abs();
            if (d == 0) {
                term = m.str();
            } else {
                std::string ep = d == 1 ? "eps" : "eps^" + std::to_string(d);
                term = m.is_one() ? ep : m.str() + "*" + ep;
            }
            if (c.is_negative())
                out += "-" + term;
            else
                out += out.empty() ? term : "+" + term;
        }
        return out;
    }

private:
    void normalize() {
        if (trunc_ && coeffs_.size() > static_cast<size_t>(*trunc_) + 1)
            coeffs_.resize(static_cast<size_t>(*trunc_) + 1);
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    std::optional<int> trunc_;
};

inline EpsPoly poly_mul(const EpsPoly& p, const EpsPoly& q) { return p * q; }
inline Rational poly_specialize(const EpsPoly& p, const Rational& v) { return p.specialize(v); }

}  // namespace lieforge
