#pragma once

#include <compare>
#include <map>
#include <string>

#include "lieforge/epspoly.hpp"

namespace lieforge {

/// Symbolic basis name: x[i,j] with i != j, a[i], b[i], or a bare name for
/// derived bases. Indices are 1-based. The intrinsic ordering below is only
/// used for map keys; the display/basis order is owned by each algebra.
struct GeneratorLabel {
    enum class Kind : unsigned char { A, X, B, Named };

    Kind kind = Kind::Named;
    int i = 0, j = 0;
    std::string name;

    static GeneratorLabel a(int i) { return {Kind::A, i, 0, {}}; }
    static GeneratorLabel b(int i) { return {Kind::B, i, 0, {}}; }
    static GeneratorLabel x(int i, int j) {
        if (i == j) throw Error("x[i,i] is not a generator (diagonals are a/b)");
        return {Kind::X, i, j, {}};
    }
    static GeneratorLabel named(std::string n) { return {Kind::Named, 0, 0, std::move(n)}; }

    bool is_x() const { return kind == Kind::X; }
    bool is_upper_x() const { return kind == Kind::X && i < j; }
    bool is_lower_x() const { return kind == Kind::X && i > j; }

    friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;

    std::string str() const {
        switch (kind) {
            case Kind::A: return "a[" + std::to_string(i) + "]";
            case Kind::B: return "b[" + std::to_string(i) + "]";
            case Kind::X: return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
            case Kind::Named: return name;
        }
        return {};
    }
};

/// Sparse linear combination of generators with EpsPoly coefficients.
/// Zero coefficients are never stored.
class Element {
public:
    Element() = default;

    static Element unit(const GeneratorLabel& l) { return term(l, EpsPoly(1)); }
    static Element term(const GeneratorLabel& l, const EpsPoly& c) {
        Element e;
        e.add_term(l, c);
        return e;
    }

    const std::map<GeneratorLabel, EpsPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    EpsPoly coeff(const GeneratorLabel& l) const {
        auto it = terms_.find(l);
        return it == terms_.end() ? EpsPoly() : it->second;
    }

    Element& add_term(const GeneratorLabel& l, const EpsPoly& c) {
        if (c.is_zero()) return *this;
        auto [it, inserted] = terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [l, c] : o.terms_) add_term(l, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const {
        Element r;
        for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
        return r;
    }

    Element scaled(const EpsPoly& c) const {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [l, v] : terms_) r.add_term(l, v * c);
        return r;
    }
    Element scaled(const Rational& c) const { return scaled(EpsPoly(c)); }

    friend bool operator==(const Element&, const Element&) = default;

    /// Debug rendering in intrinsic label order; canonical emission order
    /// lives with the emitter, which knows the ambient basis.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [l, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + l.str();
        }
        return out;
    }

private:
    std::map<GeneratorLabel, EpsPoly> terms_;
};

}  // namespace lieforge
