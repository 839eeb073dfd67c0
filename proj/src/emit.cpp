#include "lieforge/emit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>
#include <vector>

namespace lieforge {

std::string ring_str(const LieAlgebra& L) {
    if (L.trunc()) return "Q[eps]/eps^" + std::to_string(*L.trunc() + 1);
    return L.symbolic_eps() ? "Q[eps]" : "Q";
}

namespace {

struct Piece {
    int deg;
    int pos;
    Rational coef;  // nonzero
};

std::string piece_str(const Piece& p, const GeneratorLabel& label) {
    std::string out;
    Rational m = p.coef.abs();
    if (!m.is_one()) out += m.str() + "*";
    if (p.deg == 1)
        out += "eps*";
    else if (p.deg > 1)
        out += "eps^" + std::to_string(p.deg) + "*";
    out += label.str();
    return out;
}

}  // namespace

std::string render_element(const LieAlgebra& L, const Element& e) {
    if (e.is_zero()) return "0";
    std::vector<Piece> pieces;
    for (const auto& [l, c] : e.terms()) {
        int pos = L.position(l);
        for (int d = 0; d <= c.degree(); ++d)
            if (!c.coeff(d).is_zero()) pieces.push_back({d, pos, c.coeff(d)});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        return std::tie(a.deg, a.pos) < std::tie(b.deg, b.pos);
    });
    std::string out;
    for (const auto& p : pieces) {
        std::string body = piece_str(p, L.label_at(p.pos));
        if (out.empty())
            out = (p.coef.is_negative() ? "-" : "") + body;
        else
            out += (p.coef.is_negative() ? " - " : " + ") + body;
    }
    return out;
}

std::string emit_sc(const LieAlgebra& L, const std::string& algebra_name) {
    std::string out = "lieforge-sc v1\n";
    out += "algebra=" + algebra_name + " n=" + std::to_string(L.n()) + " ring=" + ring_str(L) + "\n";
    out += "basis =";
    for (const auto& l : L.basis()) out += " " + l.str();
    out += "\n";
    for (const auto& [pq, e] : L.table())
        out += "[" + L.label_at(pq.first).str() + "," + L.label_at(pq.second).str() +
               "] = " + render_element(L, e) + "\n";
    return out;
}

GeneratorLabel parse_sc_label(const std::string& tok) {
    auto parse_index = [&](size_t from, size_t to) {
        return std::stoi(tok.substr(from, to - from));
    };
    if (tok.size() >= 4 && tok[1] == '[' && tok.back() == ']') {
        if (tok[0] == 'a') return GeneratorLabel::a(parse_index(2, tok.size() - 1));
        if (tok[0] == 'b') return GeneratorLabel::b(parse_index(2, tok.size() - 1));
        if (tok[0] == 'x') {
            auto comma = tok.find(',');
            if (comma == std::string::npos) throw Error("bad x label: " + tok);
            return GeneratorLabel::x(parse_index(2, comma), parse_index(comma + 1, tok.size() - 1));
        }
    }
    return GeneratorLabel::named(tok);
}

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) continue;
        if (c == '-' && i == 0) continue;
        if (c == '/') continue;
        return false;
    }
    return true;
}

// one signed term: [rat*][eps[^d]*]label
void parse_term(const std::string& term, bool negative, std::optional<int> trunc, Element& acc) {
    std::vector<std::string> factors;
    size_t start = 0;
    for (size_t i = 0; i <= term.size(); ++i)
        if (i == term.size() || term[i] == '*') {
            factors.push_back(term.substr(start, i - start));
            start = i + 1;
        }
    if (factors.empty()) throw Error("empty term in sc-v1 input");
    Rational coef(1);
    int deg = 0;
    for (size_t i = 0; i + 1 < factors.size(); ++i) {
        const std::string& f = factors[i];
        if (f == "eps")
            deg = 1;
        else if (f.rfind("eps^", 0) == 0)
            deg = std::stoi(f.substr(4));
        else if (looks_like_rational(f))
            coef *= rational_from_string(f);
        else
            throw Error("bad factor '" + f + "' in sc-v1 term");
    }
    if (negative) coef = -coef;
    acc.add_term(parse_sc_label(factors.back()), EpsPoly::monomial(coef, deg, trunc));
}

Element parse_term_list(const std::string& text, std::optional<int> trunc) {
    Element e;
    if (text == "0") return e;
    size_t i = 0;
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        i = 1;
    }
    size_t start = i;
    for (; i <= text.size(); ++i) {
        bool plus = i + 2 < text.size() && text.compare(i, 3, " + ") == 0;
        bool minus = i + 2 < text.size() && text.compare(i, 3, " - ") == 0;
        if (i == text.size() || plus || minus) {
            parse_term(text.substr(start, i - start), negative, trunc, e);
            if (i == text.size()) break;
            negative = minus;
            i += 2;
            start = i + 1;
        }
    }
    return e;
}

// splits "x[1,2],x[2,1]" at the comma outside square brackets
std::pair<std::string, std::string> split_pair(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[') ++depth;
        if (s[i] == ']') --depth;
        if (s[i] == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
    }
    throw Error("bad bracket pair: " + s);
}

}  // namespace

LieAlgebra parse_sc(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "lieforge-sc v1")
        throw Error("not an sc-v1 file (bad magic line)");

    if (!std::getline(in, line)) throw Error("missing sc-v1 header line");
    std::istringstream header(line);
    std::string algebra_tok, n_tok, ring_tok;
    header >> algebra_tok >> n_tok >> ring_tok;
    if (algebra_tok.rfind("algebra=", 0) != 0 || n_tok.rfind("n=", 0) != 0 ||
        ring_tok.rfind("ring=", 0) != 0)
        throw Error("bad sc-v1 header: " + line);
    std::string name = algebra_tok.substr(8);
    int n = std::stoi(n_tok.substr(2));
    std::string ring = ring_tok.substr(5);
    std::optional<int> trunc;
    bool symbolic = false;
    if (ring == "Q") {
    } else if (ring == "Q[eps]") {
        symbolic = true;
    } else if (ring.rfind("Q[eps]/eps^", 0) == 0) {
        symbolic = true;
        trunc = std::stoi(ring.substr(11)) - 1;
    } else {
        throw Error("unknown scalar ring: " + ring);
    }

    if (!std::getline(in, line) || line.rfind("basis =", 0) != 0)
        throw Error("missing sc-v1 basis line");
    std::vector<GeneratorLabel> basis;
    {
        std::istringstream toks(line.substr(7));
        std::string tok;
        while (toks >> tok) basis.push_back(parse_sc_label(tok));
    }
    LieAlgebra L(name, n, std::move(basis), trunc, symbolic);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto close = line.find("] = ");
        if (line[0] != '[' || close == std::string::npos)
            throw Error("bad sc-v1 bracket line: " + line);
        auto [left, right] = split_pair(line.substr(1, close - 1));
        int p = L.position(parse_sc_label(left));
        int q = L.position(parse_sc_label(right));
        L.set_bracket(p, q, parse_term_list(line.substr(close + 4), trunc));
    }
    return L;
}

}  // namespace lieforge
