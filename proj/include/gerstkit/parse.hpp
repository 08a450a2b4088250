#pragma once

// Textual grammar shared by the CLI:
//   polynomials   2*x1^2*x2 - 1/3
//   polyvectors   x1*d1/\d2 + 2*d3      (generators e1..eM; d1..dN are
//                                        aliases on the standard algebroid)
//   divergences   c(e1)=x2, c(e2)=0
// plus JSON loaders for algebroid presentations and classical forms.
// Parsing a printed value reproduces it exactly.

#include "gerstkit/hcc_ungraded.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace gerstkit {

struct ParseError : std::invalid_argument {
    ParseError(const std::string& msg, std::size_t pos)
        : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

namespace detail {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, Wedge, LParen, RParen, Comma, Equals, End };

struct Token {
    Tok kind;
    Rational num;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    void expect(Tok kind, const char* what) {
        if (tok_.kind != kind) throw ParseError(std::string("expected ") + what, tok_.pos);
        advance();
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            Integer numer(text_.substr(i_, j - i_));
            Integer denom(1);
            // a '/' continues the literal only when a digit follows
            if (j < text_.size() && text_[j] == '/' && j + 1 < text_.size() &&
                std::isdigit(static_cast<unsigned char>(text_[j + 1]))) {
                std::size_t k = j + 1;
                std::size_t l = k;
                while (l < text_.size() && std::isdigit(static_cast<unsigned char>(text_[l]))) ++l;
                denom = Integer(text_.substr(k, l - k));
                j = l;
            }
            tok_.kind = Tok::Num;
            tok_.num = Rational(numer, denom);
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_.kind = Tok::Ident;
            tok_.text = text_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        switch (c) {
            case '+': tok_.kind = Tok::Plus; ++i_; return;
            case '-': tok_.kind = Tok::Minus; ++i_; return;
            case '*': tok_.kind = Tok::Star; ++i_; return;
            case '^': tok_.kind = Tok::Caret; ++i_; return;
            case '(': tok_.kind = Tok::LParen; ++i_; return;
            case ')': tok_.kind = Tok::RParen; ++i_; return;
            case ',': tok_.kind = Tok::Comma; ++i_; return;
            case '=': tok_.kind = Tok::Equals; ++i_; return;
            case '/':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '\\') {
                    tok_.kind = Tok::Wedge;
                    i_ += 2;
                    return;
                }
                throw ParseError("unexpected '/' (rational literals are p/q, wedge is /\\)", i_);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
    }

    std::string text_;
    std::size_t i_ = 0;
    Token tok_;
};

// Grammar, loosest to tightest: sum -> wedge -> product -> power -> atom.
class ExprParser {
public:
    ExprParser(std::string text, PresPtr pres) : lex_(std::move(text)), pres_(std::move(pres)) {}

    Polyvector parse() {
        Polyvector v = sum();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return v;
    }

private:
    Polyvector sum() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            neg = true;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
        }
        Polyvector acc = wedge_chain();
        if (neg) acc = -acc;
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc += wedge_chain();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc -= wedge_chain();
            } else {
                return acc;
            }
        }
    }

    Polyvector wedge_chain() {
        Polyvector acc = product();
        while (lex_.peek().kind == Tok::Wedge) {
            lex_.take();
            acc = wedge(acc, product());
        }
        return acc;
    }

    Polyvector product() {
        Polyvector acc = power();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = wedge(acc, power());
        }
        return acc;
    }

    Polyvector power() {
        Polyvector base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            std::size_t pos = lex_.peek().pos;
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Tok::Num || denominator(e.num) != 1 || e.num < 0)
                throw ParseError("exponent must be a non-negative integer", pos);
            int n = numerator(e.num).convert_to<int>();
            Polyvector acc = Polyvector::scalar(pres_, Rational(1));
            for (int k = 0; k < n; ++k) acc = wedge(acc, base);
            return acc;
        }
        return base;
    }

    Polyvector atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Num:
                return Polyvector::scalar(pres_, t.num);
            case Tok::LParen: {
                Polyvector v = sum();
                if (lex_.peek().kind != Tok::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return v;
            }
            case Tok::Minus:
                return -atom();
            case Tok::Ident:
                return ident(t);
            default:
                throw ParseError("expected a value", t.pos);
        }
    }

    Polyvector ident(const Token& t) {
        const std::string& name = t.text;
        int v = pres_->ring()->var_index(name);
        if (v >= 0) return Polyvector::scalar(pres_, Poly::variable(pres_->ring(), v));
        int g = pres_->gen_index(name);
        if (g >= 0) return Polyvector::generator(pres_, g);
        // e<k> and d<k> resolve by 1-based generator index
        if ((name[0] == 'e' || name[0] == 'd') && name.size() > 1) {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
            if (digits) {
                int k = std::stoi(name.substr(1));
                if (k >= 1 && k <= pres_->num_gens())
                    return Polyvector::generator(pres_, k - 1);
                throw ParseError("unknown generator " + name, t.pos);
            }
        }
        throw ParseError("unknown identifier " + name, t.pos);
    }

    Lexer lex_;
    PresPtr pres_;
};

} // namespace detail

inline Polyvector parse_polyvector(const std::string& text, const PresPtr& pres) {
    return detail::ExprParser(text, pres).parse();
}

inline Poly parse_poly(const std::string& text, const PresPtr& pres) {
    Polyvector v = parse_polyvector(text, pres);
    if (!arg_matches(SlotKind::ScalarA, v))
        throw std::invalid_argument("expected a scalar polynomial: " + text);
    return v.scalar_part();
}

// "c(e1)=x2, c(e2)=0"; unspecified generators default to 0.
inline Divergence parse_divergence(const std::string& text, const PresPtr& pres,
                                   Convention conv = Convention::PaperSec2) {
    Divergence d = zero_divergence(pres, conv);
    detail::Lexer lex(text);
    while (lex.peek().kind != detail::Tok::End) {
        detail::Token c = lex.take();
        if (c.kind != detail::Tok::Ident || c.text != "c")
            throw ParseError("expected c(<generator>)=<poly>", c.pos);
        lex.expect(detail::Tok::LParen, "'('");
        detail::Token g = lex.take();
        if (g.kind != detail::Tok::Ident) throw ParseError("expected a generator name", g.pos);
        int idx = pres->gen_index(g.text);
        if (idx < 0 && (g.text[0] == 'e' || g.text[0] == 'd') && g.text.size() > 1)
            idx = std::stoi(g.text.substr(1)) - 1;
        if (idx < 0 || idx >= pres->num_gens())
            throw ParseError("unknown generator " + g.text, g.pos);
        lex.expect(detail::Tok::RParen, "')'");
        lex.expect(detail::Tok::Equals, "'='");
        // take the value expression up to the next top-level comma
        std::string value;
        int depth = 0;
        for (;;) {
            const detail::Token& p = lex.peek();
            if (p.kind == detail::Tok::End) break;
            if (p.kind == detail::Tok::Comma && depth == 0) {
                lex.take();
                break;
            }
            detail::Token tk = lex.take();
            switch (tk.kind) {
                case detail::Tok::Num: value += " " + to_string(tk.num); break;
                case detail::Tok::Ident: value += " " + tk.text; break;
                case detail::Tok::Plus: value += " +"; break;
                case detail::Tok::Minus: value += " -"; break;
                case detail::Tok::Star: value += " *"; break;
                case detail::Tok::Caret: value += " ^"; break;
                case detail::Tok::Wedge: value += " /\\"; break;
                case detail::Tok::LParen: value += " ("; ++depth; break;
                case detail::Tok::RParen: value += " )"; --depth; break;
                default: throw ParseError("unexpected token in divergence value", tk.pos);
            }
        }
        d.values[static_cast<std::size_t>(idx)] = parse_poly(value.empty() ? "0" : value, pres);
    }
    return d;
}

// {"arity": n, "values": {"i1,i2": "poly", ...}} with 1-based indices.
inline ClassicalForm form_from_json(const nlohmann::json& j, const PresPtr& pres) {
    ClassicalForm f{pres, j.at("arity").get<int>(), {}};
    if (f.arity < 0) throw std::invalid_argument("form arity must be >= 0");
    if (j.contains("values")) {
        for (const auto& [key, val] : j.at("values").items()) {
            std::vector<int> idx;
            std::stringstream ss(key);
            std::string part;
            while (std::getline(ss, part, ','))
                if (!part.empty()) idx.push_back(std::stoi(part) - 1);
            if (static_cast<int>(idx.size()) != f.arity)
                throw std::invalid_argument("tuple '" + key + "' has the wrong arity");
            for (std::size_t k = 0; k + 1 < idx.size(); ++k)
                if (idx[k] >= idx[k + 1])
                    throw std::invalid_argument("tuple '" + key + "' must be strictly increasing");
            for (int i : idx)
                if (i < 0 || i >= pres->num_gens())
                    throw std::invalid_argument("tuple '" + key + "' is out of range");
            Poly p = parse_poly(val.get<std::string>(), pres);
            if (!p.is_zero()) f.values[idx] = p;
        }
    }
    return f;
}

inline nlohmann::json form_to_json(const ClassicalForm& f) {
    nlohmann::json j;
    j["arity"] = f.arity;
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [idx, p] : f.values) {
        std::string key;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (k) key += ",";
            key += std::to_string(idx[static_cast<std::size_t>(k)] + 1);
        }
        vals[key] = p.to_string();
    }
    j["values"] = vals;
    return j;
}

// Presentation with no usable generators, for parsing bare polynomials
// over a ring that has no algebroid attached yet.
inline PresPtr scalar_context(const RingPtr& ring) {
    std::vector<std::vector<Poly>> anchor(
        1, std::vector<Poly>(static_cast<std::size_t>(ring->num_vars()), Poly::zero(ring)));
    return std::make_shared<const AlgebroidPresentation>(
        ring, std::vector<std::string>{"__gen"}, std::move(anchor),
        std::map<std::pair<int, int>, std::vector<Poly>>{});
}

// {"vars": [...], "gens": [...], "anchor": [["poly", ...], ...],
//  "brackets": {"i,j": ["poly", ...]}} with 1-based bracket keys.
inline PresPtr algebroid_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> gens = j.at("gens").get<std::vector<std::string>>();
    RingPtr ring = std::make_shared<const PolyRing>(vars);
    PresPtr ctx = scalar_context(ring);
    std::vector<std::vector<Poly>> anchor;
    for (const auto& row : j.at("anchor")) {
        std::vector<Poly> r;
        for (const auto& cell : row) r.push_back(parse_poly(cell.get<std::string>(), ctx));
        anchor.push_back(std::move(r));
    }
    std::map<std::pair<int, int>, std::vector<Poly>> structure;
    if (j.contains("brackets")) {
        for (const auto& [key, val] : j.at("brackets").items()) {
            std::stringstream ss(key);
            std::string a, b;
            if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
                throw std::invalid_argument("bracket key '" + key + "' must be \"i,j\"");
            int i = std::stoi(a) - 1, jj = std::stoi(b) - 1;
            std::vector<Poly> cs;
            for (const auto& cell : val) cs.push_back(parse_poly(cell.get<std::string>(), ctx));
            structure[{i, jj}] = std::move(cs);
        }
    }
    return std::make_shared<const AlgebroidPresentation>(ring, std::move(gens), std::move(anchor),
                                                         std::move(structure));
}

// Accepts "standard(n)" or a path to a JSON presentation file.
inline PresPtr load_algebroid(const std::string& source) {
    std::string s = source;
    if (s.rfind("standard(", 0) == 0 && s.back() == ')') {
        int n = std::stoi(s.substr(9, s.size() - 10));
        if (n < 1) throw std::invalid_argument("standard(n) needs n >= 1");
        return AlgebroidPresentation::standard(n);
    }
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot read algebroid file: " + source);
    nlohmann::json j;
    in >> j;
    return algebroid_from_json(j);
}

// Inline JSON (starts with '{') or a file path.
inline ClassicalForm load_form(const std::string& source, const PresPtr& pres) {
    nlohmann::json j;
    if (!source.empty() && source[0] == '{') {
        j = nlohmann::json::parse(source);
    } else {
        std::ifstream in(source);
        if (!in) throw std::invalid_argument("cannot read form file: " + source);
        in >> j;
    }
    return form_from_json(j, pres);
}

} // namespace gerstkit
