#include "gmak/network.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gmak {

void Complex::set(int species, const Rat& c) {
    if (c == 0)
        c_.erase(species);
    else
        c_[species] = c;
}

Rat Complex::get(int species) const {
    auto it = c_.find(species);
    return it == c_.end() ? Rat(0) : it->second;
}

ParseError::ParseError(int line, int col, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
      line(line), col(col) {}

int Network::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name == name) return int(i);
    return -1;
}

int Network::species_index(const std::string& name) const {
    for (size_t i = 0; i < species.size(); ++i)
        if (species[i] == name) return int(i);
    return -1;
}

namespace {

struct Token {
    enum Kind { Name, Number, Sym, End } kind;
    std::string text;
    int col;
};

bool name_char(char c) { return std::isalnum(uint8_t(c)) || c == '_' || c == '*' || c == '\''; }

std::vector<Token> lex_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(uint8_t(c))) { ++i; continue; }
        int col = int(i) + 1;
        if (std::isdigit(uint8_t(c)) || (c == '-' && i + 1 < line.size() && std::isdigit(uint8_t(line[i + 1])))) {
            size_t j = i + 1;
            while (j < line.size() && (std::isdigit(uint8_t(line[j])) || line[j] == '/')) ++j;
            out.push_back({Token::Number, line.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(uint8_t(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() && name_char(line[j])) ++j;
            out.push_back({Token::Name, line.substr(i, j - i), col});
            i = j;
        } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Token::Sym, "->", col});
            i += 2;
        } else if (c == ':' || c == '|' || c == '+' || c == '=' || c == '[' || c == ']') {
            out.push_back({Token::Sym, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::End, "", int(line.size()) + 1});
    return out;
}

class LineParser {
public:
    LineParser(std::vector<Token> toks, int lineno) : t_(std::move(toks)), line_(lineno) {}

    const Token& peek(int ahead = 0) const {
        size_t i = std::min(pos_ + ahead, t_.size() - 1);
        return t_[i];
    }
    Token next() { return t_[std::min(pos_++, t_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::End; }

    std::string expect_name(const char* what) {
        if (peek().kind != Token::Name) fail(std::string("expected ") + what);
        return next().text;
    }
    void expect_sym(const std::string& s) {
        if (peek().kind != Token::Sym || peek().text != s) fail("expected '" + s + "'");
        next();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, peek().col, msg); }

private:
    std::vector<Token> t_;
    size_t pos_ = 0;
    int line_;
};

Rat parse_rat_tok(LineParser& p) {
    Token t = p.peek();
    auto q = parse_rational(t.text);
    if (!q) p.fail("malformed rational '" + t.text + "'");
    p.next();
    return *q;
}

Complex parse_complex(LineParser& p, Network& net,
                      const std::map<std::string, Rat>& params) {
    Complex cx;
    // "0" denotes the empty complex.
    if (p.peek().kind == Token::Number && p.peek().text == "0" &&
        !(p.peek(1).kind == Token::Name)) {
        p.next();
        return cx;
    }
    for (;;) {
        Rat coeff = 1;
        if (p.peek().kind == Token::Number) {
            coeff = parse_rat_tok(p);
        } else if (p.peek().kind == Token::Name && p.peek(1).kind == Token::Name) {
            // two adjacent names: the first must be a parameter coefficient
            auto it = params.find(p.peek().text);
            if (it == params.end()) p.fail("unresolved parameter '" + p.peek().text + "'");
            coeff = it->second;
            p.next();
        }
        if (p.peek().kind != Token::Name) p.fail("expected species name");
        std::string sp = p.next().text;
        int idx = net.species_index(sp);
        if (idx < 0) p.fail("unknown species '" + sp + "'");
        cx.set(idx, cx.get(idx) + coeff);
        if (p.peek().kind == Token::Sym && p.peek().text == "+")
            p.next();
        else
            break;
    }
    return cx;
}

} // namespace

Network parse_network(const std::string& text,
                      const std::vector<std::pair<std::string, Rat>>& overrides) {
    Network net;
    std::map<std::string, Rat> params;
    std::map<std::string, Rat> override_map;
    for (const auto& [k, v] : overrides) override_map[k] = v;
    std::vector<std::string> used_overrides;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineParser p(lex_line(line, lineno), lineno);
        if (p.at_end()) continue;
        std::string kw = p.expect_name("keyword");
        if (kw == "species") {
            do {
                std::string name = p.expect_name("species name");
                if (net.species_index(name) >= 0)
                    p.fail("duplicate species '" + name + "'");
                net.species.push_back(name);
            } while (!p.at_end());
        } else if (kw == "param") {
            std::string name = p.expect_name("parameter name");
            p.expect_sym("=");
            Rat val = parse_rat_tok(p);
            if (params.count(name)) p.fail("duplicate parameter '" + name + "'");
            auto ov = override_map.find(name);
            if (ov != override_map.end()) {
                val = ov->second;
                used_overrides.push_back(name);
            }
            params[name] = val;
            net.params.emplace_back(name, val);
            if (!p.at_end()) p.fail("trailing input after parameter");
        } else if (kw == "vertex") {
            Vertex v;
            v.name = p.expect_name("vertex name");
            if (net.vertex_index(v.name) >= 0) p.fail("duplicate vertex '" + v.name + "'");
            p.expect_sym(":");
            v.stoich = parse_complex(p, net, params);
            if (p.peek().kind == Token::Sym && p.peek().text == "|") {
                p.next();
                v.kinetic = parse_complex(p, net, params);
                v.kinetic_given = true;
            } else {
                v.kinetic = v.stoich;
            }
            if (!p.at_end()) p.fail("trailing input after vertex");
            net.vertices.push_back(std::move(v));
        } else if (kw == "edge") {
            Edge e;
            std::string src = p.expect_name("source vertex");
            p.expect_sym("->");
            std::string tgt = p.expect_name("target vertex");
            e.src = net.vertex_index(src);
            e.tgt = net.vertex_index(tgt);
            if (e.src < 0) p.fail("unknown vertex '" + src + "'");
            if (e.tgt < 0) p.fail("unknown vertex '" + tgt + "'");
            if (e.src == e.tgt) p.fail("self-loop on '" + src + "'");
            for (const auto& prev : net.edges)
                if (prev.src == e.src && prev.tgt == e.tgt)
                    p.fail("parallel edge '" + src + " -> " + tgt + "'");
            if (p.peek().kind == Token::Sym && p.peek().text == "[") {
                p.next();
                e.rate_symbol = p.expect_name("rate symbol");
                p.expect_sym("]");
            }
            if (!p.at_end()) p.fail("trailing input after edge");
            net.edges.push_back(std::move(e));
        } else {
            p.fail("unknown keyword '" + kw + "'");
        }
    }

    for (const auto& [name, val] : override_map) {
        (void)val;
        if (std::find(used_overrides.begin(), used_overrides.end(), name) == used_overrides.end())
            throw ParseError(0, 0, "unresolved parameter override '" + name + "'");
    }
    if (net.vertices.empty()) throw ParseError(lineno, 1, "network has no vertices");
    return net;
}

namespace {

std::string print_complex(const Network& net, const Complex& cx) {
    if (cx.coeffs().empty()) return "0";
    std::string s;
    for (const auto& [sp, c] : cx.coeffs()) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += rat_to_string(c) + " ";
        s += net.species[sp];
    }
    return s;
}

} // namespace

std::string print_network(const Network& net) {
    std::ostringstream os;
    if (!net.species.empty()) {
        os << "species";
        for (const auto& s : net.species) os << " " << s;
        os << "\n";
    }
    for (const auto& [name, val] : net.params)
        os << "param " << name << " = " << rat_to_string(val) << "\n";
    for (const auto& v : net.vertices) {
        os << "vertex " << v.name << " : " << print_complex(net, v.stoich);
        if (v.kinetic_given) os << " | " << print_complex(net, v.kinetic);
        os << "\n";
    }
    for (const auto& e : net.edges) {
        os << "edge " << net.vertices[e.src].name << " -> " << net.vertices[e.tgt].name;
        if (!e.rate_symbol.empty()) os << " [" << e.rate_symbol << "]";
        os << "\n";
    }
    return os.str();
}

} // namespace gmak
