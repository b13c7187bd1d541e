#include "qgb/ideal_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qgb/error.hpp"

namespace qgb {

namespace {

std::string where(int line_no) {
    return line_no >= 0 ? "line " + std::to_string(line_no) + ": " : "";
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Caret } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '/') {
                std::size_t k = j + 1;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == j + 1)
                    throw ParseError(where(line_no) + "malformed fraction");
                j = k;
            }
            out.push_back({Token::Number, s.substr(i, j - i)});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Name, s.substr(i, j - i)});
            i = j;
        } else if (c == '+') {
            out.push_back({Token::Plus, "+"});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Minus, "-"});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, "*"});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Caret, "^"});
            ++i;
        } else {
            throw ParseError(where(line_no) + "unexpected character '" +
                             std::string(1, c) + "'");
        }
    }
    return out;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const Field* field,
                            const std::vector<std::string>& names,
                            const TermOrder& order, int line_no) {
    const std::vector<Token> toks = tokenize(text, line_no);
    const unsigned n = static_cast<unsigned>(names.size());
    auto var_index = [&](const std::string& name) -> unsigned {
        for (unsigned v = 0; v < n; ++v)
            if (names[v] == name) return v;
        throw ParseError(where(line_no) + "unknown variable '" + name + "'");
    };

    std::vector<Term> terms;
    std::size_t i = 0;
    if (toks.empty())
        throw ParseError(where(line_no) + "empty polynomial");
    bool first = true;
    while (i < toks.size()) {
        bool negative = false;
        if (toks[i].kind == Token::Plus || toks[i].kind == Token::Minus) {
            if (first && toks[i].kind == Token::Plus)
                throw ParseError(where(line_no) + "unexpected leading '+'");
            negative = toks[i].kind == Token::Minus;
            ++i;
        } else if (!first) {
            throw ParseError(where(line_no) + "expected '+' or '-' between terms");
        }
        first = false;

        Scalar coef = field->one();
        Monomial mono(n);
        bool saw_factor = false;
        bool expect_star_ok = false; // a '*' may only follow a factor
        while (i < toks.size() && toks[i].kind != Token::Plus &&
               toks[i].kind != Token::Minus) {
            if (toks[i].kind == Token::Star) {
                if (!expect_star_ok)
                    throw ParseError(where(line_no) + "unexpected '*'");
                expect_star_ok = false;
                ++i;
                continue;
            }
            if (toks[i].kind == Token::Caret)
                throw ParseError(where(line_no) + "'^' must follow a variable");
            if (toks[i].kind == Token::Number) {
                coef = coef * field->from_string(toks[i].text);
                ++i;
            } else { // Name
                const unsigned v = var_index(toks[i].text);
                ++i;
                unsigned long e = 1;
                if (i < toks.size() && toks[i].kind == Token::Caret) {
                    ++i;
                    if (i >= toks.size() || toks[i].kind != Token::Number ||
                        toks[i].text.find('/') != std::string::npos)
                        throw ParseError(where(line_no) + "malformed exponent");
                    try {
                        e = std::stoul(toks[i].text);
                    } catch (const std::exception&) {
                        throw ParseError(where(line_no) + "exponent out of range");
                    }
                    if (e > 1000000)
                        throw ParseError(where(line_no) + "exponent out of range");
                    ++i;
                }
                mono.set(v, mono[v] + static_cast<std::uint32_t>(e));
            }
            saw_factor = true;
            expect_star_ok = true;
        }
        if (!saw_factor)
            throw ParseError(where(line_no) + "empty term");
        if (negative) coef = -coef;
        terms.push_back({std::move(mono), std::move(coef)});
    }
    return Polynomial::from_terms(field, order, std::move(terms));
}

IdealFile parse_ideal(std::istream& in) {
    IdealFile file;
    std::string raw;
    int line_no = 0;
    int stage = 0; // 0: expect field, 1: expect vars, 2: generators
    TermOrder order(OrderKind::DegRevLex, 0);
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (stage == 0) {
            std::istringstream ls(line);
            std::string kw, spec;
            ls >> kw >> spec;
            std::string rest;
            if (kw != "field" || spec.empty() || (ls >> rest))
                throw ParseError(where(line_no) + "expected 'field <p>' or 'field Q'");
            if (spec == "Q" || spec == "QQ") {
                file.field = rationals();
            } else {
                const std::size_t caret = spec.find('^');
                try {
                    if (caret == std::string::npos) {
                        file.field = prime_field(std::stoull(spec));
                    } else {
                        file.field = extension_field(
                            std::stoull(spec.substr(0, caret)),
                            static_cast<unsigned>(std::stoul(spec.substr(caret + 1))));
                    }
                } catch (const Error&) {
                    throw;
                } catch (const std::exception&) {
                    throw ParseError(where(line_no) + "malformed field specification '" +
                                     spec + "'");
                }
            }
            stage = 1;
        } else if (stage == 1) {
            if (line.rfind("vars", 0) != 0)
                throw ParseError(where(line_no) + "expected 'vars <name,...>'");
            std::string list = trim(line.substr(4));
            if (list.empty())
                throw ParseError(where(line_no) + "expected 'vars <name,...>'");
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = list.find(',', start);
                const std::string name =
                    trim(comma == std::string::npos ? list.substr(start)
                                                    : list.substr(start, comma - start));
                if (!valid_name(name))
                    throw ParseError(where(line_no) + "invalid variable name '" + name + "'");
                for (const auto& seen : file.names)
                    if (seen == name)
                        throw ParseError(where(line_no) + "duplicate variable name '" +
                                         name + "'");
                file.names.push_back(name);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            order = TermOrder(OrderKind::DegRevLex,
                              static_cast<unsigned>(file.names.size()));
            stage = 2;
        } else {
            file.gens.push_back(
                parse_polynomial(line, file.field, file.names, order, line_no));
        }
    }
    if (stage == 0) throw ParseError("missing 'field' line");
    if (stage == 1) throw ParseError("missing 'vars' line");
    if (file.gens.empty()) throw ParseError("no generators");
    return file;
}

IdealFile parse_ideal_string(const std::string& text) {
    std::istringstream in(text);
    return parse_ideal(in);
}

IdealFile load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    return parse_ideal(in);
}

std::string format_ideal(const IdealFile& file) {
    std::ostringstream out;
    if (!file.field->finite()) {
        out << "field Q\n";
    } else if (file.field->degree() == 1) {
        out << "field " << file.field->characteristic() << "\n";
    } else {
        out << "field " << file.field->characteristic() << "^" << file.field->degree()
            << "\n";
    }
    out << "vars ";
    for (std::size_t i = 0; i < file.names.size(); ++i) {
        if (i) out << ",";
        out << file.names[i];
    }
    out << "\n";
    for (const auto& g : file.gens) out << g.to_string(file.names) << "\n";
    return out.str();
}

} // namespace qgb
