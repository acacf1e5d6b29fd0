#include "cyclecalc/dsl/lexer.hpp"

#include <cctype>

namespace cyclecalc::dsl {

namespace {

std::string render(const std::string& kind, std::size_t offset, const std::string& message,
                   const std::set<std::string>& expected) {
    std::string s = kind + " error at byte " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
        s += " (expected one of:";
        for (const auto& e : expected) s += " " + e;
        s += ")";
    }
    return s;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

SyntaxError::SyntaxError(std::string kind, std::size_t offset, std::string message, std::set<std::string> expected)
    : std::runtime_error(render(kind, offset, message, expected)),
      kind_(std::move(kind)),
      offset_(offset),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

std::string describe(Tok t) {
    switch (t) {
        case Tok::number: return "number";
        case Tok::ident: return "identifier";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::plus: return "'+'";
        case Tok::minus: return "'-'";
        case Tok::star: return "'*'";
        case Tok::starstar: return "'**'";
        case Tok::dot: return "'.'";
        case Tok::at: return "'@'";
        case Tok::end: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < src.size() && is_digit(src[i])) ++i;
            if (i < src.size() && src[i] == '/') {
                ++i;
                if (i >= src.size() || !is_digit(src[i]))
                    throw SyntaxError("lexical", i, "rational literal needs digits after '/'");
                while (i < src.size() && is_digit(src[i])) ++i;
            }
            if (i < src.size() && is_ident_start(src[i]))
                throw SyntaxError("lexical", i, "identifier directly after a number");
            out.push_back({Tok::number, std::string(src.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < src.size() && is_ident_char(src[i])) ++i;
            out.push_back({Tok::ident, std::string(src.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case ',': kind = Tok::comma; break;
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '.': kind = Tok::dot; break;
            case '@': kind = Tok::at; break;
            case '*':
                if (i + 1 < src.size() && src[i + 1] == '*') {
                    kind = Tok::starstar;
                    len = 2;
                } else {
                    kind = Tok::star;
                }
                break;
            default: {
                std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                        ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                        : std::string("'") + c + "'";
                throw SyntaxError("lexical", i, "unexpected character " + shown);
            }
        }
        out.push_back({kind, std::string(src.substr(i, len)), i});
        i += len;
    }
    out.push_back({Tok::end, "", src.size()});
    return out;
}

}  // namespace cyclecalc::dsl
