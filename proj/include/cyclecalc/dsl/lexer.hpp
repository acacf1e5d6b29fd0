#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclecalc::dsl {

enum class Tok {
    number,    // 12 or 3/4
    ident,
    lparen,
    rparen,
    comma,
    plus,
    minus,
    star,
    starstar,
    dot,
    at,
    end,
};

std::string describe(Tok t);

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

/// Lexical, syntax and type errors all carry the byte offset into the source.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string kind, std::size_t offset, std::string message, std::set<std::string> expected = {});
    const std::string& kind() const { return kind_; }
    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::string kind_;
    std::size_t offset_;
    std::string message_;
    std::set<std::string> expected_;
};

std::vector<Token> lex(std::string_view source);

}  // namespace cyclecalc::dsl
