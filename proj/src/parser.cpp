#include "chains/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "chains/builders.hpp"
#include "chains/errors.hpp"

namespace chains {

namespace {

enum class Tok { ident, number, lparen, rparen, comma, vee_op, wedge_op, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            return {Tok::end, {}, start};
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            auto word = src_.substr(start, pos_ - start);
            return {word == "v" ? Tok::vee_op : Tok::ident, word, start};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
            }
            return {Tok::number, src_.substr(start, pos_ - start), start};
        }
        // UTF-8 logical or / and: E2 88 A8 / E2 88 A7.
        if (src_.substr(pos_, 3) == "\xE2\x88\xA8") {
            pos_ += 3;
            return {Tok::vee_op, src_.substr(start, 3), start};
        }
        if (src_.substr(pos_, 3) == "\xE2\x88\xA7") {
            pos_ += 3;
            return {Tok::wedge_op, src_.substr(start, 3), start};
        }
        ++pos_;
        switch (c) {
            case '(': return {Tok::lparen, src_.substr(start, 1), start};
            case ')': return {Tok::rparen, src_.substr(start, 1), start};
            case ',': return {Tok::comma, src_.substr(start, 1), start};
            case '^': return {Tok::wedge_op, src_.substr(start, 1), start};
            default: throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Formula parse() {
        auto f = expr();
        if (cur_.kind != Tok::end) {
            throw ParseError("unexpected trailing input '" + std::string(cur_.text) + "'", cur_.pos);
        }
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            throw ParseError(std::string("expected ") + what, cur_.pos);
        }
        advance();
    }

    Formula expr() {
        std::vector<Formula> parts{term()};
        Tok op = Tok::end;
        while (cur_.kind == Tok::vee_op || cur_.kind == Tok::wedge_op) {
            if (op != Tok::end && cur_.kind != op) {
                throw ParseError("mixed v/^ sums need parentheses", cur_.pos);
            }
            op = cur_.kind;
            advance();
            parts.push_back(term());
        }
        if (parts.size() == 1) {
            return parts.front();
        }
        return make_sum(op == Tok::vee_op ? NodeKind::vee : NodeKind::wedge, std::move(parts));
    }

    std::uint64_t number() {
        if (cur_.kind != Tok::number) {
            throw ParseError("expected a nonnegative integer", cur_.pos);
        }
        std::uint64_t v = 0;
        for (char c : cur_.text) {
            const auto d = static_cast<std::uint64_t>(c - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
                throw ParseError("integer too large", cur_.pos);
            }
            v = v * 10 + d;
        }
        advance();
        return v;
    }

    Formula term() {
        if (cur_.kind == Tok::lparen) {
            advance();
            auto f = expr();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (cur_.kind != Tok::ident) {
            throw ParseError("expected a chain term", cur_.pos);
        }
        const Token name = cur_;
        advance();
        if (name.text == "E") {
            return prim();
        }
        if (!is_function(name.text)) {
            throw ParseError("unknown name '" + std::string(name.text) + "'", name.pos);
        }
        expect(Tok::lparen, "'(' after function name");
        try {
            auto f = call(name);
            expect(Tok::rparen, "')'");
            return f;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), name.pos);
        }
    }

    static bool is_function(std::string_view fn) {
        for (std::string_view known : {"flip", "poly", "twin", "gdc", "vex", "cave", "dc", "zz", "dzz", "koch"}) {
            if (fn == known) {
                return true;
            }
        }
        return false;
    }

    Formula call(const Token& name) {
        const auto fn = name.text;
        if (fn == "flip") {
            return flip(expr());
        }
        if (fn == "poly" || fn == "twin") {
            auto base = expr();
            expect(Tok::comma, "','");
            const auto n = number();
            return fn == "poly" ? poly(base, n) : twin(base, n);
        }
        if (fn == "gdc") {
            std::vector<std::uint64_t> counts{number()};
            while (cur_.kind == Tok::comma) {
                advance();
                counts.push_back(number());
            }
            return gdc(counts);
        }
        const auto arg_pos = cur_.pos;
        const auto n = number();
        if (fn == "vex") return vex(n);
        if (fn == "cave") return cave(n);
        if (fn == "dc") return double_chain(n);
        if (fn == "zz") return zigzag(n);
        if (fn == "dzz") return double_zigzag(n);
        if (fn == "koch") {
            if (n > 62) {
                throw ParseError("koch level too large", arg_pos);
            }
            return koch(static_cast<unsigned>(n));
        }
        throw ParseError("unknown function '" + std::string(fn) + "'", name.pos);
    }

    Lexer lexer_;
    Token cur_{Tok::end, {}, 0};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace chains
