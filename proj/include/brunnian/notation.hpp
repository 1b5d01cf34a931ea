#pragma once

// Text notation for braid and twist words.
//
//   word  := item*
//   item  := atom ('^' int)?
//   atom  := GEN | '[' word ',' word ']' | '(' word ')'
//   GEN   := ('s' | 'd') uint
//
// [A, B] expands to A B A^-1 B^-1. Whitespace is optional between tokens.

#include <brunnian/braid.hpp>
#include <brunnian/errors.hpp>
#include <brunnian/twist_word.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace brunnian {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& what)
        : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column) {}
    /// 1-based column of the offending character.
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

struct Surface {
    enum class Kind { sphere, genus2 };
    Kind kind = Kind::genus2;
    int strands = 6;  ///< marked points on the sphere; 6 for genus 2

    static Surface sphere(int n) { return {Kind::sphere, n}; }
    static Surface genus2() { return {Kind::genus2, 6}; }

    bool is_sphere() const { return kind == Kind::sphere; }
    char alphabet() const { return is_sphere() ? 's' : 'd'; }
    int max_generator() const { return is_sphere() ? strands - 1 : TwistWord::kGenerators; }

    std::string to_string() const {
        return is_sphere() ? "sphere:" + std::to_string(strands) : std::string("genus2");
    }

    /// "sphere:N" or "genus2".
    static Surface parse(std::string_view text) {
        if (text == "genus2") return genus2();
        constexpr std::string_view prefix = "sphere:";
        if (text.substr(0, prefix.size()) == prefix) {
            const std::string digits(text.substr(prefix.size()));
            if (!digits.empty() && digits.size() <= 6 &&
                digits.find_first_not_of("0123456789") == std::string::npos) {
                const int n = std::stoi(digits);
                if (n >= 2) return sphere(n);
            }
        }
        throw std::invalid_argument("surface must be sphere:N (N >= 2) or genus2, got '" + std::string(text) + "'");
    }

    friend bool operator==(const Surface&, const Surface&) = default;
};

using SurfaceWord = std::variant<BraidWord, TwistWord>;

namespace detail {

class WordParser {
public:
    WordParser(std::string_view text, const Surface& surface, std::uint64_t max_letters)
        : text_(text), surface_(surface), max_letters_(max_letters) {}

    std::vector<Letter> parse() {
        std::vector<Letter> w = word();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!at(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void check_size(std::size_t n) const {
        if (n > max_letters_) throw ResourceExhausted(n, max_letters_);
    }

    std::vector<Letter> word() {
        std::vector<Letter> out;
        while (true) {
            skip_space();
            if (pos_ >= text_.size()) break;
            const char c = text_[pos_];
            if (c == ',' || c == ']' || c == ')') break;
            std::vector<Letter> it = item();
            check_size(out.size() + it.size());
            append_reduced(out, it);
        }
        return out;
    }

    std::vector<Letter> item() {
        std::vector<Letter> a = atom();
        if (!at('^')) return a;
        ++pos_;
        const long long k = integer();
        const std::uint64_t mag = static_cast<std::uint64_t>(k < 0 ? -k : k);
        if (!a.empty() && mag > max_letters_ / a.size()) throw ResourceExhausted(mag * a.size(), max_letters_);
        std::vector<Letter> out;
        for (std::uint64_t i = 0; i < mag; ++i) append_reduced(out, a, k < 0);
        return out;
    }

    std::vector<Letter> atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            std::vector<Letter> a = word();
            expect(',');
            std::vector<Letter> b = word();
            expect(']');
            check_size(2 * (a.size() + b.size()));
            std::vector<Letter> out;
            append_reduced(out, a);
            append_reduced(out, b);
            append_reduced(out, a, true);
            append_reduced(out, b, true);
            return out;
        }
        if (c == '(') {
            ++pos_;
            std::vector<Letter> a = word();
            expect(')');
            return a;
        }
        if (c == 's' || c == 'd') {
            if (c != surface_.alphabet())
                fail(std::string("generator '") + c + "' does not belong to surface " + surface_.to_string());
            ++pos_;
            const std::size_t start = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected generator index");
            const long long idx = digits();
            if (idx < 1 || idx > surface_.max_generator()) {
                pos_ = start;
                fail("generator index " + std::to_string(idx) + " out of range 1.." +
                     std::to_string(surface_.max_generator()));
            }
            return {static_cast<Letter>(idx)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    long long digits() {
        long long v = 0;
        bool any = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > std::numeric_limits<std::int32_t>::max()) fail("number too large");
            ++pos_;
            any = true;
        }
        if (!any) fail("expected a number");
        return v;
    }

    long long integer() {
        skip_space();
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        const long long v = digits();
        return neg ? -v : v;
    }

    std::string_view text_;
    Surface surface_;
    std::uint64_t max_letters_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and fully expands a word for the given surface.
inline SurfaceWord parse_word(std::string_view text, const Surface& surface,
                              std::uint64_t max_letters = kDefaultMaxLetters) {
    const std::vector<Letter> letters = detail::WordParser(text, surface, max_letters).parse();
    if (surface.is_sphere()) return BraidWord(surface.strands, letters);
    return TwistWord(letters);
}

inline std::string render(const SurfaceWord& w) {
    return std::visit([](const auto& x) { return detail::render_letters(
                                              std::is_same_v<std::decay_t<decltype(x)>, BraidWord> ? 's' : 'd',
                                              x.letters()); },
                      w);
}

}  // namespace brunnian
