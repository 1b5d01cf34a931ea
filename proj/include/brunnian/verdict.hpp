#pragma once

#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <brunnian/freegroup.hpp>

namespace brunnian {

/// Outcome of a decision that may be cut short by the letter budget.
enum class Verdict { no, yes, undetermined };

inline Verdict verdict_of(bool b) { return b ? Verdict::yes : Verdict::no; }

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::no: return "no";
        case Verdict::yes: return "yes";
        case Verdict::undetermined: return "undetermined";
    }
    return "?";
}

enum class Status { trivial, pseudo_anosov, undetermined };
enum class Justification { none, theorem_1_1, theorem_1_2, casson_bleiler };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::trivial: return "trivial";
        case Status::pseudo_anosov: return "pseudo_anosov";
        case Status::undetermined: return "undetermined";
    }
    return "?";
}

inline std::string_view to_string(Justification j) {
    switch (j) {
        case Justification::none: return "none";
        case Justification::theorem_1_1: return "theorem-1.1";
        case Justification::theorem_1_2: return "theorem-1.2";
        case Justification::casson_bleiler: return "casson-bleiler";
    }
    return "?";
}

struct Conclusion {
    Status status = Status::undetermined;
    Justification justification = Justification::none;

    friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

namespace detail {

/// Renders a generator word as "s1 s2^-1 ..." with the given generator
/// prefix; the empty word renders as "".
inline std::string render_letters(char prefix, std::span<const Letter> letters) {
    std::string out;
    for (Letter l : letters) {
        if (!out.empty()) out += ' ';
        out += prefix;
        out += std::to_string(std::abs(l));
        if (l < 0) out += "^-1";
    }
    return out;
}

}  // namespace detail

}  // namespace brunnian
