#pragma once

#include <brunnian/errors.hpp>
#include <brunnian/freegroup.hpp>
#include <brunnian/verdict.hpp>

#include <cstdlib>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace brunnian {

/// Word in the genus-2 chain twists Delta_1..Delta_5, stored freely reduced.
class TwistWord {
public:
    static constexpr int kGenerators = 5;

    TwistWord() = default;
    explicit TwistWord(std::span<const Letter> letters) {
        for (Letter l : letters)
            if (l == 0 || std::abs(l) > kGenerators)
                throw PreconditionError("twist generator d" + std::to_string(std::abs(l)) + " out of range");
        letters_ = detail::free_reduce(letters);
    }
    TwistWord(std::initializer_list<Letter> letters)
        : TwistWord(std::span<const Letter>(letters.begin(), letters.size())) {}

    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const TwistWord&, const TwistWord&) = default;

private:
    std::vector<Letter> letters_;
};

inline TwistWord operator*(const TwistWord& u, const TwistWord& v) {
    std::vector<Letter> l(u.letters().begin(), u.letters().end());
    l.insert(l.end(), v.letters().begin(), v.letters().end());
    return TwistWord(l);
}

inline TwistWord inverse(const TwistWord& w) {
    std::vector<Letter> l(w.letters().rbegin(), w.letters().rend());
    for (Letter& x : l) x = -x;
    return TwistWord(l);
}

inline TwistWord power(const TwistWord& w, int k) {
    const TwistWord base = k < 0 ? inverse(w) : w;
    TwistWord out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

inline TwistWord commutator(const TwistWord& a, const TwistWord& b) {
    return a * b * inverse(a) * inverse(b);
}

inline std::ostream& operator<<(std::ostream& os, const TwistWord& w) {
    return os << detail::render_letters('d', w.letters());
}

}  // namespace brunnian
