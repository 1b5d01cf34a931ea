#pragma once

// Exact arithmetic in free groups of finite rank.
//
// A letter is a nonzero signed generator index: +i is x_i, -i is x_i^-1,
// with 1 <= i <= rank.

#include <brunnian/errors.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace brunnian {

using Letter = std::int32_t;

namespace detail {

inline void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back() == -l)
        out.pop_back();
    else
        out.push_back(l);
}

/// Appends `w` (or `w^-1` when `inverted`) to `out`, cancelling at the seam.
inline void append_reduced(std::vector<Letter>& out, std::span<const Letter> w,
                           bool inverted = false) {
    if (!inverted) {
        for (Letter l : w) push_reduced(out, l);
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
    }
}

inline std::vector<Letter> free_reduce(std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter l : letters) push_reduced(out, l);
    return out;
}

inline void check_letters(int rank, std::span<const Letter> letters) {
    for (Letter l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw PreconditionError("generator index " + std::to_string(std::abs(l)) +
                                    " out of range for rank " + std::to_string(rank));
    }
}

}  // namespace detail

class FreeWord;

namespace detail {
/// Wraps a sequence the caller has already reduced and range-checked.
FreeWord adopt_reduced(int rank, std::vector<Letter> reduced);
}  // namespace detail

/// Freely reduced word in the free group on x_1..x_rank.
class FreeWord {
public:
    explicit FreeWord(int rank = 1) : rank_(rank) {
        if (rank < 1) throw PreconditionError("free group rank must be positive");
    }

    /// Reduces an arbitrary letter sequence. Throws on out-of-range indices.
    static FreeWord reduce(int rank, std::span<const Letter> letters) {
        FreeWord w(rank);
        detail::check_letters(rank, letters);
        w.letters_ = detail::free_reduce(letters);
        return w;
    }
    static FreeWord reduce(int rank, std::initializer_list<Letter> letters) {
        return reduce(rank, std::span<const Letter>(letters.begin(), letters.size()));
    }

    static FreeWord generator(int rank, int index) { return reduce(rank, {index}); }

    int rank() const noexcept { return rank_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
    FreeWord(int rank, std::vector<Letter> reduced) : rank_(rank), letters_(std::move(reduced)) {}

    friend FreeWord detail::adopt_reduced(int, std::vector<Letter>);

    int rank_;
    std::vector<Letter> letters_;
};

inline FreeWord detail::adopt_reduced(int rank, std::vector<Letter> reduced) {
    return FreeWord(rank, std::move(reduced));
}

inline FreeWord reduce(int rank, std::span<const Letter> letters) {
    return FreeWord::reduce(rank, letters);
}

inline FreeWord concat(const FreeWord& u, const FreeWord& v) {
    if (u.rank() != v.rank()) throw PreconditionError("rank mismatch in concat");
    const auto a = u.letters();
    const auto b = v.letters();
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == -b[k]) ++k;
    std::vector<Letter> out;
    out.reserve(a.size() + b.size() - 2 * k);
    out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
    return detail::adopt_reduced(u.rank(), std::move(out));
}

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return concat(u, v); }

inline FreeWord invert(const FreeWord& u) {
    std::vector<Letter> out(u.letters().rbegin(), u.letters().rend());
    for (Letter& l : out) l = -l;
    return detail::adopt_reduced(u.rank(), std::move(out));
}

/// x^k for a word x; k may be negative.
inline FreeWord power(const FreeWord& x, long long k) {
    std::vector<Letter> out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) detail::append_reduced(out, x.letters(), k < 0);
    return detail::adopt_reduced(x.rank(), std::move(out));
}

struct CyclicReduction {
    FreeWord conjugator;  ///< p
    FreeWord core;        ///< c, cyclically reduced
};

/// Splits u = p * c * p^-1 with c cyclically reduced.
inline CyclicReduction cyclic_reduce(const FreeWord& u) {
    const auto l = u.letters();
    std::size_t k = 0;
    while (2 * k + 1 < l.size() && l[k] == -l[l.size() - 1 - k]) ++k;
    std::vector<Letter> p(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Letter> c(l.begin() + static_cast<std::ptrdiff_t>(k),
                          l.end() - static_cast<std::ptrdiff_t>(k));
    return {detail::adopt_reduced(u.rank(), std::move(p)), detail::adopt_reduced(u.rank(), std::move(c))};
}

inline std::ostream& operator<<(std::ostream& os, const FreeWord& w) {
    if (w.empty()) return os << "1";
    bool first = true;
    for (Letter l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << 'x' << std::abs(l);
        if (l < 0) os << "^-1";
    }
    return os;
}

/// Endomorphism of a free group given by the images of its generators.
/// Automorphisms built from known generators may also carry their inverse
/// table, which is checked on construction.
class FreeAutomorphism {
public:
    static FreeAutomorphism identity(int rank) {
        std::vector<FreeWord> images;
        for (int i = 1; i <= rank; ++i) images.push_back(FreeWord::generator(rank, i));
        FreeAutomorphism a(rank, images);
        a.inverse_ = std::move(images);
        return a;
    }

    FreeAutomorphism(int rank, std::vector<FreeWord> images) : rank_(rank), images_(std::move(images)) {
        if (rank < 1) throw PreconditionError("free group rank must be positive");
        if (static_cast<int>(images_.size()) != rank)
            throw PreconditionError("automorphism needs exactly one image per generator");
        for (const auto& w : images_)
            if (w.rank() != rank) throw PreconditionError("image rank mismatch");
    }

    /// Builds an automorphism together with its inverse table; throws unless
    /// both compositions are the identity.
    static FreeAutomorphism with_inverse(int rank, std::vector<FreeWord> images,
                                         std::vector<FreeWord> inverse_images);

    int rank() const noexcept { return rank_; }
    const FreeWord& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }
    const std::vector<FreeWord>& images() const noexcept { return images_; }

    bool verified_invertible() const noexcept { return inverse_.has_value(); }
    FreeAutomorphism inverse() const {
        if (!inverse_) throw PreconditionError("automorphism has no verified inverse");
        FreeAutomorphism a(rank_, *inverse_);
        a.inverse_ = images_;
        return a;
    }

    bool is_identity() const {
        for (int i = 1; i <= rank_; ++i) {
            const auto l = image(i).letters();
            if (l.size() != 1 || l[0] != i) return false;
        }
        return true;
    }

    friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
        return a.rank_ == b.rank_ && a.images_ == b.images_;
    }

private:
    friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&, LetterBudget&);

    int rank_;
    std::vector<FreeWord> images_;
    std::optional<std::vector<FreeWord>> inverse_;
};

/// Substitutes phi(x_i) for every x_i in w and reduces.
inline FreeWord apply(const FreeAutomorphism& phi, const FreeWord& w, LetterBudget& budget) {
    if (phi.rank() != w.rank()) throw PreconditionError("rank mismatch in apply");
    std::vector<Letter> out;
    std::size_t work = 0;
    for (Letter l : w.letters()) {
        const auto img = phi.image(std::abs(l)).letters();
        work += img.size();
        detail::append_reduced(out, img, l < 0);
    }
    budget.charge(work);
    return detail::adopt_reduced(w.rank(), std::move(out));
}

inline FreeWord apply(const FreeAutomorphism& phi, const FreeWord& w) {
    LetterBudget budget;
    return apply(phi, w, budget);
}

/// (phi o psi)(x_i) = phi(psi(x_i)).
inline FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi,
                                LetterBudget& budget) {
    if (phi.rank() != psi.rank()) throw PreconditionError("rank mismatch in compose");
    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(phi.rank()));
    for (const auto& w : psi.images()) images.push_back(apply(phi, w, budget));
    FreeAutomorphism out(phi.rank(), std::move(images));
    if (phi.inverse_ && psi.inverse_) {
        // (phi o psi)^-1 = psi^-1 o phi^-1
        std::vector<FreeWord> inv;
        const FreeAutomorphism psi_inv = psi.inverse();
        for (const auto& w : *phi.inverse_) inv.push_back(apply(psi_inv, w, budget));
        out.inverse_ = std::move(inv);
    }
    return out;
}

inline FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
    LetterBudget budget;
    return compose(phi, psi, budget);
}

inline FreeAutomorphism FreeAutomorphism::with_inverse(int rank, std::vector<FreeWord> images,
                                                       std::vector<FreeWord> inverse_images) {
    FreeAutomorphism fwd(rank, std::move(images));
    FreeAutomorphism bwd(rank, std::move(inverse_images));
    if (!compose(fwd, bwd).is_identity() || !compose(bwd, fwd).is_identity())
        throw PreconditionError("inverse table does not invert the automorphism");
    fwd.inverse_ = bwd.images_;
    return fwd;
}

/// Inner automorphism x -> w x w^-1.
inline FreeAutomorphism conjugation(const FreeWord& w) {
    const int rank = w.rank();
    const FreeWord wi = invert(w);
    std::vector<FreeWord> images, inv;
    for (int i = 1; i <= rank; ++i) {
        const FreeWord x = FreeWord::generator(rank, i);
        images.push_back(w * x * wi);
        inv.push_back(wi * x * w);
    }
    return FreeAutomorphism::with_inverse(rank, std::move(images), std::move(inv));
}

/// Returns the unique w with phi(x_i) = w x_i w^-1 for all i, if phi is inner.
///
/// phi(x_1) must be conjugate to x_1, which pins w to p * x_1^k where p is
/// the conjugator from cyclically reducing phi(x_1); k is then read off
/// p^-1 phi(x_2) p = x_1^k x_2 x_1^-k, and every generator is verified.
inline std::optional<FreeWord> inner_detect(const FreeAutomorphism& phi) {
    const int rank = phi.rank();
    if (rank < 2) throw PreconditionError("inner_detect needs rank >= 2");

    auto [p, core] = cyclic_reduce(phi.image(1));
    if (core.size() != 1 || core.letters()[0] != 1) return std::nullopt;

    const FreeWord v = invert(p) * phi.image(2) * p;
    const auto l = v.letters();
    std::size_t lead = 0;
    while (lead < l.size() && std::abs(l[lead]) == 1 && l[lead] == l[0]) ++lead;
    if (lead >= l.size() || l[lead] != 2) return std::nullopt;
    const long long k = lead == 0 ? 0 : (l[0] > 0 ? static_cast<long long>(lead)
                                                   : -static_cast<long long>(lead));

    const FreeWord w = p * power(FreeWord::generator(rank, 1), k);
    const FreeWord wi = invert(w);
    for (int i = 1; i <= rank; ++i) {
        if (w * FreeWord::generator(rank, i) * wi != phi.image(i)) return std::nullopt;
    }
    return w;
}

}  // namespace brunnian
