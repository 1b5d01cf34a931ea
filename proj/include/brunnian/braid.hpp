#pragma once

// Sphere braid words, their action on the fundamental group of the
// punctured sphere, the word problem in M(S^2, n), forget-strand maps and
// Brunnian certification.

#include <brunnian/errors.hpp>
#include <brunnian/freegroup.hpp>
#include <brunnian/hurwitz.hpp>
#include <brunnian/verdict.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace brunnian {

/// Word in sigma_1..sigma_{n-1}; letter +i is sigma_i, -i its inverse.
/// Always stored freely reduced.
class BraidWord {
public:
    explicit BraidWord(int strands = 2) : strands_(strands) {
        if (strands < 2) throw PreconditionError("a braid needs at least 2 strands");
    }

    BraidWord(int strands, std::span<const Letter> letters) : BraidWord(strands) {
        for (Letter l : letters)
            if (l == 0 || std::abs(l) >= strands)
                throw PreconditionError("braid generator s" + std::to_string(std::abs(l)) +
                                        " out of range for " + std::to_string(strands) +
                                        " strands");
        letters_ = detail::free_reduce(letters);
    }
    BraidWord(int strands, std::initializer_list<Letter> letters)
        : BraidWord(strands, std::span<const Letter>(letters.begin(), letters.size())) {}

    int strands() const noexcept { return strands_; }
    std::span<const Letter> letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<Letter> letters_;
};

inline BraidWord word_free_reduce(int strands, std::span<const Letter> letters) {
    return BraidWord(strands, letters);
}

inline BraidWord operator*(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw PreconditionError("strand count mismatch");
    std::vector<Letter> l(u.letters().begin(), u.letters().end());
    l.insert(l.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strands(), l);
}

inline BraidWord inverse(const BraidWord& w) {
    std::vector<Letter> l(w.letters().rbegin(), w.letters().rend());
    for (Letter& x : l) x = -x;
    return BraidWord(w.strands(), l);
}

inline BraidWord power(const BraidWord& w, int k) {
    const BraidWord base = k < 0 ? inverse(w) : w;
    BraidWord out(w.strands());
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

/// [a, b] = a b a^-1 b^-1
inline BraidWord commutator(const BraidWord& a, const BraidWord& b) {
    return a * b * inverse(a) * inverse(b);
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
    return os << detail::render_letters('s', w.letters());
}

/// Bijection of {1..n}; image(k) is where the strand starting at position k ends.
class Permutation {
public:
    static Permutation identity(int n) {
        Permutation p;
        for (int i = 1; i <= n; ++i) p.image_.push_back(i);
        return p;
    }

    explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
        std::vector<bool> seen(image_.size() + 1, false);
        for (int v : image_) {
            if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)])
                throw PreconditionError("not a permutation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int k) const { return image_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<int>& table() const noexcept { return image_; }

    bool fixes(int k) const { return (*this)(k) == k; }
    bool is_identity() const {
        for (int k = 1; k <= size(); ++k)
            if (!fixes(k)) return false;
        return true;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    Permutation() = default;
    std::vector<int> image_;
};

/// Puncture permutation: each letter swaps the strands at positions i, i+1.
inline Permutation permutation(const BraidWord& w) {
    const int n = w.strands();
    std::vector<int> at(static_cast<std::size_t>(n) + 1);  // at[position] = strand
    for (int i = 1; i <= n; ++i) at[static_cast<std::size_t>(i)] = i;
    for (Letter l : w.letters()) {
        const auto i = static_cast<std::size_t>(std::abs(l));
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) image[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)] - 1)] = pos;
    return Permutation(std::move(image));
}

inline bool is_pure(const BraidWord& w) { return permutation(w).is_identity(); }

/// Forget map L_i on words: follows strand i through the diagram, drops
/// every crossing it takes part in and shifts crossings to its right down by
/// one. Requires the braid to bring strand i back to position i.
inline BraidWord remove_strand(const BraidWord& w, int strand) {
    const int n = w.strands();
    if (strand < 1 || strand > n) throw PreconditionError("strand index out of range");
    if (n < 3) throw PreconditionError("cannot remove a strand from a 2-strand braid");
    if (!permutation(w).fixes(strand))
        throw PreconditionError("strand " + std::to_string(strand) + " is not fixed by the braid");

    int pos = strand;
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter l : w.letters()) {
        const int i = std::abs(l);
        if (i == pos) {
            pos = i + 1;
        } else if (i + 1 == pos) {
            pos = i;
        } else if (i + 1 < pos) {
            out.push_back(l);
        } else {
            out.push_back(l > 0 ? l - 1 : l + 1);
        }
    }
    return BraidWord(n - 1, out);
}

namespace detail {

/// Action of a raw (not necessarily reduced) letter sequence on
/// pi_1(S^2 minus n points) = <x_1..x_n | x_1...x_n = 1>, eliminating x_n.
///
/// Images of all n generators are maintained, with x_n's image kept as a word
/// in x_1..x_{n-1}; this makes sigma_{n-1} no different from the others.
/// Accumulating left to right realises action(uv) = action(u) o action(v):
/// Phi' = Phi o sigma_i rewrites only Phi(x_i), Phi(x_{i+1}).
inline FreeAutomorphism sphere_action_raw(int n, std::span<const Letter> letters, LetterBudget& budget) {
    if (n < 3) throw PreconditionError("sphere action needs at least 3 strands");
    const int rank = n - 1;
    std::vector<std::vector<Letter>> img(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= rank; ++i) img[static_cast<std::size_t>(i)] = {i};
    for (int i = rank; i >= 1; --i) img[static_cast<std::size_t>(n)].push_back(-i);

    std::vector<Letter> next;
    for (Letter l : letters) {
        const auto i = static_cast<std::size_t>(std::abs(l));
        if (i < 1 || static_cast<int>(i) >= n) throw PreconditionError("braid generator out of range");
        auto& a = img[i];
        auto& b = img[i + 1];
        next.clear();
        if (l > 0) {
            // sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
            append_reduced(next, a);
            append_reduced(next, b);
            append_reduced(next, a, true);
            b.swap(a);
            a.swap(next);
        } else {
            // sigma_i^-1: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
            append_reduced(next, b, true);
            append_reduced(next, a);
            append_reduced(next, b);
            a.swap(b);
            b.swap(next);
        }
        budget.charge(a.size() + b.size());
    }

    std::vector<FreeWord> images;
    images.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) images.push_back(adopt_reduced(rank, std::move(img[static_cast<std::size_t>(i)])));
    return FreeAutomorphism(rank, std::move(images));
}

}  // namespace detail

/// Automorphism of F_{n-1} induced by the braid on the n-punctured sphere.
inline FreeAutomorphism sphere_action(const BraidWord& w, LetterBudget& budget) {
    return detail::sphere_action_raw(w.strands(), w.letters(), budget);
}

inline FreeAutomorphism sphere_action(const BraidWord& w) {
    LetterBudget budget;
    return sphere_action(w, budget);
}

/// Word problem in M(S^2, n), n >= 4: trivial iff pure and the induced
/// automorphism is inner. A finite-quotient screen rejects most nontrivial
/// words before any free-group image is built.
inline bool is_trivial_sphere(const BraidWord& w, LetterBudget& budget) {
    if (w.strands() < 4) throw PreconditionError("triviality test needs at least 4 strands");
    if (!is_pure(w)) return false;
    if (w.empty()) return true;
    if (hurwitz::refutes_inner(w.strands(), w.letters())) return false;
    return inner_detect(sphere_action(w, budget)).has_value();
}

inline bool is_trivial_sphere(const BraidWord& w) {
    LetterBudget budget;
    return is_trivial_sphere(w, budget);
}

struct StrandVerdict {
    int strand = 0;
    Verdict trivial = Verdict::undetermined;  ///< is L_strand(w) trivial
    std::uint64_t letters_used = 0;
    bool aborted = false;
};

struct BrunnianReport {
    int strands = 0;
    bool pure = false;
    std::vector<StrandVerdict> per_strand;
    Verdict overall = Verdict::undetermined;  ///< conjunction of per-strand verdicts
    Verdict word_trivial = Verdict::undetermined;

    std::uint64_t letters_used() const {
        std::uint64_t total = 0;
        for (const auto& s : per_strand) total += s.letters_used;
        return total;
    }
    bool any_aborted() const {
        for (const auto& s : per_strand)
            if (s.aborted) return true;
        return false;
    }
};

namespace detail {

inline Verdict conjunction(const std::vector<StrandVerdict>& v) {
    bool undetermined = false;
    for (const auto& s : v) {
        if (s.trivial == Verdict::no) return Verdict::no;
        if (s.trivial == Verdict::undetermined) undetermined = true;
    }
    return undetermined ? Verdict::undetermined : Verdict::yes;
}

}  // namespace detail

/// Checks L_i(w) = 1 for every strand i. Each strand gets its own budget of
/// `max_letters`; an exhausted budget makes that strand undetermined.
/// The verdict on w itself is left undetermined; see certify_pa_sphere.
inline BrunnianReport brunnian_check(const BraidWord& w, std::uint64_t max_letters = kDefaultMaxLetters) {
    const int n = w.strands();
    if (n < 4) throw PreconditionError("Brunnian check needs at least 4 strands");
    BrunnianReport report;
    report.strands = n;
    const Permutation perm = permutation(w);
    report.pure = perm.is_identity();

    for (int i = 1; i <= n; ++i) {
        StrandVerdict sv;
        sv.strand = i;
        if (!perm.fixes(i)) {
            sv.trivial = Verdict::no;
        } else {
            const BraidWord forgotten = remove_strand(w, i);
            if (n - 1 == 3) {
                // M_p(S^2, 3) is trivial, so only purity matters.
                sv.trivial = verdict_of(is_pure(forgotten));
            } else {
                LetterBudget budget(max_letters);
                try {
                    sv.trivial = verdict_of(is_trivial_sphere(forgotten, budget));
                } catch (const ResourceExhausted&) {
                    sv.aborted = true;
                }
                sv.letters_used = budget.used();
            }
        }
        report.per_strand.push_back(sv);
    }
    report.overall = detail::conjunction(report.per_strand);
    return report;
}

struct SphereCertification {
    BrunnianReport brunnian;
    Verdict trivial = Verdict::undetermined;
    bool trivial_aborted = false;
    std::uint64_t trivial_letters_used = 0;
    Conclusion conclusion;
};

/// Pseudo-Anosov certificate on M(S^2, n), n >= 5: a nontrivial Brunnian
/// class is pseudo-Anosov.
inline SphereCertification certify_pa_sphere(const BraidWord& w,
                                             std::uint64_t max_letters = kDefaultMaxLetters) {
    if (w.strands() < 5) throw PreconditionError("sphere certificate needs at least 5 strands");
    SphereCertification cert;
    LetterBudget budget(max_letters);
    try {
        cert.trivial = verdict_of(is_trivial_sphere(w, budget));
    } catch (const ResourceExhausted&) {
        cert.trivial_aborted = true;
    }
    cert.trivial_letters_used = budget.used();

    cert.brunnian = brunnian_check(w, max_letters);
    cert.brunnian.word_trivial = cert.trivial;

    if (cert.trivial == Verdict::yes) {
        cert.conclusion = {Status::trivial, Justification::none};
    } else if (cert.trivial == Verdict::no && cert.brunnian.overall == Verdict::yes) {
        cert.conclusion = {Status::pseudo_anosov, Justification::theorem_1_1};
    }
    return cert;
}

/// [s1^6, [s2^6, [..., [s_{n-2}^6, s_{n-1}^6]...]]] on n strands.
inline BraidWord brunnian_example(int n) {
    if (n < 5) throw PreconditionError("Brunnian example needs at least 5 strands");
    auto sixth = [n](int i) { return power(BraidWord(n, {i}), 6); };
    BraidWord acc = sixth(n - 1);
    for (int i = n - 2; i >= 1; --i) acc = commutator(sixth(i), acc);
    return acc;
}

}  // namespace brunnian
