#pragma once

// Genus-2 mapping classes as words in the chain twists, handled through the
// branched double cover over the sphere with six branch points: the
// projection to M(S^2, 6) has kernel {1, [i]}, and homology tells the two
// kernel elements apart.

#include <brunnian/braid.hpp>
#include <brunnian/errors.hpp>
#include <brunnian/homology.hpp>
#include <brunnian/twist_word.hpp>
#include <brunnian/verdict.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace brunnian {

/// Delta_i -> sigma_i on six strands.
inline BraidWord project(const TwistWord& w) { return BraidWord(6, w.letters()); }

/// Hyperelliptic involution d1 d2 d3 d4 d5 d5 d4 d3 d2 d1. Its two defining
/// properties (trivial projection, rho = -Id) are checked on first use.
inline const TwistWord& involution() {
    static const TwistWord word = [] {
        TwistWord i{1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
        if (!is_trivial_sphere(project(i)) || !rho(i).is_scalar(-1))
            throw std::logic_error("involution word failed verification");
        return i;
    }();
    return word;
}

/// Word problem in M(Sigma_2): trivial iff rho is the identity and the
/// projection is trivial on the sphere.
inline bool is_trivial_genus2(const TwistWord& w, LetterBudget& budget) {
    if (!rho(w).is_identity()) return false;
    return is_trivial_sphere(project(w), budget);
}

inline bool is_trivial_genus2(const TwistWord& w) {
    LetterBudget budget;
    return is_trivial_genus2(w, budget);
}

inline BrunnianReport brunnian_genus2(const TwistWord& w, std::uint64_t max_letters = kDefaultMaxLetters) {
    return brunnian_check(project(w), max_letters);
}

struct MembershipReport {
    BrunnianReport brunnian;
    bool rho_mod3_identity = false;
    Verdict member = Verdict::undetermined;
    Verdict trivial = Verdict::undetermined;
    bool trivial_aborted = false;
    std::uint64_t trivial_letters_used = 0;
};

/// Membership in Br(Sigma_2) intersected with the kernel of the mod-3
/// homology representation, with the triviality of w alongside.
inline MembershipReport membership_theorem12(const TwistWord& w,
                                             std::uint64_t max_letters = kDefaultMaxLetters) {
    MembershipReport r;
    r.brunnian = brunnian_genus2(w, max_letters);
    r.rho_mod3_identity = rho_mod(w, 3).is_identity();
    if (!r.rho_mod3_identity || r.brunnian.overall == Verdict::no)
        r.member = Verdict::no;
    else
        r.member = r.brunnian.overall;

    LetterBudget budget(max_letters);
    try {
        r.trivial = verdict_of(is_trivial_genus2(w, budget));
    } catch (const ResourceExhausted&) {
        r.trivial_aborted = true;
    }
    r.trivial_letters_used = budget.used();
    return r;
}

struct Genus2Certification {
    MembershipReport membership;
    SymplecticMatrix rho_integral = SymplecticMatrix::identity();
    CharPolynomial charpoly = CharPolynomial({1, -4, 6, -4, 1});
    CassonBleiler casson_bleiler = CassonBleiler::inconclusive;
    Conclusion conclusion;
};

/// Nontrivial members are pseudo-Anosov; outside the subgroup the
/// characteristic-polynomial criterion may still certify.
inline Genus2Certification certify_pa_genus2(const TwistWord& w,
                                             std::uint64_t max_letters = kDefaultMaxLetters) {
    Genus2Certification c;
    c.membership = membership_theorem12(w, max_letters);
    c.rho_integral = rho(w);
    c.charpoly = charpoly(c.rho_integral);
    c.casson_bleiler = casson_bleiler(c.charpoly);

    const auto& m = c.membership;
    if (m.trivial == Verdict::yes)
        c.conclusion = {Status::trivial, Justification::none};
    else if (m.member == Verdict::yes && m.trivial == Verdict::no)
        c.conclusion = {Status::pseudo_anosov, Justification::theorem_1_2};
    else if (c.casson_bleiler == CassonBleiler::pa_certified)
        c.conclusion = {Status::pseudo_anosov, Justification::casson_bleiler};
    return c;
}

/// [d1^6, [d2^6, [d3^6, [d4^6, d5^6]]]]
inline TwistWord flagship_word() {
    auto sixth = [](int i) { return power(TwistWord{i}, 6); };
    TwistWord acc = sixth(5);
    for (int i = 4; i >= 1; --i) acc = commutator(sixth(i), acc);
    return acc;
}

}  // namespace brunnian
