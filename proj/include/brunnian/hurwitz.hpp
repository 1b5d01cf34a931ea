#pragma once

// Finite-quotient screen for the sphere word problem.
//
// A tuple (g_1..g_n) in a finite group G with g_1...g_n = 1 is a
// homomorphism F_{n-1} -> G. Pushing the tuple through the braid letters
// with the same update rule as the free-group images gives f o Phi without
// any word growth. If Phi is conjugation by w then the result is the
// original tuple conjugated by f(w); when no single h in G conjugates the
// tuple onto its image, Phi is certainly not inner.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <vector>

#include <brunnian/freegroup.hpp>

namespace brunnian::hurwitz {

/// Element of SL(2, Z/p).
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

class SL2 {
public:
    explicit SL2(std::int64_t p) : p_(p) {
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b)
                for (std::int64_t c = 0; c < p; ++c)
                    for (std::int64_t d = 0; d < p; ++d)
                        if (mod(a * d - b * c) == 1) elements_.push_back({a, b, c, d});
    }

    std::int64_t prime() const noexcept { return p_; }
    const std::vector<Mat2>& elements() const noexcept { return elements_; }

    Mat2 mul(const Mat2& x, const Mat2& y) const {
        return {mod(x.a * y.a + x.b * y.c), mod(x.a * y.b + x.b * y.d),
                mod(x.c * y.a + x.d * y.c), mod(x.c * y.b + x.d * y.d)};
    }
    Mat2 inv(const Mat2& x) const { return {x.d, mod(-x.b), mod(-x.c), x.a}; }

private:
    std::int64_t mod(std::int64_t v) const { return ((v % p_) + p_) % p_; }

    std::int64_t p_;
    std::vector<Mat2> elements_;
};

/// Applies the braid letters to the tuple (t_1..t_n), t_n = (t_1...t_{n-1})^-1.
inline void act(const SL2& g, std::vector<Mat2>& t, std::span<const Letter> letters) {
    for (Letter l : letters) {
        const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
        Mat2& a = t[i];
        Mat2& b = t[i + 1];
        if (l > 0) {
            const Mat2 na = g.mul(g.mul(a, b), g.inv(a));
            b = a;
            a = na;
        } else {
            const Mat2 nb = g.mul(g.mul(g.inv(b), a), b);
            a = b;
            b = nb;
        }
    }
}

inline bool simultaneously_conjugate(const SL2& g, const std::vector<Mat2>& from,
                                     const std::vector<Mat2>& to) {
    for (const Mat2& h : g.elements()) {
        const Mat2 hi = g.inv(h);
        bool ok = true;
        for (std::size_t j = 0; ok && j < from.size(); ++j) ok = g.mul(g.mul(h, from[j]), hi) == to[j];
        if (ok) return true;
    }
    return false;
}

/// True when some tuple proves the braid's outer action nontrivial.
/// Deterministic: fixed primes, fixed seed, platform-independent sampling.
inline bool refutes_inner(int n, std::span<const Letter> letters) {
    static const std::array<SL2, 3> groups{SL2(7), SL2(11), SL2(13)};
    constexpr int kTuplesPerGroup = 4;
    std::mt19937_64 rng(0x5eed'b7a1'd5ULL);
    for (const SL2& g : groups) {
        for (int k = 0; k < kTuplesPerGroup; ++k) {
            std::vector<Mat2> tuple;
            Mat2 prod;
            for (int j = 0; j < n - 1; ++j) {
                const auto& els = g.elements();
                tuple.push_back(els[static_cast<std::size_t>(rng() % els.size())]);
                prod = g.mul(prod, tuple.back());
            }
            tuple.push_back(g.inv(prod));
            std::vector<Mat2> image = tuple;
            act(g, image, letters);
            if (!simultaneously_conjugate(g, tuple, image)) return true;
        }
    }
    return false;
}

}  // namespace brunnian::hurwitz
