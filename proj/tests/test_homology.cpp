#include <brunnian/genus2.hpp>
#include <brunnian/homology.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"

using namespace brunnian;

namespace {

TwistWord random_twist(oracle::Rng& rng, int max_len) { return TwistWord(oracle::random_letters(rng, 5, max_len)); }

SymplecticMatrix from_int64(const oracle::Mat& m) {
    SymplecticMatrix::Entries e{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) e[r][c] = m[r][c];
    return SymplecticMatrix(e);
}

/// det by the Leibniz formula over all 24 permutations.
Integer leibniz_det(const std::array<std::array<Integer, 4>, 4>& m) {
    std::array<int, 4> p{0, 1, 2, 3};
    Integer total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        Integer term = 1;
        for (std::size_t i = 0; i < 4; ++i) term *= m[i][static_cast<std::size_t>(p[i])];
        total += inversions % 2 ? Integer(-term) : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<Integer> coeffs(std::initializer_list<long long> l) { return {l.begin(), l.end()}; }

}  // namespace

TEST(Transvection, FixedSignConvention) {
    const SymplecticMatrix t = transvection(homology::chain_classes()[0]);  // a1
    const HomologyVector b1{0, 1, 0, 0};
    EXPECT_EQ(t * b1, (HomologyVector{-1, 1, 0, 0}));  // b1 - a1
    EXPECT_THROW(transvection(HomologyVector{0, 0, 0, 0}), PreconditionError);
}

TEST(Transvection, ChainClassProperties) {
    const auto& c = homology::chain_classes();
    for (std::size_t i = 0; i < 5; ++i) {
        const SymplecticMatrix t = transvection(c[i]);
        EXPECT_EQ(t * c[i], c[i]);
        EXPECT_EQ(t.determinant(), 1);
        // (T - I)^2 = 0 and T^6 = I + 6 (T - I)
        SymplecticMatrix t6 = SymplecticMatrix::identity();
        for (int k = 0; k < 6; ++k) t6 = t6 * t;
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col) {
                const Integer n = t(r, col) - (r == col ? 1 : 0);
                EXPECT_EQ(t6(r, col), (r == col ? 1 : 0) + 6 * n);
            }
        Integer nsq = 0;
        for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col) {
                Integer s = 0;
                for (int k = 0; k < 4; ++k) s += (t(r, k) - (r == k ? 1 : 0)) * (t(k, col) - (k == col ? 1 : 0));
                nsq += abs(s);
            }
        EXPECT_EQ(nsq, 0);
    }
    // chain intersection pattern
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const Integer f = homology::intersection(c[i], c[j]);
            if (i + 1 == j || j + 1 == i)
                EXPECT_EQ(abs(f), 1);
            else
                EXPECT_EQ(f, 0);
        }
}

TEST(Rho, MatchesIndependentInt64Product) {
    EXPECT_TRUE(rho(TwistWord{}).is_identity());
    const TwistWord inv{1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
    EXPECT_EQ(rho(inv), from_int64(oracle::rho_int64({1, 2, 3, 4, 5, 5, 4, 3, 2, 1})));
    EXPECT_TRUE(rho(inv).is_scalar(-1));

    oracle::Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const auto raw = oracle::random_letters(rng, 5, 20);
        ASSERT_EQ(rho(TwistWord(raw)), from_int64(oracle::rho_int64(raw)));
    }
}

TEST(Rho, FlagshipNotIdentityOverZ) {
    const SymplecticMatrix m = rho(flagship_word());
    EXPECT_FALSE(m.is_identity());
    EXPECT_FALSE(m.is_scalar(-1));
    EXPECT_TRUE(m.preserves_form());
    EXPECT_EQ(m.determinant(), 1);
}

TEST(RhoMod, Examples) {
    for (int i = 1; i <= 5; ++i) EXPECT_TRUE(rho_mod(power(TwistWord{i}, 6), 3).is_identity()) << i;
    EXPECT_TRUE(rho_mod(flagship_word(), 3).is_identity());

    const ModularMatrix inv = rho_mod(TwistWord{1, 2, 3, 4, 5, 5, 4, 3, 2, 1}, 3);
    EXPECT_FALSE(inv.is_identity());
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(inv.entries[r][c], r == c ? 2u : 0u);

    EXPECT_THROW(rho_mod(TwistWord{1}, 4), PreconditionError);
    EXPECT_THROW(rho_mod(TwistWord{1}, 1), PreconditionError);
    EXPECT_NO_THROW(rho_mod(TwistWord{1}, 7));
}

TEST(Rho, RepresentationInvariants) {
    oracle::Rng rng(32);
    for (int t = 0; t < 200; ++t) {
        const TwistWord u = random_twist(rng, 30), v = random_twist(rng, 30);
        const SymplecticMatrix mu = rho(u);
        ASSERT_TRUE(mu.preserves_form());
        ASSERT_EQ(mu.determinant(), 1);
        ASSERT_EQ(rho(u * v), mu * rho(v));
        // mod-3 reduction commutes with rho
        const ModularMatrix m3 = rho_mod(u, 3);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                Integer x = mu(r, c) % 3;
                if (x < 0) x += 3;
                ASSERT_EQ(Integer(m3.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]), x);
            }
        ASSERT_TRUE(charpoly(mu).is_palindromic());
    }
    for (int i = 1; i <= 4; ++i)
        EXPECT_EQ(rho(TwistWord{i, i + 1, i}), rho(TwistWord{i + 1, i, i + 1}));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 2; j <= 5; ++j) EXPECT_EQ(rho(TwistWord{i, j}), rho(TwistWord{j, i}));
}

TEST(Rho, ChainRelations) {
    EXPECT_TRUE(rho(power(TwistWord{1, 2, 3, 4, 5}, 6)).is_identity());
    EXPECT_TRUE(rho(power(TwistWord{1, 2, 3, 4, 5, 5, 4, 3, 2, 1}, 2)).is_identity());
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(charpoly(SymplecticMatrix::identity()), CharPolynomial(coeffs({1, -4, 6, -4, 1})));
    EXPECT_EQ(charpoly(SymplecticMatrix::scalar(-1)), CharPolynomial(coeffs({1, 4, 6, 4, 1})));
    EXPECT_TRUE(charpoly(rho(flagship_word())).is_palindromic());
    EXPECT_THROW(CharPolynomial(coeffs({1, 2, 3})), PreconditionError);
    EXPECT_THROW(CharPolynomial(coeffs({2, 0, 0, 0, 1})), PreconditionError);
}

TEST(CharPoly, AgreesWithDeterminantAtSamplePoints) {
    oracle::Rng rng(33);
    std::vector<TwistWord> words{flagship_word()};
    for (int t = 0; t < 50; ++t) words.push_back(random_twist(rng, 25));
    for (const auto& w : words) {
        const SymplecticMatrix m = rho(w);
        const CharPolynomial q = charpoly(m);
        for (int x = -2; x <= 2; ++x) {
            auto e = m.entries();
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c) e[r][c] = (r == c ? Integer(x) : Integer(0)) - e[r][c];
            ASSERT_EQ(q.evaluate(x), leibniz_det(e)) << w;
        }
    }
}

TEST(CassonBleiler, Examples) {
    EXPECT_EQ(casson_bleiler(CharPolynomial(coeffs({1, -4, 6, -4, 1}))), CassonBleiler::inconclusive);
    EXPECT_EQ(casson_bleiler(CharPolynomial(coeffs({1, 0, -1, 0, 1}))), CassonBleiler::inconclusive);
    EXPECT_EQ(casson_bleiler(CharPolynomial(coeffs({1, -1, -1, -1, 1}))), CassonBleiler::pa_certified);
    // irreducible but a polynomial in x^2
    EXPECT_EQ(casson_bleiler(CharPolynomial(coeffs({1, 0, -5, 0, 1}))), CassonBleiler::inconclusive);
    for (const auto& phi : homology::quartic_cyclotomics())
        EXPECT_EQ(casson_bleiler(phi), CassonBleiler::inconclusive);
}

TEST(CassonBleiler, IrreducibilityMatchesBruteForce) {
    oracle::Rng rng(34);
    for (int t = 0; t < 400; ++t) {
        const long long a = rng.uniform(-6, 6), b = rng.uniform(-8, 8);
        long long q0 = rng.uniform(-6, 6);
        const bool palindromic = t % 2 == 0;
        const long long q1 = palindromic ? a : rng.uniform(-6, 6);
        if (palindromic) q0 = 1;
        const std::array<long long, 5> q{1, a, b, q1, q0};
        const CharPolynomial cp(coeffs({1, a, b, q1, q0}));
        const bool reducible = homology::has_integer_root(cp) || homology::has_quadratic_factor(cp);
        // factor coefficients are bounded by the root bound 1 + max|q_i| < 20 squared
        ASSERT_EQ(reducible, oracle::quartic_reducible(q, 40)) << a << " " << b << " " << q1 << " " << q0;
    }
}

TEST(CassonBleiler, CertifiedPolynomialsHaveNoRootsOfUnity) {
    oracle::Rng rng(35);
    int certified = 0;
    for (int t = 0; t < 300; ++t) {
        const long long a = rng.uniform(-5, 5), b = rng.uniform(-6, 6);
        const CharPolynomial q(coeffs({1, a, b, a, 1}));
        if (casson_bleiler(q) != CassonBleiler::pa_certified) continue;
        ++certified;
        for (int m = 1; m <= 24; ++m) {
            // remainder of x^m - 1 modulo q
            std::vector<Integer> r(static_cast<std::size_t>(m) + 1, 0);
            r[0] = 1;
            r[static_cast<std::size_t>(m)] = -1;
            for (std::size_t i = 0; i + 4 < r.size(); ++i) {
                const Integer lead = r[i];
                for (std::size_t k = 0; k < 5; ++k) r[i + k] -= lead * q[k];
            }
            const bool divides = std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
            ASSERT_FALSE(divides) << a << " " << b << " m=" << m;
        }
    }
    EXPECT_GT(certified, 10);
}

TEST(CassonBleiler, FlagshipHasUnitEigenvalue) {
    // (x - 1)^2 (x^2 - 2821109907458 x + 1), factored independently
    const CharPolynomial q = charpoly(rho(flagship_word()));
    EXPECT_EQ(q, CharPolynomial(coeffs({1, -2821109907460, 5642219814918, -2821109907460, 1})));
    EXPECT_EQ(q.evaluate(1), 0);
    EXPECT_TRUE(homology::has_integer_root(q));
    EXPECT_EQ(casson_bleiler(q), CassonBleiler::inconclusive);
}
