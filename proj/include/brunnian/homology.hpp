#pragma once

// Action of genus-2 Dehn twists on H_1(Sigma_2) over Z and Z/p:
// transvections, the symplectic representation, characteristic polynomials
// and a homological pseudo-Anosov criterion.

#include <brunnian/errors.hpp>
#include <brunnian/freegroup.hpp>
#include <brunnian/twist_word.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace brunnian {

using Integer = boost::multiprecision::cpp_int;

/// Vector in H_1(Sigma_2; Z) in the basis (a1, b1, a2, b2).
using HomologyVector = std::array<Integer, 4>;

class SymplecticMatrix;

namespace homology {

/// Twist direction: T_c(x) = x + kTwistSign * <x, c> c.
inline constexpr int kTwistSign = +1;

/// <x, y> = x^T J y with <a_i, b_i> = +1.
inline Integer intersection(const HomologyVector& x, const HomologyVector& y) {
    return x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
}

/// Classes of the chain curves twisted by Delta_1..Delta_5:
/// a1, b1, a1 + a2, b2, a2.
inline const std::array<HomologyVector, 5>& chain_classes() {
    static const std::array<HomologyVector, 5> classes{{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {1, 0, 1, 0},
        {0, 0, 0, 1},
        {0, 0, 1, 0},
    }};
    return classes;
}

}  // namespace homology

/// 4x4 integer matrix preserving the intersection form; acts on column
/// vectors.
class SymplecticMatrix {
public:
    using Entries = std::array<std::array<Integer, 4>, 4>;

    static SymplecticMatrix identity() { return scalar(1); }
    static SymplecticMatrix scalar(int s) {
        Entries e{};
        for (int i = 0; i < 4; ++i) e[i][i] = s;
        return SymplecticMatrix(e);
    }

    /// Throws unless M^T J M = J.
    explicit SymplecticMatrix(const Entries& e) : m_(e) {
        if (!preserves_form()) throw PreconditionError("matrix is not symplectic");
    }

    const Integer& operator()(int r, int c) const { return m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Entries& entries() const noexcept { return m_; }

    HomologyVector operator*(const HomologyVector& v) const {
        HomologyVector out{};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) out[r] += m_[r][c] * v[c];
        return out;
    }

    friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
        SymplecticMatrix out;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                Integer s = 0;
                for (std::size_t k = 0; k < 4; ++k) s += x.m_[r][k] * y.m_[k][c];
                out.m_[r][c] = std::move(s);
            }
        return out;
    }

    /// Inverse via -J M^T J.
    SymplecticMatrix inverse() const {
        // For symplectic M, M^-1 = J^-1 M^T J = -J M^T J.
        Entries t{};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) t[r][c] = m_[c][r];
        const auto jmul = [](const Entries& a, bool left) {
            // J = diag([[0,1],[-1,0]], [[0,1],[-1,0]])
            Entries o{};
            for (std::size_t blk = 0; blk < 4; blk += 2)
                for (std::size_t k = 0; k < 4; ++k) {
                    if (left) {
                        o[blk][k] = a[blk + 1][k];
                        o[blk + 1][k] = -a[blk][k];
                    } else {
                        o[k][blk] = -a[k][blk + 1];
                        o[k][blk + 1] = a[k][blk];
                    }
                }
            return o;
        };
        Entries r = jmul(jmul(t, false), true);
        for (auto& row : r)
            for (auto& x : row) x = -x;
        SymplecticMatrix out;
        out.m_ = r;
        return out;
    }

    Integer determinant() const;
    bool preserves_form() const;

    bool is_scalar(int s) const {
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (m_[r][c] != (r == c ? s : 0)) return false;
        return true;
    }
    bool is_identity() const { return is_scalar(1); }

    friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
    SymplecticMatrix() = default;
    Entries m_{};
};

inline bool SymplecticMatrix::preserves_form() const {
    // <M e_i, M e_j> == <e_i, e_j>
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            HomologyVector ci{m_[0][i], m_[1][i], m_[2][i], m_[3][i]};
            HomologyVector cj{m_[0][j], m_[1][j], m_[2][j], m_[3][j]};
            HomologyVector ei{}, ej{};
            ei[i] = 1;
            ej[j] = 1;
            if (homology::intersection(ci, cj) != homology::intersection(ei, ej)) return false;
        }
    return true;
}

inline Integer SymplecticMatrix::determinant() const {
    // Laplace expansion along the first row with 3x3 minors.
    const auto det3 = [this](std::size_t skip) {
        std::array<std::size_t, 3> cols{};
        std::size_t k = 0;
        for (std::size_t c = 0; c < 4; ++c)
            if (c != skip) cols[k++] = c;
        const auto& m = m_;
        return m[1][cols[0]] * (m[2][cols[1]] * m[3][cols[2]] - m[2][cols[2]] * m[3][cols[1]]) -
               m[1][cols[1]] * (m[2][cols[0]] * m[3][cols[2]] - m[2][cols[2]] * m[3][cols[0]]) +
               m[1][cols[2]] * (m[2][cols[0]] * m[3][cols[1]] - m[2][cols[1]] * m[3][cols[0]]);
    };
    Integer d = 0;
    for (std::size_t c = 0; c < 4; ++c) {
        const Integer term = m_[0][c] * det3(c);
        d += (c % 2 == 0) ? term : Integer(-term);
    }
    return d;
}

inline std::ostream& operator<<(std::ostream& os, const SymplecticMatrix& m) {
    for (int r = 0; r < 4; ++r) {
        os << '[';
        for (int c = 0; c < 4; ++c) os << (c ? " " : "") << m(r, c);
        os << "]" << (r < 3 ? "\n" : "");
    }
    return os;
}

/// Dehn twist action on homology: x -> x + <x, c> c.
inline SymplecticMatrix transvection(const HomologyVector& c) {
    bool zero = true;
    for (const auto& x : c) zero = zero && x == 0;
    if (zero) throw PreconditionError("transvection along the zero class");
    SymplecticMatrix::Entries e{};
    for (std::size_t col = 0; col < 4; ++col) {
        HomologyVector basis{};
        basis[col] = 1;
        const Integer coef = homology::kTwistSign * homology::intersection(basis, c);
        for (std::size_t row = 0; row < 4; ++row) e[row][col] = basis[row] + coef * c[row];
    }
    return SymplecticMatrix(e);
}

namespace homology {

inline const std::array<SymplecticMatrix, 5>& twist_matrices() {
    static const std::array<SymplecticMatrix, 5> t{
        transvection(chain_classes()[0]), transvection(chain_classes()[1]),
        transvection(chain_classes()[2]), transvection(chain_classes()[3]),
        transvection(chain_classes()[4])};
    return t;
}

inline const std::array<SymplecticMatrix, 5>& inverse_twist_matrices() {
    static const std::array<SymplecticMatrix, 5> t{
        twist_matrices()[0].inverse(), twist_matrices()[1].inverse(), twist_matrices()[2].inverse(),
        twist_matrices()[3].inverse(), twist_matrices()[4].inverse()};
    return t;
}

/// Ordered product of twist matrices for a letter sequence in Delta_1..Delta_5.
inline SymplecticMatrix rho_letters(std::span<const Letter> letters) {
    SymplecticMatrix m = SymplecticMatrix::identity();
    for (Letter l : letters) {
        const int i = std::abs(l);
        if (i < 1 || i > 5) throw PreconditionError("twist generator out of range");
        const auto idx = static_cast<std::size_t>(i - 1);
        m = m * (l > 0 ? twist_matrices()[idx] : inverse_twist_matrices()[idx]);
    }
    return m;
}

}  // namespace homology

/// Symplectic representation of M(Sigma_2) on H_1(Sigma_2; Z).
inline SymplecticMatrix rho(const TwistWord& w) { return homology::rho_letters(w.letters()); }

/// Matrix over Z/p with entries in [0, p).
struct ModularMatrix {
    std::uint32_t prime = 3;
    std::array<std::array<std::uint32_t, 4>, 4> entries{};

    bool is_identity() const {
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                if (entries[r][c] != (r == c ? 1u : 0u)) return false;
        return true;
    }
    friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline ModularMatrix reduce_mod(const SymplecticMatrix& m, std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    ModularMatrix out;
    out.prime = p;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Integer v = m(r, c) % p;
            if (v < 0) v += p;
            out.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v.convert_to<std::uint32_t>();
        }
    return out;
}

inline ModularMatrix rho_mod(const TwistWord& w, std::uint32_t p = 3) { return reduce_mod(rho(w), p); }

/// Monic degree-4 integer polynomial, coefficients from x^4 down to x^0.
class CharPolynomial {
public:
    explicit CharPolynomial(std::vector<Integer> descending) {
        if (descending.size() != 5) throw PreconditionError("expected a degree-4 polynomial");
        if (descending[0] != 1) throw PreconditionError("polynomial is not monic");
        for (std::size_t i = 0; i < 5; ++i) c_[i] = descending[i];
    }

    /// Coefficient of x^(4 - i).
    const Integer& operator[](std::size_t i) const { return c_.at(i); }
    const std::array<Integer, 5>& coefficients() const noexcept { return c_; }

    bool is_palindromic() const { return c_[0] == c_[4] && c_[1] == c_[3]; }

    Integer evaluate(const Integer& x) const {
        Integer v = 0;
        for (const auto& c : c_) v = v * x + c;
        return v;
    }

    friend bool operator==(const CharPolynomial&, const CharPolynomial&) = default;

private:
    std::array<Integer, 5> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CharPolynomial& q) {
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        const Integer& c = q[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const int deg = 4 - i;
        const Integer mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1 || deg == 0) os << mag;
        if (deg > 0) os << "x" << (deg > 1 ? "^" + std::to_string(deg) : "");
        first = false;
    }
    if (first) os << "0";
    return os;
}

/// Faddeev-LeVerrier over Z; every division is exact.
inline CharPolynomial charpoly(const SymplecticMatrix& a) {
    using Mat = SymplecticMatrix::Entries;
    const auto mul = [&a](const Mat& m) {
        Mat out{};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t k = 0; k < 4; ++k) out[r][c] += a(static_cast<int>(r), static_cast<int>(k)) * m[k][c];
        return out;
    };
    std::vector<Integer> coeffs{1};
    Mat m{};  // M_0 = 0
    Integer prev = 1;
    for (int k = 1; k <= 4; ++k) {
        Mat am = mul(m);
        for (std::size_t i = 0; i < 4; ++i) am[i][i] += prev;  // M_k = A M_{k-1} + c I
        m = am;
        const Mat t = mul(m);
        Integer trace = 0;
        for (std::size_t i = 0; i < 4; ++i) trace += t[i][i];
        prev = -trace / k;
        coeffs.push_back(prev);
    }
    return CharPolynomial(std::move(coeffs));
}

enum class CassonBleiler { pa_certified, inconclusive };

inline std::string_view to_string(CassonBleiler v) {
    return v == CassonBleiler::pa_certified ? "pa_certified" : "inconclusive";
}

namespace homology {

inline std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out;
    const Integer m = abs(n);
    if (m > Integer(1'000'000'000'000LL)) throw PreconditionError("constant term too large for divisor search");
    for (Integer d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        for (const Integer& e : {d, Integer(m / d)}) {
            out.push_back(e);
            out.push_back(-e);
        }
    }
    return out;
}

inline bool has_integer_root(const CharPolynomial& q) {
    if (q[4] == 0) return true;
    for (const auto& d : divisors(q[4]))
        if (q.evaluate(d) == 0) return true;
    return false;
}

/// x^4 + q3 x^3 + q2 x^2 + q1 x + q0 = (x^2 + a x + b)(x^2 + c x + d)?
inline bool has_quadratic_factor(const CharPolynomial& q) {
    const Integer &q3 = q[1], &q2 = q[2], &q1 = q[3], &q0 = q[4];
    if (q0 == 0) return true;
    for (const auto& b : divisors(q0)) {
        const Integer d = q0 / b;
        if (b != d) {
            // a + c = q3 and a d + b c = q1 pin a down.
            const Integer num = q1 - q3 * b;
            const Integer den = d - b;
            if (num % den != 0) continue;
            const Integer a = num / den;
            const Integer c = q3 - a;
            if (a * c + b + d == q2) return true;
        } else {
            if (q1 != q3 * b) continue;
            // a, c are the roots of t^2 - q3 t + (q2 - 2b).
            const Integer disc = q3 * q3 - 4 * (q2 - 2 * b);
            if (disc < 0) continue;
            const Integer s = sqrt(disc);
            if (s * s == disc && (q3 + s) % 2 == 0) return true;
        }
    }
    return false;
}

/// Degree-4 cyclotomic polynomials Phi_5, Phi_8, Phi_10, Phi_12.
inline const std::array<CharPolynomial, 4>& quartic_cyclotomics() {
    static const std::array<CharPolynomial, 4> phis{
        CharPolynomial({1, 1, 1, 1, 1}), CharPolynomial({1, 0, 0, 0, 1}),
        CharPolynomial({1, -1, 1, -1, 1}), CharPolynomial({1, 0, -1, 0, 1})};
    return phis;
}

}  // namespace homology

/// Sufficient homological pseudo-Anosov criterion: the characteristic
/// polynomial is irreducible over Q, not cyclotomic, and not a polynomial
/// in x^k for k >= 2.
inline CassonBleiler casson_bleiler(const CharPolynomial& q) {
    if (homology::has_integer_root(q) || homology::has_quadratic_factor(q)) return CassonBleiler::inconclusive;
    for (const auto& phi : homology::quartic_cyclotomics())
        if (q == phi) return CassonBleiler::inconclusive;
    if (q[1] == 0 && q[3] == 0) return CassonBleiler::inconclusive;
    return CassonBleiler::pa_certified;
}

}  // namespace brunnian
