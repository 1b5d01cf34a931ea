// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <brunnian/braid.hpp>
#include <brunnian/certificate.hpp>
#include <brunnian/genus2.hpp>
#include <brunnian/homology.hpp>
#include <brunnian/notation.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"

using namespace brunnian;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(BRUNNIAN_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Failure messages collected by a criterion body.
struct Outcome {
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void within(Outcome& o, Clock::time_point t0, double limit, const std::string& what) {
    const double s = seconds_since(t0);
    o.require(s < limit, what + " took " + std::to_string(s) + " s (limit " + std::to_string(limit) + " s)");
}

const TwistWord kI{1, 2, 3, 4, 5, 5, 4, 3, 2, 1};

const std::string kSphereRelation = "s1 s2 s3 s4 s5 s5 s4 s3 s2 s1";
const std::string kFullTwist = "(s1 s2 s3 s4 s5)^6";
const std::string kFlagship = "[d1^6,[d2^6,[d3^6,[d4^6,d5^6]]]]";

Outcome c1_sphere_relation() {
    Outcome o;
    for (const std::string& w : {kSphereRelation, kFullTwist}) {
        const auto t0 = Clock::now();
        const Run r = run_cli("check --surface sphere:6 --word '" + w + "'");
        o.require(r.code == 0 && r.out == "trivial\n", "check '" + w + "' gave exit " + std::to_string(r.code) +
                                                           " output '" + r.out + "'");
        within(o, t0, 10.0, w);
    }
    return o;
}

Outcome c2_involution() {
    Outcome o;
    const auto t0 = Clock::now();
    o.require(rho(kI).is_scalar(-1), "rho(I) != -Id");
    o.require(rho(kI * kI).is_identity(), "rho(I^2) != Id");
    o.require(is_trivial_sphere(project(kI)), "p(I) not trivial");
    o.require(!is_trivial_genus2(kI), "I reported trivial");
    within(o, t0, 1.0, "involution checks");
    return o;
}

Outcome c3_flagship_genus2() {
    Outcome o;
    const auto t0 = Clock::now();
    const TwistWord w6 = flagship_word();
    const BrunnianReport b = brunnian_genus2(w6);
    o.require(!b.any_aborted(), "forget-map check aborted");
    for (const auto& s : b.per_strand)
        o.require(s.trivial == Verdict::yes, "forget " + std::to_string(s.strand) + " not trivial");
    o.require(rho_mod(w6, 3).is_identity(), "rho_mod(W6, 3) != Id");
    o.require(!rho(w6).is_identity(), "rho(W6) == Id");
    const Certificate c = build_certificate(Surface::genus2(), w6, kFlagship);
    o.require(!c.resources.aborted(), "certificate hit the letter budget");
    o.require(c.conclusion.status == Status::pseudo_anosov, "status " + std::string(to_string(c.conclusion.status)));
    o.require(c.conclusion.justification == Justification::theorem_1_2,
              "justification " + std::string(to_string(c.conclusion.justification)));
    within(o, t0, 300.0, "genus-2 flagship");
    return o;
}

Outcome c4_flagship_sphere() {
    Outcome o;
    const auto t0 = Clock::now();
    const Certificate c = build_certificate(Surface::sphere(6), project(flagship_word()), "");
    o.require(!c.resources.aborted(), "certificate hit the letter budget");
    o.require(c.checks.brunnian.overall == Verdict::yes, "not Brunnian");
    o.require(c.checks.trivial == Verdict::no, "not shown nontrivial");
    o.require(c.conclusion.status == Status::pseudo_anosov, "status " + std::string(to_string(c.conclusion.status)));
    o.require(c.conclusion.justification == Justification::theorem_1_1,
              "justification " + std::string(to_string(c.conclusion.justification)));
    within(o, t0, 300.0, "sphere flagship");
    return o;
}

Outcome c5_representation_sanity() {
    Outcome o;
    oracle::Rng rng(0xacce55);
    int words = 0;
    for (int t = 0; t < 250; ++t, ++words) {
        const int n = rng.uniform(4, 8);
        const BraidWord u(n, oracle::random_letters(rng, n - 1, 20));
        const FreeAutomorphism a = sphere_action(u);
        const int i = rng.uniform(1, n - 2);
        o.require(compose(a, sphere_action(BraidWord(n, {i, i + 1, i}))) ==
                      compose(a, sphere_action(BraidWord(n, {i + 1, i, i + 1}))),
                  "braid relation in sphere_action");
        const int j = rng.uniform(1, n - 1);
        if (j > i + 1 || i > j + 1)
            o.require(sphere_action(u * BraidWord(n, {i, j})) == sphere_action(u * BraidWord(n, {j, i})),
                      "far commutation in sphere_action");

        const TwistWord w(oracle::random_letters(rng, 5, 30));
        const SymplecticMatrix m = rho(w);
        o.require(m.preserves_form(), "rho not symplectic");
        o.require(m.determinant() == 1, "det rho != 1");
        const int k = rng.uniform(1, 4);
        o.require(rho(w * TwistWord{k, k + 1, k}) == rho(w * TwistWord{k + 1, k, k + 1}), "braid relation in rho");
        if (k + 2 <= 5) o.require(rho(TwistWord{k, k + 2}) == rho(TwistWord{k + 2, k}), "far commutation in rho");
        const ModularMatrix m3 = rho_mod(w, 3);
        bool agree = true;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                Integer x = m(r, c) % 3;
                if (x < 0) x += 3;
                agree = agree && x == m3.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        o.require(agree, "rho_mod(., 3) disagrees with rho mod 3");
        o.require(charpoly(m).is_palindromic(), "charpoly not palindromic");
    }
    o.require(words >= 200, "fewer than 200 words");
    return o;
}

Outcome c6_oracle_equivalence() {
    Outcome o;
    oracle::Rng rng(0x0dac1e);
    int trivial = 0;
    for (int t = 0; t < 50; ++t) {
        const int n = t % 2 ? 5 : 4;
        const BraidWord w = gen::disk_pure(rng, n);
        const std::vector<int> raw(w.letters().begin(), w.letters().end());
        std::ostringstream s;
        s << w;
        o.require(is_pure(w), "generator produced an impure word " + s.str());
        const bool expect = oracle::disk_model_trivial(n, raw);
        trivial += expect;
        o.require(is_trivial_sphere(w) == expect, "disagreement on " + s.str());
    }
    o.require(trivial > 0 && trivial < 50, "sample lacks trivial or nontrivial cases");
    return o;
}

Outcome c7_normality_centrality() {
    Outcome o;
    oracle::Rng rng(0xce47);
    const TwistWord w6 = flagship_word();
    int conjugates = 0;
    for (int t = 0; t < 10; ++t) {
        const TwistWord g(oracle::random_letters(rng, 5, 6));
        const BrunnianReport r = brunnian_genus2(g * w6 * inverse(g));
        if (r.any_aborted()) continue;  // budget-limited
        ++conjugates;
        o.require(r.overall == Verdict::yes, "conjugate of W6 not Brunnian");
    }
    o.require(conjugates > 0, "every conjugate aborted");
    for (int t = 0; t < 20; ++t) {
        const TwistWord w(oracle::random_letters(rng, 5, 10));
        o.require(is_trivial_genus2(commutator(kI, w)), "[I, w] not trivial");
    }
    return o;
}

Outcome c8_determinism() {
    Outcome o;
    const std::string dir = GOLDEN_DIR;
    const std::string flag = "< " + dir + "/flagship.txt";
    const std::vector<std::string> commands = {
        "check --json --surface sphere:6 --word '" + kSphereRelation + "'",
        "check --json --surface sphere:6 --word '" + kFullTwist + "'",
        "check --json --surface genus2 --word 'd1 d2 d3 d4 d5 d5 d4 d3 d2 d1'",
        "brunnian --json --surface genus2 " + flag,
        "project --json --surface genus2 " + flag,
        "homology --json --surface genus2 " + flag,
        "homology --json --surface genus2 --mod 3 " + flag,
        "certify --json --surface genus2 " + flag,
        "certify --json --surface sphere:6 --word '" + kSphereRelation + "'",
        "certify --json --surface genus2 --word 'd1 d2 d3 d4 d5 d5 d4 d3 d2 d1'",
        "example --json --n 6",
    };
    for (const auto& c : commands) {
        const Run a = run_cli(c), b = run_cli(c);
        o.require(a.code == 0 && b.code == 0, "nonzero exit: " + c);
        o.require(a.out == b.out && !a.out.empty(), "outputs differ: " + c);
    }
    const Run g = run_cli("certify --json --surface genus2 " + flag);
    o.require(g.out == read_file(dir + "/certify_genus2_flagship.json"), "genus-2 certificate differs from golden");
    const Run s = run_cli("certify --json --surface sphere:6 --word '" + kSphereRelation + "'");
    o.require(s.out == read_file(dir + "/certify_sphere_relation.json"), "sphere certificate differs from golden");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 sphere relation and full twist trivial via CLI (<10 s each)", c1_sphere_relation},
        {"2 hyperelliptic involution (<1 s)", c2_involution},
        {"3 genus-2 flagship: Brunnian, mod-3 trivial, integral nontrivial, theorem-1.2 (<5 min)", c3_flagship_genus2},
        {"4 sphere flagship: theorem-1.1 certificate (<5 min)", c4_flagship_sphere},
        {"5 representation sanity on 250 random words", c5_representation_sanity},
        {"6 disk-model oracle agreement on 50 pure words, n in {4,5}", c6_oracle_equivalence},
        {"7 normality of W6 under conjugation, centrality of I", c7_normality_centrality},
        {"8 deterministic JSON across runs and against golden files (this platform only)", c8_determinism},
    };
    int failed = 0;
    for (const auto& [name, body] : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", seconds_since(t0));
        std::cout << (o.failures.empty() ? "PASS" : "FAIL") << "  criterion " << name << "  [" << secs << " s]\n";
        for (const auto& f : o.failures) std::cout << "      " << f << "\n";
        failed += !o.failures.empty();
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criterion(s) failed\n"
                         : std::string("acceptance: all criteria passed\n"));
    return failed ? 1 : 0;
}
