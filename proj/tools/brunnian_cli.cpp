// Command-line front end: triviality, Brunnian checks, projection,
// homology and pseudo-Anosov certificates for sphere and genus-2 words.
//
// Exit codes: 0 ran to a conclusion, 1 parse/usage error, 2 precondition
// violation, 3 letter budget exceeded.

#include <brunnian/braid.hpp>
#include <brunnian/certificate.hpp>
#include <brunnian/genus2.hpp>
#include <brunnian/homology.hpp>
#include <brunnian/notation.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

using namespace brunnian;
using ordered_json = nlohmann::ordered_json;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kResource = 3 };

struct Common {
    std::string surface = "sphere:6";
    std::optional<std::string> word;
    bool json = false;
    std::uint64_t max_letters = kDefaultMaxLetters;
};

void add_common(CLI::App* cmd, Common& c, bool with_word = true) {
    cmd->add_option("--surface", c.surface, "sphere:N or genus2");
    if (with_word) cmd->add_option("--word", c.word, "word text (read from stdin when omitted)");
    cmd->add_flag("--json", c.json, "emit JSON");
    cmd->add_option("--max-letters", c.max_letters, "letter budget per computation")->check(CLI::PositiveNumber);
}

std::string read_input(const Common& c) {
    if (c.word) return *c.word;
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

ordered_json header(const char* command, const Surface& s, const std::string& input, const SurfaceWord& w) {
    ordered_json j;
    j["command"] = command;
    j["surface"] = surface_json(s);
    j["input"] = input;
    j["word"] = render(w);
    return j;
}

const char* verdict_text(Verdict v, const char* yes, const char* no) {
    return v == Verdict::yes ? yes : v == Verdict::no ? no : "undetermined";
}

int run_check(const Common& c) {
    const Surface s = Surface::parse(c.surface);
    const std::string input = read_input(c);
    const SurfaceWord w = parse_word(input, s, c.max_letters);
    LetterBudget budget(c.max_letters);
    Verdict v = Verdict::undetermined;
    try {
        v = verdict_of(s.is_sphere() ? is_trivial_sphere(std::get<BraidWord>(w), budget)
                                     : is_trivial_genus2(std::get<TwistWord>(w), budget));
    } catch (const ResourceExhausted&) {
    }
    if (c.json) {
        ordered_json j = header("check", s, input, w);
        j["trivial"] = v == Verdict::undetermined ? ordered_json(nullptr) : ordered_json(v == Verdict::yes);
        j["letters_used"] = budget.used();
        j["max_letters"] = budget.cap();
        std::cout << dump(j);
    } else {
        std::cout << verdict_text(v, "trivial", "nontrivial") << "\n";
    }
    return v == Verdict::undetermined ? kResource : kOk;
}

int run_brunnian(const Common& c) {
    const Surface s = Surface::parse(c.surface);
    const std::string input = read_input(c);
    const SurfaceWord w = parse_word(input, s, c.max_letters);
    const BrunnianReport r = s.is_sphere() ? brunnian_check(std::get<BraidWord>(w), c.max_letters)
                                           : brunnian_genus2(std::get<TwistWord>(w), c.max_letters);
    if (c.json) {
        ordered_json j = header("brunnian", s, input, w);
        j["pure"] = r.pure;
        j["brunnian"] = brunnian_json(r);
        j["letters_used"] = r.letters_used();
        j["aborted"] = r.any_aborted();
        std::cout << dump(j);
    } else {
        for (const auto& sv : r.per_strand)
            std::cout << "forget " << sv.strand << ": " << verdict_text(sv.trivial, "trivial", "nontrivial") << "\n";
        std::cout << verdict_text(r.overall, "brunnian", "not brunnian") << "\n";
    }
    return r.any_aborted() && r.overall == Verdict::undetermined ? kResource : kOk;
}

int run_project(const Common& c) {
    const Surface s = Surface::parse(c.surface);
    if (s.is_sphere()) throw PreconditionError("project needs --surface genus2");
    const std::string input = read_input(c);
    const SurfaceWord w = parse_word(input, s, c.max_letters);
    const BraidWord p = project(std::get<TwistWord>(w));
    if (c.json) {
        ordered_json j = header("project", s, input, w);
        j["projection"] = {{"surface", surface_json(Surface::sphere(6))}, {"word", render(p)}};
        std::cout << dump(j);
    } else {
        std::cout << render(p) << "\n";
    }
    return kOk;
}

int run_homology(const Common& c, std::optional<std::uint32_t> mod) {
    const Surface s = Surface::parse(c.surface);
    if (s.is_sphere()) throw PreconditionError("homology needs --surface genus2");
    const std::string input = read_input(c);
    const SurfaceWord w = parse_word(input, s, c.max_letters);
    const TwistWord& tw = std::get<TwistWord>(w);
    const SymplecticMatrix m = rho(tw);
    ordered_json j = header("homology", s, input, w);
    if (mod) {
        const ModularMatrix mm = reduce_mod(m, *mod);
        j["modulus"] = *mod;
        j["matrix"] = mm.entries;
        j["identity"] = mm.is_identity();
        if (!c.json) {
            for (const auto& row : mm.entries) {
                for (std::size_t k = 0; k < 4; ++k) std::cout << (k ? " " : "") << row[k];
                std::cout << "\n";
            }
        }
    } else {
        const CharPolynomial q = charpoly(m);
        j["matrix"] = matrix_json(m);
        j["identity"] = m.is_identity();
        j["charpoly"] = charpoly_json(q);
        j["casson_bleiler"] = to_string(casson_bleiler(q));
        if (!c.json) {
            std::cout << m << "\n"
                      << "charpoly: " << q << "\n"
                      << "casson-bleiler: " << to_string(casson_bleiler(q)) << "\n";
        }
    }
    if (c.json) std::cout << dump(j);
    return kOk;
}

int run_certify(const Common& c) {
    const Surface s = Surface::parse(c.surface);
    const std::string input = read_input(c);
    const SurfaceWord w = parse_word(input, s, c.max_letters);
    const Certificate cert = build_certificate(s, w, input, c.max_letters);
    if (c.json) {
        std::cout << dump(to_json(cert));
    } else {
        std::cout << "status: " << to_string(cert.conclusion.status) << "\n"
                  << "justification: " << to_string(cert.conclusion.justification) << "\n";
    }
    return cert.resources.aborted() ? kResource : kOk;
}

int run_example(const Common& c, int n) {
    const Surface s = c.surface == "genus2" ? Surface::genus2() : Surface::sphere(n);
    SurfaceWord w = BraidWord(2);
    if (s.is_sphere()) {
        w = brunnian_example(n);
    } else {
        if (n != 6) throw PreconditionError("the genus-2 example lives over six points");
        w = flagship_word();
    }
    if (c.json) {
        ordered_json j;
        j["command"] = "example";
        j["surface"] = surface_json(s);
        j["word"] = render(w);
        j["length"] = std::visit([](const auto& x) { return x.size(); }, w);
        std::cout << dump(j);
    } else {
        std::cout << render(w) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brunnian mapping classes: word problems and pseudo-Anosov certificates"};
    app.require_subcommand(1);

    Common common;
    std::optional<std::uint32_t> mod;
    int example_n = 6;

    auto* check = app.add_subcommand("check", "decide triviality of a mapping class");
    add_common(check, common);
    auto* brunnian = app.add_subcommand("brunnian", "run every forget-strand check");
    add_common(brunnian, common);
    auto* proj = app.add_subcommand("project", "project a genus-2 word to the six-punctured sphere");
    add_common(proj, common);
    auto* homology = app.add_subcommand("homology", "action on H_1 of the genus-2 surface");
    add_common(homology, common);
    homology->add_option("--mod", mod, "reduce modulo a prime");
    auto* certify = app.add_subcommand("certify", "emit a pseudo-Anosov certificate");
    add_common(certify, common);
    auto* example = app.add_subcommand("example", "print the nested-commutator Brunnian example");
    add_common(example, common, false);
    example->add_option("--n", example_n, "number of points (>= 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (check->parsed()) return run_check(common);
        if (brunnian->parsed()) return run_brunnian(common);
        if (proj->parsed()) return run_project(common);
        if (homology->parsed()) return run_homology(common, mod);
        if (certify->parsed()) return run_certify(common);
        if (example->parsed()) return run_example(common, example_n);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceExhausted& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return kResource;
    }
    return kUsage;
}
