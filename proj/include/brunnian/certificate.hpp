#pragma once

// Certificate assembly and canonical JSON emission (schema "brunnian-cert/1").

#include <brunnian/braid.hpp>
#include <brunnian/genus2.hpp>
#include <brunnian/homology.hpp>
#include <brunnian/notation.hpp>
#include <brunnian/verdict.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace brunnian {

inline constexpr const char* kCertificateSchema = "brunnian-cert/1";

struct Certificate {
    struct Checks {
        bool pure = false;
        Verdict trivial = Verdict::undetermined;
        BrunnianReport brunnian;
        // Genus 2 only.
        std::optional<Verdict> member;
        std::optional<bool> rho_mod3_identity;
        std::optional<SymplecticMatrix> rho_integral;
        std::optional<CharPolynomial> charpoly;
        std::optional<CassonBleiler> casson_bleiler;
    };
    struct Resources {
        std::uint64_t letters_used = 0;
        std::uint64_t max_letters = kDefaultMaxLetters;
        std::vector<std::string> aborted_checks;
        bool aborted() const { return !aborted_checks.empty(); }
    };

    Surface surface;
    std::string input;
    std::string word;
    std::size_t length = 0;
    std::vector<int> permutation;
    Checks checks;
    Conclusion conclusion;
    Resources resources;
};

/// Throws std::logic_error when the conclusion is not backed by the checks.
inline void validate(const Certificate& c) {
    const auto& j = c.conclusion.justification;
    if (c.conclusion.status == Status::pseudo_anosov && j == Justification::none)
        throw std::logic_error("pseudo_anosov without justification");
    if (j == Justification::theorem_1_1 &&
        !(c.surface.is_sphere() && c.surface.strands >= 5 && c.checks.brunnian.overall == Verdict::yes &&
          c.checks.trivial == Verdict::no))
        throw std::logic_error("theorem-1.1 justification not supported by checks");
    if (j == Justification::theorem_1_2 &&
        !(!c.surface.is_sphere() && c.checks.member == Verdict::yes && c.checks.trivial == Verdict::no))
        throw std::logic_error("theorem-1.2 justification not supported by checks");
    if (j == Justification::casson_bleiler && c.checks.casson_bleiler != CassonBleiler::pa_certified)
        throw std::logic_error("casson-bleiler justification not supported by checks");
}

namespace detail {

inline void record_brunnian_resources(const BrunnianReport& r, Certificate::Resources& res) {
    res.letters_used += r.letters_used();
    for (const auto& s : r.per_strand)
        if (s.aborted) res.aborted_checks.push_back("forget-" + std::to_string(s.strand));
}

}  // namespace detail

/// Runs the check pipeline for the surface and assembles the record.
/// Budget exhaustion is recorded in the resources section.
inline Certificate build_certificate(const Surface& surface, const SurfaceWord& word, std::string input,
                                     std::uint64_t max_letters = kDefaultMaxLetters) {
    Certificate c;
    c.surface = surface;
    c.input = std::move(input);
    c.word = render(word);
    c.resources.max_letters = max_letters;

    if (const auto* bw = std::get_if<BraidWord>(&word)) {
        if (!surface.is_sphere() || bw->strands() != surface.strands)
            throw PreconditionError("word does not match surface " + surface.to_string());
        c.length = bw->size();
        c.permutation = permutation(*bw).table();
        c.checks.pure = is_pure(*bw);
        const SphereCertification sc = certify_pa_sphere(*bw, max_letters);
        c.checks.trivial = sc.trivial;
        c.checks.brunnian = sc.brunnian;
        c.conclusion = sc.conclusion;
        c.resources.letters_used += sc.trivial_letters_used;
        if (sc.trivial_aborted) c.resources.aborted_checks.push_back("trivial");
        detail::record_brunnian_resources(sc.brunnian, c.resources);
    } else {
        const auto& tw = std::get<TwistWord>(word);
        if (surface.is_sphere()) throw PreconditionError("twist word given for a sphere surface");
        const BraidWord projected = project(tw);
        c.length = tw.size();
        c.permutation = permutation(projected).table();
        c.checks.pure = is_pure(projected);
        const Genus2Certification gc = certify_pa_genus2(tw, max_letters);
        const auto& m = gc.membership;
        c.checks.trivial = m.trivial;
        c.checks.brunnian = m.brunnian;
        c.checks.brunnian.word_trivial = m.trivial;
        c.checks.member = m.member;
        c.checks.rho_mod3_identity = m.rho_mod3_identity;
        c.checks.rho_integral = gc.rho_integral;
        c.checks.charpoly = gc.charpoly;
        c.checks.casson_bleiler = gc.casson_bleiler;
        c.conclusion = gc.conclusion;
        c.resources.letters_used += m.trivial_letters_used;
        if (m.trivial_aborted) c.resources.aborted_checks.push_back("trivial");
        detail::record_brunnian_resources(m.brunnian, c.resources);
    }
    validate(c);
    return c;
}

namespace detail {

inline nlohmann::ordered_json verdict_json(Verdict v) {
    if (v == Verdict::undetermined) return nullptr;
    return v == Verdict::yes;
}

inline std::string decimal(const Integer& x) { return x.str(); }

}  // namespace detail

inline nlohmann::ordered_json surface_json(const Surface& s) {
    nlohmann::ordered_json j;
    j["kind"] = s.is_sphere() ? "sphere" : "genus2";
    j["points"] = s.strands;
    return j;
}

inline nlohmann::ordered_json matrix_json(const SymplecticMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < 4; ++c) row.push_back(detail::decimal(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::ordered_json charpoly_json(const CharPolynomial& q) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : q.coefficients()) a.push_back(detail::decimal(c));
    return a;
}

inline nlohmann::ordered_json brunnian_json(const BrunnianReport& r) {
    nlohmann::ordered_json j;
    j["all"] = detail::verdict_json(r.overall);
    nlohmann::ordered_json strands = nlohmann::ordered_json::array();
    for (const auto& s : r.per_strand) {
        nlohmann::ordered_json e;
        e["strand"] = s.strand;
        e["forgotten_trivial"] = detail::verdict_json(s.trivial);
        strands.push_back(e);
    }
    j["strands"] = strands;
    return j;
}

/// Key order is fixed; big integers are decimal strings.
inline nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["schema"] = kCertificateSchema;
    j["surface"] = surface_json(c.surface);
    j["input"] = c.input;
    j["word"] = c.word;
    j["length"] = c.length;
    j["permutation"] = c.permutation;

    nlohmann::ordered_json checks;
    checks["pure"] = c.checks.pure;
    checks["trivial"] = detail::verdict_json(c.checks.trivial);
    checks["brunnian"] = brunnian_json(c.checks.brunnian);
    if (!c.surface.is_sphere()) {
        checks["theorem_1_2_member"] = detail::verdict_json(c.checks.member.value_or(Verdict::undetermined));
        checks["rho_mod3_identity"] = c.checks.rho_mod3_identity.value_or(false);
        if (c.checks.rho_integral) checks["rho_integral"] = matrix_json(*c.checks.rho_integral);
        if (c.checks.charpoly) checks["charpoly"] = charpoly_json(*c.checks.charpoly);
        if (c.checks.casson_bleiler) checks["casson_bleiler"] = to_string(*c.checks.casson_bleiler);
    }
    j["checks"] = checks;

    nlohmann::ordered_json concl;
    concl["status"] = to_string(c.conclusion.status);
    concl["justification"] = to_string(c.conclusion.justification);
    j["conclusion"] = concl;

    nlohmann::ordered_json conv;
    conv["artin_action"] = "s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i";
    if (!c.surface.is_sphere()) {
        conv["chain_classes"] = "a1, b1, a1+a2, b2, a2";
        conv["twist_sign"] = homology::kTwistSign;
    }
    j["conventions"] = conv;

    nlohmann::ordered_json res;
    res["letters_used"] = c.resources.letters_used;
    res["max_letters"] = c.resources.max_letters;
    res["aborted"] = c.resources.aborted();
    res["aborted_checks"] = c.resources.aborted_checks;
    j["resources"] = res;
    return j;
}

/// Canonical serialisation: two-space indent, trailing newline.
inline std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace brunnian
