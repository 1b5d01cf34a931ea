// Builds the nested-commutator genus-2 word, checks its membership and prints
// the resulting certificate.

#include <brunnian/certificate.hpp>
#include <brunnian/genus2.hpp>
#include <brunnian/notation.hpp>

#include <iostream>

int main() {
    using namespace brunnian;
    const std::string text = "[d1^6,[d2^6,[d3^6,[d4^6,d5^6]]]]";
    const SurfaceWord w = parse_word(text, Surface::genus2());
    const TwistWord& tw = std::get<TwistWord>(w);

    std::cout << "letters: " << tw.size() << "\n"
              << "rho mod 3 trivial: " << std::boolalpha << rho_mod(tw, 3).is_identity() << "\n"
              << "rho over Z trivial: " << rho(tw).is_identity() << "\n";

    const Certificate c = build_certificate(Surface::genus2(), w, text);
    std::cout << "conclusion: " << to_string(c.conclusion.status) << " (" << to_string(c.conclusion.justification)
              << ")\n";
}
