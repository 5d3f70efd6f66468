#include "telescoped/simplicial/coefficients.hpp"

#include "telescoped/error.hpp"

#include <cctype>

namespace telescoped {

CoefficientGroup::CoefficientGroup(std::vector<BigInt> moduli) : moduli_(std::move(moduli))
{
    if (moduli_.empty()) throw PreconditionError("coefficient group has a summand", "empty list of summands");
    for (const auto& m : moduli_)
        if (m < 0 || m == 1)
            throw PreconditionError("coefficient moduli are >= 2", "got modulus " + telescoped::to_string(m));
}

CoefficientGroup CoefficientGroup::parse(const std::string& text)
{
    std::vector<BigInt> moduli;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) { throw ParseError("coefficient spec: " + why, pos); };
    if (text.empty()) fail("empty");
    for (;;) {
        if (text.compare(pos, 5, "Zmod:") == 0) {
            pos += 5;
            const std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) fail("expected a modulus");
            BigInt m(text.substr(start, pos - start));
            if (m < 2) {
                pos = start;
                fail("modulus must be at least 2");
            }
            moduli.push_back(m);
        } else if (pos < text.size() && text[pos] == 'Z') {
            ++pos;
            moduli.push_back(0);
        } else {
            fail("expected Z or Zmod:<m>");
        }
        if (pos == text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return CoefficientGroup(std::move(moduli));
}

std::string CoefficientGroup::to_string() const
{
    std::string s;
    for (const auto& m : moduli_) {
        if (!s.empty()) s += "+";
        s += m == 0 ? "Z" : "Zmod:" + telescoped::to_string(m);
    }
    return s;
}

}  // namespace telescoped
