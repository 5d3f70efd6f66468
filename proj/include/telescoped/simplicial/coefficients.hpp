#pragma once

#include "telescoped/exactalg/integer.hpp"

#include <string>
#include <vector>

namespace telescoped {

/// Direct sum of copies of Z (modulus 0) and Z/m (m >= 2).
class CoefficientGroup {
public:
    CoefficientGroup() : moduli_{BigInt(0)} {}
    /// Throws PreconditionError for a modulus of 1 or a negative modulus, or an empty list.
    explicit CoefficientGroup(std::vector<BigInt> moduli);

    static CoefficientGroup integers() { return CoefficientGroup(); }
    static CoefficientGroup integers_mod(const BigInt& m) { return CoefficientGroup({m}); }

    /// "Z", "Zmod:6", "Z+Zmod:2". Throws ParseError with an offset.
    static CoefficientGroup parse(const std::string& text);

    const std::vector<BigInt>& moduli() const { return moduli_; }
    std::size_t summands() const { return moduli_.size(); }
    std::string to_string() const;

    bool operator==(const CoefficientGroup& o) const { return moduli_ == o.moduli_; }

private:
    std::vector<BigInt> moduli_;
};

}  // namespace telescoped
