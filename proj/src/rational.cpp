#include "curvlab/rational.hpp"

#include "curvlab/errors.hpp"

namespace curvlab {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError(text, "nonzero denominator");
        return Rational(BigInt(text.substr(0, slash)), den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        throw ParseError(text, "rational \"p/q\"");
    }
}

}  // namespace curvlab
