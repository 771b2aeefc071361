#pragma once

#include <optional>
#include <string>

namespace arspec {

/// Result of checking one structural claim at one size.
struct verification_outcome {
    std::string claim;
    unsigned n = 0;
    bool passed = true;
    /// Present exactly when the check failed.
    std::optional<std::string> witness;

    explicit operator bool() const { return passed; }

    static verification_outcome pass(std::string claim, unsigned n) { return {std::move(claim), n, true, {}}; }
    static verification_outcome fail(std::string claim, unsigned n, std::string witness) {
        return {std::move(claim), n, false, std::move(witness)};
    }
};

/// `CLAIM <id> n=<n> PASS` or `CLAIM <id> n=<n> FAIL witness=<...>`.
inline std::string to_string(const verification_outcome& v) {
    std::string out = "CLAIM " + v.claim + " n=" + std::to_string(v.n);
    if (v.passed) return out + " PASS";
    return out + " FAIL witness=" + v.witness.value_or("?");
}

} // namespace arspec
