#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace elpeq {

// Thrown when an enumeration would exceed the configured search-space guard.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Guards for the exhaustive enumerations. Every solver in this library is
// exponential by necessity, so the guards fail closed with an estimate of the
// search space; `force` overrides them up to the bit-vector hard cap.
struct Limits {
    std::uint32_t max_atoms     = 20;
    std::uint32_t max_eliterals = 12;
    bool          force         = false;

    // Hard cap: interpretations and guesses live in single 64-bit words.
    static constexpr std::uint32_t kHardCap = 62;

    // Reads ELPEQ_MAX_ATOMS / ELPEQ_MAX_ELITERALS if set.
    static Limits from_env();
};

void check_atom_guard(std::size_t universe_size, const Limits& limits, const char* op);
void check_eliteral_guard(std::size_t domain_size, const Limits& limits, const char* op);

// Which flavour of view an operation talks about: candidate world views or
// world views proper (candidate views whose guess is subset-maximal).
enum class ViewKind { cwv, wv };

inline const char* to_string(ViewKind k) { return k == ViewKind::cwv ? "cwv" : "wv"; }

} // namespace elpeq
