#include <cctype>
#include <cstdlib>
#include <string>

#include "cleantri/arith.hpp"
#include "cleantri/error.hpp"

namespace cleantri {

namespace {

constexpr std::uint64_t kDefaultBudget = 1ULL << 30;

// Accepts a byte count with an optional K, M or G suffix (powers of 1024).
std::uint64_t parse_budget(const std::string& text) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        fail(errc::invalid_argument, "CLEANTRI_SIEVE_MEMORY: cannot parse '" + text + "'");
    }
    std::uint64_t scale = 1;
    if (pos < text.size()) {
        switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
            case 'K': scale = 1ULL << 10; break;
            case 'M': scale = 1ULL << 20; break;
            case 'G': scale = 1ULL << 30; break;
            default: fail(errc::invalid_argument, "CLEANTRI_SIEVE_MEMORY: bad suffix in '" + text + "'");
        }
        ++pos;
        if (pos < text.size() && std::toupper(static_cast<unsigned char>(text[pos])) == 'B') ++pos;
        if (pos != text.size()) fail(errc::invalid_argument, "CLEANTRI_SIEVE_MEMORY: trailing characters in '" + text + "'");
    }
    return value * scale;
}

}  // namespace

std::uint64_t sieve_memory_budget() {
    const char* env = std::getenv("CLEANTRI_SIEVE_MEMORY");
    if (env == nullptr || *env == '\0') return kDefaultBudget;
    return parse_budget(env);
}

void check_sieve_budget(std::uint64_t entries, std::uint64_t bytes_per_entry, const char* what) {
    const std::uint64_t budget = sieve_memory_budget();
    if (entries > budget / bytes_per_entry)
        fail(errc::memory_budget, std::string(what) + ": table of " + std::to_string(entries) +
                                      " entries exceeds the sieve memory budget of " + std::to_string(budget) + " bytes");
}

}  // namespace cleantri
