#pragma once

#include <stdexcept>
#include <string>

namespace cleantri {

enum class errc {
    invalid_argument = 1,
    out_of_range,
    degenerate,
    not_invertible,
    not_clean,
    memory_budget,
    invariant_violation,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace cleantri
