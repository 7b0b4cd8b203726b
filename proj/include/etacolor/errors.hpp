#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etacolor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed files, invalid configs, out-of-range parameters.
struct BadInputError : Error {
    using Error::Error;
};

/// A formula was evaluated outside its stated domain.
struct DomainError : Error {
    using Error::Error;
};

/// An exact or enumerative routine was asked to run past its configured cap.
/// Carries whatever partial count was accumulated before giving up.
struct CapExceededError : Error {
    std::uint64_t partial_count;
    explicit CapExceededError(const std::string& what, std::uint64_t partial = 0)
        : Error(what), partial_count(partial) {}
};

/// Search ran out of node budget. best_upper < 0 means no bound is known.
struct TimeoutError : Error {
    long long best_upper;
    explicit TimeoutError(const std::string& what, long long upper = -1)
        : Error(what), best_upper(upper) {}
};

struct InsufficientDataError : Error {
    using Error::Error;
};

/// Refutation of odd c needs the documented extension gadget; it is off by default.
struct OddCUnsupportedError : Error {
    using Error::Error;
};

}  // namespace etacolor
