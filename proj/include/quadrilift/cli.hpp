#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadrilift/local_fields.hpp"

namespace quadrilift {

using HilbertFn = std::function<int(const Rational&, const Rational&, const Place&)>;

struct CliEnvironment {
    /// Seed for randomized checks when no --seed is given.
    std::optional<std::uint64_t> seed;
    /// Symbol formula exercised by the selftest; defaults to the library one.
    HilbertFn hilbert;
};

struct CommandResponse {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNegative = 3;

/// Runs one command line (without the program name).
CommandResponse run_command(const std::vector<std::string>& args, const CliEnvironment& env = {});

/// Reads QUADRILIFT_SEED; throws DomainError for a malformed value.
CliEnvironment environment_from_process();

}  // namespace quadrilift
