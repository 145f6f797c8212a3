#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace frobform {

/// Session defaults; each can be overridden from the environment.
struct SessionConfig {
    std::uint64_t seed = 0;
    std::size_t order_bound = 256;
    std::size_t probe_trials = 200;
    std::uint64_t factor_bound = 1'000'000;

    /// Reads FROBFORM_SEED, FROBFORM_ORDER_BOUND, FROBFORM_TRIALS and
    /// FROBFORM_FACTOR_BOUND. Throws ParseError on malformed or zero values.
    static SessionConfig from_environment();
};

/// Runs one command line (without the program name). Returns 0 when a
/// verdict was produced, 1 on a precondition error, 2 on an internal
/// assertion failure.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace frobform
