#pragma once

// CLI command bodies, exposed as functions so the test suite can drive them
// without spawning processes. Each returns the process exit code and writes
// its report (JSON or CSV) to the given stream.

#include "k3lat/error.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace k3lat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;       // bad flags / arguments
inline constexpr int kExitParse = 3;       // unreadable or malformed input file
inline constexpr int kExitPrecondition = 4;  // violated operation precondition
inline constexpr int kExitExhausted = 5;   // bounded search exhausted
inline constexpr int kExitVerifyFailed = 6;  // produced certificate failed its audit

/// Exit code for a toolkit error, per the table above.
int exit_code_for(const Error& e);

int run_lattice_info(long d, std::ostream& out);

int run_check(const std::string& in_path, std::int64_t p, std::ostream& out);

/// Writes the certificate to out_path (stdout when empty); exit 0 only if the
/// certificate verifies.
int run_perturb(const std::string& in_path, std::int64_t p, const std::string& epsilon,
                const std::string& out_path, std::ostream& out);

/// Re-audits an existing certificate file; exit 0 iff it verifies.
int run_verify(const std::string& in_path, std::ostream& out);

int run_lemma_sweep(std::int64_t p_max, std::ostream& out);

int run_sample_density(long d, std::int64_t p, long trials, const std::string& epsilon,
                       std::uint64_t seed, bool require_posdef, const std::string& out_path,
                       std::ostream& out);

}  // namespace k3lat::cli
