#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "singline/counter.hpp"
#include "singline/verification.hpp"

namespace singline::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Json, Csv, Md };

/// One rendered query. `n` and `phi` are strings so no precision is lost.
struct OutputRecord {
    long d = 0;
    long k = 0;
    long u = 0;
    long rank = 0;
    long delta = 0;
    std::string n;
    std::string phi;  // "p/q"
    std::vector<std::string> warnings;
};

OutputRecord make_record(const SurfaceQuery& q, const CountResult& result);

/// Single-line JSON object with exactly the OutputRecord fields.
std::string to_json(const OutputRecord& r);

std::string csv_header();
std::string to_csv(const OutputRecord& r);

int cmd_count(long d, long k, Format format, std::ostream& out, std::ostream& err);
int cmd_table(long dmax, Format format, std::ostream& out, std::ostream& err);
int cmd_verify(const std::optional<std::string>& suite, std::ostream& out, std::ostream& err,
               const VerifyOptions& options = {});

/// Full argument parsing and dispatch; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singline::cli
