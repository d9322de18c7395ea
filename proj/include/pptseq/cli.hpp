#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pptseq/autocorr.hpp"
#include "pptseq/triple.hpp"

namespace pptseq::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,  // a verification check disagreed
    kUsage = 2,     // bad flags or arguments
    kOverflow = 3,  // integer-width guard tripped
    kIo = 4,        // output could not be written
};

enum class Format { csv, jsonl };

struct RunConfig {
    std::size_t count = 100000;
    u64 modulus = 3;
    std::string class_label = "A";
    bool all_classes = false;
    std::size_t max_lag = 100;
    BoundaryMode mode = BoundaryMode::circular;
    Format format = Format::csv;
    std::string output;  // empty: stdout
    std::string from_string;
    bool compare = false;
    bool quick = false;
    std::vector<std::size_t> lengths;
    std::vector<u64> primes;
};

/// Largest count the ordered generator can serve before c leaves 64 bits.
inline constexpr std::size_t kMaxCount = 1'000'000'000'000'000'000ULL;

int cmd_generate(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_gaps(const RunConfig& cfg, std::ostream& out);
int cmd_autocorr(const RunConfig& cfg, std::ostream& out);
int cmd_table2(const RunConfig& cfg, std::ostream& out);
int cmd_theorem_check(const RunConfig& cfg, std::ostream& out);
int cmd_report(const RunConfig& cfg, std::ostream& out);

/// Parses `args` (args[0] is the program name), dispatches, and maps library
/// errors onto ExitCode. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Six significant digits, "C" locale.
std::string format_real(double v);

}  // namespace pptseq::cli
