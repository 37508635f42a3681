#pragma once

#include "json_io.hpp"

#include <optional>
#include <string>

namespace sschr::cli {

struct RunConfig {
    AlgebraKind kind = AlgebraKind::ssch1;
    Rational d{0};
    Rational m{0};
    Rational r{0};
    /// Module degree cutoff for singular, classify and gram.
    int cutoff = 12;
    /// Polynomial degree for realization verify.
    int polyDegree = 8;
    std::optional<Weight> weight;
    int epsilon = 0;
    int lambda = 0;

    LowestWeight lowestWeight() const { return {kind, d, m, r, std::nullopt}; }
};

struct CommandResult {
    io::Json json;
    std::string text;
    /// 0 success, 1 verification failure.
    int exitCode = 0;
};

/// Value of SSCHR_CUTOFF, or 12 when unset. Throws std::invalid_argument
/// when the variable is not a positive integer.
int defaultCutoff();

/// Throws std::invalid_argument when a cutoff is not positive.
void validate(const RunConfig& cfg);

CommandResult algebraVerify(const RunConfig& cfg);
CommandResult algebraDump(const RunConfig& cfg);
CommandResult singularFind(const RunConfig& cfg);
CommandResult singularCheck(const RunConfig& cfg);
CommandResult classifyCommand(const RunConfig& cfg);
CommandResult gramCommand(const RunConfig& cfg);
CommandResult realizationVerify(const RunConfig& cfg);

/// Parses "n" or "n1,n2".
Weight parseWeight(const std::string& text);

}  // namespace sschr::cli
