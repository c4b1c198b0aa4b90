#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/topology.hpp"

namespace arbor {

struct Expectation {
    std::string key;
    nlohmann::json value;
    std::string basis;  // "stated", "derived" or "trivial"
};

struct CorpusEntry {
    std::string name;
    std::vector<std::string> anchors;
    nlohmann::json generator;  // {"family", "params", "refine"}
    std::vector<Expectation> expected;
};

/// Expectation keys understood by the runner, sorted.
std::vector<std::string> check_names();

/// Parses and validates a corpus document {"entries": [...]}. Throws
/// InputError on malformed entries, duplicate names or unknown check keys.
std::vector<CorpusEntry> parse_corpus(const nlohmann::json& doc);

enum class Status { Pass, Fail, Indeterminate };

std::string to_string(Status s);

struct CheckOutcome {
    Expectation expectation;
    nlohmann::json actual;
    Status status = Status::Fail;
};

struct EntryReport {
    std::string name;
    std::vector<std::string> anchors;
    Status status = Status::Pass;
    std::vector<CheckOutcome> checks;
    std::string error;  // generator or evaluation failure
    double wall_ms = 0.0;
};

struct AnchorCounts {
    int pass = 0;
    int fail = 0;
    int indeterminate = 0;
};

struct VerificationReport {
    std::vector<EntryReport> entries;  // sorted by name
    AnchorCounts totals;
    std::vector<std::pair<std::string, AnchorCounts>> anchors;  // sorted by anchor

    /// 0 all pass, 1 any failure, 2 only indeterminate entries besides passes.
    int exit_code() const;
};

struct RunOptions {
    int jobs = 1;
    std::uint64_t seed = 42;
    RecognitionBudget budget{};
    std::int64_t conjecture_samples = 10'000;
};

/// Seed for one entry, derived from the root seed and the entry name only, so
/// results do not depend on scheduling.
std::uint64_t entry_seed(std::uint64_t root, const std::string& name);

EntryReport run_entry(const CorpusEntry& entry, const RunOptions& options);

/// Runs every entry on a pool of `jobs` threads. The report is ordered by entry name.
VerificationReport run_corpus(const std::vector<CorpusEntry>& entries, const RunOptions& options);

nlohmann::json to_json(const EntryReport& r, bool with_timing = true);
nlohmann::json summary_json(const VerificationReport& r);

}  // namespace arbor
