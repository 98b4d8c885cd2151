#pragma once
// Pipeline orchestration: ingest -> classify -> topics -> network ->
// blocks -> report, with content-hash stage caching and a run manifest.

#include <cstdint>
#include <string>
#include <vector>

#include "claimnet/blockmodel.hpp"
#include "claimnet/corpus.hpp"
#include "claimnet/lexicon.hpp"

namespace claimnet {

inline constexpr const char* kVersion = "0.1.0";

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class StageError : public std::runtime_error {
public:
    StageError(const std::string& stage, const std::string& what)
        : std::runtime_error("stage " + stage + ": " + what), stage(stage) {}
    std::string stage;
};

struct RunConfig {
    // input paths
    std::string bibliographic;
    std::string hyperedges;
    std::string lexicon;
    std::string topics;
    std::string journals;

    PeriodScheme scheme = PeriodScheme::defaults();
    CorrectionFactors factors;

    int k_out = 3;
    long min_received = 10;

    long restarts = 10000;
    DlVariant variant = DlVariant::DegreeCorrected;
    std::uint64_t seed = 42;
    double threshold = 0.01;
    bool binarize = false;

    std::string anchor_a;
    std::string anchor_b;
    int min_articles = 20;

    std::string out_dir = "out";
    int workers = 0; // 0 = all cores
    bool raw = false; // emit fig2 from raw counts instead of corrected

    static RunConfig defaults();
    // Relative paths in the file resolve against the file's directory.
    static RunConfig load(const std::string& path);

    // Referenced files must exist, numeric parameters must be in range.
    void validate() const;
};

const std::vector<std::string>& all_stage_names();

// Runs the requested stages in pipeline order; empty selection means all.
// Throws ValidationError before touching any output, StageError on stage
// failure (after removing that stage's partial outputs).
void run_stages(const RunConfig& config, const std::vector<std::string>& stages);

struct ParseCheckResult {
    std::size_t records = 0;
    std::vector<LineError> errors;
};

ParseCheckResult parse_check(const std::string& hyperedge_path);

// 64-bit FNV-1a, used for cache stamps and the manifest.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_file_hex(const std::string& path);

Partition read_partition_csv(const std::string& path);

} // namespace claimnet
