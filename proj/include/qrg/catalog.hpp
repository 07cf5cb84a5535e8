#pragma once

/// Table regeneration, the aggregated verification suite, JSON/markdown
/// output and the optional on-disk element-set cache.

#include <optional>
#include <string>
#include <vector>

#include "qrg/conj.hpp"
#include "qrg/descriptor.hpp"
#include "qrg/soi.hpp"

namespace qrg {

struct Config {
    int max_m = 12;
    int closure_cap = 40000;
    std::vector<Rat> soi_samples{Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2, 3)};
    std::string output = "json"; // json | markdown
    std::string cache_dir;       // from QRG_CACHE_DIR when empty

    static Config from_env();
    /// key=value lines; '#' comments. Keys: max_m, closure_cap, soi_samples
    /// (comma separated rationals), output, cache_dir.
    void apply_file(const std::string& path);
    void apply_kv(const std::string& key, const std::string& value);
};

struct CatalogEntry {
    std::string descriptor;
    int table = 0;
    long order = 0;              // 0 for parametric template rows
    std::string order_str;       // formula for template rows
    int reflection_count = -1;   // -1 when not applicable
    std::string quotient_tag;
    std::string conditions;
    std::vector<std::string> isomorphism_notes;
    std::vector<std::string> systems; // Table 3/4 rows
    bool standard = true;

    std::string to_json() const;
};

std::vector<CatalogEntry> emit_table(int which, const Config& cfg);
std::string render_markdown(const std::vector<CatalogEntry>& entries);

struct CheckResult {
    std::string name;
    std::string status; // "pass" | "fail" | "skipped(reason)"
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool pass = true;

    std::string to_json() const;
};

SuiteReport verify_suite(const Config& cfg);

/// On-disk element-set cache keyed by descriptor + library version; absence
/// only changes runtime.
extern const char* const kCacheVersion;
void cache_store(const std::string& dir, const std::string& key, const MatGroupSet& g);
std::optional<MatGroupSet> cache_load(const std::string& dir, const std::string& key);

/// The JSON record emitted by `qrg build`.
std::string group_record_json(const BuiltGroup& g);

} // namespace qrg
