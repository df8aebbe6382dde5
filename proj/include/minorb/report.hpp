#pragma once

// Machine-readable claim records and the report envelope with its exit-code
// contract: 0 iff no claim failed. `reported` is reserved for informational
// comparisons (prescription feasibility, convention-dependent lists, realized
// signs) and never affects the exit code.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minorb {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ClaimStatus { Pass, Fail, Reported };

struct ClaimRecord {
    std::string id;
    std::string family; // "Dn" | "E6" | "E7"
    std::optional<int> param_n;
    ClaimStatus status = ClaimStatus::Pass;
    std::string expected;
    std::string actual;
    std::string provenance; // "PAPER" | "DERIVED" | "TRIVIAL"
    std::string notes;
};

ClaimRecord make_claim(std::string id, std::string family, std::optional<int> n, bool pass,
                       std::string expected, std::string actual, std::string provenance,
                       std::string notes = "");

struct VerificationReport {
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    std::vector<ClaimRecord> claims;
    std::vector<std::pair<std::string, double>> timings_ms; // per scenario

    std::size_t count(ClaimStatus s) const;
    int exit_code() const; // 0 iff no fail

    std::string to_json() const;
    std::string to_text() const;
    // claims and summary only, no wall-clock fields: byte-identical across
    // runs with the same seed
    std::string claims_json() const;
};

// writes the report (or stdout when path is empty); returns exit_code()
int emit_report(const VerificationReport& rep, const std::string& format,
                const std::string& path);

} // namespace minorb
