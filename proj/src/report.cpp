#include "minorb/report.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace minorb {

namespace {

const char* status_str(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Reported: return "reported";
    }
    return "?";
}

nlohmann::ordered_json claim_json(const ClaimRecord& c) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["family"] = c.family;
    if (c.param_n) j["params"] = nlohmann::ordered_json{{"n", *c.param_n}};
    else j["params"] = nullptr;
    j["status"] = status_str(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["provenance"] = c.provenance;
    j["notes"] = c.notes;
    return j;
}

nlohmann::ordered_json body_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["version"] = r.version;
    j["seed"] = r.seed;
    j["claims"] = nlohmann::ordered_json::array();
    for (const auto& c : r.claims) j["claims"].push_back(claim_json(c));
    j["summary"] = nlohmann::ordered_json{{"pass", r.count(ClaimStatus::Pass)},
                                          {"fail", r.count(ClaimStatus::Fail)},
                                          {"reported", r.count(ClaimStatus::Reported)}};
    return j;
}

} // namespace

ClaimRecord make_claim(std::string id, std::string family, std::optional<int> n, bool pass,
                       std::string expected, std::string actual, std::string provenance,
                       std::string notes) {
    ClaimRecord c;
    c.id = std::move(id);
    c.family = std::move(family);
    c.param_n = n;
    c.status = pass ? ClaimStatus::Pass : ClaimStatus::Fail;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.provenance = std::move(provenance);
    c.notes = std::move(notes);
    return c;
}

std::size_t VerificationReport::count(ClaimStatus s) const {
    std::size_t k = 0;
    for (const auto& c : claims)
        if (c.status == s) ++k;
    return k;
}

int VerificationReport::exit_code() const { return count(ClaimStatus::Fail) == 0 ? 0 : 1; }

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j = body_json(*this);
    j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [name, ms] : timings_ms) j["timings"][name] = ms;
    return j.dump(2);
}

std::string VerificationReport::claims_json() const { return body_json(*this).dump(2); }

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "minorb verify " << version << " (seed " << seed << ")\n";
    for (const auto& c : claims) {
        os << "  [" << status_str(c.status) << "] " << c.id;
        if (c.param_n) os << " (n=" << *c.param_n << ")";
        os << ": expected " << c.expected << ", actual " << c.actual;
        if (!c.notes.empty()) os << "  -- " << c.notes;
        os << "\n";
    }
    os << "summary: " << count(ClaimStatus::Pass) << " pass, " << count(ClaimStatus::Fail)
       << " fail, " << count(ClaimStatus::Reported) << " reported\n";
    for (const auto& [name, ms] : timings_ms) os << "  " << name << ": " << ms << " ms\n";
    return os.str();
}

int emit_report(const VerificationReport& rep, const std::string& format,
                const std::string& path) {
    const std::string out = format == "text" ? rep.to_text() : rep.to_json();
    if (path.empty()) {
        std::cout << out << std::endl;
    } else {
        std::ofstream f(path);
        if (!f) {
            std::cerr << "cannot write report to " << path << "\n";
            return 2;
        }
        f << out << std::endl;
    }
    return rep.exit_code();
}

} // namespace minorb
