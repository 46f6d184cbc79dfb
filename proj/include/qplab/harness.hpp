#ifndef QPLAB_HARNESS_HPP
#define QPLAB_HARNESS_HPP

#include "qplab/closed_forms.hpp"
#include "qplab/enumerate.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qplab {
namespace harness {

enum class Mode { Exact, Truncated, RationalPoints };

std::string mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);

// One verification task: an identity ID from the registry, its integer
// parameters, and the comparison mode. Truncated mode carries the cutoff;
// rational-points mode carries the point count and RNG seed.
struct IdentityInstance {
    std::string id;
    std::map<std::string, int> params;
    Mode mode = Mode::Exact;
    int cutoff = 0;
    int points = 20;
    std::uint64_t seed = 0xB6;

    std::string key() const; // deterministic ordering / dedup key
};

enum class Status { Pass, Fail, Error };

std::string status_name(Status s);

struct Discrepancy {
    std::string monomial;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    IdentityInstance instance;
    Status status = Status::Error;
    std::string lhs_summary;
    std::string rhs_summary;
    std::optional<Discrepancy> first_discrepancy;
    std::string error_message;
    long long elapsed_ms = 0;
};

struct IdentityInfo {
    std::string id;
    std::string anchor;                       // theorem/equation tag
    std::vector<std::string> params;          // required parameter names
    std::vector<std::string> optional_params; // accepted but not required
    std::vector<Mode> modes;                  // legal modes, first one is the default
    int default_cutoff = 0;                   // used by Truncated mode when unset
};

// Stable listing of every registered identity, in catalog order.
const std::vector<IdentityInfo>& list_identities();
const IdentityInfo* find_identity(const std::string& id);

// Runs one instance. Unknown IDs, missing parameters and illegal modes
// produce an Error report rather than throwing.
VerificationReport verify(const IdentityInstance& inst);

struct SuiteSummary {
    int pass = 0;
    int fail = 0;
    int error = 0;
};

// Suite names: "smoke", "default", "full".
std::vector<IdentityInstance> suite_instances(const std::string& name);

// Executes a suite, optionally across several worker threads. Reports come
// back sorted by instance key, so parallel and serial runs agree.
std::pair<std::vector<VerificationReport>, SuiteSummary>
run_suite(const std::string& name, int jobs = 1);

std::pair<std::vector<VerificationReport>, SuiteSummary>
run_instances(const std::vector<IdentityInstance>& instances, int jobs = 1);

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs, const SuiteSummary& s);

} // namespace harness
} // namespace qplab

#endif
