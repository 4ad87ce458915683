#pragma once

#include "plabic/generate.hpp"
#include "plabic/io.hpp"
#include "plabic/xform.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plabic::checks {

using gen::Rng;

struct Tally {
    std::map<std::string, long> checked, failed, skipped;
    std::vector<std::string> examples;  // first few failures
    void record(const std::string& name, bool ok, const std::string& where);
    void skip(const std::string& name) { ++skipped[name]; }
    long failures() const;
    bool ok() const { return failures() == 0; }
    void merge(const Tally& o);
};

io::Json tally_json(const std::string& suite, const Tally& t);

// Validity, Euler face count, and the parity laws of simple cycles (wind odd, int even).
void geometry_checks(const Network& net, Tally& t, const std::string& where);
// detM equals the conservative flow total; detM = 1 without cycles.
void flow_checks(const Network& net, Tally& t, const std::string& where);
// Flows from each boundary source edge: shared parity equal to the source count between the ends,
// and the signed flow sum equal to the boundary matrix row.
void source_row_checks(const Network& net, Tally& t, const std::string& where);
// Flow formula against the linear system, zero components at sources, source rows gauge independent.
void vector_checks(const Network& net, Rng& rng, Tally& t, const std::string& where);
// Truncated walk sums within their certified bound; records a skip when no bound is available.
void truncated_checks(const Network& net, int depth, Tally& t, const std::string& where);

const std::vector<std::string>& transform_kinds();
// One random application of a transform kind to net. Empty when no instance applies;
// precondition failures propagate as Error.
std::vector<xform::Report> random_transform(const std::string& kind, const Network& net, Rng& rng);
// Applies random_transform and records prediction and invariance results under the kind's name.
// Returns false when the kind could not be applied.
bool transform_checks(const std::string& kind, const Network& net, Rng& rng, Tally& t, const std::string& where);

void appendix_checks(const Network& net, Rng& rng, long routes, Tally& t, const std::string& where);

const std::vector<std::string>& suite_names();

struct SuiteOptions {
    long trials = 50;
    std::uint64_t seed = 1;
    std::optional<Network> net;  // random networks when empty
};
Tally run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace plabic::checks
