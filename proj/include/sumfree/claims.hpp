#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree {

// Shared knobs for claim runs. Identical config + inputs give byte-identical
// outputs; randomness appears only in seeded property sampling.
struct RunConfig {
    int jobs = 1;
    std::uint64_t flat_cap = 100'000'000;
    int dim_cap = 24;
    std::uint64_t node_budget = std::uint64_t(1) << 31;
    std::uint64_t seed = 0x5eed;
    std::string out_dir; // artifacts written here when nonempty
};

// Applies SUMFREE_JOBS / SUMFREE_FLAT_CAP / SUMFREE_DIM_CAP /
// SUMFREE_NODE_BUDGET / SUMFREE_SEED environment overrides.
RunConfig config_from_env();

struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

const std::vector<std::string>& claim_ids();
bool is_claim(const std::string& id);
ClaimResult run_claim(const std::string& id, const RunConfig& config);

// The numbered acceptance criteria; each bundles one or more claim ids.
struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claims;
};
const std::vector<Criterion>& acceptance_criteria();

void print_result(std::ostream& os, const ClaimResult& r);

} // namespace sumfree
