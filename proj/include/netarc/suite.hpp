#pragma once

#include <string>
#include <vector>

#include "netarc/search.hpp"

namespace netarc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The full battery behind the `suite` subcommand: degree tables, the
// construction sweep, orbit counts, the inequivalent hyperoval pair, the
// five existence equivalences, the empty-cell scan, reference-search
// agreement and the GF(13) boundary cells. Several minutes of compute.
std::vector<CriterionResult> run_acceptance_battery();

bool all_pass(const std::vector<CriterionResult>& rows);

}  // namespace netarc
