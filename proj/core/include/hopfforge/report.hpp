#pragma once

#include <json.hpp>

#include "hopfforge/catalog.hpp"
#include "hopfforge/cohomology.hpp"

namespace hopfforge {

// All emitted JSON uses ordered maps so reports are byte-identical across
// runs with the same inputs.
using Json = nlohmann::ordered_json;

Json field_to_json(const FieldCtx& F);
Json confluence_to_json(const GenSet& gens, const ConfluenceReport& report,
                        const std::vector<Rule>& rules);
Json cohomology_to_json(const std::string& g, const std::string& h,
                        const CohomologyReport& rep);

struct VerifyOptions {
    bool check_confluence = true;
    bool check_dimension = true;
    bool check_hopf = true;
    bool check_antipode = true;
    bool check_primitives = false;
    bool check_cohomology = false;
    static VerifyOptions all() {
        VerifyOptions o;
        o.check_primitives = true;
        o.check_cohomology = true;
        return o;
    }
};

struct VerifyOutcome {
    bool passed = false;
    Json report;
};

// Runs the requested checks on a catalog instantiation and assembles the
// machine-readable report. Every numeric claim in the report comes from an
// engine operation.
VerifyOutcome verify_case(catalog::Instantiation& inst, const VerifyOptions& options);

}  // namespace hopfforge
