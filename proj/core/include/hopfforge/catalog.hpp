#pragma once

#include <functional>

#include "hopfforge/hopf.hpp"

namespace hopfforge::catalog {

enum class DimClass { P2Q, PQ2, PQR, PQ };
std::string to_string(DimClass d);

struct CasePrimes {
    long p = 0, q = 0, r = 0;
};

using FieldParams = std::map<std::string, Fq>;
using IntParams = std::map<std::string, long>;

struct ParamSpec {
    std::string name;
    enum class Domain { Z2, Field, Int } domain = Domain::Z2;
    std::string note;  // e.g. "0 < nu < q"
};

struct Constraint {
    std::string expr;    // machine-checkable predicate, human-readable
    std::string anchor;  // provenance of the condition
    std::function<bool(const CasePrimes&, const FieldCtx&, const FieldParams&, const IntParams&)>
        pred;
};

struct CaseEntry {
    std::string id;
    DimClass dclass = DimClass::P2Q;
    std::string group;  // e.g. "C_pq"
    std::string realization;
    std::vector<ParamSpec> params;
    std::vector<Constraint> constraints;

    // Returns the reason when the primes (and integer parameters) do not fit.
    std::function<std::optional<std::string>(const CasePrimes&, const IntParams&)> admissible;
    std::function<long long(const CasePrimes&)> expected_dim;
    std::function<std::set<long>(const CasePrimes&)> root_orders;
    // Paper-derived defaults for parameters left unset (normal-form choices).
    std::function<void(const CasePrimes&, const FieldCtx&, FieldParams&, const IntParams&,
                       const std::set<std::string>& explicitly_set)>
        force_defaults;
    std::function<HopfData(const CasePrimes&, const IntParams&, const FieldParams&,
                           std::shared_ptr<const FieldCtx>)>
        build;

    std::pair<long, long> int_range(const std::string& name, const CasePrimes& primes) const;
};

const std::vector<CaseEntry>& all_cases();
const CaseEntry& find_case(const std::string& id);

enum class Strictness { Strict, Permissive };

struct Instantiation {
    const CaseEntry* entry = nullptr;
    CasePrimes primes;
    IntParams int_params;
    FieldParams field_params;
    std::shared_ptr<const FieldCtx> field;
    HopfPresentation H;
    std::vector<std::pair<std::string, bool>> constraint_status;  // (expr, satisfied)
    std::vector<std::string> warnings;

    bool constraints_satisfied() const {
        for (auto& [e, ok] : constraint_status)
            if (!ok) return false;
        return true;
    }
};

// Builds the fully substituted presentation. Raw parameter values are parsed
// in the instantiation field (integers, "w^j", or registered root names
// "xi"/"zeta"/"theta"). Strict mode rejects constraint-violating parameters;
// permissive mode emits them for negative testing.
Instantiation instantiate(const std::string& id, CasePrimes primes,
                          const std::map<std::string, std::string>& raw_params,
                          Strictness strictness);
// As above with already-typed parameters.
Instantiation instantiate_typed(const CaseEntry& entry, CasePrimes primes, IntParams ints,
                                std::map<std::string, std::string> raw_field_params,
                                Strictness strictness);

long long expected_dimension(const std::string& id, CasePrimes primes);
std::vector<std::pair<std::string, std::string>> constraint_report(const std::string& id,
                                                                   CasePrimes primes);

struct SmallestChoice {
    CasePrimes primes;
    IntParams int_params;
};
SmallestChoice smallest_admissible(const std::string& id);

// Scalar names available to parameter expressions for a given instantiation
// field (whichever roots the case registered).
std::map<std::string, Fq> scalar_bindings(const FieldCtx& F, const CasePrimes& primes);

// --- Tables 1-3: Yetter-Drinfeld realization enumeration -------------------

std::vector<std::string> table_rows();  // A, B1, B2, C, D, AA, AB1, AB2, AC, AD, BA, BB
long yd_expected_count(const std::string& row, const CasePrimes& primes);
std::vector<YDRealization> enumerate_yd(const std::string& row, const CasePrimes& primes,
                                        std::shared_ptr<const FieldCtx> F);
// Field with the roots the row's realizations need.
std::shared_ptr<const FieldCtx> yd_field(const std::string& row, const CasePrimes& primes);

}  // namespace hopfforge::catalog
