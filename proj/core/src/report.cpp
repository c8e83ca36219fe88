#include "hopfforge/report.hpp"

namespace hopfforge {

Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["k"] = F.k();
    j["modulus"] = F.modulus();
    j["orders"] = F.registered_orders();
    return j;
}

Json confluence_to_json(const GenSet& gens, const ConfluenceReport& report,
                        const std::vector<Rule>& rules) {
    Json entries = Json::array();
    size_t resolvable = 0;
    for (auto& e : report.entries) {
        Json je;
        je["kind"] = e.amb.kind == Ambiguity::Kind::Overlap ? "overlap" : "inclusion";
        je["word"] = word_to_string(gens, e.amb.word);
        je["rules"] = Json::array({word_to_string(gens, rules[static_cast<size_t>(e.amb.rule1)].lhs),
                                   word_to_string(gens, rules[static_cast<size_t>(e.amb.rule2)].lhs)});
        je["resolvable"] = e.resolvable;
        if (!e.resolvable) je["obstruction"] = e.obstruction.to_string(gens);
        if (e.resolvable) ++resolvable;
        entries.push_back(std::move(je));
    }
    Json j;
    j["ambiguities"] = report.entries.size();
    j["resolvable"] = resolvable;
    j["all_resolvable"] = report.all_resolvable();
    j["entries"] = std::move(entries);
    return j;
}

Json cohomology_to_json(const std::string& g, const std::string& h, const CohomologyReport& rep) {
    Json j;
    j["g"] = g;
    j["h"] = h;
    j["n"] = rep.n;
    j["dimZ"] = rep.dim_Z;
    j["dimB"] = rep.dim_B;
    j["dimH"] = rep.dim_H;
    if (!rep.adams.empty()) {
        Json a;
        for (auto& [deg, d] : rep.adams) a[std::to_string(deg)] = d;
        j["adams"] = std::move(a);
    }
    return j;
}

VerifyOutcome verify_case(catalog::Instantiation& inst, const VerifyOptions& options) {
    VerifyOutcome out;
    Json& j = out.report;
    bool ok = true;

    j["case"] = inst.entry->id;
    Json primes;
    primes["p"] = inst.primes.p;
    primes["q"] = inst.primes.q;
    if (inst.primes.r) primes["r"] = inst.primes.r;
    j["primes"] = std::move(primes);
    Json params;
    for (auto& [k, v] : inst.int_params) params[k] = v;
    for (auto& [k, v] : inst.field_params) params[k] = inst.field->to_string(v);
    j["params"] = std::move(params);
    j["field"] = field_to_json(*inst.field);
    Json cons = Json::array();
    for (auto& [expr, sat] : inst.constraint_status) {
        Json c;
        c["constraint"] = expr;
        c["satisfied"] = sat;
        cons.push_back(std::move(c));
    }
    j["constraints"] = std::move(cons);

    const HopfPresentation& H = inst.H;
    if (options.check_confluence) {
        j["confluence"] = confluence_to_json(H.gens(), H.confluence(), H.sys().rules());
        ok = ok && H.confluent();
    }
    if (options.check_dimension) {
        long long expected = inst.entry->expected_dim(inst.primes);
        Json d;
        d["computed"] = H.basis().finite ? static_cast<long long>(H.basis().count) : -1;
        d["expected"] = expected;
        d["finite"] = H.basis().finite;
        bool match = H.basis().finite &&
                     static_cast<long long>(H.basis().count) == expected;
        d["match"] = match;
        j["dimension"] = std::move(d);
        ok = ok && match;
    }
    if (options.check_hopf && H.valid()) {
        BialgebraReport br = check_bialgebra(H);
        Json hj;
        hj["bialgebra"] = br.pass ? "pass" : "fail";
        if (!br.pass) hj["bialgebra_failure"] = br.failure;
        ok = ok && br.pass;
        if (br.pass && options.check_antipode) {
            try {
                derive_antipode(inst.H);
                hj["antipode"] = "pass";
                hj["antipode_order"] = antipode_order(inst.H);
            } catch (const Error& err) {
                hj["antipode"] = "fail";
                hj["antipode_failure"] = err.what();
                ok = false;
            }
        }
        j["hopf"] = std::move(hj);
    } else if (options.check_hopf) {
        j["hopf"] = "skipped (no finite confluent basis)";
        ok = false;
    }
    if (options.check_primitives && H.valid()) {
        Json pj;
        auto G = group_likes(H);
        pj["grouplikes"] = G.size();
        Json spaces = Json::array();
        for (auto& h : G) {
            SkewPrimitiveSpace sp = skew_primitives(H, Word{}, h);
            Json s;
            s["g"] = "1";
            s["h"] = word_to_string(H.gens(), h);
            s["dim"] = sp.dim();
            spaces.push_back(std::move(s));
        }
        pj["skew_primitives_from_1"] = std::move(spaces);
        FiltrationReport fr = coradical_filtration(H, false);
        pj["coradical_dims"] = fr.dims;
        pj["exhausts"] = fr.exhausts;
        j["primitives"] = std::move(pj);
        ok = ok && fr.exhausts;
    }
    if (options.check_cohomology && H.valid()) {
        Coalgebra C = Coalgebra::from_hopf(H);
        Json cj = Json::array();
        uint32_t one = C.grouplike_named("1");
        for (uint32_t g : C.grouplikes) {
            if (static_cast<uint64_t>(C.dim()) * C.dim() * C.dim() > 4'000'000) break;
            CohomologyReport rep = cohomology_dims(C, {g, one}, 2);
            cj.push_back(cohomology_to_json(C.names[g], "1", rep));
        }
        j["cohomology"] = std::move(cj);
    }
    j["checks_passed"] = ok;
    out.passed = ok;
    return out;
}

}  // namespace hopfforge
