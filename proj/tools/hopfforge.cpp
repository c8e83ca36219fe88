// Command-line front end: instantiate, verify, report, and batch-sweep the
// catalog of pointed Hopf algebra presentations.
//
// Exit codes: 0 all checks passed, 1 check failure, 2 usage or constraint
// error. JSON output is byte-identical across runs with the same inputs.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "hopfforge/presentation_io.hpp"
#include "hopfforge/report.hpp"

namespace hf = hopfforge;
namespace cat = hopfforge::catalog;

namespace {

uint64_t mem_budget() {
    if (const char* env = std::getenv("HOPFFORGE_MEM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (v > 0) return v;
    }
    return 4'000'000;
}

std::map<std::string, std::string> parse_sets(const std::vector<std::string>& sets) {
    std::map<std::string, std::string> out;
    for (auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw hf::Error("--set expects name=value, got: " + s);
        out[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return out;
}

hf::VerifyOptions options_for(const std::string& check) {
    hf::VerifyOptions o;
    if (check == "all") return hf::VerifyOptions::all();
    o.check_confluence = o.check_dimension = o.check_hopf = o.check_antipode = false;
    if (check == "confluence") o.check_confluence = true;
    else if (check == "dim") o.check_confluence = o.check_dimension = true;
    else if (check == "hopf") o.check_confluence = o.check_dimension = o.check_hopf = true;
    else if (check == "antipode")
        o.check_confluence = o.check_dimension = o.check_hopf = o.check_antipode = true;
    else if (check == "primitives") {
        o.check_confluence = o.check_dimension = o.check_hopf = true;
        o.check_primitives = true;
    } else if (check == "cohomology") {
        o.check_confluence = o.check_dimension = true;
        o.check_cohomology = true;
    } else if (check == "default") {
        o.check_confluence = o.check_dimension = o.check_hopf = o.check_antipode = true;
    } else {
        throw hf::Error("unknown --check value: " + check);
    }
    return o;
}

int cmd_list(const std::string& dim_filter, bool as_json) {
    hf::Json out = hf::Json::array();
    for (auto& e : cat::all_cases()) {
        if (!dim_filter.empty() && cat::to_string(e.dclass) != dim_filter) continue;
        hf::Json j;
        j["id"] = e.id;
        j["dim"] = cat::to_string(e.dclass);
        j["group"] = e.group;
        j["realization"] = e.realization;
        hf::Json params = hf::Json::array();
        for (auto& p : e.params) {
            hf::Json pj;
            pj["name"] = p.name;
            pj["domain"] = p.domain == cat::ParamSpec::Domain::Z2      ? "Z2"
                           : p.domain == cat::ParamSpec::Domain::Field ? "K"
                                                                       : "int";
            if (!p.note.empty()) pj["note"] = p.note;
            params.push_back(std::move(pj));
        }
        j["params"] = std::move(params);
        hf::Json cons = hf::Json::array();
        for (auto& c : e.constraints) {
            hf::Json cj;
            cj["constraint"] = c.expr;
            cj["anchor"] = c.anchor;
            cons.push_back(std::move(cj));
        }
        j["constraints"] = std::move(cons);
        out.push_back(std::move(j));
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& j : out) {
            std::cout << j["id"].get<std::string>() << "  [" << j["dim"].get<std::string>()
                      << "]  G = " << j["group"].get<std::string>() << "  "
                      << j["realization"].get<std::string>() << "\n";
            for (auto& c : j["constraints"])
                std::cout << "    constraint: " << c["constraint"].get<std::string>() << "\n";
        }
        std::cout << out.size() << " cases\n";
    }
    return 0;
}

int cmd_verify(const std::string& case_id, const std::string& file, cat::CasePrimes primes,
               const std::vector<std::string>& sets, bool permissive, bool as_json,
               const std::string& check) {
    hf::VerifyOptions opts = options_for(check);
    if (!file.empty()) {
        hf::HopfData data = hf::load_presentation_file(file);
        hf::HopfPresentation H = hf::HopfPresentation::build(std::move(data));
        hf::Json j;
        j["file"] = file;
        j["confluence"] = hf::confluence_to_json(H.gens(), H.confluence(), H.sys().rules());
        j["dimension"] = H.basis().finite ? static_cast<long long>(H.basis().count) : -1;
        bool ok = H.confluent() && H.basis().finite;
        if (ok && opts.check_hopf) {
            hf::BialgebraReport br = hf::check_bialgebra(H);
            j["bialgebra"] = br.pass ? "pass" : br.failure;
            ok = ok && br.pass;
            if (br.pass && opts.check_antipode) {
                hf::derive_antipode(H);
                j["antipode_order"] = hf::antipode_order(H);
            }
        }
        j["checks_passed"] = ok;
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    cat::Instantiation inst =
        cat::instantiate(case_id, primes, parse_sets(sets),
                         permissive ? cat::Strictness::Permissive : cat::Strictness::Strict);
    hf::VerifyOutcome out = hf::verify_case(inst, opts);
    if (as_json) {
        std::cout << out.report.dump(2) << "\n";
    } else {
        std::cout << out.report.dump(2) << "\n";
    }
    return out.passed ? 0 : 1;
}

int cmd_cohomology(const std::string& case_id, const std::string& file, long line_e, long taft_q,
                   cat::CasePrimes primes, const std::string& g_name, const std::string& h_name,
                   int n, bool graded) {
    hf::Coalgebra C;
    if (line_e > 0) {
        auto F = hf::FieldCtx::make(static_cast<int>(primes.p), {});
        C = hf::Coalgebra::divided_power_line(F, line_e);
    } else if (taft_q > 0) {
        auto F = hf::FieldCtx::make(static_cast<int>(primes.p), {taft_q});
        hf::HopfData data;
        data.field = F;
        data.gens = hf::GenSet{{"x", 1}, {"g", 0}};
        hf::NcPoly x = hf::NcPoly::generator(F.get(), 0), g = hf::NcPoly::generator(F.get(), 1);
        data.relations = {
            hf::NcPoly::from_word(F.get(), hf::word_of(1, static_cast<int>(taft_q)), F->one()) -
                hf::NcPoly::unit(F.get()),
            g * x - (x * g).scaled(F->root(taft_q)),
            hf::NcPoly::from_word(F.get(), hf::word_of(0, static_cast<int>(taft_q)), F->one())};
        data.grouplike_gens = {1};
        data.grouplike_orders[1] = taft_q;
        data.coproduct[1] = hf::TensorPoly::tensor(g, g);
        data.coproduct[0] =
            hf::TensorPoly::tensor(x, hf::NcPoly::unit(F.get())) + hf::TensorPoly::tensor(g, x);
        data.counit[1] = F->one();
        data.counit[0] = F->zero();
        C = hf::Coalgebra::from_hopf(hf::HopfPresentation::build(std::move(data)));
    } else if (!file.empty()) {
        hf::HopfData data = hf::load_presentation_file(file);
        C = hf::Coalgebra::from_hopf(hf::HopfPresentation::build(std::move(data)));
    } else {
        cat::Instantiation inst = cat::instantiate(case_id, primes, {}, cat::Strictness::Strict);
        C = hf::Coalgebra::from_hopf(inst.H);
    }
    auto find_gl = [&](const std::string& name) -> uint32_t {
        if (name == "1") {
            for (uint32_t v : C.grouplikes)
                if (C.names[v] == "1") return v;
        }
        return C.grouplike_named(name);
    };
    hf::BicomoduleSpec spec{find_gl(g_name), find_gl(h_name)};
    hf::CohomologyReport rep = graded ? hf::graded_cohomology_dims(C, spec, n, mem_budget())
                                      : hf::cohomology_dims(C, spec, n, mem_budget());
    std::cout << hf::cohomology_to_json(g_name, h_name, rep).dump(2) << "\n";
    return 0;
}

struct SweepItem {
    std::string case_id;
    hf::Json result;
    bool passed = true;
};

int cmd_sweep(const std::string& dim_filter, cat::CasePrimes primes, bool as_json, int jobs) {
    std::vector<const cat::CaseEntry*> selected;
    for (auto& e : cat::all_cases()) {
        if (!dim_filter.empty() && cat::to_string(e.dclass) != dim_filter) continue;
        cat::IntParams ints;
        bool ok = true;
        for (auto& p : e.params)
            if (p.domain == cat::ParamSpec::Domain::Int) {
                auto [lo, hi] = e.int_range(p.name, primes);
                bool found = false;
                for (long v = lo; v <= hi && !found; ++v) {
                    ints[p.name] = v;
                    if (!e.admissible(primes, ints)) found = true;
                }
                ok = ok && found;
            }
        if (!ok || e.admissible(primes, ints)) continue;  // skip inadmissible cases
        selected.push_back(&e);
    }

    std::vector<SweepItem> items(selected.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= selected.size()) return;
            const cat::CaseEntry& e = *selected[i];
            SweepItem item;
            item.case_id = e.id;
            hf::Json grid = hf::Json::array();
            // Default integer parameters: first admissible value.
            cat::IntParams ints;
            for (auto& p : e.params)
                if (p.domain == cat::ParamSpec::Domain::Int) {
                    auto [lo, hi] = e.int_range(p.name, primes);
                    for (long v = lo; v <= hi; ++v) {
                        ints[p.name] = v;
                        if (!e.admissible(primes, ints)) break;
                    }
                }
            std::vector<std::string> fnames;
            for (auto& p : e.params)
                if (p.domain != cat::ParamSpec::Domain::Int) fnames.push_back(p.name);
            size_t npoints = 1u << fnames.size();
            for (size_t mask = 0; mask < npoints; ++mask) {
                std::map<std::string, std::string> raw;
                for (size_t b = 0; b < fnames.size(); ++b)
                    raw[fnames[b]] = (mask >> b) & 1 ? "1" : "0";
                hf::Json pj;
                for (auto& [k, v] : raw) pj[k] = v;
                hf::Json entry;
                entry["params"] = std::move(pj);
                try {
                    cat::Instantiation inst = cat::instantiate_typed(
                        e, primes, ints, raw, cat::Strictness::Permissive);
                    if (!inst.constraints_satisfied()) {
                        entry["skipped"] = "constraint violated";
                    } else {
                        hf::VerifyOptions opts;
                        hf::VerifyOutcome out = hf::verify_case(inst, opts);
                        entry["passed"] = out.passed;
                        entry["dim"] = out.report["dimension"]["computed"];
                        if (!out.passed) {
                            entry["detail"] = out.report;
                            item.passed = false;
                        }
                    }
                } catch (const hf::Error& err) {
                    entry["error"] = err.what();
                    item.passed = false;
                }
                grid.push_back(std::move(entry));
            }
            item.result = std::move(grid);
            items[i] = std::move(item);
        }
    };
    size_t nthreads = jobs > 0 ? static_cast<size_t>(jobs)
                               : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min(nthreads, selected.size() ? selected.size() : size_t{1});
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_ok = true;
    hf::Json out;
    out["dim"] = dim_filter.empty() ? "all" : dim_filter;
    hf::Json pr;
    pr["p"] = primes.p;
    pr["q"] = primes.q;
    if (primes.r) pr["r"] = primes.r;
    out["primes"] = std::move(pr);
    hf::Json cases = hf::Json::array();
    for (auto& item : items) {
        hf::Json j;
        j["case"] = item.case_id;
        j["passed"] = item.passed;
        j["grid"] = item.result;
        all_ok = all_ok && item.passed;
        cases.push_back(std::move(j));
    }
    out["cases"] = std::move(cases);
    out["all_passed"] = all_ok;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& item : items)
            std::cout << (item.passed ? "[ OK ] " : "[FAIL] ") << item.case_id << "\n";
        std::cout << (all_ok ? "sweep passed" : "sweep FAILED") << " (" << items.size()
                  << " cases)\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfforge: verification engine for small pointed Hopf algebra presentations"};
    app.require_subcommand(1);

    std::string dim_filter, case_id, file, check = "default";
    std::string g_name = "1", h_name = "1";
    std::vector<std::string> sets;
    cat::CasePrimes primes;
    bool as_json = false, permissive = false, graded = false;
    long line_e = 0, taft_q = 0;
    int degree = 2, jobs = 0;

    auto add_primes = [&](CLI::App* cmd) {
        cmd->add_option("--p", primes.p, "characteristic p");
        cmd->add_option("--q", primes.q, "prime q");
        cmd->add_option("--r", primes.r, "prime r (pqr cases)");
    };

    CLI::App* list = app.add_subcommand("list", "list catalog cases and their constraints");
    list->add_option("--dim", dim_filter, "filter: p2q, pq2, pqr, pq");
    list->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "verify one catalog case or presentation");
    verify->add_option("--case", case_id, "catalog case id");
    verify->add_option("--file", file, "presentation file (JSON)");
    add_primes(verify);
    verify->add_option("--set", sets, "parameter assignment name=value (repeatable)");
    verify->add_flag("--permissive", permissive, "instantiate despite constraint violations");
    auto* strict_flag = verify->add_flag("--strict", "reject constraint violations (default)");
    (void)strict_flag;
    verify->add_flag("--json", as_json, "machine-readable output");
    verify->add_option("--check", check,
                       "confluence | dim | hopf | antipode | primitives | cohomology | all");

    CLI::App* coh = app.add_subcommand("cohomology", "coalgebra cohomology dimensions");
    coh->set_help_flag("--help", "print help");
    coh->add_option("--case", case_id, "catalog case id");
    coh->add_option("--file", file, "presentation file (JSON)");
    coh->add_option("--line", line_e, "connected coalgebra k[x]/(x^e)");
    coh->add_option("--taft", taft_q, "Taft algebra of the given order");
    add_primes(coh);
    coh->add_option("--g", g_name, "right group-like (default 1)");
    coh->add_option("--h", h_name, "left group-like (default 1)");
    coh->add_option("--n", degree, "cohomological degree (default 2)");
    coh->add_flag("--graded", graded, "report the Adams-graded refinement");

    CLI::App* sweep = app.add_subcommand("sweep", "verify all cases over the {0,1} grids");
    sweep->add_option("--dim", dim_filter, "filter: p2q, pq2, pqr, pq");
    add_primes(sweep);
    sweep->add_flag("--json", as_json, "machine-readable output");
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        auto start = std::chrono::steady_clock::now();
        int rc = 1;
        if (list->parsed()) rc = cmd_list(dim_filter, as_json);
        if (verify->parsed()) {
            if (case_id.empty() && file.empty())
                throw hf::Error("verify needs --case or --file");
            rc = cmd_verify(case_id, file, primes, sets, permissive, as_json, check);
        }
        if (coh->parsed())
            rc = cmd_cohomology(case_id, file, line_e, taft_q, primes, g_name, h_name, degree,
                                graded);
        if (sweep->parsed()) rc = cmd_sweep(dim_filter, primes, as_json, jobs);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cerr << "wall-time: " << ms << " ms\n";
        return rc;
    } catch (const hf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::string what = e.what();
        if (what.find("constraint violated") != std::string::npos ||
            what.find("not admissible") != std::string::npos ||
            what.find("unknown") != std::string::npos)
            return 2;
        return 2;
    }
}
