// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, no tolerances. Exit code 0 iff every criterion passes.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "hopfforge/catalog.hpp"
#include "hopfforge/cohomology.hpp"
#include "hopfforge/report.hpp"

using namespace hopfforge;
namespace cat = hopfforge::catalog;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool pass = true;
    std::ostringstream notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << "\n      FAIL: " << what;
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)"
                  << notes.str() << "\n";
        if (!pass) ++failures;
    }
};

std::string pq_str(const cat::CasePrimes& c) {
    std::string s = "(p=" + std::to_string(c.p) + ", q=" + std::to_string(c.q);
    if (c.r) s += ", r=" + std::to_string(c.r);
    return s + ")";
}

// Every {0,1} assignment of the case's field parameters.
std::vector<std::map<std::string, std::string>> grid_points(const cat::CaseEntry& e) {
    std::vector<std::string> names;
    for (auto& p : e.params)
        if (p.domain != cat::ParamSpec::Domain::Int) names.push_back(p.name);
    std::vector<std::map<std::string, std::string>> out;
    for (size_t mask = 0; mask < (size_t{1} << names.size()); ++mask) {
        std::map<std::string, std::string> pt;
        for (size_t b = 0; b < names.size(); ++b) pt[names[b]] = (mask >> b) & 1 ? "1" : "0";
        out.push_back(std::move(pt));
    }
    return out;
}

void criterion_1_jacobson() {
    Criterion c("1. Jacobson expansion (a+b)^p = a^p + b^p + sum s_i, p in {2,3,5}");
    for (int p : {2, 3, 5}) {
        auto F = FieldCtx::make(p, {});
        NcPoly a = NcPoly::generator(F.get(), 0), b = NcPoly::generator(F.get(), 1);
        auto s = jacobson_s(F.get(), p);
        NcPoly rhs = a.pow(p) + b.pow(p);
        for (auto& si : s) rhs += si;
        c.require((a + b).pow(p) == rhs, "p = " + std::to_string(p));
    }
}

void criterion_2_adjoint_group() {
    Criterion c("2. (g)(ad_R x)^(p-1) = g - g^p and x^p - x skew-primitive, (p,n) in "
                "{(2,3),(3,2),(3,4)}");
    for (auto [p, n] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}, {3, 4}}) {
        auto F = FieldCtx::make(p, {});
        IdentityCheck a = verify_identity(LemmaId::AdjointPowerGroup, p, {{"n", n}}, {}, F);
        c.require(a.pass, "adjoint power at (p,n)=(" + std::to_string(p) + "," +
                              std::to_string(n) + "): residue " + a.residue);
        IdentityCheck b = verify_identity(LemmaId::SkewPrimitivePthPower, p, {{"n", n}}, {}, F);
        c.require(b.pass, "skew-primitive p-th power at (p,n)=(" + std::to_string(p) + "," +
                              std::to_string(n) + "): residue " + b.residue);
    }
}

void criterion_3_adjoint_three() {
    Criterion c("3. three-generator adjoint identities, all {0,1} parameters, p in {2,3}");
    for (auto [p, m] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}}) {
        auto F = FieldCtx::make(p, {});
        for (int l1 = 0; l1 <= 1; ++l1)
            for (int l2 = 0; l2 <= 1; ++l2)
                for (int l3 = 0; l3 <= 1; ++l3) {
                    std::map<std::string, Fq> sc = {{"lambda1", F->from_int(l1)},
                                                    {"lambda2", F->from_int(l2)},
                                                    {"lambda3", F->from_int(l3)}};
                    IdentityCheck a = verify_identity(LemmaId::AdjointPowerRightThree, p,
                                                      {{"m", m}}, sc, F);
                    c.require(a.pass, "(x)(ad_R y)^p at p=" + std::to_string(p) + " lambda=" +
                                          std::to_string(l1) + std::to_string(l2) +
                                          std::to_string(l3) + ": residue " + a.residue);
                }
        for (int l1 = 0; l1 <= 1; ++l1)
            for (int l3 = 0; l3 <= 1; ++l3)
                for (long mu = 0; mu <= 1; ++mu) {
                    std::map<std::string, Fq> sc = {{"lambda1", F->from_int(l1)},
                                                    {"lambda3", F->from_int(l3)}};
                    IdentityCheck a = verify_identity(LemmaId::AdjointPowerLeftThree, p,
                                                      {{"m", m}, {"mu", mu}}, sc, F);
                    c.require(a.pass, "(ad_L x)^p(y) at p=" + std::to_string(p) +
                                          " mu=" + std::to_string(mu) + ": residue " + a.residue);
                }
    }
}

void criterion_4_omega_cocycle_identity() {
    Criterion c("4. omega-tail adjoint identity equals -d^1(([x,y]x^(p-1))(ad_R y)^(p-2))");
    // With theta != 0 the identity needs lambda2 = 0: Delta([x,y]) =
    // [x,y] (x) 1 + g^(theta(p+1)) (x) [x,y] fails on the lambda2 x summand,
    // whose left group-like is g^theta. That matches every use downstream
    // (theta = 0 with free lambda2, or theta = 1 with [x,y] in the group ring).
    for (auto [p, q] : std::vector<std::pair<int, long>>{{2, 3}, {3, 2}}) {
        auto F = FieldCtx::make(p, {});
        for (int l3 = 0; l3 <= 1; ++l3) {
            std::map<std::string, Fq> sc = {{"lambda2", F->zero()}, {"lambda3", F->from_int(l3)}};
            IdentityCheck a =
                verify_identity(LemmaId::OmegaAdjointCocycle, p, {{"q", q}, {"theta", 1}}, sc, F);
            c.require(a.pass, "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                                  ") lambda3=" + std::to_string(l3) + ": residue " + a.residue);
        }
        // The lambda2 = 1, theta = 1 combination genuinely breaks the identity;
        // assert the residue is nonzero so the hypothesis stays honest.
        std::map<std::string, Fq> sc = {{"lambda2", F->one()}, {"lambda3", F->zero()}};
        IdentityCheck bad =
            verify_identity(LemmaId::OmegaAdjointCocycle, p, {{"q", q}, {"theta", 1}}, sc, F);
        c.require(!bad.pass,
                  "lambda2 = 1 with theta = 1 should break the identity, but it held");
    }
}

// d^2(u (x) v) = 1(x)u(x)v - Delta(u)(x)v + u(x)Delta(v) - u(x)v(x)1, with the
// factors expanded by the given coproduct and reduced in the given system.
TensorPoly d2_of_tail(const RewriteSystem& sys, const TensorPoly& tail,
                      const std::function<TensorPoly(const Word&)>& delta_of) {
    const FieldCtx* F = tail.ctx();
    TensorPoly resid(F, 3);
    for (auto& [key, cf] : tail.terms()) {
        resid.add_term({Word{}, key[0], key[1]}, cf);
        TensorPoly du = delta_of(key[0]);
        for (auto& [dk, dc] : du.terms())
            resid.add_term({dk[0], dk[1], key[1]}, F->neg(F->mul(cf, dc)));
        TensorPoly dv = delta_of(key[1]);
        for (auto& [dk, dc] : dv.terms())
            resid.add_term({key[0], dk[0], dk[1]}, F->mul(cf, dc));
        resid.add_term({key[0], key[1], Word{}}, F->neg(cf));
    }
    return sys.reduce(resid);
}

void criteria_5_and_8_catalog() {
    Criterion c5("5. catalog dimensions: smallest admissible primes, all constraint-satisfying "
                 "{0,1} grids");
    Criterion c8("8. Hopf axioms and antipode derivation across the same grid; tail cocycles");
    size_t instantiations = 0;
    for (auto& e : cat::all_cases()) {
        cat::SmallestChoice sc = cat::smallest_admissible(e.id);
        long long expected = e.expected_dim(sc.primes);
        size_t kept = 0;
        for (auto& pt : grid_points(e)) {
            cat::Instantiation inst;
            try {
                inst = cat::instantiate_typed(e, sc.primes, sc.int_params, pt,
                                              cat::Strictness::Permissive);
            } catch (const Error& err) {
                c5.require(false, e.id + " failed to instantiate: " + std::string(err.what()));
                continue;
            }
            if (!inst.constraints_satisfied()) continue;
            ++kept;
            ++instantiations;
            std::string tag = e.id + " " + pq_str(sc.primes);
            for (auto& [k, v] : pt) tag += " " + k + "=" + v;
            if (!inst.H.confluent()) {
                c5.require(false, tag + ": not confluent");
                continue;
            }
            c5.require(inst.H.basis().finite &&
                           static_cast<long long>(inst.H.basis().count) == expected,
                       tag + ": dim " + std::to_string(inst.H.basis().count) + " != " +
                           std::to_string(expected));
            if (!inst.H.valid()) continue;
            BialgebraReport br = check_bialgebra(inst.H);
            c8.require(br.pass, tag + ": bialgebra: " + br.failure);
            if (!br.pass) continue;
            try {
                derive_antipode(inst.H);
            } catch (const Error& err) {
                c8.require(false, tag + ": antipode: " + std::string(err.what()));
            }
        }
        c5.require(kept > 0, e.id + ": no constraint-satisfying grid points");
    }
    c5.notes << "\n      " << instantiations << " instantiations checked";

    // Tail cocycles: d^2(omega_0) = 0 over k[x]/(x^p) for p in {2,3}, and
    // d^2(theta) = 0 over the Taft algebra at q = 3, GF(4).
    for (int p : {2, 3}) {
        auto F = FieldCtx::make(p, {});
        GenSet gens{{"x", 1}};
        RewriteSystem sys = RewriteSystem::orient(
            F.get(), gens, {NcPoly::from_word(F.get(), word_of(0, p), F->one())});
        NcPoly x = NcPoly::generator(F.get(), 0), one = NcPoly::unit(F.get());
        std::vector<TensorPoly> dimg = {TensorPoly::tensor(x, one) + TensorPoly::tensor(one, x)};
        auto delta_of = [&](const Word& w) {
            return sys.reduce(substitute(NcPoly::from_word(F.get(), w, F->one()), dimg));
        };
        TensorPoly omega = coproduct_tail(TailKind::Omega0, F.get(), 0, 0, p);
        c8.require(d2_of_tail(sys, omega, delta_of).is_zero(),
                   "omega_0 is not d^2-closed at p = " + std::to_string(p));
    }
    {
        auto F = FieldCtx::make(2, {3});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
        NcPoly one = NcPoly::unit(F.get());
        RewriteSystem sys = RewriteSystem::orient(
            F.get(), gens,
            {g.pow(3) - one, g * x - (x * g).scaled(F->root(3)), x.pow(3)});
        std::vector<TensorPoly> dimg = {TensorPoly::tensor(x, one) + TensorPoly::tensor(g, x),
                                        TensorPoly::tensor(g, g)};
        auto delta_of = [&](const Word& w) {
            return sys.reduce(substitute(NcPoly::from_word(F.get(), w, F->one()), dimg));
        };
        TensorPoly theta = coproduct_tail(TailKind::ThetaQ, F.get(), 0, 1, 3);
        c8.require(d2_of_tail(sys, theta, delta_of).is_zero(),
                   "theta(x) is not d^2-closed at q = 3 over GF(4)");
    }
}

void criterion_6_negative_controls() {
    Criterion c("6. negative controls: A2, A4b, D2 violations break confluence; completion "
                "collapses the count");
    struct Neg {
        std::string id;
        cat::CasePrimes primes;
        std::map<std::string, std::string> params;
    };
    std::vector<Neg> negs = {{"A2", {2, 3, 0}, {{"lambda", "1"}}},
                             {"A4b", {2, 3, 0}, {{"lambda1", "1"}}},
                             {"D2a", {2, 3, 0}, {{"lambda2", "1"}}}};
    for (auto& n : negs) {
        cat::Instantiation inst =
            cat::instantiate(n.id, n.primes, n.params, cat::Strictness::Permissive);
        c.require(!inst.H.confluent(), n.id + ": expected a non-resolvable ambiguity");
        if (!inst.H.confluent()) {
            long long expected = inst.entry->expected_dim(n.primes);
            auto done = inst.H.sys().complete(32);
            NormalBasis nb = done.system.normal_words();
            c.require(nb.finite && static_cast<long long>(nb.count) < expected,
                      n.id + ": completion count " + std::to_string(nb.count) +
                          " not strictly below " + std::to_string(expected));
        }
    }
    // A2's obstruction sits at the overlap g x^2, proportional to (xi - xi^2) x
    // (times the invertible trailing g).
    cat::Instantiation a2 =
        cat::instantiate("A2", {2, 3, 0}, {{"lambda", "1"}}, cat::Strictness::Permissive);
    const ConfluenceEntry* obs = a2.H.confluence().first_obstruction();
    c.require(obs != nullptr, "A2: no obstruction found");
    if (obs) {
        const GenSet& gens = a2.H.gens();
        c.require(word_to_string(gens, obs->amb.word) == "g*x^2",
                  "A2: obstruction at " + word_to_string(gens, obs->amb.word) + ", wanted g*x^2");
        Fq xi = a2.field->root(3);
        Fq want = a2.field->sub(xi, a2.field->pow(xi, 2));
        bool proportional = false;
        if (obs->obstruction.term_count() == 1) {
            auto& [w, cf] = *obs->obstruction.terms().begin();
            size_t xs = 0;
            for (char l : w) xs += (gens.names[static_cast<unsigned char>(l)] == "x") ? 1 : 0;
            proportional = xs == 1 && (cf == want || cf == a2.field->neg(want));
        }
        c.require(proportional, "A2: obstruction is not proportional to (xi - xi^2) x");
    }
}

void criterion_7_tables() {
    Criterion c("7. Tables 1-3: Yetter-Drinfeld realization counts");
    struct Row {
        std::string row;
        cat::CasePrimes primes;
        long expect;
    };
    std::vector<Row> rows;
    for (long q : {3L, 5L}) {
        long p_b1 = q == 3 ? 7 : 11;  // q | p-1 so the semidirect group exists
        rows.push_back({"A", {2, q, 0}, 6});
        rows.push_back({"B1", {p_b1, q, 0}, 2});
        rows.push_back({"B2", {2, q, 0}, 1});
        rows.push_back({"C", {2, q, 0}, 4 * q - 1});
        rows.push_back({"D", {2, q, 0}, 3});
    }
    rows.push_back({"AA", {2, 3, 0}, 2});
    rows.push_back({"AB1", {2, 3, 0}, 5});
    rows.push_back({"AB2", {2, 3, 0}, 6});
    rows.push_back({"AC", {2, 3, 0}, 1});
    rows.push_back({"AD", {2, 3, 0}, 1});
    rows.push_back({"BA", {2, 3, 5}, 7});
    rows.push_back({"BB", {5, 3, 2}, 2});
    for (auto& r : rows) {
        c.require(cat::yd_expected_count(r.row, r.primes) == r.expect,
                  "table count formula for row " + r.row);
        auto F = cat::yd_field(r.row, r.primes);
        auto list = cat::enumerate_yd(r.row, r.primes, F);
        c.require(static_cast<long>(list.size()) == r.expect,
                  "row " + r.row + " " + pq_str(r.primes) + ": enumerated " +
                      std::to_string(list.size()) + ", expected " + std::to_string(r.expect));
    }
}

void criterion_9_cohomology() {
    Criterion c("9. Hochschild cohomology: H^2 of the line and of the Taft algebra");
    for (int p : {2, 3}) {
        auto F = FieldCtx::make(p, {});
        Coalgebra line = Coalgebra::divided_power_line(F, p);
        CohomologyReport rep = cohomology_dims(line, {0, 0}, 2);
        c.require(rep.dim_H == 1, "dim H^2(K, k[x]/(x^" + std::to_string(p) + ")) = " +
                                      std::to_string(rep.dim_H) + ", expected 1");
        CohomologyReport graded = graded_cohomology_dims(line, {0, 0}, 2);
        bool concentrated =
            graded.adams.size() == 1 && graded.adams.count(p) && graded.adams.at(p) == 1;
        c.require(concentrated, "Adams grading of H^2 not concentrated in degree p = " +
                                    std::to_string(p));
        CohomologyReport cobar = cobar_dims(line, 2);
        c.require(cobar.dim_H == rep.dim_H, "cobar H^2 disagrees with the unreduced complex");
        CohomologyReport h1 = cobar_dims(line, 1);
        c.require(h1.dim_H == 1, "cobar H^1 should equal dim P(C) = 1");
    }
    {
        auto F = FieldCtx::make(2, {3});
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(F.get(), 0), g = NcPoly::generator(F.get(), 1);
        HopfData data;
        data.field = F;
        data.gens = gens;
        data.relations = {g.pow(3) - NcPoly::unit(F.get()),
                          g * x - (x * g).scaled(F->root(3)), x.pow(3)};
        data.grouplike_gens = {1};
        data.grouplike_orders[1] = 3;
        data.coproduct[1] = TensorPoly::tensor(g, g);
        data.coproduct[0] =
            TensorPoly::tensor(x, NcPoly::unit(F.get())) + TensorPoly::tensor(g, x);
        data.counit[1] = F->one();
        data.counit[0] = F->zero();
        HopfPresentation taft = HopfPresentation::build(std::move(data));
        c.require(taft.dim() == 9, "Taft algebra at q = 3 should have dimension 9");
        Coalgebra C = Coalgebra::from_hopf(taft);
        uint32_t one = C.grouplike_named("1");
        CohomologyReport h_id = cohomology_dims(C, {one, one}, 2);
        c.require(h_id.dim_H == 1, "Taft: dim H^2({}^1 K^1) = " + std::to_string(h_id.dim_H) +
                                       ", expected 1");
        for (std::string gname : {"g", "g^2"}) {
            CohomologyReport h = cohomology_dims(C, {C.grouplike_named(gname), one}, 2);
            c.require(h.dim_H == 0, "Taft: dim H^2 with group-like " + gname + " = " +
                                        std::to_string(h.dim_H) + ", expected 0");
        }
        // The theta tail really is a non-primitive generator: its d^1 class in
        // the Taft subcoalgebra of case AD is nonzero.
        cat::Instantiation ad =
            cat::instantiate("AD", {2, 3, 0}, {}, cat::Strictness::Strict);
        Coalgebra CAD = Coalgebra::from_hopf(ad.H);
        std::vector<uint32_t> taft_indices;
        for (uint32_t i = 0; i < CAD.dim(); ++i)
            if (CAD.names[i].find('y') == std::string::npos) taft_indices.push_back(i);
        uint32_t ad_one = CAD.grouplike_named("1");
        auto witness = nonprimitive_generator_witness(CAD, taft_indices, {ad_one, ad_one});
        c.require(witness.has_value() && witness->cocycle && witness->nonzero_class,
                  "AD: theta tail class in H^2 should be nonzero");
        if (witness) c.notes << "\n      AD witness element: " << witness->element;
    }
}

void criterion_10_pq_isos() {
    Criterion c("10. pq-family isomorphism witnesses over GF(4) and GF(9), field-extending");
    std::mt19937 rng(20260810);
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}}) {
        auto F = FieldCtx::make(static_cast<int>(p), {}, 2);  // GF(4) resp. GF(9)
        bool extended_seen = false;
        for (int trial = 0; trial < 5; ++trial) {
            Fq lambda{static_cast<uint32_t>(rng() % F->size())};
            Fq gamma{static_cast<uint32_t>(rng() % F->size())};
            auto wA = find_pq_iso(PqFamily::A, p, q, lambda, gamma, F);
            c.require(wA.has_value(), "family A witness missing at p=" + std::to_string(p));
            if (wA) {
                extended_seen |= wA->extended;
                Fq le = lambda, ge = gamma;
                if (wA->extended) {
                    FieldEmbedding embed(F, wA->field);
                    le = embed(lambda);
                    ge = embed(gamma);
                }
                Fq resid = wA->field->add(wA->field->sub(wA->field->pow(wA->a, p), wA->a),
                                          wA->field->sub(ge, le));
                c.require(resid == wA->field->zero(), "family A witness equation fails");
            }
        }
        c.notes << "\n      family A, p=" << p
                << ": field extension exercised: " << (extended_seen ? "yes" : "no");
    }
    // The commutative family lives where q | p-1 (g^p = g; otherwise
    // x -> a(1-g) + bx is not even an algebra map), so its GF(9) instance is
    // (3,2); the Artin-Schreier solution may need GF(3^6).
    {
        long p = 3, q = 2;
        auto F = FieldCtx::make(static_cast<int>(p), {}, 2);
        bool extended_seen = false, b_nontrivial = false;
        for (int trial = 0; trial < 10; ++trial) {
            Fq lambda{static_cast<uint32_t>(rng() % F->size())};
            Fq gamma{static_cast<uint32_t>(rng() % F->size())};
            auto wB = find_pq_iso(PqFamily::B, p, q, lambda, gamma, F);
            c.require(wB.has_value(), "family B witness missing at p=" + std::to_string(p));
            if (wB) {
                extended_seen |= wB->extended;
                b_nontrivial |= (wB->b != wB->field->one());
                c.require(wB->b != wB->field->zero() && wB->field->pow(wB->b, p) == wB->b,
                          "family B witness must have b^p = b, b != 0");
            }
        }
        c.notes << "\n      family B, p=3: extension exercised: "
                << (extended_seen ? "yes" : "no")
                << ", nontrivial b seen: " << (b_nontrivial ? "yes" : "no");
    }
}

void criterion_11_antipode_order() {
    Criterion c("11. antipode order 2p for the skew A-family lift; order <= 2 for "
                "(co)commutative cases");
    // The consistent carrier of the 2p claim is case A3 with lambda1 = 1: its
    // group-like has order pq, so the non-semisimple conjugation action exists.
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}}) {
        cat::Instantiation inst = cat::instantiate(
            "A3", {p, q, 0}, {{"lambda1", "1"}, {"lambda2", "1"}}, cat::Strictness::Strict);
        derive_antipode(inst.H);
        int ord = antipode_order(inst.H);
        c.require(ord == 2 * static_cast<int>(p),
                  "A3(lambda1=1) at " + pq_str(inst.primes) + ": antipode order " +
                      std::to_string(ord) + ", expected " + std::to_string(2 * p));
    }
    // The pq-dimensional presentation with gx - xg = g - g^2 over a group-like
    // of order q collapses: the g^q overlap forces g = 1. Record the computed
    // facts rather than pretending a pq-dimensional carrier exists.
    {
        cat::Instantiation inst = cat::instantiate("CA3b", {2, 3, 0}, {{"lambda1", "1"}},
                                                   cat::Strictness::Permissive);
        c.require(!inst.H.confluent(),
                  "CA3b with lambda1 = 1 unexpectedly confluent; the g^q overlap should "
                  "obstruct");
        auto done = inst.H.sys().complete(16);
        NormalBasis nb = done.system.normal_words();
        c.notes << "\n      note: the pq presentation with gx - xg = g - g^2 collapses to "
                << "dimension " << nb.count << " (g = 1 is forced); the 2p antipode is carried "
                << "by the A3 lift above";
    }
    for (const char* id : {"CA1", "C1a", "C1e", "B1a"}) {
        cat::SmallestChoice sc = cat::smallest_admissible(id);
        cat::Instantiation inst = cat::instantiate(id, sc.primes, {}, cat::Strictness::Strict);
        derive_antipode(inst.H);
        int ord = antipode_order(inst.H);
        c.require(ord <= 2, std::string(id) + ": antipode order " + std::to_string(ord) +
                                " exceeds 2 for a (co)commutative case");
    }
}

void criterion_12_primitives_filtration() {
    Criterion c("12. skew-primitives, coradical filtration, group-like counts");
    {
        cat::Instantiation a3 =
            cat::instantiate("A3", {2, 3, 0}, {{"lambda1", "0"}}, cat::Strictness::Strict);
        SkewPrimitiveSpace sp = skew_primitives(a3.H, Word{}, word_of(a3.H.gens().index("g")));
        c.require(sp.dim() == 2,
                  "A3: dim P_{1,g} = " + std::to_string(sp.dim()) + ", expected 2 (x and 1-g)");
        const FieldCtx& F = a3.H.F();
        NcPoly x = NcPoly::generator(&F, a3.H.gens().index("x"));
        NcPoly mg = NcPoly::unit(&F) - NcPoly::generator(&F, a3.H.gens().index("g"));
        auto contains = [&](const NcPoly& target) {
            if (sp.dim() != 2) return false;
            for (uint32_t a = 0; a < F.size(); ++a)
                for (uint32_t b2 = 0; b2 < F.size(); ++b2)
                    if (sp.basis[0].scaled(Fq{a}) + sp.basis[1].scaled(Fq{b2}) == target)
                        return true;
            return false;
        };
        c.require(contains(x) && contains(mg), "A3: P_{1,g} should contain x and 1-g");
    }
    {
        cat::Instantiation d1b = cat::instantiate("D1b", {3, 2, 0}, {}, cat::Strictness::Strict);
        FiltrationReport fr = coradical_filtration(d1b.H);
        c.require(fr.exhausts, "D1b: filtration does not exhaust");
        c.require(fr.taft_wilson_level1, "D1b: Taft-Wilson level-1 decomposition fails");
        Word y = word_of(d1b.H.gens().index("y"));
        c.require(fr.level_of.at(y) == 3, "D1b at (3,2): y sits at level " +
                                              std::to_string(fr.level_of.at(y)) +
                                              ", expected p = 3");
        Word x = word_of(d1b.H.gens().index("x"));
        c.require(fr.level_of.at(x) == 1, "D1b: x should enter at level 1");
    }
    {
        cat::Instantiation a1 =
            cat::instantiate("A1", {2, 3, 0}, {{"lambda", "1"}}, cat::Strictness::Strict);
        FiltrationReport fr = coradical_filtration(a1.H);
        c.require(fr.dims.size() >= 2 && fr.dims[0] == 6 && fr.dims.back() == 12,
                  "A1: coradical dims should run (6, 12)");
    }
    struct GL {
        const char* id;
        size_t ord;
    };
    for (auto [id, ord] : std::vector<GL>{{"A1", 6},
                                          {"AD", 3},
                                          {"B1a", 6},
                                          {"C1a", 3},
                                          {"AB2a", 9},
                                          {"BA1", 15},
                                          {"CA1", 3}}) {
        cat::SmallestChoice sc = cat::smallest_admissible(id);
        cat::Instantiation inst = cat::instantiate(id, sc.primes, {}, cat::Strictness::Strict);
        auto G = group_likes(inst.H);
        c.require(G.size() == ord, std::string(id) + ": " + std::to_string(G.size()) +
                                       " group-likes, expected " + std::to_string(ord));
        c.require(G.size() > 0 && inst.H.dim() % G.size() == 0,
                  std::string(id) + ": Ord G | dim H fails");
    }
}

void criterion_13_determinism() {
    Criterion c("13. determinism: repeated sweeps produce byte-identical reports");
    auto run_once = [&]() {
        std::ostringstream os;
        for (const char* id : {"CA1", "CA2", "CA3a", "CA3b", "A1", "A3", "AD"}) {
            cat::SmallestChoice sc = cat::smallest_admissible(id);
            for (int bit = 0; bit <= 1; ++bit) {
                std::map<std::string, std::string> params;
                for (auto& p : cat::find_case(id).params)
                    if (p.domain != cat::ParamSpec::Domain::Int)
                        params[p.name] = bit ? "1" : "0";
                cat::Instantiation inst =
                    cat::instantiate(id, sc.primes, params, cat::Strictness::Permissive);
                if (!inst.constraints_satisfied()) continue;
                VerifyOptions opts;
                VerifyOutcome out = verify_case(inst, opts);
                os << out.report.dump() << "\n";
            }
        }
        return os.str();
    };
    std::string first = run_once();
    std::string second = run_once();
    c.require(!first.empty() && first == second, "sweep reports differ between runs");
}

}  // namespace

int main() {
    std::cout << "hopfforge acceptance suite\n";
    auto t0 = std::chrono::steady_clock::now();
    criterion_1_jacobson();
    criterion_2_adjoint_group();
    criterion_3_adjoint_three();
    criterion_4_omega_cocycle_identity();
    criteria_5_and_8_catalog();
    criterion_6_negative_controls();
    criterion_7_tables();
    criterion_9_cohomology();
    criterion_10_pq_isos();
    criterion_11_antipode_order();
    criterion_12_primitives_filtration();
    criterion_13_determinism();
    auto total = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << failures
              << " failing) in " << total << " ms\n";
    return failures == 0 ? 0 : 1;
}
