#include "hopfforge/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "hopfforge/parser.hpp"

namespace hopfforge::catalog {

namespace {

// Presentation scaffold shared by the case builders.
struct CB {
    std::shared_ptr<const FieldCtx> F;
    HopfData data;

    CB(std::shared_ptr<const FieldCtx> ctx,
       std::initializer_list<std::pair<const char*, int>> gens)
        : F(std::move(ctx)) {
        data.field = F;
        data.gens = GenSet(gens);
    }
    int idx(const char* n) const { return data.gens.index(n); }
    NcPoly G(const char* n) const { return NcPoly::generator(F.get(), idx(n)); }
    NcPoly pw(const char* n, long e) const {
        return NcPoly::from_word(F.get(), word_of(idx(n), static_cast<int>(e)), F->one());
    }
    NcPoly one() const { return NcPoly::unit(F.get()); }
    NcPoly k(Fq c) const { return NcPoly::scalar(F.get(), c); }
    void rel(NcPoly r) { data.relations.push_back(std::move(r)); }
    void grouplike(const char* n, long order) {
        int i = idx(n);
        data.grouplike_gens.push_back(i);
        data.grouplike_orders[i] = order;
        data.coproduct[i] =
            TensorPoly::from_key(F.get(), {word_of(i), word_of(i)}, F->one());
        data.counit[i] = F->one();
        rel(pw(n, order) - one());
    }
    void skew(const char* n, const Word& grp) {
        int i = idx(n);
        data.coproduct[i] = TensorPoly::from_key(F.get(), {word_of(i), Word{}}, F->one());
        data.coproduct[i] += TensorPoly::from_key(F.get(), {grp, word_of(i)}, F->one());
        data.counit[i] = F->zero();
    }
    void primitive(const char* n) { skew(n, Word{}); }
    void coprod(const char* n, TensorPoly t) {
        data.coproduct[idx(n)] = std::move(t);
        data.counit[idx(n)] = F->zero();
    }
    Word w(const char* n, long e = 1) const {
        return word_of(idx(n), static_cast<int>(e));
    }
    void affine_for_semidirect(const char* acting, long normal_order) {
        std::vector<long long> a(static_cast<size_t>(data.gens.arity()), 1);
        std::vector<long long> b(static_cast<size_t>(data.gens.arity()), 1);
        a[static_cast<size_t>(idx(acting))] = normal_order;
        data.order = ReductionOrder::affine(std::move(a), std::move(b));
    }
};

Fq P(const FieldParams& fp, const char* name) {
    auto it = fp.find(name);
    if (it == fp.end()) throw Error(std::string("missing parameter ") + name);
    return it->second;
}

bool div(long a, long b) { return a != 0 && b % a == 0; }

using Adm = std::function<std::optional<std::string>(const CasePrimes&, const IntParams&)>;

Adm adm_always() {
    return [](const CasePrimes&, const IntParams&) { return std::nullopt; };
}
Adm adm_pred(std::function<bool(const CasePrimes&, const IntParams&)> ok, std::string why) {
    return [ok = std::move(ok), why = std::move(why)](
               const CasePrimes& pr, const IntParams& ip) -> std::optional<std::string> {
        if (ok(pr, ip)) return std::nullopt;
        return why;
    };
}

std::function<long long(const CasePrimes&)> dim_of(DimClass d) {
    switch (d) {
        case DimClass::P2Q: return [](const CasePrimes& c) { return c.p * c.p * c.q; };
        case DimClass::PQ2: return [](const CasePrimes& c) { return c.p * c.q * c.q; };
        case DimClass::PQR: return [](const CasePrimes& c) { return c.p * c.q * c.r; };
        case DimClass::PQ: return [](const CasePrimes& c) { return c.p * c.q; };
    }
    throw Error("bad dim class");
}

std::function<std::set<long>(const CasePrimes&)> roots_none() {
    return [](const CasePrimes&) { return std::set<long>{}; };
}
std::function<std::set<long>(const CasePrimes&)> roots_q() {
    return [](const CasePrimes& c) { return std::set<long>{c.q}; };
}

// Constraint: a parameter must vanish.
Constraint c_zero(const char* pname, std::string anchor) {
    Constraint c;
    c.expr = std::string(pname) + " = 0";
    c.anchor = std::move(anchor);
    c.pred = [pname = std::string(pname)](const CasePrimes&, const FieldCtx& F,
                                          const FieldParams& fp, const IntParams&) {
        return P(fp, pname.c_str()) == F.zero();
    };
    return c;
}

// Constraint: parameter vanishes unless a prime-divisibility condition holds.
Constraint c_zero_unless(const char* pname, std::function<bool(const CasePrimes&, const IntParams&)> cond,
                         std::string expr, std::string anchor) {
    Constraint c;
    c.expr = std::move(expr);
    c.anchor = std::move(anchor);
    c.pred = [pname = std::string(pname), cond = std::move(cond)](
                 const CasePrimes& pr, const FieldCtx& F, const FieldParams& fp,
                 const IntParams& ip) {
        return cond(pr, ip) || P(fp, pname.c_str()) == F.zero();
    };
    return c;
}

Constraint c_pred(std::string expr, std::string anchor,
                  std::function<bool(const CasePrimes&, const FieldCtx&, const FieldParams&,
                                     const IntParams&)>
                      pred) {
    Constraint c;
    c.expr = std::move(expr);
    c.anchor = std::move(anchor);
    c.pred = std::move(pred);
    return c;
}

// x^p = a*x + b*(1 - g^e) style product conditions: a*b = 0.
Constraint c_prod_zero(const char* a, const char* b, std::string anchor) {
    Constraint c;
    c.expr = std::string(a) + "*" + b + " = 0";
    c.anchor = std::move(anchor);
    c.pred = [a = std::string(a), b = std::string(b)](const CasePrimes&, const FieldCtx& F,
                                                      const FieldParams& fp, const IntParams&) {
        return F.mul(P(fp, a.c_str()), P(fp, b.c_str())) == F.zero();
    };
    return c;
}

const char* kGroupOverlapAnchor =
    "forced: the overlap (g^N)x = g^(N-1)(gx) leaves N*lambda*(1-g^s), and N is invertible "
    "mod p";

std::vector<ParamSpec> ps(std::initializer_list<std::pair<const char*, ParamSpec::Domain>> l,
                          std::initializer_list<std::pair<const char*, const char*>> ints = {}) {
    std::vector<ParamSpec> out;
    for (auto& [n, d] : l) out.push_back({n, d, ""});
    for (auto& [n, note] : ints) out.push_back({n, ParamSpec::Domain::Int, note});
    return out;
}

constexpr auto Z2 = ParamSpec::Domain::Z2;
constexpr auto KF = ParamSpec::Domain::Field;

// (q*lambda)^(p-1) and friends.
Fq scaled_pow(const FieldCtx& F, long scale, Fq lambda, long e) {
    return F.pow(F.mul(F.from_int(scale), lambda), e);
}

std::vector<CaseEntry> build_all_cases();

const std::vector<CaseEntry>& cases_storage() {
    static const std::vector<CaseEntry> cases = build_all_cases();
    return cases;
}

std::vector<CaseEntry> build_all_cases() {
    std::vector<CaseEntry> out;

    auto add = [&](CaseEntry e) {
        if (!e.force_defaults)
            e.force_defaults = [](const CasePrimes&, const FieldCtx&, FieldParams&,
                                  const IntParams&, const std::set<std::string>&) {};
        e.expected_dim = dim_of(e.dclass);
        out.push_back(std::move(e));
    };

    // ----------------------------------------------------------------- A ---
    // G = C_pq, R = k[x]/(x^p).
    {
        CaseEntry e;
        e.id = "A1";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_1^eps";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A2";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_1^chi";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.constraints = {c_zero_unless(
            "lambda", [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
            "q | p-1 or lambda = 0",
            "overlap (gx)x^(p-1) = g(x^p) leaves lambda*(xi - xi^p)*x")};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A3";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_g^eps";
        e.params = ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g"));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(P(fp, "lambda1")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda1")) -
                  (b.one() - b.pw("g", c.p)).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A4a";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_{g^p}^eps, q | p-1";
        e.params = ps({{"lambda1", Z2}, {"lambda2", KF}, {"lambda3", KF}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
            "requires q | p-1");
        e.root_orders = roots_none();
        e.constraints = {c_pred(
            "lambda1*(lambda2 - lambda1^(p-1)) = 0",
            "overlap (gx)x^(p-1) = g(x^p) reduces to [g,x^p] = (g)(ad_R x)^p",
            [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp, const IntParams&) {
                Fq l1 = P(fp, "lambda1");
                return F.mul(l1, F.sub(P(fp, "lambda2"), F.pow(l1, c.p - 1))) == F.zero();
            })};
        e.force_defaults = [](const CasePrimes&, const FieldCtx& F, FieldParams& fp,
                              const IntParams&, const std::set<std::string>& set) {
            if (fp.at("lambda1") == F.one() && !set.count("lambda2")) fp["lambda2"] = F.one();
        };
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g", c.p));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", c.p + 1)).scaled(P(fp, "lambda1")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")) -
                  (b.one() - b.pw("g", c.p)).scaled(P(fp, "lambda3")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A4b";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_{g^p}^eps, q !| p-1";
        e.params = ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return !div(c.q, c.p - 1); },
            "requires q !| p-1");
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1",
                                "overlap (gx)x^(p-1) = g(x^p): [g,x^p] = 0 but (g)(ad_R x)^p = "
                                "lambda1^p g(1-g^(p^2))")};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g", c.p));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", c.p + 1)).scaled(P(fp, "lambda1")));
            b.rel(b.pw("x", c.p) -
                  (b.one() - b.pw("g", (c.p * c.p) % (c.p * c.q))).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A5";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_{g^q}^eps";
        e.params = ps({{"lambda1", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g", c.q));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", c.q + 1)).scaled(l1));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(scaled_pow(*F, c.q, l1, c.p - 1)));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "A6";
        e.dclass = DimClass::P2Q;
        e.group = "C_pq";
        e.realization = "x in V_{g^q}^chi";
        e.params = ps({{"lambda1", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g", c.q));
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)) -
                  (b.G("g") - b.pw("g", c.q + 1)).scaled(P(fp, "lambda1")));
            b.rel(b.pw("x", c.p));
            return b.data;
        };
        add(e);
    }

    // ----------------------------------------------------------------- B ---
    // Semidirect-product coradicals; the twist parameter t is computed, never
    // stored: the least residue of the required multiplicative order.
    auto b_case = [&](const char* id, bool twisted_commutation) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::P2Q;
        bool is_b1 = (id[1] == '1');
        e.group = is_b1 ? "Z_p x| Z_q" : "Z_q x| Z_p";
        e.realization = twisted_commutation ? "x in V_1^chi" : "x in V_1^eps";
        e.params = ps({{"lambda", Z2}});
        if (is_b1)
            e.admissible = adm_pred(
                [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
                "the group Z_p x| Z_q requires q | p-1");
        else
            e.admissible = adm_pred(
                [](const CasePrimes& c, const IntParams&) { return div(c.p, c.q - 1); },
                "the group Z_q x| Z_p requires p | q-1");
        e.root_orders = twisted_commutation ? roots_q() : roots_none();
        e.build = [is_b1, twisted_commutation](const CasePrimes& c, const IntParams&,
                                               const FieldParams& fp,
                                               std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}, {"h", 0}});
            long ord_g = is_b1 ? c.q : c.p;   // acting generator
            long ord_h = is_b1 ? c.p : c.q;   // normal generator
            long t = least_residue_of_order(ord_g, ord_h);
            b.grouplike("g", ord_g);
            b.grouplike("h", ord_h);
            b.primitive("x");
            b.rel(b.G("g") * b.G("h") - b.pw("h", t) * b.G("g"));
            if (twisted_commutation)
                b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            else
                b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("h") * b.G("x") - b.G("x") * b.G("h"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            b.affine_for_semidirect("g", ord_h);
            return b.data;
        };
        add(e);
    };
    b_case("B1a", false);
    b_case("B1b", true);
    b_case("B2a", false);

    // ----------------------------------------------------------------- C ---
    // G = C_q, R = k[x,y]/(x^p, y^p) with x, y primitive in R.
    auto c1_case = [&](const char* id, const char* desc,
                       std::function<void(CB&, const CasePrimes&)> tail) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = desc;
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [tail](const CasePrimes& c, const IntParams&, const FieldParams&,
                         std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.primitive("y");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            tail(b, c);
            return b.data;
        };
        add(e);
    };
    c1_case("C1a", "restricted abelian, x^p = 0, y^p = 0", [](CB& b, const CasePrimes& c) {
        b.rel(b.pw("x", c.p));
        b.rel(b.pw("y", c.p));
        b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
    });
    c1_case("C1b", "restricted abelian, x^p = x, y^p = 0", [](CB& b, const CasePrimes& c) {
        b.rel(b.pw("x", c.p) - b.G("x"));
        b.rel(b.pw("y", c.p));
        b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
    });
    c1_case("C1c", "restricted abelian, x^p = y", [](CB& b, const CasePrimes& c) {
        b.rel(b.pw("x", c.p) - b.G("y"));
        b.rel(b.pw("y", c.p));
        b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
    });
    c1_case("C1d", "restricted abelian, x^p = x, y^p = y", [](CB& b, const CasePrimes& c) {
        b.rel(b.pw("x", c.p) - b.G("x"));
        b.rel(b.pw("y", c.p) - b.G("y"));
        b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
    });
    c1_case("C1e", "restricted nonabelian, [x,y] = y", [](CB& b, const CasePrimes& c) {
        b.rel(b.pw("x", c.p) - b.G("x"));
        b.rel(b.pw("y", c.p));
        b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("y"));
    });

    // C2/C3 share the six-parameter template
    //   x^p = a1 x + a2 y, y^p = b1 x + b2 y, [x,y] = c1 x + c2 y
    // with commutations g x = xi^i x g, g y = xi^m y g.
    auto c23_build = [](long i_exp, const char* mu_param, long mu_fixed) {
        return [i_exp, mu_param, mu_fixed](const CasePrimes& c, const IntParams& ip,
                                           const FieldParams& fp,
                                           std::shared_ptr<const FieldCtx> F) {
            long mu = mu_param ? ip.at(mu_param) : mu_fixed;
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.primitive("y");
            Fq xi = F->root(c.q);
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->pow(xi, i_exp)));
            b.rel(b.G("g") * b.G("y") - (b.G("y") * b.G("g")).scaled(F->pow(xi, mu)));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "alpha1")) -
                  b.G("y").scaled(P(fp, "alpha2")));
            b.rel(b.pw("y", c.p) - b.G("x").scaled(P(fp, "beta1")) -
                  b.G("y").scaled(P(fp, "beta2")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(P(fp, "gamma1")) -
                  b.G("y").scaled(P(fp, "gamma2")));
            return b.data;
        };
    };
    auto c23_params = ps({{"alpha1", Z2},
                          {"alpha2", Z2},
                          {"beta1", Z2},
                          {"beta2", Z2},
                          {"gamma1", Z2},
                          {"gamma2", Z2}});

    auto pow_cond = [](const char* a, const char* b, std::string expr, std::string anchor) {
        // (b - a^(p-1)) a = 0 and (b - a^(p-1)) pattern conditions appear all
        // over the C family; this one checks  b*a - a^p = 0.
        return c_pred(std::move(expr), std::move(anchor),
                      [a = std::string(a), b = std::string(b)](
                          const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                          const IntParams&) {
                          Fq av = P(fp, a.c_str()), bv = P(fp, b.c_str());
                          return F.sub(F.mul(bv, av), F.pow(av, c.p)) == F.zero();
                      });
    };

    {
        CaseEntry e;
        e.id = "C2a";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_1^eps, y in V_1^{chi^nu}, q !| p-1";
        e.params = c23_params;
        e.params.push_back({"nu", ParamSpec::Domain::Int, "0 < nu < q"});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams& ip) {
                long nu = ip.count("nu") ? ip.at("nu") : 1;
                return !div(c.q, c.p - 1) && nu > 0 && nu < c.q;
            },
            "requires q !| p-1 and 0 < nu < q");
        e.root_orders = roots_q();
        e.constraints = {
            c_zero("alpha2", "overlap g(x^p): (xi^nu - 1) alpha2 = 0"),
            c_zero("beta1", "overlap g(y^p): (xi^{p nu} - 1) beta1 = 0"),
            c_zero("beta2", "overlap g(y^p): (xi^{p nu} - xi^nu) beta2 = 0 and q !| p-1"),
            c_zero("gamma1", "overlap g(xy): (xi^nu - 1) gamma1 = 0"),
            pow_cond("gamma2", "alpha1", "alpha1*gamma2 - gamma2^p = 0",
                     "overlap x^(p-1)(xy): [x^p, y] = (ad_L x)^p (y)"),
            c_prod_zero("beta2", "gamma2", "overlap x(y^p): [x, y^p] = (x)(ad_R y)^p")};
        e.build = c23_build(0, "nu", 0);
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C2b";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_1^eps, y in V_1^{chi^nu}, q | p-1";
        e.params = c23_params;
        e.params.push_back({"nu", ParamSpec::Domain::Int, "0 < nu < q"});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams& ip) {
                long nu = ip.count("nu") ? ip.at("nu") : 1;
                return div(c.q, c.p - 1) && nu > 0 && nu < c.q;
            },
            "requires q | p-1 and 0 < nu < q");
        e.root_orders = roots_q();
        e.constraints = {
            c_zero("alpha2", "overlap g(x^p): (xi^nu - 1) alpha2 = 0"),
            c_zero("beta1", "overlap g(y^p): (xi^{p nu} - 1) beta1 = 0"),
            c_zero("gamma1", "overlap g(xy): (xi^nu - 1) gamma1 = 0"),
            pow_cond("gamma2", "alpha1", "alpha1*gamma2 - gamma2^p = 0",
                     "overlap x^(p-1)(xy): [x^p, y] = (ad_L x)^p (y)"),
            c_prod_zero("beta2", "gamma2", "overlap x(y^p): [x, y^p] = (x)(ad_R y)^p")};
        e.build = c23_build(0, "nu", 0);
        add(e);
    }

    // C3: g x = xi x g, g y = xi^mu y g.
    auto c3_entry = [&](const char* id, const char* desc, Adm adm,
                        std::vector<Constraint> cons, bool mu_param, long mu_fixed) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = desc;
        e.params = c23_params;
        if (mu_param) e.params.push_back({"mu", ParamSpec::Domain::Int, "1 < mu < q"});
        e.admissible = std::move(adm);
        e.root_orders = roots_q();
        e.constraints = std::move(cons);
        e.build = c23_build(1, mu_param ? "mu" : nullptr, mu_fixed);
        add(e);
    };
    c3_entry("C3a1", "x in V_1^chi, y in V_1^eps, q | p-1",
             adm_pred([](const CasePrimes& c,
                         const IntParams&) { return div(c.q, c.p - 1); },
                      "requires q | p-1"),
             {c_zero("alpha2", "overlap g(x^p): (1 - xi^p) alpha2 = 0"),
              c_zero("beta1", "overlap g(y^p): (xi - 1) beta1 = 0"),
              c_zero("gamma2", "overlap g(xy): (1 - xi) gamma2 = 0"),
              c_prod_zero("alpha1", "gamma1", "overlap x^(p-1)(xy)"),
              pow_cond("gamma1", "beta2", "beta2*gamma1 - gamma1^p = 0",
                       "overlap x(y^p): [x, y^p] = (x)(ad_R y)^p")},
             false, 0);
    c3_entry("C3a2", "x in V_1^chi, y in V_1^eps, q !| p-1",
             adm_pred([](const CasePrimes& c,
                         const IntParams&) { return !div(c.q, c.p - 1); },
                      "requires q !| p-1"),
             {c_zero("alpha1", "overlap g(x^p): (xi - xi^p) alpha1 = 0 and q !| p-1"),
              c_zero("alpha2", "overlap g(x^p): (1 - xi^p) alpha2 = 0"),
              c_zero("beta1", "overlap g(y^p): (xi - 1) beta1 = 0"),
              c_zero("gamma2", "overlap g(xy): (1 - xi) gamma2 = 0"),
              c_prod_zero("alpha1", "gamma1", "overlap x^(p-1)(xy)"),
              pow_cond("gamma1", "beta2", "beta2*gamma1 - gamma1^p = 0",
                       "overlap x(y^p): [x, y^p] = (x)(ad_R y)^p")},
             false, 0);
    {
        // C3b: mu = 1, the y^p = y normal form; consistent only when q | p-1.
        CaseEntry e;
        e.id = "C3b";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x, y in V_1^chi (mu = 1), y^p = y";
        e.params = ps({{"alpha1", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.constraints = {
            c_pred("q | p-1", "overlap g(y^p): (xi - xi^p) = 0 is needed for y^p = y",
                   [](const CasePrimes& c, const FieldCtx&, const FieldParams&,
                      const IntParams&) { return div(c.q, c.p - 1); }),
            c_pred("alpha1 = 0 unless q | p-1",
                   "overlap g(x^p): (xi - xi^p) alpha1 = 0",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       return div(c.q, c.p - 1) || P(fp, "alpha1") == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.primitive("y");
            Fq xi = F->root(c.q);
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(xi));
            b.rel(b.G("g") * b.G("y") - (b.G("y") * b.G("g")).scaled(xi));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "alpha1")));
            b.rel(b.pw("y", c.p) - b.G("y"));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
            return b.data;
        };
        add(e);
    }
    auto c3c_adm = [&](int which) {
        return adm_pred(
            [which](const CasePrimes& c, const IntParams& ip) {
                long mu = ip.count("mu") ? ip.at("mu") : 2;
                if (mu < 2 || mu >= c.q) return false;
                bool d1 = div(c.q, c.p - 1);
                bool d2 = div(c.q, c.p - mu);
                bool d3 = div(c.q, c.p * mu - 1);
                switch (which) {
                    case 1: return d1;
                    case 2: return d2 && !d1 && !d3;
                    case 3: return d3 && !d1 && !d2;
                    default: return !d1 && !d2 && !d3;
                }
            },
            which == 1   ? "requires q | p-1 and 1 < mu < q"
            : which == 2 ? "requires q | p-mu, q !| p-1, q !| p*mu-1"
            : which == 3 ? "requires q | p*mu-1, q !| p-1, q !| p-mu"
                         : "requires q !| p-1, q !| p-mu, q !| p*mu-1");
    };
    c3_entry("C3c1", "x in V_1^chi, y in V_1^{chi^mu}, q | p-1", c3c_adm(1),
             {c_zero("alpha2", "overlap g(x^p): (xi^mu - xi^p) alpha2 = 0"),
              c_zero("beta1", "overlap g(y^p): (xi - xi^{p mu}) beta1 = 0"),
              c_zero("gamma1", "overlap g(xy): (xi - xi^{mu+1}) gamma1 = 0"),
              c_zero("gamma2", "overlap g(xy): (xi^mu - xi^{mu+1}) gamma2 = 0")},
             true, 0);
    c3_entry("C3c2", "x in V_1^chi, y in V_1^{chi^mu}, q | p-mu", c3c_adm(2),
             {c_zero("alpha1", "overlap g(x^p): (xi - xi^p) alpha1 = 0"),
              c_zero("beta1", "overlap g(y^p): (xi - xi^{p mu}) beta1 = 0"),
              c_zero("beta2", "overlap g(y^p): (xi^mu - xi^{p mu}) beta2 = 0"),
              c_zero("gamma1", "overlap g(xy): (xi - xi^{mu+1}) gamma1 = 0"),
              c_zero("gamma2", "overlap g(xy): (xi^mu - xi^{mu+1}) gamma2 = 0")},
             true, 0);
    c3_entry("C3c3", "x in V_1^chi, y in V_1^{chi^mu}, q | p*mu-1", c3c_adm(3),
             {c_zero("alpha1", "overlap g(x^p): (xi - xi^p) alpha1 = 0"),
              c_zero("alpha2", "overlap g(x^p): (xi^mu - xi^p) alpha2 = 0"),
              c_zero("beta2", "overlap g(y^p): (xi^mu - xi^{p mu}) beta2 = 0"),
              c_zero("gamma1", "overlap g(xy): (xi - xi^{mu+1}) gamma1 = 0"),
              c_zero("gamma2", "overlap g(xy): (xi^mu - xi^{mu+1}) gamma2 = 0")},
             true, 0);
    c3_entry("C3c4", "x in V_1^chi, y in V_1^{chi^mu}, generic", c3c_adm(4),
             {c_zero("alpha1", "overlap g(x^p)"), c_zero("alpha2", "overlap g(x^p)"),
              c_zero("beta1", "overlap g(y^p)"), c_zero("beta2", "overlap g(y^p)"),
              c_zero("gamma1", "overlap g(xy)"), c_zero("gamma2", "overlap g(xy)")},
             true, 0);

    // C4: Delta(x) = x (x) 1 + g (x) x, Delta(y) = y (x) 1 + g^mu (x) y.
    {
        CaseEntry e;
        e.id = "C4a1";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in V_1^eps, q | p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda3", Z2},
                       {"lambda4", KF},
                       {"lambda5", Z2},
                       {"lambda6", KF},
                       {"lambda7", KF}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
            "requires q | p-1");
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", "g^p = g forces [g,x] = [g^p,x] = p g^(p-1)[g,x] = 0"),
            c_prod_zero("lambda3", "lambda6", "overlap x^(p-1)(xy)"),
            c_prod_zero("lambda3", "lambda7", "overlap x^(p-1)(xy)"),
            c_pred("lambda6*(lambda5 - lambda6^(p-1)) = 0", "overlap x(y^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l6 = P(fp, "lambda6");
                       return F.mul(l6, F.sub(P(fp, "lambda5"), F.pow(l6, c.p - 1))) == F.zero();
                   }),
            c_pred("lambda7*(lambda5 - lambda6^(p-1)) = 0", "overlap x(y^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l6 = P(fp, "lambda6");
                       return F.mul(P(fp, "lambda7"),
                                    F.sub(P(fp, "lambda5"), F.pow(l6, c.p - 1))) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.primitive("y");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(P(fp, "lambda1")));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda3")) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda4")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(P(fp, "lambda5")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(P(fp, "lambda6")) -
                  (b.one() - b.G("g")).scaled(P(fp, "lambda7")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C4a2";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in V_1^eps, q !| p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda5", Z2},
                       {"lambda6", Z2}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return !div(c.q, c.p - 1); },
            "requires q !| p-1");
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", kGroupOverlapAnchor),
            c_pred("lambda5*(lambda4 - lambda5^(p-1)) = 0", "overlap x(y^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l5 = P(fp, "lambda5");
                       return F.mul(l5, F.sub(P(fp, "lambda4"), F.pow(l5, c.p - 1))) == F.zero();
                   }),
            c_pred("lambda6*(lambda4 - lambda5^(p-1)) = 0", "overlap x(y^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l5 = P(fp, "lambda5");
                       return F.mul(P(fp, "lambda6"),
                                    F.sub(P(fp, "lambda4"), F.pow(l5, c.p - 1))) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.primitive("y");
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(F->pow(l1, c.p - 1)) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda3")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(P(fp, "lambda4")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(P(fp, "lambda5")) -
                  (b.one() - b.G("g")).scaled(P(fp, "lambda6")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C4b1";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x, y in V_g^eps (mu = 1), q | p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", KF},
                       {"lambda5", KF},
                       {"lambda6", KF},
                       {"lambda7", Z2},
                       {"lambda8", KF},
                       {"lambda9", Z2}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
            "requires q | p-1");
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", "g^p = g forces [g,x] = 0"),
            c_zero("lambda2", "g^p = g forces [g,y] = 0"),
            c_pred("q | 2 or lambda3*lambda9 = 0",
                   "overlap x^(p-1)(xy); vacuous when the (1-g^2) tail dies",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       return 2 % c.q == 0 ||
                              F.mul(P(fp, "lambda3"), P(fp, "lambda9")) == F.zero();
                   }),
            c_pred("q | 2 or lambda7*lambda9 = 0",
                   "overlap x(y^p); vacuous when the (1-g^2) tail dies",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       return 2 % c.q == 0 ||
                              F.mul(P(fp, "lambda7"), P(fp, "lambda9")) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.skew("y", b.w("g"));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(P(fp, "lambda1")));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(P(fp, "lambda2")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda3")) -
                  b.G("y").scaled(P(fp, "lambda4")) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda5")));
            b.rel(b.pw("y", c.p) - b.G("x").scaled(P(fp, "lambda6")) -
                  b.G("y").scaled(P(fp, "lambda7")) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda8")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") + b.G("y").scaled(P(fp, "lambda1")) -
                  b.G("x").scaled(P(fp, "lambda2")) -
                  (b.one() - b.pw("g", 2)).scaled(P(fp, "lambda9")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C4b2";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x, y in V_g^eps (mu = 1), q !| p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda5", Z2}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return !div(c.q, c.p - 1); },
            "requires q !| p-1");
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1", kGroupOverlapAnchor),
                         c_zero("lambda2", kGroupOverlapAnchor)};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.skew("y", b.w("g"));
            Fq l1 = P(fp, "lambda1"), l2 = P(fp, "lambda2");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l2));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(F->pow(l1, c.p - 1)) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda3")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(F->pow(l2, c.p - 1)) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda4")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") + b.G("y").scaled(l1) -
                  b.G("x").scaled(l2) - (b.one() - b.pw("g", 2)).scaled(P(fp, "lambda5")));
            return b.data;
        };
        add(e);
    }
    auto c4c_adm = [&](bool want_div) {
        return adm_pred(
            [want_div](const CasePrimes& c, const IntParams& ip) {
                long mu = ip.count("mu") ? ip.at("mu") : 2;
                if (mu < 2 || mu >= c.q) return false;
                return div(c.q, c.p - 1) == want_div;
            },
            want_div ? "requires q | p-1 and 1 < mu < q" : "requires q !| p-1 and 1 < mu < q");
    };
    {
        CaseEntry e;
        e.id = "C4c1";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in V_{g^mu}^eps, q | p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda5", KF},
                       {"lambda6", Z2},
                       {"lambda7", KF}},
                      {{"mu", "1 < mu < q"}});
        e.admissible = c4c_adm(true);
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", "g^p = g forces [g,x] = 0"),
            c_zero("lambda2", "g^p = g forces [g,y] = 0"),
            c_pred("q | mu+1 or lambda3*lambda6 = 0",
                   "overlap x^(p-1)(xy); vacuous when the (1-g^(mu+1)) tail dies",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams& ip) {
                       return (ip.at("mu") + 1) % c.q == 0 ||
                              F.mul(P(fp, "lambda3"), P(fp, "lambda6")) == F.zero();
                   }),
            c_pred("q | mu+1 or lambda3*lambda4 = 0",
                   "overlap x(y^p); vacuous when the (1-g^(mu+1)) tail dies",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams& ip) {
                       return (ip.at("mu") + 1) % c.q == 0 ||
                              F.mul(P(fp, "lambda3"), P(fp, "lambda4")) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams& ip, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            long mu = ip.at("mu");
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.skew("y", b.w("g", mu));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(P(fp, "lambda1")));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", mu + 1)).scaled(P(fp, "lambda2")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") +
                  b.G("y").scaled(F.get()->mul(P(fp, "lambda1"), F->from_int(mu))) -
                  b.G("x").scaled(P(fp, "lambda2")) -
                  (b.one() - b.pw("g", mu + 1)).scaled(P(fp, "lambda3")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(P(fp, "lambda4")) -
                  (b.one() - b.pw("g", mu)).scaled(P(fp, "lambda5")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda6")) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda7")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C4c2";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in V_{g^mu}^eps, q !| p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda5", Z2}},
                      {{"mu", "1 < mu < q"}});
        e.admissible = c4c_adm(false);
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1", kGroupOverlapAnchor),
                         c_zero("lambda2", "overlap g(xy): lambda2 (xi-coefficients) = 0")};
        e.build = [](const CasePrimes& c, const IntParams& ip, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            long mu = ip.at("mu");
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.skew("y", b.w("g", mu));
            Fq l1 = P(fp, "lambda1"), l2 = P(fp, "lambda2");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", mu + 1)).scaled(l2));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") +
                  b.G("y").scaled(F->mul(l1, F->from_int(mu))) - b.G("x").scaled(l2) -
                  (b.one() - b.pw("g", mu + 1)).scaled(P(fp, "lambda3")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(scaled_pow(*F, mu, l2, c.p - 1)) -
                  (b.one() - b.pw("g", (c.p * mu) % c.q)).scaled(P(fp, "lambda4")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(F->pow(l1, c.p - 1)) -
                  (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda5")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C5a";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_1^eps, y in V_{g^nu}^eps, q | p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda5", Z2},
                       {"lambda6", KF}},
                      {{"nu", "0 < nu < q"}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams& ip) {
                long nu = ip.count("nu") ? ip.at("nu") : 1;
                return div(c.q, c.p - 1) && nu > 0 && nu < c.q;
            },
            "requires q | p-1 and 0 < nu < q");
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", "g^nu = g^{p nu} forces [g^nu, y] = 0"),
            c_pred("lambda3*(lambda2 - lambda3^(p-1)) = 0", "overlap x^(p-1)(xy)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l3 = P(fp, "lambda3");
                       return F.mul(l3, F.sub(P(fp, "lambda2"), F.pow(l3, c.p - 1))) == F.zero();
                   }),
            c_pred("lambda4*(lambda2 - lambda3^(p-1)) = 0", "overlap x^(p-1)(xy)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l3 = P(fp, "lambda3");
                       return F.mul(P(fp, "lambda4"),
                                    F.sub(P(fp, "lambda2"), F.pow(l3, c.p - 1))) == F.zero();
                   }),
            c_prod_zero("lambda5", "lambda3", "overlap x(y^p)"),
            c_prod_zero("lambda5", "lambda4", "overlap x(y^p)")};
        e.build = [](const CasePrimes& c, const IntParams& ip, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            long nu = ip.at("nu");
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.skew("y", b.w("g", nu));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", nu + 1)).scaled(P(fp, "lambda1")));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(P(fp, "lambda5")) -
                  (b.one() - b.pw("g", (c.p * nu) % c.q)).scaled(P(fp, "lambda6")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("y").scaled(P(fp, "lambda3")) -
                  (b.one() - b.pw("g", nu)).scaled(P(fp, "lambda4")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "C5b";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_1^eps, y in V_{g^nu}^eps, q !| p-1";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda4", Z2},
                       {"lambda7", Z2}},
                      {{"nu", "0 < nu < q"}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams& ip) {
                long nu = ip.count("nu") ? ip.at("nu") : 1;
                return !div(c.q, c.p - 1) && nu > 0 && nu < c.q;
            },
            "requires q !| p-1 and 0 < nu < q");
        e.root_orders = roots_none();
        e.constraints = {
            c_zero("lambda1", kGroupOverlapAnchor),
            c_pred("lambda3*(lambda2 - lambda3^(p-1)) = 0", "overlap x^(p-1)(xy)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l3 = P(fp, "lambda3");
                       return F.mul(l3, F.sub(P(fp, "lambda2"), F.pow(l3, c.p - 1))) == F.zero();
                   }),
            c_pred("lambda4*(lambda2 - lambda3^(p-1)) = 0", "overlap x^(p-1)(xy)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l3 = P(fp, "lambda3");
                       return F.mul(P(fp, "lambda4"),
                                    F.sub(P(fp, "lambda2"), F.pow(l3, c.p - 1))) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams& ip, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            long nu = ip.at("nu");
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.skew("y", b.w("g", nu));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("g") - b.pw("g", nu + 1)).scaled(l1));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(scaled_pow(*F, nu, l1, c.p - 1)) -
                  (b.one() - b.pw("g", (c.p * nu) % c.q)).scaled(P(fp, "lambda7")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("y").scaled(P(fp, "lambda3")) -
                  (b.one() - b.pw("g", nu)).scaled(P(fp, "lambda4")));
            return b.data;
        };
        add(e);
    }

    // ----------------------------------------------------------------- D ---
    // G = C_q, R = k[x,y]/(x^p, y^p) with y in R(p): Delta(y) carries a
    // divided-power tail.
    auto d12_build = [](bool twisted) {
        return [twisted](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                         std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 0}, {"x", 1}, {"g", 0}});
            b.data.gens.weights[0] = static_cast<int>(c.p);  // y in R(p)
            b.grouplike("g", c.q);
            b.primitive("x");
            TensorPoly dy = TensorPoly::from_key(F.get(), {b.w("y"), Word{}}, F->one());
            dy += TensorPoly::from_key(F.get(), {Word{}, b.w("y")}, F->one());
            dy += coproduct_tail(TailKind::Omega0, F.get(), b.idx("x"), b.idx("g"), c.p);
            b.coprod("y", dy);
            if (twisted) {
                Fq xi = F->root(c.q);
                b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(xi));
                b.rel(b.G("g") * b.G("y") - (b.G("y") * b.G("g")).scaled(F->pow(xi, c.p)));
            } else {
                b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
                b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            }
            Fq l1 = P(fp, "lambda1");
            b.rel(b.pw("x", c.p) - b.G("x").scaled(l1));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(l1) - b.G("x").scaled(P(fp, "lambda3")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(P(fp, "lambda2")));
            return b.data;
        };
    };
    auto d12_case = [&](const char* id, bool twisted, bool char2,
                        std::vector<Constraint> cons) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = twisted ? "x in V_1^chi, y in R(p)" : "x in V_1^eps, y in R(p)";
        e.params = ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", KF}});
        e.admissible = adm_pred(
            [char2](const CasePrimes& c, const IntParams&) {
                return char2 ? c.p == 2 : c.p > 2;
            },
            char2 ? "requires p = 2" : "requires p > 2");
        e.root_orders = twisted ? roots_q() : roots_none();
        e.constraints = std::move(cons);
        e.build = d12_build(twisted);
        add(e);
    };
    d12_case("D1a", false, true, {c_zero("lambda2", "overlap x(yy): x(yy) = (xy)y")});
    d12_case("D1b", false, false, {c_zero("lambda2", "overlap x(yy^(p-1))")});
    d12_case("D2a", true, true,
             {c_zero("lambda1", "overlap g(xx): (xi^p - xi) lambda1 = 0"),
              c_zero_unless(
                  "lambda3",
                  [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p * c.p - 1); },
                  "q | p^2-1 or lambda3 = 0",
                  "overlap g(yy): (xi^(p^2) - xi) lambda3 = 0"),
              c_zero("lambda2", "overlap g(xy): (xi^(p+1) - xi) lambda2 = 0")});
    d12_case("D2b", true, false,
             {c_zero_unless(
                  "lambda1",
                  [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
                  "q | p-1 or lambda1 = 0",
                  "overlap g(yy): (xi^(p^2) - xi^p) lambda1 = 0"),
              c_zero("lambda2", "overlap g(xy): (xi^(p+1) - xi) lambda2 = 0"),
              c_zero_unless(
                  "lambda3",
                  [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p * c.p - 1); },
                  "q | p^2-1 or lambda3 = 0",
                  "overlap g(yy): (xi^(p^2) - xi) lambda3 = 0")});

    {
        CaseEntry e;
        e.id = "D3a1";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in R(2); p = 2, q = 3";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda6", Z2},
                       {"lambda7", Z2}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return c.p == 2 && c.q == 3; },
            "requires p = 2 and q = 3");
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1", kGroupOverlapAnchor),
                         c_zero("lambda3", "overlap g(yy)")};
        e.force_defaults = [](const CasePrimes&, const FieldCtx& F, FieldParams& fp,
                              const IntParams&, const std::set<std::string>& set) {
            // The lambda1 = 1 normal form fixes lambda3 = 0, lambda6 = 1,
            // lambda7 = 0.
            if (fp.at("lambda1") == F.one()) {
                if (!set.count("lambda6")) fp["lambda6"] = F.one();
                if (!set.count("lambda3")) fp["lambda3"] = F.zero();
                if (!set.count("lambda7")) fp["lambda7"] = F.zero();
            }
        };
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 0}, {"x", 1}, {"g", 0}});
            b.data.gens.weights[0] = 2;
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            TensorPoly dy = TensorPoly::from_key(F.get(), {b.w("y"), Word{}}, F->one());
            dy += TensorPoly::from_key(F.get(), {b.w("g", 2), b.w("y")}, F->one());
            dy += coproduct_tail(TailKind::OmegaTheta, F.get(), b.idx("x"), b.idx("g"), 2, 1);
            b.coprod("y", dy);
            Fq l1 = P(fp, "lambda1"), l2 = P(fp, "lambda2"), l3 = P(fp, "lambda3");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("x") * b.pw("g", 2) + b.G("x") * b.G("g") + b.pw("g", 2) + b.G("g"))
                      .scaled(l1) -
                  (b.G("g") - b.pw("g", 3)).scaled(l3));
            b.rel(b.pw("x", 2) - b.G("x").scaled(l1) - (b.one() - b.pw("g", 2)).scaled(l2));
            b.rel(b.pw("y", 2) - b.G("y").scaled(l1) - (b.G("g") + b.pw("g", 2)).scaled(l2) -
                  b.G("x").scaled(P(fp, "lambda6")) -
                  (b.one() - b.G("g")).scaled(P(fp, "lambda7")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") -
                  b.G("x").scaled(F->add(l1, l3)) -
                  (b.pw("g", 2) + b.pw("g", 3)).scaled(F->mul(l1, l2)));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "D3a2";
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = "x in V_g^eps, y in R(2); p = 2, q > 3";
        e.params = ps({{"lambda1", Z2},
                       {"lambda2", Z2},
                       {"lambda3", Z2},
                       {"lambda5", KF},
                       {"lambda8", KF}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return c.p == 2 && c.q > 3; },
            "requires p = 2 and q > 3");
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda3", "overlap g(xy)"),
                         c_prod_zero("lambda1", "lambda2", "overlap g(xy)"),
                         c_zero("lambda1", "overlap x(yy)"),
                         c_zero("lambda5",
                                "self-overlap y(y^2): [y^2 - rhs, y] = lambda5^2 (1-g^3)(1+g^3) "
                                "and q !| 6")};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 0}, {"x", 1}, {"g", 0}});
            b.data.gens.weights[0] = 2;
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            TensorPoly dy = TensorPoly::from_key(F.get(), {b.w("y"), Word{}}, F->one());
            dy += TensorPoly::from_key(F.get(), {b.w("g", 2), b.w("y")}, F->one());
            dy += coproduct_tail(TailKind::OmegaTheta, F.get(), b.idx("x"), b.idx("g"), 2, 1);
            b.coprod("y", dy);
            Fq l1 = P(fp, "lambda1"), l2 = P(fp, "lambda2"), l3 = P(fp, "lambda3");
            Fq l5 = P(fp, "lambda5"), l8 = P(fp, "lambda8");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g") -
                  (b.G("x") * b.pw("g", 2) + b.G("x") * b.G("g") + b.pw("g", 2) + b.G("g"))
                      .scaled(l1) -
                  (b.G("g") - b.pw("g", 3)).scaled(l3));
            b.rel(b.pw("x", 2) - b.G("x").scaled(l1) - (b.one() - b.pw("g", 2)).scaled(l2));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(F->add(l1, l3)) -
                  (b.pw("g", 2) + b.pw("g", 3)).scaled(F->mul(l1, l2)) -
                  (b.one() - b.pw("g", 3)).scaled(l5));
            b.rel(b.pw("y", 2) - b.G("y").scaled(l1) -
                  (b.G("x") * b.pw("g", 3) + b.G("x")).scaled(F->add(F->mul(l1, l2), l5)) -
                  (b.pw("g", 2) + b.pw("g", 4)).scaled(l2) -
                  (b.one() - b.pw("g", 4)).scaled(l8));
            return b.data;
        };
        add(e);
    }
    auto d3b_case = [&](const char* id, int which) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::P2Q;
        e.group = "C_q";
        e.realization = std::string("x in V_g^eps, y in R(p); p > 2, ") +
                        (which == 1 ? "q | p+1" : which == 2 ? "q | p-1" : "q !| p^2-1");
        if (which == 1)
            e.params = ps({{"nu1", Z2}, {"nu2", KF}});
        else if (which == 2)
            e.params = ps({{"lambda3", Z2}, {"nu1", KF}, {"nu2", KF}});
        else
            e.params = ps({{"lambda3", Z2}, {"nu", KF}});
        e.admissible = adm_pred(
            [which](const CasePrimes& c, const IntParams&) {
                if (c.p <= 2) return false;
                bool dp1 = div(c.q, c.p + 1), dm1 = div(c.q, c.p - 1);
                if (which == 1) return dp1;
                if (which == 2) return dm1 && !dp1;
                return !dp1 && !dm1;
            },
            which == 1 ? "requires p > 2 and q | p+1"
                       : (which == 2 ? "requires p > 2, q | p-1, q !| p+1"
                                     : "requires p > 2 and q !| p^2-1"));
        e.root_orders = roots_none();
        if (which == 2) {
            e.constraints = {c_pred(
                "lambda3*((p-1)!*lambda3^(p-1) + nu1) = 0",
                "overlap y(y^p): [y^p - rhs, y] = lambda3 ((p-1)! lambda3^(p-1) + nu1)(1 - "
                "g^(p+1))",
                [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                   const IntParams&) {
                    Fq l3 = P(fp, "lambda3");
                    Fq fact = F.one();
                    for (long i = 2; i <= c.p - 1; ++i) fact = F.mul(fact, F.from_int(i));
                    Fq inner = F.add(F.mul(fact, F.pow(l3, c.p - 1)), P(fp, "nu1"));
                    return F.mul(l3, inner) == F.zero();
                })};
        } else if (which == 3) {
            e.constraints = {c_zero(
                "lambda3",
                "overlap y(y^p): [y^p - rhs, y] = -(p-1)! lambda3^p (1 - g^(p(p+1))) and "
                "q !| p(p+1)")};
        }
        e.build = [which](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                          std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 0}, {"x", 1}, {"g", 0}});
            b.data.gens.weights[0] = static_cast<int>(c.p);
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            TensorPoly dy = TensorPoly::from_key(F.get(), {b.w("y"), Word{}}, F->one());
            dy += TensorPoly::from_key(F.get(), {b.w("g", c.p % c.q), b.w("y")}, F->one());
            dy += coproduct_tail(TailKind::OmegaTheta, F.get(), b.idx("x"), b.idx("g"), c.p, 1);
            b.coprod("y", dy);
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            b.rel(b.pw("x", c.p));
            if (which == 1) {
                b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x"));
                b.rel(b.pw("y", c.p) - b.G("x").scaled(P(fp, "nu1")) -
                      (b.one() - b.G("g")).scaled(P(fp, "nu2")));
            } else {
                Fq l3 = P(fp, "lambda3");
                NcPoly one_minus = b.one() - b.pw("g", (c.p + 1) % c.q);
                b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - one_minus.scaled(l3));
                Fq fact = F->from_int(static_cast<long long>(1));
                for (long i = 2; i <= c.p - 1; ++i) fact = F->mul(fact, F->from_int(i));
                NcPoly jac = (one_minus.pow(c.p - 1) * b.G("x"))
                                 .scaled(F->mul(fact, F->pow(l3, c.p - 1)));
                if (which == 2)
                    b.rel(b.pw("y", c.p) - jac - b.G("x").scaled(P(fp, "nu1")) -
                          (b.one() - b.G("g")).scaled(P(fp, "nu2")));
                else
                    b.rel(b.pw("y", c.p) - jac -
                          (b.one() - b.pw("g", (c.p * c.p) % c.q)).scaled(P(fp, "nu")));
            }
            return b.data;
        };
        add(e);
    };
    d3b_case("D3b1", 1);
    d3b_case("D3b2", 2);
    d3b_case("D3b3", 3);

    // ---------------------------------------------------------------- AA ---
    {
        CaseEntry e;
        e.id = "AA1";
        e.dclass = DimClass::PQ2;
        e.group = "C_pq";
        e.realization = "x in V_g^chi, R = k[x]/(x^q)";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g"));
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            b.rel(b.pw("x", c.q) - (b.one() - b.pw("g", c.q)).scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "AA2";
        e.dclass = DimClass::PQ2;
        e.group = "C_pq";
        e.realization = "x in V_{g^p}^chi, R = k[x]/(x^q)";
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams&,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.p * c.q);
            b.skew("x", b.w("g", c.p));
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->pow(F->root(c.q), c.p)));
            b.rel(b.pw("x", c.q));
            return b.data;
        };
        add(e);
    }

    // --------------------------------------------------------------- AB1 ---
    {
        CaseEntry e;
        e.id = "AB1a";
        e.dclass = DimClass::PQ2;
        e.group = "C_{q^2}";
        e.realization = "x in V_1^eps";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q * c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "AB1b";
        e.dclass = DimClass::PQ2;
        e.group = "C_{q^2}";
        e.realization = "x in V_g^eps";
        e.params = ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1", kGroupOverlapAnchor)};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q * c.q);
            b.skew("x", b.w("g"));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(l1) -
                  (b.one() - b.pw("g", c.p % (c.q * c.q))).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    }
    auto ab1c_case = [&](const char* id, bool divides_case) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQ2;
        e.group = "C_{q^2}";
        e.realization = divides_case ? "x in V_{g^q}^eps, q | p-1" : "x in V_{g^q}^eps, q !| p-1";
        e.params = divides_case ? ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", KF}})
                                : ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_pred(
            [divides_case](const CasePrimes& c, const IntParams&) {
                return div(c.q, c.p - 1) == divides_case;
            },
            divides_case ? "requires q | p-1" : "requires q !| p-1");
        e.root_orders = roots_none();
        if (divides_case)
            e.constraints = {c_zero("lambda1", "g^{pq} = g^q forces [g^{pq}, x] = 0")};
        else
            e.constraints = {c_zero("lambda1", kGroupOverlapAnchor)};
        e.build = [divides_case](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                                 std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            long N = c.q * c.q;
            b.grouplike("g", N);
            b.skew("x", b.w("g", c.q));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", c.q + 1)).scaled(l1));
            if (divides_case)
                b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")) -
                      (b.one() - b.pw("g", (c.p * c.q) % N)).scaled(P(fp, "lambda3")));
            else
                b.rel(b.pw("x", c.p) - b.G("x").scaled(scaled_pow(*F, c.q, l1, c.p - 1)) -
                      (b.one() - b.pw("g", (c.p * c.q) % N)).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    };
    ab1c_case("AB1c1", true);
    ab1c_case("AB1c2", false);
    auto ab1de_case = [&](const char* id, bool full_order) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQ2;
        e.group = "C_{q^2}";
        e.realization = full_order ? "x in V_1^chi, chi of order q^2" : "x in V_1^{chi^q}";
        e.params = ps({{"lambda1", Z2}});
        e.admissible = adm_always();
        e.root_orders = [](const CasePrimes& c) { return std::set<long>{c.q * c.q}; };
        e.constraints = {c_zero_unless(
            "lambda1",
            [full_order](const CasePrimes& c, const IntParams&) {
                return full_order ? div(c.q * c.q, c.p - 1) : div(c.q, c.p - 1);
            },
            full_order ? "q^2 | p-1 or lambda1 = 0" : "q | p-1 or lambda1 = 0",
            "overlap (gx)x^(p-1): lambda1 (zeta^i - zeta^{ip}) = 0")};
        e.build = [full_order](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                               std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q * c.q);
            b.primitive("x");
            Fq zeta = F->root(c.q * c.q);
            Fq scalar = full_order ? zeta : F->pow(zeta, c.q);
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(scalar));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda1")));
            return b.data;
        };
        add(e);
    };
    ab1de_case("AB1d", true);
    ab1de_case("AB1e", false);

    // --------------------------------------------------------------- AB2 ---
    auto ab2_abcd = [&](const char* id, long i_exp, long j_exp) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQ2;
        e.group = "C_q x C_q";
        e.realization =
            "x in V_1^{chi^" + std::to_string(i_exp) + " x chi^" + std::to_string(j_exp) + "}";
        e.params = ps({{"lambda1", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        if (i_exp != 0 || j_exp != 0)
            e.constraints = {c_zero_unless(
                "lambda1",
                [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
                "q | p-1 or lambda1 = 0", "overlap (gx)x^(p-1)")};
        e.build = [i_exp, j_exp](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                                 std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}, {"h", 0}});
            b.grouplike("g", c.q);
            b.grouplike("h", c.q);
            b.primitive("x");
            Fq xi = F->root(c.q);
            b.rel(b.G("g") * b.G("h") - b.G("h") * b.G("g"));
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->pow(xi, i_exp)));
            b.rel(b.G("h") * b.G("x") - (b.G("x") * b.G("h")).scaled(F->pow(xi, j_exp)));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda1")));
            return b.data;
        };
        add(e);
    };
    ab2_abcd("AB2a", 0, 0);
    ab2_abcd("AB2b", 0, 1);
    ab2_abcd("AB2c", 1, 0);
    ab2_abcd("AB2d", 1, 1);
    auto ab2_ef = [&](const char* id, bool twisted_h, bool divides_case,
                      std::vector<Constraint> cons) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQ2;
        e.group = "C_q x C_q";
        e.realization = std::string("x in V_g^{eps x chi^") + (twisted_h ? "1" : "0") + "}, " +
                        (divides_case ? "q | p-1" : "q !| p-1");
        e.params = divides_case
                       ? ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", Z2}, {"lambda4", KF}})
                       : ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", Z2}});
        e.admissible = adm_pred(
            [divides_case](const CasePrimes& c, const IntParams&) {
                return div(c.q, c.p - 1) == divides_case;
            },
            divides_case ? "requires q | p-1" : "requires q !| p-1");
        e.root_orders = roots_q();
        e.constraints = std::move(cons);
        e.build = [twisted_h, divides_case](const CasePrimes& c, const IntParams&,
                                            const FieldParams& fp,
                                            std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}, {"h", 0}});
            b.grouplike("g", c.q);
            b.grouplike("h", c.q);
            b.skew("x", b.w("g"));
            Fq xi = F->root(c.q);
            Fq l1 = P(fp, "lambda1"), l2 = P(fp, "lambda2");
            b.rel(b.G("g") * b.G("h") - b.G("h") * b.G("g"));
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            NcPoly hx = b.G("h") * b.G("x");
            NcPoly xh = b.G("x") * b.G("h");
            if (twisted_h) xh = xh.scaled(xi);
            b.rel(hx - xh - (b.G("h") - b.G("h") * b.G("g")).scaled(l2));
            if (divides_case)
                b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda3")) -
                      (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda4")));
            else
                b.rel(b.pw("x", c.p) - b.G("x").scaled(F->pow(l1, c.p - 1)) -
                      (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda3")));
            return b.data;
        };
        add(e);
    };
    ab2_ef("AB2e1", false, true,
           {c_zero("lambda1", "g^p = g forces [g,x] = 0"),
            c_zero("lambda2", "g^p = g forces [h,x]-tail = 0")});
    ab2_ef("AB2f1", true, true,
           {c_zero("lambda1", "g^p = g forces [g,x] = 0"),
            c_pred("lambda2*lambda3 + lambda4 = lambda4*xi + lambda2",
                   "overlap (hx)x^(p-1) = h(x^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq xi = F.root(c.q);
                       Fq lhs = F.add(F.mul(P(fp, "lambda2"), P(fp, "lambda3")),
                                      P(fp, "lambda4"));
                       Fq rhs = F.add(F.mul(P(fp, "lambda4"), xi), P(fp, "lambda2"));
                       return lhs == rhs;
                   })});
    ab2_ef("AB2e2", false, false,
           {c_zero("lambda1", kGroupOverlapAnchor),
            c_zero("lambda2", kGroupOverlapAnchor)});
    ab2_ef("AB2f2", true, false,
           {c_zero("lambda1", kGroupOverlapAnchor),
            c_zero("lambda2", "overlap (hx)x^(p-1) = h(x^p)"),
            c_zero("lambda3", "overlap (hx)x^(p-1): (xi^p - xi) lambda3 = 0")});

    // ---------------------------------------------------------------- AC ---
    {
        CaseEntry e;
        e.id = "AC1";
        e.dclass = DimClass::PQ2;
        e.group = "C_q";
        e.realization = "x in V_g^chi, y in V_1^eps; R = k[x,y]/(x^q, y^p)";
        e.params = ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.constraints = {
            c_zero("lambda3", "overlap g(xy): (xi - xi) ... forces the (1-g) tail away"),
            c_pred("lambda2^p - lambda1*lambda2 = 0", "overlap x(y^p)",
                   [](const CasePrimes& c, const FieldCtx& F, const FieldParams& fp,
                      const IntParams&) {
                       Fq l2 = P(fp, "lambda2");
                       return F.sub(F.pow(l2, c.p), F.mul(P(fp, "lambda1"), l2)) == F.zero();
                   })};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 1}, {"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            b.primitive("y");
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            b.rel(b.pw("x", c.q));
            b.rel(b.pw("y", c.p) - b.G("y").scaled(P(fp, "lambda1")));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(P(fp, "lambda2")) -
                  (b.one() - b.G("g")).scaled(P(fp, "lambda3")));
            return b.data;
        };
        add(e);
    }
    // ---------------------------------------------------------------- AD ---
    {
        CaseEntry e;
        e.id = "AD";
        e.dclass = DimClass::PQ2;
        e.group = "C_q";
        e.realization = "x in V_g^chi, y in R(q); Delta(y) carries the theta tail";
        e.params = ps({{"lambda1", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"y", 0}, {"x", 1}, {"g", 0}});
            b.data.gens.weights[0] = static_cast<int>(c.q);  // y in R(q)
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            TensorPoly dy = TensorPoly::from_key(F.get(), {b.w("y"), Word{}}, F->one());
            dy += TensorPoly::from_key(F.get(), {Word{}, b.w("y")}, F->one());
            dy += coproduct_tail(TailKind::ThetaQ, F.get(), b.idx("x"), b.idx("g"), c.q);
            b.coprod("y", dy);
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            b.rel(b.G("g") * b.G("y") - b.G("y") * b.G("g"));
            b.rel(b.G("x") * b.G("y") - b.G("y") * b.G("x") - b.G("x").scaled(l1));
            b.rel(b.pw("x", c.q));
            // y^p - (q lambda1)^(p-1) y: the x(y^p) overlap needs
            // [x, y^p] = (x)(ad_R y)^p = lambda1^p x, so y^p = 0 only lifts
            // the lambda1 = 0 class.
            b.rel(b.pw("y", c.p) - b.G("y").scaled(scaled_pow(*F, c.q, l1, c.p - 1)));
            return b.data;
        };
        add(e);
    }

    // ---------------------------------------------------------------- BA ---
    auto ba_char = [&](const char* id, int pow_kind) {
        // pow_kind: 0 -> eps, 1 -> theta, 2 -> theta^q, 3 -> theta^r.
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQR;
        e.group = "C_qr";
        e.realization = pow_kind == 0   ? "x in V_1^eps"
                        : pow_kind == 1 ? "x in V_1^chi"
                        : pow_kind == 2 ? "x in V_1^{chi^q}"
                                        : "x in V_1^{chi^r}";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = pow_kind == 0
                            ? roots_none()
                            : std::function<std::set<long>(const CasePrimes&)>(
                                  [](const CasePrimes& c) { return std::set<long>{c.q * c.r}; });
        if (pow_kind != 0) {
            e.constraints = {c_zero_unless(
                "lambda",
                [pow_kind](const CasePrimes& c, const IntParams&) {
                    long ord = pow_kind == 1 ? c.q * c.r : (pow_kind == 2 ? c.r : c.q);
                    return div(ord, c.p - 1);
                },
                pow_kind == 1   ? "qr | p-1 or lambda = 0"
                : pow_kind == 2 ? "r | p-1 or lambda = 0"
                                : "q | p-1 or lambda = 0",
                "overlap (gx)x^(p-1): lambda (theta^i - theta^{ip}) = 0")};
        }
        e.build = [pow_kind](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                             std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q * c.r);
            b.primitive("x");
            if (pow_kind == 0) {
                b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            } else {
                Fq theta = F->root(c.q * c.r);
                long e2 = pow_kind == 1 ? 1 : (pow_kind == 2 ? c.q : c.r);
                b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->pow(theta, e2)));
            }
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    };
    ba_char("BA1", 0);
    ba_char("BA2", 1);
    ba_char("BA3", 2);
    ba_char("BA4", 3);
    auto ba_skew = [&](const char* id, long deg_exp_kind, bool divides_case) {
        // deg_exp_kind: 1 -> g, 2 -> g^q, 3 -> g^r.
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQR;
        e.group = "C_qr";
        e.realization = deg_exp_kind == 1   ? "x in V_g^eps"
                        : deg_exp_kind == 2 ? "x in V_{g^q}^eps"
                                            : "x in V_{g^r}^eps";
        e.params = divides_case ? ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", KF}})
                                : ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_pred(
            [deg_exp_kind, divides_case](const CasePrimes& c, const IntParams&) {
                long ord = deg_exp_kind == 1 ? c.q * c.r : (deg_exp_kind == 2 ? c.r : c.q);
                return div(ord, c.p - 1) == divides_case;
            },
            divides_case ? "requires (order of the coacting power) | p-1"
                         : "requires (order of the coacting power) !| p-1");
        e.root_orders = roots_none();
        if (divides_case)
            e.constraints = {c_zero("lambda1", "the coacting power is fixed by p, so the "
                                               "commutator tail dies")};
        else
            e.constraints = {c_zero("lambda1", kGroupOverlapAnchor)};
        e.build = [deg_exp_kind, divides_case](const CasePrimes& c, const IntParams&,
                                               const FieldParams& fp,
                                               std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            long N = c.q * c.r;
            long s = deg_exp_kind == 1 ? 1 : (deg_exp_kind == 2 ? c.q : c.r);
            b.grouplike("g", N);
            b.skew("x", b.w("g", s));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", s + 1)).scaled(l1));
            if (divides_case)
                b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")) -
                      (b.one() - b.pw("g", (c.p * s) % N)).scaled(P(fp, "lambda3")));
            else
                b.rel(b.pw("x", c.p) - b.G("x").scaled(scaled_pow(*F, s, l1, c.p - 1)) -
                      (b.one() - b.pw("g", (c.p * s) % N)).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    };
    ba_skew("BA5a", 1, true);
    ba_skew("BA5b", 1, false);
    ba_skew("BA6a", 2, true);
    ba_skew("BA6b", 2, false);
    ba_skew("BA7a", 3, true);
    ba_skew("BA7b", 3, false);

    // ---------------------------------------------------------------- BB ---
    auto bb_case = [&](const char* id, bool twisted) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQR;
        e.group = "Z_q x| Z_r";
        e.realization = twisted ? "x in V_1^chi" : "x in V_1^eps";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_pred(
            [](const CasePrimes& c, const IntParams&) { return div(c.r, c.q - 1); },
            "the group Z_q x| Z_r requires r | q-1");
        e.root_orders = twisted ? std::function<std::set<long>(const CasePrimes&)>(
                                      [](const CasePrimes& c) { return std::set<long>{c.r}; })
                                : roots_none();
        if (twisted)
            e.constraints = {c_zero_unless(
                "lambda", [](const CasePrimes& c, const IntParams&) { return div(c.r, c.p - 1); },
                "r | p-1 or lambda = 0", "overlap (gx)x^(p-1): lambda (xi - xi^p) = 0")};
        e.build = [twisted](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                            std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}, {"h", 0}});
            long t = least_residue_of_order(c.r, c.q);
            b.grouplike("g", c.r);
            b.grouplike("h", c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("h") - b.pw("h", t) * b.G("g"));
            if (twisted)
                b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.r)));
            else
                b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.G("h") * b.G("x") - b.G("x") * b.G("h"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            b.affine_for_semidirect("g", c.q);
            return b.data;
        };
        add(e);
    };
    bb_case("BB1", false);
    bb_case("BB2", true);

    // ---------------------------------------------------------------- CA ---
    {
        CaseEntry e;
        e.id = "CA1";
        e.dclass = DimClass::PQ;
        e.group = "C_q";
        e.realization = "x in V_1^eps";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_none();
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g"));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    {
        CaseEntry e;
        e.id = "CA2";
        e.dclass = DimClass::PQ;
        e.group = "C_q";
        e.realization = "x in V_1^chi";
        e.params = ps({{"lambda", Z2}});
        e.admissible = adm_always();
        e.root_orders = roots_q();
        e.constraints = {c_zero_unless(
            "lambda", [](const CasePrimes& c, const IntParams&) { return div(c.q, c.p - 1); },
            "q | p-1 or lambda = 0", "overlap (gx)x^(p-1): lambda (xi - xi^p) = 0")};
        e.build = [](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                     std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.primitive("x");
            b.rel(b.G("g") * b.G("x") - (b.G("x") * b.G("g")).scaled(F->root(c.q)));
            b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda")));
            return b.data;
        };
        add(e);
    }
    auto ca3_case = [&](const char* id, bool divides_case) {
        CaseEntry e;
        e.id = id;
        e.dclass = DimClass::PQ;
        e.group = "C_q";
        e.realization = divides_case ? "x in V_g^eps, q | p-1" : "x in V_g^eps, q !| p-1";
        e.params = divides_case ? ps({{"lambda1", Z2}, {"lambda2", Z2}, {"lambda3", KF}})
                                : ps({{"lambda1", Z2}, {"lambda2", KF}});
        e.admissible = adm_pred(
            [divides_case](const CasePrimes& c, const IntParams&) {
                return div(c.q, c.p - 1) == divides_case;
            },
            divides_case ? "requires q | p-1" : "requires q !| p-1");
        e.root_orders = roots_none();
        e.constraints = {c_zero("lambda1", divides_case ? "g^p = g forces [g,x] = 0"
                                                        : kGroupOverlapAnchor)};
        e.build = [divides_case](const CasePrimes& c, const IntParams&, const FieldParams& fp,
                                 std::shared_ptr<const FieldCtx> F) {
            CB b(F, {{"x", 1}, {"g", 0}});
            b.grouplike("g", c.q);
            b.skew("x", b.w("g"));
            Fq l1 = P(fp, "lambda1");
            b.rel(b.G("g") * b.G("x") - b.G("x") * b.G("g") -
                  (b.G("g") - b.pw("g", 2)).scaled(l1));
            if (divides_case)
                b.rel(b.pw("x", c.p) - b.G("x").scaled(P(fp, "lambda2")) -
                      (b.one() - b.G("g")).scaled(P(fp, "lambda3")));
            else
                b.rel(b.pw("x", c.p) - b.G("x").scaled(F->pow(l1, c.p - 1)) -
                      (b.one() - b.pw("g", c.p % c.q)).scaled(P(fp, "lambda2")));
            return b.data;
        };
        add(e);
    };
    ca3_case("CA3a", true);
    ca3_case("CA3b", false);

    return out;
}

}  // namespace

std::string to_string(DimClass d) {
    switch (d) {
        case DimClass::P2Q: return "p2q";
        case DimClass::PQ2: return "pq2";
        case DimClass::PQR: return "pqr";
        case DimClass::PQ: return "pq";
    }
    return "?";
}

const std::vector<CaseEntry>& all_cases() { return cases_storage(); }

const CaseEntry& find_case(const std::string& id) {
    for (auto& e : all_cases())
        if (e.id == id) return e;
    throw Error("unknown case id: " + id);
}

std::pair<long, long> CaseEntry::int_range(const std::string& name,
                                           const CasePrimes& primes) const {
    if (name == "mu") return {2, primes.q - 1};
    if (name == "nu") return {1, primes.q - 1};
    throw Error("unknown integer parameter " + name);
}

std::map<std::string, Fq> scalar_bindings(const FieldCtx& F, const CasePrimes& primes) {
    std::map<std::string, Fq> out;
    out["w"] = F.generator();
    if (primes.q > 0 && F.has_root(primes.q)) out["xi"] = F.root(primes.q);
    if (primes.q > 0 && F.has_root(primes.q * primes.q)) out["zeta"] = F.root(primes.q * primes.q);
    if (primes.q > 0 && primes.r > 0 && F.has_root(primes.q * primes.r))
        out["theta"] = F.root(primes.q * primes.r);
    if (primes.r > 0 && F.has_root(primes.r)) out["xi_r"] = F.root(primes.r);
    return out;
}

Instantiation instantiate_typed(const CaseEntry& entry, CasePrimes primes, IntParams ints,
                                std::map<std::string, std::string> raw_field_params,
                                Strictness strictness) {
    // Integer parameters default to the low end of their range.
    for (auto& p : entry.params) {
        if (p.domain != ParamSpec::Domain::Int) continue;
        if (!ints.count(p.name)) ints[p.name] = entry.int_range(p.name, primes).first;
    }
    if (auto why = entry.admissible(primes, ints))
        throw Error("case " + entry.id + " not admissible at p=" + std::to_string(primes.p) +
                    " q=" + std::to_string(primes.q) +
                    (primes.r ? " r=" + std::to_string(primes.r) : "") + ": " + *why);

    Instantiation inst;
    inst.entry = &entry;
    inst.primes = primes;
    inst.int_params = ints;
    inst.field = FieldCtx::make(static_cast<int>(primes.p), entry.root_orders(primes));

    ExprEnv env{inst.field.get(), nullptr, scalar_bindings(*inst.field, primes)};
    std::set<std::string> explicitly_set;
    for (auto& p : entry.params) {
        if (p.domain == ParamSpec::Domain::Int) continue;
        auto it = raw_field_params.find(p.name);
        if (it != raw_field_params.end()) {
            inst.field_params[p.name] = parse_scalar(it->second, env);
            explicitly_set.insert(p.name);
            raw_field_params.erase(it);
        } else {
            inst.field_params[p.name] = inst.field->zero();
            inst.warnings.push_back("parameter " + p.name + " defaults to 0");
        }
    }
    for (auto& [k, v] : raw_field_params)
        throw Error("unknown parameter " + k + "=" + v + " for case " + entry.id);
    entry.force_defaults(primes, *inst.field, inst.field_params, ints, explicitly_set);

    for (auto& p : entry.params) {
        if (p.domain != ParamSpec::Domain::Z2) continue;
        Fq v = inst.field_params.at(p.name);
        if (v != inst.field->zero() && v != inst.field->one())
            throw Error("parameter " + p.name + " must lie in {0,1}");
    }

    for (auto& c : entry.constraints) {
        bool ok = c.pred(primes, *inst.field, inst.field_params, ints);
        inst.constraint_status.emplace_back(c.expr, ok);
        if (!ok && strictness == Strictness::Strict)
            throw Error("constraint violated for case " + entry.id + ": " + c.expr + " [" +
                        c.anchor + "]");
    }

    HopfData data = entry.build(primes, ints, inst.field_params, inst.field);
    inst.H = HopfPresentation::build(std::move(data));
    return inst;
}

Instantiation instantiate(const std::string& id, CasePrimes primes,
                          const std::map<std::string, std::string>& raw_params,
                          Strictness strictness) {
    const CaseEntry& entry = find_case(id);
    IntParams ints;
    std::map<std::string, std::string> raw_fields;
    for (auto& [k, v] : raw_params) {
        bool is_int = false;
        for (auto& p : entry.params)
            if (p.name == k && p.domain == ParamSpec::Domain::Int) is_int = true;
        if (is_int)
            ints[k] = std::stol(v);
        else
            raw_fields[k] = v;
    }
    return instantiate_typed(entry, primes, std::move(ints), std::move(raw_fields), strictness);
}

long long expected_dimension(const std::string& id, CasePrimes primes) {
    return find_case(id).expected_dim(primes);
}

std::vector<std::pair<std::string, std::string>> constraint_report(const std::string& id,
                                                                   CasePrimes primes) {
    (void)primes;
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& c : find_case(id).constraints) out.emplace_back(c.expr, c.anchor);
    return out;
}

SmallestChoice smallest_admissible(const std::string& id) {
    const CaseEntry& e = find_case(id);
    static const std::vector<long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

    // Admissible, and constraint-satisfiable at the all-zero grid point: the
    // smallest primes must support at least one positive instantiation.
    auto zero_point_ok = [&](const CasePrimes& pr, const IntParams& ints) {
        auto F = FieldCtx::make(static_cast<int>(pr.p), e.root_orders(pr));
        FieldParams fp;
        for (auto& p : e.params)
            if (p.domain != ParamSpec::Domain::Int) fp[p.name] = F->zero();
        for (auto& c : e.constraints)
            if (!c.pred(pr, *F, fp, ints)) return false;
        return true;
    };
    auto try_ints = [&](const CasePrimes& pr) -> std::optional<IntParams> {
        IntParams ints;
        const ParamSpec* int_param = nullptr;
        for (auto& p : e.params)
            if (p.domain == ParamSpec::Domain::Int) int_param = &p;
        if (!int_param) {
            if (!e.admissible(pr, ints) && zero_point_ok(pr, ints)) return ints;
            return std::nullopt;
        }
        auto [lo, hi] = e.int_range(int_param->name, pr);
        for (long v = lo; v <= hi; ++v) {
            ints[int_param->name] = v;
            if (!e.admissible(pr, ints) && zero_point_ok(pr, ints)) return ints;
        }
        return std::nullopt;
    };

    if (e.dclass == DimClass::PQR) {
        std::vector<CasePrimes> cands;
        for (long p : primes)
            for (long q : primes)
                for (long r : primes) {
                    if (p == q || p == r || q == r) continue;
                    cands.push_back({p, q, r});
                }
        std::sort(cands.begin(), cands.end(), [](const CasePrimes& a, const CasePrimes& b) {
            long pa = a.p * a.q * a.r, pb = b.p * b.q * b.r;
            return std::tie(pa, a.p, a.q) < std::tie(pb, b.p, b.q);
        });
        for (auto& pr : cands)
            if (auto ints = try_ints(pr)) return {pr, *ints};
    } else {
        std::vector<CasePrimes> cands;
        for (long p : primes)
            for (long q : primes) {
                if (p == q) continue;
                cands.push_back({p, q, 0});
            }
        std::sort(cands.begin(), cands.end(), [](const CasePrimes& a, const CasePrimes& b) {
            long pa = a.p * a.q, pb = b.p * b.q;
            return std::tie(pa, a.p) < std::tie(pb, b.p);
        });
        for (auto& pr : cands)
            if (auto ints = try_ints(pr)) return {pr, *ints};
    }
    throw Error("no admissible primes found for case " + id);
}

// --- Tables 1-3 -------------------------------------------------------------

std::vector<std::string> table_rows() {
    return {"A", "B1", "B2", "C", "D", "AA", "AB1", "AB2", "AC", "AD", "BA", "BB"};
}

long yd_expected_count(const std::string& row, const CasePrimes& primes) {
    if (row == "A") return 6;
    if (row == "B1") return 2;
    if (row == "B2") return 1;
    if (row == "C") return 4 * primes.q - 1;
    if (row == "D") return 3;
    if (row == "AA") return 2;
    if (row == "AB1") return 5;
    if (row == "AB2") return 6;
    if (row == "AC") return 1;
    if (row == "AD") return 1;
    if (row == "BA") return 7;
    if (row == "BB") return 2;
    throw Error("unknown table row: " + row);
}

std::shared_ptr<const FieldCtx> yd_field(const std::string& row, const CasePrimes& primes) {
    std::set<long> orders;
    if (row == "AB1") orders.insert(primes.q * primes.q);
    else if (row == "BA") orders.insert(primes.q * primes.r);
    else if (row == "BB") orders.insert(primes.r);
    else if (row != "B2") orders.insert(primes.q);
    return FieldCtx::make(static_cast<int>(primes.p), orders);
}

std::vector<YDRealization> enumerate_yd(const std::string& row, const CasePrimes& primes,
                                        std::shared_ptr<const FieldCtx> F) {
    std::vector<YDRealization> out;
    const long p = primes.p, q = primes.q, r = primes.r;
    auto mk1 = [&](GroupSpec grp, const std::string& label, std::vector<long> deg,
                   std::vector<Fq> chi) {
        YDRealization yd;
        yd.group = grp;
        yd.label = label;
        yd.basis.push_back({"x", std::move(deg), std::move(chi)});
        out.push_back(std::move(yd));
    };
    if (row == "A") {
        GroupSpec g = GroupSpec::cyclic(p * q);
        Fq xi = F->root(q);
        mk1(g, "x in V_1^eps", {0}, {F->one()});
        mk1(g, "x in V_1^chi", {0}, {xi});
        mk1(g, "x in V_g^eps", {1}, {F->one()});
        mk1(g, "x in V_{g^p}^eps", {p}, {F->one()});
        mk1(g, "x in V_{g^q}^eps", {q}, {F->one()});
        mk1(g, "x in V_{g^q}^chi", {q}, {xi});
        return out;
    }
    if (row == "B1") {
        long t = least_residue_of_order(q, p);
        GroupSpec g = GroupSpec::semidirect(q, p, t);
        Fq xi = F->root(q);
        mk1(g, "x in V_1^eps", {0, 0}, {F->one(), F->one()});
        mk1(g, "x in V_1^chi", {0, 0}, {xi, F->one()});
        return out;
    }
    if (row == "B2") {
        long t = least_residue_of_order(p, q);
        GroupSpec g = GroupSpec::semidirect(p, q, t);
        mk1(g, "x in V_1^eps", {0, 0}, {F->one(), F->one()});
        return out;
    }
    if (row == "C") {
        GroupSpec g = GroupSpec::cyclic(q);
        Fq xi = F->root(q);
        auto mk2 = [&](const std::string& label, std::vector<long> dx, std::vector<Fq> cx,
                       std::vector<long> dy, std::vector<Fq> cy) {
            YDRealization yd;
            yd.group = g;
            yd.label = label;
            yd.basis.push_back({"x", std::move(dx), std::move(cx)});
            yd.basis.push_back({"y", std::move(dy), std::move(cy)});
            out.push_back(std::move(yd));
        };
        mk2("x, y in V_1^eps", {0}, {F->one()}, {0}, {F->one()});
        for (long nu = 1; nu < q; ++nu)
            mk2("x in V_1^eps, y in V_1^{chi^" + std::to_string(nu) + "}", {0}, {F->one()}, {0},
                {F->pow(xi, nu)});
        for (long mu = 0; mu < q; ++mu)
            mk2("x in V_1^chi, y in V_1^{chi^" + std::to_string(mu) + "}", {0}, {xi}, {0},
                {F->pow(xi, mu)});
        for (long mu = 0; mu < q; ++mu)
            mk2("x in V_g^eps, y in V_{g^" + std::to_string(mu) + "}^eps", {1}, {F->one()}, {mu},
                {F->one()});
        for (long nu = 1; nu < q; ++nu)
            mk2("x in V_1^eps, y in V_{g^" + std::to_string(nu) + "}^eps", {0}, {F->one()}, {nu},
                {F->one()});
        return out;
    }
    if (row == "D") {
        GroupSpec g = GroupSpec::cyclic(q);
        Fq xi = F->root(q);
        auto mkd = [&](const std::string& label, std::vector<long> dx, std::vector<Fq> cx,
                       std::vector<long> dy, std::vector<Fq> cy) {
            YDRealization yd;
            yd.group = g;
            yd.label = label;
            yd.basis.push_back({"x", std::move(dx), std::move(cx)});
            yd.basis.push_back({"y", std::move(dy), std::move(cy)});
            out.push_back(std::move(yd));
        };
        mkd("x in V_1^eps; delta(y) = 1 (x) y, g.y = y", {0}, {F->one()}, {0}, {F->one()});
        mkd("x in V_1^chi; delta(y) = 1 (x) y, g.y = chi(g^p) y", {0}, {xi}, {0},
            {F->pow(xi, p)});
        mkd("x in V_g^eps; delta(y) = g^p (x) y, g.y = y", {1}, {F->one()}, {p % q},
            {F->one()});
        return out;
    }
    if (row == "AA") {
        GroupSpec g = GroupSpec::cyclic(p * q);
        Fq xi = F->root(q);
        mk1(g, "x in V_g^chi", {1}, {xi});
        mk1(g, "x in V_{g^p}^chi", {p}, {F->pow(xi, p)});
        return out;
    }
    if (row == "AB1") {
        GroupSpec g = GroupSpec::cyclic(q * q);
        Fq zeta = F->root(q * q);
        mk1(g, "x in V_1^eps", {0}, {F->one()});
        mk1(g, "x in V_g^eps", {1}, {F->one()});
        mk1(g, "x in V_{g^q}^eps", {q}, {F->one()});
        mk1(g, "x in V_1^chi", {0}, {zeta});
        mk1(g, "x in V_1^{chi^q}", {0}, {F->pow(zeta, q)});
        return out;
    }
    if (row == "AB2") {
        GroupSpec g = GroupSpec::product(q, q);
        Fq xi = F->root(q);
        mk1(g, "x in V_1^{eps x eps}", {0, 0}, {F->one(), F->one()});
        mk1(g, "x in V_1^{eps x chi}", {0, 0}, {F->one(), xi});
        mk1(g, "x in V_1^{chi x eps}", {0, 0}, {xi, F->one()});
        mk1(g, "x in V_1^{chi x chi}", {0, 0}, {xi, xi});
        mk1(g, "x in V_g^{eps x eps}", {1, 0}, {F->one(), F->one()});
        mk1(g, "x in V_g^{eps x chi}", {1, 0}, {F->one(), xi});
        return out;
    }
    if (row == "AC") {
        GroupSpec g = GroupSpec::cyclic(q);
        Fq xi = F->root(q);
        YDRealization yd;
        yd.group = g;
        yd.label = "x in V_g^chi, y in V_1^eps";
        yd.basis.push_back({"x", {1}, {xi}});
        yd.basis.push_back({"y", {0}, {F->one()}});
        out.push_back(std::move(yd));
        return out;
    }
    if (row == "AD") {
        GroupSpec g = GroupSpec::cyclic(q);
        Fq xi = F->root(q);
        YDRealization yd;
        yd.group = g;
        yd.label = "x in V_g^chi, y in R(q)";
        yd.basis.push_back({"x", {1}, {xi}});
        yd.basis.push_back({"y", {0}, {F->one()}});
        out.push_back(std::move(yd));
        return out;
    }
    if (row == "BA") {
        GroupSpec g = GroupSpec::cyclic(q * r);
        Fq theta = F->root(q * r);
        mk1(g, "x in V_1^eps", {0}, {F->one()});
        mk1(g, "x in V_1^chi", {0}, {theta});
        mk1(g, "x in V_1^{chi^q}", {0}, {F->pow(theta, q)});
        mk1(g, "x in V_1^{chi^r}", {0}, {F->pow(theta, r)});
        mk1(g, "x in V_g^eps", {1}, {F->one()});
        mk1(g, "x in V_{g^q}^eps", {q}, {F->one()});
        mk1(g, "x in V_{g^r}^eps", {r}, {F->one()});
        return out;
    }
    if (row == "BB") {
        long t = least_residue_of_order(r, q);
        GroupSpec g = GroupSpec::semidirect(r, q, t);
        Fq xi = F->root(r);
        mk1(g, "x in V_1^eps", {0, 0}, {F->one(), F->one()});
        mk1(g, "x in V_1^chi", {0, 0}, {xi, F->one()});
        return out;
    }
    throw Error("unknown table row: " + row);
}

}  // namespace hopfforge::catalog
