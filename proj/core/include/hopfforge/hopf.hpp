#pragma once

#include <set>
#include <unordered_map>

#include "hopfforge/linalg.hpp"
#include "hopfforge/rewrite.hpp"

namespace hopfforge {

// Generators, relations, and coalgebra assignments for one Hopf algebra
// presentation, before orientation.
struct HopfData {
    std::shared_ptr<const FieldCtx> field;
    GenSet gens;
    std::vector<NcPoly> relations;
    ReductionOrder order;
    std::vector<int> grouplike_gens;
    std::map<int, long> grouplike_orders;  // generator -> N with g^N = 1
    std::map<int, TensorPoly> coproduct;   // rank 2, one entry per generator
    std::map<int, Fq> counit;
    // When the oriented system is not confluent, run bounded completion and
    // work in the honest (possibly smaller) quotient.
    bool complete_if_needed = false;
    int completion_bound = 64;
};

// A validated presentation: oriented rewriting system, confluence report,
// and the normal-word basis. Immutable after build(); checks are pure.
class HopfPresentation {
  public:
    static HopfPresentation build(HopfData data, uint64_t basis_cap = 1'000'000);

    const FieldCtx& F() const { return *data_.field; }
    const std::shared_ptr<const FieldCtx>& field() const { return data_.field; }
    const GenSet& gens() const { return data_.gens; }
    const RewriteSystem& sys() const { return sys_; }
    const std::vector<NcPoly>& relations() const { return data_.relations; }
    const ConfluenceReport& confluence() const { return confluence_; }
    bool confluent() const { return confluence_.all_resolvable(); }
    const NormalBasis& basis() const { return basis_; }
    size_t dim() const { return basis_.words.size(); }
    bool valid() const { return confluent() && basis_.finite && !basis_.truncated; }
    bool completed() const { return completed_; }

    const std::vector<int>& grouplike_gens() const { return data_.grouplike_gens; }
    long grouplike_order(int gen) const { return data_.grouplike_orders.at(gen); }
    bool is_grouplike_gen(int gen) const { return data_.grouplike_orders.count(gen) != 0; }
    const TensorPoly& coproduct(int gen) const { return data_.coproduct.at(gen); }
    Fq counit_of_gen(int gen) const { return data_.counit.at(gen); }

    size_t index_of(const Word& w) const;
    std::vector<Fq> coords(const NcPoly& p) const;  // reduces, then expands in the basis

    Fq counit(const NcPoly& p) const;
    // Reduced coproduct of a normal word / polynomial, memoized per word.
    TensorPoly delta_word(const Word& w) const;
    TensorPoly delta(const NcPoly& p) const;

    bool has_antipode() const { return !antipode_.empty(); }
    const std::vector<NcPoly>& antipode() const;
    void set_antipode(std::vector<NcPoly> images) { antipode_ = std::move(images); }
    // S on a word, extended antimultiplicatively; reduced.
    NcPoly antipode_word(const Word& w) const;

    // Inverse of a monomial of group-like letters.
    NcPoly group_word_inverse(const Word& w) const;

  private:
    HopfData data_;
    RewriteSystem sys_;
    ConfluenceReport confluence_;
    NormalBasis basis_;
    bool completed_ = false;
    std::vector<NcPoly> antipode_;
    std::unordered_map<Word, size_t> index_;

    struct DeltaCache {
        std::unordered_map<Word, TensorPoly> map;
        std::mutex mutex;
    };
    std::shared_ptr<DeltaCache> delta_cache_ = std::make_shared<DeltaCache>();
};

// Multiplicative extension of the generator coproducts; result reduced.
TensorPoly extend_coproduct(const HopfPresentation& H, const NcPoly& p);

struct BialgebraReport {
    bool pass = false;
    std::string failure;  // first failing check, with the nonzero residue
};
// Verifies Delta/epsilon compatibility with every defining relation,
// coassociativity and the counit axioms on generators. Passing implies the
// axioms globally (both maps are algebra maps).
BialgebraReport check_bialgebra(const HopfPresentation& H);

// Solves m(S (x) id) Delta = unit . counit on generators, walking up the
// coradical levels, then verifies both antipode axioms and that S reverses
// every defining relation. Stores the images on H.
std::vector<NcPoly> derive_antipode(HopfPresentation& H);

// Least m >= 1 with S^m = id as a linear map on the normal basis.
int antipode_order(const HopfPresentation& H, int cap = 4096);

// Basis words v with Delta(v) = v (x) v and counit 1. For the catalog cases
// these are exactly the group-word normal forms.
std::vector<Word> group_likes(const HopfPresentation& H);

struct SkewPrimitiveSpace {
    Word g, h;
    std::vector<NcPoly> basis;
    size_t dim() const { return basis.size(); }
};
// Kernel of v -> Delta(v) - v (x) g - h (x) v over the basis of H.
SkewPrimitiveSpace skew_primitives(const HopfPresentation& H, const Word& g, const Word& h);

struct FiltrationReport {
    std::vector<size_t> dims;      // dim C_0, dim C_1, ... until stationary
    std::map<Word, int> level_of;  // coradical level of each basis word
    bool exhausts = false;         // filtration reaches all of H
    bool taft_wilson_level1 = false;
};
FiltrationReport coradical_filtration(const HopfPresentation& H, bool check_taft_wilson = true);

// --- Yetter-Drinfeld data and bosonization -------------------------------

struct GroupSpec {
    enum class Kind { Cyclic, Product2, Semidirect };
    Kind kind = Kind::Cyclic;
    long n1 = 1;     // order of g
    long n2 = 1;     // order of h (Product2 / Semidirect)
    long twist = 1;  // Semidirect: g h g^{-1} = h^twist

    static GroupSpec cyclic(long n) { return {Kind::Cyclic, n, 1, 1}; }
    static GroupSpec product(long n1, long n2) { return {Kind::Product2, n1, n2, 1}; }
    static GroupSpec semidirect(long ord_g, long ord_h, long twist) {
        return {Kind::Semidirect, ord_g, ord_h, twist};
    }
    int num_gens() const { return kind == Kind::Cyclic ? 1 : 2; }
};

struct YDBasisElement {
    std::string name;
    std::vector<long> degree;     // exponents of the group generators (coaction)
    std::vector<Fq> character;    // action character on each group generator
};

struct YDRealization {
    GroupSpec group;
    std::vector<YDBasisElement> basis;
    std::string label;  // e.g. "x in V_g^eps"
};

struct NicholsSpec {
    std::vector<long> truncation;  // x_i^{e_i} = 0
};

// Radford biproduct specialized to character actions and central group-like
// coactions (the only shape the catalog needs). Emits group relations, the
// commutations g x = chi(g) x g, the Nichols relations, and the skew
// coproducts Delta(x) = x (x) 1 + deg(x) (x) x.
HopfData bosonize(const NicholsSpec& nichols, const YDRealization& yd,
                  std::shared_ptr<const FieldCtx> F);

// --- coproduct tails -------------------------------------------------------

enum class TailKind {
    Omega0,      // sum (p-1)!/(i!(p-i)!) x^i (x) x^{p-i}
    OmegaTheta,  // sum (p-1)!/(i!(p-i)!) x^i g^{theta(p-i)} (x) x^{p-i}
    ThetaQ,      // sum (q-1)_xi!/((i)_xi!(q-i)_xi!) x^i g^{q-i} (x) x^{q-i}
};
TensorPoly coproduct_tail(TailKind kind, const FieldCtx* F, int x_gen, int g_gen, long exponent,
                          long theta = 0);

// --- named identity checks -------------------------------------------------

enum class LemmaId {
    AdjointPowerGroup,       // (g)(ad_R x)^{p-1} = g - g^p and (g)(ad_R x)^p = [g,x]
    SkewPrimitivePthPower,   // Delta(x^p - x) = (x^p-x) (x) 1 + g^p (x) (x^p-x)
    AdjointPowerRightThree,  // (x)(ad_R y)^p = lambda2^{p-1} (x)(ad_R y)
    AdjointPowerLeftThree,   // (ad_L x)^p(y) = (-lambda1 mu)^{p-1} (ad_L x)(y)
    OmegaAdjointCocycle,     // (omega_theta)(ad_R D)^{p-1} = -d^1(...)
};

struct IdentityCheck {
    bool pass = false;
    std::string residue;  // nonzero residue, printable, when failing
};
IdentityCheck verify_identity(LemmaId id, int p, const std::map<std::string, long>& ints,
                              const std::map<std::string, Fq>& scalars,
                              std::shared_ptr<const FieldCtx> F);

// --- isomorphism checks ----------------------------------------------------

struct IsoReport {
    bool pass = false;
    std::string failure;
};
// phi maps each H1 generator to an element of H2; checks relations,
// coproducts, counits, and bijectivity on the normal basis.
IsoReport iso_check(const HopfPresentation& H1, const HopfPresentation& H2,
                    const std::vector<NcPoly>& phi);

enum class PqFamily { A, B };
// g^q = 1, x^p - x = lambda (1 - g^p); family A adds gx - xg = g - g^2,
// family B is commutative. Built in the honest quotient (bounded completion).
HopfPresentation make_pq_family(PqFamily family, long p, long q, Fq lambda,
                                std::shared_ptr<const FieldCtx> F);

struct PqIsoWitness {
    Fq a, b;  // phi: g -> g', x -> a(1 - g') + b x'
    std::shared_ptr<const FieldCtx> field;
    bool extended = false;  // the base field had to be enlarged
};
// Scans for the Theorem-style witness (a) resp. (a, b != 0 with b^p = b),
// extending GF(p^k) by degree steps up to max_k, and confirms the candidate
// map end to end with iso_check.
std::optional<PqIsoWitness> find_pq_iso(PqFamily family, long p, long q, Fq lambda, Fq gamma,
                                        std::shared_ptr<const FieldCtx> F, int max_k = 8);

}  // namespace hopfforge
