#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "hopfforge/freealg.hpp"

namespace hopfforge {

// Termination strategy for orienting relations.
//
// WLL compares (total weight, length, precedence-lex); it handles every
// abelian-group case, including the weighted Case-D/AD generators.
//
// AFFINE interprets each generator as a strictly monotone affine map
// n -> a*n + b (a >= 1) and compares word compositions; needed for the
// semidirect-product rule g h -> h^t g, which no weight/length order accepts.
// Ties fall back to the WLL key, which is stable under composition.
struct ReductionOrder {
    enum class Kind { WLL, Affine };
    static constexpr int kIncomparable = 2;

    Kind kind = Kind::WLL;
    std::vector<long long> affine_a, affine_b;  // per generator, Affine only

    static ReductionOrder wll() { return {}; }
    static ReductionOrder affine(std::vector<long long> a, std::vector<long long> b);

    // Returns -1, 0, +1, or kIncomparable.
    int compare(const GenSet& gens, const Word& a, const Word& b) const;
};

struct Rule {
    Word lhs;      // nonempty
    NcPoly rhs;    // every monomial strictly below lhs
};

struct Ambiguity {
    enum class Kind { Overlap, Inclusion };
    Kind kind = Kind::Overlap;
    Word word;      // the ambiguously reducible word
    int rule1 = 0;  // for overlap: word = lhs1 . C; for inclusion: word = lhs1
    int rule2 = 0;  // for overlap: word = A . lhs2; for inclusion: lhs2 inside
    size_t pos = 0; // start of lhs2 inside word
};

struct ConfluenceEntry {
    Ambiguity amb;
    bool resolvable = false;
    NcPoly obstruction;  // difference of the two normal forms when not resolvable
};

struct ConfluenceReport {
    std::vector<ConfluenceEntry> entries;
    bool all_resolvable() const {
        for (auto& e : entries)
            if (!e.resolvable) return false;
        return true;
    }
    const ConfluenceEntry* first_obstruction() const {
        for (auto& e : entries)
            if (!e.resolvable) return &e;
        return nullptr;
    }
};

struct NormalBasis {
    bool finite = false;
    uint64_t count = 0;
    std::vector<Word> words;  // enumerated by length, then lex, when finite
    Word cycle_witness;       // a pumpable word when infinite
    bool truncated = false;   // enumeration hit the cap
};

// Word -> position lookup for a finite normal basis.
std::unordered_map<Word, size_t> basis_index(const NormalBasis& basis);

class UnorientableError : public Error {
  public:
    explicit UnorientableError(const std::string& msg) : Error(msg) {}
};

struct CompletionResult;

// Oriented, inter-reduced rewriting system with a termination certificate.
// Immutable after construction; reductions are memoized per word.
class RewriteSystem {
  public:
    RewriteSystem() = default;

    // Orients each nonzero relation: the strict maximum monomial becomes the
    // lhs, the negated remainder (normalized monic) the rhs. Throws
    // UnorientableError when a relation has no strict maximum.
    static RewriteSystem orient(const FieldCtx* F, GenSet gens, std::vector<NcPoly> relations,
                                ReductionOrder order = ReductionOrder::wll());

    const FieldCtx* ctx() const { return F_; }
    const GenSet& gens() const { return gens_; }
    const ReductionOrder& order() const { return order_; }
    const std::vector<Rule>& rules() const { return rules_; }

    NcPoly reduce(const NcPoly& p) const;
    TensorPoly reduce(const TensorPoly& t) const;
    NcPoly reduce_word(const Word& w) const;

    // All minimal overlap and inclusion ambiguities, in deterministic order.
    std::vector<Ambiguity> ambiguities() const;
    ConfluenceReport check_confluence() const;

    // Irreducible words via the forbidden-factor automaton; detects an
    // infinite language instead of diverging.
    NormalBasis normal_words(uint64_t cap = 2'000'000) const;

    // Knuth-Bendix style bounded completion: orients unresolved obstructions
    // until confluence or the bound. Throws UnorientableError if an
    // obstruction cannot be oriented.
    CompletionResult complete(int max_new_rules) const;

  private:
    struct Cache {
        std::unordered_map<Word, NcPoly> map;
        std::mutex mutex;
    };

    RewriteSystem(const FieldCtx* F, GenSet gens, ReductionOrder order)
        : F_(F), gens_(std::move(gens)), order_(order), cache_(std::make_shared<Cache>()) {}

    void admit(NcPoly relation);  // reduce, orient, insert, inter-reduce
    Rule orient_to_rule(const NcPoly& relation) const;
    // Leftmost occurrence of the earliest-admitted matching rule.
    bool find_redex(const Word& w, size_t* pos, size_t* rule) const;
    NcPoly reduce_word_uncached(const Word& w) const;

    const FieldCtx* F_ = nullptr;
    GenSet gens_;
    ReductionOrder order_;
    std::vector<Rule> rules_;
    std::shared_ptr<Cache> cache_;
};

struct CompletionResult {
    RewriteSystem system;
    std::vector<Rule> added;
    bool confluent = false;
};

}  // namespace hopfforge
