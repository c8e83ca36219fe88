#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/field.hpp"

namespace hopfforge {

// Generator alphabet. Position in `names` is both the letter value inside a
// Word and the precedence rank: earlier names are smaller in the reduction
// order, so declare e.g. y < x < h < g by listing y first.
struct GenSet {
    std::vector<std::string> names;
    std::vector<int> weights;  // group-likes 0, skew-primitives 1, higher generators p or q

    GenSet() = default;
    GenSet(std::initializer_list<std::pair<const char*, int>> gens);

    int arity() const { return static_cast<int>(names.size()); }
    int index(const std::string& name) const;
    int weight_of_word(const std::string& word) const;
    bool operator==(const GenSet&) const = default;
};

// A monomial in the free algebra: a sequence of generator indices. The empty
// word is the unit.
using Word = std::string;

Word word_of(int gen, int power = 1);
Word word_concat(const Word& a, const Word& b);
std::string word_to_string(const GenSet& gens, const Word& w);

// Sparse noncommutative polynomial over GF(p^k). Canonical form: no stored
// zero coefficients. Terms are kept in a fixed deterministic order.
class NcPoly {
  public:
    using Terms = std::map<Word, Fq>;

    NcPoly() = default;
    explicit NcPoly(const FieldCtx* F) : F_(F) {}

    static NcPoly unit(const FieldCtx* F) { return from_word(F, Word{}, F->one()); }
    static NcPoly scalar(const FieldCtx* F, Fq c) { return from_word(F, Word{}, c); }
    static NcPoly generator(const FieldCtx* F, int idx) {
        return from_word(F, word_of(idx), F->one());
    }
    static NcPoly from_word(const FieldCtx* F, const Word& w, Fq c);

    const FieldCtx* ctx() const { return F_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    NcPoly& add_term(const Word& w, Fq c);
    Fq coeff(const Word& w) const;

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly scaled(Fq c) const;
    NcPoly pow(long n) const;
    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    std::string to_string(const GenSet& gens) const;

  private:
    const FieldCtx* F_ = nullptr;
    Terms terms_;
};

// Sparse element of the n-th tensor power of the free algebra. Multiplication
// is componentwise: (a (x) b)(c (x) d) = ac (x) bd, no braiding sign.
class TensorPoly {
  public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Fq>;

    TensorPoly() = default;
    TensorPoly(const FieldCtx* F, int rank) : F_(F), rank_(rank) {}

    static TensorPoly unit(const FieldCtx* F, int rank);
    static TensorPoly from_key(const FieldCtx* F, Key k, Fq c);
    // Rank-2 product a (x) b.
    static TensorPoly tensor(const NcPoly& a, const NcPoly& b);
    static TensorPoly tensor(const std::vector<NcPoly>& factors);

    const FieldCtx* ctx() const { return F_; }
    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorPoly& add_term(const Key& k, Fq c);
    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const TensorPoly& o) const;
    TensorPoly& operator+=(const TensorPoly& o);
    TensorPoly scaled(Fq c) const;
    TensorPoly pow(long n) const;
    bool operator==(const TensorPoly& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

    // Applies f to the tensor factor at `slot`, turning each word there into a
    // rank-`f_rank` tensor spliced in place (used for Delta (x) id etc.).
    TensorPoly map_slot(int slot, int out_rank,
                        const std::function<TensorPoly(const Word&)>& f) const;

    std::string to_string(const GenSet& gens) const;

  private:
    const FieldCtx* F_ = nullptr;
    int rank_ = 0;
    Terms terms_;
};

// Polynomial in one central formal indeterminate with NcPoly coefficients.
class LambdaPoly {
  public:
    explicit LambdaPoly(const FieldCtx* F) : F_(F) {}
    static LambdaPoly from(const NcPoly& c, int degree = 0);

    const std::map<int, NcPoly>& coeffs() const { return coeffs_; }
    NcPoly coeff(int degree) const;
    LambdaPoly operator+(const LambdaPoly& o) const;
    LambdaPoly operator-(const LambdaPoly& o) const;
    LambdaPoly operator*(const LambdaPoly& o) const;

  private:
    const FieldCtx* F_ = nullptr;
    std::map<int, NcPoly> coeffs_;  // degree -> coefficient, no zero entries
};

// (a)(ad_R b)^n: iterated c -> [c, b]; n = 0 returns a.
NcPoly ad_R_power(const NcPoly& a, const NcPoly& b, long n);
TensorPoly ad_R_power(const TensorPoly& a, const TensorPoly& b, long n);
// (ad_L a)^n(b): iterated c -> [a, c]; n = 0 returns b.
NcPoly ad_L_power(const NcPoly& a, const NcPoly& b, long n);

// Jacobson summands s_1..s_{p-1} on the free algebra over letters a, b:
// i*s_i(a,b) is the coefficient of lambda^{i-1} in (a)(ad_R(lambda a + b))^{p-1}.
std::vector<NcPoly> jacobson_s(const FieldCtx* F, int p);

// Algebra (anti)homomorphism extension: replaces each generator of `target`
// by its assigned image. With antihom set, letters multiply in reverse order.
NcPoly substitute(const NcPoly& target, const std::vector<NcPoly>& images, bool antihom = false);
TensorPoly substitute(const NcPoly& target, const std::vector<TensorPoly>& images,
                      bool antihom = false);
// Image of a single word.
NcPoly substitute_word(const FieldCtx* F, const Word& w, const std::vector<NcPoly>& images,
                       bool antihom = false);

}  // namespace hopfforge
