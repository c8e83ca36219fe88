#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of GF(p^k). `v` indexes the field enumeration: the base-p digits of
// v, little-endian, are the coefficients of the residue class modulo the
// context's modulus polynomial. 0 and 1 are always the additive and
// multiplicative units.
struct Fq {
    uint32_t v = 0;
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool operator!=(Fq a, Fq b) { return a.v != b.v; }
    friend bool operator<(Fq a, Fq b) { return a.v < b.v; }
};

// Arithmetic context for GF(p^k) with a set of registered roots of unity.
// Modulus and roots are chosen deterministically so that all downstream
// reports are reproducible bit for bit. Immutable after construction.
class FieldCtx {
  public:
    // Builds the minimal GF(p^k) containing a root of unity of every order in
    // `orders` (optionally forcing k to be a multiple of `multiple_of_k`).
    // Throws on non-prime p or an order divisible by p.
    static std::shared_ptr<const FieldCtx> make(int p, const std::set<long>& orders,
                                                int min_k = 1);

    int p() const { return p_; }
    int k() const { return k_; }
    uint32_t size() const { return size_; }
    // Monic modulus, degree k; coefficient of x^i at index i.
    const std::vector<int>& modulus() const { return modulus_; }
    const std::vector<long>& registered_orders() const { return orders_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq from_int(long long n) const;

    Fq add(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, long long e) const;
    Fq frobenius(Fq a) const { return pow(a, p_); }

    // Distinguished root of unity of exact order n (registered at creation).
    Fq root(long n) const;
    bool has_root(long n) const { return roots_.count(n) != 0; }

    // Least generator of the multiplicative group in the fixed enumeration.
    Fq generator() const { return gen_; }
    long multiplicative_order(Fq a) const;

    // Minimal polynomial of a over the prime field (monic, little-endian).
    std::vector<int> min_poly(Fq a) const;

    // Serialization: integers for prime-subfield values, "w^j" otherwise.
    std::string to_string(Fq a) const;
    Fq parse_element(const std::string& text) const;

    bool is_prime_subfield(Fq a) const { return a.v < static_cast<uint32_t>(p_); }

    std::string describe() const;

  private:
    FieldCtx() = default;
    void build_tables();

    int p_ = 0;
    int k_ = 0;
    uint32_t size_ = 0;
    std::vector<int> modulus_;
    std::vector<long> orders_;
    std::map<long, Fq> roots_;
    Fq gen_{0};
    std::vector<uint32_t> exp_;  // exp_[i] = generator^i, i in [0, 2(size-1))
    std::vector<uint32_t> log_;  // log_[v] for v != 0
    std::vector<uint32_t> pow_p_;
};

// Geometric sum (n)_xi = 1 + xi + ... + xi^(n-1); equals n*1 when xi = 1.
Fq xi_integer(const FieldCtx& F, long n, Fq xi);
// (n)_xi! = (1)_xi (2)_xi ... (n)_xi, with (0)_xi! = 1.
Fq xi_factorial(const FieldCtx& F, long n, Fq xi);
// Gaussian binomial by the division-free Pascal recurrence
// C(n,i)_xi = C(n-1,i-1)_xi + xi^i C(n-1,i)_xi.
Fq xi_binomial(const FieldCtx& F, long n, long i, Fq xi);

bool is_prime(long n);
// Least t in [2, m) whose multiplicative order modulo m is exactly ord.
long least_residue_of_order(long ord, long m);

// Field homomorphism GF(p^k) -> GF(p^K), k | K, sending the small generator to
// the least big-field root of its minimal polynomial.
class FieldEmbedding {
  public:
    FieldEmbedding(std::shared_ptr<const FieldCtx> small, std::shared_ptr<const FieldCtx> big);
    Fq operator()(Fq a) const;

  private:
    std::shared_ptr<const FieldCtx> small_, big_;
    Fq image_of_gen_{0};
};

}  // namespace hopfforge
