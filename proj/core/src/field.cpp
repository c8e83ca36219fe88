#include "hopfforge/field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfforge {

namespace {

constexpr uint32_t kMaxFieldSize = 1u << 20;

// Dense polynomial arithmetic over Z_p on little-endian coefficient vectors.
// Used only while constructing a context; steady-state arithmetic goes through
// the exp/log tables.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + 1LL * a[i] * b[j]) % p);
    }
    const size_t k = modulus.size() - 1;  // modulus monic of degree k
    for (size_t d = prod.size(); d-- > k;) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (size_t j = 0; j < k; ++j)
            prod[d - k + j] = static_cast<int>(((prod[d - k + j] - 1LL * c * modulus[j]) % p + p) % p);
    }
    trim(prod);
    return prod;
}

// Remainder of a by monic b.
Poly poly_rem(Poly a, const Poly& b, int p) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        int c = a.back();
        size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = static_cast<int>(((a[shift + j] - 1LL * c * b[j]) % p + p) % p);
        trim(a);
        if (a.size() <= db) break;
    }
    return a;
}

Poly poly_from_index(uint32_t v, int p, int k) {
    Poly c(k, 0);
    for (int i = 0; i < k; ++i) {
        c[i] = static_cast<int>(v % p);
        v /= p;
    }
    trim(c);
    return c;
}

uint32_t poly_to_index(const Poly& c, int p) {
    uint32_t v = 0;
    for (size_t i = c.size(); i-- > 0;) v = static_cast<uint32_t>(v * p + c[i]);
    return v;
}

bool poly_is_irreducible(const Poly& f, int p) {
    const size_t k = f.size() - 1;
    if (k == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // Trial division by every monic polynomial of degree 1..k/2.
    for (size_t d = 1; 2 * d <= k; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
        for (uint64_t m = 0; m < count; ++m) {
            Poly g(d + 1, 0);
            uint64_t t = m;
            for (size_t i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long least_residue_of_order(long ord, long m) {
    for (long t = 2; t < m; ++t) {
        long x = 1 % m, e = 0;
        bool hit = false;
        for (e = 1; e <= ord; ++e) {
            x = (x * t) % m;
            if (x == 1) {
                hit = (e == ord);
                break;
            }
        }
        if (hit) return t;
    }
    throw Error("no residue of order " + std::to_string(ord) + " modulo " + std::to_string(m));
}

std::shared_ptr<const FieldCtx> FieldCtx::make(int p, const std::set<long>& orders, int min_k) {
    if (!is_prime(p)) throw Error("characteristic must be prime, got " + std::to_string(p));
    for (long n : orders) {
        if (n < 1) throw Error("root order must be positive");
        if (n % p == 0)
            throw Error("no root of unity of order " + std::to_string(n) +
                        " in characteristic " + std::to_string(p));
    }

    auto ok = [&](int k) {
        uint64_t sz = 1;
        for (int i = 0; i < k; ++i) sz *= static_cast<uint64_t>(p);
        for (long n : orders)
            if ((sz - 1) % static_cast<uint64_t>(n) != 0) return false;
        return true;
    };
    int k = std::max(1, min_k);
    while (!ok(k)) {
        ++k;
        if (k > 24) throw Error("required field extension degree exceeds bound");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->k_ = k;
    uint64_t sz = 1;
    for (int i = 0; i < k; ++i) sz *= static_cast<uint64_t>(p);
    if (sz > kMaxFieldSize) throw Error("field too large: p^k = " + std::to_string(sz));
    ctx->size_ = static_cast<uint32_t>(sz);
    ctx->orders_.assign(orders.begin(), orders.end());

    // Lexicographically least monic irreducible of degree k: scan the integer
    // encoding of the non-leading coefficients.
    for (uint32_t m = 0;; ++m) {
        if (m >= ctx->size_) throw Error("no irreducible polynomial found");  // unreachable
        Poly f = poly_from_index(m, p, k);
        f.resize(k + 1, 0);
        f[k] = 1;
        if (poly_is_irreducible(f, p)) {
            ctx->modulus_ = f;
            break;
        }
    }

    ctx->build_tables();

    for (long n : orders) {
        // Least element of exact order n in the fixed enumeration.
        Fq r{0};
        for (uint32_t v = 1; v < ctx->size_; ++v)
            if (ctx->multiplicative_order(Fq{v}) == n) {
                r = Fq{v};
                break;
            }
        if (r.v == 0 && n != 1) throw Error("internal: missing root of order " + std::to_string(n));
        if (n == 1) r = ctx->one();
        ctx->roots_[n] = r;
    }
    return ctx;
}

void FieldCtx::build_tables() {
    pow_p_.resize(k_ + 1);
    pow_p_[0] = 1;
    for (int i = 1; i <= k_; ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<uint32_t>(p_);

    // Scan for the least multiplicative generator, using raw polynomial
    // arithmetic (tables are not available yet).
    const uint32_t n1 = size_ - 1;
    auto fs = prime_factors(n1);
    auto pow_raw = [&](uint32_t base, uint64_t e) {
        Poly acc = {1};
        Poly b = poly_from_index(base, p_, k_);
        while (e) {
            if (e & 1) acc = poly_mul_mod(acc, b, modulus_, p_);
            b = poly_mul_mod(b, b, modulus_, p_);
            e >>= 1;
        }
        return poly_to_index(acc, p_);
    };
    uint32_t g = 0;
    for (uint32_t v = 2; v < size_; ++v) {
        bool primitive = true;
        for (long f : fs)
            if (pow_raw(v, n1 / static_cast<uint64_t>(f)) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = v;
            break;
        }
    }
    if (g == 0) {
        if (size_ == 2) g = 1;  // GF(2): the unit generates the trivial group
        else throw Error("internal: no field generator found");
    }
    gen_ = Fq{g};

    exp_.assign(2 * n1, 1);
    log_.assign(size_, 0);
    Poly gp = poly_from_index(g, p_, k_);
    Poly acc = {1};
    for (uint32_t i = 0; i < n1; ++i) {
        uint32_t v = poly_to_index(acc, p_);
        exp_[i] = v;
        exp_[i + n1] = v;
        log_[v] = i;
        acc = poly_mul_mod(acc, gp, modulus_, p_);
    }
}

Fq FieldCtx::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return Fq{static_cast<uint32_t>(r)};
}

Fq FieldCtx::add(Fq a, Fq b) const {
    uint32_t r = 0;
    for (int i = 0; i < k_; ++i) {
        uint32_t da = a.v / pow_p_[i] % static_cast<uint32_t>(p_);
        uint32_t db = b.v / pow_p_[i] % static_cast<uint32_t>(p_);
        r += ((da + db) % static_cast<uint32_t>(p_)) * pow_p_[i];
    }
    return Fq{r};
}

Fq FieldCtx::neg(Fq a) const {
    uint32_t r = 0;
    for (int i = 0; i < k_; ++i) {
        uint32_t da = a.v / pow_p_[i] % static_cast<uint32_t>(p_);
        r += ((static_cast<uint32_t>(p_) - da) % static_cast<uint32_t>(p_)) * pow_p_[i];
    }
    return Fq{r};
}

Fq FieldCtx::mul(Fq a, Fq b) const {
    if (a.v == 0 || b.v == 0) return Fq{0};
    return Fq{exp_[log_[a.v] + log_[b.v]]};
}

Fq FieldCtx::inv(Fq a) const {
    if (a.v == 0) throw Error("division by zero");
    const uint32_t n1 = size_ - 1;
    return Fq{exp_[(n1 - log_[a.v]) % n1]};
}

Fq FieldCtx::pow(Fq a, long long e) const {
    const long long n1 = size_ - 1;
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) throw Error("division by zero");
        return zero();
    }
    long long le = (static_cast<long long>(log_[a.v]) * (e % n1)) % n1;
    if (le < 0) le += n1;
    return Fq{exp_[le]};
}

Fq FieldCtx::root(long n) const {
    auto it = roots_.find(n);
    if (it == roots_.end())
        throw Error("no registered root of order " + std::to_string(n));
    return it->second;
}

long FieldCtx::multiplicative_order(Fq a) const {
    if (a.v == 0) throw Error("order of zero");
    const long n1 = size_ - 1;
    if (n1 == 0) return 1;
    long l = log_[a.v];
    if (l == 0) return 1;
    return n1 / std::gcd(n1, l);
}

std::vector<int> FieldCtx::min_poly(Fq a) const {
    // Product of (X - a^{p^i}) over the Frobenius orbit; coefficients land in
    // the prime field.
    std::vector<Fq> orbit;
    Fq x = a;
    do {
        orbit.push_back(x);
        x = frobenius(x);
    } while (x != a);
    std::vector<Fq> coeff = {one()};
    for (Fq r : orbit) {
        std::vector<Fq> next(coeff.size() + 1, zero());
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] = add(next[i + 1], coeff[i]);
            next[i] = sub(next[i], mul(coeff[i], r));
        }
        coeff = next;
    }
    std::vector<int> out;
    out.reserve(coeff.size());
    for (Fq c : coeff) {
        if (!is_prime_subfield(c)) throw Error("internal: min_poly coefficient not in prime field");
        out.push_back(static_cast<int>(c.v));
    }
    return out;
}

std::string FieldCtx::to_string(Fq a) const {
    if (is_prime_subfield(a)) return std::to_string(a.v);
    uint32_t l = log_[a.v];
    if (l == 1) return "w";
    return "w^" + std::to_string(l);
}

Fq FieldCtx::parse_element(const std::string& text) const {
    if (text.empty()) throw Error("empty field element");
    if (text[0] == 'w') {
        long long e = 1;
        if (text.size() > 1) {
            if (text[1] != '^') throw Error("bad field element: " + text);
            e = std::stoll(text.substr(2));
        }
        return pow(gen_, e);
    }
    size_t pos = 0;
    long long n = std::stoll(text, &pos);
    if (pos != text.size()) throw Error("bad field element: " + text);
    return from_int(n);
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (k_ > 1) os << "^" << k_;
    os << ")";
    return os.str();
}

Fq xi_integer(const FieldCtx& F, long n, Fq xi) {
    if (n < 0) throw Error("xi_integer: negative n");
    Fq acc = F.zero(), power = F.one();
    for (long i = 0; i < n; ++i) {
        acc = F.add(acc, power);
        power = F.mul(power, xi);
    }
    return acc;
}

Fq xi_factorial(const FieldCtx& F, long n, Fq xi) {
    Fq acc = F.one();
    for (long i = 1; i <= n; ++i) acc = F.mul(acc, xi_integer(F, i, xi));
    return acc;
}

Fq xi_binomial(const FieldCtx& F, long n, long i, Fq xi) {
    if (i < 0 || i > n) throw Error("xi_binomial: index out of range");
    // Pascal recurrence; never divides, since (m)_xi may vanish.
    std::vector<Fq> row(1, F.one());
    for (long m = 1; m <= n; ++m) {
        std::vector<Fq> next(m + 1, F.zero());
        Fq xpow = F.one();
        for (long j = 0; j <= m; ++j) {
            Fq val = F.zero();
            if (j > 0) val = row[j - 1];
            if (j < m) val = F.add(val, F.mul(xpow, row[j]));
            next[j] = val;
            xpow = F.mul(xpow, xi);
        }
        row = std::move(next);
    }
    return row[i];
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const FieldCtx> small,
                               std::shared_ptr<const FieldCtx> big)
    : small_(std::move(small)), big_(std::move(big)) {
    if (small_->p() != big_->p() || big_->k() % small_->k() != 0)
        throw Error("no embedding GF(" + std::to_string(small_->p()) + "^" +
                    std::to_string(small_->k()) + ") -> GF(..^" + std::to_string(big_->k()) + ")");
    auto mp = small_->min_poly(small_->generator());
    for (uint32_t v = 1; v < big_->size(); ++v) {
        Fq x{v};
        Fq acc = big_->zero(), pw = big_->one();
        for (int c : mp) {
            acc = big_->add(acc, big_->mul(big_->from_int(c), pw));
            pw = big_->mul(pw, x);
        }
        if (acc == big_->zero()) {
            image_of_gen_ = x;
            return;
        }
    }
    throw Error("internal: no root of minimal polynomial in big field");
}

Fq FieldEmbedding::operator()(Fq a) const {
    if (a.v == 0) return big_->zero();
    // a = g^m in the small field; image = image(g)^m.
    long m = 0;
    Fq x = small_->one();
    while (x != a) {
        x = small_->mul(x, small_->generator());
        ++m;
        if (m > static_cast<long>(small_->size())) throw Error("internal: embedding log failure");
    }
    return big_->pow(image_of_gen_, m);
}

}  // namespace hopfforge
