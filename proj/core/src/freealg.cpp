#include "hopfforge/freealg.hpp"

#include <functional>
#include <sstream>

namespace hopfforge {

GenSet::GenSet(std::initializer_list<std::pair<const char*, int>> gens) {
    for (auto& [n, w] : gens) {
        names.emplace_back(n);
        weights.push_back(w);
    }
}

int GenSet::index(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw Error("unknown generator: " + name);
}

int GenSet::weight_of_word(const std::string& word) const {
    int w = 0;
    for (char c : word) w += weights.at(static_cast<unsigned char>(c));
    return w;
}

Word word_of(int gen, int power) {
    return Word(static_cast<size_t>(power), static_cast<char>(gen));
}

Word word_concat(const Word& a, const Word& b) { return a + b; }

std::string word_to_string(const GenSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << "*";
        os << gens.names.at(static_cast<unsigned char>(w[i]));
        if (j - i > 1) os << "^" << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

NcPoly NcPoly::from_word(const FieldCtx* F, const Word& w, Fq c) {
    NcPoly r(F);
    r.add_term(w, c);
    return r;
}

NcPoly& NcPoly::add_term(const Word& w, Fq c) {
    if (c == F_->zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = F_->add(it->second, c);
        if (it->second == F_->zero()) terms_.erase(it);
    }
    return *this;
}

Fq NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Fq{0} : it->second;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    r += o;
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    if (!F_) F_ = o.F_;
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    if (!F_) F_ = o.F_;
    for (auto& [w, c] : o.terms_) add_term(w, F_->neg(c));
    return *this;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    r -= o;
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r(F_);
    for (auto& [w, c] : terms_) r.add_term(w, F_->neg(c));
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    const FieldCtx* F = F_ ? F_ : o.F_;
    NcPoly r(F);
    for (auto& [wa, ca] : terms_)
        for (auto& [wb, cb] : o.terms_) r.add_term(wa + wb, F->mul(ca, cb));
    return r;
}

NcPoly NcPoly::scaled(Fq c) const {
    NcPoly r(F_);
    if (c == F_->zero()) return r;
    for (auto& [w, x] : terms_) r.add_term(w, F_->mul(x, c));
    return r;
}

NcPoly NcPoly::pow(long n) const {
    NcPoly acc = NcPoly::unit(F_);
    for (long i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

std::string NcPoly::to_string(const GenSet& gens) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << " + ";
        std::string cs = F_->to_string(c);
        if (w.empty()) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << word_to_string(gens, w);
        }
        first = false;
    }
    return os.str();
}

TensorPoly TensorPoly::unit(const FieldCtx* F, int rank) {
    TensorPoly r(F, rank);
    r.add_term(Key(static_cast<size_t>(rank)), F->one());
    return r;
}

TensorPoly TensorPoly::from_key(const FieldCtx* F, Key k, Fq c) {
    TensorPoly r(F, static_cast<int>(k.size()));
    r.add_term(k, c);
    return r;
}

TensorPoly TensorPoly::tensor(const NcPoly& a, const NcPoly& b) {
    return tensor(std::vector<NcPoly>{a, b});
}

TensorPoly TensorPoly::tensor(const std::vector<NcPoly>& factors) {
    const FieldCtx* F = factors.front().ctx();
    TensorPoly r(F, static_cast<int>(factors.size()));
    std::function<void(size_t, Key&, Fq)> rec = [&](size_t i, Key& key, Fq c) {
        if (i == factors.size()) {
            r.add_term(key, c);
            return;
        }
        for (auto& [w, cw] : factors[i].terms()) {
            key.push_back(w);
            rec(i + 1, key, F->mul(c, cw));
            key.pop_back();
        }
    };
    Key key;
    rec(0, key, F->one());
    return r;
}

TensorPoly& TensorPoly::add_term(const Key& k, Fq c) {
    if (c == F_->zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second = F_->add(it->second, c);
        if (it->second == F_->zero()) terms_.erase(it);
    }
    return *this;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    r += o;
    return r;
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    if (!F_) {
        F_ = o.F_;
        rank_ = o.rank_;
    }
    if (rank_ != o.rank_ && !o.terms_.empty() && !terms_.empty())
        throw Error("tensor rank mismatch");
    for (auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (auto& [k, c] : o.terms_) r.add_term(k, F_->neg(c));
    return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    if (rank_ != o.rank_) throw Error("tensor rank mismatch");
    TensorPoly r(F_, rank_);
    for (auto& [ka, ca] : terms_)
        for (auto& [kb, cb] : o.terms_) {
            Key k(static_cast<size_t>(rank_));
            for (int i = 0; i < rank_; ++i) k[i] = ka[i] + kb[i];
            r.add_term(k, F_->mul(ca, cb));
        }
    return r;
}

TensorPoly TensorPoly::scaled(Fq c) const {
    TensorPoly r(F_, rank_);
    if (c == F_->zero()) return r;
    for (auto& [k, x] : terms_) r.add_term(k, F_->mul(x, c));
    return r;
}

TensorPoly TensorPoly::pow(long n) const {
    TensorPoly acc = TensorPoly::unit(F_, rank_);
    for (long i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

TensorPoly TensorPoly::map_slot(int slot, int out_rank,
                                const std::function<TensorPoly(const Word&)>& f) const {
    TensorPoly r(F_, rank_ - 1 + out_rank);
    for (auto& [k, c] : terms_) {
        TensorPoly img = f(k[slot]);
        for (auto& [ik, ic] : img.terms()) {
            Key key;
            key.reserve(static_cast<size_t>(rank_ - 1 + out_rank));
            for (int i = 0; i < slot; ++i) key.push_back(k[i]);
            for (auto& w : ik) key.push_back(w);
            for (int i = slot + 1; i < rank_; ++i) key.push_back(k[i]);
            r.add_term(key, F_->mul(c, ic));
        }
    }
    return r;
}

std::string TensorPoly::to_string(const GenSet& gens) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        std::string cs = F_->to_string(c);
        if (cs != "1") os << cs << "*";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << "(#)";
            os << word_to_string(gens, k[i]);
        }
        first = false;
    }
    return os.str();
}

LambdaPoly LambdaPoly::from(const NcPoly& c, int degree) {
    LambdaPoly r(c.ctx());
    if (!c.is_zero()) r.coeffs_[degree] = c;
    return r;
}

NcPoly LambdaPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? NcPoly(F_) : it->second;
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& o) const {
    LambdaPoly r = *this;
    for (auto& [d, c] : o.coeffs_) {
        auto [it, inserted] = r.coeffs_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& o) const {
    LambdaPoly r = *this;
    for (auto& [d, c] : o.coeffs_) {
        auto [it, inserted] = r.coeffs_.try_emplace(d, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& o) const {
    LambdaPoly r(F_);
    for (auto& [da, ca] : coeffs_)
        for (auto& [db, cb] : o.coeffs_) {
            NcPoly prod = ca * cb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.coeffs_.try_emplace(da + db, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    return r;
}

NcPoly ad_R_power(const NcPoly& a, const NcPoly& b, long n) {
    NcPoly c = a;
    for (long i = 0; i < n; ++i) c = c * b - b * c;
    return c;
}

TensorPoly ad_R_power(const TensorPoly& a, const TensorPoly& b, long n) {
    TensorPoly c = a;
    for (long i = 0; i < n; ++i) c = c * b - b * c;
    return c;
}

NcPoly ad_L_power(const NcPoly& a, const NcPoly& b, long n) {
    NcPoly c = b;
    for (long i = 0; i < n; ++i) c = a * c - c * a;
    return c;
}

std::vector<NcPoly> jacobson_s(const FieldCtx* F, int p) {
    if (F->p() != p) throw Error("jacobson_s: p must be the field characteristic");
    NcPoly a = NcPoly::generator(F, 0), b = NcPoly::generator(F, 1);
    // (a)(ad_R (lambda a + b))^{p-1} in NcPoly[lambda].
    LambdaPoly arg = LambdaPoly::from(a, 1) + LambdaPoly::from(b, 0);
    LambdaPoly acc = LambdaPoly::from(a, 0);
    for (int i = 0; i < p - 1; ++i) acc = acc * arg - arg * acc;
    std::vector<NcPoly> s;
    s.reserve(static_cast<size_t>(p - 1));
    for (int i = 1; i <= p - 1; ++i) {
        Fq inv_i = F->inv(F->from_int(i));
        s.push_back(acc.coeff(i - 1).scaled(inv_i));
    }
    return s;
}

template <class V>
static V substitute_impl(const NcPoly& target, const std::vector<V>& images, bool antihom,
                         const V& unit) {
    V result = unit.scaled(Fq{0});
    for (auto& [w, c] : target.terms()) {
        V m = unit;
        if (!antihom) {
            for (char l : w) m = m * images.at(static_cast<unsigned char>(l));
        } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                m = m * images.at(static_cast<unsigned char>(*it));
        }
        result += m.scaled(c);
    }
    return result;
}

NcPoly substitute(const NcPoly& target, const std::vector<NcPoly>& images, bool antihom) {
    return substitute_impl(target, images, antihom, NcPoly::unit(target.ctx()));
}

TensorPoly substitute(const NcPoly& target, const std::vector<TensorPoly>& images, bool antihom) {
    return substitute_impl(target, images, antihom,
                           TensorPoly::unit(target.ctx(), images.front().rank()));
}

NcPoly substitute_word(const FieldCtx* F, const Word& w, const std::vector<NcPoly>& images,
                       bool antihom) {
    return substitute(NcPoly::from_word(F, w, F->one()), images, antihom);
}

}  // namespace hopfforge
