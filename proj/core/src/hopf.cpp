#include "hopfforge/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfforge {

namespace {

std::string show(const GenSet& gens, const NcPoly& p) { return p.to_string(gens); }
std::string show(const GenSet& gens, const TensorPoly& t) { return t.to_string(gens); }

unsigned long long factorial(long n) {
    unsigned long long f = 1;
    for (long i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

}  // namespace

HopfPresentation HopfPresentation::build(HopfData data, uint64_t basis_cap) {
    HopfPresentation H;
    H.sys_ = RewriteSystem::orient(data.field.get(), data.gens, data.relations, data.order);
    H.confluence_ = H.sys_.check_confluence();
    if (!H.confluence_.all_resolvable() && data.complete_if_needed) {
        auto done = H.sys_.complete(data.completion_bound);
        H.sys_ = std::move(done.system);
        H.confluence_ = H.sys_.check_confluence();
        H.completed_ = true;
    }
    H.data_ = std::move(data);
    H.basis_ = H.sys_.normal_words(basis_cap);
    if (H.basis_.finite && !H.basis_.truncated) H.index_ = basis_index(H.basis_);
    return H;
}

size_t HopfPresentation::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw Error("word is not a normal basis element");
    return it->second;
}

std::vector<Fq> HopfPresentation::coords(const NcPoly& p) const {
    std::vector<Fq> v(dim(), F().zero());
    NcPoly r = sys_.reduce(p);
    for (auto& [w, c] : r.terms()) v[index_of(w)] = c;
    return v;
}

Fq HopfPresentation::counit(const NcPoly& p) const {
    Fq acc = F().zero();
    for (auto& [w, c] : p.terms()) {
        Fq t = c;
        for (char l : w) t = F().mul(t, data_.counit.at(static_cast<unsigned char>(l)));
        acc = F().add(acc, t);
    }
    return acc;
}

TensorPoly HopfPresentation::delta_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(delta_cache_->mutex);
        auto it = delta_cache_->map.find(w);
        if (it != delta_cache_->map.end()) return it->second;
    }
    TensorPoly acc = TensorPoly::unit(data_.field.get(), 2);
    for (char l : w) acc = sys_.reduce(acc * data_.coproduct.at(static_cast<unsigned char>(l)));
    {
        std::lock_guard<std::mutex> lock(delta_cache_->mutex);
        delta_cache_->map.emplace(w, acc);
    }
    return acc;
}

TensorPoly HopfPresentation::delta(const NcPoly& p) const {
    TensorPoly acc(data_.field.get(), 2);
    for (auto& [w, c] : p.terms()) acc += delta_word(w).scaled(c);
    return acc;
}

const std::vector<NcPoly>& HopfPresentation::antipode() const {
    if (antipode_.empty()) throw Error("antipode has not been derived");
    return antipode_;
}

NcPoly HopfPresentation::antipode_word(const Word& w) const {
    return sys_.reduce(substitute_word(data_.field.get(), w, antipode(), /*antihom=*/true));
}

NcPoly HopfPresentation::group_word_inverse(const Word& w) const {
    NcPoly acc = NcPoly::unit(data_.field.get());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int gen = static_cast<unsigned char>(*it);
        auto ord = data_.grouplike_orders.find(gen);
        if (ord == data_.grouplike_orders.end())
            throw Error("non-group-like letter in group word");
        acc = acc * NcPoly::from_word(data_.field.get(), word_of(gen, static_cast<int>(ord->second - 1)),
                                      F().one());
    }
    return sys_.reduce(acc);
}

TensorPoly extend_coproduct(const HopfPresentation& H, const NcPoly& p) { return H.delta(p); }

BialgebraReport check_bialgebra(const HopfPresentation& H) {
    BialgebraReport rep;
    const auto& gens = H.gens();
    for (auto& r : H.relations()) {
        if (H.counit(r) != H.F().zero()) {
            rep.failure = "counit does not vanish on relation " + show(gens, r);
            return rep;
        }
        TensorPoly dr = H.delta(r);
        if (!dr.is_zero()) {
            rep.failure = "coproduct incompatible with relation " + show(gens, r) +
                          ": residue " + show(gens, dr);
            return rep;
        }
    }
    for (int i = 0; i < gens.arity(); ++i) {
        TensorPoly d = H.sys().reduce(H.coproduct(i));
        auto expand = [&](const Word& w) { return H.delta_word(w); };
        TensorPoly left = H.sys().reduce(d.map_slot(0, 2, expand));
        TensorPoly right = H.sys().reduce(d.map_slot(1, 2, expand));
        if (!(left == right)) {
            rep.failure = "coassociativity fails on " + gens.names[static_cast<size_t>(i)] +
                          ": residue " + show(gens, left - right);
            return rep;
        }
        NcPoly l_counit(&H.F()), r_counit(&H.F());
        for (auto& [key, c] : d.terms()) {
            Fq eu = H.F().mul(c, H.counit(NcPoly::from_word(&H.F(), key[0], H.F().one())));
            l_counit.add_term(key[1], eu);
            Fq ev = H.F().mul(c, H.counit(NcPoly::from_word(&H.F(), key[1], H.F().one())));
            r_counit.add_term(key[0], ev);
        }
        NcPoly genp = H.sys().reduce(NcPoly::generator(&H.F(), i));
        if (!(H.sys().reduce(l_counit) == genp) || !(H.sys().reduce(r_counit) == genp)) {
            rep.failure = "counit axiom fails on " + gens.names[static_cast<size_t>(i)];
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

std::vector<NcPoly> derive_antipode(HopfPresentation& H) {
    const FieldCtx& F = H.F();
    const GenSet& gens = H.gens();
    const int n = gens.arity();
    std::vector<NcPoly> images(static_cast<size_t>(n));
    std::vector<bool> solved(static_cast<size_t>(n), false);

    for (int gen : H.grouplike_gens()) {
        long N = H.grouplike_order(gen);
        images[static_cast<size_t>(gen)] =
            H.sys().reduce(NcPoly::from_word(&F, word_of(gen, static_cast<int>(N - 1)), F.one()));
        solved[static_cast<size_t>(gen)] = true;
    }

    auto letters_solved = [&](const Word& w) {
        for (char l : w)
            if (!solved[static_cast<unsigned char>(l)]) return false;
        return true;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < n; ++i) {
            if (solved[static_cast<size_t>(i)]) continue;
            TensorPoly d = H.delta_word(word_of(i));
            const Word xw = word_of(i);
            // m(S (x) id) Delta(x) = eps(x) 1, with exactly one unknown term
            // x (x) v0.
            std::optional<std::pair<Word, Fq>> main;
            bool ready = true;
            for (auto& [key, c] : d.terms()) {
                if (key[0] == xw) {
                    if (main) throw Error("antipode: coproduct of " +
                                          gens.names[static_cast<size_t>(i)] +
                                          " has two terms with left factor " +
                                          word_to_string(gens, xw));
                    main = {key[1], c};
                } else if (!letters_solved(key[0])) {
                    ready = false;
                }
            }
            if (!ready || !main) continue;
            NcPoly rest(&F);
            for (auto& [key, c] : d.terms()) {
                if (key[0] == xw) continue;
                rest += (substitute_word(&F, key[0], images, /*antihom=*/true) *
                         NcPoly::from_word(&F, key[1], F.one()))
                            .scaled(c);
            }
            NcPoly rhs = NcPoly::scalar(&F, H.counit_of_gen(i)) - rest;
            NcPoly v0_inv = H.group_word_inverse(main->first);
            images[static_cast<size_t>(i)] =
                H.sys().reduce((rhs * v0_inv).scaled(F.inv(main->second)));
            solved[static_cast<size_t>(i)] = true;
            progress = true;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!solved[static_cast<size_t>(i)])
            throw Error("antipode: could not solve for generator " +
                        gens.names[static_cast<size_t>(i)]);

    // Verify both antipode axioms on generators and the anti-homomorphism
    // property on every defining relation.
    for (int i = 0; i < n; ++i) {
        TensorPoly d = H.delta_word(word_of(i));
        NcPoly left(&F), right(&F);
        for (auto& [key, c] : d.terms()) {
            left += (substitute_word(&F, key[0], images, true) *
                     NcPoly::from_word(&F, key[1], F.one()))
                        .scaled(c);
            right += (NcPoly::from_word(&F, key[0], F.one()) *
                      substitute_word(&F, key[1], images, true))
                         .scaled(c);
        }
        NcPoly target = NcPoly::scalar(&F, H.counit_of_gen(i));
        if (!(H.sys().reduce(left) == target))
            throw Error("antipode axiom m(S,id)Delta fails on " +
                        gens.names[static_cast<size_t>(i)]);
        if (!(H.sys().reduce(right) == target))
            throw Error("antipode axiom m(id,S)Delta fails on " +
                        gens.names[static_cast<size_t>(i)]);
    }
    for (auto& r : H.relations()) {
        NcPoly img = H.sys().reduce(substitute(r, images, /*antihom=*/true));
        if (!img.is_zero())
            throw Error("antipode does not respect relation " + show(gens, r));
    }
    H.set_antipode(images);
    return H.antipode();
}

int antipode_order(const HopfPresentation& H, int cap) {
    const FieldCtx& F = H.F();
    const size_t N = H.dim();
    Matrix S(N, N);
    for (size_t j = 0; j < N; ++j) {
        NcPoly img = H.antipode_word(H.basis().words[j]);
        for (auto& [w, c] : img.terms()) S.at(H.index_of(w), j) = c;
    }
    Matrix M = S;
    Matrix id = Matrix::identity(N);
    for (int m = 1; m <= cap; ++m) {
        if (M == id) return m;
        M = mat_mul(F, M, S);
    }
    throw Error("antipode order exceeds cap");
}

std::vector<Word> group_likes(const HopfPresentation& H) {
    std::vector<Word> out;
    for (const Word& w : H.basis().words) {
        bool group_word = true;
        for (char l : w)
            if (!H.is_grouplike_gen(static_cast<unsigned char>(l))) {
                group_word = false;
                break;
            }
        if (!group_word) continue;
        TensorPoly d = H.delta_word(w);
        TensorPoly expect = TensorPoly::from_key(&H.F(), {w, w}, H.F().one());
        if (d == expect &&
            H.counit(NcPoly::from_word(&H.F(), w, H.F().one())) == H.F().one())
            out.push_back(w);
    }
    return out;
}

SkewPrimitiveSpace skew_primitives(const HopfPresentation& H, const Word& g, const Word& h) {
    const FieldCtx& F = H.F();
    const size_t N = H.dim();
    NcPoly gp = H.sys().reduce(NcPoly::from_word(&F, g, F.one()));
    NcPoly hp = H.sys().reduce(NcPoly::from_word(&F, h, F.one()));
    ColumnEchelon elim(F, /*track_kernel=*/true);
    for (size_t j = 0; j < N; ++j) {
        const Word& b = H.basis().words[j];
        NcPoly bp = NcPoly::from_word(&F, b, F.one());
        TensorPoly T = H.delta_word(b) - TensorPoly::tensor(bp, gp) - TensorPoly::tensor(hp, bp);
        SparseVec col;
        for (auto& [key, c] : T.terms())
            col.emplace_back(static_cast<uint32_t>(H.index_of(key[0]) * N + H.index_of(key[1])), c);
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
        elim.add_column(std::move(col));
    }
    SkewPrimitiveSpace out;
    out.g = g;
    out.h = h;
    for (const auto& kv : elim.kernel()) {
        NcPoly v(&F);
        for (size_t j = 0; j < kv.size(); ++j)
            if (kv[j] != F.zero()) v.add_term(H.basis().words[j], kv[j]);
        out.basis.push_back(std::move(v));
    }
    return out;
}

FiltrationReport coradical_filtration(const HopfPresentation& H, bool check_taft_wilson) {
    const FieldCtx& F = H.F();
    const size_t N = H.dim();
    FiltrationReport rep;

    std::vector<Word> G = group_likes(H);
    std::vector<bool> is_group_idx(N, false);
    for (auto& w : G) is_group_idx[H.index_of(w)] = true;

    // Sparse coproduct table on the basis.
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, Fq>>> delta(N);
    for (size_t j = 0; j < N; ++j) {
        TensorPoly dw = H.delta_word(H.basis().words[j]);
        for (auto& [key, c] : dw.terms())
            delta[j].emplace_back(static_cast<uint32_t>(H.index_of(key[0])),
                                  static_cast<uint32_t>(H.index_of(key[1])), c);
    }

    // J = C_0-perp inside the dual algebra; C_n = (J^{n+1})-perp. J itself is
    // spanned by the unit dual vectors off the group-likes, so J^{m+1} = J^m.J
    // only ever needs products f.e_b, which read one transposed slice of the
    // coproduct table: (f.e_b)(w) = sum_{(a,b,c) in Delta(w)} c f(a).
    using Dual = std::vector<Fq>;
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, Fq>>> by_right(N);  // b -> (w, a, c)
    for (uint32_t j = 0; j < N; ++j)
        for (auto& [a, b, c] : delta[j]) by_right[b].emplace_back(j, a, c);
    auto mul_by_unit = [&](const Dual& f, uint32_t b) {
        Dual out(N, F.zero());
        for (auto& [w, a, c] : by_right[b]) out[w] = F.add(out[w], F.mul(c, f[a]));
        return out;
    };
    auto echelonize = [&](const std::vector<Dual>& vecs) {
        ColumnEchelon elim(F, false);
        std::vector<Dual> basis;
        for (const auto& v : vecs) {
            SparseVec sv;
            for (uint32_t i = 0; i < N; ++i)
                if (v[i] != F.zero()) sv.emplace_back(i, v[i]);
            if (elim.add_column(std::move(sv))) basis.push_back(v);
        }
        return basis;
    };

    std::vector<Dual> J;
    std::vector<uint32_t> j_units;
    for (uint32_t i = 0; i < N; ++i)
        if (!is_group_idx[i]) {
            Dual e(N, F.zero());
            e[i] = F.one();
            J.push_back(std::move(e));
            j_units.push_back(i);
        }

    std::vector<std::vector<Dual>> powers;  // powers[m] = basis of J^{m+1}
    powers.push_back(J);
    while (!powers.back().empty()) {
        std::vector<Dual> prods;
        for (const auto& f : powers.back())
            for (uint32_t b : j_units) prods.push_back(mul_by_unit(f, b));
        std::vector<Dual> next = echelonize(prods);
        if (next.size() == powers.back().size()) {
            powers.push_back(std::move(next));
            break;  // stationary, filtration will not exhaust
        }
        powers.push_back(std::move(next));
    }

    for (size_t m = 0; m < powers.size(); ++m) {
        rep.dims.push_back(N - powers[m].size());
        if (powers[m].empty()) break;
    }
    rep.exhausts = !rep.dims.empty() && rep.dims.back() == N;

    auto vanishes_on = [&](const std::vector<Dual>& space, size_t w) {
        for (const auto& f : space)
            if (f[w] != F.zero()) return false;
        return true;
    };
    for (size_t j = 0; j < N; ++j) {
        int level = -1;
        for (size_t m = 0; m < powers.size(); ++m)
            if (vanishes_on(powers[m], j)) {
                level = static_cast<int>(m);
                break;
            }
        rep.level_of[H.basis().words[j]] = level;
    }

    if (check_taft_wilson && rep.dims.size() >= 2) {
        size_t expect = G.size();
        for (auto& g : G)
            for (auto& h : G) {
                SkewPrimitiveSpace P = skew_primitives(H, g, h);
                size_t d = P.dim();
                if (g != h) d -= 1;  // remove K(g - h)
                expect += d;
            }
        rep.taft_wilson_level1 = (rep.dims[1] == expect);
    } else if (check_taft_wilson) {
        rep.taft_wilson_level1 = true;  // C_0 = H: nothing to check
    }
    return rep;
}

HopfData bosonize(const NicholsSpec& nichols, const YDRealization& yd,
                  std::shared_ptr<const FieldCtx> F) {
    const int nv = static_cast<int>(yd.basis.size());
    const int ng = yd.group.num_gens();
    if (nichols.truncation.size() != yd.basis.size())
        throw Error("bosonize: truncation/basis size mismatch");

    HopfData data;
    data.field = F;
    for (auto& b : yd.basis) {
        data.gens.names.push_back(b.name);
        data.gens.weights.push_back(1);
    }
    std::vector<long> group_order = {yd.group.n1};
    data.gens.names.push_back("g");
    data.gens.weights.push_back(0);
    if (ng == 2) {
        data.gens.names.push_back("h");
        data.gens.weights.push_back(0);
        group_order.push_back(yd.group.n2);
    }
    auto group_gen = [&](int t) { return nv + t; };

    auto chi_at = [&](const YDBasisElement& e, const std::vector<long>& deg) {
        Fq v = F->one();
        for (int t = 0; t < ng; ++t)
            v = F->mul(v, F->pow(e.character[static_cast<size_t>(t)], deg[static_cast<size_t>(t)]));
        return v;
    };
    // chi(deg) compatibility: diagonal entries match the truncation, cross
    // entries multiply to 1.
    for (int i = 0; i < nv; ++i) {
        const auto& ei = yd.basis[static_cast<size_t>(i)];
        Fq qii = chi_at(ei, ei.degree);
        long e = nichols.truncation[static_cast<size_t>(i)];
        bool ok = (e % F->p() == 0) ? (qii == F->one())
                                    : (qii != F->one() && F->multiplicative_order(qii) == e);
        if (e % F->p() == 0 && F->multiplicative_order(qii) != 1) ok = false;
        if (!ok)
            throw Error("bosonize: self-braiding of " + ei.name +
                        " incompatible with truncation " + std::to_string(e));
        for (int j = 0; j < nv; ++j) {
            if (i == j) continue;
            const auto& ej = yd.basis[static_cast<size_t>(j)];
            if (F->mul(chi_at(ei, ej.degree), chi_at(ej, ei.degree)) != F->one())
                throw Error("bosonize: cross braiding of " + ei.name + ", " + ej.name +
                            " not symmetric");
        }
    }

    auto gen = [&](int i) { return NcPoly::generator(F.get(), i); };
    auto unit = NcPoly::unit(F.get());
    // Group relations.
    for (int t = 0; t < ng; ++t) {
        data.relations.push_back(
            NcPoly::from_word(F.get(), word_of(group_gen(t), static_cast<int>(group_order[static_cast<size_t>(t)])), F->one()) -
            unit);
        data.grouplike_gens.push_back(group_gen(t));
        data.grouplike_orders[group_gen(t)] = group_order[static_cast<size_t>(t)];
        data.coproduct[group_gen(t)] = TensorPoly::from_key(
            F.get(), {word_of(group_gen(t)), word_of(group_gen(t))}, F->one());
        data.counit[group_gen(t)] = F->one();
    }
    if (ng == 2) {
        NcPoly gh = gen(group_gen(0)) * gen(group_gen(1));
        if (yd.group.kind == GroupSpec::Kind::Semidirect) {
            NcPoly htg = NcPoly::from_word(F.get(),
                                           word_of(group_gen(1), static_cast<int>(yd.group.twist)),
                                           F->one()) *
                         gen(group_gen(0));
            data.relations.push_back(gh - htg);
        } else {
            data.relations.push_back(gh - gen(group_gen(1)) * gen(group_gen(0)));
        }
    }
    // Commutations G x = chi(G) x G and the Nichols relations.
    for (int i = 0; i < nv; ++i) {
        const auto& e = yd.basis[static_cast<size_t>(i)];
        for (int t = 0; t < ng; ++t) {
            data.relations.push_back(gen(group_gen(t)) * gen(i) -
                                     (gen(i) * gen(group_gen(t)))
                                         .scaled(e.character[static_cast<size_t>(t)]));
        }
        data.relations.push_back(
            NcPoly::from_word(F.get(), word_of(i, static_cast<int>(nichols.truncation[static_cast<size_t>(i)])), F->one()));
        Word deg;
        for (int t = 0; t < ng; ++t) {
            long exp = e.degree[static_cast<size_t>(t)] % group_order[static_cast<size_t>(t)];
            if (exp < 0) exp += group_order[static_cast<size_t>(t)];
            deg += word_of(group_gen(t), static_cast<int>(exp));
        }
        data.coproduct[i] = TensorPoly::from_key(F.get(), {word_of(i), Word{}}, F->one());
        data.coproduct[i] += TensorPoly::from_key(F.get(), {deg, word_of(i)}, F->one());
        data.counit[i] = F->zero();
    }
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            data.relations.push_back(gen(j) * gen(i) - gen(i) * gen(j));

    if (yd.group.kind == GroupSpec::Kind::Semidirect) {
        std::vector<long long> a(static_cast<size_t>(data.gens.arity()), 1);
        std::vector<long long> b(static_cast<size_t>(data.gens.arity()), 1);
        a[static_cast<size_t>(group_gen(0))] = yd.group.n2;  // exceeds any twist < n2
        data.order = ReductionOrder::affine(std::move(a), std::move(b));
    }
    return data;
}

TensorPoly coproduct_tail(TailKind kind, const FieldCtx* F, int x_gen, int g_gen, long exponent,
                          long theta) {
    TensorPoly out(F, 2);
    if (kind == TailKind::Omega0 || kind == TailKind::OmegaTheta) {
        const long p = exponent;
        for (long i = 1; i <= p - 1; ++i) {
            // (p-1)!/(i!(p-i)!) is an integer (= C(p,i)/p); reduce mod p.
            unsigned long long num = factorial(p - 1);
            unsigned long long den = factorial(i) * factorial(p - i);
            Fq c = F->from_int(static_cast<long long>(num / den));
            Word left = word_of(x_gen, static_cast<int>(i));
            if (kind == TailKind::OmegaTheta)
                left += word_of(g_gen, static_cast<int>(theta * (p - i)));
            out.add_term({left, word_of(x_gen, static_cast<int>(p - i))}, c);
        }
        return out;
    }
    // ThetaQ: xi-factorial ratio; denominators (i)_xi! are nonzero for i < q.
    const long q = exponent;
    Fq xi = F->root(q);
    Fq num = xi_factorial(*F, q - 1, xi);
    for (long i = 1; i <= q - 1; ++i) {
        Fq den = F->mul(xi_factorial(*F, i, xi), xi_factorial(*F, q - i, xi));
        Fq c = F->div(num, den);
        Word left = word_of(x_gen, static_cast<int>(i)) + word_of(g_gen, static_cast<int>(q - i));
        out.add_term({left, word_of(x_gen, static_cast<int>(q - i))}, c);
    }
    return out;
}

IdentityCheck verify_identity(LemmaId id, int p, const std::map<std::string, long>& ints,
                              const std::map<std::string, Fq>& scalars,
                              std::shared_ptr<const FieldCtx> F) {
    auto get_int = [&](const char* k) {
        auto it = ints.find(k);
        if (it == ints.end()) throw Error(std::string("verify_identity: missing ") + k);
        return it->second;
    };
    auto get_scalar = [&](const char* k) {
        auto it = scalars.find(k);
        if (it == scalars.end()) throw Error(std::string("verify_identity: missing ") + k);
        return it->second;
    };
    auto finish = [&](const GenSet& gens, const NcPoly& residue) {
        IdentityCheck c;
        c.pass = residue.is_zero();
        if (!c.pass) c.residue = residue.to_string(gens);
        return c;
    };
    auto finish2 = [&](const GenSet& gens, const TensorPoly& residue) {
        IdentityCheck c;
        c.pass = residue.is_zero();
        if (!c.pass) c.residue = residue.to_string(gens);
        return c;
    };
    const FieldCtx* f = F.get();
    auto one = NcPoly::unit(f);

    if (id == LemmaId::AdjointPowerGroup || id == LemmaId::SkewPrimitivePthPower) {
        long n = get_int("n");
        GenSet gens{{"x", 1}, {"g", 0}};
        NcPoly x = NcPoly::generator(f, 0), g = NcPoly::generator(f, 1);
        std::vector<NcPoly> rels = {
            NcPoly::from_word(f, word_of(1, static_cast<int>(n)), f->one()) - one,
            g * x - x * g - g + g * g};
        auto sys = RewriteSystem::orient(f, gens, rels).complete(32).system;
        if (id == LemmaId::AdjointPowerGroup) {
            NcPoly r1 = sys.reduce(ad_R_power(g, x, p - 1) - g + g.pow(p));
            NcPoly r2 = sys.reduce(ad_R_power(g, x, p) - (g * x - x * g));
            IdentityCheck c;
            c.pass = r1.is_zero() && r2.is_zero();
            if (!c.pass) c.residue = (r1.is_zero() ? r2 : r1).to_string(gens);
            return c;
        }
        // x in P_{1,g}: Delta(x^p - x) - (x^p-x) (x) 1 - g^p (x) (x^p-x) = 0.
        std::vector<TensorPoly> images = {
            TensorPoly::tensor(x, one) + TensorPoly::tensor(g, x),
            TensorPoly::tensor(g, g)};
        NcPoly v = x.pow(p) - x;
        TensorPoly lhs = sys.reduce(substitute(v, images));
        TensorPoly rhs = sys.reduce(TensorPoly::tensor(v, one) + TensorPoly::tensor(g.pow(p), v));
        return finish2(gens, lhs - rhs);
    }

    if (id == LemmaId::AdjointPowerRightThree) {
        long m = get_int("m");
        Fq l1 = get_scalar("lambda1"), l2 = get_scalar("lambda2"), l3 = get_scalar("lambda3");
        GenSet gens{{"y", 1}, {"x", 1}, {"g", 0}};
        NcPoly y = NcPoly::generator(f, 0), x = NcPoly::generator(f, 1),
               g = NcPoly::generator(f, 2);
        std::vector<NcPoly> rels = {
            NcPoly::from_word(f, word_of(2, static_cast<int>(m)), f->one()) - one,
            g * x - x * g - (g - g * g).scaled(l1),
            g * y - y * g - (g - g * g).scaled(l2),
            x * y - y * x + y.scaled(l1) - x.scaled(l2) - (one - g * g).scaled(l3)};
        auto sys = RewriteSystem::orient(f, gens, rels).complete(64).system;
        NcPoly residue =
            sys.reduce(ad_R_power(x, y, p) - ad_R_power(x, y, 1).scaled(f->pow(l2, p - 1)));
        return finish(gens, residue);
    }

    if (id == LemmaId::AdjointPowerLeftThree) {
        long m = get_int("m"), mu = get_int("mu");
        Fq l1 = get_scalar("lambda1"), l3 = get_scalar("lambda3");
        GenSet gens{{"y", 1}, {"x", 1}, {"g", 0}};
        NcPoly y = NcPoly::generator(f, 0), x = NcPoly::generator(f, 1),
               g = NcPoly::generator(f, 2);
        std::vector<NcPoly> rels = {
            NcPoly::from_word(f, word_of(2, static_cast<int>(m)), f->one()) - one,
            g * x - x * g - (g - g * g).scaled(l1),
            g * y - y * g,
            x * y - y * x + y.scaled(f->mul(l1, f->from_int(mu))) -
                (one - g.pow(mu + 1)).scaled(l3)};
        auto sys = RewriteSystem::orient(f, gens, rels).complete(64).system;
        Fq coeff = f->pow(f->neg(f->mul(l1, f->from_int(mu))), p - 1);
        NcPoly residue = sys.reduce(ad_L_power(x, y, p) - ad_L_power(x, y, 1).scaled(coeff));
        return finish(gens, residue);
    }

    // OmegaAdjointCocycle: (omega_theta)(ad_R(y (x) 1 + g^{theta p} (x) y))^{p-1}
    //                      = -d^1_{1, g^{theta p^2}}(([x,y] x^{p-1})(ad_R y)^{p-2}).
    long q = get_int("q"), theta = get_int("theta");
    Fq l2 = get_scalar("lambda2"), l3 = get_scalar("lambda3");
    GenSet gens{{"y", 1}, {"x", 1}, {"g", 0}};
    NcPoly y = NcPoly::generator(f, 0), x = NcPoly::generator(f, 1), g = NcPoly::generator(f, 2);
    std::vector<NcPoly> rels = {
        NcPoly::from_word(f, word_of(2, static_cast<int>(q)), f->one()) - one,
        g * x - x * g,
        g * y - y * g,
        x * y - y * x - x.scaled(l2) - (one - g.pow(theta * (p + 1))).scaled(l3)};
    auto sys = RewriteSystem::orient(f, gens, rels).complete(64).system;
    TensorPoly omega = sys.reduce(coproduct_tail(TailKind::OmegaTheta, f, 1, 2, p, theta));
    TensorPoly D = TensorPoly::tensor(y, one) + TensorPoly::tensor(g.pow(theta * p), y);
    TensorPoly lhs = sys.reduce(ad_R_power(omega, D, p - 1));
    NcPoly W = sys.reduce(ad_R_power((x * y - y * x) * x.pow(p - 1), y, p - 2));
    std::vector<TensorPoly> images = {
        TensorPoly::tensor(y, one) + TensorPoly::tensor(g.pow(theta * p), y) + omega,
        TensorPoly::tensor(x, one) + TensorPoly::tensor(g.pow(theta), x),
        TensorPoly::tensor(g, g)};
    TensorPoly dW = sys.reduce(substitute(W, images));
    TensorPoly d1 = sys.reduce(TensorPoly::tensor(g.pow(theta * p * p), W) - dW +
                               TensorPoly::tensor(W, one));
    TensorPoly residue = sys.reduce(lhs + d1);
    return finish2(gens, residue);
}

IsoReport iso_check(const HopfPresentation& H1, const HopfPresentation& H2,
                    const std::vector<NcPoly>& phi) {
    IsoReport rep;
    const FieldCtx& F = H1.F();
    if (H1.dim() != H2.dim()) {
        rep.failure = "dimension mismatch";
        return rep;
    }
    for (auto& r : H1.relations()) {
        NcPoly img = H2.sys().reduce(substitute(r, phi));
        if (!img.is_zero()) {
            rep.failure = "relation not respected: " + r.to_string(H1.gens()) + " -> " +
                          img.to_string(H2.gens());
            return rep;
        }
    }
    for (int i = 0; i < H1.gens().arity(); ++i) {
        NcPoly img = H2.sys().reduce(phi[static_cast<size_t>(i)]);
        if (H2.counit(img) != H1.counit_of_gen(i)) {
            rep.failure = "counit not respected on " + H1.gens().names[static_cast<size_t>(i)];
            return rep;
        }
        TensorPoly lhs = H2.delta(img);
        TensorPoly rhs(&F, 2);
        for (auto& [key, c] : H1.coproduct(i).terms()) {
            NcPoly u = H2.sys().reduce(substitute_word(&F, key[0], phi));
            NcPoly v = H2.sys().reduce(substitute_word(&F, key[1], phi));
            rhs += TensorPoly::tensor(u, v).scaled(c);
        }
        rhs = H2.sys().reduce(rhs);
        if (!(lhs == rhs)) {
            rep.failure = "coproduct not respected on " + H1.gens().names[static_cast<size_t>(i)];
            return rep;
        }
    }
    Matrix M(H2.dim(), H1.dim());
    for (size_t j = 0; j < H1.dim(); ++j) {
        NcPoly img = H2.sys().reduce(substitute_word(&F, H1.basis().words[j], phi));
        for (auto& [w, c] : img.terms()) M.at(H2.index_of(w), j) = c;
    }
    if (mat_rank(F, M) != H1.dim()) {
        rep.failure = "not bijective on the normal basis";
        return rep;
    }
    rep.pass = true;
    return rep;
}

HopfPresentation make_pq_family(PqFamily family, long p, long q, Fq lambda,
                                std::shared_ptr<const FieldCtx> F) {
    const FieldCtx* f = F.get();
    HopfData data;
    data.field = F;
    data.gens = GenSet{{"x", 1}, {"g", 0}};
    NcPoly x = NcPoly::generator(f, 0), g = NcPoly::generator(f, 1), one = NcPoly::unit(f);
    data.relations.push_back(NcPoly::from_word(f, word_of(1, static_cast<int>(q)), f->one()) - one);
    if (family == PqFamily::A)
        data.relations.push_back(g * x - x * g - g + g * g);
    else
        data.relations.push_back(g * x - x * g);
    data.relations.push_back(x.pow(p) - x - (one - g.pow(p)).scaled(lambda));
    data.grouplike_gens = {1};
    data.grouplike_orders[1] = q;
    data.coproduct[1] = TensorPoly::tensor(g, g);
    data.coproduct[0] = TensorPoly::tensor(x, one) + TensorPoly::tensor(g, x);
    data.counit[1] = f->one();
    data.counit[0] = f->zero();
    data.complete_if_needed = true;
    return HopfPresentation::build(std::move(data));
}

std::optional<PqIsoWitness> find_pq_iso(PqFamily family, long p, long q, Fq lambda, Fq gamma,
                                        std::shared_ptr<const FieldCtx> F, int max_k) {
    const int k0 = F->k();
    std::set<long> orders(F->registered_orders().begin(), F->registered_orders().end());
    for (int k = k0; k <= max_k; k += k0) {
        std::shared_ptr<const FieldCtx> ctx =
            (k == k0) ? F : FieldCtx::make(static_cast<int>(p), orders, k);
        Fq le = lambda, ge = gamma;
        if (k != k0) {
            FieldEmbedding embed(F, ctx);
            le = embed(lambda);
            ge = embed(gamma);
        }
        std::vector<Fq> bs;
        if (family == PqFamily::A) {
            bs.push_back(ctx->one());
        } else {
            for (long b = 1; b < p; ++b) bs.push_back(ctx->from_int(b));
        }
        for (Fq b : bs) {
            for (uint32_t av = 0; av < ctx->size(); ++av) {
                Fq a{av};
                Fq lhs = ctx->add(ctx->sub(ctx->pow(a, p), a),
                                  ctx->sub(ctx->mul(ctx->pow(b, p), ge), le));
                if (lhs != ctx->zero()) continue;
                HopfPresentation H1 = make_pq_family(family, p, q, le, ctx);
                HopfPresentation H2 = make_pq_family(family, p, q, ge, ctx);
                const FieldCtx* f = ctx.get();
                NcPoly gp = NcPoly::generator(f, 1);
                NcPoly xp = NcPoly::generator(f, 0);
                std::vector<NcPoly> phi = {
                    (NcPoly::unit(f) - gp).scaled(a) + xp.scaled(b), gp};
                IsoReport rep = iso_check(H1, H2, phi);
                if (rep.pass) {
                    PqIsoWitness w;
                    w.a = a;
                    w.b = b;
                    w.field = ctx;
                    w.extended = (k != k0);
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace hopfforge
