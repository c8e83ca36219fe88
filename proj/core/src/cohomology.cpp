#include "hopfforge/cohomology.hpp"

#include <algorithm>

namespace hopfforge {

namespace {

uint64_t ipow(uint64_t b, int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Decode a tensor-power index into its factor indices (big-endian).
void decode(uint64_t idx, size_t dim, int n, std::vector<uint32_t>& out) {
    out.assign(static_cast<size_t>(n), 0);
    for (int t = n - 1; t >= 0; --t) {
        out[static_cast<size_t>(t)] = static_cast<uint32_t>(idx % dim);
        idx /= dim;
    }
}

uint64_t encode(const std::vector<uint32_t>& idxs, size_t dim) {
    uint64_t v = 0;
    for (uint32_t i : idxs) v = v * dim + i;
    return v;
}

void sort_col(const FieldCtx& F, SparseVec& col) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates
    SparseVec out;
    for (auto& [r, c] : col) {
        if (!out.empty() && out.back().first == r) {
            out.back().second = F.add(out.back().second, c);
            if (out.back().second == F.zero()) out.pop_back();
        } else if (c != F.zero()) {
            out.emplace_back(r, c);
        }
    }
    col = std::move(out);
}

}  // namespace

uint32_t Coalgebra::grouplike_named(const std::string& name) const {
    for (uint32_t g : grouplikes)
        if (names[g] == name) return g;
    throw Error("no group-like basis element named " + name);
}

Coalgebra Coalgebra::from_hopf(const HopfPresentation& H) {
    Coalgebra C;
    C.field = H.field();
    const size_t N = H.dim();
    C.names.reserve(N);
    C.delta.resize(N);
    C.counit.resize(N);
    C.weight.resize(N);
    for (size_t j = 0; j < N; ++j) {
        const Word& w = H.basis().words[j];
        C.names.push_back(word_to_string(H.gens(), w));
        TensorPoly dw = H.delta_word(w);
        for (auto& [key, c] : dw.terms())
            C.delta[j].emplace_back(static_cast<uint32_t>(H.index_of(key[0])),
                                    static_cast<uint32_t>(H.index_of(key[1])), c);
        C.counit[j] = H.counit(NcPoly::from_word(&H.F(), w, H.F().one()));
        C.weight[j] = H.gens().weight_of_word(w);
    }
    for (auto& w : group_likes(H)) C.grouplikes.push_back(static_cast<uint32_t>(H.index_of(w)));
    return C;
}

Coalgebra Coalgebra::divided_power_line(std::shared_ptr<const FieldCtx> F, long e) {
    Coalgebra C;
    C.field = F;
    C.delta.resize(static_cast<size_t>(e));
    for (long i = 0; i < e; ++i) {
        C.names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        C.counit.push_back(i == 0 ? F->one() : F->zero());
        C.weight.push_back(static_cast<int>(i));
        for (long j = 0; j <= i; ++j) {
            // binomial C(i,j) mod p via the field's Pascal arithmetic
            Fq c = xi_binomial(*F, i, j, F->one());
            if (c != F->zero())
                C.delta[static_cast<size_t>(i)].emplace_back(static_cast<uint32_t>(j),
                                                             static_cast<uint32_t>(i - j), c);
        }
    }
    C.grouplikes = {0};
    return C;
}

std::vector<SparseVec> differential_columns(const Coalgebra& C, BicomoduleSpec spec, int n) {
    const FieldCtx& F = *C.field;
    const size_t N = C.dim();
    if (spec.g >= N || spec.h >= N) throw Error("bicomodule spec out of range");
    bool g_ok = false, h_ok = false;
    for (uint32_t v : C.grouplikes) {
        g_ok |= (v == spec.g);
        h_ok |= (v == spec.h);
    }
    if (!g_ok || !h_ok) throw Error("bicomodule spec is not group-like");

    std::vector<SparseVec> cols;
    if (n == 0) {
        SparseVec col;
        col.emplace_back(spec.g, F.one());
        col.emplace_back(spec.h, F.neg(F.one()));
        sort_col(F, col);
        cols.push_back(std::move(col));
        return cols;
    }
    const uint64_t dom = ipow(N, n);
    cols.reserve(dom);
    std::vector<uint32_t> idxs, out_idx;
    Fq minus_one = F.neg(F.one());
    for (uint64_t t = 0; t < dom; ++t) {
        decode(t, N, n, idxs);
        SparseVec col;
        // h (x) x
        out_idx.assign(1, spec.h);
        out_idx.insert(out_idx.end(), idxs.begin(), idxs.end());
        col.emplace_back(static_cast<uint32_t>(encode(out_idx, N)), F.one());
        // alternating inner coproducts
        Fq sign = minus_one;
        for (int i = 0; i < n; ++i) {
            for (auto& [a, b, c] : C.delta[idxs[static_cast<size_t>(i)]]) {
                out_idx.assign(idxs.begin(), idxs.begin() + i);
                out_idx.push_back(a);
                out_idx.push_back(b);
                out_idx.insert(out_idx.end(), idxs.begin() + i + 1, idxs.end());
                col.emplace_back(static_cast<uint32_t>(encode(out_idx, N)), F.mul(sign, c));
            }
            sign = F.neg(sign);
        }
        // (-1)^{n+1} x (x) g
        Fq tail_sign = (n % 2 == 0) ? minus_one : F.one();
        out_idx.assign(idxs.begin(), idxs.end());
        out_idx.push_back(spec.g);
        col.emplace_back(static_cast<uint32_t>(encode(out_idx, N)), tail_sign);
        sort_col(F, col);
        cols.push_back(std::move(col));
    }
    return cols;
}

Matrix differential_matrix(const Coalgebra& C, BicomoduleSpec spec, int n) {
    auto cols = differential_columns(C, spec, n);
    const size_t rows = ipow(C.dim(), n + 1);
    Matrix M(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [r, c] : cols[j]) M.at(r, j) = c;
    return M;
}

namespace {

size_t rank_of_columns(const FieldCtx& F, const std::vector<SparseVec>& cols) {
    ColumnEchelon elim(F, false);
    for (auto& c : cols) elim.add_column(c);
    return elim.rank();
}

// d^{n+1} o d^n = 0, spot-asserted at construction time.
void assert_complex(const Coalgebra& C, BicomoduleSpec spec, int n, uint64_t budget) {
    if (ipow(C.dim(), n + 2) > budget) return;
    const FieldCtx& F = *C.field;
    auto dn = differential_columns(C, spec, n);
    auto dn1 = differential_columns(C, spec, n + 1);
    for (auto& col : dn) {
        // apply d^{n+1} to the image column
        SparseVec acc;
        for (auto& [r, c] : col) {
            for (auto& [r2, c2] : dn1[r]) acc.emplace_back(r2, F.mul(c, c2));
        }
        sort_col(F, acc);
        if (!acc.empty()) throw Error("complex property d.d = 0 violated");
    }
}

}  // namespace

CohomologyReport cohomology_dims(const Coalgebra& C, BicomoduleSpec spec, int n, uint64_t budget) {
    if (n < 0) throw Error("cohomology_dims: n must be >= 0");
    if (n == 0) {
        // H^0 = ker d^0: one-dimensional iff g = h.
        CohomologyReport rep;
        rep.n = 0;
        rep.dim_Z = 1 - rank_of_columns(*C.field, differential_columns(C, spec, 0));
        rep.dim_B = 0;
        rep.dim_H = rep.dim_Z;
        return rep;
    }
    const uint64_t needed = ipow(C.dim(), n + 1);
    if (needed > budget)
        throw Error("cohomology budget exceeded: need " + std::to_string(needed) +
                    " tensor basis elements");
    const FieldCtx& F = *C.field;
    assert_complex(C, spec, n - 1, budget);
    auto dn = differential_columns(C, spec, n);
    auto dprev = differential_columns(C, spec, n - 1);
    CohomologyReport rep;
    rep.n = n;
    size_t rank_dn = rank_of_columns(F, dn);
    rep.dim_Z = dn.size() - rank_dn;
    rep.dim_B = rank_of_columns(F, dprev);
    rep.dim_H = rep.dim_Z - rep.dim_B;
    return rep;
}

CohomologyReport graded_cohomology_dims(const Coalgebra& C, BicomoduleSpec spec, int n,
                                        uint64_t budget) {
    if (C.weight[spec.g] != 0 || C.weight[spec.h] != 0)
        throw Error("graded cohomology requires degree-0 group-likes");
    CohomologyReport rep = cohomology_dims(C, spec, n, budget);
    const FieldCtx& F = *C.field;
    const size_t N = C.dim();
    auto degree_of = [&](uint64_t idx, int rank) {
        int d = 0;
        uint64_t t = idx;
        for (int i = 0; i < rank; ++i) {
            d += C.weight[t % N];
            t /= N;
        }
        return d;
    };
    auto dn = differential_columns(C, spec, n);
    auto dprev = differential_columns(C, spec, n - 1);
    std::map<int, std::vector<SparseVec>> dn_by_deg, dprev_by_deg;
    std::map<int, size_t> dom_by_deg;
    for (uint64_t t = 0; t < dn.size(); ++t) {
        int d = degree_of(t, n);
        dn_by_deg[d].push_back(dn[t]);
        dom_by_deg[d] += 1;
    }
    for (uint64_t t = 0; t < dprev.size(); ++t)
        dprev_by_deg[degree_of(t, n - 1)].push_back(dprev[t]);
    for (auto& [d, cols] : dn_by_deg) {
        size_t z = dom_by_deg[d] - rank_of_columns(F, cols);
        size_t b = 0;
        if (auto it = dprev_by_deg.find(d); it != dprev_by_deg.end())
            b = rank_of_columns(F, it->second);
        size_t h = z - b;
        if (h > 0) rep.adams[d] = h;
    }
    return rep;
}

CohomologyReport cobar_dims(const Coalgebra& C, int n, uint64_t budget) {
    if (C.grouplikes.size() != 1)
        throw Error("cobar complex requires a connected coalgebra");
    const FieldCtx& F = *C.field;
    const uint32_t g = C.grouplikes[0];
    // C+ = ker eps: basis b - eps(b) g for b != g. With our bases eps vanishes
    // off the group-like, so C+ keeps the remaining basis elements.
    std::vector<uint32_t> plus;
    std::vector<int32_t> pos(C.dim(), -1);
    for (uint32_t i = 0; i < C.dim(); ++i) {
        if (i == g) continue;
        if (C.counit[i] != F.zero())
            throw Error("cobar complex: counit not concentrated on the group-like");
        pos[i] = static_cast<int32_t>(plus.size());
        plus.push_back(i);
    }
    const size_t M = plus.size();
    // Delta+(c) = Delta(c) - c (x) g - g (x) c, expressed inside C+ (x) C+.
    std::vector<std::vector<std::tuple<uint32_t, uint32_t, Fq>>> dplus(M);
    for (size_t i = 0; i < M; ++i) {
        for (auto& [a, b, c] : C.delta[plus[i]]) {
            if (a == g || b == g) continue;  // removes c(x)g and g(x)c exactly
            dplus[i].emplace_back(static_cast<uint32_t>(pos[a]), static_cast<uint32_t>(pos[b]),
                                  c);
        }
    }
    auto columns = [&](int rank) {
        const uint64_t dom = ipow(M, rank);
        std::vector<SparseVec> cols;
        cols.reserve(dom);
        std::vector<uint32_t> idxs, out_idx;
        for (uint64_t t = 0; t < dom; ++t) {
            decode(t, M, rank, idxs);
            SparseVec col;
            Fq sign = F.neg(F.one());
            for (int i = 0; i < rank; ++i) {
                for (auto& [a, b, c] : dplus[idxs[static_cast<size_t>(i)]]) {
                    out_idx.assign(idxs.begin(), idxs.begin() + i);
                    out_idx.push_back(a);
                    out_idx.push_back(b);
                    out_idx.insert(out_idx.end(), idxs.begin() + i + 1, idxs.end());
                    col.emplace_back(static_cast<uint32_t>(encode(out_idx, M)), F.mul(sign, c));
                }
                sign = F.neg(sign);
            }
            sort_col(F, col);
            cols.push_back(std::move(col));
        }
        return cols;
    };
    const uint64_t needed = ipow(M, n + 1);
    if (needed > budget) throw Error("cobar budget exceeded");
    CohomologyReport rep;
    rep.n = n;
    auto dn = columns(n);
    size_t rank_dn = rank_of_columns(F, dn);
    rep.dim_Z = dn.size() - rank_dn;
    rep.dim_B = (n >= 2) ? rank_of_columns(F, columns(n - 1)) : 0;
    rep.dim_H = rep.dim_Z - rep.dim_B;
    return rep;
}

std::optional<NonprimitiveWitness> nonprimitive_generator_witness(
    const Coalgebra& C, const std::vector<uint32_t>& D_indices, BicomoduleSpec spec) {
    const FieldCtx& F = *C.field;
    const size_t N = C.dim();
    std::vector<int32_t> dpos(N, -1);
    for (size_t i = 0; i < D_indices.size(); ++i) dpos[D_indices[i]] = static_cast<int32_t>(i);
    // D must be a subcoalgebra.
    for (uint32_t d : D_indices)
        for (auto& [a, b, c] : C.delta[d]) {
            (void)c;
            if (dpos[a] < 0 || dpos[b] < 0) throw Error("D is not a subcoalgebra");
        }
    // Restriction of C's data to D.
    Coalgebra D;
    D.field = C.field;
    D.delta.resize(D_indices.size());
    for (size_t i = 0; i < D_indices.size(); ++i) {
        D.names.push_back(C.names[D_indices[i]]);
        D.counit.push_back(C.counit[D_indices[i]]);
        D.weight.push_back(C.weight[D_indices[i]]);
        for (auto& [a, b, c] : C.delta[D_indices[i]])
            D.delta[i].emplace_back(static_cast<uint32_t>(dpos[a]), static_cast<uint32_t>(dpos[b]),
                                    c);
    }
    for (uint32_t g : C.grouplikes)
        if (dpos[g] >= 0) D.grouplikes.push_back(static_cast<uint32_t>(dpos[g]));
    if (dpos[spec.g] < 0 || dpos[spec.h] < 0) throw Error("spec group-likes must lie in D");
    BicomoduleSpec dspec{static_cast<uint32_t>(dpos[spec.g]), static_cast<uint32_t>(dpos[spec.h])};

    auto d2 = differential_columns(D, dspec, 2);
    auto d1 = differential_columns(D, dspec, 1);
    const size_t M = D_indices.size();

    for (uint32_t x = 0; x < N; ++x) {
        if (dpos[x] >= 0) continue;
        // t = d^1_{g,h}(x) = h (x) x - Delta(x) + x (x) g; check it lands in
        // D (x) D (the x-terms must cancel).
        std::map<uint64_t, Fq> t;
        auto add = [&](uint32_t a, uint32_t b, Fq c) {
            if (c == F.zero()) return;
            uint64_t key = static_cast<uint64_t>(a) * N + b;
            auto [it, inserted] = t.try_emplace(key, c);
            if (!inserted) {
                it->second = F.add(it->second, c);
                if (it->second == F.zero()) t.erase(it);
            }
        };
        add(spec.h, x, F.one());
        for (auto& [a, b, c] : C.delta[x]) add(a, b, F.neg(c));
        add(x, spec.g, F.one());
        bool in_D = true;
        for (auto& [key, c] : t) {
            (void)c;
            if (dpos[key / N] < 0 || dpos[key % N] < 0) {
                in_D = false;
                break;
            }
        }
        if (!in_D || t.empty()) continue;
        // Express t in D (x) D coordinates.
        SparseVec tv;
        for (auto& [key, c] : t)
            tv.emplace_back(
                static_cast<uint32_t>(static_cast<uint64_t>(dpos[key / N]) * M +
                                      static_cast<uint64_t>(dpos[key % N])),
                c);
        std::sort(tv.begin(), tv.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // Cocycle: d^2(t) = 0.
        SparseVec img;
        for (auto& [r, c] : tv)
            for (auto& [r2, c2] : d2[r]) img.emplace_back(r2, F.mul(c, c2));
        sort_col(F, img);
        NonprimitiveWitness w;
        w.element = C.names[x];
        w.cocycle = img.empty();
        if (!w.cocycle) continue;
        // Nonzero class: t independent of im(d^1).
        ColumnEchelon elim(F, false);
        for (auto& col : d1) elim.add_column(col);
        w.nonzero_class = elim.add_column(tv);
        if (w.nonzero_class) return w;
    }
    return std::nullopt;
}

}  // namespace hopfforge
