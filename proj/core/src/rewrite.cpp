#include "hopfforge/rewrite.hpp"

#include <algorithm>
#include <deque>

namespace hopfforge {

namespace {

// Saturating affine composition on words; a word is the composition of its
// letters' maps, leftmost outermost.
struct AffineValue {
    unsigned long long a = 1, b = 0;
    bool saturated = false;
};

constexpr unsigned long long kAffineCap = 1ull << 60;

AffineValue affine_of_word(const ReductionOrder& ord, const Word& w) {
    AffineValue acc;
    for (char ch : w) {
        size_t i = static_cast<unsigned char>(ch);
        unsigned long long ai = static_cast<unsigned long long>(ord.affine_a.at(i));
        unsigned long long bi = static_cast<unsigned long long>(ord.affine_b.at(i));
        // acc := acc o f_i : n -> acc.a * (ai*n + bi) + acc.b
        if (acc.a > kAffineCap / std::max(1ull, ai)) acc.saturated = true;
        unsigned long long na = acc.a * ai;
        unsigned long long nb = acc.a * bi + acc.b;
        if (nb > kAffineCap) acc.saturated = true;
        acc.a = na;
        acc.b = nb;
        if (acc.saturated) break;
    }
    return acc;
}

int wll_compare(const GenSet& gens, const Word& a, const Word& b) {
    int wa = gens.weight_of_word(a), wb = gens.weight_of_word(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a == b) return 0;
    return a < b ? -1 : 1;
}

}  // namespace

ReductionOrder ReductionOrder::affine(std::vector<long long> a, std::vector<long long> b) {
    ReductionOrder o;
    o.kind = Kind::Affine;
    o.affine_a = std::move(a);
    o.affine_b = std::move(b);
    for (size_t i = 0; i < o.affine_a.size(); ++i)
        if (o.affine_a[i] < 1 || o.affine_b[i] < 1)
            throw Error("affine interpretation requires a >= 1 and b >= 1");
    return o;
}

int ReductionOrder::compare(const GenSet& gens, const Word& a, const Word& b) const {
    if (kind == Kind::WLL) return wll_compare(gens, a, b);
    AffineValue va = affine_of_word(*this, a), vb = affine_of_word(*this, b);
    if (va.saturated || vb.saturated) return kIncomparable;
    if (va.a == vb.a && va.b == vb.b) return wll_compare(gens, a, b);
    if (va.a >= vb.a && va.b > vb.b) return 1;
    if (vb.a >= va.a && vb.b > va.b) return -1;
    return kIncomparable;
}

std::unordered_map<Word, size_t> basis_index(const NormalBasis& basis) {
    std::unordered_map<Word, size_t> idx;
    idx.reserve(basis.words.size());
    for (size_t i = 0; i < basis.words.size(); ++i) idx.emplace(basis.words[i], i);
    return idx;
}

RewriteSystem RewriteSystem::orient(const FieldCtx* F, GenSet gens,
                                    std::vector<NcPoly> relations, ReductionOrder order) {
    if (order.kind == ReductionOrder::Kind::Affine &&
        order.affine_a.size() != static_cast<size_t>(gens.arity()))
        throw Error("affine interpretation arity mismatch");
    RewriteSystem sys(F, std::move(gens), order);
    for (auto& rel : relations) sys.admit(std::move(rel));
    return sys;
}

Rule RewriteSystem::orient_to_rule(const NcPoly& relation) const {
    const auto& terms = relation.terms();
    if (terms.empty()) throw Error("cannot orient the zero relation");
    auto best = terms.begin();
    for (auto it = std::next(terms.begin()); it != terms.end(); ++it) {
        int c = order_.compare(gens_, it->first, best->first);
        if (c == 1) best = it;
    }
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        if (it == best) continue;
        if (order_.compare(gens_, best->first, it->first) != 1) {
            throw UnorientableError("relation has no strict maximum monomial: tied monomials '" +
                                    word_to_string(gens_, best->first) + "' and '" +
                                    word_to_string(gens_, it->first) + "'");
        }
    }
    if (best->first.empty()) throw UnorientableError("relation reduces to a nonzero scalar");
    Fq inv_lead = F_->inv(best->second);
    NcPoly rhs(F_);
    for (auto& [w, c] : terms)
        if (w != best->first) rhs.add_term(w, F_->neg(F_->mul(c, inv_lead)));
    return Rule{best->first, std::move(rhs)};
}

void RewriteSystem::admit(NcPoly relation) {
    std::deque<NcPoly> pending;
    pending.push_back(std::move(relation));
    while (!pending.empty()) {
        NcPoly rel = reduce(pending.front());
        pending.pop_front();
        if (rel.is_zero()) continue;
        Rule r = orient_to_rule(rel);
        // Retire rules whose lhs becomes reducible; their content re-enters as
        // relations so the system stays inter-reduced.
        std::vector<Rule> kept;
        kept.reserve(rules_.size() + 1);
        for (auto& old : rules_) {
            if (old.lhs.find(r.lhs) != Word::npos) {
                pending.push_back(NcPoly::from_word(F_, old.lhs, F_->one()) - old.rhs);
            } else {
                kept.push_back(std::move(old));
            }
        }
        rules_ = std::move(kept);
        rules_.push_back(std::move(r));
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            cache_->map.clear();
        }
        for (auto& rule : rules_) {
            NcPoly reduced = reduce(rule.rhs);
            if (!(reduced == rule.rhs)) {
                rule.rhs = std::move(reduced);
                std::lock_guard<std::mutex> lock(cache_->mutex);
                cache_->map.clear();
            }
        }
    }
}

bool RewriteSystem::find_redex(const Word& w, size_t* pos, size_t* rule) const {
    for (size_t ri = 0; ri < rules_.size(); ++ri) {
        size_t at = w.find(rules_[ri].lhs);
        if (at != Word::npos) {
            *pos = at;
            *rule = ri;
            return true;
        }
    }
    return false;
}

NcPoly RewriteSystem::reduce_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->map.find(w);
        if (it != cache_->map.end()) return it->second;
    }
    NcPoly result = reduce_word_uncached(w);
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->map.emplace(w, result);
    }
    return result;
}

NcPoly RewriteSystem::reduce_word_uncached(const Word& w) const {
    size_t pos = 0, ri = 0;
    if (!find_redex(w, &pos, &ri)) return NcPoly::from_word(F_, w, F_->one());
    const Rule& r = rules_[ri];
    Word prefix = w.substr(0, pos);
    Word suffix = w.substr(pos + r.lhs.size());
    NcPoly acc(F_);
    for (auto& [m, c] : r.rhs.terms()) acc += reduce_word(prefix + m + suffix).scaled(c);
    return acc;
}

NcPoly RewriteSystem::reduce(const NcPoly& p) const {
    NcPoly acc(F_);
    for (auto& [w, c] : p.terms()) acc += reduce_word(w).scaled(c);
    return acc;
}

TensorPoly RewriteSystem::reduce(const TensorPoly& t) const {
    TensorPoly acc(F_, t.rank());
    std::vector<NcPoly> factors(static_cast<size_t>(t.rank()));
    for (auto& [key, c] : t.terms()) {
        for (int i = 0; i < t.rank(); ++i) factors[static_cast<size_t>(i)] = reduce_word(key[i]);
        acc += TensorPoly::tensor(factors).scaled(c);
    }
    return acc;
}

std::vector<Ambiguity> RewriteSystem::ambiguities() const {
    std::vector<Ambiguity> out;
    for (size_t i = 0; i < rules_.size(); ++i) {
        const Word& li = rules_[i].lhs;
        for (size_t j = 0; j < rules_.size(); ++j) {
            const Word& lj = rules_[j].lhs;
            // Overlap: proper suffix of lhs_i equals proper prefix of lhs_j.
            size_t maxo = std::min(li.size(), lj.size()) - 1;
            for (size_t o = 1; o <= maxo; ++o) {
                if (li.compare(li.size() - o, o, lj, 0, o) == 0) {
                    Ambiguity a;
                    a.kind = Ambiguity::Kind::Overlap;
                    a.word = li + lj.substr(o);
                    a.rule1 = static_cast<int>(i);
                    a.rule2 = static_cast<int>(j);
                    a.pos = li.size() - o;
                    out.push_back(std::move(a));
                }
            }
            // Inclusion: lhs_j properly inside lhs_i. Inter-reduction rules
            // these out, but report them if a caller builds a raw system.
            if (i != j && lj.size() < li.size()) {
                size_t at = li.find(lj);
                if (at != Word::npos) {
                    Ambiguity a;
                    a.kind = Ambiguity::Kind::Inclusion;
                    a.word = li;
                    a.rule1 = static_cast<int>(i);
                    a.rule2 = static_cast<int>(j);
                    a.pos = at;
                    out.push_back(std::move(a));
                }
            }
        }
    }
    return out;
}

ConfluenceReport RewriteSystem::check_confluence() const {
    ConfluenceReport report;
    for (auto& amb : ambiguities()) {
        const Rule& r1 = rules_[static_cast<size_t>(amb.rule1)];
        const Rule& r2 = rules_[static_cast<size_t>(amb.rule2)];
        NcPoly p1(F_), p2(F_);
        if (amb.kind == Ambiguity::Kind::Overlap) {
            Word suffix = amb.word.substr(r1.lhs.size());
            Word prefix = amb.word.substr(0, amb.pos);
            p1 = r1.rhs * NcPoly::from_word(F_, suffix, F_->one());
            p2 = NcPoly::from_word(F_, prefix, F_->one()) * r2.rhs;
        } else {
            p1 = r1.rhs;
            Word prefix = amb.word.substr(0, amb.pos);
            Word suffix = amb.word.substr(amb.pos + r2.lhs.size());
            p2 = NcPoly::from_word(F_, prefix, F_->one()) * r2.rhs *
                 NcPoly::from_word(F_, suffix, F_->one());
        }
        ConfluenceEntry e;
        e.amb = amb;
        NcPoly n1 = reduce(p1), n2 = reduce(p2);
        e.resolvable = (n1 == n2);
        if (!e.resolvable) e.obstruction = n1 - n2;
        report.entries.push_back(std::move(e));
    }
    return report;
}

NormalBasis RewriteSystem::normal_words(uint64_t cap) const {
    // Forbidden-factor automaton over the rule left-hand sides (Aho-Corasick).
    struct Node {
        std::map<char, int> next;
        int fail = 0;
        bool dead = false;
    };
    std::vector<Node> nodes(1);
    for (auto& r : rules_) {
        int cur = 0;
        for (char c : r.lhs) {
            int target = -1;
            auto it = nodes[static_cast<size_t>(cur)].next.find(c);
            if (it == nodes[static_cast<size_t>(cur)].next.end()) {
                nodes.push_back(Node{});
                target = static_cast<int>(nodes.size() - 1);
                nodes[static_cast<size_t>(cur)].next[c] = target;
            } else {
                target = it->second;
            }
            cur = target;
        }
        nodes[static_cast<size_t>(cur)].dead = true;
    }
    // Failure links, BFS order; a state is dead when any suffix is a pattern.
    std::deque<int> queue;
    for (auto& [c, v] : nodes[0].next) queue.push_back(v);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (nodes[static_cast<size_t>(nodes[static_cast<size_t>(u)].fail)].dead)
            nodes[static_cast<size_t>(u)].dead = true;
        for (auto& [c, v] : nodes[static_cast<size_t>(u)].next) {
            int f = nodes[static_cast<size_t>(u)].fail;
            while (f != 0 && !nodes[static_cast<size_t>(f)].next.count(c))
                f = nodes[static_cast<size_t>(f)].fail;
            auto it = nodes[static_cast<size_t>(f)].next.find(c);
            nodes[static_cast<size_t>(v)].fail =
                (it != nodes[static_cast<size_t>(f)].next.end() && it->second != v) ? it->second
                                                                                    : 0;
            queue.push_back(v);
        }
    }

    const int alphabet = gens_.arity();
    auto delta = [&](int u, char c) -> int {
        int f = u;
        for (;;) {
            auto it = nodes[static_cast<size_t>(f)].next.find(c);
            if (it != nodes[static_cast<size_t>(f)].next.end()) return it->second;
            if (f == 0) return 0;
            f = nodes[static_cast<size_t>(f)].fail;
        }
    };

    NormalBasis nb;
    if (!nodes.empty() && nodes[0].dead) {  // a rule with empty lhs cannot happen
        nb.finite = true;
        return nb;
    }

    // Infiniteness = a cycle in the live transition graph reachable from the
    // root. Iterative DFS with an explicit path for the witness.
    {
        std::vector<int> color(nodes.size(), 0);  // 0 new, 1 on stack, 2 done
        struct Frame {
            int node;
            int next_letter;
        };
        std::vector<Frame> stack;
        std::vector<char> path;
        stack.push_back({0, 0});
        color[0] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_letter >= alphabet) {
                color[static_cast<size_t>(f.node)] = 2;
                stack.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            char c = static_cast<char>(f.next_letter++);
            int v = delta(f.node, c);
            if (nodes[static_cast<size_t>(v)].dead) continue;
            if (color[static_cast<size_t>(v)] == 1) {
                nb.finite = false;
                nb.cycle_witness = Word(path.begin(), path.end()) + c;
                return nb;
            }
            if (color[static_cast<size_t>(v)] == 0) {
                color[static_cast<size_t>(v)] = 1;
                stack.push_back({v, 0});
                path.push_back(c);
            }
        }
    }

    // Acyclic: enumerate irreducible words breadth-first (length, then lex).
    nb.finite = true;
    std::deque<std::pair<int, Word>> bfs;
    bfs.emplace_back(0, Word{});
    while (!bfs.empty()) {
        auto [u, w] = std::move(bfs.front());
        bfs.pop_front();
        nb.words.push_back(w);
        if (nb.words.size() > cap) {
            nb.truncated = true;
            break;
        }
        for (int c = 0; c < alphabet; ++c) {
            int v = delta(u, static_cast<char>(c));
            if (!nodes[static_cast<size_t>(v)].dead)
                bfs.emplace_back(v, w + static_cast<char>(c));
        }
    }
    nb.count = nb.words.size();
    return nb;
}

CompletionResult RewriteSystem::complete(int max_new_rules) const {
    CompletionResult out;
    RewriteSystem cur(F_, gens_, order_);
    cur.rules_ = rules_;
    for (int added = 0;; ) {
        ConfluenceReport rep = cur.check_confluence();
        const ConfluenceEntry* bad = rep.first_obstruction();
        if (!bad) {
            out.confluent = true;
            break;
        }
        if (added >= max_new_rules) break;
        out.added.push_back(cur.orient_to_rule(bad->obstruction));
        cur.admit(bad->obstruction);
        ++added;
    }
    out.system = std::move(cur);
    return out;
}

}  // namespace hopfforge
