#include "varcode/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace varcode {
namespace {

struct MonoHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < m.nvars; ++i) {
            h ^= m.e[i];
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Divisor lookup over the basis leading terms, memoized per monomial. The
// cache must be invalidated whenever an element is appended; tail changes
// keep it valid since only leading terms matter.
class ReducerSet {
public:
    explicit ReducerSet(const std::vector<SparsePoly>& basis) : basis_(&basis) {}

    const SparsePoly* find(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second < 0 ? nullptr : &(*basis_)[it->second];
        int found = -1;
        for (std::size_t k = 0; k < basis_->size(); ++k) {
            const SparsePoly& g = (*basis_)[k];
            if (g.is_zero()) continue;
            if (g.leading().mono.divides(m)) {
                found = static_cast<int>(k);
                break;
            }
        }
        memo_.emplace(m, found);
        return found < 0 ? nullptr : &(*basis_)[found];
    }

    void invalidate() { memo_.clear(); }

private:
    const std::vector<SparsePoly>* basis_;
    std::unordered_map<Monomial, int, MonoHash> memo_;
};

// Exponent folding modulo the field equations x_v^q = x_v of the masked
// variables: a one-shot reduction replacing long chains of single steps.
struct FoldSpec {
    unsigned q = 0;
    std::vector<bool> mask;

    bool active() const {
        return q > 1 && std::any_of(mask.begin(), mask.end(), [](bool b) { return b; });
    }
    void apply(Monomial& m) const {
        for (std::size_t v = 0; v < mask.size(); ++v)
            if (mask[v] && m.e[v] >= q)
                m.e[v] = static_cast<uint16_t>((m.e[v] - q) % (q - 1) + 1);
    }
};

// Full reduction when tail == true, head reduction only otherwise. The
// working remainder is kept as an ascending term vector (leading term last)
// and every subtraction is a single merge pass. With a fold spec, reducer
// multiples are folded into the exponent box before merging; folded products
// stay strictly below the cancelled leading term, so the loop still
// terminates and the result is the same normal form.
SparsePoly reduce(const SparsePoly& f, ReducerSet& reducers, bool tail,
                  const FoldSpec* fold = nullptr) {
    if (f.is_zero()) return f;
    const auto& ring = f.ring();
    const auto& ord = ring->order();
    const auto& fd = *ring->field();
    if (fold && !fold->active()) fold = nullptr;

    std::vector<SparsePoly::Term> cur;
    cur.reserve(f.terms().size());
    if (fold) {
        std::vector<SparsePoly::Term> folded(f.terms().begin(), f.terms().end());
        for (auto& t : folded) fold->apply(t.mono);
        SparsePoly tmp = SparsePoly::from_terms(ring, std::move(folded));
        cur.assign(tmp.terms().rbegin(), tmp.terms().rend());
    } else {
        cur.assign(f.terms().rbegin(), f.terms().rend());
    }
    std::vector<SparsePoly::Term> next, scaled;
    std::vector<SparsePoly::Term> done; // collected irreducible terms, descending
    next.reserve(cur.size());

    while (!cur.empty()) {
        const SparsePoly::Term lead = cur.back();
        const SparsePoly* g = reducers.find(lead.mono);
        if (!g) {
            if (!tail) {
                done.insert(done.end(), cur.rbegin(), cur.rend());
                break;
            }
            done.push_back(lead);
            cur.pop_back();
            continue;
        }
        const Monomial u = lead.mono / g->leading().mono;
        const unsigned c = fd.mul(lead.coeff, fd.inv(g->leading().coeff));

        // -c * u * g as an ascending, duplicate-free term list
        scaled.clear();
        bool folded_any = false;
        for (const auto& gt : g->terms()) {
            Monomial gm = gt.mono * u;
            if (fold) {
                Monomial before = gm;
                fold->apply(gm);
                if (!(gm == before)) folded_any = true;
            }
            unsigned v = fd.neg(fd.mul(c, gt.coeff));
            if (v) scaled.push_back({gm, v});
        }
        if (fold && folded_any) {
            std::sort(scaled.begin(), scaled.end(),
                      [&](const SparsePoly::Term& a, const SparsePoly::Term& b) {
                          return ord.compare(a.mono, b.mono) < 0;
                      });
            std::size_t w = 0;
            for (std::size_t r = 0; r < scaled.size(); ++r) {
                if (w > 0 && scaled[w - 1].mono == scaled[r].mono) {
                    scaled[w - 1].coeff = fd.add(scaled[w - 1].coeff, scaled[r].coeff);
                    if (scaled[w - 1].coeff == 0) --w;
                } else {
                    scaled[w++] = scaled[r];
                }
            }
            scaled.resize(w);
        } else {
            std::reverse(scaled.begin(), scaled.end()); // order was preserved
        }

        // next = cur + scaled, merged in ascending order
        next.clear();
        std::size_t i = 0, j = 0;
        while (i < cur.size() || j < scaled.size()) {
            if (j == scaled.size()) {
                next.push_back(cur[i++]);
                continue;
            }
            if (i == cur.size()) {
                next.push_back(scaled[j++]);
                continue;
            }
            int cmp = ord.compare(cur[i].mono, scaled[j].mono);
            if (cmp < 0) {
                next.push_back(cur[i++]);
            } else if (cmp > 0) {
                next.push_back(scaled[j++]);
            } else {
                unsigned v = fd.add(cur[i].coeff, scaled[j].coeff);
                if (v) next.push_back({cur[i].mono, v});
                ++i;
                ++j;
            }
        }
        cur.swap(next);
    }

    SparsePoly out(ring);
    out.assign_sorted_desc(std::move(done));
    return out;
}

SparsePoly spoly(const SparsePoly& f, const SparsePoly& g) {
    const auto& fd = *f.ring()->field();
    Monomial l = f.leading().mono.lcm(g.leading().mono);
    SparsePoly a = f.mul_term(l / f.leading().mono, fd.inv(f.leading().coeff));
    SparsePoly b = g.mul_term(l / g.leading().mono, fd.inv(g.leading().coeff));
    return a - b;
}

// canonical pre-sort: by leading term, then the full term sequence
bool poly_less(const SparsePoly& a, const SparsePoly& b) {
    const auto& ord = a.ring()->order();
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ord.compare(a.terms()[i].mono, b.terms()[i].mono);
        if (c != 0) return c < 0;
        if (a.terms()[i].coeff != b.terms()[i].coeff)
            return a.terms()[i].coeff < b.terms()[i].coeff;
    }
    return a.size() < b.size();
}

} // namespace

SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& basis) {
    ReducerSet reducers(basis);
    return reduce(f, reducers, /*tail=*/true);
}

SparsePoly normal_form(const SparsePoly& f, const GroebnerBasis& basis) {
    return normal_form(f, basis.elems);
}

GroebnerBasis interreduce(RingPtr ring, std::vector<SparsePoly> basis) {
    const auto& ord = ring->order();
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const SparsePoly& p) { return p.is_zero(); }),
                basis.end());
    // minimalize: drop any element whose leading term another divides
    std::sort(basis.begin(), basis.end(), [&](const SparsePoly& a, const SparsePoly& b) {
        return ord.compare(a.leading().mono, b.leading().mono) < 0;
    });
    std::vector<SparsePoly> minimal;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& h : minimal)
            if (h.leading().mono.divides(g.leading().mono) && h.leading().mono != g.leading().mono) {
                redundant = true;
                break;
            }
        if (!redundant && (minimal.empty() || !(minimal.back().leading().mono == g.leading().mono)))
            minimal.push_back(std::move(g));
    }
    // tail-reduce each element against the others. Leading terms are fixed
    // and pairwise non-divisible, so an element never reduces its own tail
    // and replacing tails keeps the reducer cache valid.
    ReducerSet reducers(minimal);
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SparsePoly::Term> head_term{minimal[i].terms().front()};
        SparsePoly tail_poly(ring);
        tail_poly.assign_sorted_desc(std::vector<SparsePoly::Term>(
            minimal[i].terms().begin() + 1, minimal[i].terms().end()));
        SparsePoly r = reduce(tail_poly, reducers, /*tail=*/true);
        std::vector<SparsePoly::Term> full = std::move(head_term);
        full.insert(full.end(), r.terms().begin(), r.terms().end());
        SparsePoly rebuilt(ring);
        rebuilt.assign_sorted_desc(std::move(full));
        minimal[i] = rebuilt.monic();
    }
    std::sort(minimal.begin(), minimal.end(), poly_less);
    return GroebnerBasis{std::move(ring), std::move(minimal)};
}

GroebnerBasis buchberger(std::vector<SparsePoly> gens) {
    if (gens.empty()) throw Error("buchberger: empty generator list");
    RingPtr ring = gens.front().ring();
    const auto& ord = ring->order();

    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const SparsePoly& p) { return p.is_zero(); }),
               gens.end());
    if (gens.empty()) throw Error("buchberger: all generators are zero");
    for (auto& g : gens) g = g.monic();
    std::sort(gens.begin(), gens.end(), poly_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    // one-shot reduction modulo any field equations among the generators
    FoldSpec fold;
    fold.q = ring->field()->q();
    fold.mask.assign(ring->nvars(), false);
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        SparsePoly fe = SparsePoly::variable(ring, v, fold.q) - SparsePoly::variable(ring, v);
        for (const auto& g : gens)
            if (g == fe) fold.mask[v] = true;
    }

    std::vector<SparsePoly> basis;     // append-only; indices stay stable
    std::vector<bool> alive;           // dominated elements leave the pairing set

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);

    ReducerSet reducers(basis);

    // Gebauer-Moeller update: install pairs (i, n), pruning with the
    // multiple/coprime criteria, drop old pairs the new leading term chains
    // away, and retire basis elements whose leading term it divides.
    auto update = [&](std::size_t n) {
        const Monomial& ltn = basis[n].leading().mono;
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i]) fresh.push_back({basis[i].leading().mono.lcm(ltn), i, n});

        // B criterion on queued pairs
        for (auto it = queue.begin(); it != queue.end();) {
            const Monomial& l = it->lcm;
            if (ltn.divides(l) && !(basis[it->i].leading().mono.lcm(ltn) == l) &&
                !(basis[it->j].leading().mono.lcm(ltn) == l))
                it = queue.erase(it);
            else
                ++it;
        }

        // M criterion: drop (i, n) when another new pair's lcm properly
        // divides its lcm
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // F criterion: one representative per lcm value
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) drop[b] = true;
            }
        }
        // coprime criterion
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (basis[fresh[a].i].leading().mono.coprime(ltn)) drop[a] = true;
        }
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) queue.insert(fresh[a]);

        for (std::size_t i = 0; i < n; ++i)
            if (alive[i] && ltn.divides(basis[i].leading().mono)) alive[i] = false;
        alive.push_back(true);
        reducers.invalidate();
    };

    for (auto& g : gens) {
        basis.push_back(g);
        update(basis.size() - 1);
    }

    static const bool verbose = std::getenv("VARCODE_GB_VERBOSE") != nullptr;
    std::size_t pops = 0, reductions = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        if (verbose && ++pops % 1000 == 0) {
            std::size_t terms = 0, live = 0;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (alive[i]) {
                    terms += basis[i].size();
                    ++live;
                }
            std::fprintf(stderr, "gb: pops=%zu live=%zu/%zu queue=%zu reductions=%zu terms=%zu\n",
                         pops, live, basis.size(), queue.size(), reductions, terms);
        }

        ++reductions;
        SparsePoly h = reduce(spoly(basis[p.i], basis[p.j]), reducers, /*tail=*/true, &fold);
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        update(basis.size() - 1);
    }

    std::vector<SparsePoly> live;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) live.push_back(std::move(basis[i]));
    GroebnerBasis out = interreduce(ring, std::move(live));
    if (out.elems.empty()) throw Error("buchberger: ideal reduced to nothing");
    return out;
}

std::vector<SparsePoly> elimination_view(const GroebnerBasis& basis, std::size_t prefix_vars) {
    if (prefix_vars > basis.ring->nvars())
        throw IncompatibleOrderError("elimination prefix exceeds the ring");
    std::vector<SparsePoly> out;
    for (const auto& g : basis.elems)
        if (g.max_var() < static_cast<int>(prefix_vars)) out.push_back(g);
    return out;
}

GroebnerCheck is_groebner(const std::vector<SparsePoly>& basis) {
    ReducerSet reducers(basis);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].is_zero() || basis[j].is_zero()) continue;
            SparsePoly s = spoly(basis[i], basis[j]);
            if (!reduce(s, reducers, /*tail=*/true).is_zero()) return {false, i, j};
        }
    return {};
}

const BasisStratification::Slot& BasisStratification::slot(std::size_t block,
                                                           std::size_t index) const {
    for (const auto& s : slots)
        if (s.block == block && s.index == index) return s;
    throw Error("stratification slot not found");
}

BasisStratification stratify_basis(
    const GroebnerBasis& basis, const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
    BasisStratification out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto [begin, size] = blocks[b];
        for (std::size_t i = 1; i <= size; ++i) {
            BasisStratification::Slot slot;
            slot.block = b;
            slot.index = i;
            slot.var = begin + i - 1;
            for (std::size_t gi = 0; gi < basis.elems.size(); ++gi) {
                const auto& g = basis.elems[gi];
                if (g.max_var() != static_cast<int>(slot.var)) continue;
                unsigned d = g.degree_in(slot.var);
                if (d == 0) continue;
                if (slot.slices.size() < d) slot.slices.resize(d);
                slot.slices[d - 1].push_back(gi);
            }
            slot.zeta = static_cast<unsigned>(slot.slices.size());
            // within a slice, elements are named ascending by leading term;
            // basis.elems is already sorted that way, so indices are ordered
            out.slots.push_back(std::move(slot));
        }
    }
    return out;
}

std::string serialize_basis(const GroebnerBasis& basis) {
    const auto& f = *basis.ring->field();
    std::string out = "# field p=" + std::to_string(f.p()) + " k=" + std::to_string(f.k()) +
                      " primitive=";
    for (std::size_t i = 0; i < f.primitive_poly().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f.primitive_poly()[i]);
    }
    out += " order=" +
           std::string(basis.ring->order().kind() == TermOrder::Kind::lex ? "lex" : "block");
    out += " vars=";
    for (std::size_t i = 0; i < basis.ring->vars().names.size(); ++i) {
        if (i) out += ",";
        out += basis.ring->vars().names[i];
    }
    out += "\n";
    for (const auto& g : basis.elems) out += format_poly(g) + "\n";
    return out;
}

} // namespace varcode
