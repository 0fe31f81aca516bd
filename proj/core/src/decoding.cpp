#include "varcode/decoding.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace varcode {
namespace {

// Transport p into `target`, translating variable names through `rename`
// (names absent from the map are kept).
SparsePoly rename_into(const SparsePoly& p, const RingPtr& target,
                       const std::map<std::string, std::string>& rename) {
    std::vector<SparsePoly::Term> out;
    out.reserve(p.terms().size());
    const auto& names = p.ring()->vars().names;
    std::vector<int> posmap(names.size(), -1);
    for (const auto& t : p.terms()) {
        SparsePoly::Term u;
        u.mono = Monomial::one(target->nvars());
        u.coeff = t.coeff;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!t.mono.e[i]) continue;
            if (posmap[i] < 0) {
                auto it = rename.find(names[i]);
                const std::string& nm = it == rename.end() ? names[i] : it->second;
                posmap[i] = static_cast<int>(target->var(nm));
            }
            u.mono.e[posmap[i]] = t.mono.e[i];
        }
        out.push_back(u);
    }
    return SparsePoly::from_terms(target, std::move(out));
}

std::vector<std::vector<unsigned>> project_points(const std::vector<std::vector<unsigned>>& pts,
                                                  std::size_t k) {
    std::set<std::vector<unsigned>> s;
    for (const auto& p : pts) s.insert(std::vector<unsigned>(p.begin(), p.begin() + k));
    return {s.begin(), s.end()};
}

SparsePoly field_equation(const RingPtr& ring, std::size_t var) {
    return SparsePoly::variable(ring, var, ring->field()->q()) - SparsePoly::variable(ring, var);
}

} // namespace

std::string DecodingIdealSpec::block_var(std::size_t j, std::size_t i) const {
    const auto& names = code->point_ring->vars().names;
    return names[coordinate_order[i - 1]] + std::to_string(j);
}

unsigned DecodingIdealSpec::ghost_coord(std::size_t i) const {
    return (*ghost)[coordinate_order[i - 1]];
}

DecodingIdealSpec DecodingIdealSpec::make(const AffineVarietyCode& code, IdealVariant variant,
                                          std::optional<std::vector<unsigned>> ghost,
                                          std::vector<std::size_t> coordinate_order) {
    DecodingIdealSpec spec;
    spec.code = &code;
    spec.variant = variant;
    const std::size_t m = code.m();
    if (coordinate_order.empty()) {
        coordinate_order.resize(m);
        for (std::size_t i = 0; i < m; ++i) coordinate_order[i] = i;
    }
    if (coordinate_order.size() != m) throw ConfigError("coordinate order must list every coordinate");
    spec.coordinate_order = std::move(coordinate_order);

    if (variant == IdealVariant::STAR && code.t >= 2) {
        if (!ghost) ghost = choose_ghost_point(code);
        if (ghost->size() != m) throw ConfigError("ghost point has wrong dimension");
        if (code.on_variety(*ghost)) throw GhostOnVarietyError("ghost point lies on the variety");
    }
    spec.ghost = std::move(ghost);

    std::vector<std::string> svars, evars;
    for (std::size_t rho = 1; rho <= code.r(); ++rho) svars.push_back("s" + std::to_string(rho));
    for (std::size_t j = code.t; j >= 1; --j) evars.push_back("e" + std::to_string(j));

    std::vector<std::pair<std::string, std::vector<std::string>>> groups;
    groups.emplace_back("S", svars);
    for (std::size_t j = code.t; j >= 1; --j) {
        std::vector<std::string> xs;
        for (std::size_t i = 1; i <= m; ++i) xs.push_back(spec.block_var(j, i));
        groups.emplace_back("X" + std::to_string(j), std::move(xs));
    }
    groups.emplace_back("E", evars);
    VarSet locvars = VarSet::with_blocks(groups);
    spec.locator_ring = PolyRing::make(code.field, locvars, TermOrder::block_lex(locvars));

    std::vector<std::pair<std::string, std::vector<std::string>>> egroups;
    egroups.emplace_back("S", svars);
    egroups.emplace_back("E", evars);
    for (std::size_t j = code.t; j >= 1; --j) {
        std::vector<std::string> xs;
        for (std::size_t i = 1; i <= m; ++i) xs.push_back(spec.block_var(j, i));
        egroups.emplace_back("X" + std::to_string(j), std::move(xs));
    }
    VarSet evalvars = VarSet::with_blocks(egroups);
    spec.evaluator_ring = PolyRing::make(code.field, evalvars, TermOrder::block_lex(evalvars));
    return spec;
}

std::vector<unsigned> choose_ghost_point(const AffineVarietyCode& code) {
    const auto& f = *code.field;
    const std::size_t m = code.m();
    // coordinate values used by the variety, per coordinate
    std::vector<std::set<unsigned>> used(m);
    for (const auto& p : code.points.points)
        for (std::size_t i = 0; i < m; ++i) used[i].insert(p[i]);

    std::optional<std::vector<unsigned>> first;
    std::vector<unsigned> idx(m, 0), point(m, 0);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) point[i] = f.from_canonical_index(idx[i]);
        if (!code.points.contains(point)) {
            if (!first) first = point;
            for (std::size_t i = 0; i < m; ++i)
                if (!used[i].count(point[i])) return point; // optimal ghost
        }
        std::size_t i = m;
        bool carried = false;
        while (i > 0) {
            --i;
            if (++idx[i] < f.q()) {
                carried = true;
                break;
            }
            idx[i] = 0;
        }
        if (!carried) break;
    }
    if (!first) throw NoGhostAvailableError("the variety fills the whole affine space");
    return *first;
}

std::pair<bool, std::vector<std::size_t>> is_optimal_ghost(const AffineVarietyCode& code,
                                                           const std::vector<unsigned>& P0) {
    std::vector<std::size_t> components;
    for (std::size_t i = 0; i < code.m(); ++i) {
        bool shared = false;
        for (const auto& p : code.points.points)
            if (p[i] == P0[i]) {
                shared = true;
                break;
            }
        if (!shared) components.push_back(i + 1);
    }
    return {!components.empty(), components};
}

std::vector<SparsePoly> build_ideal(const DecodingIdealSpec& spec, RingPtr ring) {
    if (!ring) ring = spec.locator_ring;
    const AffineVarietyCode& code = *spec.code;
    const auto& f = *code.field;
    const unsigned q = f.q();
    const unsigned t = code.t;
    const std::size_t m = code.m();
    const bool ghosted = spec.variant == IdealVariant::STAR && t >= 2;

    std::vector<SparsePoly> gens;
    auto xvar = [&](std::size_t j, std::size_t i) { return ring->var(spec.block_var(j, i)); };
    auto evar = [&](std::size_t j) { return ring->var("e" + std::to_string(j)); };

    // field equations for the location variables
    for (std::size_t j = 1; j <= t; ++j)
        for (std::size_t i = 1; i <= m; ++i) gens.push_back(field_equation(ring, xvar(j, i)));

    // variety relations per slot: the code's own generators, or for the
    // ghosted ideal the Buchberger-Moeller basis of V(I) plus the ghost
    std::vector<SparsePoly> relations;
    if (ghosted) {
        PointSet zs = code.points;
        zs.points.push_back(*spec.ghost);
        GroebnerBasis gprime = vanishing_ideal(zs);
        for (const auto& g : gprime.elems) {
            bool is_field_eq = false;
            for (std::size_t i = 0; i < m; ++i)
                if (g == field_equation(code.point_ring, i).monic()) is_field_eq = true;
            if (!is_field_eq) relations.push_back(g);
        }
    } else {
        for (std::size_t k = 0; k < code.n_user_gens; ++k)
            relations.push_back(code.ideal_gens[k]);
    }
    for (const auto& rel : relations) {
        for (std::size_t j = 1; j <= t; ++j) {
            std::map<std::string, std::string> rn;
            for (std::size_t i = 1; i <= m; ++i)
                rn[code.point_ring->vars().names[spec.coordinate_order[i - 1]]] =
                    spec.block_var(j, i);
            gens.push_back(rename_into(rel, ring, rn));
        }
    }

    // syndrome equations sum_j e_j b_rho(X_j) - s_rho
    for (std::size_t rho = 0; rho < code.r(); ++rho) {
        SparsePoly acc = SparsePoly::zero(ring);
        for (std::size_t j = 1; j <= t; ++j) {
            std::map<std::string, std::string> rn;
            for (std::size_t i = 1; i <= m; ++i)
                rn[code.point_ring->vars().names[spec.coordinate_order[i - 1]]] =
                    spec.block_var(j, i);
            acc = acc + rename_into(code.basis_L[rho], ring, rn) * SparsePoly::variable(ring, evar(j));
        }
        gens.push_back(acc - SparsePoly::variable(ring, ring->var("s" + std::to_string(rho + 1))));
    }

    // error-value equations
    for (std::size_t j = 1; j <= t; ++j) {
        SparsePoly e = SparsePoly::variable(ring, evar(j));
        if (ghosted)
            gens.push_back(e.pow(q) - e); // values may vanish on ghost slots
        else
            gens.push_back(e.pow(q - 1) - SparsePoly::constant(ring, 1));
    }

    if (ghosted) {
        // a nonzero value must sit on a location differing from the ghost
        for (std::size_t j = 1; j <= t; ++j) {
            SparsePoly prod = SparsePoly::constant(ring, 1);
            for (std::size_t i = 1; i <= m; ++i) {
                SparsePoly d = SparsePoly::variable(ring, xvar(j, i)) -
                               SparsePoly::constant(ring, spec.ghost_coord(i));
                prod = prod * (d.pow(q - 1) - SparsePoly::constant(ring, 1));
            }
            gens.push_back(SparsePoly::variable(ring, evar(j)) * prod);
        }
        // a zero value forces the slot onto the ghost point
        for (std::size_t j = 1; j <= t; ++j) {
            SparsePoly e = SparsePoly::variable(ring, evar(j));
            SparsePoly gate = e.pow(q - 1) - SparsePoly::constant(ring, 1);
            for (std::size_t i = 1; i <= m; ++i) {
                SparsePoly d = SparsePoly::variable(ring, xvar(j, i)) -
                               SparsePoly::constant(ring, spec.ghost_coord(i));
                gens.push_back(gate * d);
            }
        }
    }

    // pairwise distinctness of true locations
    if (spec.variant != IdealVariant::FL && t >= 2) {
        for (std::size_t j = 1; j <= t; ++j)
            for (std::size_t k = j + 1; k <= t; ++k) {
                SparsePoly prod = SparsePoly::constant(ring, 1);
                for (std::size_t i = 1; i <= m; ++i) {
                    SparsePoly d = SparsePoly::variable(ring, xvar(j, i)) -
                                   SparsePoly::variable(ring, xvar(k, i));
                    prod = prod * (d.pow(q - 1) - SparsePoly::constant(ring, 1));
                }
                if (ghosted)
                    prod = SparsePoly::variable(ring, evar(j)) *
                           SparsePoly::variable(ring, evar(k)) * prod;
                gens.push_back(prod);
            }
    }
    return gens;
}

GroebnerBasis decoding_basis(const DecodingIdealSpec& spec, RingPtr ring) {
    if (!ring) ring = spec.locator_ring;
    std::vector<SparsePoly> gens = build_ideal(spec, ring);
    // the field equations of the remaining variables are consequences of the
    // generators; adjoining them keeps intermediate degrees low
    for (std::size_t v = 0; v < ring->nvars(); ++v) gens.push_back(field_equation(ring, v));
    return buchberger(std::move(gens));
}

PointSet semantic_variety(const DecodingIdealSpec& spec, RingPtr ring) {
    if (!ring) ring = spec.locator_ring;
    const AffineVarietyCode& code = *spec.code;
    const unsigned t = code.t;
    const std::size_t m = code.m();
    const bool ghosted = spec.variant == IdealVariant::STAR && t >= 2;

    std::vector<std::size_t> svar(code.r()), ev(t + 1);
    for (std::size_t rho = 0; rho < code.r(); ++rho)
        svar[rho] = ring->var("s" + std::to_string(rho + 1));
    for (std::size_t j = 1; j <= t; ++j) ev[j] = ring->var("e" + std::to_string(j));
    std::vector<std::vector<std::size_t>> xv(t + 1, std::vector<std::size_t>(m));
    for (std::size_t j = 1; j <= t; ++j)
        for (std::size_t i = 1; i <= m; ++i) xv[j][i - 1] = ring->var(spec.block_var(j, i));

    std::set<std::vector<unsigned>> out;
    for_each_correctable_pattern(code, [&](const ErrorPattern& e) {
        if (!ghosted && e.weight() < t) return true; // no padding available
        Syndrome s = syndrome_of_pattern(code, e);
        // t (location, value) slots, padded with ghost pairs
        std::vector<std::pair<std::vector<unsigned>, unsigned>> pairs;
        for (const auto& [pos, val] : e.entries)
            pairs.emplace_back(code.points.points[pos - 1], val);
        while (pairs.size() < t) pairs.emplace_back(*spec.ghost, 0u);

        std::vector<std::size_t> perm(t);
        for (std::size_t j = 0; j < t; ++j) perm[j] = j;
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<unsigned> point(ring->nvars(), 0);
            for (std::size_t rho = 0; rho < code.r(); ++rho) point[svar[rho]] = s[rho];
            for (std::size_t j = 1; j <= t; ++j) {
                const auto& [loc, val] = pairs[perm[j - 1]];
                for (std::size_t i = 1; i <= m; ++i)
                    point[xv[j][i - 1]] = loc[spec.coordinate_order[i - 1]];
                point[ev[j]] = val;
            }
            out.insert(std::move(point));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    });
    PointSet ps{ring, {out.begin(), out.end()}};
    ps.sort_canonical();
    return ps;
}

PointSet enumerate_variety_lex(const GroebnerBasis& basis, std::size_t cap) {
    const RingPtr& ring = basis.ring;
    const auto& f = *ring->field();
    const std::size_t n = ring->nvars();
    if (basis.contains_one()) return PointSet{ring, {}};

    std::vector<std::vector<const SparsePoly*>> by_level(n);
    for (const auto& g : basis.elems) {
        int mv = g.max_var();
        if (mv < 0) return PointSet{ring, {}};
        by_level[static_cast<std::size_t>(mv)].push_back(&g);
    }
    std::vector<std::vector<unsigned>> partial(1);
    std::vector<unsigned> probe(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& p : partial) {
            std::copy(p.begin(), p.end(), probe.begin());
            for (unsigned idx = 0; idx < f.q(); ++idx) {
                unsigned c = f.from_canonical_index(idx);
                probe[v] = c;
                bool ok = true;
                for (const SparsePoly* g : by_level[v])
                    if (evaluate(*g, probe).value() != 0) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    std::vector<unsigned> q(p);
                    q.push_back(c);
                    next.push_back(std::move(q));
                }
            }
        }
        partial = std::move(next);
        if (partial.size() > cap) throw Error("variety enumeration exceeds cap");
    }
    return PointSet{ring, std::move(partial)};
}

const StratificationReport::Slot& StratificationReport::slot(std::size_t block,
                                                             std::size_t index) const {
    for (const auto& s : slots)
        if (s.block == block && s.index == index) return s;
    throw Error("stratification slot not found");
}

StratificationReport analyze_stratification(
    const GroebnerBasis& basis, const PointSet& variety, std::size_t s_vars,
    const std::vector<std::pair<std::size_t, std::size_t>>& a_blocks,
    const std::optional<std::vector<unsigned>>& padding) {
    (void)s_vars;
    StratificationReport rep;
    BasisStratification strat = stratify_basis(basis, a_blocks);

    rep.weakly_stratified = true;
    for (const auto& bslot : strat.slots) {
        StratificationReport::Slot slot;
        slot.block = bslot.block;
        slot.index = bslot.index;
        slot.var = bslot.var;
        slot.zeta = bslot.zeta;

        // eta and the Sigma classes from the variety
        const std::size_t k1 = bslot.var + 1, k0 = bslot.var;
        auto v0 = project_points(variety.points, k0);
        auto v1 = project_points(variety.points, k1);
        std::map<std::vector<unsigned>, std::size_t> fiber;
        for (const auto& p : v1) fiber[std::vector<unsigned>(p.begin(), p.begin() + k0)]++;
        unsigned eta = 0;
        for (const auto& [pre, cnt] : fiber) eta = std::max<unsigned>(eta, static_cast<unsigned>(cnt));
        slot.eta = eta;
        slot.sigma_sizes.assign(eta, 0);
        for (const auto& [pre, cnt] : fiber) slot.sigma_sizes[cnt - 1]++;
        for (std::size_t l = 0; l < eta; ++l)
            if (slot.sigma_sizes[l] == 0) rep.weakly_stratified = false;
        (void)v0;

        // structural checks on the basis slices
        slot.slices_full = bslot.zeta > 0;
        for (const auto& slice : bslot.slices)
            if (slice.empty()) slot.slices_full = false;
        if (bslot.zeta > 0 && bslot.slices.back().size() == 1) {
            const auto& top = basis.elems[bslot.slices.back().front()];
            const Monomial& lt = top.leading().mono;
            bool pure = lt.e[bslot.var] == bslot.zeta && lt.total_degree() == bslot.zeta;
            slot.top_pure_power_unique = pure;
        }
        rep.slots.push_back(std::move(slot));
    }

    // block-level conditions
    const std::size_t L = a_blocks.size();
    bool cond1 = true, cond2 = true, cond3 = true;
    for (std::size_t b = 0; b < L; ++b) {
        const std::size_t paper_j = L - b;
        const std::size_t begin = a_blocks[b].first, bm = a_blocks[b].second;
        auto vafter = project_points(variety.points, begin + bm);
        std::map<std::vector<unsigned>, std::set<std::vector<unsigned>>> fibers;
        for (const auto& p : vafter)
            fibers[std::vector<unsigned>(p.begin(), p.begin() + begin)].insert(
                std::vector<unsigned>(p.begin() + begin, p.end()));
        bool exact = false;
        std::set<std::set<std::vector<unsigned>>> realized;
        for (const auto& [pre, ext] : fibers) {
            if (ext.size() > paper_j) cond1 = false;
            if (ext.size() == paper_j) exact = true;
            realized.insert(ext);
            if (padding && ext.count(*padding) && ext.size() > 1) {
                // the padding value fills otherwise-unused slots; the fiber
                // also witnesses the set without it
                std::set<std::vector<unsigned>> bare = ext;
                bare.erase(*padding);
                realized.insert(std::move(bare));
            }
        }
        if (!exact) cond2 = false;

        // Z_b: block coordinates over the full variety
        std::set<std::vector<unsigned>> zb;
        for (const auto& p : variety.points)
            zb.insert(std::vector<unsigned>(p.begin() + begin, p.begin() + begin + bm));
        // every subset T of Z_b with 1 <= |T| <= paper_j must be realized
        std::vector<std::vector<unsigned>> z(zb.begin(), zb.end());
        std::vector<std::size_t> pick;
        std::function<void(std::size_t, std::size_t)> subsets = [&](std::size_t start,
                                                                    std::size_t want) {
            if (!cond3) return;
            if (pick.size() == want) {
                std::set<std::vector<unsigned>> T;
                for (std::size_t i : pick) T.insert(z[i]);
                if (!realized.count(T)) cond3 = false;
                return;
            }
            for (std::size_t i = start; i < z.size(); ++i) {
                pick.push_back(i);
                subsets(i + 1, want);
                pick.pop_back();
            }
        };
        for (std::size_t size = 1; size <= paper_j && cond3; ++size) subsets(0, size);
    }
    rep.multi_stratified = cond1 && cond2;
    rep.strongly_multi_stratified = cond1 && cond3;

    rep.gb_structure_ok = true;
    for (const auto& s : rep.slots)
        if (s.zeta != s.eta || !s.top_pure_power_unique) rep.gb_structure_ok = false;

    for (std::size_t b = 0; b < L; ++b) rep.lambda.push_back(rep.slot(b, 1).eta);
    return rep;
}

StratificationReport analyze_stratification(const DecodingIdealSpec& spec,
                                            const GroebnerBasis& basis) {
    PointSet v = semantic_variety(spec);
    std::vector<std::pair<std::size_t, std::size_t>> a_blocks;
    const auto& blocks = spec.locator_ring->vars().blocks;
    for (const auto& blk : blocks)
        if (blk.name.size() > 1 && blk.name[0] == 'X') a_blocks.emplace_back(blk.begin, blk.size);
    std::optional<std::vector<unsigned>> padding;
    if (spec.ghost) {
        padding.emplace();
        for (std::size_t i = 1; i <= spec.m(); ++i) padding->push_back(spec.ghost_coord(i));
    }
    return analyze_stratification(basis, v, spec.r(), a_blocks, padding);
}

std::vector<unsigned> compute_t_bounds(const DecodingIdealSpec& spec) {
    const AffineVarietyCode& code = *spec.code;
    std::vector<unsigned> bounds;
    for (std::size_t i = 1; i <= code.m(); ++i) {
        std::set<unsigned> values;
        const std::size_t coord = spec.coordinate_order[i - 1];
        for (const auto& p : code.points.points) values.insert(p[coord]);
        if (spec.ghost) values.insert((*spec.ghost)[coord]);
        bounds.push_back(std::min<unsigned>(code.t, static_cast<unsigned>(values.size())));
    }
    return bounds;
}

namespace {

/// Tables ring for locators: s_1..s_r then the locator coordinate names.
RingPtr locator_tables_ring(const DecodingIdealSpec& spec) {
    std::vector<std::string> names;
    for (std::size_t rho = 1; rho <= spec.r(); ++rho) names.push_back("s" + std::to_string(rho));
    for (std::size_t i = 1; i <= spec.m(); ++i)
        names.push_back(spec.code->point_ring->vars().names[spec.coordinate_order[i - 1]]);
    return PolyRing::make(spec.code->field, VarSet::flat(names));
}

/// The unique basis element whose greatest variable is `var` and whose
/// leading term is a pure power of it; LocatorMissingError otherwise.
const SparsePoly& top_pure_power_element(const std::vector<SparsePoly>& elems, std::size_t var,
                                         const char* what) {
    const SparsePoly* found = nullptr;
    unsigned best = 0;
    for (const auto& g : elems) {
        if (g.is_zero() || g.max_var() != static_cast<int>(var)) continue;
        unsigned d = g.degree_in(var);
        if (d > best) {
            best = d;
            found = &g;
        }
    }
    if (!found) throw LocatorMissingError(std::string(what) + ": no element in the slot");
    const Monomial& lt = found->leading().mono;
    if (!(lt.e[var] == best && lt.total_degree() == best))
        throw LocatorMissingError(std::string(what) +
                                  ": top element's leading term is not a pure power");
    return *found;
}

} // namespace

LocatorSet extract_weak_locators(const DecodingIdealSpec& spec, const GroebnerBasis& basis) {
    LocatorSet out;
    out.flavor = LocatorSet::Flavor::weak;
    out.ring = locator_tables_ring(spec);
    std::map<std::string, std::string> rn;
    for (std::size_t i = 1; i <= spec.m(); ++i)
        rn[spec.block_var(spec.t(), i)] =
            spec.code->point_ring->vars().names[spec.coordinate_order[i - 1]];
    for (std::size_t i = 1; i <= spec.m(); ++i) {
        const std::size_t var = spec.locator_ring->var(spec.block_var(spec.t(), i));
        auto view = elimination_view(basis, var + 1);
        const SparsePoly& g = top_pure_power_element(view, var, "weak locator");
        out.locs.push_back(rename_into(g, out.ring, rn).monic());
        out.degrees.push_back(g.degree_in(var));
    }
    return out;
}

StuffedIdeal stuff_ideal(const DecodingIdealSpec& spec, const GroebnerBasis& basis) {
    StuffedIdeal out;
    PointSet sem = semantic_variety(spec);
    const auto& f = *spec.code->field;

    for (std::size_t i = 1; i <= spec.m(); ++i) {
        const std::size_t nv = spec.r() + i;
        const std::size_t var = spec.locator_ring->var(spec.block_var(spec.t(), i));
        if (var + 1 != nv) throw Error("locator ring layout mismatch");

        // elimination ring GF(q)[S, x_{t,1}..x_{t,i}]
        std::vector<std::string> names(spec.locator_ring->vars().names.begin(),
                                       spec.locator_ring->vars().names.begin() + nv);
        RingPtr ring = PolyRing::make(spec.code->field, VarSet::flat(names));

        GroebnerBasis level{ring, {}};
        for (const auto& g : elimination_view(basis, nv)) level.elems.push_back(transport(g, ring));

        // prefixes of the projected variety, with their true extensions
        std::map<std::vector<unsigned>, std::vector<unsigned>> ext;
        for (const auto& p : project_points(sem.points, nv)) {
            std::vector<unsigned> pre(p.begin(), p.end() - 1);
            ext[pre].push_back(p.back());
        }
        unsigned delta = 0;
        for (auto& [pre, xs] : ext) {
            std::sort(xs.begin(), xs.end(),
                      [&](unsigned a, unsigned b) { return f.canonical_index(a) < f.canonical_index(b); });
            delta = std::max<unsigned>(delta, static_cast<unsigned>(xs.size()));
        }

        bool changed = true;
        while (changed) {
            changed = false;
            const SparsePoly& g =
                top_pure_power_element(level.elems, nv - 1, "stuffing top polynomial");
            if (g.degree_in(nv - 1) != delta)
                throw LocatorMissingError("stuffing: top degree differs from the level function");
            for (const auto& [pre, xs] : ext) {
                const unsigned h = static_cast<unsigned>(xs.size());
                if (h >= delta) continue;
                std::vector<std::pair<std::size_t, unsigned>> assign;
                for (std::size_t kv = 0; kv + 1 < nv; ++kv) assign.emplace_back(kv, pre[kv]);
                SparsePoly ghat = specialize(g, assign);
                auto roots = roots_univariate(ghat, nv - 1);
                std::vector<unsigned> root_vals;
                for (const auto& [rt, mult] : roots) root_vals.push_back(rt.value());
                if (root_vals == xs) continue; // already stuffed or clean
                // raise the multiplicity of the canonically smallest extension
                std::vector<unsigned> Q(pre);
                Q.push_back(xs.front());
                StuffResult sr = stuff_at(level, Q, delta - h + 1);
                if (sr.steps_degenerate > 0)
                    throw FunctionalDegenerateError(
                        "stuffing: Hasse functional vanished on a parasite prefix");
                out.stuff_steps += sr.steps_applied;
                level = std::move(sr.basis);
                changed = true;
                break; // the basis changed; rescan with the new top polynomial
            }
        }
        out.levels.push_back(std::move(level));
    }
    return out;
}

LocatorSet extract_locators(const DecodingIdealSpec& spec, const StuffedIdeal& stuffed) {
    LocatorSet out;
    out.flavor = LocatorSet::Flavor::stuffed;
    out.ring = locator_tables_ring(spec);
    std::map<std::string, std::string> rn;
    for (std::size_t i = 1; i <= spec.m(); ++i)
        rn[spec.block_var(spec.t(), i)] =
            spec.code->point_ring->vars().names[spec.coordinate_order[i - 1]];
    for (std::size_t i = 1; i <= spec.m(); ++i) {
        const GroebnerBasis& level = stuffed.levels[i - 1];
        const std::size_t var = level.ring->nvars() - 1;
        const SparsePoly& g = top_pure_power_element(level.elems, var, "locator");
        out.locs.push_back(rename_into(g, out.ring, rn).monic());
        out.degrees.push_back(g.degree_in(var));
    }
    return out;
}

EvaluatorPoly extract_evaluator(const DecodingIdealSpec& spec,
                                const GroebnerBasis& evaluator_basis) {
    const std::size_t nv = spec.r() + 1; // S block plus e_t
    const std::string et = "e" + std::to_string(spec.t());
    const std::size_t var = spec.evaluator_ring->var(et);
    if (var + 1 != nv) throw Error("evaluator ring layout mismatch");
    auto view = elimination_view(evaluator_basis, nv);
    const SparsePoly* found = nullptr;
    try {
        found = &top_pure_power_element(view, var, "evaluator");
    } catch (const LocatorMissingError& e) {
        throw EvaluatorMissingError(e.what());
    }
    if (found->degree_in(var) != spec.t())
        throw EvaluatorMissingError("evaluator degree differs from t");

    std::vector<std::string> names;
    for (std::size_t rho = 1; rho <= spec.r(); ++rho) names.push_back("s" + std::to_string(rho));
    names.push_back("e");
    EvaluatorPoly out;
    out.ring = PolyRing::make(spec.code->field, VarSet::flat(names));
    out.poly = rename_into(*found, out.ring, {{et, "e"}}).monic();
    return out;
}

EvvivaReport check_evviva(const DecodingIdealSpec& spec, const LocatorSet& locators) {
    EvvivaReport rep;
    const AffineVarietyCode& code = *spec.code;
    const auto& f = *code.field;
    if (code.t != 2 || locators.locs.empty()) return rep;

    const std::size_t coord = spec.coordinate_order[0];
    const std::size_t cvar = locators.ring->var(code.point_ring->vars().names[coord]);
    const SparsePoly& L1 = locators.locs[0];
    if (L1.degree_in(cvar) != 2) return rep;

    // syndrome indices of the monomials 1, c, c^2
    auto find_idx = [&](const SparsePoly& target) -> int {
        for (std::size_t rho = 0; rho < code.r(); ++rho)
            if (code.basis_L[rho] == target) return static_cast<int>(rho);
        return -1;
    };
    SparsePoly one = SparsePoly::constant(code.point_ring, 1);
    SparsePoly c = SparsePoly::variable(code.point_ring, coord);
    int i_one = find_idx(one), i_lin = find_idx(c), i_sq = find_idx(c * c);
    if (i_one < 0 || i_lin < 0 || i_sq < 0) return rep;

    rep.applicable = true;
    SparsePoly a = coefficient_of(L1, cvar, 1);
    SparsePoly b = coefficient_of(L1, cvar, 0);
    const unsigned two = f.add(1, 1);

    std::vector<unsigned> point(locators.ring->nvars(), 0);
    for_each_correctable_pattern(code, [&](const ErrorPattern& e) {
        Syndrome s = syndrome_of_pattern(code, e);
        std::fill(point.begin(), point.end(), 0);
        for (std::size_t rho = 0; rho < code.r(); ++rho) point[rho] = s[rho];
        unsigned av = evaluate(a, point).value();
        unsigned bv = evaluate(b, point).value();
        ++rep.checked;
        unsigned lhs = f.add(f.mul(av, s[i_lin]), f.mul(bv, s[i_one]));
        if (f.add(lhs, s[i_sq]) != 0) ++rep.violations;

        if (s[i_one] == 0 && s[i_lin] == 0 && e.weight() == 2) {
            unsigned x1 = code.points.points[e.entries[0].first - 1][coord];
            unsigned x2 = code.points.points[e.entries[1].first - 1][coord];
            ++rep.degenerate_checked;
            if (x1 != x2 || av != f.mul(two, x1) || bv != f.mul(x1, x1))
                ++rep.degenerate_violations;
        }
        return true;
    });
    return rep;
}

} // namespace varcode
