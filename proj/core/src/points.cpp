#include "varcode/points.hpp"

#include <algorithm>

namespace varcode {

bool PointSet::contains(const std::vector<unsigned>& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

void PointSet::sort_canonical() {
    const auto& f = *ring->field();
    std::sort(points.begin(), points.end(),
              [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      unsigned ia = f.canonical_index(a[i]), ib = f.canonical_index(b[i]);
                      if (ia != ib) return ia < ib;
                  }
                  return false;
              });
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

unsigned Functional::apply(const SparsePoly& g) const {
    if (kind == Kind::point_eval) return evaluate(g, Q).value();
    // Hasse functional in the last ring variable.
    const std::size_t last = g.ring()->nvars() - 1;
    std::vector<std::pair<std::size_t, unsigned>> prefix;
    prefix.reserve(last);
    for (std::size_t i = 0; i < last; ++i) prefix.emplace_back(i, Q[i]);
    SparsePoly univ = specialize(g, prefix);
    SparsePoly d = hasse_derivative(univ, last, n);
    std::vector<unsigned> point(g.ring()->nvars(), 0);
    point[last] = Q[last];
    return evaluate(d, point).value();
}

BmStepResult bm_step(const GroebnerBasis& W, const Functional& f) {
    const RingPtr& ring = W.ring;
    const auto& fd = *ring->field();
    const std::size_t N = ring->nvars();

    std::vector<unsigned> alpha(W.elems.size());
    std::size_t star = W.elems.size();
    for (std::size_t i = 0; i < W.elems.size(); ++i) {
        alpha[i] = f.apply(W.elems[i]);
        if (star == W.elems.size() && alpha[i] != 0) star = i;
    }
    if (star == W.elems.size()) return {W, true}; // f vanishes on the ideal

    const SparsePoly& gstar = W.elems[star];

    // beta vector: the components of Q, except that for a Hasse functional
    // the last coordinate also absorbs g*(Q)/theta(g*).
    std::vector<unsigned> beta = f.Q;
    if (f.kind == Functional::Kind::hasse) {
        unsigned gq = evaluate(gstar, f.Q).value();
        beta[N - 1] = fd.add(fd.mul(gq, fd.inv(alpha[star])), f.Q[N - 1]);
    }

    std::vector<SparsePoly> next;
    next.reserve(W.elems.size() + N);
    for (std::size_t i = 0; i < star; ++i) next.push_back(W.elems[i]); // W1
    for (std::size_t k = 0; k < N; ++k) {                              // W2
        SparsePoly lin = SparsePoly::variable(ring, k) -
                         SparsePoly::constant(ring, beta[k]);
        next.push_back(lin * gstar);
    }
    for (std::size_t i = star + 1; i < W.elems.size(); ++i) {          // W3
        if (alpha[i] == 0) {
            next.push_back(W.elems[i]);
        } else {
            unsigned c = fd.mul(alpha[i], fd.inv(alpha[star]));
            next.push_back(W.elems[i] - gstar.scale(c));
        }
    }
    return {interreduce(ring, std::move(next)), false};
}

GroebnerBasis vanishing_ideal(const PointSet& Z) {
    if (Z.points.empty()) throw Error("vanishing_ideal: empty point set");
    GroebnerBasis W{Z.ring, {SparsePoly::constant(Z.ring, 1)}};
    for (const auto& p : Z.points) {
        if (p.size() != Z.ring->nvars())
            throw LengthMismatchError("point dimension does not match the ring");
        BmStepResult r = bm_step(W, Functional::point(p));
        if (r.degenerate) throw DuplicatePointError("duplicate point in vanishing_ideal");
        W = std::move(r.basis);
    }
    return W;
}

StuffResult stuff_at(const GroebnerBasis& W, const std::vector<unsigned>& Q,
                     unsigned target_mult) {
    StuffResult out{W, 0, 0};
    for (unsigned n = 1; n + 1 <= target_mult; ++n) {
        BmStepResult r = bm_step(out.basis, Functional::hasse_at(Q, n));
        ++out.steps_applied;
        if (r.degenerate)
            ++out.steps_degenerate; // multiplicity already enforced
        else
            out.basis = std::move(r.basis);
    }
    return out;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, std::size_t cap) {
    const std::size_t n = basis.ring->nvars();
    std::vector<Monomial> lts;
    for (const auto& g : basis.elems) lts.push_back(g.leading().mono);
    std::vector<Monomial> frontier{Monomial::one(n)};
    std::vector<Monomial> out;
    // breadth-first walk of the staircase below the leading terms
    std::vector<Monomial> seen;
    while (!frontier.empty()) {
        Monomial m = frontier.back();
        frontier.pop_back();
        bool reducible = false;
        for (const auto& l : lts)
            if (l.divides(m)) {
                reducible = true;
                break;
            }
        if (reducible) continue;
        if (std::find(out.begin(), out.end(), m) != out.end()) continue;
        out.push_back(m);
        if (out.size() > cap) throw Error("standard monomial count exceeds cap");
        for (std::size_t i = 0; i < n; ++i) {
            Monomial up = m;
            up.e[i] = static_cast<uint16_t>(up.e[i] + 1);
            frontier.push_back(up);
        }
    }
    return out;
}

} // namespace varcode
