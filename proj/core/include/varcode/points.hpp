#ifndef VARCODE_POINTS_HPP
#define VARCODE_POINTS_HPP

#include <vector>

#include "varcode/groebner.hpp"

namespace varcode {

/// An ordered list of distinct points in GF(q)^N, one packed value per ring
/// variable.
struct PointSet {
    RingPtr ring;
    std::vector<std::vector<unsigned>> points;

    bool contains(const std::vector<unsigned>& p) const;
    void sort_canonical(); // by canonical field index, coordinate-wise
};

/// A GF(q)-linear functional on an ideal: either evaluation at a point Q, or
/// the n-th Hasse-derivative functional at Q in the ring's last variable
///   f |-> phi^(n)( f(Q_1..Q_{N-1}, v) ) at v = Q_N.
struct Functional {
    enum class Kind { point_eval, hasse };
    Kind kind = Kind::point_eval;
    std::vector<unsigned> Q;
    unsigned n = 0; // derivative order, >= 1 for hasse

    static Functional point(std::vector<unsigned> Q) { return {Kind::point_eval, std::move(Q), 0}; }
    static Functional hasse_at(std::vector<unsigned> Q, unsigned n) {
        return {Kind::hasse, std::move(Q), n};
    }

    unsigned apply(const SparsePoly& g) const;
};

/// One incremental refinement step: the reduced basis of ker(f) inside the
/// ideal spanned by W. If f vanishes on all of W the basis is returned
/// unchanged (and `degenerate` is set in the result).
struct BmStepResult {
    GroebnerBasis basis;
    bool degenerate = false; // f vanished on the whole ideal
};
BmStepResult bm_step(const GroebnerBasis& W, const Functional& f);

/// Reduced Groebner basis of the vanishing ideal I(Z). Points are inserted
/// in the given list order; throws DuplicatePointError on a repeat. The
/// quotient ring has exactly |Z| standard monomials.
GroebnerBasis vanishing_ideal(const PointSet& Z);

/// Raises the enforced multiplicity of the ring's last coordinate of Q to
/// `target_mult` by chaining Hasse-functional kernels of order 1..target-1.
/// Degenerate steps (functional already zero on the ideal) count as success.
struct StuffResult {
    GroebnerBasis basis;
    unsigned steps_applied = 0;
    unsigned steps_degenerate = 0;
};
StuffResult stuff_at(const GroebnerBasis& W, const std::vector<unsigned>& Q,
                     unsigned target_mult);

/// Standard monomials of a zero-dimensional basis (those divisible by no
/// leading term); throws if the count would exceed `cap`.
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis, std::size_t cap = 1 << 20);

} // namespace varcode

#endif
