#ifndef VARCODE_GROEBNER_HPP
#define VARCODE_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "varcode/mpoly.hpp"

namespace varcode {

/// A reduced Groebner basis: monic elements, no monomial of any element
/// divisible by the leading term of another, sorted ascending by leading
/// term. Canonical for a fixed ideal and order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<SparsePoly> elems;

    bool contains_one() const {
        return elems.size() == 1 && !elems[0].is_zero() && elems[0].leading().mono.is_one();
    }
};

/// Remainder of f on division by the basis: no monomial of the result is
/// divisible by any basis leading term, and f - result lies in the ideal.
SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& basis);
SparsePoly normal_form(const SparsePoly& f, const GroebnerBasis& basis);

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm) and the product and chain criteria. Deterministic for a fixed input:
/// generators are pre-sorted canonically. Returns the reduced basis; the
/// ideal <1> yields {1}.
GroebnerBasis buchberger(std::vector<SparsePoly> generators);

/// Interreduce an arbitrary Groebner basis of an ideal into the reduced one.
GroebnerBasis interreduce(RingPtr ring, std::vector<SparsePoly> basis);

/// Basis elements supported on the first `prefix_vars` ring variables. By
/// elimination theory this is a Groebner basis of the elimination ideal when
/// the order is lex or block-lex (order-initial prefix).
std::vector<SparsePoly> elimination_view(const GroebnerBasis& basis, std::size_t prefix_vars);

/// Buchberger criterion as a test oracle: true iff every S-polynomial
/// reduces to zero; reports a counterexample pair otherwise.
struct GroebnerCheck {
    bool ok = true;
    std::size_t i = 0, j = 0; // offending pair when !ok
};
GroebnerCheck is_groebner(const std::vector<SparsePoly>& basis);

/// The degree stratification of a basis over a family of variable blocks.
/// Slot (b, i) refers to the i-th variable (1-based) of the b-th listed
/// block; blocks are listed ascending (least block first). G^{b,i} holds the
/// basis elements whose greatest variable is that slot's variable, sliced by
/// degree; zeta is the maximal slice degree.
struct BasisStratification {
    struct Slot {
        std::size_t block = 0, index = 0;  // i is 1-based
        std::size_t var = 0;               // ring position
        unsigned zeta = 0;
        // slices[d-1] = indices of basis elements of degree d in the slot
        // variable, each sorted ascending by leading term
        std::vector<std::vector<std::size_t>> slices;
    };
    std::vector<Slot> slots;

    const Slot& slot(std::size_t block, std::size_t index) const;
};

/// block_begins/block_sizes describe the A-blocks inside the ring, ascending.
BasisStratification stratify_basis(const GroebnerBasis& basis,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& blocks);

/// Canonical serialization: a header line recording field, variables and
/// order, then one polynomial per line, ascending by leading term.
std::string serialize_basis(const GroebnerBasis& basis);

} // namespace varcode

#endif
