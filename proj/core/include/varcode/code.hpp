#ifndef VARCODE_CODE_HPP
#define VARCODE_CODE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "varcode/points.hpp"

namespace varcode {

/// Exhaustive scan of GF(q)^m for the common zeros of the generators, in
/// canonical order (last coordinate varies fastest). The generator list must
/// cut out a finite set; field equations are assumed present or implied by
/// the scan itself.
PointSet enumerate_variety(const std::vector<SparsePoly>& gens, const RingPtr& ring);

/// An error pattern: distinct 1-based positions with nonzero values.
struct ErrorPattern {
    std::vector<std::pair<std::size_t, unsigned>> entries; // (position, packed value)

    std::size_t weight() const { return entries.size(); }
    bool operator==(const ErrorPattern& o) const { return entries == o.entries; }
    std::vector<unsigned> to_word(std::size_t n) const;
};

using Syndrome = std::vector<unsigned>;

/// An affine-variety code C^perp(I, L): the variety points of I, a basis
/// b_1..b_r of the function space L, the r x n parity-check matrix
/// H[rho][sigma] = b_rho(P_sigma), and the correction capability t
/// (user-supplied).
struct AffineVarietyCode {
    Field field;
    RingPtr point_ring;                  // x_1..x_m, lex
    std::vector<SparsePoly> ideal_gens;  // user generators, then field equations
    std::size_t n_user_gens = 0;         // leading entries of ideal_gens
    PointSet points;                     // ordered V(I)
    std::vector<SparsePoly> basis_L;     // b_1..b_r
    std::vector<std::vector<unsigned>> H; // r rows, n columns
    unsigned t = 0;

    std::size_t n() const { return points.points.size(); }
    std::size_t r() const { return basis_L.size(); }
    std::size_t m() const { return point_ring->nvars(); }

    /// Builds points (unless supplied), checks them against the generators,
    /// fills H and verifies it has full rank r.
    static AffineVarietyCode make(Field field, RingPtr point_ring,
                                  std::vector<SparsePoly> variety_gens,
                                  std::vector<SparsePoly> basis_L, unsigned t,
                                  std::optional<PointSet> points = std::nullopt);

    bool on_variety(const std::vector<unsigned>& p) const;
};

Syndrome syndrome(const AffineVarietyCode& code, const std::vector<unsigned>& word);
Syndrome syndrome_of_pattern(const AffineVarietyCode& code, const ErrorPattern& e);

/// Visits every error pattern of weight <= t exactly once, in a fixed order:
/// ascending weight, then positions lexicographic, then values in canonical
/// field order. Returns the number visited (stops early if the visitor
/// returns false).
std::size_t for_each_correctable_pattern(const AffineVarietyCode& code,
                                         const std::function<bool(const ErrorPattern&)>& visit);

std::size_t count_correctable_patterns(const AffineVarietyCode& code);

/// Brute-force decoding oracle: the unique minimal-weight pattern with the
/// given syndrome, found by exhaustive scan. Throws NotCorrectableError when
/// no pattern of weight <= t matches.
ErrorPattern oracle_decode(const AffineVarietyCode& code, const Syndrome& s);

} // namespace varcode

#endif
