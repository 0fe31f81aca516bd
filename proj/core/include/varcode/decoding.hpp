#ifndef VARCODE_DECODING_HPP
#define VARCODE_DECODING_HPP

#include <optional>

#include "varcode/code.hpp"

namespace varcode {

/// The three decoding-ideal flavors: the plain Cooper-style ideal, the
/// variant with pairwise-distinct locations, and the ghost-point ideal that
/// handles every weight mu <= t at once.
enum class IdealVariant { FL, HAT, STAR };

/// A decoding-ideal instance over a code: the variant, the ghost point
/// (required for STAR with t >= 2), the within-block coordinate order, and
/// the two pinned rings.
///
/// Locator ring:   s_1..s_r < X_t < ... < X_1 < e_t < ... < e_1   (lex)
/// Evaluator ring: s_1..s_r < e_t < ... < e_1 < X_t < ... < X_1   (lex)
/// Block X_j holds one variable per code coordinate, named "<coord><j>",
/// ordered within the block by `coordinate_order`.
struct DecodingIdealSpec {
    const AffineVarietyCode* code = nullptr;
    IdealVariant variant = IdealVariant::STAR;
    std::optional<std::vector<unsigned>> ghost; // in code coordinate order
    std::vector<std::size_t> coordinate_order;  // permutation of 0..m-1
    RingPtr locator_ring;
    RingPtr evaluator_ring;

    static DecodingIdealSpec make(const AffineVarietyCode& code, IdealVariant variant,
                                  std::optional<std::vector<unsigned>> ghost = std::nullopt,
                                  std::vector<std::size_t> coordinate_order = {});

    unsigned t() const { return code->t; }
    std::size_t m() const { return code->m(); }
    std::size_t r() const { return code->r(); }
    /// Name of locator coordinate i (1-based) in block j: "<coord><j>".
    std::string block_var(std::size_t j, std::size_t i) const;
    /// Ghost coordinate in locator coordinate order (1-based i).
    unsigned ghost_coord(std::size_t i) const;
};

/// First non-variety point in canonical scan order, preferring optimal ghost
/// points when any exists. Throws NoGhostAvailableError if the variety fills
/// the whole space.
std::vector<unsigned> choose_ghost_point(const AffineVarietyCode& code);

/// Whether some hyperplane x_j = P0_j misses the variety; returns the list
/// of such ghost components (1-based, code coordinate order).
std::pair<bool, std::vector<std::size_t>> is_optimal_ghost(const AffineVarietyCode& code,
                                                           const std::vector<unsigned>& P0);

/// The paper's generator families for the chosen variant, in the given ring
/// (defaults to the locator ring). For STAR with t >= 2 this includes the
/// Buchberger-Moeller basis of the variety-plus-ghost ideal; STAR with t = 1
/// degenerates to the plain form with e^(q-1) = 1 and no ghost machinery.
std::vector<SparsePoly> build_ideal(const DecodingIdealSpec& spec, RingPtr ring = nullptr);

/// Reduced Groebner basis of the decoding ideal in the given ring, with the
/// field equations of every ring variable adjoined before the run (same
/// ideal, faster bases).
GroebnerBasis decoding_basis(const DecodingIdealSpec& spec, RingPtr ring = nullptr);

/// Independent model of V(J_*): all tuples built from each weight-mu error
/// (mu true location/value pairs, t-mu ghost pairs) under all t! slot
/// permutations, with the syndrome in front. Deduplicated, canonical order.
PointSet semantic_variety(const DecodingIdealSpec& spec, RingPtr ring = nullptr);

/// Variety of a zero-dimensional lex basis by variable-by-variable extension
/// (Gianni-Kalkbrener style back-substitution over exhaustive field scans).
PointSet enumerate_variety_lex(const GroebnerBasis& basis, std::size_t cap = 1 << 20);

/// Level-function / stratification analysis of a zero-dimensional ideal with
/// a known variety. `a_blocks` lists the (begin, size) spans of the A-block
/// family ascending (least block first); `s_vars` is the size of the leading
/// S block.
struct StratificationReport {
    struct Slot {
        std::size_t block = 0; // listing index, 0 = least (= paper block L)
        std::size_t index = 1; // 1-based variable index within the block
        std::size_t var = 0;   // ring position
        unsigned eta = 0;
        unsigned zeta = 0;
        std::vector<std::size_t> sigma_sizes; // |Sigma_l|, l = 1..eta
        bool top_pure_power_unique = false;
        bool slices_full = false; // G_delta nonempty for 1 <= delta <= zeta
    };
    std::vector<Slot> slots;
    bool weakly_stratified = false;
    bool multi_stratified = false;
    bool strongly_multi_stratified = false;
    /// zeta = eta with a unique pure-power top element in every slot.
    bool gb_structure_ok = false;
    /// For m = 1 families: the eta(.,1) column in block listing order.
    std::vector<unsigned> lambda;

    const Slot& slot(std::size_t block, std::size_t index) const;
};

/// `padding` names a block value that acts as a slot placeholder (the ghost
/// point of a decoding ideal). When present, a fiber realizes both itself
/// and itself minus the padding value for the strong realization condition;
/// this is how the existence theorem's constructions fill unused slots.
StratificationReport analyze_stratification(
    const GroebnerBasis& basis, const PointSet& variety, std::size_t s_vars,
    const std::vector<std::pair<std::size_t, std::size_t>>& a_blocks,
    const std::optional<std::vector<unsigned>>& padding = std::nullopt);

/// Convenience: analysis of J_* itself (basis + semantic variety).
StratificationReport analyze_stratification(const DecodingIdealSpec& spec,
                                            const GroebnerBasis& basis);

/// A set of locator polynomials L_1..L_m: L_i is monic of degree t_i in the
/// i-th locator coordinate with coefficients in GF(q)[S, x_1..x_{i-1}]. The
/// ring renames the least X block to the bare coordinate names.
struct LocatorSet {
    enum class Flavor { weak, stuffed };
    Flavor flavor = Flavor::weak;
    RingPtr ring; // s_1..s_r then the m coordinate names, lex
    std::vector<SparsePoly> locs;
    std::vector<unsigned> degrees;
};

/// Per-coordinate degree bound min(t, |pi_i(V(I) u {P0})|) in locator
/// coordinate order.
std::vector<unsigned> compute_t_bounds(const DecodingIdealSpec& spec);

/// Reads the weak locators off the reduced basis: for each i the unique
/// element of G^{t,i} whose leading term is a pure power of x_{t,i}.
/// Throws LocatorMissingError if the structure is violated.
LocatorSet extract_weak_locators(const DecodingIdealSpec& spec, const GroebnerBasis& basis);

/// The stuffed ideal, represented by its elimination-level bases: level i
/// lives in GF(q)[S, x_{t,1}..x_{t,i}] and has every parasite absorbed into
/// root multiplicities. The variety of every level equals the projection of
/// V(J_*).
struct StuffedIdeal {
    std::vector<GroebnerBasis> levels; // size m
    unsigned stuff_steps = 0;          // Hasse kernel steps applied
};
StuffedIdeal stuff_ideal(const DecodingIdealSpec& spec, const GroebnerBasis& basis);

LocatorSet extract_locators(const DecodingIdealSpec& spec, const StuffedIdeal& stuffed);

/// The general error evaluator: the unique element of the evaluator-order
/// basis in GF(q)[S, e_t] with leading term e_t^t, renamed to variable "e".
struct EvaluatorPoly {
    RingPtr ring; // s_1..s_r, e
    SparsePoly poly;
};
EvaluatorPoly extract_evaluator(const DecodingIdealSpec& spec, const GroebnerBasis& evaluator_basis);

/// Checks the Hermitian t=2 syndrome identity a*s_lin + b*s_one = -s_sq over
/// every correctable syndrome, where the first locator is x^2 + a x + b and
/// s_one, s_lin, s_sq are the syndrome coordinates of the monomials 1, c,
/// c^2 for the first locator coordinate c. Also checks the degenerate case
/// (s_one = s_lin = 0 with two errors sharing the first coordinate implies
/// a = 2 x1 and b = x1^2).
struct EvvivaReport {
    bool applicable = false;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::size_t degenerate_checked = 0;
    std::size_t degenerate_violations = 0;
};
EvvivaReport check_evviva(const DecodingIdealSpec& spec, const LocatorSet& locators);

} // namespace varcode

#endif
