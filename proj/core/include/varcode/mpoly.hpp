#ifndef VARCODE_MPOLY_HPP
#define VARCODE_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varcode/gf.hpp"

namespace varcode {

/// Upper bound on ring size; every ring in scope fits.
inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Comparison and divisibility ignore entries at or
/// beyond nvars.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t nvars = 0;

    static Monomial one(std::size_t n) {
        Monomial m;
        m.nvars = static_cast<uint8_t>(n);
        return m;
    }

    bool is_one() const {
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i]) return false;
        return true;
    }
    unsigned total_degree() const {
        unsigned d = 0;
        for (std::size_t i = 0; i < nvars; ++i) d += e[i];
        return d;
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] + m.e[i]);
        return r;
    }
    /// Requires m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < nvars; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] - m.e[i]);
        return r;
    }
    Monomial lcm(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < nvars; ++i) r.e[i] = std::max(r.e[i], m.e[i]);
        return r;
    }
    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] && m.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& m) const {
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] != m.e[i]) return false;
        return nvars == m.nvars;
    }
    bool operator!=(const Monomial& m) const { return !(*this == m); }
    /// Largest variable index with nonzero exponent, or -1 for the monomial 1.
    int max_var() const {
        for (int i = static_cast<int>(nvars) - 1; i >= 0; --i)
            if (e[i]) return i;
        return -1;
    }
};

/// Named, ordered variable set. Ascending position = ascending in the term
/// order. Blocks partition the positions into contiguous named groups
/// (e.g. S | X_t | ... | X_1 | E); a default-constructed set has one block.
struct VarSet {
    struct Block {
        std::string name;
        std::size_t begin = 0;
        std::size_t size = 0;
    };
    std::vector<std::string> names;
    std::vector<Block> blocks;

    static VarSet flat(std::vector<std::string> names);
    static VarSet with_blocks(std::vector<std::pair<std::string, std::vector<std::string>>> groups);

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index_of(const std::string& name) const;
};

/// Total multiplicative order on monomials with 1 as minimum. Kind lex scans
/// positions from the greatest variable down; kind block compares block by
/// block from the greatest block, lex within each block.
class TermOrder {
public:
    enum class Kind { lex, block };

    TermOrder() = default;
    static TermOrder lex() { return TermOrder(Kind::lex, {}); }
    static TermOrder block_lex(const VarSet& vars);

    Kind kind() const { return kind_; }
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    TermOrder(Kind k, std::vector<std::pair<std::size_t, std::size_t>> spans)
        : kind_(k), spans_(std::move(spans)) {}
    Kind kind_ = Kind::lex;
    std::vector<std::pair<std::size_t, std::size_t>> spans_; // (begin, size) per block, ascending
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring: field + ordered variables + term order.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
public:
    static RingPtr make(Field field, VarSet vars, TermOrder order = TermOrder::lex());

    const Field& field() const { return field_; }
    const VarSet& vars() const { return vars_; }
    const TermOrder& order() const { return order_; }
    std::size_t nvars() const { return vars_.size(); }

    std::size_t var(const std::string& name) const; // throws UnknownVariableError
    bool same_as(const PolyRing& other) const;

private:
    PolyRing(Field f, VarSet v, TermOrder o)
        : field_(std::move(f)), vars_(std::move(v)), order_(std::move(o)) {}
    Field field_;
    VarSet vars_;
    TermOrder order_;
};

/// Sparse multivariate polynomial. Terms are kept in descending term order
/// with nonzero coefficients (packed field values); the zero polynomial has
/// no terms.
class SparsePoly {
public:
    struct Term {
        Monomial mono;
        unsigned coeff; // packed nonzero field value
    };

    SparsePoly() = default;
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}

    static SparsePoly zero(RingPtr ring) { return SparsePoly(std::move(ring)); }
    static SparsePoly constant(RingPtr ring, unsigned value);
    static SparsePoly variable(RingPtr ring, std::size_t var, unsigned exp = 1);
    /// From unsorted (monomial, value) pairs; merges duplicates.
    static SparsePoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const; // throws ZeroPolynomialError
    bool is_monic() const { return !terms_.empty() && terms_.front().coeff == 1; }

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly scale(unsigned value) const;            // multiply by a field value
    SparsePoly mul_term(const Monomial& m, unsigned value) const;
    SparsePoly monic() const;                          // divide by leading coefficient
    SparsePoly pow(unsigned n) const;

    unsigned degree_in(std::size_t var) const; // 0 for the zero polynomial
    bool uses_var(std::size_t var) const;
    /// Largest variable index appearing, or -1 for constants.
    int max_var() const;

    /// Takes ownership of a term list that is already strictly descending
    /// with nonzero coefficients (hot path for division loops).
    void assign_sorted_desc(std::vector<Term> terms) { terms_ = std::move(terms); }

private:
    void check_ring(const SparsePoly& o) const;
    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Leading term of a nonzero polynomial under the ring order.
std::pair<Monomial, FieldElement> leading_term(const SparsePoly& p);

/// Coefficient of the top power of `var`, as a polynomial in the remaining
/// variables.
SparsePoly leading_poly(const SparsePoly& p, std::size_t var);

/// Coefficient of var^deg, as a polynomial with that variable removed from
/// its support.
SparsePoly coefficient_of(const SparsePoly& p, std::size_t var, unsigned deg);

/// Full substitution; assignment values indexed by ring position.
FieldElement evaluate(const SparsePoly& p, const std::vector<unsigned>& point);
FieldElement evaluate(const SparsePoly& p, const std::map<std::string, FieldElement>& assignment);

/// Partial substitution; assigned variables disappear from the support, the
/// ring is unchanged.
SparsePoly specialize(const SparsePoly& p, const std::map<std::string, FieldElement>& assignment);
SparsePoly specialize(const SparsePoly& p, const std::vector<std::pair<std::size_t, unsigned>>& assignment);

/// n-th Hasse derivative in `var`: sum C(i, n) a_i x^(i-n), binomials mod p.
SparsePoly hasse_derivative(const SparsePoly& p, std::size_t var, unsigned n);

/// Root multiplicity of a univariate view: the largest r >= 1 with
/// phi^(k)(p)(root) = 0 for 0 <= k <= r-1; 0 if root is not a root.
/// p must be nonzero and supported on `var` only.
unsigned multiplicity_at(const SparsePoly& p, std::size_t var, const FieldElement& root);
unsigned multiplicity_at_value(const SparsePoly& p, std::size_t var, unsigned root);

/// All roots in GF(q) with multiplicities, in canonical field order.
std::vector<std::pair<FieldElement, unsigned>> roots_univariate(const SparsePoly& p,
                                                                std::size_t var);

/// Binomial coefficient C(n, k) mod p by Lucas' theorem.
unsigned binomial_mod_p(unsigned long long n, unsigned long long k, unsigned p);

/// Text format (External Interfaces grammar):
///   poly := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' uint)? ; base := var | elem | '(' poly ')'
SparsePoly parse_poly(const std::string& text, const RingPtr& ring);
std::string format_poly(const SparsePoly& p);

/// Rebuilds p in another ring, matching variables by name. Every variable in
/// the support must exist in the target ring; fields must agree.
SparsePoly transport(const SparsePoly& p, const RingPtr& target);

} // namespace varcode

#endif
