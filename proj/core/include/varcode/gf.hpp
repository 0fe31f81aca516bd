#ifndef VARCODE_GF_HPP
#define VARCODE_GF_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "varcode/errors.hpp"

namespace varcode {

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic in GF(p^k) with a pinned primitive polynomial.
///
/// Elements are handled as packed values in [0, q): the value of the digit
/// vector (c_0, ..., c_{k-1}) in the polynomial basis is sum c_i * p^i.
/// The canonical element order is 0, 1, g, g^2, ..., g^(q-2), where g is the
/// residue class of the indeterminate; it fixes all downstream tie-breaking
/// (root listing, ghost-point scan, variety enumeration).
///
/// A FieldSpec is immutable after construction and safe to share across
/// threads. Discrete-log tables are built lazily on first multiplicative use.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
public:
    /// Validates and builds a field. The polynomial is given by ascending
    /// coefficients over GF(p), length k+1, monic. Throws NotPrimeError,
    /// NotIrreducibleError or NotPrimitiveError.
    static Field make(unsigned p, unsigned k, std::vector<unsigned> primitive_poly);

    unsigned p() const { return p_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }
    const std::vector<unsigned>& primitive_poly() const { return poly_; }

    /// Packed value of the generator g (the residue class of x for k > 1,
    /// x = -c_0 for k = 1).
    unsigned generator() const { return gen_; }

    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const; // throws DivisionByZeroError on 0
    unsigned pow(unsigned a, long long n) const;

    /// Index in the canonical order 0, 1, g, ..., g^(q-2).
    unsigned canonical_index(unsigned a) const;
    /// Element at a canonical index.
    unsigned from_canonical_index(unsigned idx) const;

    /// Discrete log of a nonzero element; throws DivisionByZeroError on 0.
    unsigned log(unsigned a) const;
    unsigned exp(unsigned i) const; // g^(i mod (q-1))

    bool same_as(const FieldSpec& other) const;

private:
    FieldSpec() = default;

    void ensure_tables() const;
    unsigned mul_slow(unsigned a, unsigned b) const;

    unsigned p_ = 0, k_ = 0, q_ = 0, gen_ = 0;
    std::vector<unsigned> poly_;

    mutable std::once_flag tables_once_;
    mutable std::vector<uint16_t> exp_;     // exp_[i] = g^i, i in [0, q-1)
    mutable std::vector<uint16_t> log_;     // log_[v] for v != 0
    mutable std::vector<uint16_t> add_tab_; // q*q table when q <= 256
};

/// A field element as a plain value. Arithmetic requires both operands to
/// share the same FieldSpec handle (RingMismatchError otherwise).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Field spec, unsigned value) : spec_(std::move(spec)), v_(value) {}

    const Field& spec() const { return spec_; }
    unsigned value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return with(spec_->add(v_, same(o))); }
    FieldElement operator-(const FieldElement& o) const { return with(spec_->sub(v_, same(o))); }
    FieldElement operator*(const FieldElement& o) const { return with(spec_->mul(v_, same(o))); }
    FieldElement operator/(const FieldElement& o) const {
        return with(spec_->mul(v_, spec_->inv(same(o))));
    }
    FieldElement operator-() const { return with(spec_->neg(v_)); }
    FieldElement inv() const { return with(spec_->inv(v_)); }
    FieldElement pow(long long n) const { return with(spec_->pow(v_, n)); }

    bool operator==(const FieldElement& o) const { return v_ == o.v_ && spec_->same_as(*o.spec_); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    unsigned same(const FieldElement& o) const {
        if (!spec_ || !o.spec_ || !spec_->same_as(*o.spec_))
            throw RingMismatchError("field elements belong to different fields");
        return o.v_;
    }
    FieldElement with(unsigned v) const { return FieldElement(spec_, v); }

    Field spec_;
    unsigned v_ = 0;
};

/// All q elements in canonical order: 0, 1, g, g^2, ..., g^(q-2).
std::vector<FieldElement> enumerate_field(const Field& spec);

/// Element literal grammar: elem := uint | 'g' | 'g' '^' uint.
/// Integers reduce mod p and embed in the prime subfield.
unsigned parse_element_value(const std::string& text, const FieldSpec& spec);
FieldElement parse_element(const std::string& text, const Field& spec);
std::string format_element_value(unsigned value, const FieldSpec& spec);
std::string format_element(const FieldElement& e);

} // namespace varcode

#endif
