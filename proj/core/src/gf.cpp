#include "varcode/gf.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace varcode {
namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), ascending coefficients, used only for the
// construction-time checks.
using PPoly = std::vector<unsigned>;

PPoly trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PPoly mod_poly(PPoly a, const PPoly& m, unsigned p) {
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back(); // m is monic
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            unsigned sub = (lead * m[i]) % p;
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

PPoly mul_mod(const PPoly& a, const PPoly& b, const PPoly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return mod_poly(std::move(c), m, p);
}

// Exhaustive divisor scan: tests divisibility by every monic polynomial of
// degree 1..k/2. Adequate for the small k in scope.
bool is_irreducible(const PPoly& f, unsigned p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) return true;
    for (std::size_t d = 1; 2 * d <= k; ++d) {
        // enumerate monic divisor candidates of degree d
        unsigned long long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long long code = 0; code < count; ++code) {
            PPoly g(d + 1, 0);
            unsigned long long c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (mod_poly(f, g, p).empty()) return false;
        }
    }
    return true;
}

unsigned pack(const PPoly& a, unsigned p) {
    unsigned v = 0, scale = 1;
    for (unsigned c : a) {
        v += c * scale;
        scale *= p;
    }
    return v;
}

} // namespace

Field FieldSpec::make(unsigned p, unsigned k, std::vector<unsigned> primitive_poly) {
    if (!is_prime(p)) throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("extension degree must be >= 1");
    if (primitive_poly.size() != k + 1 || primitive_poly.back() % p != 1)
        throw Error("primitive polynomial must be monic of degree k");
    for (unsigned& c : primitive_poly) c %= p;
    if (!is_irreducible(primitive_poly, p))
        throw NotIrreducibleError("polynomial is reducible over GF(" + std::to_string(p) + ")");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->k_ = k;
    spec->poly_ = primitive_poly;
    unsigned q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    spec->q_ = q;
    if (q > (1u << 16)) throw Error("field size exceeds 2^16");

    // generator = residue class of x; for k = 1 this is x = -c_0.
    if (k == 1)
        spec->gen_ = (p - primitive_poly[0] % p) % p;
    else
        spec->gen_ = p; // digit vector (0,1,0,...)

    // order check: the generator must have multiplicative order q - 1
    {
        PPoly x = (k == 1) ? PPoly{spec->gen_} : PPoly{0, 1};
        PPoly acc{1};
        unsigned order = 0;
        for (unsigned i = 1; i <= q - 1; ++i) {
            acc = mul_mod(acc, x, primitive_poly, p);
            if (acc.size() == 1 && acc[0] == 1) {
                order = i;
                break;
            }
        }
        if (order != q - 1)
            throw NotPrimitiveError("residue class has order " + std::to_string(order) +
                                    ", expected " + std::to_string(q - 1));
    }
    return spec;
}

void FieldSpec::ensure_tables() const {
    std::call_once(tables_once_, [this]() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        PPoly x(k_, 0);
        if (k_ == 1)
            x = {gen_};
        else
            x[1] = 1;
        PPoly acc{1};
        for (unsigned i = 0; i + 1 < q_; ++i) {
            unsigned v = pack(acc, p_);
            exp_[i] = static_cast<uint16_t>(v);
            log_[v] = static_cast<uint16_t>(i);
            acc = mul_mod(acc, x, poly_, p_);
        }
        if (q_ <= 256) {
            add_tab_.assign(static_cast<std::size_t>(q_) * q_, 0);
            for (unsigned a = 0; a < q_; ++a)
                for (unsigned b = 0; b < q_; ++b) {
                    unsigned v = 0, scale = 1, aa = a, bb = b;
                    for (unsigned i = 0; i < k_; ++i) {
                        v += ((aa % p_) + (bb % p_)) % p_ * scale;
                        aa /= p_;
                        bb /= p_;
                        scale *= p_;
                    }
                    add_tab_[static_cast<std::size_t>(a) * q_ + b] = static_cast<uint16_t>(v);
                }
        }
    });
}

unsigned FieldSpec::add(unsigned a, unsigned b) const {
    if (p_ == 2) return a ^ b;
    ensure_tables();
    if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
    unsigned v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        v += ((a % p_) + (b % p_)) % p_ * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return v;
}

unsigned FieldSpec::neg(unsigned a) const {
    if (p_ == 2) return a;
    unsigned v = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
        v += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return v;
}

unsigned FieldSpec::mul(unsigned a, unsigned b) const {
    if (a == 0 || b == 0) return 0;
    ensure_tables();
    unsigned s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
}

unsigned FieldSpec::inv(unsigned a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    ensure_tables();
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned FieldSpec::pow(unsigned a, long long n) const {
    if (a == 0) {
        if (n < 0) throw DivisionByZeroError("negative power of zero");
        return n == 0 ? 1u : 0u;
    }
    ensure_tables();
    long long e = static_cast<long long>(log_[a]) * (n % static_cast<long long>(q_ - 1));
    long long m = q_ - 1;
    e = ((e % m) + m) % m;
    return exp_[static_cast<unsigned>(e)];
}

unsigned FieldSpec::log(unsigned a) const {
    if (a == 0) throw DivisionByZeroError("log of zero");
    ensure_tables();
    return log_[a];
}

unsigned FieldSpec::exp(unsigned i) const {
    ensure_tables();
    return exp_[i % (q_ - 1)];
}

unsigned FieldSpec::canonical_index(unsigned a) const {
    if (a == 0) return 0;
    ensure_tables();
    return log_[a] + 1;
}

unsigned FieldSpec::from_canonical_index(unsigned idx) const {
    if (idx == 0) return 0;
    ensure_tables();
    return exp_[idx - 1];
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && k_ == other.k_ && poly_ == other.poly_;
}

std::vector<FieldElement> enumerate_field(const Field& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec->q());
    for (unsigned i = 0; i < spec->q(); ++i)
        out.emplace_back(spec, spec->from_canonical_index(i));
    return out;
}

unsigned parse_element_value(const std::string& text, const FieldSpec& spec) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = text.size();
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i >= end) throw ParseError("empty element literal", i);
    if (text[i] == 'g') {
        ++i;
        unsigned long long e = 1;
        if (i < end && text[i] == '^') {
            ++i;
            if (i >= end || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected exponent after 'g^'", i);
            e = 0;
            while (i < end && std::isdigit(static_cast<unsigned char>(text[i])))
                e = e * 10 + (text[i++] - '0');
        }
        if (i != end) throw ParseError("trailing characters in element literal", i);
        return spec.pow(spec.generator(), static_cast<long long>(e));
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected element literal", i);
    unsigned long long v = 0;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
    if (i != end) throw ParseError("trailing characters in element literal", i);
    return static_cast<unsigned>(v % spec.p());
}

FieldElement parse_element(const std::string& text, const Field& spec) {
    return FieldElement(spec, parse_element_value(text, *spec));
}

std::string format_element_value(unsigned value, const FieldSpec& spec) {
    if (value == 0) return "0";
    if (spec.k() == 1) return std::to_string(value);
    if (value == 1) return "1";
    unsigned l = spec.log(value);
    if (l == 1) return "g";
    return "g^" + std::to_string(l);
}

std::string format_element(const FieldElement& e) {
    return format_element_value(e.value(), *e.spec());
}

} // namespace varcode
