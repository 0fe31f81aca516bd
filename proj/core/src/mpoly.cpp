#include "varcode/mpoly.hpp"

#include <algorithm>
#include <cassert>

namespace varcode {

VarSet VarSet::flat(std::vector<std::string> names) {
    VarSet v;
    v.names = std::move(names);
    v.blocks = {Block{"", 0, v.names.size()}};
    return v;
}

VarSet VarSet::with_blocks(std::vector<std::pair<std::string, std::vector<std::string>>> groups) {
    VarSet v;
    for (auto& [name, vars] : groups) {
        Block b;
        b.name = name;
        b.begin = v.names.size();
        b.size = vars.size();
        for (auto& s : vars) v.names.push_back(std::move(s));
        v.blocks.push_back(std::move(b));
    }
    return v;
}

std::optional<std::size_t> VarSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

TermOrder TermOrder::block_lex(const VarSet& vars) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    spans.reserve(vars.blocks.size());
    for (const auto& b : vars.blocks) spans.emplace_back(b.begin, b.size);
    return TermOrder(Kind::block, std::move(spans));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::lex) {
        for (int i = static_cast<int>(a.nvars) - 1; i >= 0; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
    for (auto it = spans_.rbegin(); it != spans_.rend(); ++it) {
        const auto [begin, size] = *it;
        for (std::size_t j = size; j-- > 0;) {
            const std::size_t i = begin + j;
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
    }
    return 0;
}

RingPtr PolyRing::make(Field field, VarSet vars, TermOrder order) {
    if (vars.size() > kMaxVars) throw Error("too many variables (max 16)");
    return std::shared_ptr<const PolyRing>(
        new PolyRing(std::move(field), std::move(vars), std::move(order)));
}

std::size_t PolyRing::var(const std::string& name) const {
    auto i = vars_.index_of(name);
    if (!i) throw UnknownVariableError("unknown variable '" + name + "'");
    return *i;
}

bool PolyRing::same_as(const PolyRing& other) const {
    if (this == &other) return true;
    return field_->same_as(*other.field_) && vars_.names == other.vars_.names;
}

SparsePoly SparsePoly::constant(RingPtr ring, unsigned value) {
    SparsePoly p(std::move(ring));
    if (value != 0) p.terms_.push_back({Monomial::one(p.ring_->nvars()), value});
    return p;
}

SparsePoly SparsePoly::variable(RingPtr ring, std::size_t var, unsigned exp) {
    SparsePoly p(std::move(ring));
    if (var >= p.ring_->nvars()) throw UnknownVariableError("variable index out of range");
    Monomial m = Monomial::one(p.ring_->nvars());
    m.e[var] = static_cast<uint16_t>(exp);
    if (exp == 0)
        p.terms_.push_back({Monomial::one(p.ring_->nvars()), 1});
    else
        p.terms_.push_back({m, 1});
    return p;
}

SparsePoly SparsePoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& ord = ring->order();
    const auto& f = *ring->field();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    SparsePoly p(std::move(ring));
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(t);
        }
    }
    return p;
}

const SparsePoly::Term& SparsePoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    return terms_.front();
}

void SparsePoly::check_ring(const SparsePoly& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
        throw RingMismatchError("polynomials belong to different rings");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_ring(o);
    const auto& ord = ring_->order();
    const auto& f = *ring_->field();
    SparsePoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            unsigned v = f.add(terms_[i].coeff, o.terms_[j].coeff);
            if (v != 0) r.terms_.push_back({terms_[i].mono, v});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(*this);
    const auto& f = *ring_->field();
    for (auto& t : r.terms_) t.coeff = f.neg(t.coeff);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_ring(o);
    const auto& f = *ring_->field();
    if (is_zero() || o.is_zero()) return zero(ring_);
    const SparsePoly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const SparsePoly& big = terms_.size() <= o.terms_.size() ? o : *this;
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ring_->order().compare(a, b) > 0; };
    std::map<Monomial, unsigned, decltype(cmp)> acc(cmp);
    for (const auto& ts : small.terms_) {
        for (const auto& tb : big.terms_) {
            Monomial m = ts.mono * tb.mono;
            unsigned v = f.mul(ts.coeff, tb.coeff);
            auto [it, fresh] = acc.emplace(m, v);
            if (!fresh) {
                it->second = f.add(it->second, v);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    SparsePoly r(ring_);
    r.terms_.reserve(acc.size());
    for (const auto& [m, v] : acc) r.terms_.push_back({m, v});
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    if (!ring_->same_as(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

SparsePoly SparsePoly::scale(unsigned value) const {
    if (value == 0) return zero(ring_);
    SparsePoly r(*this);
    const auto& f = *ring_->field();
    for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, value);
    return r;
}

SparsePoly SparsePoly::mul_term(const Monomial& m, unsigned value) const {
    if (value == 0) return zero(ring_);
    SparsePoly r(*this);
    const auto& f = *ring_->field();
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff = f.mul(t.coeff, value);
    }
    return r;
}

SparsePoly SparsePoly::monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field()->inv(terms_.front().coeff));
}

SparsePoly SparsePoly::pow(unsigned n) const {
    SparsePoly r = constant(ring_, 1);
    SparsePoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

unsigned SparsePoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.e[var]);
    return d;
}

bool SparsePoly::uses_var(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono.e[var]) return true;
    return false;
}

int SparsePoly::max_var() const {
    int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.mono.max_var());
    return m;
}

std::pair<Monomial, FieldElement> leading_term(const SparsePoly& p) {
    const auto& t = p.leading();
    return {t.mono, FieldElement(p.ring()->field(), t.coeff)};
}

SparsePoly coefficient_of(const SparsePoly& p, std::size_t var, unsigned deg) {
    std::vector<SparsePoly::Term> out;
    for (const auto& t : p.terms()) {
        if (t.mono.e[var] == deg) {
            SparsePoly::Term u = t;
            u.mono.e[var] = 0;
            out.push_back(u);
        }
    }
    return SparsePoly::from_terms(p.ring(), std::move(out));
}

SparsePoly leading_poly(const SparsePoly& p, std::size_t var) {
    if (p.is_zero()) throw ZeroPolynomialError("leading polynomial of the zero polynomial");
    return coefficient_of(p, var, p.degree_in(var));
}

FieldElement evaluate(const SparsePoly& p, const std::vector<unsigned>& point) {
    const auto& f = *p.ring()->field();
    if (point.size() != p.ring()->nvars())
        throw LengthMismatchError("evaluation point has wrong dimension");
    unsigned acc = 0;
    for (const auto& t : p.terms()) {
        unsigned v = t.coeff;
        for (std::size_t i = 0; i < p.ring()->nvars() && v != 0; ++i)
            if (t.mono.e[i]) v = f.mul(v, f.pow(point[i], t.mono.e[i]));
        acc = f.add(acc, v);
    }
    return FieldElement(p.ring()->field(), acc);
}

FieldElement evaluate(const SparsePoly& p, const std::map<std::string, FieldElement>& assignment) {
    std::vector<unsigned> point(p.ring()->nvars(), 0);
    std::vector<bool> seen(p.ring()->nvars(), false);
    for (const auto& [name, value] : assignment) {
        std::size_t i = p.ring()->var(name);
        point[i] = value.value();
        seen[i] = true;
    }
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
        if (!seen[i] && p.uses_var(i))
            throw UnknownVariableError("evaluate: variable '" + p.ring()->vars().names[i] +
                                       "' not assigned");
    return evaluate(p, point);
}

SparsePoly specialize(const SparsePoly& p,
                      const std::vector<std::pair<std::size_t, unsigned>>& assignment) {
    const auto& f = *p.ring()->field();
    std::vector<SparsePoly::Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        unsigned v = t.coeff;
        Monomial m = t.mono;
        for (const auto& [var, value] : assignment) {
            if (m.e[var]) {
                v = f.mul(v, f.pow(value, m.e[var]));
                m.e[var] = 0;
                if (v == 0) break;
            }
        }
        if (v != 0) out.push_back({m, v});
    }
    return SparsePoly::from_terms(p.ring(), std::move(out));
}

SparsePoly specialize(const SparsePoly& p, const std::map<std::string, FieldElement>& assignment) {
    std::vector<std::pair<std::size_t, unsigned>> a;
    a.reserve(assignment.size());
    for (const auto& [name, value] : assignment) a.emplace_back(p.ring()->var(name), value.value());
    return specialize(p, a);
}

unsigned binomial_mod_p(unsigned long long n, unsigned long long k, unsigned p) {
    // Lucas: C(n,k) = prod C(n_i, k_i) mod p over base-p digits.
    unsigned r = 1;
    while (k > 0 || n > 0) {
        unsigned ni = static_cast<unsigned>(n % p), ki = static_cast<unsigned>(k % p);
        if (ki > ni) return 0;
        unsigned c = 1;
        for (unsigned i = 0; i < ki; ++i) {
            c = (c * (ni - i)) % p;
            // divide by (i+1) mod p: p prime, i+1 < p
            unsigned inv = 1, b = (i + 1) % p, e = p - 2;
            while (e) {
                if (e & 1) inv = (inv * b) % p;
                b = (b * b) % p;
                e >>= 1;
            }
            c = (c * inv) % p;
        }
        r = (r * c) % p;
        n /= p;
        k /= p;
    }
    return r;
}

SparsePoly hasse_derivative(const SparsePoly& p, std::size_t var, unsigned n) {
    if (n == 0) return p;
    const auto& f = *p.ring()->field();
    std::vector<SparsePoly::Term> out;
    for (const auto& t : p.terms()) {
        unsigned i = t.mono.e[var];
        if (i < n) continue;
        unsigned b = binomial_mod_p(i, n, f.p());
        if (b == 0) continue;
        SparsePoly::Term u = t;
        u.mono.e[var] = static_cast<uint16_t>(i - n);
        u.coeff = f.mul(t.coeff, b % f.p());
        out.push_back(u);
    }
    return SparsePoly::from_terms(p.ring(), std::move(out));
}

unsigned multiplicity_at_value(const SparsePoly& p, std::size_t var, unsigned root) {
    if (p.is_zero()) throw ZeroPolynomialError("multiplicity in the zero polynomial");
    for (const auto& t : p.terms())
        if (t.mono.e[var] != t.mono.total_degree())
            throw Error("multiplicity_at: polynomial is not univariate in the designated variable");
    std::vector<unsigned> point(p.ring()->nvars(), 0);
    point[var] = root;
    const unsigned deg = p.degree_in(var);
    // the multiplicity is the least k with phi^(k)(p)(root) != 0;
    // phi^(deg)(p) is the leading coefficient, so the loop always returns.
    for (unsigned k = 0; k <= deg; ++k) {
        if (evaluate(hasse_derivative(p, var, k), point).value() != 0) return k;
    }
    return deg;
}

unsigned multiplicity_at(const SparsePoly& p, std::size_t var, const FieldElement& root) {
    return multiplicity_at_value(p, var, root.value());
}

std::vector<std::pair<FieldElement, unsigned>> roots_univariate(const SparsePoly& p,
                                                                std::size_t var) {
    if (p.is_zero()) throw ZeroPolynomialError("roots of the zero polynomial");
    const Field& spec = p.ring()->field();
    std::vector<std::pair<FieldElement, unsigned>> out;
    for (unsigned idx = 0; idx < spec->q(); ++idx) {
        unsigned v = spec->from_canonical_index(idx);
        unsigned m = multiplicity_at_value(p, var, v);
        if (m > 0) out.emplace_back(FieldElement(spec, v), m);
    }
    return out;
}

SparsePoly transport(const SparsePoly& p, const RingPtr& target) {
    if (!p.ring()->field()->same_as(*target->field()))
        throw RingMismatchError("transport across different fields");
    std::vector<std::size_t> map(p.ring()->nvars(), 0);
    std::vector<bool> needed(p.ring()->nvars(), false);
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
            if (t.mono.e[i]) needed[i] = true;
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
        if (needed[i]) map[i] = target->var(p.ring()->vars().names[i]);
    std::vector<SparsePoly::Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        SparsePoly::Term u;
        u.mono = Monomial::one(target->nvars());
        for (std::size_t i = 0; i < p.ring()->nvars(); ++i)
            if (t.mono.e[i]) u.mono.e[map[i]] = t.mono.e[i];
        u.coeff = t.coeff;
        out.push_back(u);
    }
    return SparsePoly::from_terms(target, std::move(out));
}

} // namespace varcode
