#include <doctest.h>

#include <random>

#include "varcode/groebner.hpp"

using namespace varcode;

namespace {

Field gf4() { return FieldSpec::make(2, 2, {1, 1, 1}); }
Field gf7() { return FieldSpec::make(7, 1, {4, 1}); }

RingPtr ring(Field f, std::vector<std::string> names) {
    return PolyRing::make(std::move(f), VarSet::flat(std::move(names)));
}

} // namespace

TEST_CASE("normal form basics") {
    RingPtr R = ring(gf7(), {"x", "y"});
    SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
    CHECK(normal_form(x * x, {x}).is_zero());
    CHECK(normal_form(x + y, {y}) == x);
}

TEST_CASE("buchberger on tiny ideals") {
    RingPtr R = ring(gf7(), {"x", "y"});
    SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
    GroebnerBasis gb = buchberger({x + y, y});
    REQUIRE(gb.elems.size() == 2);
    CHECK(gb.elems[0] == x);
    CHECK(gb.elems[1] == y);

    // membership: every generator reduces to zero
    for (const auto& g : {x + y, y}) CHECK(normal_form(g, gb).is_zero());

    GroebnerBasis one = buchberger({x, x + SparsePoly::constant(R, 1)});
    CHECK(one.contains_one());
}

TEST_CASE("is_groebner flags a non-basis") {
    // {x^2 - y, x} under lex y < x: the S-pair leaves y
    RingPtr R = ring(gf7(), {"y", "x"});
    SparsePoly y = SparsePoly::variable(R, 0), x = SparsePoly::variable(R, 1);
    std::vector<SparsePoly> cand{x * x - y, x};
    GroebnerCheck chk = is_groebner(cand);
    CHECK_FALSE(chk.ok);

    CHECK(is_groebner({SparsePoly::constant(R, 1)}).ok);
    GroebnerBasis gb = buchberger(cand);
    CHECK(is_groebner(gb.elems).ok);
    // y itself must now be in the ideal
    CHECK(normal_form(y, gb).is_zero());
}

TEST_CASE("buchberger is idempotent and canonical") {
    RingPtr R = ring(gf4(), {"x", "y", "z"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned> dc(0, 3), de(0, 2), dt(1, 4);
    auto random_poly = [&] {
        std::vector<SparsePoly::Term> terms;
        unsigned nt = dt(rng);
        for (unsigned i = 0; i < nt; ++i) {
            Monomial m = Monomial::one(3);
            for (int v = 0; v < 3; ++v) m.e[v] = static_cast<uint16_t>(de(rng));
            terms.push_back({m, dc(rng)});
        }
        return SparsePoly::from_terms(R, std::move(terms));
    };
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<SparsePoly> gens;
        for (int i = 0; i < 3; ++i) {
            SparsePoly p = random_poly();
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(gens);
        CHECK(is_groebner(gb.elems).ok);
        GroebnerBasis gb2 = buchberger(gb.elems);
        REQUIRE(gb2.elems.size() == gb.elems.size());
        for (std::size_t i = 0; i < gb.elems.size(); ++i) CHECK(gb2.elems[i] == gb.elems[i]);
        // ideal equality both ways
        for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
        // a second generating set of the same ideal gives the same basis
        std::vector<SparsePoly> gens2 = gens;
        gens2.push_back(gens[0] * gens.back());
        gens2.push_back(gens[0] + gens.back());
        GroebnerBasis gb3 = buchberger(gens2);
        REQUIRE(gb3.elems.size() == gb.elems.size());
        for (std::size_t i = 0; i < gb.elems.size(); ++i) CHECK(gb3.elems[i] == gb.elems[i]);
    }
}

TEST_CASE("vanishing consistency with field equations") {
    // ideal of the Hermitian curve over GF(4), field equations included
    RingPtr R = ring(gf4(), {"x", "y"});
    SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
    SparsePoly curve = parse_poly("y^2+y+x^3", R);
    std::vector<SparsePoly> gens{curve, x.pow(4) - x, y.pow(4) - y};
    GroebnerBasis gb = buchberger(gens);

    // collect the variety by scanning GF(4)^2
    std::vector<std::vector<unsigned>> pts;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b) {
            std::vector<unsigned> p{a, b};
            bool on = true;
            for (const auto& g : gens)
                if (evaluate(g, p).value() != 0) on = false;
            if (on) pts.push_back(p);
        }
    CHECK(pts.size() == 8);
    for (const auto& g : gb.elems)
        for (const auto& p : pts) CHECK(evaluate(g, p).value() == 0);

    // radicality via field equations: NF(f) = 0 iff f vanishes on the variety
    std::mt19937 rng(13);
    std::uniform_int_distribution<unsigned> dc(0, 3), de(0, 3);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<SparsePoly::Term> terms;
        for (int i = 0; i < 3; ++i) {
            Monomial m = Monomial::one(2);
            m.e[0] = static_cast<uint16_t>(de(rng));
            m.e[1] = static_cast<uint16_t>(de(rng));
            terms.push_back({m, dc(rng)});
        }
        SparsePoly p = SparsePoly::from_terms(R, std::move(terms));
        bool vanishes = true;
        for (const auto& pt : pts)
            if (evaluate(p, pt).value() != 0) vanishes = false;
        CHECK(normal_form(p, gb).is_zero() == vanishes);
    }
}

TEST_CASE("elimination views") {
    RingPtr R = ring(gf7(), {"x", "y"});
    SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
    GroebnerBasis gb = buchberger({x, y});
    auto ex = elimination_view(gb, 1);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0] == x);
    CHECK(elimination_view(gb, 2).size() == 2);
    CHECK_THROWS_AS(elimination_view(gb, 3), IncompatibleOrderError);
}

TEST_CASE("stratification of a one-variable slot") {
    RingPtr R = ring(gf7(), {"s", "a"});
    SparsePoly a = SparsePoly::variable(R, 1);
    GroebnerBasis gb = buchberger({a - SparsePoly::constant(R, 1), SparsePoly::variable(R, 0)});
    BasisStratification st = stratify_basis(gb, {{1, 1}});
    const auto& slot = st.slot(0, 1);
    CHECK(slot.zeta == 1);
    REQUIRE(slot.slices.size() == 1);
    CHECK(slot.slices[0].size() == 1);
}

TEST_CASE("max-degree slice is a singleton in reduced bases of 0-dim ideals") {
    RingPtr R = ring(gf4(), {"x", "y"});
    std::mt19937 rng(17);
    std::uniform_int_distribution<unsigned> dv(0, 3);
    for (int rep = 0; rep < 20; ++rep) {
        SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
        std::vector<SparsePoly> gens{x.pow(4) - x, y.pow(4) - y};
        for (int i = 0; i < 2; ++i) {
            SparsePoly p = (x - SparsePoly::constant(R, dv(rng))) *
                           (y - SparsePoly::constant(R, dv(rng)));
            gens.push_back(p);
        }
        GroebnerBasis gb = buchberger(gens);
        if (gb.contains_one()) continue;
        BasisStratification st = stratify_basis(gb, {{0, 1}, {1, 1}});
        for (const auto& slot : st.slots) {
            if (slot.zeta == 0) continue;
            CHECK(slot.slices[slot.zeta - 1].size() == 1);
        }
    }
}

TEST_CASE("serialization is stable") {
    RingPtr R = ring(gf4(), {"x", "y"});
    SparsePoly x = SparsePoly::variable(R, 0), y = SparsePoly::variable(R, 1);
    GroebnerBasis gb = buchberger({x + y, y * y - y});
    std::string s1 = serialize_basis(gb);
    std::string s2 = serialize_basis(buchberger(gb.elems));
    CHECK(s1 == s2);
    CHECK(s1.find("p=2") != std::string::npos);
}
