#include <doctest.h>

#include <set>

#include "testutil.hpp"

using namespace varcode;

namespace {

const DecoderTables& hermitian_stuffed() {
    static DecoderTables tables = build_tables(
        CodeConfig::load(testutil::fixture_path("hermitian_q2.cfg")),
        LocatorSet::Flavor::stuffed, /*with_evaluator=*/true);
    return tables;
}

const DecoderTables& hermitian_weak() {
    static DecoderTables tables = build_tables(
        CodeConfig::load(testutil::fixture_path("hermitian_q2.cfg")),
        LocatorSet::Flavor::weak, /*with_evaluator=*/false);
    return tables;
}

} // namespace

TEST_CASE("stuffed decode walks the worked cases") {
    const DecoderTables& tables = hermitian_stuffed();
    Field f = tables.code->field;
    unsigned a = f->generator(), a2 = f->add(a, 1);

    // two errors of value 1 at P6 = (a, a+1) and P7 = (a+1, a)
    DecodeResult r1 = decode(tables, {0, 1, 1, 1, 0});
    REQUIRE(r1.status == DecodeResult::Status::corrected);
    REQUIRE(r1.pattern.weight() == 2);
    CHECK(r1.pattern.entries[0] == std::pair<std::size_t, unsigned>{6, 1});
    CHECK(r1.pattern.entries[1] == std::pair<std::size_t, unsigned>{7, 1});

    // values 1 at (0,0) and alpha at (0,1)
    DecodeResult r2 = decode(tables, {a2, 0, a, 0, 0});
    REQUIRE(r2.status == DecodeResult::Status::corrected);
    REQUIRE(r2.pattern.weight() == 2);
    CHECK(r2.pattern.entries[0] == std::pair<std::size_t, unsigned>{1, 1});
    CHECK(r2.pattern.entries[1] == std::pair<std::size_t, unsigned>{2, a});

    // single error alpha+1 at P3 = (1, alpha); the ghost (1,1) is discarded
    DecodeResult r3 = decode(tables, {a2, a2, 1, a2, 1});
    REQUIRE(r3.status == DecodeResult::Status::corrected);
    REQUIRE(r3.pattern.weight() == 1);
    CHECK(r3.pattern.entries[0] == std::pair<std::size_t, unsigned>{3, a2});

    CHECK(decode(tables, Syndrome(5, 0)).status == DecodeResult::Status::no_error);

    // decoding a received word corrects it
    std::vector<unsigned> word{0, 0, 0, 0, 0, 1, 1, 0};
    DecodeResult rw = decode_word(tables, word);
    CHECK(rw.status == DecodeResult::Status::corrected);
    CHECK(rw.pattern.to_word(8) == word);
}

TEST_CASE("weight prediction from the evaluator") {
    const DecoderTables& tables = hermitian_stuffed();
    Field f = tables.code->field;
    unsigned a = f->generator(), a2 = f->add(a, 1);

    auto [mu1, v1] = predict_weight(tables, {0, 1, 1, 1, 0});
    CHECK(mu1 == 2);
    CHECK(v1 == std::vector<unsigned>{1, 1});

    auto [mu2, v2] = predict_weight(tables, {a2, 0, a, 0, 0});
    CHECK(mu2 == 2);
    CHECK((v2 == std::vector<unsigned>{1, a} || v2 == std::vector<unsigned>{a, 1}));

    auto [mu3, v3] = predict_weight(tables, {a2, a2, 1, a2, 1});
    CHECK(mu3 == 1);
    CHECK(v3 == std::vector<unsigned>{a2});

    auto [mu0, v0] = predict_weight(tables, Syndrome(5, 0));
    CHECK(mu0 == 0);
    CHECK(v0.empty());

    const DecoderTables& weak = hermitian_weak();
    CHECK_THROWS_AS(predict_weight(weak, Syndrome(5, 0)), EvaluatorMissingError);
}

TEST_CASE("exhaustive verification of the stuffed tables") {
    VerifyReport rep = verify_exhaustive(hermitian_stuffed(), /*compare_oracle=*/true);
    CHECK(rep.total == 277);
    CHECK(rep.exact == 277);
    CHECK(rep.oracle_mismatch == 0);
    CHECK(rep.all_exact());
}

TEST_CASE("weak tables: deterministic and sound") {
    VerifyReport r1 = verify_exhaustive(hermitian_weak());
    VerifyReport r2 = verify_exhaustive(hermitian_weak());
    CHECK(r1.total == 277);
    CHECK(r1.exact == r2.exact);
    CHECK(r1.ambiguous == r2.ambiguous);
    CHECK(r1.mismatch == 0); // never a wrong correction, only ambiguity
    CHECK(r1.exact + r1.ambiguous == r1.total);
}

TEST_CASE("t=1 codes decode every single error") {
    for (const char* cfg : {"sdg_curve.cfg", "sdg_surface1.cfg", "sdg_surface2.cfg",
                            "norm_trace.cfg"}) {
        CAPTURE(cfg);
        DecoderTables tables = build_tables(CodeConfig::load(testutil::fixture_path(cfg)),
                                            LocatorSet::Flavor::stuffed, false);
        VerifyReport rep = verify_exhaustive(tables, /*compare_oracle=*/true);
        CHECK(rep.total == 1 + tables.code->n() * (tables.code->field->q() - 1));
        CHECK(rep.exact == rep.total);
        CHECK(rep.oracle_mismatch == 0);
    }
}

TEST_CASE("degenerate t=0 code verifies trivially") {
    CodeConfig cfg = CodeConfig::load(testutil::fixture_path("sdg_curve.cfg"));
    cfg.t = 0;
    DecoderTables tables;
    tables.config = cfg;
    CodeSetup setup = build_setup(cfg);
    tables.code = setup.code;
    for (std::size_t i = 0; i < setup.code->m(); ++i) tables.coordinate_order.push_back(i);
    tables.locators.flavor = LocatorSet::Flavor::stuffed;
    std::vector<std::string> names;
    for (std::size_t rho = 1; rho <= setup.code->r(); ++rho)
        names.push_back("s" + std::to_string(rho));
    names.push_back("x");
    names.push_back("y");
    tables.locators.ring = PolyRing::make(setup.field, VarSet::flat(names));
    VerifyReport rep = verify_exhaustive(tables);
    CHECK(rep.total == 1);
    CHECK(rep.exact == 1);
}

TEST_CASE("uncorrectable syndromes are reported, never mis-corrected") {
    const DecoderTables& tables = hermitian_stuffed();
    const AffineVarietyCode& code = *tables.code;
    // collect all correctable syndromes, then probe the rest of GF(4)^5
    std::set<Syndrome> good;
    for_each_correctable_pattern(code, [&](const ErrorPattern& e) {
        good.insert(syndrome_of_pattern(code, e));
        return true;
    });
    std::size_t probed = 0, flagged = 0;
    for (unsigned v = 0; v < 1024 && probed < 64; ++v) {
        Syndrome s(5);
        unsigned x = v;
        for (int i = 0; i < 5; ++i) {
            s[i] = x % 4;
            x /= 4;
        }
        if (good.count(s)) continue;
        ++probed;
        DecodeResult r = decode(tables, s);
        if (r.status == DecodeResult::Status::not_correctable) ++flagged;
        // soundness: if it claims a correction, the syndrome must match
        if (r.status == DecodeResult::Status::corrected)
            CHECK(syndrome_of_pattern(code, r.pattern) == s);
    }
    CHECK(probed > 0);
    CHECK(flagged == probed);
}

TEST_CASE("tables serialize and reload identically") {
    const DecoderTables& tables = hermitian_stuffed();
    std::string text = serialize_tables(tables);
    DecoderTables loaded = parse_tables(text);
    CHECK(serialize_tables(loaded) == text);
    REQUIRE(loaded.locators.locs.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(format_poly(loaded.locators.locs[i]) == format_poly(tables.locators.locs[i]));
    REQUIRE(loaded.evaluator.has_value());
    CHECK(format_poly(loaded.evaluator->poly) == format_poly(tables.evaluator->poly));

    // a reloaded table verifies identically
    VerifyReport rep = verify_exhaustive(loaded);
    CHECK(rep.total == 277);
    CHECK(rep.exact == 277);

    DecodeResult r = decode(loaded, {0, 1, 1, 1, 0});
    CHECK(r.status == DecodeResult::Status::corrected);
}

TEST_CASE("config parsing errors") {
    CHECK_THROWS_AS(CodeConfig::parse("[field] p=2"), ConfigError);
    CHECK_THROWS_AS(CodeConfig::parse("nonsense"), ConfigError);
    CHECK_THROWS_AS(CodeConfig::parse("[field] p=2 k=1 primitive=1,1\n[ring] vars=x\n"),
                    ConfigError); // missing L
    CodeConfig cfg = CodeConfig::load(testutil::fixture_path("hermitian_q2.cfg"));
    CodeConfig reparsed = CodeConfig::parse(cfg.serialize());
    CHECK(reparsed.serialize() == cfg.serialize());
}

TEST_CASE("build_tables honors the weak flavor and records metadata") {
    const DecoderTables& weak = hermitian_weak();
    CHECK(weak.locators.flavor == LocatorSet::Flavor::weak);
    CHECK_FALSE(weak.evaluator.has_value());
    CHECK(weak.info.gb_seconds > 0);
    const DecoderTables& stuffed = hermitian_stuffed();
    CHECK(stuffed.info.stuff_steps > 0);
    CHECK(stuffed.ghost == std::vector<unsigned>{1, 1});
}
