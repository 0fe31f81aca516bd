#include <benchmark/benchmark.h>

#include "varcode/decoder.hpp"

using namespace varcode;

namespace {

Field gf16() { return FieldSpec::make(2, 4, {1, 1, 0, 0, 1}); }

CodeConfig hermitian_cfg() {
    return CodeConfig::parse(R"([field] p=2 k=2 primitive=1,1,1
[ring] vars=x,y
[variety] gen=y^2+y+x^3
[code] L=1
[code] L=x
[code] L=y
[code] L=x^2
[code] L=x*y
[code] t=2
[decoder] ghost=(1,1)
)");
}

void BM_FieldMul(benchmark::State& state) {
    Field f = gf16();
    unsigned acc = 1;
    for (auto _ : state) {
        for (unsigned a = 1; a < 16; ++a)
            for (unsigned b = 1; b < 16; ++b) acc ^= f->mul(a, b);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul);

void BM_PolyMul(benchmark::State& state) {
    RingPtr R = PolyRing::make(gf16(), VarSet::flat({"x", "y", "z"}));
    SparsePoly f = parse_poly("(x+y+z+1)^4", R);
    SparsePoly g = parse_poly("(x*y+z^2+g)^3", R);
    for (auto _ : state) {
        SparsePoly h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_PolyMul);

void BM_BuchbergerHermitianCurve(benchmark::State& state) {
    Field f4 = FieldSpec::make(2, 2, {1, 1, 1});
    RingPtr R = PolyRing::make(f4, VarSet::flat({"x", "y"}));
    std::vector<SparsePoly> gens{
        parse_poly("y^2+y+x^3", R),
        parse_poly("x^4+x", R),
        parse_poly("y^4+y", R),
    };
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(gens);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_BuchbergerHermitianCurve);

void BM_VanishingIdeal32Points(benchmark::State& state) {
    Field f8 = FieldSpec::make(2, 3, {1, 1, 0, 1});
    RingPtr R = PolyRing::make(f8, VarSet::flat({"x", "y"}));
    PointSet Z{R, {}};
    for (unsigned a = 0; a < 8 && Z.points.size() < 32; ++a)
        for (unsigned b = 0; b < 8 && Z.points.size() < 32; ++b)
            if ((a * 3 + b * 5 + 1) % 2 == 0) Z.points.push_back({a, b});
    while (Z.points.size() < 32) Z.points.push_back({7, (unsigned)Z.points.size() % 8});
    Z.sort_canonical();
    for (auto _ : state) {
        GroebnerBasis gb = vanishing_ideal(Z);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_VanishingIdeal32Points);

void BM_DecodeSdgCurve(benchmark::State& state) {
    static DecoderTables tables = [] {
        CodeConfig cfg = CodeConfig::parse(R"([field] p=2 k=3 primitive=1,1,0,1
[ring] vars=x,y
[variety] gen=x^4+x^2+x+y^6+y^5+y^3+1
[code] L=1
[code] L=y
[code] L=x
[code] L=y^2
[code] t=1
)");
        return build_tables(cfg, LocatorSet::Flavor::stuffed, false);
    }();
    ErrorPattern e;
    e.entries = {{5, 3}};
    Syndrome s = syndrome_of_pattern(*tables.code, e);
    for (auto _ : state) {
        DecodeResult r = decode(tables, s);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DecodeSdgCurve);

void BM_BuildHermitianTables(benchmark::State& state) {
    CodeConfig cfg = hermitian_cfg();
    for (auto _ : state) {
        DecoderTables tables = build_tables(cfg, LocatorSet::Flavor::stuffed, false);
        benchmark::DoNotOptimize(tables);
    }
}
BENCHMARK(BM_BuildHermitianTables)->Unit(benchmark::kMillisecond)->Iterations(1);

} // namespace

BENCHMARK_MAIN();
