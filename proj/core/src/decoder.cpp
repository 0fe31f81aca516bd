#include "varcode/decoder.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace varcode {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Solves sum_j e_j H[.][pos_j] = s over GF(q). Returns the unique solution
// with every entry nonzero, or nullopt (inconsistent, underdetermined, or a
// zero value).
std::optional<std::vector<unsigned>> solve_values(const AffineVarietyCode& code,
                                                  const std::vector<std::size_t>& positions,
                                                  const Syndrome& s) {
    const auto& f = *code.field;
    const std::size_t rows = code.r(), cols = positions.size();
    if (cols == 0) {
        for (unsigned v : s)
            if (v) return std::nullopt;
        return std::vector<unsigned>{};
    }
    std::vector<std::vector<unsigned>> m(rows, std::vector<unsigned>(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = code.H[i][positions[j]];
        m[i][cols] = s[i];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[rank], m[pr]);
        unsigned inv = f.inv(m[rank][c]);
        for (auto& x : m[rank]) x = f.mul(x, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            unsigned factor = m[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt; // inconsistent
    if (rank < cols) return std::nullopt;          // not unique
    std::vector<unsigned> e(cols, 0);
    for (std::size_t i = 0; i < rank; ++i) e[pivot_col[i]] = m[i][cols];
    for (unsigned v : e)
        if (v == 0) return std::nullopt;
    return e;
}

std::optional<std::size_t> position_of(const AffineVarietyCode& code,
                                       const std::vector<unsigned>& point) {
    for (std::size_t i = 0; i < code.n(); ++i)
        if (code.points.points[i] == point) return i;
    return std::nullopt;
}

} // namespace

DecodingIdealSpec DecoderTables::spec() const {
    return DecodingIdealSpec::make(*code, IdealVariant::STAR, ghost, coordinate_order);
}

DecoderTables build_tables(const CodeConfig& cfg, LocatorSet::Flavor flavor, bool with_evaluator) {
    DecoderTables tables;
    tables.config = cfg;
    CodeSetup setup = build_setup(cfg);
    tables.code = setup.code;
    tables.coordinate_order = setup.coordinate_order;

    DecodingIdealSpec spec =
        DecodingIdealSpec::make(*tables.code, IdealVariant::STAR, setup.ghost,
                                setup.coordinate_order);
    tables.ghost = spec.ghost;
    tables.coordinate_order = spec.coordinate_order;

    auto t0 = Clock::now();
    GroebnerBasis gb = decoding_basis(spec);
    tables.info.gb_seconds = seconds_since(t0);

    if (flavor == LocatorSet::Flavor::weak) {
        tables.locators = extract_weak_locators(spec, gb);
    } else {
        t0 = Clock::now();
        StuffedIdeal stuffed = stuff_ideal(spec, gb);
        tables.info.stuff_seconds = seconds_since(t0);
        tables.info.stuff_steps = stuffed.stuff_steps;
        tables.locators = extract_locators(spec, stuffed);
    }

    if (with_evaluator) {
        t0 = Clock::now();
        GroebnerBasis egb = decoding_basis(spec, spec.evaluator_ring);
        tables.evaluator = extract_evaluator(spec, egb);
        tables.info.evaluator_seconds = seconds_since(t0);
    }
    return tables;
}

DecodeResult decode(const DecoderTables& tables, const Syndrome& s) {
    const AffineVarietyCode& code = *tables.code;
    const auto& f = *code.field;
    if (s.size() != code.r()) throw LengthMismatchError("syndrome length differs from r");

    DecodeResult res;
    if (std::all_of(s.begin(), s.end(), [](unsigned v) { return v == 0; })) {
        res.status = DecodeResult::Status::no_error;
        return res;
    }

    const std::size_t m = code.m();
    const RingPtr& lring = tables.locators.ring;
    // candidate tuples in locator coordinate order
    std::vector<std::vector<unsigned>> prefixes(1);
    std::vector<unsigned> point(lring->nvars(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const SparsePoly& L = tables.locators.locs[i];
        const std::size_t var = code.r() + i;
        std::vector<std::vector<unsigned>> next;
        for (const auto& pre : prefixes) {
            std::fill(point.begin(), point.end(), 0);
            std::copy(s.begin(), s.end(), point.begin());
            std::vector<std::pair<std::size_t, unsigned>> assign;
            for (std::size_t rho = 0; rho < code.r(); ++rho) assign.emplace_back(rho, s[rho]);
            for (std::size_t j = 0; j < i; ++j) assign.emplace_back(code.r() + j, pre[j]);
            SparsePoly spec_poly = specialize(L, assign);
            if (spec_poly.is_zero()) {
                res.trace.push_back("level " + std::to_string(i + 1) +
                                    ": locator vanished identically");
                res.status = DecodeResult::Status::not_correctable;
                return res;
            }
            auto roots = roots_univariate(spec_poly, var);
            std::string tr = "level " + std::to_string(i + 1) + " roots:";
            for (const auto& [root, mult] : roots) {
                tr += " " + format_element(root);
                if (mult > 1) tr += "(x" + std::to_string(mult) + ")";
                auto ext = pre;
                ext.push_back(root.value());
                next.push_back(std::move(ext));
            }
            res.trace.push_back(std::move(tr));
        }
        prefixes = std::move(next);
    }

    // map locator-order tuples back to code coordinates
    auto to_code_point = [&](const std::vector<unsigned>& tuple) {
        std::vector<unsigned> p(m, 0);
        for (std::size_t i = 0; i < m; ++i) p[tables.coordinate_order[i]] = tuple[i];
        return p;
    };

    if (tables.locators.flavor == LocatorSet::Flavor::stuffed) {
        std::vector<std::size_t> positions;
        for (const auto& tuple : prefixes) {
            std::vector<unsigned> p = to_code_point(tuple);
            if (tables.ghost && p == *tables.ghost) continue;
            auto pos = position_of(code, p);
            if (!pos) {
                res.status = DecodeResult::Status::not_correctable;
                return res;
            }
            if (std::find(positions.begin(), positions.end(), *pos) == positions.end())
                positions.push_back(*pos);
        }
        std::sort(positions.begin(), positions.end());
        auto values = solve_values(code, positions, s);
        if (!values) {
            res.status = DecodeResult::Status::not_correctable;
            return res;
        }
        ErrorPattern e;
        for (std::size_t j = 0; j < positions.size(); ++j)
            e.entries.emplace_back(positions[j] + 1, (*values)[j]);
        if (!(syndrome_of_pattern(code, e) == s)) {
            res.status = DecodeResult::Status::not_correctable;
            return res;
        }
        res.status = DecodeResult::Status::corrected;
        res.pattern = std::move(e);
        return res;
    }

    // weak flavor: keep variety candidates, then try location subsets
    std::vector<std::size_t> candidates;
    for (const auto& tuple : prefixes) {
        std::vector<unsigned> p = to_code_point(tuple);
        auto pos = position_of(code, p);
        if (pos && std::find(candidates.begin(), candidates.end(), *pos) == candidates.end())
            candidates.push_back(*pos);
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<ErrorPattern> solutions;
    std::vector<std::size_t> subset;
    std::function<void(std::size_t, std::size_t)> try_subsets = [&](std::size_t start,
                                                                    std::size_t want) {
        if (subset.size() == want) {
            auto values = solve_values(code, subset, s);
            if (values) {
                ErrorPattern e;
                for (std::size_t j = 0; j < subset.size(); ++j)
                    e.entries.emplace_back(subset[j] + 1, (*values)[j]);
                if (syndrome_of_pattern(code, e) == s &&
                    std::find(solutions.begin(), solutions.end(), e) == solutions.end())
                    solutions.push_back(std::move(e));
            }
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            subset.push_back(candidates[i]);
            try_subsets(i + 1, want);
            subset.pop_back();
        }
    };
    for (std::size_t w = 1; w <= code.t && solutions.size() < 2; ++w) try_subsets(0, w);

    if (solutions.empty()) {
        res.status = DecodeResult::Status::not_correctable;
    } else if (solutions.size() == 1) {
        res.status = DecodeResult::Status::corrected;
        res.pattern = solutions.front();
    } else {
        res.status = DecodeResult::Status::ambiguous;
        res.trace.push_back("ambiguous: " + std::to_string(solutions.size()) +
                            " consistent error vectors");
    }
    (void)f;
    return res;
}

DecodeResult decode_word(const DecoderTables& tables, const std::vector<unsigned>& word) {
    return decode(tables, syndrome(*tables.code, word));
}

std::pair<unsigned, std::vector<unsigned>> predict_weight(const DecoderTables& tables,
                                                          const Syndrome& s) {
    if (!tables.evaluator) throw EvaluatorMissingError("tables carry no evaluator");
    const EvaluatorPoly& E = *tables.evaluator;
    const std::size_t evar = E.ring->nvars() - 1;
    std::vector<std::pair<std::size_t, unsigned>> assign;
    for (std::size_t rho = 0; rho < s.size(); ++rho) assign.emplace_back(rho, s[rho]);
    SparsePoly spec_poly = specialize(E.poly, assign);
    if (spec_poly.is_zero()) throw EvaluatorMissingError("evaluator vanished identically");
    unsigned zero_mult = multiplicity_at_value(spec_poly, evar, 0);
    unsigned mu = tables.code->t - zero_mult;
    std::vector<unsigned> values;
    for (const auto& [root, mult] : roots_univariate(spec_poly, evar))
        if (!root.is_zero())
            for (unsigned i = 0; i < mult; ++i) values.push_back(root.value());
    return {mu, values};
}

VerifyReport verify_exhaustive(const DecoderTables& tables, bool compare_oracle, unsigned jobs) {
    const AffineVarietyCode& code = *tables.code;
    auto t0 = Clock::now();

    std::vector<ErrorPattern> patterns;
    for_each_correctable_pattern(code, [&](const ErrorPattern& e) {
        patterns.push_back(e);
        return true;
    });

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(patterns.size()));

    std::vector<VerifyReport> partial(jobs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](unsigned w) {
        VerifyReport& rep = partial[w];
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= patterns.size()) break;
            const ErrorPattern& e = patterns[i];
            Syndrome s = syndrome_of_pattern(code, e);
            DecodeResult r = decode(tables, s);
            ++rep.total;
            bool exact = false;
            if (e.weight() == 0) {
                exact = r.status == DecodeResult::Status::no_error;
            } else {
                exact = r.status == DecodeResult::Status::corrected && r.pattern == e;
            }
            if (exact)
                ++rep.exact;
            else if (r.status == DecodeResult::Status::ambiguous)
                ++rep.ambiguous;
            else if (r.status == DecodeResult::Status::not_correctable)
                ++rep.not_correctable;
            else
                ++rep.mismatch;
            if (compare_oracle) {
                ErrorPattern o = oracle_decode(code, s);
                if (!(o == e)) ++rep.oracle_mismatch;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();

    VerifyReport rep;
    for (const auto& p : partial) {
        rep.total += p.total;
        rep.exact += p.exact;
        rep.mismatch += p.mismatch;
        rep.ambiguous += p.ambiguous;
        rep.not_correctable += p.not_correctable;
        rep.oracle_mismatch += p.oracle_mismatch;
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

namespace {

std::string strip_spaces(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

} // namespace

std::string serialize_tables(const DecoderTables& tables) {
    const auto& f = *tables.code->field;
    std::string out = tables.config.serialize();
    out += "[tables] flavor=";
    out += tables.locators.flavor == LocatorSet::Flavor::stuffed ? "stuffed" : "weak";
    if (tables.ghost) out += " ghost=" + format_point(*tables.ghost, f);
    out += " coordinate_order=";
    for (std::size_t i = 0; i < tables.coordinate_order.size(); ++i)
        out += (i ? "," : "") +
               tables.code->point_ring->vars().names[tables.coordinate_order[i]];
    out += "\n";
    for (std::size_t i = 0; i < tables.locators.locs.size(); ++i)
        out += "[locator] i=" + std::to_string(i + 1) +
               " poly=" + strip_spaces(format_poly(tables.locators.locs[i])) + "\n";
    if (tables.evaluator)
        out += "[evaluator] poly=" + strip_spaces(format_poly(tables.evaluator->poly)) + "\n";
    return out;
}

DecoderTables parse_tables(const std::string& text) {
    DecoderTables tables;
    tables.config = CodeConfig::parse(text);
    CodeSetup setup = build_setup(tables.config);
    tables.code = setup.code;

    // re-scan the tables sections
    std::istringstream in(text);
    std::string line;
    std::string flavor;
    std::vector<std::pair<unsigned, std::string>> locator_texts;
    std::string evaluator_text;
    std::optional<std::string> ghost_text;
    std::string coord_text;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        auto grab = [&](const std::string& key, std::string& dst) {
            std::string tok;
            std::istringstream rs(line);
            while (rs >> tok) {
                if (tok.rfind(key + "=", 0) == 0) dst = tok.substr(key.size() + 1);
            }
        };
        if (head == "[tables]") {
            grab("flavor", flavor);
            std::string g;
            grab("ghost", g);
            if (!g.empty()) ghost_text = g;
            grab("coordinate_order", coord_text);
        } else if (head == "[locator]") {
            std::string idx, poly;
            grab("i", idx);
            grab("poly", poly);
            locator_texts.emplace_back(idx.empty() ? 0 : std::stoul(idx), poly);
        } else if (head == "[evaluator]") {
            grab("poly", evaluator_text);
        }
    }
    if (flavor.empty()) throw ConfigError("tables file lacks a [tables] section");

    if (ghost_text) tables.ghost = parse_point(*ghost_text, *tables.code->field);
    if (!coord_text.empty()) {
        for (const auto& name : [&] {
                 std::vector<std::string> names;
                 std::string cur;
                 for (char c : coord_text) {
                     if (c == ',') {
                         names.push_back(cur);
                         cur.clear();
                     } else
                         cur += c;
                 }
                 names.push_back(cur);
                 return names;
             }()) {
            auto idx = tables.code->point_ring->vars().index_of(name);
            if (!idx) throw ConfigError("tables coordinate_order names unknown variable");
            tables.coordinate_order.push_back(*idx);
        }
    } else {
        for (std::size_t i = 0; i < tables.code->m(); ++i) tables.coordinate_order.push_back(i);
    }

    std::vector<std::string> names;
    for (std::size_t rho = 1; rho <= tables.code->r(); ++rho)
        names.push_back("s" + std::to_string(rho));
    for (std::size_t i = 0; i < tables.code->m(); ++i)
        names.push_back(tables.code->point_ring->vars().names[tables.coordinate_order[i]]);
    tables.locators.ring = PolyRing::make(tables.code->field, VarSet::flat(names));
    tables.locators.flavor =
        flavor == "stuffed" ? LocatorSet::Flavor::stuffed : LocatorSet::Flavor::weak;

    std::sort(locator_texts.begin(), locator_texts.end());
    for (const auto& [idx, poly] : locator_texts) {
        SparsePoly L = parse_poly(poly, tables.locators.ring);
        tables.locators.locs.push_back(L);
        tables.locators.degrees.push_back(
            L.degree_in(tables.code->r() + tables.locators.locs.size() - 1));
    }
    if (tables.locators.locs.size() != tables.code->m())
        throw ConfigError("tables file carries the wrong number of locators");

    if (!evaluator_text.empty()) {
        std::vector<std::string> enames;
        for (std::size_t rho = 1; rho <= tables.code->r(); ++rho)
            enames.push_back("s" + std::to_string(rho));
        enames.push_back("e");
        EvaluatorPoly E;
        E.ring = PolyRing::make(tables.code->field, VarSet::flat(enames));
        E.poly = parse_poly(evaluator_text, E.ring);
        tables.evaluator = std::move(E);
    }
    return tables;
}

DecoderTables load_tables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open tables file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tables(ss.str());
}

} // namespace varcode
