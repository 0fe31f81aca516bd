#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "varcode/decoder.hpp"

using namespace varcode;

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const ParseError*>(&e)) return 2;
    return 3;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write '" + path + "'");
    out << text;
}

DecoderTables build_from(const std::string& config_path, const std::string& flavor,
                         bool evaluator, const std::string& coord_order) {
    CodeConfig cfg = CodeConfig::load(config_path);
    if (!coord_order.empty()) {
        cfg.coordinate_order.clear();
        std::string cur;
        for (char c : coord_order + ",") {
            if (c == ',') {
                if (!cur.empty()) cfg.coordinate_order.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
    }
    auto fl = flavor == "weak" ? LocatorSet::Flavor::weak : LocatorSet::Flavor::stuffed;
    return build_tables(cfg, fl, evaluator);
}

void print_result(const DecoderTables& tables, const DecodeResult& r, bool with_trace) {
    const auto& f = *tables.code->field;
    switch (r.status) {
        case DecodeResult::Status::no_error:
            std::cout << "status: no_error\n";
            break;
        case DecodeResult::Status::corrected: {
            std::cout << "status: corrected\nweight: " << r.pattern.weight() << "\n";
            for (const auto& [pos, val] : r.pattern.entries) {
                std::cout << "error: position=" << pos << " point="
                          << format_point(tables.code->points.points[pos - 1], f)
                          << " value=" << format_element_value(val, f) << "\n";
            }
            break;
        }
        case DecodeResult::Status::not_correctable:
            std::cout << "status: not_correctable\n";
            break;
        case DecodeResult::Status::ambiguous:
            std::cout << "status: ambiguous\n";
            break;
    }
    if (with_trace)
        for (const auto& t : r.trace) std::cout << "trace: " << t << "\n";
}

int run_verify(const DecoderTables& tables, bool oracle, unsigned jobs) {
    VerifyReport rep = verify_exhaustive(tables, oracle, jobs);
    std::cout << rep.exact << "/" << rep.total << " ok";
    if (rep.ambiguous) std::cout << ", " << rep.ambiguous << " ambiguous";
    if (rep.mismatch) std::cout << ", " << rep.mismatch << " wrong";
    if (rep.not_correctable) std::cout << ", " << rep.not_correctable << " undecodable";
    if (oracle) std::cout << ", oracle mismatches: " << rep.oracle_mismatch;
    std::cout << " (" << rep.seconds << " s)\n";
    return rep.all_exact() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine-variety code decoder toolkit"};
    app.require_subcommand(1);

    std::string config_path, tables_path, out_path, flavor = "stuffed", coord_order;
    std::string syndrome_text, word_text;
    bool with_evaluator = false, with_trace = false, with_oracle = false;
    unsigned jobs = 0;

    auto* build = app.add_subcommand("build", "compute decoder tables from a code config");
    build->add_option("--config", config_path, "code definition file")->required();
    build->add_option("--out", out_path, "output tables file")->required();
    build->add_option("--flavor", flavor, "weak|stuffed")->check(CLI::IsMember({"weak", "stuffed"}));
    build->add_flag("--evaluator", with_evaluator, "also compute the error evaluator");
    build->add_option("--coordinate-order", coord_order, "comma list of coordinate names");

    auto* decode_cmd = app.add_subcommand("decode", "decode a syndrome or received word");
    decode_cmd->add_option("--tables", tables_path, "tables file")->required();
    decode_cmd->add_option("--syndrome", syndrome_text, "comma-separated element literals");
    decode_cmd->add_option("--word", word_text, "comma-separated element literals");
    decode_cmd->add_flag("--trace", with_trace, "print per-variable candidate roots");

    auto* verify = app.add_subcommand("verify", "exhaustively verify all correctable patterns");
    verify->add_option("--tables", tables_path, "tables file")->required();
    verify->add_flag("--oracle", with_oracle, "also compare with the brute-force oracle");
    verify->add_option("--jobs", jobs, "worker threads (default: hardware)");

    auto* analyze = app.add_subcommand("analyze", "stratification report for a code's ideal");
    analyze->add_option("--config", config_path, "code definition file")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "build tables, verify, print a summary");
    roundtrip->add_option("--config", config_path, "code definition file")->required();
    roundtrip->add_option("--flavor", flavor, "weak|stuffed")
        ->check(CLI::IsMember({"weak", "stuffed"}));
    roundtrip->add_flag("--evaluator", with_evaluator, "also compute the error evaluator");
    roundtrip->add_option("--coordinate-order", coord_order, "comma list of coordinate names");
    roundtrip->add_option("--jobs", jobs, "worker threads (default: hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            DecoderTables tables = build_from(config_path, flavor, with_evaluator, coord_order);
            write_file(out_path, serialize_tables(tables));
            std::cout << "tables written to " << out_path << " (GB " << tables.info.gb_seconds
                      << " s, stuffing " << tables.info.stuff_seconds << " s, "
                      << tables.info.stuff_steps << " stuffing steps)\n";
            return 0;
        }
        if (decode_cmd->parsed()) {
            DecoderTables tables = load_tables(tables_path);
            const auto& f = *tables.code->field;
            DecodeResult r;
            if (!syndrome_text.empty()) {
                r = decode(tables, parse_element_list(syndrome_text, f));
            } else if (!word_text.empty()) {
                r = decode_word(tables, parse_element_list(word_text, f));
            } else {
                std::cerr << "decode needs --syndrome or --word\n";
                return 2;
            }
            print_result(tables, r, with_trace);
            if (tables.evaluator && !syndrome_text.empty()) {
                auto [mu, values] = predict_weight(tables, parse_element_list(syndrome_text, f));
                std::cout << "evaluator: mu=" << mu << " values="
                          << format_element_list(values, f) << "\n";
            }
            return r.status == DecodeResult::Status::not_correctable ? 1 : 0;
        }
        if (verify->parsed()) {
            DecoderTables tables = load_tables(tables_path);
            return run_verify(tables, with_oracle, jobs);
        }
        if (analyze->parsed()) {
            CodeConfig cfg = CodeConfig::load(config_path);
            CodeSetup setup = build_setup(cfg);
            DecodingIdealSpec spec = DecodingIdealSpec::make(*setup.code, IdealVariant::STAR,
                                                             setup.ghost, setup.coordinate_order);
            GroebnerBasis gb = decoding_basis(spec);
            StratificationReport rep = analyze_stratification(spec, gb);
            std::cout << "basis elements: " << gb.elems.size() << "\n";
            for (const auto& s : rep.slots) {
                std::cout << "slot (block " << s.block << ", var " << s.index
                          << "): eta=" << s.eta << " zeta=" << s.zeta << " sigma=[";
                for (std::size_t l = 0; l < s.sigma_sizes.size(); ++l)
                    std::cout << (l ? "," : "") << s.sigma_sizes[l];
                std::cout << "] pure_power_top=" << (s.top_pure_power_unique ? "yes" : "no")
                          << "\n";
            }
            std::cout << "weakly stratified: " << (rep.weakly_stratified ? "yes" : "no") << "\n";
            std::cout << "multi-stratified: " << (rep.multi_stratified ? "yes" : "no") << "\n";
            std::cout << "strongly multi-stratified: "
                      << (rep.strongly_multi_stratified ? "yes" : "no") << "\n";
            std::cout << "zeta=eta with pure-power tops: " << (rep.gb_structure_ok ? "yes" : "no")
                      << "\n";
            return 0;
        }
        if (roundtrip->parsed()) {
            DecoderTables tables = build_from(config_path, flavor, with_evaluator, coord_order);
            std::cout << "built " << (tables.locators.flavor == LocatorSet::Flavor::stuffed
                                          ? "stuffed"
                                          : "weak")
                      << " tables (GB " << tables.info.gb_seconds << " s, stuffing "
                      << tables.info.stuff_seconds << " s)\n";
            return run_verify(tables, with_oracle, jobs);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
