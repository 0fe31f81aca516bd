#ifndef VARCODE_CONFIG_HPP
#define VARCODE_CONFIG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "varcode/decoding.hpp"

namespace varcode {

/// Line-oriented code definition:
///   [field] p=<uint> k=<uint> primitive=<c0,c1,...,ck>
///   [ring] vars=<comma list>
///   [variety] gen=<poly>   (repeatable)
///   [code] L=<poly>        (repeatable, in syndrome order) ; t=<uint>
///   [decoder] ghost=<(e,...,e)> (optional) ; coordinate_order=<comma list>
/// Values contain no whitespace; '#' starts a comment line.
struct CodeConfig {
    unsigned p = 0, k = 0;
    std::vector<unsigned> primitive;
    std::vector<std::string> ring_vars;
    std::vector<std::string> variety_gens;
    std::vector<std::string> basis_L;
    unsigned t = 0;
    std::optional<std::string> ghost;
    std::vector<std::string> coordinate_order;

    static CodeConfig parse(const std::string& text);
    static CodeConfig load(const std::string& path);
    std::string serialize() const;
};

/// Materialized code plus decoding parameters.
struct CodeSetup {
    Field field;
    std::shared_ptr<const AffineVarietyCode> code;
    std::optional<std::vector<unsigned>> ghost;
    std::vector<std::size_t> coordinate_order;
};

CodeSetup build_setup(const CodeConfig& cfg);

/// Comma-separated element literals -> packed values.
std::vector<unsigned> parse_element_list(const std::string& text, const FieldSpec& spec);
std::string format_element_list(const std::vector<unsigned>& values, const FieldSpec& spec);

/// "(a,b,...)" -> packed values.
std::vector<unsigned> parse_point(const std::string& text, const FieldSpec& spec);
std::string format_point(const std::vector<unsigned>& values, const FieldSpec& spec);

} // namespace varcode

#endif
