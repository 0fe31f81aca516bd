#include "varcode/config.hpp"

#include <fstream>
#include <sstream>

namespace varcode {
namespace {

struct Line {
    std::string section;
    std::vector<std::pair<std::string, std::string>> pairs;
};

std::vector<Line> parse_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::size_t i = 0;
        auto skip = [&] { while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i; };
        skip();
        if (i >= raw.size() || raw[i] == '#') continue;
        if (raw[i] != '[') throw ConfigError("line " + std::to_string(lineno) + ": expected [section]");
        std::size_t close = raw.find(']', i);
        if (close == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": unterminated [section]");
        Line line;
        line.section = raw.substr(i + 1, close - i - 1);
        i = close + 1;
        while (true) {
            skip();
            while (i < raw.size() && raw[i] == ';') {
                ++i;
                skip();
            }
            if (i >= raw.size() || raw[i] == '#') break;
            std::size_t eq = raw.find('=', i);
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
            std::string key = raw.substr(i, eq - i);
            i = eq + 1;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != ';') ++i;
            line.pairs.emplace_back(key, raw.substr(start, i - start));
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

unsigned to_uint(const std::string& s) {
    if (s.empty()) throw ConfigError("expected an unsigned integer");
    unsigned long long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ConfigError("expected an unsigned integer, got '" + s + "'");
        v = v * 10 + (c - '0');
    }
    return static_cast<unsigned>(v);
}

} // namespace

CodeConfig CodeConfig::parse(const std::string& text) {
    CodeConfig cfg;
    for (const Line& line : parse_lines(text)) {
        for (const auto& [key, value] : line.pairs) {
            if (line.section == "field") {
                if (key == "p")
                    cfg.p = to_uint(value);
                else if (key == "k")
                    cfg.k = to_uint(value);
                else if (key == "primitive") {
                    for (const auto& c : split_commas(value)) cfg.primitive.push_back(to_uint(c));
                } else
                    throw ConfigError("unknown [field] key '" + key + "'");
            } else if (line.section == "ring") {
                if (key == "vars")
                    cfg.ring_vars = split_commas(value);
                else
                    throw ConfigError("unknown [ring] key '" + key + "'");
            } else if (line.section == "variety") {
                if (key == "gen")
                    cfg.variety_gens.push_back(value);
                else
                    throw ConfigError("unknown [variety] key '" + key + "'");
            } else if (line.section == "code") {
                if (key == "L")
                    cfg.basis_L.push_back(value);
                else if (key == "t")
                    cfg.t = to_uint(value);
                else
                    throw ConfigError("unknown [code] key '" + key + "'");
            } else if (line.section == "decoder") {
                if (key == "ghost")
                    cfg.ghost = value;
                else if (key == "coordinate_order")
                    cfg.coordinate_order = split_commas(value);
                else
                    throw ConfigError("unknown [decoder] key '" + key + "'");
            } else if (line.section == "tables" || line.section == "locator" ||
                       line.section == "evaluator") {
                // decoder-tables sections, handled by parse_tables
            } else {
                throw ConfigError("unknown section [" + line.section + "]");
            }
        }
    }
    if (cfg.p == 0 || cfg.k == 0) throw ConfigError("missing [field] p= or k=");
    if (cfg.ring_vars.empty()) throw ConfigError("missing [ring] vars=");
    if (cfg.basis_L.empty()) throw ConfigError("missing [code] L= entries");
    return cfg;
}

CodeConfig CodeConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string CodeConfig::serialize() const {
    std::string out;
    out += "[field] p=" + std::to_string(p) + " k=" + std::to_string(k) + " primitive=";
    for (std::size_t i = 0; i < primitive.size(); ++i)
        out += (i ? "," : "") + std::to_string(primitive[i]);
    out += "\n[ring] vars=";
    for (std::size_t i = 0; i < ring_vars.size(); ++i) out += (i ? "," : "") + ring_vars[i];
    out += "\n";
    for (const auto& g : variety_gens) out += "[variety] gen=" + g + "\n";
    for (const auto& b : basis_L) out += "[code] L=" + b + "\n";
    out += "[code] t=" + std::to_string(t) + "\n";
    if (ghost || !coordinate_order.empty()) {
        out += "[decoder]";
        if (ghost) out += " ghost=" + *ghost;
        if (!coordinate_order.empty()) {
            out += " coordinate_order=";
            for (std::size_t i = 0; i < coordinate_order.size(); ++i)
                out += (i ? "," : "") + coordinate_order[i];
        }
        out += "\n";
    }
    return out;
}

std::vector<unsigned> parse_element_list(const std::string& text, const FieldSpec& spec) {
    std::vector<unsigned> out;
    for (const auto& tok : split_commas(text)) out.push_back(parse_element_value(tok, spec));
    return out;
}

std::string format_element_list(const std::vector<unsigned>& values, const FieldSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? "," : "") + format_element_value(values[i], spec);
    return out;
}

std::vector<unsigned> parse_point(const std::string& text, const FieldSpec& spec) {
    std::string t = text;
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
    return parse_element_list(t, spec);
}

std::string format_point(const std::vector<unsigned>& values, const FieldSpec& spec) {
    return "(" + format_element_list(values, spec) + ")";
}

CodeSetup build_setup(const CodeConfig& cfg) {
    CodeSetup setup;
    setup.field = FieldSpec::make(cfg.p, cfg.k, cfg.primitive);
    RingPtr point_ring = PolyRing::make(setup.field, VarSet::flat(cfg.ring_vars));

    std::vector<SparsePoly> gens;
    for (const auto& g : cfg.variety_gens) gens.push_back(parse_poly(g, point_ring));
    std::vector<SparsePoly> basis;
    for (const auto& b : cfg.basis_L) basis.push_back(parse_poly(b, point_ring));

    setup.code = std::make_shared<const AffineVarietyCode>(
        AffineVarietyCode::make(setup.field, point_ring, std::move(gens), std::move(basis), cfg.t));

    if (cfg.ghost) setup.ghost = parse_point(*cfg.ghost, *setup.field);
    for (const auto& name : cfg.coordinate_order) {
        auto idx = point_ring->vars().index_of(name);
        if (!idx) throw ConfigError("coordinate_order names unknown variable '" + name + "'");
        setup.coordinate_order.push_back(*idx);
    }
    return setup;
}

} // namespace varcode
