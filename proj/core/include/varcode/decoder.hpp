#ifndef VARCODE_DECODER_HPP
#define VARCODE_DECODER_HPP

#include "varcode/config.hpp"

namespace varcode {

/// Precomputed decoding data for one code: the locator set (weak or
/// stuffed), the optional evaluator, the ghost point, and build metadata.
/// The embedded config rebuilds the code on load.
struct DecoderTables {
    CodeConfig config;
    std::shared_ptr<const AffineVarietyCode> code;
    std::optional<std::vector<unsigned>> ghost; // code coordinate order
    std::vector<std::size_t> coordinate_order;
    LocatorSet locators;
    std::optional<EvaluatorPoly> evaluator;

    struct BuildInfo {
        double gb_seconds = 0;
        double stuff_seconds = 0;
        double evaluator_seconds = 0;
        unsigned stuff_steps = 0;
    } info;

    DecodingIdealSpec spec() const;
};

/// Computes tables from a config: locator-order Groebner basis, weak
/// extraction or the stuffing pipeline, and optionally the evaluator from a
/// second basis under the evaluator order.
DecoderTables build_tables(const CodeConfig& cfg, LocatorSet::Flavor flavor,
                           bool with_evaluator);

struct DecodeResult {
    enum class Status { corrected, no_error, not_correctable, ambiguous };
    Status status = Status::not_correctable;
    ErrorPattern pattern;            // set when corrected (or no_error: empty)
    std::vector<std::string> trace;  // per-variable candidate root sets
};

DecodeResult decode(const DecoderTables& tables, const Syndrome& s);
DecodeResult decode_word(const DecoderTables& tables, const std::vector<unsigned>& word);

/// mu = t - (multiplicity of 0 in E(s, e)); second member lists the nonzero
/// roots with multiplicity (the error values). Throws EvaluatorMissingError
/// when the tables carry no evaluator.
std::pair<unsigned, std::vector<unsigned>> predict_weight(const DecoderTables& tables,
                                                          const Syndrome& s);

struct VerifyReport {
    std::size_t total = 0;
    std::size_t exact = 0;
    std::size_t mismatch = 0;
    std::size_t ambiguous = 0;
    std::size_t not_correctable = 0;
    std::size_t oracle_mismatch = 0;
    double seconds = 0;

    bool all_exact() const { return exact == total && oracle_mismatch == 0; }
};

/// Decodes the syndrome of every correctable pattern and compares the result
/// with the pattern (and optionally with the brute-force oracle). Syndromes
/// are distributed across `jobs` worker threads (0 = hardware concurrency).
VerifyReport verify_exhaustive(const DecoderTables& tables, bool compare_oracle = false,
                               unsigned jobs = 0);

std::string serialize_tables(const DecoderTables& tables);
DecoderTables parse_tables(const std::string& text);
DecoderTables load_tables(const std::string& path);

} // namespace varcode

#endif
