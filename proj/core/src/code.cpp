#include "varcode/code.hpp"

#include <algorithm>

namespace varcode {
namespace {

// Gaussian elimination rank over GF(q) on a copy of the matrix.
std::size_t rank_of(std::vector<std::vector<unsigned>> m, const FieldSpec& f) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        unsigned inv = f.inv(m[rank][c]);
        for (std::size_t j = 0; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            unsigned factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

PointSet enumerate_variety(const std::vector<SparsePoly>& gens, const RingPtr& ring) {
    const auto& f = *ring->field();
    const std::size_t m = ring->nvars();
    PointSet out{ring, {}};
    std::vector<unsigned> idx(m, 0), point(m, 0);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) point[i] = f.from_canonical_index(idx[i]);
        bool on = true;
        for (const auto& g : gens)
            if (evaluate(g, point).value() != 0) {
                on = false;
                break;
            }
        if (on) out.points.push_back(point);
        // advance: last coordinate fastest
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++idx[i] < f.q()) break;
            idx[i] = 0;
            if (i == 0) {
                if (out.points.empty()) throw EmptyVarietyError("variety has no points");
                return out;
            }
        }
    }
}

std::vector<unsigned> ErrorPattern::to_word(std::size_t n) const {
    std::vector<unsigned> w(n, 0);
    for (const auto& [pos, val] : entries) w[pos - 1] = val;
    return w;
}

AffineVarietyCode AffineVarietyCode::make(Field field, RingPtr point_ring,
                                          std::vector<SparsePoly> variety_gens,
                                          std::vector<SparsePoly> basis_L, unsigned t,
                                          std::optional<PointSet> points) {
    AffineVarietyCode code;
    code.field = std::move(field);
    code.point_ring = std::move(point_ring);
    code.t = t;

    // adjoin the field equations x_i^q - x_i
    code.ideal_gens = std::move(variety_gens);
    code.n_user_gens = code.ideal_gens.size();
    for (std::size_t i = 0; i < code.point_ring->nvars(); ++i) {
        SparsePoly fe = SparsePoly::variable(code.point_ring, i, code.field->q()) -
                        SparsePoly::variable(code.point_ring, i);
        code.ideal_gens.push_back(std::move(fe));
    }
    code.basis_L = std::move(basis_L);

    PointSet scanned = enumerate_variety(code.ideal_gens, code.point_ring);
    if (points) {
        // a pinned point order must list exactly the scanned variety
        if (points->points.size() != scanned.points.size())
            throw Error("pinned point list does not match the variety");
        for (const auto& p : points->points)
            if (!scanned.contains(p)) throw Error("pinned point is not on the variety");
        code.points = std::move(*points);
    } else {
        code.points = std::move(scanned);
    }

    code.H.assign(code.r(), std::vector<unsigned>(code.n(), 0));
    for (std::size_t rho = 0; rho < code.r(); ++rho)
        for (std::size_t sigma = 0; sigma < code.n(); ++sigma)
            code.H[rho][sigma] = evaluate(code.basis_L[rho], code.points.points[sigma]).value();

    if (rank_of(code.H, *code.field) != code.r())
        throw Error("function space basis is linearly dependent on the variety");
    return code;
}

bool AffineVarietyCode::on_variety(const std::vector<unsigned>& p) const {
    for (const auto& g : ideal_gens)
        if (evaluate(g, p).value() != 0) return false;
    return true;
}

Syndrome syndrome(const AffineVarietyCode& code, const std::vector<unsigned>& word) {
    if (word.size() != code.n()) throw LengthMismatchError("word length differs from n");
    const auto& f = *code.field;
    Syndrome s(code.r(), 0);
    for (std::size_t rho = 0; rho < code.r(); ++rho) {
        unsigned acc = 0;
        for (std::size_t sigma = 0; sigma < code.n(); ++sigma)
            if (word[sigma]) acc = f.add(acc, f.mul(code.H[rho][sigma], word[sigma]));
        s[rho] = acc;
    }
    return s;
}

Syndrome syndrome_of_pattern(const AffineVarietyCode& code, const ErrorPattern& e) {
    const auto& f = *code.field;
    Syndrome s(code.r(), 0);
    for (const auto& [pos, val] : e.entries)
        for (std::size_t rho = 0; rho < code.r(); ++rho)
            s[rho] = f.add(s[rho], f.mul(code.H[rho][pos - 1], val));
    return s;
}

std::size_t for_each_correctable_pattern(const AffineVarietyCode& code,
                                         const std::function<bool(const ErrorPattern&)>& visit) {
    const auto& f = *code.field;
    const std::size_t n = code.n();
    std::size_t visited = 0;

    ErrorPattern zero;
    ++visited;
    if (!visit(zero)) return visited;

    // positions ascending; values iterate over nonzero elements in canonical
    // order (1, g, g^2, ...)
    std::vector<std::size_t> pos;
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t weight,
                                                            std::size_t start) -> bool {
        for (std::size_t p = start; p < n; ++p) {
            pos.push_back(p + 1);
            if (pos.size() == weight) {
                std::vector<unsigned> vidx(weight, 1);
                while (true) {
                    ErrorPattern e;
                    for (std::size_t i = 0; i < weight; ++i)
                        e.entries.emplace_back(pos[i], f.from_canonical_index(vidx[i]));
                    ++visited;
                    if (!visit(e)) return false;
                    std::size_t i = weight;
                    bool carried = false;
                    while (i > 0) {
                        --i;
                        if (++vidx[i] < f.q()) {
                            carried = true;
                            break;
                        }
                        vidx[i] = 1;
                    }
                    if (!carried) break;
                }
            } else if (!rec(weight, p + 1)) {
                return false;
            }
            pos.pop_back();
        }
        return true;
    };
    for (std::size_t w = 1; w <= code.t && w <= n; ++w)
        if (!rec(w, 0)) return visited;
    return visited;
}

std::size_t count_correctable_patterns(const AffineVarietyCode& code) {
    return for_each_correctable_pattern(code, [](const ErrorPattern&) { return true; });
}

ErrorPattern oracle_decode(const AffineVarietyCode& code, const Syndrome& s) {
    std::optional<ErrorPattern> best;
    for_each_correctable_pattern(code, [&](const ErrorPattern& e) {
        if (syndrome_of_pattern(code, e) == s) {
            best = e;
            return false; // ascending weight: the first hit is minimal
        }
        return true;
    });
    if (!best) throw NotCorrectableError("no pattern of weight <= t has this syndrome");
    return *best;
}

} // namespace varcode
