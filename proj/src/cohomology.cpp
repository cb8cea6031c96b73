#include "arrcoh/cohomology.hpp"

#include <algorithm>

#include "arrcoh/errors.hpp"

namespace arrcoh {

std::map<int, std::size_t> betti(const CochainComplex& cx) {
    std::map<int, std::size_t> out;
    std::map<int, std::size_t> d_rank;
    for (const int q : cx.degrees()) d_rank[q] = rank(cx.differential(q));
    for (const int q : cx.degrees()) {
        const std::size_t kernel = cx.dim(q) - d_rank[q];
        const auto prev = d_rank.find(q - 1);
        const std::size_t image = prev == d_rank.end() ? 0 : prev->second;
        if (kernel > image) out[q] = kernel - image;
    }
    return out;
}

PoincarePoly poincare_of(const CochainComplex& cx) {
    PoincarePoly p;
    for (const auto& [q, b] : betti(cx)) p[q] = static_cast<long long>(b);
    return p;
}

PoincarePoly poincare(const SubspaceFamily& family, std::size_t max_size) {
    return poincare_of(build_complex(family, max_size));
}

long long euler(const PoincarePoly& poly) {
    long long chi = 0;
    for (const auto& [q, c] : poly) chi += (q % 2 == 0) ? c : -c;
    return chi;
}

PoincarePoly poly_add(const PoincarePoly& a, const PoincarePoly& b) {
    PoincarePoly out = a;
    for (const auto& [q, c] : b) {
        out[q] += c;
        if (out[q] == 0) out.erase(q);
    }
    return out;
}

PoincarePoly poly_sub(const PoincarePoly& a, const PoincarePoly& b) {
    PoincarePoly out = a;
    for (const auto& [q, c] : b) {
        out[q] -= c;
        if (out[q] == 0) out.erase(q);
    }
    return out;
}

PoincarePoly poly_shift(const PoincarePoly& a, int exponent) {
    PoincarePoly out;
    for (const auto& [q, c] : a) out[q + exponent] = c;
    return out;
}

bool poly_is_zero(const PoincarePoly& a) {
    return std::all_of(a.begin(), a.end(), [](const auto& t) { return t.second == 0; });
}

std::string to_string(const PoincarePoly& poly) {
    std::string out;
    for (const auto& [q, c] : poly) {
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const long long mag = c > 0 ? c : -c;
        if (q == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += q == 1 ? "t" : "t^" + std::to_string(q);
        }
    }
    return out.empty() ? "0" : out;
}

CohomologyBasis::CohomologyBasis(ComplexPtr complex) : complex_(std::move(complex)) {
    for (const int q : complex_->degrees()) {
        DegreeData d;
        d.cocycles = nullspace(complex_->differential(q));
        if (complex_->has_degree(q - 1)) {
            // image of d_{q-1} = row space of its transpose, canonical via RREF
            d.coboundaries = rref(complex_->differential(q - 1).transposed()).matrix;
        } else {
            d.coboundaries = QMatrix(0, complex_->dim(q));
        }

        // Extend the coboundary basis to the cocycle space: keep each cocycle
        // basis row that enlarges the span.
        RowSpace span(complex_->dim(q));
        for (std::size_t i = 0; i < d.coboundaries.rows(); ++i)
            span.insert(d.coboundaries.row(i));
        for (std::size_t i = 0; i < d.cocycles.rows(); ++i)
            if (span.insert(d.cocycles.row(i))) d.reps.push_back(d.cocycles.row(i));

        QMatrix express(d.reps.size() + d.coboundaries.rows(), complex_->dim(q));
        for (std::size_t r = 0; r < d.reps.size(); ++r)
            for (std::size_t c = 0; c < express.cols(); ++c) express.at(r, c) = d.reps[r][c];
        for (std::size_t r = 0; r < d.coboundaries.rows(); ++r)
            for (std::size_t c = 0; c < express.cols(); ++c)
                express.at(d.reps.size() + r, c) = d.coboundaries.at(r, c);
        d.express = std::move(express);
        degrees_.emplace(q, std::move(d));
    }
}

const CohomologyBasis::DegreeData& CohomologyBasis::data(int degree) const {
    const auto it = degrees_.find(degree);
    return it == degrees_.end() ? empty_ : it->second;
}

std::size_t CohomologyBasis::betti(int degree) const {
    return data(degree).reps.size();
}

std::map<int, std::size_t> CohomologyBasis::betti_all() const {
    std::map<int, std::size_t> out;
    for (const auto& [q, d] : degrees_)
        if (!d.reps.empty()) out[q] = d.reps.size();
    return out;
}

PoincarePoly CohomologyBasis::poincare() const {
    PoincarePoly p;
    for (const auto& [q, b] : betti_all()) p[q] = static_cast<long long>(b);
    return p;
}

const std::vector<std::vector<Rational>>& CohomologyBasis::representatives(int degree) const {
    return data(degree).reps;
}

std::optional<std::vector<Rational>> CohomologyBasis::class_coordinates(
    int degree, const std::vector<Rational>& cocycle) const {
    const DegreeData& d = data(degree);
    if (complex_->dim(degree) == 0) {
        if (!cocycle.empty()) return std::nullopt;
        return std::vector<Rational>{};
    }
    if (cocycle.size() != complex_->dim(degree)) return std::nullopt;
    // must actually be a cocycle
    const auto image = complex_->differential(degree).apply(cocycle);
    if (!std::all_of(image.begin(), image.end(), [](const Rational& v) { return v == 0; }))
        return std::nullopt;
    const auto coeffs = solve(d.express.transposed(), cocycle);
    if (!coeffs) return std::nullopt;
    return std::vector<Rational>(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(d.reps.size()));
}

std::map<int, QMatrix> induced_maps(const ChainMap& f, const CohomologyBasis& source,
                                    const CohomologyBasis& target) {
    if (&source.complex() != &f.source() || &target.complex() != &f.target())
        throw InputError("induced_maps: bases do not belong to the map's complexes");
    if (!f.commutes_with_differential())
        throw CheckError("induced_maps: not a chain map");

    std::map<int, QMatrix> out;
    for (const int q : source.complex().degrees()) {
        const auto& reps = source.representatives(q);
        const std::size_t target_b = target.betti(q + f.shift());
        QMatrix block(target_b, reps.size());
        for (std::size_t col = 0; col < reps.size(); ++col) {
            const auto mapped = f.apply(q, reps[col]);
            const auto coords = target.class_coordinates(q + f.shift(), mapped);
            if (!coords)
                throw CheckError("induced_maps: image of a representative is not a cocycle");
            for (std::size_t row = 0; row < target_b; ++row) block.at(row, col) = (*coords)[row];
        }
        if (reps.empty() && target_b == 0) continue;
        out.emplace(q, std::move(block));
    }
    return out;
}

bool is_quasi_isomorphism(const ChainMap& f, const CohomologyBasis& source,
                          const CohomologyBasis& target) {
    // every degree with cohomology on either side must carry a square
    // full-rank block
    std::map<int, QMatrix> blocks = induced_maps(f, source, target);
    for (const auto& [q, b] : target.betti_all())
        if (source.betti(q - f.shift()) != b) return false;
    for (const auto& [q, block] : blocks) {
        if (block.rows() != block.cols()) return false;
        if (rank(block) != block.rows()) return false;
    }
    return true;
}

} // namespace arrcoh
