#include "arrcoh/model.hpp"

#include <algorithm>
#include <bit>

#include "arrcoh/errors.hpp"

namespace arrcoh {

std::size_t CochainComplex::dim(int q) const {
    const auto it = generators_.find(q);
    return it == generators_.end() ? 0 : it->second.size();
}

const std::vector<Generator>& CochainComplex::generators(int q) const {
    static const std::vector<Generator> none;
    const auto it = generators_.find(q);
    return it == generators_.end() ? none : it->second;
}

const QMatrix& CochainComplex::differential(int q) const {
    const auto it = differentials_.find(q);
    return it == differentials_.end() ? empty_ : it->second;
}

std::pair<int, std::size_t> CochainComplex::locate(std::uint32_t bits) const {
    const auto it = locate_.find(bits);
    if (it == locate_.end()) throw InputError("subset is not a generator of this complex");
    return it->second;
}

std::size_t CochainComplex::total_dim() const {
    std::size_t total = 0;
    for (const auto& [q, gens] : generators_) total += gens.size();
    return total;
}

namespace {

int subset_degree(std::size_t join_codim, std::size_t offset, int popcount) {
    return 2 * (static_cast<int>(join_codim) - static_cast<int>(offset)) - popcount;
}

std::vector<std::size_t> bit_indices(std::uint32_t bits) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; bits != 0; ++i, bits >>= 1)
        if (bits & 1u) idx.push_back(i);
    return idx;
}

} // namespace

CochainComplex build_complex(const SubspaceFamily& family, std::size_t max_size) {
    if (family.size() > max_size || family.size() > 20)
        throw LimitError("family of " + std::to_string(family.size()) +
                         " members exceeds the complex size cap of " +
                         std::to_string(std::min<std::size_t>(max_size, 20)));

    CochainComplex cx;
    cx.family_ = family;
    const std::size_t n = family.size();
    const std::uint32_t total = std::uint32_t{1} << n;
    const std::size_t offset = family.ambient_offset();

    // joins via shared-prefix recursion: join(bits) = join(bits \ lowbit) n member(lowbit)
    std::vector<Subspace> joins;
    joins.reserve(total);
    joins.push_back(family.ambient());
    cx.join_codims_.assign(total, 0);
    for (std::uint32_t bits = 1; bits < total; ++bits) {
        const std::uint32_t low = bits & (~bits + 1);
        const std::size_t low_index = static_cast<std::size_t>(std::countr_zero(low));
        joins.push_back(intersect(joins[bits ^ low], family.member(low_index)));
        cx.join_codims_[bits] = joins[bits].codim() - offset;
    }

    for (std::uint32_t bits = 0; bits < total; ++bits) {
        const int degree = subset_degree(joins[bits].codim(), offset, std::popcount(bits));
        cx.generators_[degree].push_back({bits, degree});
    }
    for (auto& [q, gens] : cx.generators_) {
        cx.degrees_.push_back(q);
        for (std::size_t i = 0; i < gens.size(); ++i) cx.locate_[gens[i].bits] = {q, i};
    }

    for (const int q : cx.degrees_) {
        const auto& src = cx.generators_[q];
        const std::size_t target_dim = cx.dim(q + 1);
        QMatrix d(target_dim, src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const std::uint32_t bits = src[col].bits;
            int position = 0; // 1-based within sigma, following the family order
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t bit = std::uint32_t{1} << i;
                if (!(bits & bit)) continue;
                ++position;
                const std::uint32_t rest = bits ^ bit;
                if (cx.join_codims_[rest] != cx.join_codims_[bits]) continue;
                const auto [deg, row] = cx.locate(rest);
                if (deg != q + 1) throw CheckError("differential term off by degree");
                d.at(row, col) += (position % 2 == 0) ? 1 : -1;
            }
        }
        cx.differentials_[q] = std::move(d);
    }
    return cx;
}

ComplexPtr build_complex_ptr(const SubspaceFamily& family, std::size_t max_size) {
    return std::make_shared<CochainComplex>(build_complex(family, max_size));
}

int degree_of(const SubspaceFamily& family, std::uint32_t bits) {
    const Subspace join = family.join_bits(bits);
    return subset_degree(join.codim(), family.ambient_offset(), std::popcount(bits));
}

std::vector<SignedSubset> differential_of(const SubspaceFamily& family, std::uint32_t bits) {
    std::vector<SignedSubset> terms;
    const std::size_t join_codim = family.join_bits(bits).codim();
    int position = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const std::uint32_t bit = std::uint32_t{1} << i;
        if (!(bits & bit)) continue;
        ++position;
        if (family.join_bits(bits ^ bit).codim() != join_codim) continue;
        terms.push_back({position % 2 == 0 ? 1 : -1, bits ^ bit});
    }
    return terms;
}

SignedSubset product(const SubspaceFamily& family, std::uint32_t sigma, std::uint32_t tau) {
    if ((sigma & tau) != 0) return {0, 0};
    const std::size_t offset = family.ambient_offset();
    const std::size_t codim_sigma = family.join_bits(sigma).codim() - offset;
    const std::size_t codim_tau = family.join_bits(tau).codim() - offset;
    const std::size_t codim_union = family.join_bits(sigma | tau).codim() - offset;
    if (codim_sigma + codim_tau != codim_union) return {0, 0};

    // sign of the shuffle placing tau's elements after sigma's: one inversion
    // per pair (s, t) with s in sigma, t in tau, t earlier in the family order
    std::size_t inversions = 0;
    for (const std::size_t s : bit_indices(sigma))
        for (const std::size_t t : bit_indices(tau))
            if (t < s) ++inversions;
    return {inversions % 2 == 0 ? 1 : -1, sigma | tau};
}

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {
    for (const int q : source_->degrees())
        blocks_.emplace(q, QMatrix(target_->dim(q + shift_), source_->dim(q)));
}

const QMatrix& ChainMap::block(int source_degree) const {
    static const QMatrix none(0, 0);
    const auto it = blocks_.find(source_degree);
    return it == blocks_.end() ? none : it->second;
}

QMatrix& ChainMap::mutable_block(int source_degree) {
    return blocks_.at(source_degree);
}

namespace {

/// d as a matrix with guaranteed shape dim(q+1) x dim(q), materializing zeros
/// for degrees the complex does not carry.
QMatrix differential_matrix(const CochainComplex& c, int q) {
    if (c.has_degree(q)) {
        const QMatrix& d = c.differential(q);
        if (d.rows() == c.dim(q + 1) && d.cols() == c.dim(q)) return d;
    }
    return QMatrix(c.dim(q + 1), c.dim(q));
}

QMatrix chain_block(const ChainMap& f, int q) {
    const QMatrix& b = f.block(q);
    if (b.rows() == f.target().dim(q + f.shift()) && b.cols() == f.source().dim(q) &&
        f.source().has_degree(q))
        return b;
    return QMatrix(f.target().dim(q + f.shift()), f.source().dim(q));
}

} // namespace

bool ChainMap::commutes_with_differential() const {
    int lo = source_->min_degree();
    int hi = source_->max_degree();
    lo = std::min(lo, target_->min_degree() - shift_);
    hi = std::max(hi, target_->max_degree() - shift_);
    for (int q = lo - 1; q <= hi + 1; ++q) {
        const QMatrix lhs = differential_matrix(*target_, q + shift_) * chain_block(*this, q);
        const QMatrix rhs = chain_block(*this, q + 1) * differential_matrix(*source_, q);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<Rational> ChainMap::apply(int source_degree, const std::vector<Rational>& coeffs) const {
    return chain_block(*this, source_degree).apply(coeffs);
}

ChainMap ChainMap::identity(ComplexPtr complex) {
    ChainMap f(complex, complex, 0);
    for (const int q : complex->degrees()) f.mutable_block(q) = QMatrix::identity(complex->dim(q));
    return f;
}

ChainMap ChainMap::composed_with(const ChainMap& inner) const {
    if (inner.target_ != source_)
        throw InputError("chain map composition: target/source mismatch");
    ChainMap out(inner.source_, target_, inner.shift_ + shift_);
    for (const int q : inner.source_->degrees())
        out.mutable_block(q) = chain_block(*this, q + inner.shift_) * chain_block(inner, q);
    return out;
}

ChainMap family_inclusion(ComplexPtr sub, ComplexPtr full) {
    // Match each sub-family member to its position in the full family; the
    // embedding must be order preserving so subset positions (and thus the
    // differential signs) agree.
    const SubspaceFamily& small = sub->family();
    const SubspaceFamily& big = full->family();
    std::vector<std::size_t> where(small.size());
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i = 0; i < small.size(); ++i) {
        const std::size_t pos = big.find(small.member(i));
        if (pos == SubspaceFamily::npos)
            throw InputError("family inclusion: member missing from the larger family");
        if (!first && pos <= prev)
            throw InputError("family inclusion: member order is not preserved");
        where[i] = pos;
        prev = pos;
        first = false;
    }

    ChainMap j(sub, full, 0);
    for (const int q : sub->degrees()) {
        QMatrix& block = j.mutable_block(q);
        const auto& gens = sub->generators(q);
        for (std::size_t col = 0; col < gens.size(); ++col) {
            std::uint32_t mapped = 0;
            for (const std::size_t i : bit_indices(gens[col].bits))
                mapped |= std::uint32_t{1} << where[i];
            const auto [deg, row] = full->locate(mapped);
            if (deg != q)
                throw CheckError("family inclusion: degree mismatch on a generator");
            block.at(row, col) = 1;
        }
    }
    if (!j.commutes_with_differential())
        throw CheckError("family inclusion is not a chain map");
    return j;
}

QuotientComplex quotient_complex(ComplexPtr full, std::size_t pivot_member) {
    if (pivot_member >= full->family().size())
        throw InputError("quotient pivot out of range");
    const std::uint32_t pivot_bit = std::uint32_t{1} << pivot_member;

    auto qc = std::make_shared<CochainComplex>();
    CochainComplex& out = *qc;
    out.family_ = full->family();
    out.join_codims_ = full->join_codims_;

    // per full degree: which columns survive (subsets containing the pivot)
    std::map<int, std::vector<std::size_t>> kept;
    for (const int q : full->degrees()) {
        const auto& gens = full->generators(q);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (!(gens[i].bits & pivot_bit)) continue;
            kept[q].push_back(i);
            out.generators_[q].push_back(gens[i]);
        }
    }
    for (auto& [q, gens] : out.generators_) {
        out.degrees_.push_back(q);
        for (std::size_t i = 0; i < gens.size(); ++i) out.locate_[gens[i].bits] = {q, i};
    }
    for (const int q : out.degrees_) {
        const auto& cols = kept[q];
        const auto rows_it = kept.find(q + 1);
        const std::vector<std::size_t> no_rows;
        const auto& rows = rows_it == kept.end() ? no_rows : rows_it->second;
        const QMatrix& dfull = full->differential(q);
        QMatrix d(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) d.at(r, c) = dfull.at(rows[r], cols[c]);
        out.differentials_[q] = std::move(d);
    }

    ChainMap projection(full, qc, 0);
    for (const int q : full->degrees()) {
        QMatrix& block = projection.mutable_block(q);
        const auto it = kept.find(q);
        if (it == kept.end()) continue;
        for (std::size_t r = 0; r < it->second.size(); ++r) block.at(r, it->second[r]) = 1;
    }
    if (!projection.commutes_with_differential())
        throw CheckError("quotient projection is not a chain map");
    return {qc, std::move(projection)};
}

} // namespace arrcoh
