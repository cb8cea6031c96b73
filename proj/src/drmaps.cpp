#include "arrcoh/drmaps.hpp"

#include <algorithm>
#include <bit>

#include "arrcoh/errors.hpp"

namespace arrcoh {

namespace {

std::vector<std::size_t> bit_indices(std::uint32_t bits) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; bits != 0; ++i, bits >>= 1)
        if (bits & 1u) idx.push_back(i);
    return idx;
}

} // namespace

DeletionRestriction::DeletionRestriction(const Arrangement& arr, std::size_t pivot,
                                         std::size_t max_size)
    : max_size_(max_size), classes_(equivalence_classes(arr, pivot)) {
    if (arr.size() < 2)
        throw PreconditionError("deletion-restriction needs at least two members");

    const Arrangement& reord = classes_.reordered;
    const Subspace& x0 = reord.member(0);
    pivot_degree_ = 2 * static_cast<int>(x0.codim()) - 1;
    separator_ = is_separator(reord, 0);

    class_of_.assign(reord.size(), 0);
    std::size_t next = 1;
    for (std::size_t c = 0; c < classes_.blocks.size(); ++c)
        for (std::size_t k = 0; k < classes_.blocks[c].size(); ++k) class_of_[next++] = c;

    full_ = build_complex_ptr(reord.family(), max_size_);

    SubspaceFamily deleted_family(reord.family().ambient());
    for (std::size_t i = 1; i < reord.size(); ++i) deleted_family.add(reord.member(i));
    deleted_ = build_complex_ptr(deleted_family, max_size_);
    inclusion_ = family_inclusion(deleted_, full_);

    QuotientComplex q = quotient_complex(full_, 0);
    quotient_ = q.complex;
    projection_ = std::move(q.projection);

    // One tilde member per equivalence class, in class order, inside x0.
    SubspaceFamily tilde_family(x0);
    for (const auto& block : classes_.blocks) {
        const Subspace& y = arr.member(block.front());
        Subspace cut = intersect(x0, y);
        if (!x0.name().empty() && !y.name().empty()) cut.rename(x0.name() + "^" + y.name());
        tilde_family.add(std::move(cut));
    }
    tilde_ = build_complex_ptr(tilde_family, max_size_);

    SubspaceFamily restricted_family(x0);
    for (std::size_t i = 0; i < tilde_family.size(); ++i) {
        bool strictly_inside = false;
        for (std::size_t j = 0; j < tilde_family.size() && !strictly_inside; ++j)
            strictly_inside = i != j && contains(tilde_family.member(j), tilde_family.member(i)) &&
                              !tilde_family.member(j).same_space(tilde_family.member(i));
        if (!strictly_inside) restricted_family.add(tilde_family.member(i));
    }
    restricted_ = build_complex_ptr(restricted_family, max_size_);
    tilde_inclusion_ = family_inclusion(restricted_, tilde_);

    // phi: sigma containing x0 with classwise-distinct tail {x_i} maps to
    // (-1)^r { x0 n x_i }, everything else to zero.
    ChainMap phi(full_, tilde_, -pivot_degree_);
    for (const int deg : full_->degrees()) {
        QMatrix& block = phi.mutable_block(deg);
        const auto& gens = full_->generators(deg);
        for (std::size_t col = 0; col < gens.size(); ++col) {
            const std::uint32_t bits = gens[col].bits;
            if (!(bits & 1u)) continue;
            std::uint32_t image = 0;
            bool zero = false;
            for (const std::size_t i : bit_indices(bits >> 1)) {
                const std::uint32_t class_bit = std::uint32_t{1} << class_of_[i + 1];
                if (image & class_bit) { // two members of one class: an E-pair
                    zero = true;
                    break;
                }
                image |= class_bit;
            }
            if (zero) continue;
            const int r = std::popcount(bits) - 1;
            const auto [tdeg, row] = tilde_->locate(image);
            if (tdeg != deg - pivot_degree_)
                throw CheckError("phi image has unexpected degree");
            block.at(row, col) = (r % 2 == 0) ? 1 : -1;
        }
    }
    if (!phi.commutes_with_differential())
        throw CheckError("phi does not commute with the differential");
    phi_ = std::move(phi);

    // phi factors through the quotient: same columns, quotient basis.
    ChainMap phi_bar(quotient_, tilde_, -pivot_degree_);
    for (const int deg : quotient_->degrees()) {
        QMatrix& block = phi_bar.mutable_block(deg);
        const auto& gens = quotient_->generators(deg);
        for (std::size_t col = 0; col < gens.size(); ++col) {
            const auto [fdeg, fcol] = full_->locate(gens[col].bits);
            const QMatrix& phi_block = phi_->block(fdeg);
            for (std::size_t row = 0; row < block.rows(); ++row)
                block.at(row, col) = phi_block.at(row, fcol);
        }
    }
    if (!phi_bar.commutes_with_differential())
        throw CheckError("phi-bar does not commute with the differential");
    phi_bar_ = std::move(phi_bar);
}

ChainMap DeletionRestriction::k_map() const {
    if (!separator_)
        throw PreconditionError("k is only a chain map when the pivot is a separator");
    // separator => join(sigma \ {x0}) != join(sigma) for every sigma
    // containing x0, which is exactly what kills kd(sigma).
    for (const int deg : full_->degrees())
        for (const Generator& g : full_->generators(deg))
            if ((g.bits & 1u) &&
                full_->join_codim(g.bits & ~std::uint32_t{1}) == full_->join_codim(g.bits))
                throw CheckError("separator hypothesis violated by a subset join");

    ChainMap k(full_, deleted_, 0);
    for (const int deg : full_->degrees()) {
        QMatrix& block = k.mutable_block(deg);
        const auto& gens = full_->generators(deg);
        for (std::size_t col = 0; col < gens.size(); ++col) {
            if (gens[col].bits & 1u) continue;
            const auto [ddeg, row] = deleted_->locate(gens[col].bits >> 1);
            if (ddeg != deg) throw CheckError("k image has unexpected degree");
            block.at(row, col) = 1;
        }
    }
    if (!k.commutes_with_differential())
        throw CheckError("k does not commute with the differential");
    return k;
}

const CohomologyBasis& DeletionRestriction::full_cohomology() const {
    if (!h_full_) h_full_.emplace(full_);
    return *h_full_;
}
const CohomologyBasis& DeletionRestriction::deleted_cohomology() const {
    if (!h_deleted_) h_deleted_.emplace(deleted_);
    return *h_deleted_;
}
const CohomologyBasis& DeletionRestriction::quotient_cohomology() const {
    if (!h_quotient_) h_quotient_.emplace(quotient_);
    return *h_quotient_;
}
const CohomologyBasis& DeletionRestriction::tilde_cohomology() const {
    if (!h_tilde_) h_tilde_.emplace(tilde_);
    return *h_tilde_;
}
const CohomologyBasis& DeletionRestriction::restricted_cohomology() const {
    if (!h_restricted_) h_restricted_.emplace(restricted_);
    return *h_restricted_;
}

std::vector<Rational> DeletionRestriction::connecting_image(
    int quotient_degree, const std::vector<Rational>& quotient_coeffs,
    const std::vector<Rational>* lift_perturbation) const {
    const int q = quotient_degree;
    if (quotient_coeffs.size() != quotient_->dim(q))
        throw InputError("connecting_image: coefficient size mismatch");

    // natural lift: same coefficients on the same subsets inside D(A)
    std::vector<Rational> lift(full_->dim(q));
    const auto& qgens = quotient_->generators(q);
    for (std::size_t i = 0; i < qgens.size(); ++i) {
        const auto [fdeg, fidx] = full_->locate(qgens[i].bits);
        lift[fidx] = quotient_coeffs[i];
    }
    if (lift_perturbation) {
        // an arbitrary x0-free perturbation: another lift of the same coset
        const auto& dgens = deleted_->generators(q);
        if (lift_perturbation->size() != dgens.size())
            throw InputError("connecting_image: perturbation size mismatch");
        for (std::size_t i = 0; i < dgens.size(); ++i) {
            const auto [fdeg, fidx] = full_->locate(dgens[i].bits << 1);
            lift[fidx] += (*lift_perturbation)[i];
        }
    }

    const std::vector<Rational> image = full_->differential(q).apply(lift);
    std::vector<Rational> out(deleted_->dim(q + 1));
    const auto& fgens = full_->generators(q + 1);
    for (std::size_t i = 0; i < fgens.size(); ++i) {
        if (fgens[i].bits & 1u) {
            if (image[i] != 0)
                throw CheckError("connecting zigzag left a coefficient on an x0 generator");
            continue;
        }
        const auto [ddeg, didx] = deleted_->locate(fgens[i].bits >> 1);
        out[didx] = image[i];
    }
    return out;
}

namespace {

QMatrix materialize(const std::map<int, QMatrix>& blocks, int q, std::size_t rows,
                    std::size_t cols) {
    const auto it = blocks.find(q);
    if (it != blocks.end()) {
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw CheckError("induced block has unexpected shape");
        return it->second;
    }
    return QMatrix(rows, cols);
}

} // namespace

TripleReport les_report(const Arrangement& arr, std::size_t pivot, std::size_t max_size) {
    const DeletionRestriction dr(arr, pivot, max_size);
    return les_report(dr, arr.member(pivot).name());
}

TripleReport les_report(const DeletionRestriction& dr, const std::string& pivot_name) {
    TripleReport report;
    report.pivot = dr.pivot();
    report.pivot_name = pivot_name.empty() ? dr.pivot_subspace().name() : pivot_name;
    report.permutation = dr.classes().permutation;
    report.classes = dr.classes().blocks;
    report.pivot_degree = dr.pivot_degree();
    report.separator = dr.separator();

    const CohomologyBasis& h_full = dr.full_cohomology();
    const CohomologyBasis& h_del = dr.deleted_cohomology();
    const CohomologyBasis& h_quot = dr.quotient_cohomology();
    const CohomologyBasis& h_tilde = dr.tilde_cohomology();
    const CohomologyBasis& h_res = dr.restricted_cohomology();

    report.poincare_full = h_full.poincare();
    report.poincare_deleted = h_del.poincare();
    report.poincare_restricted = h_res.poincare();

    report.deficit = poly_sub(
        poly_add(report.poincare_deleted,
                 poly_shift(report.poincare_restricted, report.pivot_degree)),
        report.poincare_full);
    report.pp_holds = poly_is_zero(report.deficit);

    report.phi_bar_quasi_iso = is_quasi_isomorphism(dr.phi_bar(), h_quot, h_tilde);
    report.tilde_inclusion_quasi_iso = is_quasi_isomorphism(dr.tilde_inclusion(), h_res, h_tilde);

    // induced maps of the short exact sequence
    const std::map<int, QMatrix> j_star = induced_maps(dr.inclusion(), h_del, h_full);
    const std::map<int, QMatrix> p_star = induced_maps(dr.projection(), h_full, h_quot);

    // connecting homomorphism per degree, on quotient representatives
    std::map<int, QMatrix> delta;
    for (const auto& [q, bq] : h_quot.betti_all()) {
        QMatrix block(h_del.betti(q + 1), bq);
        const auto& reps = h_quot.representatives(q);
        for (std::size_t col = 0; col < bq; ++col) {
            const auto image = dr.connecting_image(q, reps[col]);
            const auto coords = h_del.class_coordinates(q + 1, image);
            if (!coords) throw CheckError("connecting image is not a cocycle of D(A')");
            for (std::size_t row = 0; row < coords->size(); ++row)
                block.at(row, col) = (*coords)[row];
        }
        delta.emplace(q, std::move(block));
    }

    int lo = 0, hi = 0;
    auto widen = [&](const std::map<int, std::size_t>& b) {
        for (const auto& [q, n] : b) {
            lo = std::min(lo, q - 1);
            hi = std::max(hi, q + 1);
        }
    };
    widen(h_full.betti_all());
    widen(h_del.betti_all());
    widen(h_quot.betti_all());

    bool exact = true;
    std::map<int, std::size_t> delta_rank;
    for (int q = lo; q <= hi; ++q)
        delta_rank[q] = rank(materialize(delta, q, h_del.betti(q + 1), h_quot.betti(q)));

    for (int q = lo; q <= hi && exact; ++q) {
        const std::size_t b_del = h_del.betti(q);
        const std::size_t b_full = h_full.betti(q);
        const std::size_t b_quot = h_quot.betti(q);
        const QMatrix j_q = materialize(j_star, q, b_full, b_del);
        const QMatrix p_q = materialize(p_star, q, b_quot, b_full);
        const QMatrix d_prev = materialize(delta, q - 1, b_del, h_quot.betti(q - 1));
        const QMatrix d_q = materialize(delta, q, h_del.betti(q + 1), b_quot);

        // im(delta_{q-1}) = ker(j*_q)
        if (!(j_q * d_prev).is_zero()) exact = false;
        if (delta_rank[q - 1] + rank(j_q) != b_del) exact = false;
        // im(j*_q) = ker(p*_q)
        if (!(p_q * j_q).is_zero()) exact = false;
        if (rank(j_q) + rank(p_q) != b_full) exact = false;
        // im(p*_q) = ker(delta_q)
        if (!(d_q * p_q).is_zero()) exact = false;
        if (rank(p_q) + delta_rank[q] != b_quot) exact = false;
    }
    report.les_exact = exact;

    for (const auto& [q, r] : delta_rank)
        if (r > 0) report.connecting_ranks[q - report.pivot_degree] = r;

    // The exact sequence forces deficit_q = rank(delta_{q-1}) + rank(delta_q);
    // divergence would mean the identifications above are inconsistent.
    if (exact && report.phi_bar_quasi_iso && report.tilde_inclusion_quasi_iso) {
        PoincarePoly from_ranks;
        for (const auto& [q, r] : delta_rank) {
            if (r == 0) continue;
            from_ranks[q] += static_cast<long long>(r);
            from_ranks[q + 1] += static_cast<long long>(r);
        }
        for (auto it = from_ranks.begin(); it != from_ranks.end();)
            it = it->second == 0 ? from_ranks.erase(it) : std::next(it);
        if (!poly_is_zero(poly_sub(from_ranks, report.deficit)))
            throw CheckError("deficit polynomial disagrees with connecting ranks");
    }
    return report;
}

bool pp_check(const Arrangement& arr, std::size_t pivot, std::size_t max_size) {
    if (arr.size() < 2) throw PreconditionError("pp_check needs at least two members");
    const Arrangement deleted = deleted_arrangement(arr, pivot);
    const Arrangement restricted = restricted_arrangement(arr, pivot);
    const int degree = 2 * static_cast<int>(arr.member(pivot).codim()) - 1;
    const PoincarePoly lhs = poincare(arr.family(), max_size);
    const PoincarePoly rhs = poly_add(poincare(deleted.family(), max_size),
                                      poly_shift(poincare(restricted.family(), max_size), degree));
    return poly_is_zero(poly_sub(lhs, rhs));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InputError("subspace_sum: ambient dimension mismatch");
    // span(a + b) = span(a) u span(b); equations = annihilator of that span
    const QMatrix span = QMatrix::vstack(nullspace(a.equations()), nullspace(b.equations()));
    return Subspace::from_equations(nullspace(span), a.ambient_dim());
}

namespace {

void require_theta_hypotheses(const Arrangement& arr, std::size_t pivot) {
    if (arr.size() < 2)
        throw PreconditionError("theta needs at least two members");
    if (!is_geometric(build_lattice(arr.family())))
        throw PreconditionError("theta requires a geometric intersection lattice");
    if (!is_separator(arr, pivot))
        throw PreconditionError("theta requires a separator pivot");
}

} // namespace

ThetaMap theta(const Arrangement& arr, std::size_t pivot, std::size_t max_size) {
    require_theta_hypotheses(arr, pivot);
    const DeletionRestriction dr(arr, pivot, max_size);
    if (dr.classes().blocks.size() != dr.reordered().size() - 1)
        throw CheckError("theta: x0 n x_i are not pairwise distinct under the hypotheses");

    ThetaMap out;
    out.source = dr.deleted_part();
    out.target = dr.tilde();

    // Generators correspond bitwise (member i of A' to class i of A~''); the
    // map carries no sign, so commutation is checked termwise on each subset.
    out.commutes = true;
    const SubspaceFamily& src = out.source->family();
    const SubspaceFamily& tgt = out.target->family();
    const std::uint32_t total = std::uint32_t{1} << src.size();
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        auto lhs = differential_of(src, bits);
        auto rhs = differential_of(tgt, bits);
        auto key = [](const SignedSubset& t) { return std::pair(t.bits, t.sign); };
        std::sort(lhs.begin(), lhs.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
        std::sort(rhs.begin(), rhs.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
        if (lhs.size() != rhs.size() ||
            !std::equal(lhs.begin(), lhs.end(), rhs.begin(),
                        [&](auto& a, auto& b) { return key(a) == key(b); }))
            out.commutes = false;

        const int drop = out.source->degree_of_bits(bits) - out.target->degree_of_bits(bits);
        out.degree_drops[bits] = drop;
    }
    return out;
}

BettiSumRelations betti_sum_relations(const Arrangement& arr, std::size_t pivot,
                                      std::size_t max_size) {
    require_theta_hypotheses(arr, pivot);
    BettiSumRelations out;
    out.poincare_deleted = poincare(deleted_arrangement(arr, pivot).family(), max_size);
    out.poincare_restricted = poincare(restricted_arrangement(arr, pivot).family(), max_size);

    long long even_d = 0, odd_d = 0, even_r = 0, odd_r = 0;
    for (const auto& [q, c] : out.poincare_deleted) (q % 2 == 0 ? even_d : odd_d) += c;
    for (const auto& [q, c] : out.poincare_restricted) (q % 2 == 0 ? even_r : odd_r) += c;
    out.even_sums_equal = even_d == even_r;
    out.odd_sums_equal = odd_d == odd_r;
    out.total_sums_equal = even_d + odd_d == even_r + odd_r;

    int max_degree = 0;
    for (const auto& [q, c] : out.poincare_deleted) max_degree = std::max(max_degree, q);
    for (const auto& [q, c] : out.poincare_restricted) max_degree = std::max(max_degree, q);
    out.partial_sums_dominated = true;
    long long prefix_d = 0, prefix_r = 0;
    for (int n = 0; n <= max_degree; ++n) {
        if (auto it = out.poincare_deleted.find(n); it != out.poincare_deleted.end())
            prefix_d += it->second;
        if (auto it = out.poincare_restricted.find(n); it != out.poincare_restricted.end())
            prefix_r += it->second;
        if (prefix_d > prefix_r) out.partial_sums_dominated = false;
    }
    return out;
}

HyperplaneSeparatorCheck hyperplane_separator_check(const Arrangement& arr, std::size_t pivot,
                                                    std::size_t max_size) {
    require_theta_hypotheses(arr, pivot);
    if (arr.member(pivot).codim() != 1)
        throw PreconditionError("hyperplane separator check requires a hyperplane pivot");
    HyperplaneSeparatorCheck out;
    out.poincare_full = poincare(arr.family(), max_size);
    out.poincare_deleted = poincare(deleted_arrangement(arr, pivot).family(), max_size);
    out.poincare_restricted = poincare(restricted_arrangement(arr, pivot).family(), max_size);
    out.deleted_equals_restricted =
        poly_is_zero(poly_sub(out.poincare_deleted, out.poincare_restricted));
    PoincarePoly product;
    for (const auto& [q, c] : out.poincare_restricted) {
        product[q] += c;
        product[q + 1] += c;
    }
    out.product_formula = poly_is_zero(poly_sub(out.poincare_full, product));
    return out;
}

} // namespace arrcoh
