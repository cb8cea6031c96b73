#include "arrcoh/lattice.hpp"

#include <algorithm>
#include <map>

#include "arrcoh/errors.hpp"

namespace arrcoh {

std::size_t IntersectionLattice::top() const {
    // unique maximal element: the join of everything; sorted order puts it last
    // only when codims are distinct, so search explicitly.
    std::size_t t = 0;
    for (std::size_t i = 1; i < size(); ++i)
        if (leq(t, i)) t = i;
    return t;
}

IntersectionLattice build_lattice(const SubspaceFamily& family) {
    if (family.size() > 20)
        throw LimitError("lattice construction capped at 20 members (2^n joins)");

    // Closure of the members under intersection, seeded with the ambient.
    // Growing a worklist of pairwise intersections is equivalent to all 2^n
    // joins and usually far cheaper.
    std::map<Subspace, std::size_t> seen;
    std::vector<Subspace> elems;
    auto insert = [&](const Subspace& s) -> bool {
        Subspace keyed = s;
        if (seen.contains(keyed)) return false;
        seen.emplace(keyed, 0);
        elems.push_back(keyed);
        return true;
    };
    insert(family.ambient());
    for (const Subspace& m : family.members()) insert(m);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = elems.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < family.size(); ++j) {
                Subspace cut = intersect(elems[i], family.member(j));
                if (insert(cut)) grew = true;
            }
    }

    IntersectionLattice lat;
    std::sort(elems.begin(), elems.end());
    lat.elements_ = std::move(elems);

    // Keep member names on the matching lattice elements.
    for (auto& e : lat.elements_) {
        if (e.same_space(family.ambient()) && !family.ambient().name().empty())
            e.rename(family.ambient().name());
        for (const Subspace& m : family.members())
            if (e.same_space(m)) e.rename(m.name());
    }

    const std::size_t n = lat.elements_.size();
    lat.leq_.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            lat.leq_[a][b] = contains(lat.elements_[a], lat.elements_[b]);

    // join = least upper bound, meet = greatest lower bound, both read off the
    // leq table. Closure under intersection guarantees they exist.
    lat.join_.assign(n, std::vector<std::size_t>(n, 0));
    lat.meet_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool found_join = false, found_meet = false;
            for (std::size_t z = 0; z < n && !(found_join && found_meet); ++z) {
                if (!found_join && lat.leq_[a][z] && lat.leq_[b][z]) {
                    bool minimal = true;
                    for (std::size_t u = 0; u < n && minimal; ++u)
                        if (lat.leq_[a][u] && lat.leq_[b][u] && !lat.leq_[z][u]) minimal = false;
                    if (minimal) {
                        lat.join_[a][b] = z;
                        found_join = true;
                    }
                }
                if (!found_meet && lat.leq_[z][a] && lat.leq_[z][b]) {
                    bool maximal = true;
                    for (std::size_t u = 0; u < n && maximal; ++u)
                        if (lat.leq_[u][a] && lat.leq_[u][b] && !lat.leq_[u][z]) maximal = false;
                    if (maximal) {
                        lat.meet_[a][b] = z;
                        found_meet = true;
                    }
                }
            }
            if (!found_join || !found_meet)
                throw CheckError("lattice join/meet missing; closure incomplete");
        }

    // Covers: a < b with nothing strictly between.
    auto strictly_less = [&](std::size_t a, std::size_t b) { return a != b && lat.leq_[a][b]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!strictly_less(a, b)) continue;
            bool covered = true;
            for (std::size_t c = 0; c < n && covered; ++c)
                if (strictly_less(a, c) && strictly_less(c, b)) covered = false;
            if (covered) lat.covers_.emplace_back(a, b);
        }

    for (const auto& [a, b] : lat.covers_)
        if (a == lat.bottom()) lat.atoms_.push_back(b);

    // Longest chain from the bottom; codim order is a linear extension.
    lat.ranks_.assign(n, 0);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lat.elements_[a].codim() < lat.elements_[b].codim();
    });
    for (std::size_t b : order)
        for (std::size_t a = 0; a < n; ++a)
            if (strictly_less(a, b)) lat.ranks_[b] = std::max(lat.ranks_[b], lat.ranks_[a] + 1);

    lat.graded_ = true;
    for (const auto& [a, b] : lat.covers_)
        if (lat.ranks_[b] != lat.ranks_[a] + 1) lat.graded_ = false;

    return lat;
}

bool is_geometric(const IntersectionLattice& lat) {
    if (!lat.is_graded()) return false;

    // Atomic: every element is the join of the atoms below it.
    const std::size_t n = lat.size();
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t acc = lat.bottom();
        for (std::size_t a : lat.atoms())
            if (lat.leq(a, x)) acc = lat.join(acc, a);
        if (acc != x) return false;
    }

    // Semimodular for the chain-length rank.
    const auto& r = lat.ranks();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (r[x] + r[y] < r[lat.join(x, y)] + r[lat.meet(x, y)]) return false;

    return true;
}

} // namespace arrcoh
