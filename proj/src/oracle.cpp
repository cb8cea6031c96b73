#include "arrcoh/oracle.hpp"

#include <algorithm>

#include "arrcoh/errors.hpp"

namespace arrcoh {

SimplicialComplex order_complex(const IntersectionLattice& lat, std::size_t element) {
    if (element >= lat.size()) throw InputError("order_complex: element out of range");
    if (element == lat.bottom())
        throw InputError("order_complex: the open interval below the bottom is undefined");

    std::vector<std::size_t> verts;
    for (std::size_t z = 0; z < lat.size(); ++z)
        if (z != lat.bottom() && z != element && lat.leq(lat.bottom(), z) && lat.leq(z, element))
            verts.push_back(z);

    SimplicialComplex sc;
    sc.vertex_count = verts.size();

    // enumerate chains by extension; vertices are locally indexed
    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t i = 0; i < verts.size(); ++i) frontier.push_back({i});
    int dim = 0;
    while (!frontier.empty()) {
        sc.simplices[dim] = frontier;
        std::vector<std::vector<std::size_t>> next;
        for (const auto& chain : frontier) {
            const std::size_t last = verts[chain.back()];
            for (std::size_t i = 0; i < verts.size(); ++i) {
                if (verts[i] == last) continue;
                if (lat.leq(last, verts[i])) {
                    auto extended = chain;
                    extended.push_back(i);
                    next.push_back(std::move(extended));
                }
            }
        }
        frontier = std::move(next);
        ++dim;
    }
    return sc;
}

std::map<int, std::size_t> reduced_betti(const SimplicialComplex& sc) {
    // augmented chain complex: C_{-1} = Q spanned by the empty simplex
    std::map<int, std::vector<std::vector<std::size_t>>> chains = sc.simplices;
    chains[-1] = {{}};

    std::map<int, std::size_t> boundary_rank; // rank of d_k : C_k -> C_{k-1}
    for (const auto& [k, simplices] : chains) {
        const auto below = chains.find(k - 1);
        if (below == chains.end()) {
            boundary_rank[k] = 0;
            continue;
        }
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < below->second.size(); ++i) index[below->second[i]] = i;
        QMatrix d(below->second.size(), simplices.size());
        for (std::size_t col = 0; col < simplices.size(); ++col) {
            const auto& s = simplices[col];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> face;
                face.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                d.at(index.at(face), col) += (drop % 2 == 0) ? 1 : -1;
            }
        }
        boundary_rank[k] = rank(d);
    }

    std::map<int, std::size_t> out;
    for (const auto& [k, simplices] : chains) {
        const std::size_t dim_k = simplices.size();
        const std::size_t kernel = dim_k - boundary_rank[k];
        const auto above = boundary_rank.find(k + 1);
        const std::size_t image = above == boundary_rank.end() ? 0 : above->second;
        if (kernel > image) out[k] = kernel - image;
    }
    return out;
}

PoincarePoly gm_poincare(const SubspaceFamily& family, std::size_t gate) {
    if (family.empty()) throw PreconditionError("gm_poincare needs a nonempty family");
    if (family.size() > gate)
        throw LimitError("oracle gated to families of at most " + std::to_string(gate) +
                         " members");
    const IntersectionLattice lat = build_lattice(family);
    const std::size_t offset = family.ambient_offset();

    PoincarePoly poly{{0, 1}};
    for (std::size_t x = 0; x < lat.size(); ++x) {
        if (x == lat.bottom()) continue;
        const auto rb = reduced_betti(order_complex(lat, x));
        const int codim = static_cast<int>(lat.element(x).codim() - offset);
        for (const auto& [dim, count] : rb) {
            const int q = 2 * codim - 2 - dim;
            poly[q] += static_cast<long long>(count);
        }
    }
    for (auto it = poly.begin(); it != poly.end();)
        it = it->second == 0 ? poly.erase(it) : std::next(it);
    return poly;
}

} // namespace arrcoh
