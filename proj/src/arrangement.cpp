#include "arrcoh/arrangement.hpp"

#include <algorithm>
#include <utility>

#include "arrcoh/errors.hpp"

namespace arrcoh {

SubspaceFamily::SubspaceFamily(std::size_t ambient_dim) : ambient_(ambient_dim) {}

SubspaceFamily::SubspaceFamily(Subspace ambient) : ambient_(std::move(ambient)) {}

void SubspaceFamily::add(Subspace member) {
    if (member.ambient_dim() != ambient_dim())
        throw InputError("member ambient dimension mismatch");
    if (find(member) != npos)
        throw InputError("duplicate subspace in family: '" + member.name() + "'");
    if (ambient_offset() > 0 && !contains(ambient_, member))
        throw InputError("member '" + member.name() + "' not contained in the family ambient");
    if (member.codim() == ambient_offset())
        throw InputError("member '" + member.name() + "' equals the family ambient");
    members_.push_back(std::move(member));
}

std::size_t SubspaceFamily::find(const Subspace& s) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].same_space(s)) return i;
    return npos;
}

std::size_t SubspaceFamily::find_name(const std::string& name) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].name() == name) return i;
    return npos;
}

Subspace SubspaceFamily::join(const std::vector<std::size_t>& indices) const {
    QMatrix stacked = ambient_.equations();
    for (std::size_t i : indices) stacked = QMatrix::vstack(stacked, member(i).equations());
    return Subspace::from_equations(stacked, ambient_dim());
}

Subspace SubspaceFamily::join_bits(std::uint32_t bits) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i)
        if (bits & (std::uint32_t{1} << i)) idx.push_back(i);
    return join(idx);
}

bool SubspaceFamily::has_containment_pair(std::size_t* bigger, std::size_t* smaller) const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j) {
            if (i == j) continue;
            if (contains(members_[i], members_[j])) {
                if (bigger) *bigger = i;
                if (smaller) *smaller = j;
                return true;
            }
        }
    return false;
}

Arrangement::Arrangement(SubspaceFamily family) : family_(std::move(family)) {
    std::size_t big = 0, small = 0;
    if (family_.has_containment_pair(&big, &small))
        throw InputError("not an arrangement: member '" + family_.member(big).name() +
                         "' contains member '" + family_.member(small).name() + "'");
}

Arrangement deleted_arrangement(const Arrangement& arr, std::size_t pivot) {
    if (pivot >= arr.size()) throw InputError("pivot index out of range");
    SubspaceFamily out(arr.family().ambient());
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (i != pivot) out.add(arr.member(i));
    return Arrangement(std::move(out));
}

SubspaceFamily restrict_tilde(const Arrangement& arr, std::size_t pivot) {
    if (pivot >= arr.size()) throw InputError("pivot index out of range");
    if (arr.size() < 2)
        throw PreconditionError("restriction of a singleton arrangement is undefined");
    const Subspace& x0 = arr.member(pivot);
    SubspaceFamily out(x0);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == pivot) continue;
        Subspace cut = intersect(x0, arr.member(i));
        if (out.find(cut) != SubspaceFamily::npos) continue; // a family is a set
        cut.rename(x0.name().empty() || arr.member(i).name().empty()
                       ? ""
                       : x0.name() + "^" + arr.member(i).name());
        out.add(std::move(cut));
    }
    return out;
}

Arrangement restricted_arrangement(const Arrangement& arr, std::size_t pivot) {
    const SubspaceFamily tilde = restrict_tilde(arr, pivot);
    SubspaceFamily out(tilde.ambient());
    for (std::size_t i = 0; i < tilde.size(); ++i) {
        bool strictly_inside_other = false;
        for (std::size_t j = 0; j < tilde.size() && !strictly_inside_other; ++j) {
            if (i == j) continue;
            strictly_inside_other = contains(tilde.member(j), tilde.member(i)) &&
                                    !tilde.member(j).same_space(tilde.member(i));
        }
        if (!strictly_inside_other) out.add(tilde.member(i));
    }
    return Arrangement(std::move(out));
}

EquivalenceClasses equivalence_classes(const Arrangement& arr, std::size_t pivot) {
    if (pivot >= arr.size()) throw InputError("pivot index out of range");
    const Subspace& x0 = arr.member(pivot);

    EquivalenceClasses out{pivot, {}, Arrangement(SubspaceFamily(arr.ambient_dim())), {}};
    std::vector<Subspace> block_keys; // x0 n y per block, in first-occurrence order
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == pivot) continue;
        const Subspace cut = intersect(x0, arr.member(i));
        std::size_t block = block_keys.size();
        for (std::size_t b = 0; b < block_keys.size(); ++b)
            if (block_keys[b].same_space(cut)) {
                block = b;
                break;
            }
        if (block == block_keys.size()) {
            block_keys.push_back(cut);
            out.blocks.emplace_back();
        }
        out.blocks[block].push_back(i);
    }

    SubspaceFamily reordered(arr.family().ambient());
    reordered.add(x0);
    out.permutation.push_back(pivot);
    for (const auto& block : out.blocks)
        for (std::size_t i : block) {
            reordered.add(arr.member(i));
            out.permutation.push_back(i);
        }
    out.reordered = Arrangement(std::move(reordered));
    return out;
}

bool is_separator(const Arrangement& arr, std::size_t pivot) {
    if (pivot >= arr.size()) throw InputError("pivot index out of range");
    if (arr.size() < 2)
        throw PreconditionError("separator is undefined for singleton arrangements");
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < arr.size(); ++i)
        if (i != pivot) rest.push_back(i);
    const Subspace t = arr.family().join(rest);
    return !contains(arr.member(pivot), t);
}

} // namespace arrcoh
