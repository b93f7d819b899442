#include "ekr/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekr {

Family::Family(int member_size) : member_size_(member_size) {
    if (member_size < 0) throw std::invalid_argument("member size must be nonnegative");
}

Family::Family(int member_size, std::vector<VertexSet> members)
    : member_size_(member_size), members_(std::move(members)) {
    if (member_size < 0) throw std::invalid_argument("member size must be nonnegative");
    for (const auto& m : members_)
        if (m.count() != member_size_)
            throw std::invalid_argument("family member has the wrong cardinality");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Family::contains(const VertexSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

}  // namespace ekr
