// A family of equal-size vertex sets in canonical order.
#pragma once

#include "ekr/vertex_set.hpp"

#include <vector>

namespace ekr {

// Members are kept sorted by the canonical VertexSet order with duplicates
// removed, so equal families compare equal member-for-member.
class Family {
public:
    Family() = default;

    explicit Family(int member_size);

    Family(int member_size, std::vector<VertexSet> members);

    int member_size() const { return member_size_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    const std::vector<VertexSet>& members() const { return members_; }
    const VertexSet& operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    bool contains(const VertexSet& s) const;

    bool operator==(const Family&) const = default;

private:
    int member_size_ = 0;
    std::vector<VertexSet> members_;
};

}  // namespace ekr
