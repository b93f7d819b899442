#include "ekr/shifting.hpp"

#include <stdexcept>
#include <vector>

namespace ekr {

namespace {

void require_paths(const Graph& g) {
    if (g.k != 2) throw std::invalid_argument("shifting requires a union of paths");
}

void require_independent_members(const Graph& g, const Family& f) {
    for (const auto& m : f.members())
        if (!is_independent(g, m)) throw std::invalid_argument("family member is not independent");
}

}  // namespace

VertexSet phi_point(const Graph& g, const VertexSet& a, int i) {
    require_paths(g);
    g.check_component(i);
    if (!is_independent(g, a)) throw std::invalid_argument("set must be independent");
    if (!a.test(g.y(i))) return a;
    VertexSet b = a;
    b.reset(g.y(i));
    b.set(g.x(i));  // x_i cannot already be present: it is adjacent to y_i
    return b;
}

Family shift_once(const Graph& g, const Family& f, int i) {
    require_paths(g);
    g.check_component(i);
    require_independent_members(g, f);
    std::vector<VertexSet> out;
    out.reserve(f.members().size());
    for (const auto& a : f.members()) {
        const VertexSet pa = phi_point(g, a, i);
        if (pa == a || f.contains(pa))
            out.push_back(a);
        else
            out.push_back(pa);
    }
    Family result(f.member_size(), std::move(out));
    if (result.size() != f.size())
        throw std::logic_error("compression changed the family size");
    return result;
}

std::pair<Family, ShiftReport> shift_full(const Graph& g, const Family& f) {
    require_paths(g);
    require_independent_members(g, f);
    const auto& ms = f.members();
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a; b < ms.size(); ++b)
            if (!(ms[a] & ms[b]).count()) throw non_intersecting_error(ms[a], ms[b]);

    ShiftReport report;
    report.input_size = f.size();
    Family current = f;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= g.n; ++i) {
            Family next = shift_once(g, current, i);
            ++report.passes;
            if (!(next == current)) {
                current = std::move(next);
                changed = true;
            }
        }
    }
    report.output_size = current.size();
    report.is_shifted = is_shifted(g, current);
    report.l_intersecting = is_l_intersecting(g, current);
    return {std::move(current), report};
}

bool is_shifted(const Graph& g, const Family& f) {
    require_paths(g);
    require_independent_members(g, f);
    for (const auto& a : f.members())
        for (int i = 1; i <= g.n; ++i)
            if (a.test(g.y(i)) && !f.contains(phi_point(g, a, i))) return false;
    return true;
}

bool is_intersecting(const Family& f) {
    const auto& ms = f.members();
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a; b < ms.size(); ++b)
            if (!ms[a].intersects(ms[b])) return false;  // a == b catches empty members
    return true;
}

bool is_l_intersecting(const Graph& g, const Family& f) {
    const auto& ms = f.members();
    for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a; b < ms.size(); ++b)
            if (!(ms[a] & ms[b]).intersects(g.leaves)) return false;
    return true;
}

}  // namespace ekr
