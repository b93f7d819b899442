#include "ekr/reporting.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ekr {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json rat_json(const Rat& q) { return rat_str(q); }
Json int_json(const Int& z) { return z.get_str(); }

}  // namespace

std::string tool_version() { return "0.1.0"; }

std::string iso_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string kind_name(GraphKind kind) {
    return kind == GraphKind::P3Union ? "paths" : "claws";
}

std::string type_name(SetType type) {
    switch (type) {
        case SetType::TypeI: return "I";
        case SetType::TypeII: return "II";
        case SetType::TypeIII: return "III";
    }
    throw std::invalid_argument("unknown set type");
}

Json set_to_json(const VertexSet& s) {
    Json out = Json::array();
    s.for_each([&](int v) { out.push_back(v + 1); });
    return out;
}

VertexSet set_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("set must be an array of 1-based ids");
    VertexSet out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument("set entries must be integers");
        const long long id = e.get<long long>();
        if (id < 1 || id > VertexSet::capacity)
            throw std::invalid_argument("set entry out of range");
        out.set(static_cast<int>(id - 1));
    }
    return out;
}

Json family_to_json(const Family& f) {
    Json members = Json::array();
    for (const auto& m : f.members()) members.push_back(set_to_json(m));
    return Json{{"member_size", f.member_size()}, {"size", f.size()}, {"members", members}};
}

Family family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("member_size") || !j.contains("members"))
        throw std::invalid_argument("family needs member_size and members");
    std::vector<VertexSet> members;
    for (const auto& e : j.at("members")) members.push_back(set_from_json(e));
    return Family(j.at("member_size").get<int>(), std::move(members));
}

std::string set_names(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ", ";
        out += g.vertex_name(v);
        first = false;
    });
    return out + "}";
}

Json to_json(const Graph& g) {
    return Json{{"kind", kind_name(g.kind)},
                {"n", g.n},
                {"k", g.k},
                {"vertex_count", g.vertex_count}};
}

Json to_json(const ShiftReport& r) {
    return Json{{"input_size", r.input_size},
                {"output_size", r.output_size},
                {"is_shifted", r.is_shifted},
                {"l_intersecting", r.l_intersecting},
                {"passes", r.passes}};
}

Json to_json(const CycleFamily& f) {
    Json members = Json::array();
    for (const auto& m : f.members)
        members.push_back(Json{{"side", m.side}, {"j", m.j}, {"set", set_to_json(m.set)}});
    return Json{{"n", f.n},
                {"t", f.t},
                {"u", f.u},
                {"members", members},
                {"distinct_count", f.distinct.size()}};
}

Json to_json(const CycleBoundReport& r) {
    return Json{{"regime", r.regime},
                {"n", r.n},
                {"t", r.t},
                {"u", r.u},
                {"family_size", r.family_size},
                {"expected_family_size", r.expected_family_size},
                {"max_intersecting", r.max_intersecting},
                {"bound", r.bound},
                {"sizes_ok", r.sizes_ok},
                {"bound_ok", r.bound_ok},
                {"tight_ok", r.tight_ok},
                {"pairing_ok", r.pairing_ok},
                {"pass", r.pass}};
}

Json to_json(const PatternFamily& pf) {
    Json patterns = Json::array();
    for (const auto& wp : pf.patterns)
        patterns.push_back(Json{{"s", wp.pattern.s},
                                {"t", wp.pattern.t},
                                {"u", wp.pattern.u},
                                {"side", wp.pattern.side},
                                {"paired", wp.paired},
                                {"f", rat_json(wp.f)},
                                {"h", rat_json(wp.h)}});
    return Json{{"n", pf.n}, {"r", pf.r}, {"s", pf.s}, {"patterns", patterns}};
}

Json to_json(const ExactDistribution& d) {
    Json masses = Json::array();
    for (const auto& [set, mass] : d.masses)
        masses.push_back(Json{{"set", set_to_json(set)}, {"mass", rat_json(mass)}});
    Json offenders = Json::array();
    for (const auto& set : d.offenders) offenders.push_back(set_to_json(set));
    return Json{{"n", d.n},
                {"r", d.r},
                {"s", d.s},
                {"stratum_size", int_json(d.stratum_size)},
                {"expected_mass", rat_json(d.expected_mass)},
                {"uniform", d.uniform},
                {"masses", masses},
                {"offenders", offenders}};
}

Json to_json(const IntermediateProbability& p) {
    return Json{{"k1", p.k1},
                {"k2", p.k2},
                {"type", type_name(p.type)},
                {"sigma_count_leaf", int_json(p.sigma_count_leaf)},
                {"sigma_count_joint", int_json(p.sigma_count_joint)},
                {"leaf_prob", rat_json(p.leaf_prob)},
                {"leaf_prob_closed", rat_json(p.leaf_prob_closed)},
                {"centre_prob_cond", rat_json(p.centre_prob_cond)},
                {"centre_prob_closed", rat_json(p.centre_prob_closed)},
                {"point_prob", rat_json(p.point_prob)},
                {"expected_point_prob", rat_json(p.expected_point_prob)},
                {"shift_independent", p.shift_independent},
                {"pass", p.pass}};
}

Json to_json(const EkrVerdict& v) {
    return Json{{"kind", kind_name(v.kind)},
                {"n", v.n},
                {"k", v.k},
                {"r", v.r},
                {"max_intersecting", v.max_intersecting},
                {"star_size", v.star_size},
                {"is_ekr", v.is_ekr},
                {"witness", family_to_json(v.witness)},
                {"reduced", v.reduced},
                {"reduced_size", v.reduced_size},
                {"best_star_all", v.best_star_all},
                {"best_star_vertex", v.best_star_vertex + 1},
                {"leaf_star_maximal", v.leaf_star_maximal},
                {"nodes", v.nodes},
                {"millis", v.millis}};
}

Json to_json(const ScanRow& row) {
    return Json{{"kind", kind_name(row.kind)},
                {"n", row.n},
                {"k", row.k},
                {"r", row.r},
                {"status", row.status},
                {"max_intersecting", row.max_intersecting},
                {"star_size", row.star_size},
                {"is_ekr", row.is_ekr},
                {"nodes", row.nodes},
                {"millis", row.millis},
                {"note", row.note}};
}

Json to_json(const ChvatalVerdict& v) {
    Json witness = Json::array();
    for (const auto& set : v.witness) witness.push_back(set_to_json(set));
    return Json{{"n", v.n},
                {"r", v.r},
                {"family_size", v.family_size},
                {"max_intersecting", v.max_intersecting},
                {"largest_star", v.largest_star},
                {"star_vertex", v.star_vertex + 1},
                {"star_maximal", v.star_maximal},
                {"witness", witness},
                {"nodes", v.nodes},
                {"millis", v.millis}};
}

Json make_report(const std::string& command, Json config, Json result, bool pass) {
    return Json{{"tool", "ekrtool"},
                {"version", tool_version()},
                {"timestamp", iso_timestamp_utc()},
                {"command", command},
                {"config", std::move(config)},
                {"result", std::move(result)},
                {"pass", pass}};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "kind,n,k,r,status,max_intersecting,star_size,is_ekr,nodes,millis,note\n";
    for (const auto& row : rows) {
        out << kind_name(row.kind) << ',' << row.n << ',' << row.k << ',' << row.r << ','
            << row.status << ',' << row.max_intersecting << ',' << row.star_size << ','
            << (row.is_ekr ? "true" : "false") << ',' << row.nodes << ',' << std::fixed
            << std::setprecision(3) << row.millis << ',' << row.note << '\n';
    }
    return out.str();
}

std::string shift_text(const ShiftReport& r) {
    std::ostringstream out;
    out << "input " << r.input_size << " -> output " << r.output_size << ", passes " << r.passes
        << ", shifted " << yes_no(r.is_shifted) << ", L-intersecting "
        << yes_no(r.l_intersecting);
    return out.str();
}

std::string cycle_family_text(const Graph& g, const CycleFamily& f) {
    std::ostringstream out;
    out << "cycle family n=" << f.n << " t=" << f.t << " u=" << f.u << " ("
        << f.distinct.size() << " distinct of " << f.members.size() << ")\n";
    const int two_n = 2 * f.n;
    for (int j = 1; j <= two_n; ++j) {
        std::string left, right;
        for (const auto& m : f.members) {
            if (m.j != j) continue;
            (m.side == 1 ? left : right) = set_names(g, m.set);
        }
        out << "  j=" << std::setw(2) << j << "  C1: " << left;
        if (!right.empty()) out << "  C2: " << right;
        out << '\n';
    }
    return out.str();
}

std::string cycle_bound_text(const CycleBoundReport& r) {
    std::ostringstream out;
    out << "regime " << r.regime << "  n=" << r.n << " t=" << r.t << " u=" << r.u << "  family "
        << r.family_size << "/" << r.expected_family_size << "  max intersecting "
        << r.max_intersecting << " <= " << r.bound;
    if (r.regime == 1) out << (r.tight_ok ? " (tight)" : " (NOT tight)");
    if (r.regime == 3) out << (r.pairing_ok ? "  pairing ok" : "  PAIRING FAILED");
    out << "  " << (r.pass ? "pass" : "FAIL");
    return out.str();
}

std::string distribution_text(const ExactDistribution& d) {
    std::ostringstream out;
    out << "stratum (n, r, s) = (" << d.n << ", " << d.r << ", " << d.s << "): "
        << d.stratum_size.get_str() << " sets, expected mass " << rat_str(d.expected_mass)
        << ", uniform " << yes_no(d.uniform);
    if (!d.offenders.empty()) out << ", " << d.offenders.size() << " offenders";
    return out.str();
}

std::string ekr_text(const Graph& g, const EkrVerdict& v) {
    std::ostringstream out;
    out << kind_name(v.kind) << " n=" << v.n;
    if (v.kind == GraphKind::KClawUnion) out << " k=" << v.k;
    out << " r=" << v.r << ": max intersecting " << v.max_intersecting << ", best star "
        << v.best_star_all << " (at " << g.vertex_name(v.best_star_vertex) << "), leaf star "
        << v.star_size << " -> " << (v.is_ekr ? "EKR holds" : "EKR FAILS");
    if (v.reduced) out << " [reduced search agreed: " << v.reduced_size << "]";
    if (!v.is_ekr && v.witness.size() > 0) {
        out << "\n  witness:";
        for (const auto& m : v.witness.members()) out << ' ' << set_names(g, m);
    }
    return out.str();
}

std::string scan_text(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "kind" << std::right << std::setw(4) << "n" << std::setw(4)
        << "k" << std::setw(4) << "r" << "  " << std::left << std::setw(8) << "status" << std::right
        << std::setw(6) << "max" << std::setw(6) << "star" << "  ekr\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(7) << kind_name(row.kind) << std::right << std::setw(4)
            << row.n << std::setw(4) << row.k << std::setw(4) << row.r << "  " << std::left
            << std::setw(8) << row.status << std::right << std::setw(6) << row.max_intersecting
            << std::setw(6) << row.star_size << "  "
            << (row.status == "ok" ? (row.is_ekr ? "yes" : "NO") : "-");
        if (!row.note.empty()) out << "  (" << row.note << ")";
        out << '\n';
    }
    return out.str();
}

std::string chvatal_text(const Graph& g, const ChvatalVerdict& v) {
    std::ostringstream out;
    out << "hereditary family n=" << v.n << " r<=" << v.r << ": " << v.family_size
        << " sets, max intersecting " << v.max_intersecting << ", largest star "
        << v.largest_star << " (at " << g.vertex_name(v.star_vertex) << ") -> star "
        << (v.star_maximal ? "maximal" : "NOT maximal");
    return out.str();
}

}  // namespace ekr
