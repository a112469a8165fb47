#include "brauer/relations.hpp"

#include <set>
#include <sstream>

namespace brauer {

namespace {

// Cycles anchored at the polygon with the given index, owners ascending,
// start positions ascending within one owner.
std::vector<CycleTerm> anchored_cycles(const Quiver& q, int polygon_index) {
    const Configuration& cfg = q.config();
    std::vector<CycleTerm> out;
    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        if (is_truncated(cfg, v))
            continue;
        if (cfg.polygons[polygon_index].count_of(v) == 0)
            continue;
        for (auto& c : q.special_cycles_at(v, cfg.polygons[polygon_index].id))
            out.push_back({std::move(c), cfg.multiplicity[v]});
    }
    return out;
}

std::pair<int, int> cycle_key(const CycleTerm& t) {
    return {t.cycle.owner, t.cycle.start};
}

} // namespace

std::vector<Relation> relations_type_one(const Quiver& q) {
    std::vector<Relation> out;
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
    for (int p = 0; p < q.config().polygon_count(); ++p) {
        auto cycles = anchored_cycles(q, p);
        for (std::size_t i = 0; i < cycles.size(); ++i) {
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                std::pair<int, int> a = cycle_key(cycles[i]);
                std::pair<int, int> b = cycle_key(cycles[j]);
                if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                    continue;
                Relation r;
                r.kind = RelationKind::TypeOne;
                r.terms = {cycles[i], cycles[j]};
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<Relation> relations_type_two(const Quiver& q) {
    const Configuration& cfg = q.config();
    std::vector<Relation> out;
    for (VertexId v = 0; v < cfg.vertex_count(); ++v) {
        for (auto& c : q.special_cycles(v)) {
            Relation r;
            r.kind = RelationKind::TypeTwo;
            r.arrow_a = c.arrows.front();
            r.terms = {{std::move(c), cfg.multiplicity[v]}};
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Relation> relations_type_three(const Quiver& q) {
    std::vector<Relation> out;
    for (const Arrow& a : q.arrows()) {
        for (const Arrow& b : q.arrows()) {
            if (a.target != b.source)
                continue;
            int t = static_cast<int>(q.arrows_of(a.owner).size());
            bool consecutive = a.owner == b.owner && b.position == a.position % t + 1;
            if (consecutive)
                continue;
            Relation r;
            r.kind = RelationKind::TypeThree;
            r.arrow_a = a.id;
            r.arrow_b = b.id;
            out.push_back(std::move(r));
        }
    }
    return out;
}

RelationSet relations(const Quiver& q) {
    return {relations_type_one(q), relations_type_two(q), relations_type_three(q)};
}

namespace {

std::string cycle_text(const Quiver& q, const CycleTerm& term) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < term.cycle.arrows.size(); ++i) {
        if (i)
            out << " ";
        out << q.arrow_name(term.cycle.arrows[i]);
    }
    out << ")^" << term.exponent;
    return out.str();
}

} // namespace

std::string relation_text(const Quiver& q, const Relation& r) {
    std::ostringstream out;
    switch (r.kind) {
        case RelationKind::TypeOne:
            out << "T1: " << cycle_text(q, r.terms[0]) << " - " << cycle_text(q, r.terms[1]);
            break;
        case RelationKind::TypeTwo:
            out << "T2: " << cycle_text(q, r.terms[0]) << " " << q.arrow_name(r.arrow_a);
            break;
        case RelationKind::TypeThree:
            out << "T3: " << q.arrow_name(r.arrow_a) << " " << q.arrow_name(r.arrow_b);
            break;
    }
    return out.str();
}

std::string relations_text(const Quiver& q, const RelationSet& rs) {
    std::ostringstream out;
    for (const auto& r : rs.type_one)
        out << relation_text(q, r) << "\n";
    for (const auto& r : rs.type_two)
        out << relation_text(q, r) << "\n";
    for (const auto& r : rs.type_three)
        out << relation_text(q, r) << "\n";
    return out.str();
}

} // namespace brauer
