#ifndef BRAUER_RELATIONS_HPP
#define BRAUER_RELATIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/quiver.hpp"

namespace brauer {

enum class RelationKind { TypeOne, TypeTwo, TypeThree };

struct CycleTerm {
    SpecialCycle cycle;
    std::int64_t exponent = 1;  // the multiplicity of the cycle's owner
};

// Formal relation over quiver paths. TypeOne holds two anchored cycle terms
// with an implicit minus between them; TypeTwo one term with its first arrow
// appended (arrow_a); TypeThree the ordered composable pair (arrow_a, arrow_b).
struct Relation {
    RelationKind kind;
    std::vector<CycleTerm> terms;
    int arrow_a = -1;
    int arrow_b = -1;
};

struct RelationSet {
    std::vector<Relation> type_one;
    std::vector<Relation> type_two;
    std::vector<Relation> type_three;
    std::size_t total() const { return type_one.size() + type_two.size() + type_three.size(); }
};

// For every polygon, all unordered pairs of distinct special cycles anchored
// at its quiver vertex, each raised to its owner's multiplicity. Pairs with
// the same owner but different anchor occurrences are included.
std::vector<Relation> relations_type_one(const Quiver& q);

// One relation per special cycle: the cycle to its owner's multiplicity
// followed by the cycle's first arrow. Count always equals the arrow count.
std::vector<Relation> relations_type_two(const Quiver& q);

// All composable arrow pairs that are not cyclically consecutive inside
// their owner's cycle (equivalently: not a 2-arrow subpath, wraparound
// included, of any special cycle).
std::vector<Relation> relations_type_three(const Quiver& q);

RelationSet relations(const Quiver& q);

// Text form, one relation per line:
//   T1: (a1_2 a1_3 a1_4 a1_1)^2 - (a3_3 a3_1 a3_2)^1
//   T2: (a1_1 a1_2 a1_3 a1_4)^2 a1_1
//   T3: a1_1 a2_2
std::string relation_text(const Quiver& q, const Relation& r);
std::string relations_text(const Quiver& q, const RelationSet& rs);

} // namespace brauer

#endif // BRAUER_RELATIONS_HPP
