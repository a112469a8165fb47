#include "brauer/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brauer/numbers.hpp"

namespace brauer {

bool SubgroupLattice::contains(int subgroup_index, int element) const {
    const auto& s = subgroups[subgroup_index];
    return std::binary_search(s.begin(), s.end(), element);
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits empty_bits(int n) {
    return Bits((n + 63) / 64, 0);
}

bool get_bit(const Bits& b, int i) {
    return (b[i / 64] >> (i % 64)) & 1;
}

void set_bit(Bits& b, int i) {
    b[i / 64] |= std::uint64_t{1} << (i % 64);
}

// Elements of the subgroup generated by `gens`: every product of generators,
// collected by breadth-first right multiplication from the identity.
Bits generate(const FiniteGroup& g, const std::vector<int>& gens) {
    Bits bits = empty_bits(g.order);
    std::vector<int> frontier{0};
    set_bit(bits, 0);
    while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int s : gens) {
            int y = g.mul(x, s);
            if (!get_bit(bits, y)) {
                set_bit(bits, y);
                frontier.push_back(y);
            }
        }
    }
    return bits;
}

std::vector<int> bits_to_elements(const Bits& bits, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (get_bit(bits, i))
            out.push_back(i);
    return out;
}

} // namespace

SubgroupLattice subgroup_lattice(const FiniteGroup& g, int order_bound) {
    if (g.order > order_bound)
        throw PreconditionError("group order " + std::to_string(g.order) +
                                " exceeds the enumeration bound " + std::to_string(order_bound));

    std::map<Bits, std::vector<int>> found;  // element bitset -> generating set
    std::vector<Bits> queue;

    for (int x = 0; x < g.order; ++x) {
        Bits bits = generate(g, {x});
        if (found.emplace(bits, std::vector<int>{x}).second)
            queue.push_back(bits);
    }

    while (!queue.empty()) {
        Bits current = queue.back();
        queue.pop_back();
        std::vector<int> gens = found.at(current);
        for (int x = 0; x < g.order; ++x) {
            if (get_bit(current, x))
                continue;
            std::vector<int> extended = gens;
            extended.push_back(x);
            Bits bigger = generate(g, extended);
            if (found.emplace(bigger, std::move(extended)).second)
                queue.push_back(bigger);
        }
    }

    SubgroupLattice lattice;
    for (const auto& [bits, gens] : found)
        lattice.subgroups.push_back(bits_to_elements(bits, g.order));
    std::sort(lattice.subgroups.begin(), lattice.subgroups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });

    lattice.member_of.assign(g.order, {});
    for (int s = 0; s < lattice.count(); ++s)
        for (int x : lattice.subgroups[s])
            lattice.member_of[x].push_back(s);
    return lattice;
}

std::int64_t occurrence(const FiniteGroup& g, const SubgroupLattice& l, int element) {
    g.require_element(element);
    return l.occurrence(element);
}

bool PropertyReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.holds; });
}

PropertyReport occurrence_properties(const FiniteGroup& g, const SubgroupLattice& l) {
    PropertyReport report;

    bool trivial = g.order == 1;
    report.clauses.push_back({"trivial_iff_single_subgroup", trivial == (l.occurrence(0) == 1),
                              "occ(e) = " + std::to_string(l.occurrence(0))});

    bool cyclic = false;
    for (int x = 0; x < g.order; ++x)
        if (g.element_order[x] == g.order)
            cyclic = true;
    bool has_unit_occ = false;
    for (int x = 0; x < g.order; ++x)
        if (l.occurrence(x) == 1)
            has_unit_occ = true;
    report.clauses.push_back({"cyclic_iff_unit_occurrence", cyclic == has_unit_occ,
                              cyclic ? "cyclic" : "not cyclic"});

    bool inverse_symmetric = true;
    for (int x = 0; x < g.order; ++x)
        if (l.occurrence(x) != l.occurrence(g.inv(x)))
            inverse_symmetric = false;
    report.clauses.push_back({"inverse_symmetry", inverse_symmetric, ""});

    bool prime = is_prime(g.order);
    report.clauses.push_back({"prime_iff_two_subgroups", prime == (l.occurrence(0) == 2),
                              "order " + std::to_string(g.order)});

    bool identity_unique_max = true;
    for (int x = 1; x < g.order; ++x)
        if (l.occurrence(x) == l.occurrence(0))
            identity_unique_max = false;
    report.clauses.push_back({"identity_unique_max_occurrence", identity_unique_max, ""});

    return report;
}

std::string lattice_text(const FiniteGroup& g, const SubgroupLattice& l) {
    std::ostringstream out;
    out << "group: " << g.name << "  order: " << g.order << "  subgroups: " << l.count() << "\n";
    for (int s = 0; s < l.count(); ++s) {
        out << "H" << (s + 1) << " = {";
        for (std::size_t i = 0; i < l.subgroups[s].size(); ++i) {
            if (i)
                out << ", ";
            out << g.element_names[l.subgroups[s][i]];
        }
        out << "}\n";
    }
    out << occurrence_table_text(g, l);
    return out.str();
}

std::string occurrence_table_text(const FiniteGroup& g, const SubgroupLattice& l) {
    std::vector<std::size_t> widths(g.order);
    for (int x = 0; x < g.order; ++x)
        widths[x] = std::max(g.element_names[x].size(),
                             std::to_string(l.occurrence(x)).size());
    std::ostringstream top, bottom;
    top << "x      :";
    bottom << "occ(x) :";
    for (int x = 0; x < g.order; ++x) {
        std::string name = g.element_names[x];
        std::string count = std::to_string(l.occurrence(x));
        top << " " << std::string(widths[x] - name.size(), ' ') << name;
        bottom << " " << std::string(widths[x] - count.size(), ' ') << count;
    }
    return top.str() + "\n" + bottom.str() + "\n";
}

} // namespace brauer
