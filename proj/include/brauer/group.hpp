#ifndef BRAUER_GROUP_HPP
#define BRAUER_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "brauer/common.hpp"

namespace brauer {

// Finite group as a Cayley table. The identity always sits at index 0;
// construction verifies the axioms exhaustively and fills inverses and
// element orders. Immutable once built.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    std::vector<std::string> element_names;
    std::vector<int> inverse;
    std::vector<std::int64_t> element_order;

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    bool is_abelian() const;
    void require_element(int x) const;  // throws UnknownIdError
};

// Validates the table (identity, Latin square, inverses, associativity --
// the error names the first failing triple), relabels so the identity is
// index 0, and derives the cached data. Element names default to "g0".."gN".
FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table,
                       std::vector<std::string> names = {});

FiniteGroup cyclic_group(int n);       // n >= 1
FiniteGroup dihedral_group(int n);     // order 2n, n >= 3
FiniteGroup symmetric_group(int n);    // 1 <= n <= 5
FiniteGroup alternating_group(int n);  // 1 <= n <= 5
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// JSON forms (see README):
//   { "name": str, "order": n, "table": [[int...]...], "names": [str...]? }
//   { "family": "cyclic"|"dihedral"|"symmetric"|"alternating"|"quaternion", "params": [n] }
//   { "family": "product", "params": [<spec>, <spec>] }
FiniteGroup group_from_json(const std::string& text);

// CLI token form: "cyclic 12", "quaternion", "product cyclic 2 cyclic 4", ...
FiniteGroup group_from_spec(const std::vector<std::string>& tokens);

// The fixed set of groups the verification sweeps run over: cyclic orders
// 2..24, dihedral 3..6, the quaternion group, S3, S4, A4, and the two small
// abelian products.
std::vector<FiniteGroup> verification_catalog();

} // namespace brauer

#endif // BRAUER_GROUP_HPP
