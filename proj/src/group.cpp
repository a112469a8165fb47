#include "brauer/group.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <numeric>

namespace brauer {

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (table[a][b] != table[b][a])
                return false;
    return true;
}

void FiniteGroup::require_element(int x) const {
    if (x < 0 || x >= order)
        throw UnknownIdError("unknown group element " + std::to_string(x));
}

namespace {

void check_table(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    if (n == 0)
        throw GroupError("empty Cayley table");
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n)
            throw GroupError("row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n)
                throw GroupError("entry (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") out of range");
    }
    // Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[table[a][b]])
                throw GroupError("row " + std::to_string(a) + " repeats an element");
            row[table[a][b]] = true;
            if (col[table[b][a]])
                throw GroupError("column " + std::to_string(a) + " repeats an element");
            col[table[b][a]] = true;
        }
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool works = true;
        for (int x = 0; x < n && works; ++x)
            works = table[e][x] == x && table[x][e] == x;
        if (works) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        throw GroupError("table has no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw GroupError("associativity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b)
            found = table[a][b] == identity && table[b][a] == identity;
        if (!found)
            throw GroupError("element " + std::to_string(a) + " has no inverse");
    }
}

int find_identity(const std::vector<std::vector<int>>& table) {
    int n = static_cast<int>(table.size());
    for (int e = 0; e < n; ++e) {
        bool works = true;
        for (int x = 0; x < n && works; ++x)
            works = table[e][x] == x && table[x][e] == x;
        if (works)
            return e;
    }
    return -1;
}

} // namespace

FiniteGroup make_group(std::string name, std::vector<std::vector<int>> table,
                       std::vector<std::string> names) {
    check_table(table);
    int n = static_cast<int>(table.size());
    if (names.empty()) {
        for (int i = 0; i < n; ++i)
            names.push_back("g" + std::to_string(i));
    }
    if (static_cast<int>(names.size()) != n)
        throw GroupError("expected " + std::to_string(n) + " element names, got " +
                         std::to_string(names.size()));

    int e = find_identity(table);
    if (e != 0) {
        // Relabel by swapping 0 and the identity.
        auto perm = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
        std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
        std::vector<std::string> renames(n);
        for (int a = 0; a < n; ++a) {
            renames[perm(a)] = names[a];
            for (int b = 0; b < n; ++b)
                relabeled[perm(a)][perm(b)] = perm(table[a][b]);
        }
        table = std::move(relabeled);
        names = std::move(renames);
    }

    FiniteGroup g;
    g.name = std::move(name);
    g.order = n;
    g.table = std::move(table);
    g.element_names = std::move(names);
    g.inverse.assign(n, 0);
    g.element_order.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.table[a][b] == 0)
                g.inverse[a] = b;
        std::int64_t k = 1;
        int acc = a;
        while (acc != 0) {
            acc = g.table[acc][a];
            ++k;
        }
        g.element_order[a] = k;
    }
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw GroupError("cyclic group needs order >= 1");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return make_group("cyclic" + std::to_string(n), std::move(table), std::move(names));
}

FiniteGroup dihedral_group(int n) {
    if (n < 3)
        throw GroupError("dihedral group needs n >= 3");
    // Elements: rotations r^i (indexes 0..n-1), reflections s r^i (n..2n-1).
    int order = 2 * n;
    auto rot = [&](int i) { return ((i % n) + n) % n; };
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            bool ra = a < n, rb = b < n;
            int ia = ra ? a : a - n, ib = rb ? b : b - n;
            if (ra && rb)
                table[a][b] = rot(ia + ib);
            else if (ra && !rb)
                table[a][b] = n + rot(ib - ia);
            else if (!ra && rb)
                table[a][b] = n + rot(ia + ib);
            else
                table[a][b] = rot(ib - ia);
        }
    }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : "r" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        names.push_back("s" + std::to_string(i));
    return make_group("dihedral" + std::to_string(n), std::move(table), std::move(names));
}

namespace {

std::vector<std::vector<int>> permutations_of(int n, bool even_only) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (even_only) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (p[i] > p[j])
                        ++inversions;
            if (inversions % 2 != 0)
                continue;
        }
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

FiniteGroup permutation_group(const std::string& name, int n, bool even_only) {
    auto perms = permutations_of(n, even_only);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<int>(i);
    int m = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            std::vector<int> composed(n);
            for (int i = 0; i < n; ++i)
                composed[i] = perms[a][perms[b][i]];
            table[a][b] = index.at(composed);
        }
    }
    std::vector<std::string> names;
    for (const auto& p : perms) {
        std::string s;
        for (int v : p)
            s += std::to_string(v);
        names.push_back(s);
    }
    return make_group(name, std::move(table), std::move(names));
}

} // namespace

FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 5)
        throw GroupError("symmetric group supported for 1 <= n <= 5");
    return permutation_group("symmetric" + std::to_string(n), n, false);
}

FiniteGroup alternating_group(int n) {
    if (n < 1 || n > 5)
        throw GroupError("alternating group supported for 1 <= n <= 5");
    return permutation_group("alternating" + std::to_string(n), n, true);
}

FiniteGroup quaternion_group() {
    // Index = 2*basis + sign, basis in {1, i, j, k}, sign 0 for +, 1 for -.
    static const char* names_raw[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // basis multiplication: result basis and sign.
    static const int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int ba = a / 2, sa = a % 2;
            int bb = b / 2, sb = b % 2;
            int basis = basis_mul[ba][bb];
            int sign = (sa + sb + sign_mul[ba][bb]) % 2;
            table[a][b] = 2 * basis + sign;
        }
    }
    std::vector<std::string> names(names_raw, names_raw + 8);
    return make_group("quaternion8", std::move(table), std::move(names));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int xa = 0; xa < a.order; ++xa) {
        for (int ya = 0; ya < b.order; ++ya) {
            names[idx(xa, ya)] = "(" + a.element_names[xa] + "," + b.element_names[ya] + ")";
            for (int xb = 0; xb < a.order; ++xb)
                for (int yb = 0; yb < b.order; ++yb)
                    table[idx(xa, ya)][idx(xb, yb)] = idx(a.mul(xa, xb), b.mul(ya, yb));
        }
    }
    return make_group("(" + a.name + " x " + b.name + ")", std::move(table), std::move(names));
}

namespace {

FiniteGroup family_group(const std::string& family, int param) {
    if (family == "cyclic")
        return cyclic_group(param);
    if (family == "dihedral")
        return dihedral_group(param);
    if (family == "symmetric")
        return symmetric_group(param);
    if (family == "alternating")
        return alternating_group(param);
    if (family == "quaternion") {
        if (param != 8)
            throw GroupError("quaternion group has order 8");
        return quaternion_group();
    }
    throw ParseError("unknown group family '" + family + "'");
}

FiniteGroup group_from_json_doc(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ParseError("group spec must be a JSON object");
    if (doc.contains("family")) {
        std::string family = doc["family"].get<std::string>();
        if (family == "product") {
            if (!doc.contains("params") || !doc["params"].is_array() || doc["params"].size() != 2)
                throw ParseError("product needs exactly two factor specs");
            return direct_product(group_from_json_doc(doc["params"][0]),
                                  group_from_json_doc(doc["params"][1]));
        }
        if (family == "quaternion" && (!doc.contains("params") || doc["params"].empty()))
            return quaternion_group();
        if (!doc.contains("params"))
            throw ParseError("family '" + family + "' needs a params array");
        const auto& params = doc["params"];
        if (!params.is_array() || params.size() != 1 || !params[0].is_number_integer())
            throw ParseError("family '" + family + "' needs one integer parameter");
        return family_group(family, params[0].get<int>());
    }
    if (!doc.contains("table") || !doc["table"].is_array())
        throw ParseError("group spec needs \"family\" or \"table\"");
    std::vector<std::vector<int>> table;
    for (const auto& row : doc["table"]) {
        if (!row.is_array())
            throw ParseError("Cayley table rows must be arrays");
        table.push_back(row.get<std::vector<int>>());
    }
    if (doc.contains("order") && doc["order"].get<int>() != static_cast<int>(table.size()))
        throw ParseError("declared order does not match table size");
    std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "table";
    std::vector<std::string> names;
    if (doc.contains("names"))
        names = doc["names"].get<std::vector<std::string>>();
    return make_group(std::move(name), std::move(table), std::move(names));
}

FiniteGroup parse_spec(const std::vector<std::string>& tokens, std::size_t& pos);

int spec_int(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size())
        throw ParseError("group spec ended before a required integer");
    try {
        return std::stoi(tokens[pos++]);
    } catch (const std::exception&) {
        throw ParseError("expected an integer in group spec, got '" + tokens[pos - 1] + "'");
    }
}

FiniteGroup parse_spec(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size())
        throw ParseError("empty group spec");
    std::string head = tokens[pos++];
    if (head == "product") {
        FiniteGroup a = parse_spec(tokens, pos);
        FiniteGroup b = parse_spec(tokens, pos);
        return direct_product(a, b);
    }
    if (head == "quaternion") {
        if (pos < tokens.size() && tokens[pos] == "8")
            ++pos;
        return quaternion_group();
    }
    return family_group(head, spec_int(tokens, pos));
}

} // namespace

FiniteGroup group_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return group_from_json_doc(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed group spec: ") + e.what());
    }
}

FiniteGroup group_from_spec(const std::vector<std::string>& tokens) {
    std::size_t pos = 0;
    FiniteGroup g = parse_spec(tokens, pos);
    if (pos != tokens.size())
        throw ParseError("trailing tokens in group spec after '" + tokens[pos - 1] + "'");
    return g;
}

std::vector<FiniteGroup> verification_catalog() {
    std::vector<FiniteGroup> out;
    for (int n = 2; n <= 24; ++n)
        out.push_back(cyclic_group(n));
    for (int n = 3; n <= 6; ++n)
        out.push_back(dihedral_group(n));
    out.push_back(quaternion_group());
    out.push_back(symmetric_group(3));
    out.push_back(symmetric_group(4));
    out.push_back(alternating_group(4));
    out.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    out.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
    return out;
}

} // namespace brauer
