#ifndef WEYLSECT_TABLES_HPP
#define WEYLSECT_TABLES_HPP

#include "analysis.hpp"

#include <string>
#include <vector>

namespace weylsect {

/// One expected classification row.  Fixed rows list the complete profile
/// set; family rows expect the uniform c*j ladder (plus the all-infinite
/// profile from generic parameters), with j = 1, 2, 3 required present.
struct TableRow {
    std::string label;
    char type;
    int rank;
    IsogenyTag iso;
    bool is_family = false;
    long long family_mult = 0;
    std::vector<std::vector<long long>> fixed;
};

namespace detail {

inline std::vector<long long> uniform(int n, long long v) {
    return std::vector<long long>(static_cast<size_t>(n), v);
}

inline std::vector<long long> uniform_except_last(int n, long long v, long long last) {
    auto r = uniform(n, v);
    r.back() = last;
    return r;
}

} // namespace detail

inline std::vector<TableRow> summary_rows() {
    using detail::uniform;
    using detail::uniform_except_last;
    std::vector<TableRow> rows;
    auto family = [&](std::string label, char t, int n, IsogenyTag iso, long long c) {
        rows.push_back({std::move(label), t, n, iso, true, c, {}});
    };
    auto fixed = [&](std::string label, char t, int n, IsogenyTag iso,
                     std::vector<std::vector<long long>> ps) {
        rows.push_back({std::move(label), t, n, iso, false, 0, std::move(ps)});
    };

    family("A7 sc (n odd)", 'A', 7, IsogenyTag::sc(), 4);
    family("A6 sc (n even)", 'A', 6, IsogenyTag::sc(), 2);
    family("A7 middle a=2 (a even)", 'A', 7, IsogenyTag::middle(2), 4);
    family("A7 middle a=4 (a even)", 'A', 7, IsogenyTag::middle(4), 4);
    // No a-odd middle isogeny exists at ranks 6-7 (8 has no odd divisor in
    // range, 7 is prime); the smallest instance of that row is A5, a=3.
    family("A5 middle a=3 (a odd)", 'A', 5, IsogenyTag::middle(3), 2);
    family("A6 adjoint", 'A', 6, IsogenyTag::adjoint(), 2);
    family("A7 adjoint", 'A', 7, IsogenyTag::adjoint(), 2);

    fixed("B6 sc (n even)", 'B', 6, IsogenyTag::sc(),
          {uniform_except_last(6, 4, 2), uniform(6, 4)});
    fixed("B7 sc (n odd)", 'B', 7, IsogenyTag::sc(), {uniform(7, 4)});
    fixed("B6 adjoint", 'B', 6, IsogenyTag::adjoint(),
          {uniform(6, 2), uniform_except_last(6, 4, 2)});
    fixed("B7 adjoint", 'B', 7, IsogenyTag::adjoint(),
          {uniform(7, 2), uniform_except_last(7, 4, 2)});

    fixed("C6 sc", 'C', 6, IsogenyTag::sc(),
          {uniform_except_last(6, 2, 4), uniform(6, 4)});
    fixed("C7 sc", 'C', 7, IsogenyTag::sc(),
          {uniform_except_last(7, 2, 4), uniform(7, 4)});
    fixed("C6 adjoint", 'C', 6, IsogenyTag::adjoint(),
          {uniform_except_last(6, 2, 4), uniform(6, 4)});
    fixed("C7 adjoint", 'C', 7, IsogenyTag::adjoint(),
          {uniform_except_last(7, 2, 4), uniform(7, 4)});

    fixed("D6 sc", 'D', 6, IsogenyTag::sc(), {uniform(6, 4)});
    fixed("D7 sc", 'D', 7, IsogenyTag::sc(), {uniform(7, 4)});
    fixed("D6 coweight w1", 'D', 6, IsogenyTag::coweight(1),
          {uniform(6, 2), uniform(6, 4)});
    fixed("D7 coweight w1", 'D', 7, IsogenyTag::coweight(1),
          {uniform(7, 2), uniform(7, 4)});
    fixed("D6 coweight w5", 'D', 6, IsogenyTag::coweight(5), {uniform(6, 4)});
    fixed("D6 coweight w6", 'D', 6, IsogenyTag::coweight(6), {uniform(6, 4)});
    fixed("D6 adjoint", 'D', 6, IsogenyTag::adjoint(),
          {uniform(6, 2), uniform(6, 4)});
    fixed("D7 adjoint", 'D', 7, IsogenyTag::adjoint(),
          {uniform(7, 2), uniform(7, 4)});

    fixed("F4", 'F', 4, IsogenyTag::sc(), {{4, 4, 2, 2}, {4, 4, 4, 4}});
    fixed("G2", 'G', 2, IsogenyTag::sc(), {{2, 2}, {2, 4}, {4, 2}, {4, 4}});
    fixed("E8", 'E', 8, IsogenyTag::sc(), {uniform(8, 4)});
    fixed("E7 sc", 'E', 7, IsogenyTag::sc(), {uniform(7, 4)});
    fixed("E7 adjoint", 'E', 7, IsogenyTag::adjoint(), {uniform(7, 4)});
    fixed("E6 sc", 'E', 6, IsogenyTag::sc(), {uniform(6, 4), uniform(6, 12)});
    fixed("E6 adjoint", 'E', 6, IsogenyTag::adjoint(), {uniform(6, 4)});
    return rows;
}

inline std::vector<TableRow> lowrank_rows() {
    using detail::uniform;
    std::vector<TableRow> rows;
    rows.push_back({"A1 sc", 'A', 1, IsogenyTag::sc(), false, 0, {uniform(1, 4)}});
    rows.push_back({"A1 adjoint", 'A', 1, IsogenyTag::adjoint(), false, 0, {uniform(1, 2)}});
    rows.push_back({"D3 sc", 'D', 3, IsogenyTag::sc(), true, 4, {}});
    rows.push_back({"D3 adjoint", 'D', 3, IsogenyTag::adjoint(), true, 2, {}});
    rows.push_back({"D3 coweight w1", 'D', 3, IsogenyTag::coweight(1), true, 2, {}});
    rows.push_back({"D4 coweight w4", 'D', 4, IsogenyTag::coweight(4), false, 0,
                    {uniform(4, 2), uniform(4, 4)}});
    rows.push_back({"D4 coweight w3", 'D', 4, IsogenyTag::coweight(3), false, 0,
                    {uniform(4, 2), uniform(4, 4)}});
    return rows;
}

struct RowResult {
    std::string label;
    bool pass = false;
    std::string message;
};

inline std::vector<std::vector<long long>> computed_profiles(char type, int rank,
                                                             const IsogenyTag& iso,
                                                             long long modulus) {
    auto sys = build_root_system(type, rank);
    auto lat = build_lattice(sys, iso);
    auto fam = solve_constraints(generate_constraints(lat, modulus));
    auto prof = enumerate_profiles(fam);
    std::vector<std::vector<long long>> out;
    for (const auto& e : prof.entries)
        out.push_back(e.profile.orders);
    return out;
}

inline std::string profile_list_str(const std::vector<std::vector<long long>>& ps) {
    std::string s;
    for (const auto& p : ps) {
        s += OrderProfile{p}.str();
        s += " ";
    }
    return s;
}

inline RowResult verify_row(const TableRow& row, long long modulus = 24) {
    RowResult res;
    res.label = row.label;
    std::vector<std::vector<long long>> got;
    try {
        got = computed_profiles(row.type, row.rank, row.iso, modulus);
    } catch (const std::exception& ex) {
        res.message = std::string("computation failed: ") + ex.what();
        return res;
    }
    if (!row.is_family) {
        auto expect = row.fixed;
        std::sort(expect.begin(), expect.end(),
                  [](auto& a, auto& b) { return OrderProfile{a} < OrderProfile{b}; });
        if (got == expect) {
            res.pass = true;
        } else {
            res.message = "expected " + profile_list_str(expect) + "but computed " +
                          profile_list_str(got);
        }
        return res;
    }
    // Family row: besides the all-infinite profile of generic parameters,
    // every profile must be uniform c*j, and j = 1, 2, 3 must occur.
    const long long c = row.family_mult;
    std::vector<bool> seen(4, false);
    for (const auto& p : got) {
        OrderProfile op{p};
        bool inf = !op.all_finite();
        if (inf) {
            for (long long v : p)
                if (v != 0) {
                    res.message = "mixed finite/infinite profile " + op.str();
                    return res;
                }
            continue;
        }
        if (!op.uniform() || p[0] % c != 0 || p[0] == 0) {
            res.message = "profile " + op.str() + " is not of the form uniform(" +
                          std::to_string(c) + "j)";
            return res;
        }
        long long j = p[0] / c;
        if (j >= 1 && j <= 3)
            seen[j] = true;
    }
    for (long long j = 1; j <= 3; ++j)
        if (!seen[j]) {
            res.message = "uniform(" + std::to_string(c) + "*" + std::to_string(j) +
                          ") not realized at modulus " + std::to_string(modulus);
            return res;
        }
    res.pass = true;
    return res;
}

inline std::vector<RowResult> verify_rows(const std::vector<TableRow>& rows,
                                          long long modulus = 24) {
    std::vector<RowResult> out;
    for (const auto& r : rows)
        out.push_back(verify_row(r, modulus));
    return out;
}

} // namespace weylsect

#endif
