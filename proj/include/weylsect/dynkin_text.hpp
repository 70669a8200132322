#ifndef WEYLSECT_DYNKIN_TEXT_HPP
#define WEYLSECT_DYNKIN_TEXT_HPP

#include "rootsys.hpp"

#include <string>
#include <vector>

namespace weylsect {

/// Text Dynkin diagram in Bourbaki node order, one label per node.
/// Double bonds are drawn as ==> / <== pointing at the short root; the G2
/// triple bond is <<< (toward alpha_1).
inline std::vector<std::string> render_dynkin(const RootSystem& sys,
                                              const std::vector<std::string>& labels) {
    const int n = sys.rank;
    require(static_cast<int>(labels.size()) == n, "one label per node required");
    const int cell = 4; // node column spacing
    auto at = [&](std::string& s, size_t pos, const std::string& txt) {
        if (s.size() < pos + txt.size())
            s.resize(pos + txt.size(), ' ');
        for (size_t k = 0; k < txt.size(); ++k)
            s[pos + k] = txt[k];
    };

    // Chain of nodes in row order; branch node drawn above its neighbour.
    std::vector<int> chain;
    int branch_node = 0, branch_under = 0;
    switch (sys.type_tag) {
    case 'A':
    case 'B':
    case 'C':
    case 'F':
    case 'G':
        for (int i = 1; i <= n; ++i)
            chain.push_back(i);
        break;
    case 'D':
        for (int i = 1; i <= n - 1; ++i)
            chain.push_back(i);
        branch_node = n;
        branch_under = n - 2;
        break;
    case 'E':
        chain.push_back(1);
        for (int i = 3; i <= n; ++i)
            chain.push_back(i);
        branch_node = 2;
        branch_under = 4;
        break;
    }

    auto bond = [&](int a, int b) -> std::string {
        int m = sys.coxeter_m[a - 1][b - 1];
        if (m == 3)
            return "---";
        Rat la = rv_dot(sys.simple_root(a), sys.simple_root(a));
        Rat lb = rv_dot(sys.simple_root(b), sys.simple_root(b));
        bool right = lb < la; // arrow toward the short root
        if (m == 4)
            return right ? "==>" : "<==";
        return right ? ">>>" : "<<<";
    };

    std::string nodes, labs;
    for (size_t k = 0; k < chain.size(); ++k) {
        size_t col = k * cell;
        at(nodes, col, "o");
        at(labs, col, labels[chain[k] - 1]);
        if (k + 1 < chain.size())
            at(nodes, col + 1, bond(chain[k], chain[k + 1]));
    }

    std::vector<std::string> out;
    if (branch_node != 0) {
        size_t col = 0;
        for (size_t k = 0; k < chain.size(); ++k)
            if (chain[k] == branch_under)
                col = k * cell;
        std::string top, bar;
        at(top, col, "o " + labels[branch_node - 1]);
        at(bar, col, "|");
        out.push_back(top);
        out.push_back(bar);
    }
    out.push_back(nodes);
    out.push_back(labs);
    return out;
}

inline std::vector<std::string> render_profile(const RootSystem& sys,
                                               const std::vector<long long>& orders) {
    std::vector<std::string> labels;
    for (long long o : orders)
        labels.push_back(o == 0 ? "inf" : std::to_string(o));
    return render_dynkin(sys, labels);
}

} // namespace weylsect

#endif
