#include "mck/oracle.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

namespace mck {

namespace {

bool connected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    if (s == 0) return true;
    std::uint32_t reach = s & (~s + 1);
    std::uint32_t prev = 0;
    while (reach != prev) {
        prev = reach;
        std::uint32_t r = reach;
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            reach |= adj[static_cast<std::size_t>(v)] & s;
        }
    }
    return reach == s;
}

bool complete_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    std::uint32_t r = s;
    while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        if ((adj[static_cast<std::size_t>(v)] & s) != (s & ~(1u << v))) return false;
    }
    return true;
}

bool m_connected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s, int m) {
    const int count = std::popcount(s);
    if (count <= m) return complete_mask(adj, s);
    if (m == 1) return connected_mask(adj, s);
    if (m == 2) {
        std::uint32_t r = s;
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            if (!connected_mask(adj, s & ~(1u << v))) return false;
        }
        return true;
    }
    std::uint32_t r = s;
    while (r) {
        int v = std::countr_zero(r);
        r &= r - 1;
        std::uint32_t r2 = r;
        while (r2) {
            int w = std::countr_zero(r2);
            r2 &= r2 - 1;
            if (!connected_mask(adj, s & ~(1u << v) & ~(1u << w))) return false;
        }
    }
    return true;
}

}  // namespace

OracleResult min_mck_set(const UdgGraph& g, int m, int k, int size_cap) {
    const int n = g.size();
    if (n > 20) throw std::invalid_argument("size-limit: exact search supports n <= 20");
    if (n < 1) throw std::invalid_argument("invalid-parameter: empty graph");
    if (m < 1 || m > 3) throw std::invalid_argument("invalid-parameter: m must be in {1,2,3}");
    if (k < 1) throw std::invalid_argument("invalid-parameter: k must be >= 1");
    if (size_cap < 1 || size_cap > n)
        throw std::invalid_argument("invalid-parameter: size_cap must be in [1, n]");

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
        closed[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)] | (1u << v);
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;

    OracleResult res;
    std::vector<int> idx;
    for (int c = 1; c <= size_cap; ++c) {
        idx.resize(static_cast<std::size_t>(c));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ++res.explored;
            std::uint32_t s = 0;
            std::uint32_t cover = 0;
            for (int i : idx) {
                s |= 1u << i;
                cover |= closed[static_cast<std::size_t>(i)];
            }
            if (cover == full) {
                bool dominates = true;
                std::uint32_t outside = full & ~s;
                while (outside) {
                    int v = std::countr_zero(outside);
                    outside &= outside - 1;
                    if (std::popcount(adj[static_cast<std::size_t>(v)] & s) < k) {
                        dominates = false;
                        break;
                    }
                }
                if (dominates && m_connected_mask(adj, s, m)) {
                    res.feasible = true;
                    res.size = c;
                    res.optimum = NodeSet(idx);
                    return res;
                }
            }
            int pos = c - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - c + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < c; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return res;
}

}  // namespace mck
