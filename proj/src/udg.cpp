#include "mck/udg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mck {

NodeSet::NodeSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::full(int n) {
    NodeSet s;
    s.ids_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
    return s;
}

bool NodeSet::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

bool NodeSet::insert(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) return false;
    ids_.insert(it, id);
    return true;
}

void NodeSet::erase(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

NodeSet NodeSet::with(int id) const {
    NodeSet s = *this;
    s.insert(id);
    return s;
}

NodeSet NodeSet::without(int id) const {
    NodeSet s = *this;
    s.erase(id);
    return s;
}

UdgGraph UdgGraph::build(std::vector<NodePoint> points, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("invalid-parameter: radius must be positive");
    for (const auto& p : points) {
        if (p.weight < 0.0 || p.weight > 0.8)
            throw std::invalid_argument("invalid-parameter: weight outside [0, 0.8]");
    }
    UdgGraph g;
    g.points_ = std::move(points);
    g.radius_ = radius;
    const int n = g.size();
    g.adj_.assign(static_cast<std::size_t>(n), {});
    const double r2 = radius * radius;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double dx = g.points_[u].x - g.points_[v].x;
            const double dy = g.points_[u].y - g.points_[v].y;
            if (dx * dx + dy * dy <= r2) {
                g.adj_[u].push_back(v);
                g.adj_[v].push_back(u);
            }
        }
    }
    // neighbor lists come out sorted by construction order
    return g;
}

bool UdgGraph::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

double UdgGraph::distance(int u, int v) const {
    const double dx = points_[u].x - points_[v].x;
    const double dy = points_[u].y - points_[v].y;
    return std::sqrt(dx * dx + dy * dy);
}

bool UdgGraph::connected() const {
    const int n = size();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

UdgGraph random_topology(int n, double width, double height, double radius, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("invalid-parameter: n must be >= 1");
    Rng rng(seed);
    std::vector<NodePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        NodePoint p;
        p.x = rng.uniform(0.0, width);
        p.y = rng.uniform(0.0, height);
        p.weight = rng.uniform(0.0, 0.8);
        pts.push_back(p);
    }
    return UdgGraph::build(std::move(pts), radius);
}

UdgGraph random_connected_topology(int n, double width, double height, double radius,
                                   std::uint64_t seed, int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::uint64_t s = attempt == 0 ? seed : mix_seed(seed, static_cast<std::uint64_t>(attempt));
        UdgGraph g = random_topology(n, width, height, radius, s);
        if (g.connected()) return g;
    }
    throw GenerationFailure("generation-failure: no connected sample within retry cap (radius too small for density)");
}

UdgGraph grid_topology(int rows, int cols, double spacing, double radius,
                       std::optional<std::uint64_t> weight_seed) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("invalid-parameter: grid dimensions must be >= 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("invalid-parameter: spacing must be positive");
    std::vector<NodePoint> pts;
    pts.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    std::optional<Rng> rng;
    if (weight_seed) rng.emplace(*weight_seed);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            NodePoint p;
            p.x = i * spacing;
            p.y = j * spacing;
            p.weight = rng ? rng->uniform(0.0, 0.8) : 0.0;
            pts.push_back(p);
        }
    }
    return UdgGraph::build(std::move(pts), radius);
}

void write_udg(const UdgGraph& g, std::ostream& out) {
    out << "#udg v1\n";
    out << "n=" << g.size() << " r=" << fmt_double(g.radius()) << "\n";
    for (int v = 0; v < g.size(); ++v) {
        const auto& p = g.point(v);
        out << v << " " << fmt_double(p.x) << " " << fmt_double(p.y) << " "
            << fmt_double(p.weight) << "\n";
    }
}

std::string to_udg_text(const UdgGraph& g) {
    std::ostringstream os;
    write_udg(g, os);
    return os.str();
}

UdgGraph read_udg(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header != "#udg v1")
        throw std::invalid_argument("invalid-parameter: bad graph file header");
    std::string meta;
    if (!std::getline(in, meta)) throw std::invalid_argument("invalid-parameter: missing graph meta line");
    int n = -1;
    double r = 0.0;
    if (std::sscanf(meta.c_str(), "n=%d r=%lf", &n, &r) != 2 || n < 0)
        throw std::invalid_argument("invalid-parameter: bad graph meta line");
    std::vector<NodePoint> pts(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int id;
        NodePoint p;
        if (!(in >> id >> p.x >> p.y >> p.weight) || id < 0 || id >= n || seen[id])
            throw std::invalid_argument("invalid-parameter: bad node line in graph file");
        seen[id] = 1;
        pts[static_cast<std::size_t>(id)] = p;
    }
    return UdgGraph::build(std::move(pts), r);
}

UdgGraph load_udg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("invalid-parameter: cannot open graph file " + path);
    return read_udg(in);
}

void save_udg(const UdgGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("invalid-parameter: cannot write graph file " + path);
    write_udg(g, out);
}

}  // namespace mck
