// Unit disk graph: immutable geometric graph with per-node uncertainty
// weights, plus topology generators and the text file format.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mck/common.hpp"

namespace mck {

struct NodePoint {
    double x = 0.0;
    double y = 0.0;
    double weight = 0.0;  // uncertainty cost, in [0, 0.8]
};

// Sorted, duplicate-free set of node ids.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(std::vector<int> ids);

    static NodeSet full(int n);

    bool contains(int id) const;
    // Returns true if the id was newly added.
    bool insert(int id);
    void erase(int id);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }

    std::vector<int>::const_iterator begin() const { return ids_.begin(); }
    std::vector<int>::const_iterator end() const { return ids_.end(); }

    bool is_subset_of(const NodeSet& other) const;
    NodeSet with(int id) const;
    NodeSet without(int id) const;

    friend bool operator==(const NodeSet& a, const NodeSet& b) { return a.ids_ == b.ids_; }
    friend bool operator!=(const NodeSet& a, const NodeSet& b) { return !(a == b); }

  private:
    std::vector<int> ids_;
};

class UdgGraph {
  public:
    // Edge rule: (u,v) adjacent iff euclidean distance <= radius and u != v.
    // Duplicate coordinates are allowed; radius must be positive and every
    // weight must lie in [0, 0.8].
    static UdgGraph build(std::vector<NodePoint> points, double radius);

    int size() const { return static_cast<int>(points_.size()); }
    double radius() const { return radius_; }
    const NodePoint& point(int v) const { return points_[static_cast<std::size_t>(v)]; }
    double weight(int v) const { return points_[static_cast<std::size_t>(v)].weight; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(int u, int v) const;
    double distance(int u, int v) const;
    bool connected() const;

  private:
    UdgGraph() = default;
    std::vector<NodePoint> points_;
    double radius_ = 1.0;
    std::vector<std::vector<int>> adj_;
};

// n points uniform in [0,width]x[0,height], weights uniform in [0, 0.8].
UdgGraph random_topology(int n, double width, double height, double radius, std::uint64_t seed);

// Resamples random_topology until the graph is connected; throws
// GenerationFailure after max_retries attempts (radius too small for the
// density).
UdgGraph random_connected_topology(int n, double width, double height, double radius,
                                   std::uint64_t seed, int max_retries = 1000);

// rows x cols lattice with the given spacing; weights are zero unless a
// weight seed is supplied. Node id = row * cols + col.
UdgGraph grid_topology(int rows, int cols, double spacing, double radius,
                       std::optional<std::uint64_t> weight_seed = std::nullopt);

// Text format:
//   #udg v1
//   n=<count> r=<radius>
//   <id> <x> <y> <weight>
// Floats use shortest round-trip form.
void write_udg(const UdgGraph& g, std::ostream& out);
std::string to_udg_text(const UdgGraph& g);
UdgGraph read_udg(std::istream& in);
UdgGraph load_udg(const std::string& path);
void save_udg(const UdgGraph& g, const std::string& path);

}  // namespace mck
