#pragma once

#include "locsep/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace locsep {

using Community = std::vector<VertexId>;

/// A set of nonempty, possibly overlapping communities over a graph's
/// vertices. Stored canonically: each community sorted and duplicate-free,
/// the community list sorted lexicographically with duplicates removed.
/// Vertices may belong to no community.
class Cover {
public:
    Cover() = default;

    /// Throws Precondition on an empty community or an id >= vertex_count.
    Cover(std::size_t vertex_count, std::vector<Community> communities);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t size() const noexcept { return communities_.size(); }
    bool empty() const noexcept { return communities_.empty(); }
    const Community& operator[](std::size_t c) const { return communities_[c]; }
    const std::vector<Community>& communities() const noexcept { return communities_; }
    auto begin() const noexcept { return communities_.begin(); }
    auto end() const noexcept { return communities_.end(); }

    bool contains(std::size_t c, VertexId v) const;

    /// Number of communities containing each vertex.
    std::vector<std::size_t> multiplicities() const;

    /// True when communities are pairwise disjoint and cover every vertex.
    bool is_partition() const;

    friend bool operator==(const Cover&, const Cover&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Community> communities_;
};

/// Reads one community per line of whitespace-separated vertex labels.
/// Blank lines and '#'/'%' comment lines are skipped. Labels are resolved
/// against `g`; unknown labels raise ParseError with the line number.
Cover load_cover(const Graph& g, std::string_view text);

/// One community per line, vertex labels separated by single spaces.
std::string save_cover(const Graph& g, const Cover& cover);

} // namespace locsep
