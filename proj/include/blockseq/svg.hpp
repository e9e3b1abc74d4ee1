#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blockseq/biarc.hpp"
#include "blockseq/geometry.hpp"

namespace blockseq::svg {

// Arc diagrams in vertex units, one panel per page: the spine along y = 0,
// a tick per vertex and one path per semicircle (upper arcs bulge upwards).
std::string render_pages(const PagePartition& pages, std::size_t n);

// Scatter plot with each group of ids in its own color; ungrouped points grey.
std::string render_points(const PointSet& pts, const std::vector<std::vector<std::size_t>>& groups);

}  // namespace blockseq::svg
