#pragma once

#include <span>
#include <vector>

#include "phpairs/elimination.hpp"

namespace phpairs {

/// Color per vertex; colors are arbitrary non-negative integers.
using Coloring = std::vector<int>;

bool is_proper_coloring(const Graph& g, std::span<const int> coloring);
std::size_t color_count(std::span<const int> coloring);

/// Turns a proper coloring of trace.reduced into a proper coloring of
/// trace.original with the same palette.
///
/// Steps are undone newest first. Within K1 ∪ K2 the colors used on K1 stay on
/// K1 and those on K2 stay on K2; every color used on both sides is placed on
/// a cross non-adjacent pair taken from a maximum matching of the cross
/// non-edges of the earlier graph. Only max-clique traces can be lifted.
Coloring lift_coloring(const ReductionTrace& trace, std::span<const int> coloring);

/// Maps a stable set of trace.reduced (reduced ids) to the same vertices of
/// trace.original. Only stable-set traces can be lifted; each of their steps
/// only adds cross edges on unchanged ids, so stability carries back.
std::vector<Vertex> lift_stable_set(const ReductionTrace& trace, std::span<const Vertex> stable);

}  // namespace phpairs
