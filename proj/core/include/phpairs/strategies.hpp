#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "phpairs/graph.hpp"
#include "phpairs/reduction.hpp"

namespace phpairs {

/// What a strategy is allowed to see: G[K1 ∪ K2] relabelled so that
/// [0, k1_size) is K1 and [k1_size, k1_size + k2_size) is K2, each in
/// ascending original order, with weights carried over.
struct PairView {
  Graph local;
  std::size_t k1_size = 0;
  std::size_t k2_size = 0;
  std::vector<Vertex> labels;  // local id -> id in the parent graph

  static PairView of(const Graph& g, const VertexSet& k1, const VertexSet& k2);
};

/// Gadget plus a strategy-specific list of vertices: the maximum clique X for
/// max-clique, the omitted cross pair for stable-set, nothing for collapse.
/// `data` holds local ids when produced by Strategy::build and ids of the
/// caller's graph when produced by the strategy_* free functions.
struct Gadget {
  NonProper2Clique h;
  std::vector<Vertex> data;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view name() const = 0;
  /// True when the gadget is always A_i = K_i with identical labels.
  virtual bool keeps_identity() const = 0;
  virtual Gadget build(const PairView& view) const = 0;
};

/// Drops every cross edge outside a maximum clique X of G[K1 ∪ K2].
/// Preserves χ and ω; colorings lift back.
class MaxCliqueStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "max-clique"; }
  bool keeps_identity() const override { return true; }
  Gadget build(const PairView& view) const override;
};

/// Adds every cross edge except the non-adjacent cross pair of largest total
/// weight (ties broken lexicographically). Preserves the max-weight stable set.
class StableSetStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "stable-set"; }
  bool keeps_identity() const override { return true; }
  Gadget build(const PairView& view) const override;
};

/// Replaces the pair by two non-adjacent single vertices.
class CollapseStrategy final : public Strategy {
 public:
  std::string_view name() const override { return "collapse"; }
  bool keeps_identity() const override { return false; }
  Gadget build(const PairView& view) const override;
};

/// "max-clique", "stable-set" or "collapse"; throws ContractViolation otherwise.
std::unique_ptr<Strategy> make_strategy(std::string_view name);

Gadget strategy_max_clique(const Graph& g, const VertexSet& k1, const VertexSet& k2);
Gadget strategy_stable_set(const Graph& g, const VertexSet& k1, const VertexSet& k2);
Gadget strategy_collapse(const Graph& g, const VertexSet& k1, const VertexSet& k2);

}  // namespace phpairs
