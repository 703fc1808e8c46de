/*
Copyright 2026 The kzsim Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kzsim/model.hpp"

namespace kzsim::embedding {

struct ChimeraCoord {
    int row = 0;
    int col = 0;
    int side = 0;   // 0: couples vertically between cells, 1: horizontally
    int index = 0;  // 0..3 within the side

    bool operator==(const ChimeraCoord&) const = default;
};

// Ideal l x l Chimera graph of K_{4,4} cells; vertex ids 0 .. 8 l^2 - 1 with
//   id = ((row * l + col) * 2 + side) * 4 + index.
// Adjacency is computed on demand.
class ChimeraGraph {
  public:
    explicit ChimeraGraph(int cells_per_side = 16);

    int cells_per_side() const noexcept { return cells_; }
    int vertex_count() const noexcept { return 8 * cells_ * cells_; }

    ChimeraCoord coord(int vertex) const;
    int vertex(const ChimeraCoord& c) const;

    bool adjacent(int v, int w) const;

    /// Neighbors in a fixed order (intra-cell first, then inter-cell -/+).
    std::vector<int> neighbors(int vertex) const;

    int degree(int vertex) const;

    std::int64_t edge_count() const noexcept;

  private:
    void check(int vertex) const;

    int cells_;
};

int degree(const ChimeraGraph& graph, int vertex);

/// True when `path` is a self-avoiding walk in `graph`.
bool is_valid_path(const ChimeraGraph& graph, std::span<const int> path);

enum class CouplingKind { ferro, antiferro, gauge };

CouplingKind parse_coupling(std::string_view text);
std::string_view to_string(CouplingKind kind);

struct EmbeddedChain {
    ChainInstance instance;
    std::uint64_t seed = 0;
    int attempts = 0;  // walks started, including the successful one
};

/// Self-avoiding random walk of `length` vertices from a uniformly random start;
/// a walk with no unvisited neighbor is discarded and restarted. Throws
/// GenerationError after `max_retries` failed walks.
EmbeddedChain saw_chain(const ChimeraGraph& graph, int length, std::uint64_t seed, int max_retries,
                        CouplingKind coupling = CouplingKind::antiferro);

}  // namespace kzsim::embedding
