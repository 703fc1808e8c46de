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

#include "kzsim/embedding.hpp"

#include <cstdlib>
#include <string>

#include "kzsim/errors.hpp"
#include "kzsim/rng.hpp"

namespace kzsim::embedding {

ChimeraGraph::ChimeraGraph(int cells_per_side) : cells_(cells_per_side) {
    if (cells_ < 1) throw DomainError("Chimera graph needs at least one cell per side");
}

void ChimeraGraph::check(int vertex) const {
    if (vertex < 0 || vertex >= vertex_count())
        throw DomainError("vertex id " + std::to_string(vertex) + " outside 0.." + std::to_string(vertex_count() - 1));
}

ChimeraCoord ChimeraGraph::coord(int vertex) const {
    check(vertex);
    ChimeraCoord c;
    c.index = vertex % 4;
    c.side = (vertex / 4) % 2;
    const int cell = vertex / 8;
    c.row = cell / cells_;
    c.col = cell % cells_;
    return c;
}

int ChimeraGraph::vertex(const ChimeraCoord& c) const {
    if (c.row < 0 || c.row >= cells_ || c.col < 0 || c.col >= cells_ || c.side < 0 || c.side > 1 || c.index < 0 ||
        c.index > 3)
        throw DomainError("Chimera coordinate out of range");
    return ((c.row * cells_ + c.col) * 2 + c.side) * 4 + c.index;
}

bool ChimeraGraph::adjacent(int v, int w) const {
    const auto a = coord(v);
    const auto b = coord(w);
    if (a.row == b.row && a.col == b.col) return a.side != b.side;
    if (a.side != b.side || a.index != b.index) return false;
    if (a.side == 0) return a.col == b.col && std::abs(a.row - b.row) == 1;
    return a.row == b.row && std::abs(a.col - b.col) == 1;
}

std::vector<int> ChimeraGraph::neighbors(int v) const {
    const auto c = coord(v);
    std::vector<int> out;
    out.reserve(6);
    for (int k = 0; k < 4; ++k) out.push_back(vertex({c.row, c.col, 1 - c.side, k}));
    if (c.side == 0) {
        if (c.row > 0) out.push_back(vertex({c.row - 1, c.col, 0, c.index}));
        if (c.row + 1 < cells_) out.push_back(vertex({c.row + 1, c.col, 0, c.index}));
    } else {
        if (c.col > 0) out.push_back(vertex({c.row, c.col - 1, 1, c.index}));
        if (c.col + 1 < cells_) out.push_back(vertex({c.row, c.col + 1, 1, c.index}));
    }
    return out;
}

int ChimeraGraph::degree(int v) const {
    const auto c = coord(v);
    const int along = c.side == 0 ? c.row : c.col;
    return 4 + (along > 0) + (along + 1 < cells_);
}

std::int64_t ChimeraGraph::edge_count() const noexcept {
    const std::int64_t l = cells_;
    return 16 * l * l + 8 * l * (l - 1);
}

int degree(const ChimeraGraph& graph, int vertex) { return graph.degree(vertex); }

bool is_valid_path(const ChimeraGraph& graph, std::span<const int> path) {
    std::vector<bool> seen(graph.vertex_count(), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int v = path[i];
        if (v < 0 || v >= graph.vertex_count() || seen[v]) return false;
        seen[v] = true;
        if (i > 0 && !graph.adjacent(path[i - 1], v)) return false;
    }
    return true;
}

CouplingKind parse_coupling(std::string_view text) {
    if (text == "ferro") return CouplingKind::ferro;
    if (text == "antiferro") return CouplingKind::antiferro;
    if (text == "gauge") return CouplingKind::gauge;
    throw ConfigError("unknown coupling '" + std::string(text) + "' (expected ferro, antiferro or gauge)");
}

std::string_view to_string(CouplingKind kind) {
    switch (kind) {
        case CouplingKind::ferro: return "ferro";
        case CouplingKind::antiferro: return "antiferro";
        case CouplingKind::gauge: return "gauge";
    }
    return "unknown";
}

EmbeddedChain saw_chain(const ChimeraGraph& graph, int length, std::uint64_t seed, int max_retries,
                        CouplingKind coupling) {
    if (length < 1) throw DomainError("chain length must be positive");
    if (max_retries < 1) throw DomainError("max_retries must be at least 1");
    if (length > graph.vertex_count())
        throw GenerationError("chain of " + std::to_string(length) + " spins cannot fit in " +
                                  std::to_string(graph.vertex_count()) + " vertices",
                              0);

    Rng rng(derive_seed(seed, {0}));
    std::vector<char> visited(graph.vertex_count(), 0);
    std::vector<int> path;
    path.reserve(length);
    std::vector<int> open;
    open.reserve(6);

    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        for (int v : path) visited[v] = 0;
        path.clear();
        int current = static_cast<int>(rng.below(graph.vertex_count()));
        path.push_back(current);
        visited[current] = 1;
        while (static_cast<int>(path.size()) < length) {
            open.clear();
            for (int w : graph.neighbors(current))
                if (!visited[w]) open.push_back(w);
            if (open.empty()) break;
            current = open[rng.below(open.size())];
            path.push_back(current);
            visited[current] = 1;
        }
        if (static_cast<int>(path.size()) < length) continue;

        const int j0 = coupling == CouplingKind::antiferro ? 1 : -1;
        ChainInstance chain(length, std::vector<std::int8_t>(length - 1, static_cast<std::int8_t>(j0)), path,
                            graph.cells_per_side());
        if (coupling == CouplingKind::gauge) chain = apply_random_gauge(chain, derive_seed(seed, {1})).instance;
        return {std::move(chain), seed, attempt};
    }
    throw GenerationError("self-avoiding walk of " + std::to_string(length) + " spins trapped on every attempt",
                          max_retries);
}

}  // namespace kzsim::embedding
