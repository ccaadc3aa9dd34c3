#pragma once

#include "transversal/core.hpp"
#include "transversal/graphs.hpp"

#include <string>
#include <utility>
#include <vector>

namespace transversal {

/// Finite strict partial order. The input pairs are closed transitively
/// before validation, so a Hasse diagram is enough; a cycle is rejected.
class Poset {
public:
    Poset() = default;
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<std::string, std::string>>& less_than);
    static Poset indexed(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& less_than);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    bool less(std::size_t x, std::size_t y) const { return less_[x][y]; }
    bool comparable(std::size_t x, std::size_t y) const { return less_[x][y] || less_[y][x]; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> less_;
};

/// Each chain lists its elements in ascending order.
struct ChainPartition {
    std::vector<std::vector<std::size_t>> chains;
};

struct AntichainPartition {
    std::vector<std::vector<std::size_t>> antichains;
};

struct DilworthResult {
    ChainPartition partition;
    std::vector<std::size_t> antichain;
};

struct MirskyResult {
    AntichainPartition partition;
    std::vector<std::size_t> chain;  // ascending
};

bool is_chain(const Poset& poset, std::span<const std::size_t> elements);
bool is_antichain(const Poset& poset, std::span<const std::size_t> elements);
bool is_chain_partition(const Poset& poset, const ChainPartition& partition);
bool is_antichain_partition(const Poset& poset, const AntichainPartition& partition);

/// Minimum chain partition and maximum antichain, from a maximum matching
/// of the split graph (x -> y iff x < y) and its Konig cover.
DilworthResult dilworth(const Poset& poset);

/// Antichain levels by repeatedly stripping maximal elements, and a longest chain.
MirskyResult mirsky(const Poset& poset);

/// Orders S and {1..n} by a < i iff a in T_i, decomposes into chains, and
/// reads the SDR off the two-element chains. When more than |S| chains are
/// needed the maximum antichain yields a violator.
HallResult hall_from_dilworth(const SetFamily& family);

/// Comparability graph, or the incomparability graph when `complement`.
Graph comparability_graph(const Poset& poset, bool complement = false);

inline constexpr std::size_t kPerfectCeiling = 10;

struct PerfectResult {
    bool perfect = true;
    std::vector<std::size_t> witness;  // induced subgraph with omega != chi
    std::size_t clique_number = 0;     // of the witness
    std::size_t chromatic_number = 0;  // of the witness
};

/// Exhaustive over induced subgraphs: omega(H) = chi(H) for every H.
PerfectResult is_perfect(const Graph& graph, std::size_t ceiling = kPerfectCeiling);

struct BergeResult {
    bool berge = true;
    std::vector<std::size_t> witness;  // cycle order of the odd hole / antihole
    bool antihole = false;
};

/// No induced odd cycle of length >= 5 and no complement of one.
BergeResult berge_check(const Graph& graph, std::size_t ceiling = kPerfectCeiling);

std::size_t clique_number(const Graph& graph, std::span<const std::size_t> vertices);
std::size_t chromatic_number(const Graph& graph, std::span<const std::size_t> vertices);

} // namespace transversal
