#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace halign {

/// Dense [series x time] matrix of unit sales (or forecasts thereof).
/// Row-major storage; time_index is strictly increasing with no gaps.
struct SeriesMatrix {
    std::vector<std::string> series_ids;  // one per row
    std::vector<int> time_index;          // day identifiers, length = cols
    std::vector<double> values;           // row-major, series_ids.size() * time_index.size()

    SeriesMatrix() = default;
    SeriesMatrix(std::vector<std::string> ids, std::vector<int> days);

    std::size_t rows() const { return series_ids.size(); }
    std::size_t cols() const { return time_index.size(); }

    double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols() + c]; }

    std::span<const double> row(std::size_t r) const {
        return {values.data() + r * cols(), cols()};
    }
    std::span<double> row(std::size_t r) { return {values.data() + r * cols(), cols()}; }

    /// Checks the shape and time-index invariants; throws on violation.
    void validate() const;
};

struct BottomKey {
    std::string item;
    std::string store;
};

struct CatalogEntry {
    std::string item;
    std::string dept;
    std::string cat;
    std::string store;
    std::string state;
};

struct LevelDesc {
    int id = 0;               // 1..L, level 1 is the grand total
    std::string label;
    std::vector<std::string> grouping_keys;  // subset of item/dept/cat/store/state
};

struct HierarchyNode {
    int level = 0;
    std::string id;
    std::vector<int> member_indices;  // ascending bottom-series indices
};

/// The multi-level aggregation structure: which bottom series sum into each
/// upper-level node. Immutable after construction.
struct HierarchySpec {
    std::vector<LevelDesc> levels;
    std::vector<BottomKey> bottom_keys;
    std::vector<std::vector<HierarchyNode>> nodes;  // nodes[l] holds level l+1

    int num_levels() const { return static_cast<int>(levels.size()); }
    std::size_t bottom_count() const { return bottom_keys.size(); }

    const std::vector<HierarchyNode>& level_nodes(int level_id) const;

    std::vector<std::size_t> level_counts() const;
    std::size_t total_nodes() const;

    /// Dense 0/1 summing matrix [nodes x bottom] for one level; test support
    /// for the sparse membership lists.
    std::vector<std::vector<double>> dense_summing_matrix(int level_id) const;

    nlohmann::ordered_json to_json() const;
    static HierarchySpec from_json(const nlohmann::json& j);

    void save(const std::string& path) const;
    static HierarchySpec load(const std::string& path);
};

/// Builds the 12-level M5 grouping structure from a catalog of
/// (item, dept, category, store, state) records. Degenerate catalogs
/// (fewer attributes) produce the same 12 levels with fewer nodes each.
///
/// Bottom series are ordered lexicographically by (item, store); node order
/// within a level is lexicographic by grouping-key tuple.
HierarchySpec build_m5_hierarchy(const std::vector<CatalogEntry>& catalog);

/// Sums bottom rows into each node of the target level. Aggregating to the
/// bottom level returns the input unchanged.
SeriesMatrix aggregate(const HierarchySpec& spec, const SeriesMatrix& bottom, int target_level,
                       int threads = 1);

/// Stacks the aggregates of every level, ordered level 1..L then node order.
/// The result is coherent by construction.
SeriesMatrix enumerate_all_series(const HierarchySpec& spec, const SeriesMatrix& bottom,
                                  int threads = 1);

}  // namespace halign
