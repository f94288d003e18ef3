#pragma once

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace skein {

struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Shared memo store for the skein-tree engine, keyed by canonical code of a
/// simplified connected diagram.  Concurrent lookups and inserts are safe;
/// duplicate inserts of the same key must carry equal values (engine results
/// are deterministic functions of the diagram).
class MemoCache {
public:
    MemoCache();

    bool lookup(const std::string& key, LaurentVZ& out) const;
    void insert(const std::string& key, const LaurentVZ& value);

    std::uint64_t hits() const { return hits_.load(std::memory_order_relaxed); }
    std::uint64_t misses() const { return misses_.load(std::memory_order_relaxed); }
    std::size_t size() const;
    /// rough in-memory footprint of the stored values
    std::uint64_t approx_bytes() const { return bytes_.load(std::memory_order_relaxed); }
    void clear();

    /// Binary cache file with a version header.  A corrupt or mismatched
    /// file is discarded and load() reports false.
    bool load(const std::string& path);
    void save(const std::string& path) const;  // atomic rename

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<std::string, LaurentVZ> map;
    };
    std::unique_ptr<Shard[]> shards_;
    mutable std::atomic<std::uint64_t> hits_{0}, misses_{0};
    std::atomic<std::uint64_t> bytes_{0};
    Shard& shard_for(const std::string& key) const;
};

struct EngineOptions {
    std::uint64_t max_nodes = 0;   // 0 = unlimited
    double budget_seconds = 0;     // 0 = unlimited
    std::uint64_t max_cache_bytes = 0;  // 0 = unlimited
    bool parallel = false;         // OpenMP branch evaluation
    int spawn_depth = 8;           // spawn tasks above this recursion depth
    int min_cache_crossings = 5;   // don't memoize tiny diagrams
    std::uint64_t* node_counter = nullptr;  // optional progress sink
};

/// Framed Homfly of a blackboard-framed diagram by plain skein-tree
/// resolution.  Guarded to small diagrams.
LaurentVZ homfly_brute(const OrientedDiagram& d, int max_crossings = 20);

/// Same value as homfly_brute, no crossing guard: memoized, simplified after
/// every resolution, split and connected-sum factorized.
LaurentVZ homfly_memo(const OrientedDiagram& d, MemoCache& cache,
                      const EngineOptions& opts = {});

/// The ambient-isotopy Homfly is v^writhe times the framed one.
LaurentVZ ambient_from_framed(const LaurentVZ& framed, int w);

LaurentVZ homfly_ambient_brute(const OrientedDiagram& d, int max_crossings = 20);
LaurentVZ homfly_ambient_memo(const OrientedDiagram& d, MemoCache& cache,
                              const EngineOptions& opts = {});

/// Kauffman bracket of the underlying unoriented diagram, normalized so the
/// unknot has bracket 1.  Laurent polynomial in A.
LaurentS kauffman_bracket(const OrientedDiagram& d, int max_crossings = 20);

/// Bracket times (-A^3)^(-writhe).
LaurentS jones_via_bracket(const OrientedDiagram& d, int max_crossings = 20);

}  // namespace skein
