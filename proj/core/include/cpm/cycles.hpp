#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpm/graph.hpp"

namespace cpm {

enum class TwoPathKind { NonAnchor, PositiveAnchor, NegativeAnchor };

// A 2-path (x,y,z) is an anchor when x and z lie in the same level: positive
// if that level sits below y's, negative if above.  Requires at least three
// levels; throws std::domain_error otherwise, std::invalid_argument if
// (x,y,z) is not a 2-path.
TwoPathKind classify_two_path(const CpmGraph& g, int x, int y, int z);

// Equivalence class of a cycle's anchor/non-anchor code under rotation and
// reflection, keyed by the lexicographically smallest representative.
struct Trace {
    std::string canonical_code;
    int length = 0;
    i64 disbalancedness = 0;

    bool operator==(const Trace& o) const { return canonical_code == o.canonical_code; }
    bool operator<(const Trace& o) const { return canonical_code < o.canonical_code; }
};

// Lexicographic minimum over all rotations and reflections.
std::string canonical_trace_code(const std::string& code);

// Cycle length when anchor-free, otherwise |sum_j (-1)^j k_j| for the code
// rotated to start at an anchor and written a n^(k_1) a n^(k_2) ...
i64 trace_disbalancedness(const std::string& code);

Trace make_trace(const std::string& code);

// Trace of a vertex-index cycle; validates that it really is a cycle.
Trace trace_of_cycle(const CpmGraph& g, const std::vector<int>& cycle);

// The explicit 8-cycle <0;0>, <1;e0>, <2;e0+re1>, <1;e0+2re1>, <0;2re1>,
// <1;-e0+2re1>, <2;-e0+re1>, <1;-e0>; exists whenever ms >= 3.
std::vector<int> generic_eight_cycle(const CpmGraph& g);

struct CycleRecord {
    std::vector<int> vertices;  // min vertex first, direction with smaller successor
    Trace trace;
};

// Every simple cycle of length <= max_len exactly once.  max_len is capped
// at 10; longer requests throw std::invalid_argument.
std::vector<CycleRecord> enumerate_cycles(const CpmGraph& g, int max_len);

inline constexpr int kMaxCycleLength = 10;

// Number of cycles of length <= max_len through the 2-path (x,y,z),
// optionally restricted to one trace; a cycle counts once even if it
// contains the 2-path twice.
long long count_cycles_through(const CpmGraph& g, int x, int y, int z, int max_len,
                               const std::optional<Trace>& trace_filter = std::nullopt);

struct TraceStats {
    long long total = 0;
    long long anchor_min = -1, anchor_max = -1;        // cycles through a 2-path, per kind
    long long non_anchor_min = -1, non_anchor_max = -1;
};

// Per-(length, trace) totals plus the range of per-anchor / per-non-anchor
// incidence counts; the basis of the cycle census report.
std::map<std::pair<int, Trace>, TraceStats> cycle_census(const CpmGraph& g, int max_len);

// Text table: trace, length, total, per-anchor, per-non-anchor.
std::string cycle_census_table(const CpmGraph& g, int max_len);

// Counts of closed walks of length 1..max_len from each vertex, summed.
// Distinguishes some graph pairs whose short cycle censuses agree.
std::vector<unsigned long long> closed_walk_counts(const CpmGraph& g, int max_len);

}  // namespace cpm
