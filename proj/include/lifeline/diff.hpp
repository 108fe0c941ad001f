// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lifeline/mutant.hpp"

namespace lifeline {

// One contiguous region of change, unified-diff style with zero or more
// context lines inside. For zero-length ranges the start is the line
// *before* the gap (git convention), so old_start/new_start may be 0.
struct Hunk {
    int old_start = 1;
    int old_len = 0;
    int new_start = 1;
    int new_len = 0;
    std::set<int> removed_lines;  // 1-based old lines marked '-'
    std::set<int> added_lines;    // 1-based new lines marked '+'

    bool operator==(const Hunk&) const = default;
};

// Line correspondence between two consecutive versions of one file.
struct ChangeMap {
    std::vector<Hunk> hunks;  // sorted, non-overlapping in old coordinates
    int old_line_count = 0;
    int new_line_count = 0;

    bool operator==(const ChangeMap&) const = default;
};

// Parses a unified diff for one file pair. "---"/"+++" headers are
// optional, "@@ -a,b +c,d @@" hunk headers are required. When
// old_line_count is given it must cover every hunk; otherwise the old
// extent of the last hunk is used as the known line count.
ChangeMap parse_unified_diff(std::string_view text,
                             std::optional<int> old_line_count = std::nullopt);

// Derives zero-context hunks from an LCS alignment of the two line
// sequences. Among optimal alignments the one matching earliest old
// occurrences is chosen, so output is deterministic across platforms.
// Memory is quadratic in the size of the changed region (the common
// prefix and suffix are stripped first).
ChangeMap compute_hunks(const std::vector<std::string>& old_lines,
                        const std::vector<std::string>& new_lines);

// Renders a ChangeMap produced by compute_hunks back to unified diff text
// (zero context). parse_unified_diff(format_unified_diff(...)) restores
// the hunk structure exactly.
std::string format_unified_diff(const std::vector<std::string>& old_lines,
                                const std::vector<std::string>& new_lines,
                                const ChangeMap& cm);

// Maps a 1-based old line to its new position. Removed lines map to
// nothing. Context lines inside a hunk map with the running offset.
// Throws LineOutOfRange when old_line is outside [1, old_line_count].
std::optional<int> map_line(const ChangeMap& cm, int old_line);

// Hash lookup from identity key to id for one version's mutant set.
class MutantIndex {
public:
    MutantIndex() = default;
    explicit MutantIndex(const std::vector<Mutant>& mutants);

    std::optional<MutantId> find(const MutantKey& key) const;

private:
    std::unordered_map<MutantKey, MutantId> by_key_;
};

// Follows one mutant through a change map: nothing if its line vanished,
// otherwise the id of the identically-keyed mutant at the mapped location
// in the next version's (regenerated) set, if present.
std::optional<MutantId> map_mutant(const ChangeMap& cm, const Mutant& m,
                                   const MutantIndex& next_index);
std::optional<MutantId> map_mutant(const ChangeMap& cm, const Mutant& m,
                                   const std::vector<Mutant>& next_mutants);

}  // namespace lifeline
