// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lifeline/bitvec.hpp"
#include "lifeline/diff.hpp"
#include "lifeline/mutant.hpp"

namespace lifeline {

// Per-version boolean kill table. Rows follow mutant_ids order; all types
// here are immutable after construction and safe to share across readers.
class KillMatrix {
public:
    KillMatrix() = default;
    KillMatrix(std::vector<MutantId> mutant_ids, std::vector<std::string> test_ids,
               std::vector<BitVec> rows);

    static KillMatrix all_surviving(std::vector<MutantId> mutant_ids,
                                    std::vector<std::string> test_ids);

    std::size_t mutant_count() const { return mutant_ids_.size(); }
    std::size_t test_count() const { return test_ids_.size(); }
    const std::vector<MutantId>& mutant_ids() const { return mutant_ids_; }
    const std::vector<std::string>& test_ids() const { return test_ids_; }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    std::optional<std::size_t> row_index(const MutantId& id) const;

    bool operator==(const KillMatrix& other) const {
        return mutant_ids_ == other.mutant_ids_ && test_ids_ == other.test_ids_ &&
               rows_ == other.rows_;
    }

private:
    std::vector<MutantId> mutant_ids_;
    std::vector<std::string> test_ids_;
    std::vector<BitVec> rows_;
    std::unordered_map<std::string, std::size_t> index_;
};

// One observed version of the file: its regenerated mutant set, the kill
// matrix, and (except for the last point) the change map to the next
// version.
struct TimePoint {
    std::string version_id;
    int index = 0;
    std::vector<Mutant> mutants;  // canonical order: sorted by id
    KillMatrix kills;
    std::optional<ChangeMap> change_to_next;

    bool operator==(const TimePoint&) const = default;
};

struct Timeline {
    std::string file;
    std::vector<TimePoint> points;  // chronological

    bool operator==(const Timeline&) const = default;
};

// A mutant's identity threaded across versions. successors[k] is the id at
// point origin_index + 1 + k; once absent it stays absent.
struct Lifeline {
    int origin_index = 0;
    MutantId origin;
    std::vector<std::optional<MutantId>> successors;
    int standing_span = 1;  // consecutive versions standing, origin included

    bool stands_at(int timepoint) const {
        return timepoint >= origin_index && timepoint < origin_index + standing_span;
    }

    bool operator==(const Lifeline&) const = default;
};

enum class ViolationKind {
    EmptyTimeline,
    NonConsecutiveIndex,
    MissingChangeMap,
    UnexpectedChangeMap,
    BadMutantLine,
    DuplicateMutantId,
    DuplicateMutantKey,
    OrphanMatrixRow,
    MissingMatrixRow,
    MalformedChangeMap,
    ChangeMapCountMismatch,
    MutantLineOutOfRange,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    int timepoint = -1;  // -1 when not tied to a specific point
    std::string detail;

    std::string format() const;
};

// Checks every structural invariant of a Timeline. Violations are data,
// not failures; an empty result means the timeline is well-formed.
std::vector<Violation> validate_timeline(const Timeline& timeline);

}  // namespace lifeline
