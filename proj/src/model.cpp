// SPDX-License-Identifier: Apache-2.0
#include "lifeline/model.hpp"

#include <unordered_set>

#include "lifeline/errors.hpp"

namespace lifeline {

KillMatrix::KillMatrix(std::vector<MutantId> mutant_ids, std::vector<std::string> test_ids,
                       std::vector<BitVec> rows)
    : mutant_ids_(std::move(mutant_ids)),
      test_ids_(std::move(test_ids)),
      rows_(std::move(rows)) {
    if (rows_.size() != mutant_ids_.size())
        throw LengthMismatch("kill matrix row count does not match mutant id count");
    for (const BitVec& row : rows_)
        if (row.size() != test_ids_.size())
            throw LengthMismatch("kill matrix row width does not match test id count");
    index_.reserve(mutant_ids_.size());
    for (std::size_t i = 0; i < mutant_ids_.size(); ++i) {
        if (!index_.emplace(mutant_ids_[i].value, i).second)
            throw ValidationError("duplicate mutant id in kill matrix: " +
                                  mutant_ids_[i].value);
    }
}

KillMatrix KillMatrix::all_surviving(std::vector<MutantId> mutant_ids,
                                     std::vector<std::string> test_ids) {
    std::vector<BitVec> rows(mutant_ids.size(), BitVec(test_ids.size()));
    return KillMatrix(std::move(mutant_ids), std::move(test_ids), std::move(rows));
}

std::optional<std::size_t> KillMatrix::row_index(const MutantId& id) const {
    auto it = index_.find(id.value);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::EmptyTimeline: return "EmptyTimeline";
    case ViolationKind::NonConsecutiveIndex: return "NonConsecutiveIndex";
    case ViolationKind::MissingChangeMap: return "MissingChangeMap";
    case ViolationKind::UnexpectedChangeMap: return "UnexpectedChangeMap";
    case ViolationKind::BadMutantLine: return "BadMutantLine";
    case ViolationKind::DuplicateMutantId: return "DuplicateMutantId";
    case ViolationKind::DuplicateMutantKey: return "DuplicateMutantKey";
    case ViolationKind::OrphanMatrixRow: return "OrphanMatrixRow";
    case ViolationKind::MissingMatrixRow: return "MissingMatrixRow";
    case ViolationKind::MalformedChangeMap: return "MalformedChangeMap";
    case ViolationKind::ChangeMapCountMismatch: return "ChangeMapCountMismatch";
    case ViolationKind::MutantLineOutOfRange: return "MutantLineOutOfRange";
    }
    return "Unknown";
}

std::string Violation::format() const {
    std::string out = to_string(kind);
    if (timepoint >= 0)
        out += "@" + std::to_string(timepoint);
    if (!detail.empty())
        out += ": " + detail;
    return out;
}

namespace {

void validate_change_map(const ChangeMap& cm, int timepoint,
                         std::vector<Violation>& out) {
    int delta = 0;
    int prev_end = 0;
    bool prev_empty = false;
    bool first = true;
    for (const Hunk& h : cm.hunks) {
        if (h.old_len < 0 || h.new_len < 0 || h.old_start < (h.old_len == 0 ? 0 : 1) ||
            h.new_start < (h.new_len == 0 ? 0 : 1)) {
            out.push_back({ViolationKind::MalformedChangeMap, timepoint,
                           "hunk range out of bounds"});
            continue;
        }
        const int anchor = h.old_start + (h.old_len == 0 ? 1 : 0);
        if (!first && anchor < prev_end + (prev_empty ? 1 : 0))
            out.push_back({ViolationKind::MalformedChangeMap, timepoint,
                           "hunks overlap or are out of order"});
        first = false;
        prev_end = h.old_start + h.old_len;
        prev_empty = h.old_len == 0;

        for (int l : h.removed_lines) {
            if (l < h.old_start || l >= h.old_start + h.old_len) {
                out.push_back({ViolationKind::MalformedChangeMap, timepoint,
                               "removed line outside hunk old range"});
                break;
            }
        }
        for (int l : h.added_lines) {
            if (l < h.new_start || l >= h.new_start + h.new_len) {
                out.push_back({ViolationKind::MalformedChangeMap, timepoint,
                               "added line outside hunk new range"});
                break;
            }
        }
        const int kept_old = h.old_len - static_cast<int>(h.removed_lines.size());
        const int kept_new = h.new_len - static_cast<int>(h.added_lines.size());
        if (kept_old != kept_new)
            out.push_back({ViolationKind::MalformedChangeMap, timepoint,
                           "kept line counts differ between hunk sides"});
        delta += h.new_len - h.old_len;
    }
    if (cm.new_line_count != cm.old_line_count + delta)
        out.push_back({ViolationKind::ChangeMapCountMismatch, timepoint,
                       "hunk deltas applied to old_line_count do not yield "
                       "new_line_count"});
}

}  // namespace

std::vector<Violation> validate_timeline(const Timeline& timeline) {
    std::vector<Violation> out;
    if (timeline.points.empty()) {
        out.push_back({ViolationKind::EmptyTimeline, -1, "timeline has no points"});
        return out;
    }
    const int last = static_cast<int>(timeline.points.size()) - 1;
    for (int t = 0; t <= last; ++t) {
        const TimePoint& tp = timeline.points[static_cast<std::size_t>(t)];
        if (tp.index != t)
            out.push_back({ViolationKind::NonConsecutiveIndex, t,
                           "index " + std::to_string(tp.index)});
        if (t < last && !tp.change_to_next)
            out.push_back({ViolationKind::MissingChangeMap, t, ""});
        if (t == last && tp.change_to_next)
            out.push_back({ViolationKind::UnexpectedChangeMap, t, ""});

        std::unordered_set<std::string> ids;
        std::unordered_set<MutantKey> keys;
        for (const Mutant& m : tp.mutants) {
            if (m.line < 1)
                out.push_back({ViolationKind::BadMutantLine, t, m.id.value});
            if (!ids.insert(m.id.value).second)
                out.push_back({ViolationKind::DuplicateMutantId, t, m.id.value});
            if (!keys.insert(MutantKey::of(m)).second)
                out.push_back({ViolationKind::DuplicateMutantKey, t, m.id.value});
            if (tp.change_to_next && m.line > tp.change_to_next->old_line_count)
                out.push_back({ViolationKind::MutantLineOutOfRange, t,
                               m.id.value + " on line " + std::to_string(m.line)});
        }
        for (const MutantId& id : tp.kills.mutant_ids()) {
            if (!ids.count(id.value))
                out.push_back({ViolationKind::OrphanMatrixRow, t, id.value});
        }
        for (const Mutant& m : tp.mutants) {
            if (!tp.kills.row_index(m.id))
                out.push_back({ViolationKind::MissingMatrixRow, t, m.id.value});
        }
        if (tp.change_to_next)
            validate_change_map(*tp.change_to_next, t, out);
    }
    return out;
}

}  // namespace lifeline
