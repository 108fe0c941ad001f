// SPDX-License-Identifier: Apache-2.0
#include "lifeline/diff.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>

#include "lifeline/errors.hpp"

namespace lifeline {

namespace {

struct HunkHeader {
    int old_start;
    int old_len;
    int new_start;
    int new_len;
};

bool parse_range(std::string_view& s, char sign, int& start, int& len) {
    if (s.empty() || s.front() != sign)
        return false;
    s.remove_prefix(1);
    auto first_not_digit = s.find_first_not_of("0123456789");
    if (first_not_digit == 0)
        return false;
    auto digits = s.substr(0, first_not_digit);
    if (std::from_chars(digits.data(), digits.data() + digits.size(), start).ec !=
        std::errc{})
        return false;
    s.remove_prefix(digits.size());
    len = 1;  // "@@ -a +c @@" means length 1
    if (!s.empty() && s.front() == ',') {
        s.remove_prefix(1);
        first_not_digit = s.find_first_not_of("0123456789");
        if (first_not_digit == 0)
            return false;
        digits = s.substr(0, first_not_digit);
        if (std::from_chars(digits.data(), digits.data() + digits.size(), len).ec !=
            std::errc{})
            return false;
        s.remove_prefix(digits.size());
    }
    return true;
}

std::optional<HunkHeader> parse_hunk_header(std::string_view line) {
    if (!line.starts_with("@@ "))
        return std::nullopt;
    std::string_view s = line.substr(3);
    HunkHeader h{};
    if (!parse_range(s, '-', h.old_start, h.old_len))
        throw MalformedDiff("bad hunk header: " + std::string(line));
    if (s.empty() || s.front() != ' ')
        throw MalformedDiff("bad hunk header: " + std::string(line));
    s.remove_prefix(1);
    if (!parse_range(s, '+', h.new_start, h.new_len))
        throw MalformedDiff("bad hunk header: " + std::string(line));
    if (!s.starts_with(" @@"))
        throw MalformedDiff("bad hunk header: " + std::string(line));
    if (h.old_start < (h.old_len == 0 ? 0 : 1) || h.new_start < (h.new_len == 0 ? 0 : 1))
        throw MalformedDiff("hunk range start out of bounds: " + std::string(line));
    return h;
}

// Old-coordinate position just past the hunk; zero-length hunks sit in the
// gap after old_start.
int old_end_exclusive(const Hunk& h) {
    return h.old_len == 0 ? h.old_start + 1 : h.old_start + h.old_len;
}

int old_extent(const Hunk& h) {
    return h.old_len == 0 ? h.old_start : h.old_start + h.old_len - 1;
}

void check_hunk_order(const std::vector<Hunk>& hunks) {
    for (std::size_t i = 1; i < hunks.size(); ++i) {
        const bool prev_empty = hunks[i - 1].old_len == 0;
        const int prev_end = hunks[i - 1].old_start + hunks[i - 1].old_len;
        const int cur_anchor = hunks[i].old_start + (hunks[i].old_len == 0 ? 1 : 0);
        if (cur_anchor < prev_end + (prev_empty ? 1 : 0))
            throw MalformedDiff("hunks overlap or are out of order");
    }
}

}  // namespace

ChangeMap parse_unified_diff(std::string_view text, std::optional<int> old_line_count) {
    ChangeMap cm;
    int delta = 0;
    Hunk* current = nullptr;
    int old_pos = 0;
    int new_pos = 0;
    int old_remaining = 0;
    int new_remaining = 0;
    bool seen_hunk = false;

    auto finish_hunk = [&] {
        if (current && (old_remaining != 0 || new_remaining != 0))
            throw MalformedDiff("hunk body shorter than header counts");
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size())
            break;
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;

        if (line.starts_with("@@")) {
            auto header = parse_hunk_header(line);
            if (!header)
                throw MalformedDiff("bad hunk header: " + std::string(line));
            finish_hunk();
            const int expected_new_start =
                header->old_len == 0
                    ? header->old_start + delta + (header->new_len == 0 ? 0 : 1)
                    : header->old_start + delta - (header->new_len == 0 ? 1 : 0);
            if (header->new_start != expected_new_start)
                throw MalformedDiff("hunk new range inconsistent with offsets: " +
                                    std::string(line));
            cm.hunks.push_back(Hunk{header->old_start, header->old_len,
                                    header->new_start, header->new_len,
                                    {},
                                    {}});
            current = &cm.hunks.back();
            old_pos = header->old_start;
            new_pos = header->new_start;
            old_remaining = header->old_len;
            new_remaining = header->new_len;
            delta += header->new_len - header->old_len;
            seen_hunk = true;
            continue;
        }
        if (!seen_hunk) {
            // "diff --git", "---", "+++", "index" and similar preamble.
            continue;
        }
        if (line.starts_with("\\")) {
            // "\ No newline at end of file": affects bytes, not line identity.
            continue;
        }
        if (!current)
            throw MalformedDiff("diff body outside of a hunk");
        if (line.starts_with(" ") || line.empty()) {
            // An empty line inside a hunk is a context line whose content is
            // empty (some tools trim the trailing space).
            if (--old_remaining < 0 || --new_remaining < 0)
                throw MalformedDiff("hunk body longer than header counts");
            ++old_pos;
            ++new_pos;
        } else if (line.starts_with("-")) {
            if (--old_remaining < 0)
                throw MalformedDiff("hunk body longer than header counts");
            current->removed_lines.insert(old_pos);
            ++old_pos;
        } else if (line.starts_with("+")) {
            if (--new_remaining < 0)
                throw MalformedDiff("hunk body longer than header counts");
            current->added_lines.insert(new_pos);
            ++new_pos;
        } else {
            throw MalformedDiff("unexpected diff body line: " + std::string(line));
        }
    }
    finish_hunk();
    check_hunk_order(cm.hunks);

    int extent = 0;
    for (const Hunk& h : cm.hunks)
        extent = std::max(extent, old_extent(h));
    if (old_line_count) {
        if (*old_line_count < extent)
            throw MalformedDiff("diff extends past the declared old line count");
        cm.old_line_count = *old_line_count;
    } else {
        cm.old_line_count = extent;
    }
    cm.new_line_count = cm.old_line_count + delta;
    return cm;
}

namespace {

// Backward LCS table over int-coded lines; L(i,j) = LCS length of
// old[i..), new[j..).
class LcsTable {
public:
    LcsTable(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b)
        : n_(a.size()), m_(b.size()), cells_((n_ + 1) * (m_ + 1), 0) {
        for (std::size_t i = n_; i-- > 0;) {
            for (std::size_t j = m_; j-- > 0;) {
                std::int32_t best = std::max(at(i + 1, j), at(i, j + 1));
                if (a[i] == b[j])
                    best = std::max(best, static_cast<std::int32_t>(1 + at(i + 1, j + 1)));
                at(i, j) = best;
            }
        }
    }

    std::int32_t& at(std::size_t i, std::size_t j) { return cells_[i * (m_ + 1) + j]; }

private:
    std::size_t n_, m_;
    std::vector<std::int32_t> cells_;
};

std::vector<std::int32_t> code_lines(const std::vector<std::string>& lines,
                                     std::unordered_map<std::string_view, std::int32_t>&
                                         codes) {
    std::vector<std::int32_t> out;
    out.reserve(lines.size());
    for (const std::string& line : lines) {
        auto [it, _] = codes.emplace(line, static_cast<std::int32_t>(codes.size()));
        out.push_back(it->second);
    }
    return out;
}

}  // namespace

ChangeMap compute_hunks(const std::vector<std::string>& old_lines,
                        const std::vector<std::string>& new_lines) {
    ChangeMap cm;
    cm.old_line_count = static_cast<int>(old_lines.size());
    cm.new_line_count = static_cast<int>(new_lines.size());

    std::unordered_map<std::string_view, std::int32_t> codes;
    std::vector<std::int32_t> a = code_lines(old_lines, codes);
    std::vector<std::int32_t> b = code_lines(new_lines, codes);

    // Greedy prefix matching preserves both optimality and the
    // earliest-old-match tie policy; suffix stripping would not.
    std::size_t prefix = 0;
    while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix])
        ++prefix;
    std::vector<std::int32_t> am(a.begin() + prefix, a.end());
    std::vector<std::int32_t> bm(b.begin() + prefix, b.end());

    LcsTable table(am, bm);
    const std::size_t n = am.size(), m = bm.size();

    // Forward walk emitting edits between matches; ties advance the new
    // side so earlier old lines stay available to match.
    std::size_t i = 0, j = 0;
    Hunk pending;
    bool open = false;
    auto flush = [&] {
        if (!open)
            return;
        cm.hunks.push_back(pending);
        pending = Hunk{};
        open = false;
    };
    auto ensure_open = [&] {
        if (open)
            return;
        pending = Hunk{};
        // Anchors are fixed up when the first removed/added line arrives.
        pending.old_start = static_cast<int>(prefix + i);  // gap position for now
        pending.new_start = static_cast<int>(prefix + j);
        pending.old_len = 0;
        pending.new_len = 0;
        open = true;
    };
    auto remove_old = [&] {
        ensure_open();
        const int line = static_cast<int>(prefix + i + 1);
        if (pending.old_len == 0)
            pending.old_start = line;
        pending.old_len = line - pending.old_start + 1;
        pending.removed_lines.insert(line);
        ++i;
    };
    auto add_new = [&] {
        ensure_open();
        const int line = static_cast<int>(prefix + j + 1);
        if (pending.new_len == 0)
            pending.new_start = line;
        pending.new_len = line - pending.new_start + 1;
        pending.added_lines.insert(line);
        ++j;
    };

    while (i < n && j < m) {
        if (am[i] == bm[j] && table.at(i, j) == table.at(i + 1, j + 1) + 1) {
            flush();
            ++i;
            ++j;
        } else if (table.at(i + 1, j) > table.at(i, j + 1)) {
            remove_old();
        } else {
            add_new();
        }
    }
    while (i < n)
        remove_old();
    while (j < m)
        add_new();
    flush();
    return cm;
}

std::string format_unified_diff(const std::vector<std::string>& old_lines,
                                const std::vector<std::string>& new_lines,
                                const ChangeMap& cm) {
    std::string out;
    for (const Hunk& h : cm.hunks) {
        out += "@@ -" + std::to_string(h.old_start) + "," + std::to_string(h.old_len) +
               " +" + std::to_string(h.new_start) + "," + std::to_string(h.new_len) +
               " @@\n";
        int op = h.old_len == 0 ? h.old_start + 1 : h.old_start;
        int np = h.new_len == 0 ? h.new_start + 1 : h.new_start;
        const int old_end = op + h.old_len;
        const int new_end = np + h.new_len;
        while (op < old_end || np < new_end) {
            while (op < old_end && np < new_end && !h.removed_lines.count(op) &&
                   !h.added_lines.count(np)) {
                out += " " + old_lines.at(static_cast<std::size_t>(op - 1)) + "\n";
                ++op;
                ++np;
            }
            while (op < old_end && h.removed_lines.count(op)) {
                out += "-" + old_lines.at(static_cast<std::size_t>(op - 1)) + "\n";
                ++op;
            }
            while (np < new_end && h.added_lines.count(np)) {
                out += "+" + new_lines.at(static_cast<std::size_t>(np - 1)) + "\n";
                ++np;
            }
        }
    }
    return out;
}

std::optional<int> map_line(const ChangeMap& cm, int old_line) {
    if (old_line < 1 || old_line > cm.old_line_count)
        throw LineOutOfRange("line " + std::to_string(old_line) + " outside [1, " +
                             std::to_string(cm.old_line_count) + "]");
    int delta = 0;
    for (const Hunk& h : cm.hunks) {
        const bool inside =
            h.old_len > 0 && old_line >= h.old_start && old_line < h.old_start + h.old_len;
        if (inside) {
            if (h.removed_lines.count(old_line))
                return std::nullopt;
            // Context line: pair the k-th kept old line of the hunk with the
            // k-th kept new line.
            int rank = 0;
            for (int l = h.old_start; l <= old_line; ++l)
                if (!h.removed_lines.count(l))
                    ++rank;
            int seen = 0;
            for (int nl = h.new_start; nl < h.new_start + h.new_len; ++nl) {
                if (!h.added_lines.count(nl) && ++seen == rank)
                    return nl;
            }
            // Kept counts on the two sides of a well-formed hunk agree.
            return std::nullopt;
        }
        if (old_end_exclusive(h) <= old_line) {
            delta += h.new_len - h.old_len;
            continue;
        }
        break;  // hunks are sorted; the rest start below old_line
    }
    return old_line + delta;
}

MutantIndex::MutantIndex(const std::vector<Mutant>& mutants) {
    by_key_.reserve(mutants.size());
    for (const Mutant& m : mutants)
        by_key_.emplace(MutantKey::of(m), m.id);
}

std::optional<MutantId> MutantIndex::find(const MutantKey& key) const {
    auto it = by_key_.find(key);
    if (it == by_key_.end())
        return std::nullopt;
    return it->second;
}

std::optional<MutantId> map_mutant(const ChangeMap& cm, const Mutant& m,
                                   const MutantIndex& next_index) {
    auto mapped = map_line(cm, m.line);
    if (!mapped)
        return std::nullopt;
    return next_index.find(MutantKey{m.file, *mapped, m.inline_ordinal, m.operator_name});
}

std::optional<MutantId> map_mutant(const ChangeMap& cm, const Mutant& m,
                                   const std::vector<Mutant>& next_mutants) {
    return map_mutant(cm, m, MutantIndex(next_mutants));
}

}  // namespace lifeline
