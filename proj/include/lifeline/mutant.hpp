// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lifeline {

// Opaque mutant identifier; unique within one time point, not across them.
struct MutantId {
    std::string value;

    auto operator<=>(const MutantId&) const = default;
};

// One seeded fault. Identity across versions is keyed on
// (file, line, inline_ordinal, operator_name); ids are per-version labels.
struct Mutant {
    MutantId id;
    std::string file;
    int line = 1;  // 1-based
    int inline_ordinal = 0;  // 0-based index among mutants sharing (file, line)
    std::string operator_name;
    std::string description;

    bool operator==(const Mutant&) const = default;
};

// The identity key used when matching a mutant against a regenerated set.
struct MutantKey {
    std::string file;
    int line = 1;
    int inline_ordinal = 0;
    std::string operator_name;

    auto operator<=>(const MutantKey&) const = default;

    static MutantKey of(const Mutant& m) {
        return MutantKey{m.file, m.line, m.inline_ordinal, m.operator_name};
    }
};

}  // namespace lifeline

template <>
struct std::hash<lifeline::MutantId> {
    std::size_t operator()(const lifeline::MutantId& id) const noexcept {
        return std::hash<std::string>{}(id.value);
    }
};

template <>
struct std::hash<lifeline::MutantKey> {
    std::size_t operator()(const lifeline::MutantKey& k) const noexcept {
        std::size_t h = std::hash<std::string>{}(k.file);
        h ^= std::hash<int>{}(k.line) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<int>{}(k.inline_ordinal) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(k.operator_name) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h;
    }
};
