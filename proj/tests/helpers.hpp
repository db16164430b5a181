#pragma once

// Shared test utilities. codeword_sets_equal is the enumeration oracle used
// to cross-check the RREF-fingerprint equality path; it must stay
// independent of analysis.hpp internals.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "grs/codes.hpp"
#include "grs/field.hpp"

namespace grstest {

inline std::vector<grs::Fe> fes(const grs::FieldPtr& field, std::initializer_list<std::uint64_t> values) {
    std::vector<grs::Fe> out;
    out.reserve(values.size());
    for (std::uint64_t v : values) out.push_back(field->element(v));
    return out;
}

template <grs::LinearCode A, grs::LinearCode B>
bool codeword_sets_equal(const A& a, const B& b, std::uint64_t limit = grs::kDefaultEnumLimit) {
    if (a.block_length() != b.block_length()) return false;
    std::vector<grs::Codeword> wa = grs::codewords(a, limit);
    std::vector<grs::Codeword> wb = grs::codewords(b, limit);
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return wa == wb;
}

}  // namespace grstest
