#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grs/codes.hpp"
#include "grs/errors.hpp"
#include "grs/field.hpp"
#include "grs/matrix.hpp"

namespace grs {

/// Reduced row-echelon form of a generator matrix, zero rows removed: the
/// canonical representative of a code's row space. Two codes coincide as
/// subspaces iff their fingerprints compare equal entrywise.
struct Fingerprint {
    Matrix rref;

    std::size_t dimension() const noexcept { return rref.rows(); }
    std::size_t block_length() const noexcept { return rref.cols(); }

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.rref == b.rref; }

    /// FNV-1a over shape and entries, usable for cataloging fingerprints.
    std::uint64_t hash() const noexcept {
        std::uint64_t h = 14695981039346656037ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(rref.rows());
        mix(rref.cols());
        for (std::size_t r = 0; r < rref.rows(); ++r) {
            for (std::size_t c = 0; c < rref.cols(); ++c) mix(rref.at(r, c).v);
        }
        return h;
    }
};

/// Gauss-Jordan elimination with exact field arithmetic. Pivot selection is
/// the first nonzero entry scanning top to bottom in the current column.
inline Fingerprint rref(const Matrix& input) {
    Matrix m = input;
    const FieldPtr& field = m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t src = pivot_row;
        while (src < m.rows() && m.at(src, col) == Field::zero()) ++src;
        if (src == m.rows()) continue;
        m.swap_rows(pivot_row, src);
        const Fe scale = field->inv(m.at(pivot_row, col));
        for (std::size_t c = col; c < m.cols(); ++c) m.at(pivot_row, c) = field->mul(m.at(pivot_row, c), scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row) continue;
            const Fe factor = m.at(r, col);
            if (factor == Field::zero()) continue;
            for (std::size_t c = col; c < m.cols(); ++c) {
                m.at(r, c) = field->sub(m.at(r, c), field->mul(factor, m.at(pivot_row, c)));
            }
        }
        ++pivot_row;
    }
    m.truncate_rows(pivot_row);
    return Fingerprint{std::move(m)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).dimension(); }

/// Subspace equality: same block length and identical RREF fingerprints.
/// Mismatched lengths answer false; mismatched fields are an error.
template <LinearCode A, LinearCode B>
bool codes_equal(const A& a, const B& b) {
    require_same_field(a.field(), b.field());
    if (a.block_length() != b.block_length()) return false;
    return rref(a.generator_matrix()) == rref(b.generator_matrix());
}

struct DistanceReport {
    std::size_t d = 0;              ///< minimum nonzero Hamming weight
    std::size_t block_length = 0;   ///< N
    std::size_t dim = 0;            ///< k
    bool is_mds = false;            ///< d == N - k + 1
    std::uint64_t messages_scanned = 0;
};

/// Exact minimum distance by enumerating all q^k codewords. The walk is an
/// odometer over messages keeping the running codeword as a partial sum:
/// when digit i moves from value t to t', the word changes by
/// (Fe{t'} - Fe{t}) * row_i. In extension fields consecutive packed values
/// do not differ by 1 at digit-carry boundaries, so the delta is computed
/// per transition (it is 1 in the common case).
template <LinearCode C>
DistanceReport min_distance(const C& code, std::uint64_t limit = kDefaultEnumLimit) {
    const FieldPtr& field = code.field();
    const std::size_t k = code.dim();
    const std::size_t block = code.block_length();
    auto total = detail::message_count(field->order(), k, limit);
    if (!total) throw Error(Errc::EnumerationTooLarge, "q^k exceeds limit=" + std::to_string(limit));

    const Matrix gen = code.generator_matrix();
    const std::uint32_t top = static_cast<std::uint32_t>(field->order() - 1);
    std::vector<std::uint32_t> digits(k, 0);
    std::vector<Fe> word(block, Field::zero());

    std::size_t best = block + 1;
    std::uint64_t scanned = 1;  // the zero message
    for (std::uint64_t step = 1; step < *total; ++step) {
        for (std::size_t i = 0;; ++i) {
            auto row = gen.row(i);
            const std::uint32_t t = digits[i];
            const Fe diff = t < top ? field->sub(Fe{t + 1}, Fe{t}) : field->neg(Fe{top});
            if (diff == Field::one()) {
                for (std::size_t c = 0; c < block; ++c) word[c] = field->add(word[c], row[c]);
            } else {
                for (std::size_t c = 0; c < block; ++c) {
                    word[c] = field->add(word[c], field->mul(diff, row[c]));
                }
            }
            if (t < top) {
                ++digits[i];
                break;
            }
            digits[i] = 0;
        }
        std::size_t weight = 0;
        for (Fe s : word) weight += (s != Field::zero());
        if (weight < best) best = weight;
        ++scanned;
        if (best == 1) break;  // cannot go lower
    }

    DistanceReport report;
    report.d = best;
    report.block_length = block;
    report.dim = k;
    report.is_mds = (best == block - k + 1);
    report.messages_scanned = scanned;
    return report;
}

}  // namespace grs
