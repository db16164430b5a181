#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grs/errors.hpp"
#include "grs/field.hpp"
#include "grs/matrix.hpp"

namespace grs {

using Codeword = std::vector<Fe>;

/// Messages enumerable per code: q^k capped by this unless a caller raises it.
inline constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t{1} << 22;

namespace detail {

/// q^k when it is <= limit, nullopt otherwise (overflow-safe).
inline std::optional<std::uint64_t> message_count(std::uint64_t q, std::size_t k, std::uint64_t limit) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > limit / q) return std::nullopt;
        total *= q;
    }
    if (total > limit) return std::nullopt;
    return total;
}

inline void validate_descriptor(const FieldPtr& field, std::size_t k, const std::vector<Fe>& alpha,
                                const std::vector<Fe>& v, bool extended) {
    const std::size_t n = alpha.size();
    if (v.size() != n) throw Error(Errc::BadDimension, "alpha and v lengths differ");
    if (n < 1) throw Error(Errc::BadDimension, "n must be >= 1");
    const std::size_t k_max = extended ? n + 1 : n;
    if (k < 1 || k > k_max) {
        throw Error(Errc::BadDimension,
                    "k=" + std::to_string(k) + " outside [1," + std::to_string(k_max) + "]");
    }
    if (n > field->order()) {
        throw Error(Errc::LengthExceedsField,
                    "n=" + std::to_string(n) + " > q=" + std::to_string(field->order()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!field->contains(alpha[i]) || !field->contains(v[i])) {
            throw Error(Errc::FieldMismatch, "descriptor entry out of field at index=" + std::to_string(i));
        }
        if (v[i] == Field::zero()) throw Error(Errc::ZeroMultiplier, "index=" + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (alpha[i] == alpha[j]) {
                throw Error(Errc::DuplicateEvaluationPoint,
                            "indices=" + std::to_string(i) + "," + std::to_string(j));
            }
        }
    }
}

inline void check_message(const FieldPtr& field, std::size_t k, std::span<const Fe> msg) {
    if (msg.size() != k) {
        throw Error(Errc::BadMessageLength,
                    "got " + std::to_string(msg.size()) + ", expected k=" + std::to_string(k));
    }
    for (Fe c : msg) {
        if (!field->contains(c)) throw Error(Errc::FieldMismatch, "message symbol out of field");
    }
}

/// Horner evaluation of the message polynomial sum msg[i]*x^i at point a.
inline Fe eval_message(const Field& field, std::span<const Fe> msg, Fe a) {
    Fe acc = Field::zero();
    for (std::size_t i = msg.size(); i-- > 0;) acc = field.add(field.mul(acc, a), msg[i]);
    return acc;
}

}  // namespace detail

/// Code {(v_1 f(a_1), ..., v_n f(a_n)) : deg f <= k-1} with distinct
/// evaluation points and nonzero column multipliers. Block length N = n.
class GrsCode {
public:
    GrsCode(FieldPtr field, std::size_t k, std::vector<Fe> alpha, std::vector<Fe> v)
        : field_(std::move(field)), k_(k), alpha_(std::move(alpha)), v_(std::move(v)) {
        detail::validate_descriptor(field_, k_, alpha_, v_, /*extended=*/false);
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return k_; }
    std::size_t n() const noexcept { return alpha_.size(); }
    std::size_t block_length() const noexcept { return alpha_.size(); }
    const std::vector<Fe>& alpha() const noexcept { return alpha_; }
    const std::vector<Fe>& multipliers() const noexcept { return v_; }

    /// msg holds the coefficients f_0..f_{k-1}; symbol_i = v_i * f(alpha_i).
    Codeword encode(std::span<const Fe> msg) const {
        detail::check_message(field_, k_, msg);
        Codeword word;
        word.reserve(block_length());
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            word.push_back(field_->mul(v_[i], detail::eval_message(*field_, msg, alpha_[i])));
        }
        return word;
    }

    Codeword encode(const std::vector<Fe>& msg) const { return encode(std::span<const Fe>(msg)); }

    /// Row i is the encoding of the monomial x^i.
    Matrix generator_matrix() const {
        Matrix g(field_, k_, block_length());
        std::vector<Fe> unit(k_, Field::zero());
        for (std::size_t i = 0; i < k_; ++i) {
            unit[i] = Field::one();
            Codeword row = encode(unit);
            for (std::size_t c = 0; c < row.size(); ++c) g.at(i, c) = row[c];
            unit[i] = Field::zero();
        }
        return g;
    }

private:
    FieldPtr field_;
    std::size_t k_;
    std::vector<Fe> alpha_;
    std::vector<Fe> v_;
};

/// GRS code extended by one coordinate carrying f_{k-1}, the coefficient of
/// x^{k-1} ("evaluation at infinity"). Block length N = n + 1, and k may
/// reach n + 1: the n evaluations plus the leading coefficient still
/// determine f uniquely.
class EgrsCode {
public:
    EgrsCode(FieldPtr field, std::size_t k, std::vector<Fe> alpha, std::vector<Fe> v)
        : field_(std::move(field)), k_(k), alpha_(std::move(alpha)), v_(std::move(v)) {
        detail::validate_descriptor(field_, k_, alpha_, v_, /*extended=*/true);
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return k_; }
    std::size_t n() const noexcept { return alpha_.size(); }
    std::size_t block_length() const noexcept { return alpha_.size() + 1; }
    const std::vector<Fe>& alpha() const noexcept { return alpha_; }
    const std::vector<Fe>& multipliers() const noexcept { return v_; }

    Codeword encode(std::span<const Fe> msg) const {
        detail::check_message(field_, k_, msg);
        Codeword word;
        word.reserve(block_length());
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            word.push_back(field_->mul(v_[i], detail::eval_message(*field_, msg, alpha_[i])));
        }
        word.push_back(msg[k_ - 1]);
        return word;
    }

    Codeword encode(const std::vector<Fe>& msg) const { return encode(std::span<const Fe>(msg)); }

    Matrix generator_matrix() const {
        Matrix g(field_, k_, block_length());
        std::vector<Fe> unit(k_, Field::zero());
        for (std::size_t i = 0; i < k_; ++i) {
            unit[i] = Field::one();
            Codeword row = encode(unit);
            for (std::size_t c = 0; c < row.size(); ++c) g.at(i, c) = row[c];
            unit[i] = Field::zero();
        }
        return g;
    }

private:
    FieldPtr field_;
    std::size_t k_;
    std::vector<Fe> alpha_;
    std::vector<Fe> v_;
};

template <class C>
concept LinearCode = requires(const C& code, std::span<const Fe> msg) {
    { code.field() } -> std::convertible_to<const FieldPtr&>;
    { code.dim() } -> std::convertible_to<std::size_t>;
    { code.block_length() } -> std::convertible_to<std::size_t>;
    { code.encode(msg) } -> std::convertible_to<Codeword>;
    { code.generator_matrix() } -> std::convertible_to<Matrix>;
};

/// Streams all q^k codewords, one per message, messages in lexicographic
/// value order ((0,...,0), (0,...,1), ...). Consume from one thread at a
/// time per instance.
template <LinearCode C>
class CodewordStream {
public:
    explicit CodewordStream(const C& code, std::uint64_t limit = kDefaultEnumLimit) : code_(&code) {
        auto total = detail::message_count(code.field()->order(), code.dim(), limit);
        if (!total) {
            throw Error(Errc::EnumerationTooLarge, "q^k exceeds limit=" + std::to_string(limit));
        }
        total_ = *total;
        digits_.assign(code.dim(), Field::zero());
    }

    std::uint64_t total() const noexcept { return total_; }

    std::optional<Codeword> next() {
        if (produced_ == total_) return std::nullopt;
        Codeword word = code_->encode(digits_);
        ++produced_;
        // Lexicographic successor: bump the last coordinate first.
        const std::uint32_t top = static_cast<std::uint32_t>(code_->field()->order() - 1);
        for (std::size_t i = digits_.size(); i-- > 0;) {
            if (digits_[i].v < top) {
                ++digits_[i].v;
                break;
            }
            digits_[i].v = 0;
        }
        return word;
    }

private:
    const C* code_;
    std::vector<Fe> digits_;
    std::uint64_t total_ = 0;
    std::uint64_t produced_ = 0;
};

template <LinearCode C>
std::vector<Codeword> codewords(const C& code, std::uint64_t limit = kDefaultEnumLimit) {
    CodewordStream<C> stream(code, limit);
    std::vector<Codeword> out;
    out.reserve(static_cast<std::size_t>(stream.total()));
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

}  // namespace grs
