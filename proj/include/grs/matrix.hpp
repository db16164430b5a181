#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "grs/errors.hpp"
#include "grs/field.hpp"

namespace grs {

/// Dense row-major matrix over GF(q).
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, Field::zero()) {}

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Fe> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) throw Error(Errc::BadDimension, "entry count != rows*cols");
        for (Fe e : entries_) {
            if (!field_->contains(e)) throw Error(Errc::FieldMismatch, "matrix entry out of field");
        }
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Fe at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Fe& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Fe> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::span<Fe> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    /// Keeps the first `n` rows.
    void truncate_rows(std::size_t n) {
        rows_ = n;
        entries_.resize(rows_ * cols_);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fe> entries_;
};

}  // namespace grs
