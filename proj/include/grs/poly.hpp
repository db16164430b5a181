#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "grs/errors.hpp"
#include "grs/field.hpp"

namespace grs {

/// Polynomial over GF(q), little-endian coefficients (coeffs()[i] is the
/// coefficient of x^i), kept in canonical trimmed form: no trailing zeros,
/// zero polynomial has an empty list. Membership in the message space of a
/// dimension-k code is the length check coeffs().size() <= k.
class Poly {
public:
    Poly(FieldPtr field, std::vector<Fe> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        for (Fe c : coeffs_) touch(c);
        trim();
    }

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }

    static Poly from_values(const FieldPtr& field, std::initializer_list<std::uint64_t> values) {
        std::vector<Fe> coeffs;
        coeffs.reserve(values.size());
        for (std::uint64_t v : values) coeffs.push_back(field->element(v));
        return Poly(field, std::move(coeffs));
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Fe>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1 (stand-in for -inf).
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Fe coefficient_at(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : Field::zero();
    }

    /// Horner evaluation.
    Fe eval(Fe a) const {
        touch(a);
        Fe acc = Field::zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = field_->add(field_->mul(acc, a), coeffs_[i]);
        }
        return acc;
    }

    /// f(x) -> f(x + a). Degree is preserved.
    Poly shifted(Fe a) const {
        touch(a);
        // Horner on the coefficient list: acc <- acc*(x+a) + c_i.
        std::vector<Fe> acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc.push_back(Field::zero());
            for (std::size_t j = acc.size() - 1; j > 0; --j) {
                acc[j] = field_->add(acc[j - 1], field_->mul(acc[j], a));
            }
            acc[0] = field_->add(field_->mul(acc[0], a), coeffs_[i]);
        }
        return Poly(field_, std::move(acc));
    }

    /// Every coefficient multiplied by lambda; lambda = 0 collapses to zero.
    Poly scaled(Fe lambda) const {
        touch(lambda);
        std::vector<Fe> out;
        out.reserve(coeffs_.size());
        for (Fe c : coeffs_) out.push_back(field_->mul(c, lambda));
        return Poly(field_, std::move(out));
    }

    /// Coefficient reversal inside the degree-(k-1) window: g_j = f_{k-1-j}.
    /// A polynomial of degree below k-1 still reverses within the window,
    /// e.g. a constant with k=3 becomes c*x^2.
    Poly reversed(std::size_t k) const {
        require_window(k);
        std::vector<Fe> out(k, Field::zero());
        for (std::size_t j = 0; j < k; ++j) out[j] = coefficient_at(k - 1 - j);
        return Poly(field_, std::move(out));
    }

    /// g(x) = sum_i f_i * (1 + gamma*x)^i * x^(k-1-i). Total degree of every
    /// summand is k-1, so deg g <= k-1, and g(0) = f_{k-1}. With gamma = 0
    /// this is exactly reversed(k).
    Poly twisted_reversed(std::size_t k, Fe gamma) const {
        touch(gamma);
        require_window(k);
        std::vector<Fe> out(k, Field::zero());
        std::vector<Fe> twist{Field::one()};  // (1 + gamma*x)^i, expanded exactly
        for (std::size_t i = 0; i < k; ++i) {
            Fe fi = coefficient_at(i);
            if (fi != Field::zero()) {
                for (std::size_t j = 0; j < twist.size(); ++j) {
                    std::size_t pos = k - 1 - i + j;
                    out[pos] = field_->add(out[pos], field_->mul(fi, twist[j]));
                }
            }
            if (i + 1 < k) {
                twist.push_back(Field::zero());
                for (std::size_t j = twist.size() - 1; j > 0; --j) {
                    twist[j] = field_->add(twist[j], field_->mul(twist[j - 1], gamma));
                }
            }
        }
        return Poly(field_, std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return same_field(a.field_, b.field_) && a.coeffs_ == b.coeffs_;
    }

private:
    void touch(Fe c) const {
        if (!field_->contains(c)) {
            throw Error(Errc::FieldMismatch, "coefficient value=" + std::to_string(c.v) +
                                                 " not in GF(" + std::to_string(field_->order()) + ")");
        }
    }

    void require_window(std::size_t k) const {
        if (coeffs_.size() > k) {
            throw Error(Errc::DegreeTooHigh, "deg=" + std::to_string(degree()) +
                                                 " exceeds window k=" + std::to_string(k));
        }
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Field::zero()) coeffs_.pop_back();
    }

    FieldPtr field_;
    std::vector<Fe> coeffs_;
};

}  // namespace grs
