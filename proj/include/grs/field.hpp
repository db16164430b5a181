#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "grs/errors.hpp"

namespace grs {

/// Element of GF(p^m) as a packed integer in [0, q): value = sum c_i * p^i
/// where sum c_i * X^i is the residue polynomial modulo the reduction
/// polynomial. For prime fields this is just the residue itself.
struct Fe {
    std::uint32_t v = 0;
    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fe a) { return os << a.v; }

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Exact arithmetic in GF(p^m). Immutable once constructed; every operation
/// is a pure function, safe to call from any number of threads.
///
/// Multiplication and inversion are definitional residue-polynomial
/// arithmetic; for q <= 2^16 a log/antilog table pair (derived from that same
/// arithmetic, so bit-for-bit identical) is built at construction and used as
/// the fast path.
class Field {
public:
    static constexpr std::uint32_t kMaxExtensionDegree = 32;

    /// Builds GF(p^m). When `reduction` is omitted and m > 1, picks the monic
    /// irreducible polynomial of degree m whose packed coefficient value
    /// (c_0 + c_1*p + ... + c_{m-1}*p^{m-1}) is smallest.
    static FieldPtr make(std::uint64_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> reduction = std::nullopt) {
        return std::make_shared<const Field>(p, m, std::move(reduction), Key{});
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    std::uint64_t order() const noexcept { return q_; }

    /// Little-endian coefficients of the reduction polynomial, size m+1 with
    /// a leading 1. Empty for prime fields (m == 1).
    const std::vector<std::uint32_t>& reduction() const noexcept { return reduction_; }

    static constexpr Fe zero() noexcept { return Fe{0}; }
    static constexpr Fe one() noexcept { return Fe{1}; }

    /// Validated element handle; throws FieldMismatch when value >= q.
    Fe element(std::uint64_t value) const {
        if (value >= q_) {
            throw Error(Errc::FieldMismatch,
                        "value=" + std::to_string(value) + " not in GF(" + std::to_string(q_) + ")");
        }
        return Fe{static_cast<std::uint32_t>(value)};
    }

    /// All q elements in ascending packed-value order: 0, 1, ..., q-1.
    std::vector<Fe> elements() const {
        std::vector<Fe> out;
        out.reserve(static_cast<std::size_t>(q_));
        for (std::uint64_t x = 0; x < q_; ++x) out.push_back(Fe{static_cast<std::uint32_t>(x)});
        return out;
    }

    bool contains(Fe a) const noexcept { return a.v < q_; }

    Fe add(Fe a, Fe b) const {
        check(a); check(b);
        if (m_ == 1) {
            std::uint64_t s = std::uint64_t{a.v} + b.v;
            if (s >= p_) s -= p_;
            return Fe{static_cast<std::uint32_t>(s)};
        }
        if (p_ == 2) return Fe{a.v ^ b.v};  // base-2 packing makes digit add a xor
        return digitwise(a, b, /*subtract=*/false);
    }

    Fe sub(Fe a, Fe b) const {
        check(a); check(b);
        if (m_ == 1) {
            std::uint64_t s = std::uint64_t{a.v} + p_ - b.v;
            if (s >= p_) s -= p_;
            return Fe{static_cast<std::uint32_t>(s)};
        }
        if (p_ == 2) return Fe{a.v ^ b.v};
        return digitwise(a, b, /*subtract=*/true);
    }

    Fe neg(Fe a) const { return sub(zero(), a); }

    Fe mul(Fe a, Fe b) const {
        check(a); check(b);
        if (!log_.empty()) {
            if (a.v == 0 || b.v == 0) return zero();
            return Fe{exp_[log_[a.v] + log_[b.v]]};
        }
        return mul_definitional(a, b);
    }

    /// Square-and-multiply; pow(a, 0) == 1 for every a, including a == 0.
    Fe pow(Fe a, std::uint64_t e) const {
        check(a);
        Fe result = one();
        Fe base = a;
        while (e != 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    /// Multiplicative inverse; throws DivisionByZero for the zero element.
    Fe inv(Fe a) const {
        check(a);
        if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        if (!log_.empty()) return Fe{exp_[q_ - 1 - log_[a.v]]};
        return pow(a, q_ - 2);  // a^(q-1) = 1 for a != 0
    }

    /// Same (p, m, reduction) means identical arithmetic tables.
    friend bool operator==(const Field& lhs, const Field& rhs) {
        return lhs.p_ == rhs.p_ && lhs.m_ == rhs.m_ && lhs.reduction_ == rhs.reduction_;
    }

    // Construction goes through make(); the Key forces that without hiding
    // the constructor from std::make_shared.
    struct Key {};
    Field(std::uint64_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> reduction, Key)
        : p_(p), m_(m) {
        if (!is_prime(p)) throw Error(Errc::NotPrime, "p=" + std::to_string(p));
        if (m < 1) throw Error(Errc::DegreeMismatch, "m must be >= 1");
        if (m > kMaxExtensionDegree) throw Error(Errc::DegreeMismatch, "m too large");
        q_ = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (q_ > (std::uint64_t{1} << 31) / p) throw Error(Errc::DegreeMismatch, "p^m exceeds supported range");
            q_ *= p;
        }
        if (reduction) {
            validate_reduction(*reduction);
            if (m_ > 1) reduction_ = std::move(*reduction);
        } else if (m_ > 1) {
            reduction_ = smallest_irreducible();
        }
        if (q_ <= (std::uint64_t{1} << 16)) build_tables();
    }

private:
    void check(Fe a) const {
        if (a.v >= q_) {
            throw Error(Errc::FieldMismatch,
                        "value=" + std::to_string(a.v) + " not in GF(" + std::to_string(q_) + ")");
        }
    }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) return false;
        }
        return true;
    }

    using Digits = std::array<std::uint32_t, kMaxExtensionDegree>;

    void unpack(std::uint32_t value, Digits& out) const {
        for (std::uint32_t i = 0; i < m_; ++i) {
            out[i] = static_cast<std::uint32_t>(value % p_);
            value = static_cast<std::uint32_t>(value / p_);
        }
    }

    Fe pack(const Digits& digits) const {
        std::uint64_t value = 0;
        for (std::uint32_t i = m_; i-- > 0;) value = value * p_ + digits[i];
        return Fe{static_cast<std::uint32_t>(value)};
    }

    Fe digitwise(Fe a, Fe b, bool subtract) const {
        Digits da{}, db{};
        unpack(a.v, da);
        unpack(b.v, db);
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t s = subtract ? da[i] + p_ - db[i] : std::uint64_t{da[i]} + db[i];
            if (s >= p_) s -= p_;
            da[i] = static_cast<std::uint32_t>(s);
        }
        return pack(da);
    }

    Fe mul_definitional(Fe a, Fe b) const {
        if (a.v == 0 || b.v == 0) return zero();
        if (m_ == 1) return Fe{static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % p_)};
        Digits da{}, db{};
        unpack(a.v, da);
        unpack(b.v, db);
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
        }
        // X^m = -(r_0 + r_1 X + ... + r_{m-1} X^{m-1}) modulo the reduction.
        for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
            std::uint64_t c = prod[d];
            if (c != 0) {
                prod[d] = 0;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    std::uint64_t drop = (c * reduction_[i]) % p_;
                    prod[d - m_ + i] = (prod[d - m_ + i] + p_ - drop) % p_;
                }
            }
        }
        Digits result{};
        for (std::uint32_t i = 0; i < m_; ++i) result[i] = static_cast<std::uint32_t>(prod[i]);
        return pack(result);
    }

    // --- polynomials over GF(p) as little-endian uint vectors (construction only) ---

    static void poly_mod(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& mod,
                         std::uint64_t p) {
        while (a.size() >= mod.size()) {
            std::uint64_t c = a.back();
            if (c != 0) {
                std::size_t shift = a.size() - mod.size();
                for (std::size_t i = 0; i < mod.size(); ++i) {
                    std::uint64_t drop = (c * mod[i]) % p;
                    a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - drop) % p);
                }
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.size() < mod.size()) break;
        }
    }

    static bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint64_t p) {
        // Trial division by every monic polynomial of degree 1..deg/2.
        std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
        for (std::uint32_t d = 1; d <= deg / 2; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t t = 0; t < count; ++t) {
                std::vector<std::uint32_t> divisor(d + 1);
                std::uint64_t tmp = t;
                for (std::uint32_t i = 0; i < d; ++i) {
                    divisor[i] = static_cast<std::uint32_t>(tmp % p);
                    tmp /= p;
                }
                divisor[d] = 1;
                std::vector<std::uint32_t> rem = poly;
                poly_mod(rem, divisor, p);
                if (rem.empty()) return false;
            }
        }
        return true;
    }

    void validate_reduction(const std::vector<std::uint32_t>& red) const {
        if (red.size() != std::size_t{m_} + 1) {
            throw Error(Errc::DegreeMismatch, "reduction must have degree m=" + std::to_string(m_));
        }
        for (std::uint32_t c : red) {
            if (c >= p_) throw Error(Errc::DegreeMismatch, "reduction coefficient out of range");
        }
        if (red.back() != 1) throw Error(Errc::DegreeMismatch, "reduction must be monic");
        if (m_ > 1 && !is_irreducible(red, p_)) {
            throw Error(Errc::NotIrreducible, "reduction is reducible over GF(" + std::to_string(p_) + ")");
        }
    }

    std::vector<std::uint32_t> smallest_irreducible() const {
        for (std::uint64_t t = 0; t < q_; ++t) {
            std::vector<std::uint32_t> cand(m_ + 1);
            std::uint64_t tmp = t;
            for (std::uint32_t i = 0; i < m_; ++i) {
                cand[i] = static_cast<std::uint32_t>(tmp % p_);
                tmp /= p_;
            }
            cand[m_] = 1;
            if (is_irreducible(cand, p_)) return cand;
        }
        throw Error(Errc::NotIrreducible, "no irreducible polynomial found");  // unreachable
    }

    void build_tables() {
        std::uint64_t n = q_ - 1;
        std::vector<std::uint64_t> factors;
        std::uint64_t rest = n;
        for (std::uint64_t d = 2; d * d <= rest; ++d) {
            if (rest % d == 0) {
                factors.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        }
        if (rest > 1) factors.push_back(rest);

        auto pow_def = [&](Fe a, std::uint64_t e) {
            Fe r = one();
            Fe b = a;
            while (e != 0) {
                if (e & 1) r = mul_definitional(r, b);
                b = mul_definitional(b, b);
                e >>= 1;
            }
            return r;
        };

        Fe g = one();
        for (std::uint64_t c = 1; c < q_; ++c) {
            Fe cand{static_cast<std::uint32_t>(c)};
            bool primitive = true;
            for (std::uint64_t f : factors) {
                if (pow_def(cand, n / f) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = cand;
                break;
            }
        }

        log_.assign(static_cast<std::size_t>(q_), 0);
        exp_.assign(static_cast<std::size_t>(2 * n), 0);
        Fe cur = one();
        for (std::uint64_t i = 0; i < n; ++i) {
            exp_[static_cast<std::size_t>(i)] = cur.v;
            exp_[static_cast<std::size_t>(i + n)] = cur.v;
            log_[cur.v] = static_cast<std::uint32_t>(i);
            cur = mul_definitional(cur, g);
        }
    }

    std::uint64_t p_;
    std::uint32_t m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> reduction_;  // empty when m == 1
    std::vector<std::uint32_t> log_;        // log_[a] for a != 0; empty when q > 2^16
    std::vector<std::uint32_t> exp_;        // doubled so mul needs no modular fold
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (!same_field(a, b)) throw Error(Errc::FieldMismatch, "operands live in different fields");
}

}  // namespace grs
