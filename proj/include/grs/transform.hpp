#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grs/codes.hpp"
#include "grs/errors.hpp"
#include "grs/field.hpp"

namespace grs {

/// Parameters of the evaluation-point translation / global rescale.
struct ShiftScaleParams {
    Fe a;       ///< translation applied to every evaluation point
    Fe lambda;  ///< nonzero multiplier applied to every column weight
};

/// A point gamma outside the code's evaluation set, used to pull the
/// infinity coordinate back to a finite evaluation at 0.
struct GammaChoice {
    Fe gamma;
    bool user_supplied = false;
};

/// Replaces (alpha, v) by (alpha - a, lambda*v). The codeword set is
/// unchanged: the word of f under the old descriptor is the word of
/// lambda^{-1} f(x+a) under the new one.
inline GrsCode shift_scale(const GrsCode& code, ShiftScaleParams params) {
    const FieldPtr& field = code.field();
    if (!field->contains(params.a) || !field->contains(params.lambda)) {
        throw Error(Errc::FieldMismatch, "shift/scale parameters out of field");
    }
    if (params.lambda == Field::zero()) throw Error(Errc::ZeroLambda);
    std::vector<Fe> beta, w;
    beta.reserve(code.n());
    w.reserve(code.n());
    for (Fe ai : code.alpha()) beta.push_back(field->sub(ai, params.a));
    for (Fe vi : code.multipliers()) w.push_back(field->mul(params.lambda, vi));
    return GrsCode(field, code.dim(), std::move(beta), std::move(w));
}

/// Moves the last evaluation point to 0 and the last multiplier to 1
/// (shift_scale with a = alpha_n, lambda = v_n^{-1}). Idempotent.
inline GrsCode normalize(const GrsCode& code) {
    return shift_scale(code, {code.alpha().back(), code.field()->inv(code.multipliers().back())});
}

/// GRS -> EGRS with the same codeword set and the same block length.
/// After normalization (alpha_n = 0, v_n = 1) the new descriptor is
/// beta_i = alpha_i^{-1}, w_i = v_i * alpha_i^{k-1} over the first n-1
/// points; the dropped column reappears as the extension coordinate, since
/// the word of f on the input is the word of the reversed-coefficient
/// polynomial on the output. Requires n >= 2.
inline EgrsCode grs_to_egrs(const GrsCode& code) {
    if (code.n() < 2) throw Error(Errc::LengthTooShort, "n=" + std::to_string(code.n()) + " < 2");
    const GrsCode normalized = normalize(code);
    const FieldPtr& field = code.field();
    const std::size_t keep = normalized.n() - 1;
    const std::uint64_t exponent = normalized.dim() - 1;
    std::vector<Fe> beta, w;
    beta.reserve(keep);
    w.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        Fe ai = normalized.alpha()[i];  // nonzero: distinct from alpha_n = 0
        beta.push_back(field->inv(ai));
        w.push_back(field->mul(normalized.multipliers()[i], field->pow(ai, exponent)));
    }
    return EgrsCode(field, code.dim(), std::move(beta), std::move(w));
}

/// Smallest field element not used as an evaluation point.
inline GammaChoice choose_gamma(const EgrsCode& code) {
    const FieldPtr& field = code.field();
    for (std::uint64_t x = 0; x < field->order(); ++x) {
        Fe cand{static_cast<std::uint32_t>(x)};
        bool taken = false;
        for (Fe ai : code.alpha()) {
            if (ai == cand) {
                taken = true;
                break;
            }
        }
        if (!taken) return {cand, false};
    }
    throw Error(Errc::NoGammaAvailable, "n=q=" + std::to_string(field->order()));
}

/// Validates a caller-provided gamma against the evaluation set.
inline GammaChoice choose_gamma(const EgrsCode& code, Fe gamma) {
    if (!code.field()->contains(gamma)) {
        throw Error(Errc::FieldMismatch, "gamma=" + std::to_string(gamma.v) + " out of field");
    }
    for (std::size_t i = 0; i < code.alpha().size(); ++i) {
        if (code.alpha()[i] == gamma) {
            throw Error(Errc::GammaCollision,
                        "gamma=" + std::to_string(gamma.v) + " equals alpha index=" + std::to_string(i));
        }
    }
    return {gamma, true};
}

/// EGRS -> GRS with the same codeword set, block length n+1. The new
/// descriptor is beta_i = (alpha_i - gamma)^{-1} with beta_{n+1} = 0 and
/// w_i = v_i * (alpha_i - gamma)^{k-1} with w_{n+1} = 1; the word of f on
/// the input is the word of the (1 + gamma*x)-twisted reversal of f on the
/// output, whose value at 0 recovers the infinity coordinate f_{k-1}.
inline GrsCode egrs_to_grs(const EgrsCode& code, GammaChoice choice) {
    const GammaChoice validated = choose_gamma(code, choice.gamma);  // rejects collisions
    const Fe gamma = validated.gamma;
    const FieldPtr& field = code.field();
    const std::uint64_t exponent = code.dim() - 1;
    std::vector<Fe> beta, w;
    beta.reserve(code.n() + 1);
    w.reserve(code.n() + 1);
    for (std::size_t i = 0; i < code.n(); ++i) {
        Fe diff = field->sub(code.alpha()[i], gamma);  // nonzero by gamma validity
        beta.push_back(field->inv(diff));
        w.push_back(field->mul(code.multipliers()[i], field->pow(diff, exponent)));
    }
    beta.push_back(Field::zero());
    w.push_back(Field::one());
    return GrsCode(field, code.dim(), std::move(beta), std::move(w));
}

/// Converts with the default (smallest available) gamma.
inline GrsCode egrs_to_grs(const EgrsCode& code) { return egrs_to_grs(code, choose_gamma(code)); }

}  // namespace grs
