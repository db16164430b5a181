// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
//
//   C1  every GRS code converts to an EGRS code generating the same subspace
//   C2  every EGRS code converts back for EVERY admissible gamma
//   C3  shift/scale never changes the fingerprint (exhaustive parameter grid)
//   C4  the fingerprint verdict agrees with exhaustive codeword-set comparison
//   C5  every code in the sweeps is MDS: brute-force d == N-k+1
//   C6  field axioms, exhaustive per field
//
// All checks are exact; the sampling below is deterministic (fixed seed).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "grs/analysis.hpp"
#include "grs/codes.hpp"
#include "grs/field.hpp"
#include "grs/transform.hpp"

using grs::EgrsCode;
using grs::Fe;
using grs::Field;
using grs::FieldPtr;
using grs::GrsCode;

namespace {

struct SplitMix {
    std::uint64_t state;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::vector<Fe> random_distinct_points(SplitMix& rng, std::uint64_t q, std::size_t n) {
    std::vector<std::uint32_t> pool(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::uint32_t>(i);
    std::vector<Fe> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(q - i));
        std::swap(pool[i], pool[j]);
        out[i] = Fe{pool[i]};
    }
    return out;
}

std::vector<Fe> random_multipliers(SplitMix& rng, std::uint64_t q, std::size_t n) {
    std::vector<Fe> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = Fe{static_cast<std::uint32_t>(1 + rng.below(q - 1))};
    return out;
}

void distinct_tuples(std::uint64_t q, std::size_t n, std::vector<Fe>& cur,
                     std::vector<bool>& used, std::vector<std::vector<Fe>>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t x = 0; x < q; ++x) {
        if (used[x]) continue;
        used[x] = true;
        cur.push_back(Fe{x});
        distinct_tuples(q, n, cur, used, out);
        cur.pop_back();
        used[x] = false;
    }
}

std::vector<std::vector<Fe>> all_alpha_tuples(std::uint64_t q, std::size_t n) {
    std::vector<std::vector<Fe>> out;
    std::vector<Fe> cur;
    std::vector<bool> used(static_cast<std::size_t>(q), false);
    distinct_tuples(q, n, cur, used, out);
    return out;
}

std::vector<std::vector<Fe>> all_multiplier_tuples(std::uint64_t q, std::size_t n) {
    std::vector<std::vector<Fe>> out;
    std::vector<Fe> cur(n, Fe{1});
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= (q - 1);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < n; ++i) {
            cur[i] = Fe{static_cast<std::uint32_t>(1 + rest % (q - 1))};
            rest /= (q - 1);
        }
        out.push_back(cur);
    }
    return out;
}

std::uint64_t pow_u64(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Exhaustive codeword sets as sorted packed keys (symbols base q). Uses only
// the encoder, never the generator-matrix/RREF path it cross-checks.
template <grs::LinearCode C>
std::vector<std::uint64_t> packed_codewords(const C& code) {
    const std::uint64_t q = code.field()->order();
    const std::size_t k = code.dim();
    const std::uint64_t total = pow_u64(q, k);
    std::vector<std::uint64_t> keys;
    keys.reserve(static_cast<std::size_t>(total));
    std::vector<Fe> msg(k, Fe{0});
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < k; ++i) {
            msg[i] = Fe{static_cast<std::uint32_t>(rest % q)};
            rest /= q;
        }
        std::uint64_t key = 0;
        for (Fe s : code.encode(msg)) key = key * q + s.v;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

template <grs::LinearCode A, grs::LinearCode B>
bool codeword_sets_match(const A& a, const B& b) {
    return a.block_length() == b.block_length() && packed_codewords(a) == packed_codewords(b);
}

struct Tally {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    void count(bool ok) {
        ++checked;
        failed += !ok;
    }
    bool pass() const { return failed == 0 && checked > 0; }
};

struct Sweeps {
    std::vector<GrsCode> grs_codes;
    std::vector<EgrsCode> egrs_codes;
    Tally oracle;  // C4, fed by every comparison with q^k <= 1e4

    void keep(const GrsCode& c) {
        if (pow_u64(c.field()->order(), c.dim()) <= 100000) grs_codes.push_back(c);
    }
    void keep(const EgrsCode& c) {
        if (pow_u64(c.field()->order(), c.dim()) <= 100000) egrs_codes.push_back(c);
    }
    template <grs::LinearCode A, grs::LinearCode B>
    void cross_check(const A& a, const B& b, bool fingerprint_verdict) {
        if (pow_u64(a.field()->order(), std::max(a.dim(), b.dim())) <= 10000) {
            oracle.count(codeword_sets_match(a, b) == fingerprint_verdict);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::pair<std::uint64_t, std::uint32_t> kFieldSpecs[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                               {7, 1}, {2, 3}, {3, 2}};

constexpr int kRandomInstances = 20;

bool criterion1(Sweeps& sweeps) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    for (auto [p, m] : kFieldSpecs) {
        FieldPtr field = Field::make(p, m);
        const std::uint64_t q = field->order();
        SplitMix rng(0xC0DE5EED0001ull + q);
        for (std::size_t n = 2; n <= q; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                std::vector<GrsCode> instances;
                if (q <= 4) {
                    for (const auto& alpha : all_alpha_tuples(q, n)) {
                        for (const auto& v : all_multiplier_tuples(q, n)) {
                            instances.emplace_back(field, k, alpha, v);
                        }
                    }
                } else {
                    for (int i = 0; i < kRandomInstances; ++i) {
                        instances.emplace_back(field, k, random_distinct_points(rng, q, n),
                                               random_multipliers(rng, q, n));
                    }
                }
                for (const GrsCode& code : instances) {
                    EgrsCode converted = grs::grs_to_egrs(code);
                    bool equal = grs::codes_equal(code, converted);
                    tally.count(equal);
                    sweeps.cross_check(code, converted, equal);
                    sweeps.keep(code);
                    sweeps.keep(converted);
                }
            }
        }
    }
    std::cout << "C1 grs->egrs equivalence sweep: " << (tally.pass() ? "PASS" : "FAIL")
              << " pairs=" << tally.checked << " failures=" << tally.failed
              << " elapsed=" << seconds_since(start) << "s\n";
    return tally.pass();
}

bool criterion2(Sweeps& sweeps) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    for (auto [p, m] : kFieldSpecs) {
        FieldPtr field = Field::make(p, m);
        const std::uint64_t q = field->order();
        SplitMix rng(0xC0DE5EED0002ull + q);
        for (std::size_t n = 1; n + 1 <= q; ++n) {
            for (std::size_t k = 1; k <= n + 1; ++k) {
                std::vector<EgrsCode> instances;
                if (q <= 4) {
                    for (const auto& alpha : all_alpha_tuples(q, n)) {
                        for (const auto& v : all_multiplier_tuples(q, n)) {
                            instances.emplace_back(field, k, alpha, v);
                        }
                    }
                } else {
                    for (int i = 0; i < kRandomInstances; ++i) {
                        instances.emplace_back(field, k, random_distinct_points(rng, q, n),
                                               random_multipliers(rng, q, n));
                    }
                }
                for (const EgrsCode& code : instances) {
                    sweeps.keep(code);
                    for (std::uint32_t g = 0; g < q; ++g) {
                        bool taken = false;
                        for (Fe a : code.alpha()) taken = taken || (a == Fe{g});
                        if (taken) continue;
                        GrsCode converted = grs::egrs_to_grs(code, grs::choose_gamma(code, Fe{g}));
                        bool equal = grs::codes_equal(code, converted);
                        tally.count(equal);
                        sweeps.cross_check(code, converted, equal);
                        sweeps.keep(converted);
                    }
                }
            }
        }
    }
    std::cout << "C2 egrs->grs all-gamma sweep: " << (tally.pass() ? "PASS" : "FAIL")
              << " pairs=" << tally.checked << " failures=" << tally.failed
              << " elapsed=" << seconds_since(start) << "s\n";
    return tally.pass();
}

bool criterion3(Sweeps& sweeps) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    for (std::uint64_t q : {std::uint64_t{5}, std::uint64_t{7}}) {
        FieldPtr field = Field::make(q, 1);
        // Fixed panel: rotated evaluation points, cycling nonzero weights.
        const std::pair<std::size_t, std::size_t> shapes[] = {
            {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 2},
            {4, 3}, {4, 4}, {5, 2}, {5, 4}, {static_cast<std::size_t>(q), 1},
            {static_cast<std::size_t>(q), static_cast<std::size_t>(q)}};
        std::vector<GrsCode> panel;
        for (std::size_t idx = 0; idx < std::size(shapes); ++idx) {
            auto [n, k] = shapes[idx];
            std::vector<Fe> alpha(n), v(n);
            for (std::size_t i = 0; i < n; ++i) {
                alpha[i] = Fe{static_cast<std::uint32_t>((idx + i) % q)};
                v[i] = Fe{static_cast<std::uint32_t>(1 + (idx + i) % (q - 1))};
            }
            panel.emplace_back(field, k, std::move(alpha), std::move(v));
        }
        for (const GrsCode& code : panel) {
            sweeps.keep(code);
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t lam = 1; lam < q; ++lam) {
                    GrsCode moved = grs::shift_scale(code, {Fe{a}, Fe{lam}});
                    bool equal = grs::rref(code.generator_matrix()) == grs::rref(moved.generator_matrix());
                    tally.count(equal);
                    sweeps.cross_check(code, moved, equal);
                    sweeps.keep(moved);
                }
            }
        }
    }
    std::cout << "C3 shift/scale fingerprint invariance: " << (tally.pass() ? "PASS" : "FAIL")
              << " pairs=" << tally.checked << " failures=" << tally.failed
              << " elapsed=" << seconds_since(start) << "s\n";
    return tally.pass();
}

bool criterion4(const Sweeps& sweeps) {
    const Tally& t = sweeps.oracle;
    std::cout << "C4 fingerprint vs codeword-set oracle: " << (t.pass() ? "PASS" : "FAIL")
              << " agreements=" << (t.checked - t.failed) << "/" << t.checked << "\n";
    return t.pass();
}

bool criterion5(const Sweeps& sweeps) {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    for (const GrsCode& code : sweeps.grs_codes) {
        tally.count(grs::min_distance(code).is_mds);
    }
    for (const EgrsCode& code : sweeps.egrs_codes) {
        tally.count(grs::min_distance(code).is_mds);
    }
    std::cout << "C5 MDS distance sweep: " << (tally.pass() ? "PASS" : "FAIL")
              << " codes=" << tally.checked << " failures=" << tally.failed
              << " elapsed=" << seconds_since(start) << "s\n";
    return tally.pass();
}

bool criterion6() {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    const std::pair<std::uint64_t, std::uint32_t> specs[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                             {7, 1}, {2, 3}, {3, 2}, {2, 4}};
    for (auto [p, m] : specs) {
        FieldPtr f = Field::make(p, m);
        const auto all = f->elements();
        bool ok = true;
        for (Fe a : all) {
            for (Fe b : all) {
                ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
                if (a != Fe{0} && b != Fe{0}) ok = ok && f->mul(a, b) != Fe{0};
                for (Fe c : all) {
                    ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
                    ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
                    ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
                }
            }
            // unique additive inverse; unique multiplicative inverse; Fermat
            std::size_t add_inverses = 0, mul_inverses = 0;
            for (Fe b : all) {
                add_inverses += (f->add(a, b) == Fe{0});
                mul_inverses += (f->mul(a, b) == Fe{1});
            }
            ok = ok && add_inverses == 1;
            if (a != Fe{0}) {
                ok = ok && mul_inverses == 1;
                ok = ok && f->pow(a, f->order() - 1) == Fe{1};
                ok = ok && f->inv(f->inv(a)) == a;
            } else {
                ok = ok && mul_inverses == 0;
            }
        }
        tally.count(ok);
    }
    std::cout << "C6 field axioms: " << (tally.pass() ? "PASS" : "FAIL") << " fields=" << tally.checked
              << " failures=" << tally.failed << " elapsed=" << seconds_since(start) << "s\n";
    return tally.pass();
}

}  // namespace

int main() {
    Sweeps sweeps;
    int passed = 0;
    passed += criterion1(sweeps);
    passed += criterion2(sweeps);
    passed += criterion3(sweeps);
    passed += criterion4(sweeps);
    passed += criterion5(sweeps);
    passed += criterion6();
    std::cout << "ACCEPTANCE: " << passed << "/6 " << (passed == 6 ? "PASS" : "FAIL") << "\n";
    return passed == 6 ? 0 : 1;
}
