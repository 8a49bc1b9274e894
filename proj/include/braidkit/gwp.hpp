#pragma once

#include <cstdint>
#include <optional>

#include "braidkit/braid_word.hpp"
#include "braidkit/errors.hpp"
#include "braidkit/garside.hpp"

namespace braidkit {

/// Outcome of the cyclic-subgroup membership decision: either the witness
/// power c with X^c = Y, or the certificate that none exists.
struct GwpResult {
    std::optional<std::int64_t> power;

    bool is_power() const { return power.has_value(); }
};

/// Exponent-sum divisibility gate: the unique candidate exponent
/// exp(Y) / exp(X) when the division is exact over the signed integers,
/// nothing otherwise. Empty already implies "not a power".
inline std::optional<std::int64_t> gwp_divisibility_gate(const BraidWord& x, const BraidWord& y) {
    std::int64_t ex = exp_sum(x);
    std::int64_t ey = exp_sum(y);
    if (ex == 0 || ey % ex != 0) return std::nullopt;
    return ey / ex;
}

/// Decide whether Y lies in the cyclic subgroup generated by X, for
/// exp(X) != 0. The exponent sum pins the only possible power; the word
/// problem settles it. exp(Y) = 0 reduces to the word problem with X^0 = 1.
inline GwpResult gwp(const BraidWord& x, const BraidWord& y) {
    if (x.strands() != y.strands()) throw StrandMismatch("gwp operands have different strand counts");
    if (exp_sum(x) == 0) throw ZeroExponent("gwp requires a generator with nonzero exponent sum");
    auto candidate = gwp_divisibility_gate(x, y);
    if (!candidate) return {};
    if (compare(power(x, *candidate), y)) return {*candidate};
    return {};
}

}  // namespace braidkit
