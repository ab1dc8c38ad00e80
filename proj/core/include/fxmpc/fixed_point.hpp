#pragma once

#include <cstdint>
#include <span>

#include "fxmpc/errors.hpp"

namespace fxmpc {

/// Q-format descriptor: `word_bits` total bits split into an optional sign
/// bit, `integer_bits` and `frac_bits` (word_bits = sign + integer + frac).
///
/// A value is stored as a signed mantissa `raw` and represents raw * 2^-p.
/// The representable range is [-2^r, 2^r - 2^-p] when signed and
/// [0, 2^r - 2^-p] otherwise; successive values differ by 2^-p and
/// round-to-nearest keeps quantization error within 2^-(p+1).
struct FixedFormat {
    int word_bits = 32;
    bool is_signed = true;
    int integer_bits = 15;
    int frac_bits = 16;

    /// Signed format with integer bits derived from word/fraction split.
    static FixedFormat with_word(int word_bits, int frac_bits);

    void validate() const; // throws ParameterError

    std::int64_t raw_min() const;
    std::int64_t raw_max() const;
    double resolution() const; // 2^-p, spacing of successive values
    double min_value() const;
    double max_value() const;

    bool operator==(const FixedFormat&) const = default;
};

/// Raw-mantissa kernels over one shared format. Bounds are precomputed so
/// the solver's inner loops stay branch-light; the FixedScalar operations
/// below delegate here so both layers share one rounding/overflow semantics.
class FixedOps {
public:
    explicit FixedOps(const FixedFormat& fmt);

    const FixedFormat& format() const { return fmt_; }

    /// Round-to-nearest (ties away from zero) representable mantissa for x.
    std::int64_t quantize(double x) const;

    /// Like quantize but rounds toward -inf; used for conservative
    /// termination thresholds, never inside the iteration itself.
    std::int64_t quantize_floor(double x) const;

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;

    double to_real(std::int64_t raw) const { return static_cast<double>(raw) * res_; }

private:
    std::int64_t check_range(__int128 raw) const;

    FixedFormat fmt_;
    std::int64_t lo_;
    std::int64_t hi_;
    double res_;     // 2^-p
    double inv_res_; // 2^p
};

/// One fixed-point number: mantissa plus its format. Immutable after
/// construction; operations are pure and never mutate their inputs.
class FixedScalar {
public:
    FixedScalar() = default;
    FixedScalar(std::int64_t raw, const FixedFormat& fmt) : raw_(raw), fmt_(fmt) {}

    std::int64_t raw() const { return raw_; }
    const FixedFormat& format() const { return fmt_; }

    /// Real value represented, raw * 2^-p.
    double value() const;

    static FixedScalar zero(const FixedFormat& fmt) { return FixedScalar(0, fmt); }

private:
    std::int64_t raw_ = 0;
    FixedFormat fmt_;
};

/// Nearest representable value to x (ties away from zero).
/// Throws OverflowError when x lies outside the format range.
FixedScalar quantize(double x, const FixedFormat& fmt);

/// Exact sum; throws OverflowError when the result leaves the range.
FixedScalar fxp_add(const FixedScalar& a, const FixedScalar& b);

/// Round-to-nearest of the exact product, error at most 2^-(p+1).
FixedScalar fxp_mul(const FixedScalar& a, const FixedScalar& b);

/// Inner product accumulated as fxp_mul then fxp_add in ascending index
/// order; total error versus the exact real inner product is bounded by
/// n * 2^-(p+1). Overflow in any partial sum propagates.
FixedScalar fxp_inner_product(std::span<const FixedScalar> x,
                              std::span<const FixedScalar> y);

} // namespace fxmpc
