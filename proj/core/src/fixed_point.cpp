#include "fxmpc/fixed_point.hpp"

#include <cmath>
#include <string>

namespace fxmpc {

FixedFormat FixedFormat::with_word(int word_bits, int frac_bits) {
    FixedFormat fmt;
    fmt.word_bits = word_bits;
    fmt.is_signed = true;
    fmt.frac_bits = frac_bits;
    fmt.integer_bits = word_bits - 1 - frac_bits;
    fmt.validate();
    return fmt;
}

void FixedFormat::validate() const {
    const int sign = is_signed ? 1 : 0;
    if (word_bits != sign + integer_bits + frac_bits)
        throw ParameterError("FixedFormat: word_bits must equal sign + integer + fraction bits");
    if (frac_bits < 1) throw ParameterError("FixedFormat: frac_bits must be >= 1");
    if (integer_bits < 0) throw ParameterError("FixedFormat: integer_bits must be >= 0");
    if (word_bits > 64) throw ParameterError("FixedFormat: word_bits must be <= 64");
}

std::int64_t FixedFormat::raw_min() const {
    if (!is_signed) return 0;
    // -2^r in raw units is -2^(r+p)
    const int bits = integer_bits + frac_bits;
    if (bits >= 63) return INT64_MIN;
    return -(std::int64_t(1) << bits);
}

std::int64_t FixedFormat::raw_max() const {
    // 2^r - 2^-p in raw units is 2^(r+p) - 1
    const int bits = integer_bits + frac_bits;
    if (bits >= 63) return INT64_MAX;
    return (std::int64_t(1) << bits) - 1;
}

double FixedFormat::resolution() const { return std::ldexp(1.0, -frac_bits); }
double FixedFormat::min_value() const { return static_cast<double>(raw_min()) * resolution(); }
double FixedFormat::max_value() const { return static_cast<double>(raw_max()) * resolution(); }

FixedOps::FixedOps(const FixedFormat& fmt) : fmt_(fmt) {
    fmt_.validate();
    lo_ = fmt_.raw_min();
    hi_ = fmt_.raw_max();
    res_ = fmt_.resolution();
    inv_res_ = std::ldexp(1.0, fmt_.frac_bits);
}

std::int64_t FixedOps::check_range(__int128 raw) const {
    if (raw < lo_ || raw > hi_)
        throw OverflowError("fixed-point result outside [" + std::to_string(double(lo_) * res_) +
                            ", " + std::to_string(double(hi_) * res_) + "]");
    return static_cast<std::int64_t>(raw);
}

std::int64_t FixedOps::quantize(double x) const {
    if (!std::isfinite(x)) throw OverflowError("quantize: non-finite input");
    const double scaled = x * inv_res_;
    // Pre-check in floating point so llround never sees an out-of-int64 value.
    if (scaled >= static_cast<double>(hi_) + 1.0 || scaled <= static_cast<double>(lo_) - 1.0)
        throw OverflowError("quantize: value outside representable range");
    const std::int64_t raw = std::llround(scaled); // ties away from zero
    return check_range(raw);
}

std::int64_t FixedOps::quantize_floor(double x) const {
    if (!std::isfinite(x)) throw OverflowError("quantize_floor: non-finite input");
    const double scaled = x * inv_res_;
    if (scaled >= static_cast<double>(hi_) + 1.0 || scaled <= static_cast<double>(lo_) - 1.0)
        throw OverflowError("quantize_floor: value outside representable range");
    const std::int64_t raw = static_cast<std::int64_t>(std::floor(scaled));
    return check_range(raw);
}

std::int64_t FixedOps::add(std::int64_t a, std::int64_t b) const {
    return check_range(static_cast<__int128>(a) + b);
}

std::int64_t FixedOps::mul(std::int64_t a, std::int64_t b) const {
    // Exact product carries 2p fractional bits; shift back with
    // round-to-nearest, ties away from zero.
    __int128 prod = static_cast<__int128>(a) * b;
    const __int128 half = static_cast<__int128>(1) << (fmt_.frac_bits - 1);
    __int128 rounded;
    if (prod >= 0)
        rounded = (prod + half) >> fmt_.frac_bits;
    else
        rounded = -((-prod + half) >> fmt_.frac_bits);
    return check_range(rounded);
}

double FixedScalar::value() const { return static_cast<double>(raw_) * fmt_.resolution(); }

namespace {

void require_same_format(const FixedScalar& a, const FixedScalar& b, const char* op) {
    if (!(a.format() == b.format()))
        throw ParameterError(std::string(op) + ": operands must share one FixedFormat");
}

} // namespace

FixedScalar quantize(double x, const FixedFormat& fmt) {
    FixedOps ops(fmt);
    return FixedScalar(ops.quantize(x), fmt);
}

FixedScalar fxp_add(const FixedScalar& a, const FixedScalar& b) {
    require_same_format(a, b, "fxp_add");
    FixedOps ops(a.format());
    return FixedScalar(ops.add(a.raw(), b.raw()), a.format());
}

FixedScalar fxp_mul(const FixedScalar& a, const FixedScalar& b) {
    require_same_format(a, b, "fxp_mul");
    FixedOps ops(a.format());
    return FixedScalar(ops.mul(a.raw(), b.raw()), a.format());
}

FixedScalar fxp_inner_product(std::span<const FixedScalar> x,
                              std::span<const FixedScalar> y) {
    if (x.size() != y.size())
        throw DimensionError("fxp_inner_product: length mismatch");
    if (x.empty()) {
        // Empty product is zero in the default format.
        return FixedScalar(0, FixedFormat{});
    }
    require_same_format(x[0], y[0], "fxp_inner_product");
    FixedOps ops(x[0].format());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        require_same_format(x[i], y[i], "fxp_inner_product");
        if (!(x[i].format() == x[0].format()))
            throw ParameterError("fxp_inner_product: operands must share one FixedFormat");
        acc = ops.add(acc, ops.mul(x[i].raw(), y[i].raw()));
    }
    return FixedScalar(acc, x[0].format());
}

} // namespace fxmpc
