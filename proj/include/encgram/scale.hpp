#ifndef ENCGRAM_SCALE_HPP
#define ENCGRAM_SCALE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "encgram/civil_time.hpp"
#include "encgram/color.hpp"
#include "encgram/completed.hpp"
#include "encgram/errors.hpp"
#include "encgram/scalar.hpp"

// Executable scales plus tick generation and domain nicing. Steps always
// come from the 1-2-5 menu: the smallest s in {1,2,5}*10^k such that
// ceil(d1/s) - floor(d0/s) <= count.

namespace encgram {

namespace detail {

/// A tick step decomposed as mant * 10^k with mant in {1,2,5}. Keeping the
/// decomposition lets tick values be computed as integer-scaled divisions,
/// which lands them on the exact doubles users expect (9.5, not 9.5000...04).
struct StepDecomp {
    double mant = 1.0;
    int exp10 = 0;
};

inline double step_value(const StepDecomp& s) {
    return s.exp10 >= 0 ? s.mant * std::pow(10.0, s.exp10) : s.mant / std::pow(10.0, -s.exp10);
}

inline double tick_at(double index, const StepDecomp& s) {
    return s.exp10 >= 0 ? index * s.mant * std::pow(10.0, s.exp10)
                        : (index * s.mant) / std::pow(10.0, -s.exp10);
}

/// floor/ceil with a relative epsilon snap so that exact decimal multiples
/// survive the division (0.3/0.1 computes as 2.999...96 but must index as 3).
inline double floor_snapped(double q) {
    const double r = std::round(q);
    if (std::fabs(q - r) <= 1e-9 * std::max(1.0, std::fabs(q))) return r;
    return std::floor(q);
}

inline double ceil_snapped(double q) {
    const double r = std::round(q);
    if (std::fabs(q - r) <= 1e-9 * std::max(1.0, std::fabs(q))) return r;
    return std::ceil(q);
}

inline void advance(StepDecomp& s) {
    if (s.mant == 1.0) {
        s.mant = 2.0;
    } else if (s.mant == 2.0) {
        s.mant = 5.0;
    } else {
        s.mant = 1.0;
        ++s.exp10;
    }
}

inline double interval_count(double d0, double d1, const StepDecomp& s) {
    const double step = step_value(s);
    return ceil_snapped(d1 / step) - floor_snapped(d0 / step);
}

/// Smallest menu step at or below which no valid candidate can exist:
/// any s with interval count <= n satisfies s >= span/(n+2).
inline StepDecomp seed_step(double span, int count) {
    StepDecomp s;
    const double lower = span / (count + 2);
    if (!(lower > 0.0) || !std::isfinite(lower)) {
        s.exp10 = -300;
        return s;
    }
    s.exp10 = static_cast<int>(std::floor(std::log10(lower))) - 1;
    return s;
}

/// Pre: d0 < d1 finite, count >= 1. A strict solution fails to exist only
/// when the domain spans zero and count is 1 (the two half-axis intervals
/// are irreducible); that case starts relaxed, admitting count+1 intervals.
inline StepDecomp tick_step_decomp(double d0, double d1, int count) {
    const int first_slack = count == 1 && d0 < 0.0 && d1 > 0.0 ? 1 : 0;
    for (int slack = first_slack; slack <= 1; ++slack) {
        StepDecomp s = seed_step(d1 - d0, count);
        for (int iter = 0; iter < 4000; ++iter) {
            if (interval_count(d0, d1, s) <= count + slack) return s;
            advance(s);
        }
    }
    return StepDecomp{1.0, 308};
}

}  // namespace detail

/// The smallest s in {1,2,5}*10^k with ceil(d1/s) - floor(d0/s) <= count.
/// Pre: d0 != d1 (callers widen degenerate domains first), count >= 1.
inline double tick_step(double d0, double d1, int count) {
    if (d0 > d1) std::swap(d0, d1);
    if (count < 1) count = 1;
    return detail::step_value(detail::tick_step_decomp(d0, d1, count));
}

/// Widens [d0, d1] to tick-step multiples. Degenerate domains widen to
/// [v - 0.5, v + 0.5]. Returned ascending; idempotent.
inline std::pair<double, double> nice_domain(double d0, double d1, int count) {
    if (d0 > d1) std::swap(d0, d1);
    if (count < 1) count = 1;
    if (d0 == d1) return {d0 - 0.5, d0 + 0.5};
    const detail::StepDecomp s = detail::tick_step_decomp(d0, d1, count);
    const double step = detail::step_value(s);
    const double lo = detail::tick_at(detail::floor_snapped(d0 / step), s);
    const double hi = detail::tick_at(detail::ceil_snapped(d1 / step), s);
    return {lo, hi};
}

namespace detail {

/// Multiples of the tick step inside [d0, d1], ascending. When the relaxed
/// step still over-produces (count 1 over a zero-spanning domain), the step
/// is advanced through the menu until at most count+1 ticks remain, so the
/// 1-2-5 and equal-spacing properties survive.
inline std::vector<double> numeric_ticks(double d0, double d1, int count) {
    if (d0 > d1) std::swap(d0, d1);
    if (count < 1) count = 1;
    if (d0 == d1) return {d0};
    StepDecomp s = tick_step_decomp(d0, d1, count);
    for (int iter = 0; iter < 4000; ++iter) {
        const double step = step_value(s);
        const double i0 = ceil_snapped(d0 / step);
        const double i1 = floor_snapped(d1 / step);
        const double total = i1 - i0 + 1.0;
        if (total <= static_cast<double>(count) + 1.0) {
            std::vector<double> out;
            for (int j = 0; j < static_cast<int>(total); ++j)
                out.push_back(tick_at(i0 + static_cast<double>(j), s));
            return out;
        }
        advance(s);
    }
    return {};
}

inline constexpr std::int64_t kMsPerMonthNominal = 30 * kMsPerDay;
inline constexpr std::int64_t kMsPerYearNominal = 365 * kMsPerDay;

inline std::int64_t month_start_ms(std::int64_t month_index) {
    const int year = static_cast<int>(floor_div(month_index, 12));
    const int month = static_cast<int>(floor_mod(month_index, 12)) + 1;
    CivilTime ct;
    ct.year = year;
    ct.month = month;
    ct.day = 1;
    ct.hour = ct.minute = ct.second = ct.millisecond = 0;
    return epoch_ms_from_civil(ct);
}

inline std::int64_t year_start_ms(std::int64_t year) {
    CivilTime ct;
    ct.year = static_cast<int>(year);
    ct.month = 1;
    ct.day = 1;
    ct.hour = ct.minute = ct.second = ct.millisecond = 0;
    return epoch_ms_from_civil(ct);
}

/// Unit boundaries aligned to multiples of k units, first boundary >= t0,
/// collected while <= t1. For fixed-width units the boundary at index j is
/// j*unit ms; months and years walk the civil calendar.
inline std::vector<std::int64_t> calendar_ticks(std::int64_t t0, std::int64_t t1,
                                                std::int64_t unit_ms, std::int64_t k,
                                                int calendar_unit) {
    std::vector<std::int64_t> out;
    if (calendar_unit == 0) {
        std::int64_t j = floor_div(t0 + unit_ms - 1, unit_ms);
        j += floor_mod(-j, k);
        for (; j * unit_ms <= t1; j += k) out.push_back(j * unit_ms);
    } else if (calendar_unit == 1) {
        const CivilTime ct = civil_from_epoch_ms(t0);
        std::int64_t m = static_cast<std::int64_t>(ct.year) * 12 + (ct.month - 1);
        if (month_start_ms(m) < t0) ++m;
        m += floor_mod(-m, k);
        for (; month_start_ms(m) <= t1; m += k) out.push_back(month_start_ms(m));
    } else {
        const CivilTime ct = civil_from_epoch_ms(t0);
        std::int64_t y = ct.year;
        if (year_start_ms(y) < t0) ++y;
        y += floor_mod(-y, k);
        for (; year_start_ms(y) <= t1; y += k) out.push_back(year_start_ms(y));
    }
    return out;
}

/// Time ticks: the 1-2-5 step over epoch ms picks a raw spacing, which is
/// snapped to the largest calendar unit not exceeding it; the per-unit
/// multiplier k grows until at most count+1 ticks remain.
inline std::vector<std::int64_t> time_ticks(std::int64_t t0, std::int64_t t1, int count) {
    if (t0 > t1) std::swap(t0, t1);
    if (count < 1) count = 1;
    if (t0 == t1) return {t0};
    const double raw =
        tick_step(static_cast<double>(t0), static_cast<double>(t1), count);
    if (raw < static_cast<double>(kMsPerSecond)) {
        const auto values =
            numeric_ticks(static_cast<double>(t0), static_cast<double>(t1), count);
        std::vector<std::int64_t> out;
        for (double v : values) out.push_back(std::llround(v));
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    std::int64_t unit_ms = kMsPerSecond;
    int calendar_unit = 0;
    if (raw >= static_cast<double>(kMsPerYearNominal)) {
        unit_ms = kMsPerYearNominal;
        calendar_unit = 2;
    } else if (raw >= static_cast<double>(kMsPerMonthNominal)) {
        unit_ms = kMsPerMonthNominal;
        calendar_unit = 1;
    } else if (raw >= static_cast<double>(kMsPerDay)) {
        unit_ms = kMsPerDay;
    } else if (raw >= static_cast<double>(kMsPerHour)) {
        unit_ms = kMsPerHour;
    } else if (raw >= static_cast<double>(kMsPerMinute)) {
        unit_ms = kMsPerMinute;
    }
    std::int64_t k = std::max<std::int64_t>(
        1, std::llround(raw / static_cast<double>(unit_ms)));
    while (true) {
        const auto out = calendar_ticks(t0, t1, unit_ms, k, calendar_unit);
        if (static_cast<int>(out.size()) <= count + 1) return out;
        ++k;
    }
}

}  // namespace detail

/// An executable scale: immutable after build; apply and ticks are pure and
/// safe to share across threads.
class ConcreteScale {
public:
    ScaleType kind() const { return kind_; }

    /// Effective domain after zero-extension, widening and nicing.
    const std::vector<Scalar>& domain() const { return domain_; }

    /// The resolved range exactly as supplied.
    const std::vector<Scalar>& range() const { return range_; }

    double padding() const { return padding_; }

    /// Drawable width of one band interval; constant across categories.
    double bandwidth() const {
        if (kind_ != ScaleType::Band) throw WrongKindError("bandwidth requires a band scale");
        const double n = static_cast<double>(domain_.size());
        const double step = (r1_ - r0_) / (n + padding_);
        return std::fabs(step) * (1.0 - padding_);
    }

    /// Maps a datum to an output value. Null input, inputs outside a
    /// discrete domain, and inputs the domain's value class cannot absorb
    /// all map to null; null is the only error channel here.
    Scalar apply(const Scalar& input) const {
        if (input.is_null()) return Scalar{};
        switch (kind_) {
            case ScaleType::Ordinal: {
                const auto idx = index_of(input);
                if (!idx) return Scalar{};
                if (range_.empty()) return Scalar{};
                return range_[*idx % range_.size()];
            }
            case ScaleType::Band: {
                const auto idx = index_of(input);
                if (!idx) return Scalar{};
                const double n = static_cast<double>(domain_.size());
                const double step = (r1_ - r0_) / (n + padding_);
                return Scalar(r0_ + step * (padding_ / 2.0 + static_cast<double>(*idx)));
            }
            case ScaleType::Point: {
                const auto idx = index_of(input);
                if (!idx) return Scalar{};
                const double n = static_cast<double>(domain_.size());
                if (domain_.size() == 1) return Scalar((r0_ + r1_) / 2.0);
                const double step = (r1_ - r0_) / (n - 1.0 + 2.0 * padding_);
                return Scalar(r0_ + padding_ * step + static_cast<double>(*idx) * step);
            }
            case ScaleType::Quantize: {
                const auto x = coerce_number(input);
                if (!x) return Scalar{};
                const double m = static_cast<double>(range_.size());
                double k = std::floor((*x - d0_) / (d1_ - d0_) * m);
                k = std::max(0.0, std::min(m - 1.0, k));
                return range_[static_cast<std::size_t>(k)];
            }
            default: {
                auto x = coerce_class(input, input_class_);
                if (!x) return Scalar{};
                if (clamp_) *x = std::max(std::min(d0_, d1_), std::min(std::max(d0_, d1_), *x));
                const auto fx = transform(*x);
                if (!fx) return Scalar{};
                const double t = (*fx - f0_) / (f1_ - f0_);
                if (color_range_) {
                    const double tc = std::max(0.0, std::min(1.0, t));
                    return Scalar(color_to_text(interpolate_color(c0_, c1_, tc)));
                }
                return Scalar(r0_ + t * (r1_ - r0_));
            }
        }
    }

    /// Tick positions for an axis. Continuous numeric kinds emit multiples
    /// of the 1-2-5 step inside the domain; time snaps to calendar
    /// boundaries; discrete kinds stride the domain down to at most count.
    std::vector<Scalar> ticks(int count) const {
        if (count < 1) count = 1;
        if (is_discrete(kind_)) {
            const std::size_t m = domain_.size();
            if (m == 0) return {};
            const std::size_t stride = (m + static_cast<std::size_t>(count) - 1) /
                                       static_cast<std::size_t>(count);
            std::vector<Scalar> out;
            for (std::size_t i = 0; i < m; i += stride) out.push_back(domain_[i]);
            return out;
        }
        if (kind_ == ScaleType::Time) {
            const auto ts = detail::time_ticks(static_cast<std::int64_t>(std::llround(d0_)),
                                               static_cast<std::int64_t>(std::llround(d1_)),
                                               count);
            std::vector<Scalar> out;
            for (std::int64_t t : ts) out.push_back(Scalar::timestamp(t));
            return out;
        }
        const auto values = detail::numeric_ticks(d0_, d1_, count);
        std::vector<Scalar> out;
        for (double v : values) out.push_back(Scalar(v));
        return out;
    }

private:
    friend ConcreteScale build_scale(const CompletedScaleDef&, std::vector<Scalar>,
                                     std::vector<Scalar>);

    std::optional<std::size_t> index_of(const Scalar& v) const {
        for (std::size_t i = 0; i < domain_.size(); ++i)
            if (domain_[i] == v) return i;
        return std::nullopt;
    }

    std::optional<double> transform(double x) const {
        switch (kind_) {
            case ScaleType::Log:
                if (negative_domain_) return x < 0.0 ? std::optional(std::log(-x)) : std::nullopt;
                return x > 0.0 ? std::optional(std::log(x)) : std::nullopt;
            case ScaleType::Sqrt:
                return x >= 0.0 ? std::optional(std::sqrt(x)) : std::nullopt;
            default:
                return x;
        }
    }

    ScaleType kind_ = ScaleType::Linear;
    std::vector<Scalar> domain_;
    std::vector<Scalar> range_;
    bool clamp_ = false;
    double padding_ = 0.0;
    ValueClass input_class_ = ValueClass::Number;
    bool negative_domain_ = false;
    double d0_ = 0.0, d1_ = 1.0;  ///< effective numeric domain endpoints
    double f0_ = 0.0, f1_ = 1.0;  ///< transformed domain endpoints
    double r0_ = 0.0, r1_ = 1.0;  ///< numeric range endpoints
    bool color_range_ = false;
    Rgba c0_, c1_;
};

namespace detail {

/// Log domains nice to integer powers of the base (1-2-5 nicing would pull
/// endpoints across zero). Works on the reflected magnitudes for
/// negative-signed domains.
inline std::pair<double, double> nice_log_domain(double lo, double hi, double base) {
    const bool negative = hi < 0.0;
    double a = negative ? -hi : lo;
    double b = negative ? -lo : hi;
    const double lb = std::log(base);
    const double la = floor_snapped(std::log(a) / lb);
    const double lbx = ceil_snapped(std::log(b) / lb);
    a = std::pow(base, la);
    b = std::pow(base, lbx);
    if (negative) return {-b, -a};
    return {a, b};
}

}  // namespace detail

/// Builds an executable scale from a completed definition plus resolved
/// domain and range lists (markers already resolved by the caller). Flags:
/// zero extends linear/sqrt/quantize domains to include 0, nice widens with
/// count 10, clamp restricts apply inputs to the domain.
inline ConcreteScale build_scale(const CompletedScaleDef& def, std::vector<Scalar> domain,
                                 std::vector<Scalar> range) {
    ConcreteScale s;
    s.kind_ = def.type;
    s.clamp_ = def.clamp;
    s.padding_ = def.padding;

    if (is_discrete(def.type)) {
        for (auto& v : domain) {
            bool seen = false;
            for (const auto& d : s.domain_) {
                if (d == v) {
                    seen = true;
                    break;
                }
            }
            if (!seen) s.domain_.push_back(std::move(v));
        }
        if (s.domain_.empty()) throw DomainError("empty discrete domain");
        if (def.type == ScaleType::Ordinal) {
            if (range.empty()) throw DomainError("ordinal scale requires a non-empty range");
            s.range_ = std::move(range);
            return s;
        }
        if (range.size() != 2) throw DomainError("band/point scale requires a 2-entry range");
        const auto r0 = coerce_number(range[0]);
        const auto r1 = coerce_number(range[1]);
        if (!r0 || !r1) throw DomainError("band/point scale requires a numeric range");
        s.r0_ = *r0;
        s.r1_ = *r1;
        s.range_ = std::move(range);
        return s;
    }

    if (domain.size() != 2) throw DomainError("continuous scale requires a 2-entry domain");
    s.input_class_ = def.type == ScaleType::Time ? ValueClass::Timestamp : ValueClass::Number;
    const auto a0 = coerce_class(domain[0], s.input_class_);
    const auto a1 = coerce_class(domain[1], s.input_class_);
    if (!a0 || !a1) throw DomainError("domain endpoints do not match the scale's value class");

    const bool descending = *a0 > *a1;
    double lo = descending ? *a1 : *a0;
    double hi = descending ? *a0 : *a1;

    if (lo == hi) {
        // Single-valued data still renders: widen instead of erroring. Log
        // widens multiplicatively to stay same-signed; sqrt floors at zero.
        if (def.type == ScaleType::Log) {
            if (lo == 0.0) throw DomainError("log scale domain touches zero");
            lo = lo > 0.0 ? lo / 2.0 : lo * 2.0;
            hi = hi > 0.0 ? hi * 2.0 : hi / 2.0;
            if (lo > hi) std::swap(lo, hi);
        } else {
            lo -= 0.5;
            hi += 0.5;
            if (def.type == ScaleType::Sqrt && lo < 0.0) lo = 0.0;
        }
    }

    if (def.zero && (def.type == ScaleType::Linear || def.type == ScaleType::Sqrt ||
                     def.type == ScaleType::Quantize)) {
        if (lo > 0.0) lo = 0.0;
        if (hi < 0.0) hi = 0.0;
    }

    if (def.type == ScaleType::Log) {
        if (lo <= 0.0 && hi >= 0.0) throw DomainError("log scale domain crosses or touches zero");
        s.negative_domain_ = hi < 0.0;
        if (def.nice) {
            const double base = def.base > 0.0 && def.base != 1.0 ? def.base : 10.0;
            const auto [nl, nh] = detail::nice_log_domain(lo, hi, base);
            lo = nl;
            hi = nh;
        }
    } else if (def.nice) {
        const auto [nl, nh] = nice_domain(lo, hi, 10);
        lo = nl;
        hi = nh;
    }

    if (def.type == ScaleType::Sqrt && lo < 0.0)
        throw DomainError("sqrt scale requires a non-negative domain");

    s.d0_ = descending ? hi : lo;
    s.d1_ = descending ? lo : hi;
    if (s.kind_ == ScaleType::Time) {
        s.domain_ = {Scalar::timestamp(std::llround(s.d0_)), Scalar::timestamp(std::llround(s.d1_))};
    } else {
        s.domain_ = {Scalar(s.d0_), Scalar(s.d1_)};
    }

    const auto fx0 = s.transform(s.d0_);
    const auto fx1 = s.transform(s.d1_);
    if (!fx0 || !fx1) throw DomainError("domain endpoints outside the scale's transform");
    s.f0_ = *fx0;
    s.f1_ = *fx1;

    if (def.type == ScaleType::Quantize) {
        if (range.size() < 2) throw DomainError("quantize scale requires at least 2 range entries");
        s.range_ = std::move(range);
        return s;
    }

    if (range.size() != 2) throw DomainError("continuous scale requires a 2-entry range");
    const auto r0 = coerce_number(range[0]);
    const auto r1 = coerce_number(range[1]);
    if (r0 && r1) {
        s.r0_ = *r0;
        s.r1_ = *r1;
    } else if (range[0].is_text() && range[1].is_text()) {
        const auto c0 = parse_color(range[0].text());
        const auto c1 = parse_color(range[1].text());
        if (!c0 || !c1) throw DomainError("continuous text range must hold parseable colors");
        s.color_range_ = true;
        s.c0_ = *c0;
        s.c1_ = *c1;
    } else {
        throw DomainError("continuous range must be numeric or a color pair");
    }
    s.range_ = std::move(range);
    return s;
}

}  // namespace encgram

#endif  // ENCGRAM_SCALE_HPP
