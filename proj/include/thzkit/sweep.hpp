#pragma once

// 1-D parameter sweeps: `start:stop:step<unit>` or `start:stop/count<unit>`,
// optionally prefixed with `log:` for geometric spacing (count form only).

#include <cctype>
#include <cmath>
#include <utility>
#include <string>
#include <string_view>
#include <vector>

#include "thzkit/errors.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

enum class SweepScale { linear, log };

struct SweepSpec {
    std::string variable;
    double start = 0.0;  // SI
    double stop = 0.0;   // SI
    double step = 0.0;   // SI, > 0 in step form
    int count = 0;       // >= 2 in count form
    SweepScale scale = SweepScale::linear;

    std::vector<double> samples() const {
        std::vector<double> out;
        if (count > 0) {
            out.reserve(static_cast<std::size_t>(count));
            for (int i = 0; i < count; ++i) {
                const double t = static_cast<double>(i) / (count - 1);
                out.push_back(scale == SweepScale::log ? start * std::pow(stop / start, t)
                                                       : start + t * (stop - start));
            }
            out.back() = stop;
            return out;
        }
        const auto n = static_cast<long>(std::floor((stop - start) / step * (1.0 + 1e-12) + 1e-9));
        out.reserve(static_cast<std::size_t>(n + 1));
        for (long i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
};

namespace detail {

/// Splits a trailing unit symbol (longest registered match) off `body`.
inline std::pair<std::string_view, std::string_view> split_unit(std::string_view body) {
    std::string_view best;
    for (const auto& info : kUnits) {
        const auto sym = info.symbol;
        if (sym.empty() || sym.size() >= body.size() || !body.ends_with(sym)) continue;
        const char before = body[body.size() - sym.size() - 1];
        if (!(std::isdigit(static_cast<unsigned char>(before)) || before == '.' || before == ' ')) continue;
        if (sym.size() > best.size()) best = sym;
    }
    return {trim(body.substr(0, body.size() - best.size())), best};
}

}  // namespace detail

/// `default_unit` applies when the text carries no unit suffix.
inline SweepSpec parse_sweep(std::string_view text, Dimension dim, Unit default_unit = Unit::none,
                             std::string variable = {}) {
    SweepSpec spec;
    spec.variable = std::move(variable);
    const std::string original(text);
    auto body = detail::trim(text);
    if (body.starts_with("log:")) {
        spec.scale = SweepScale::log;
        body.remove_prefix(4);
    }
    const auto [numbers, unit_text] = detail::split_unit(body);
    const Unit unit = unit_text.empty() ? default_unit : unit_from_symbol(unit_text);
    if (unit_dimension(unit) != dim) throw UsageError("sweep '" + original + "' has the wrong unit");

    auto number = [&](std::string_view s) {
        Quantity q;
        try {
            q = parse_quantity(s);
        } catch (const Error&) {
            throw UsageError("sweep '" + original + "': malformed number '" + std::string(s) + "'");
        }
        if (q.unit != Unit::none) throw UsageError("sweep '" + original + "': only one trailing unit is allowed");
        return Quantity{q.value, unit}.to_si();
    };

    const auto c1 = numbers.find(':');
    if (c1 == std::string_view::npos) {
        throw UsageError("sweep '" + original + "' must look like start:stop:step or start:stop/count");
    }
    const auto rest = numbers.substr(c1 + 1);
    const auto c2 = rest.find(':');
    spec.start = number(numbers.substr(0, c1));
    if (c2 != std::string_view::npos) {
        spec.stop = number(rest.substr(0, c2));
        spec.step = number(rest.substr(c2 + 1));
        if (!(spec.step > 0.0)) throw UsageError("sweep '" + original + "': step must be positive");
        if (spec.scale == SweepScale::log) throw UsageError("sweep '" + original + "': log spacing needs start:stop/count");
    } else {
        const auto slash = rest.find('/');
        if (slash == std::string_view::npos) {
            throw UsageError("sweep '" + original + "' must look like start:stop:step or start:stop/count");
        }
        spec.stop = number(rest.substr(0, slash));
        const auto count = parse_quantity(rest.substr(slash + 1));
        if (count.unit != Unit::none || count.value != std::floor(count.value) || count.value < 2.0 ||
            count.value > 1e7) {
            throw UsageError("sweep '" + original + "': count must be an integer >= 2");
        }
        spec.count = static_cast<int>(count.value);
    }
    if (!(spec.start < spec.stop)) throw UsageError("sweep '" + original + "': start must be below stop");
    if (spec.scale == SweepScale::log && !(spec.start > 0.0)) {
        throw UsageError("sweep '" + original + "': log spacing needs a positive start");
    }
    return spec;
}

}  // namespace thzkit
