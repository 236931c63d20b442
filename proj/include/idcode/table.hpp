#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "constructions.hpp"
#include "lattice.hpp"
#include "patterns.hpp"
#include "verify.hpp"

namespace idcode {

/// One number in the small-radius table with where it comes from.
struct TableValue {
    std::string value;
    std::string provenance;  // "computed", "paper-asserted" or "literature"
    std::string detail;
};

struct TableCell {
    std::int64_t r2 = 0;
    std::int64_t R2 = 0;
    bool applicable = false;  // R2 >= r2
    bool exists = false;
    std::vector<TableValue> lower;
    std::vector<TableValue> upper;
    std::vector<TableValue> exact;
};

inline const std::vector<std::int64_t>& table_rows() {
    static const std::vector<std::int64_t> rows = {1, 2, 4, 5, 8};
    return rows;
}

inline const std::vector<std::int64_t>& table_columns() {
    static const std::vector<std::int64_t> cols = {1, 2, 4, 5, 8, 9, 10};
    return cols;
}

namespace detail {

inline std::optional<TableValue> verified_upper(const PeriodicCode& code, const RadiusPair& rp, const std::string& name) {
    if (!verify_identifying(code, rp).ok) return std::nullopt;
    return TableValue{code.density().str(), "computed", "verified " + name};
}

inline TableValue pattern_value(const RadiusPair& rp) {
    const Certificate c = pattern_lower_bound(rp);
    return {c.bound.str(), "computed", "pattern bound 1/" + std::to_string(c.witness.size())};
}

inline std::optional<TableValue> frame_value(const RadiusPair& rp, const std::string& frame) {
    const FrameShape f = frame_by_name(frame);
    const FrameMinResult m = frame_min_count(rp, f);
    if (!m.proved) return std::nullopt;
    return TableValue{Rational(m.min_count, static_cast<std::int64_t>(f.cells.size())).str(), "computed",
                      "frame " + frame + " holds at least " + std::to_string(m.min_count) + " of " +
                          std::to_string(f.cells.size())};
}

inline void push(std::vector<TableValue>& v, std::optional<TableValue> x) {
    if (x) v.push_back(std::move(*x));
}

}  // namespace detail

/// Recomputes every derivable entry of the small-radius table; the remaining entries are
/// reported with their literature or paper-asserted provenance.
inline std::vector<TableCell> compute_table() {
    std::vector<TableCell> cells;
    for (std::int64_t r2 : table_rows()) {
        for (std::int64_t R2 : table_columns()) {
            TableCell c;
            c.r2 = r2;
            c.R2 = R2;
            c.applicable = R2 >= r2;
            if (!c.applicable) {
                cells.push_back(c);
                continue;
            }
            const RadiusPair rp{SqRadius(r2), SqRadius(R2)};
            c.exists = exists_code(rp);
            if (!c.exists) {
                cells.push_back(c);
                continue;
            }
            using detail::push;
            const auto key = std::pair{r2, R2};
            if (key == std::pair<std::int64_t, std::int64_t>{1, 1}) {
                c.exact.push_back({"0.35", "literature", "known value for the closed neighbourhood case"});
            } else if (key == std::pair<std::int64_t, std::int64_t>{1, 2}) {
                c.lower.push_back(detail::pattern_value(rp));
                push(c.upper, detail::verified_upper(construct_int_half(1), rp, "int_half(1)"));
                push(c.upper, detail::verified_upper(builtin_code("fig3-r1").code, rp, "fig3-r1"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{2, 2}) {
                c.exact.push_back({"2/9", "literature", "known value"});
            } else if (key == std::pair<std::int64_t, std::int64_t>{2, 4}) {
                c.lower.push_back({"16/57", "paper-asserted", "discharging over frame F12"});
                c.lower.push_back({"4/15", "paper-asserted", "averaging with neighbour frames holding four vertices"});
                c.lower.push_back(detail::pattern_value(rp));
                push(c.lower, detail::frame_value(rp, "F12"));
                push(c.upper, detail::verified_upper(builtin_code("fig8-sqrt2").code, rp, "fig8-sqrt2"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{4, 4}) {
                c.lower.push_back({"0.15", "literature", "known bound"});
                c.upper.push_back({"0.17", "literature", "known bound"});
            } else if (key == std::pair<std::int64_t, std::int64_t>{4, 5} ||
                       key == std::pair<std::int64_t, std::int64_t>{4, 8}) {
                c.lower.push_back(detail::pattern_value(rp));
                push(c.upper, detail::verified_upper(construct_int_half(2), rp, "int_half(2)"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{5, 5}) {
                c.lower.push_back({"1/8", "literature", "known value"});
                c.lower.push_back(detail::pattern_value(rp));
                push(c.upper, detail::verified_upper(builtin_code("fig1-sqrt5").code, rp, "fig1-sqrt5"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{5, 8}) {
                c.lower.push_back({"0.17", "paper-asserted", "discharging over frame F20, 17/5 per frame"});
                c.lower.push_back(detail::pattern_value(rp));
                push(c.lower, detail::frame_value(rp, "F20"));
                push(c.upper, detail::verified_upper(builtin_code("fig10-sqrt5").code, rp, "fig10-sqrt5"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{5, 9}) {
                c.lower.push_back(detail::pattern_value(rp));
                push(c.upper, detail::verified_upper(construct_diag(4, 6, true), rp, "diagonal mod 4 xor horizontal mod 6"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{8, 8}) {
                c.exact.push_back({"1/8", "literature", "known value"});
            } else if (key == std::pair<std::int64_t, std::int64_t>{8, 9}) {
                c.lower.push_back(detail::pattern_value(rp));
                push(c.lower, detail::frame_value(rp, "F14"));
                push(c.upper, detail::verified_upper(builtin_code("fig11-sqrt8").code, rp, "fig11-sqrt8"));
            } else if (key == std::pair<std::int64_t, std::int64_t>{8, 10}) {
                c.lower.push_back(detail::pattern_value(rp));
                push(c.upper, detail::verified_upper(construct_38(rp), rp, "density 3/8 construction"));
            } else {
                c.lower.push_back(detail::pattern_value(rp));
            }
            cells.push_back(std::move(c));
        }
    }
    return cells;
}

inline std::string format_table(const std::vector<TableCell>& cells) {
    auto list = [](const std::vector<TableValue>& vs) {
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) s += "; ";
            s += vs[i].value + " [" + vs[i].provenance + ": " + vs[i].detail + "]";
        }
        return s;
    };
    std::string out = "bounds on the least density for small radii (rows r2, columns R2)\n";
    for (const TableCell& c : cells) {
        out += "r2=" + std::to_string(c.r2) + " R2=" + std::to_string(c.R2) + ": ";
        if (!c.applicable) {
            out += "-\n";
        } else if (!c.exists) {
            out += "X [computed: no identifying code exists]\n";
        } else {
            std::vector<std::string> parts;
            if (!c.exact.empty()) parts.push_back("value " + list(c.exact));
            if (!c.lower.empty()) parts.push_back("lower " + list(c.lower));
            if (!c.upper.empty()) parts.push_back("upper " + list(c.upper));
            for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " | " : "") + parts[i];
            out += "\n";
        }
    }
    return out;
}

}  // namespace idcode
