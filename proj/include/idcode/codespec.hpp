#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace idcode {

/// Text format for periodic codes:
///
///     codespec v1
///     basis b1x b1y b2x b2y
///     point x y
///     ...
///
/// Blank lines and everything after '#' are ignored.
class CodespecError : public Error {
public:
    enum class Kind { missing_header, missing_basis, malformed_line, dependent_basis, duplicate_residue };

    CodespecError(Kind kind, std::size_t line, const std::string& what)
        : Error("codespec line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

inline std::optional<std::int64_t> parse_int64(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') return std::nullopt;
    }
    try {
        return std::stoll(s);
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

}  // namespace detail

inline PeriodicCode parse_codespec(const std::string& text) {
    using K = CodespecError::Kind;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    bool header = false;
    std::optional<std::pair<Point, Point>> basis;
    std::vector<Point> points;
    std::vector<std::size_t> point_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        const auto words = detail::split_words(raw);
        if (words.empty()) continue;

        if (!header) {
            if (words.size() == 2 && words[0] == "codespec" && words[1] == "v1") {
                header = true;
                continue;
            }
            throw CodespecError(K::missing_header, lineno, "expected 'codespec v1' header");
        }

        auto ints = [&](std::size_t n) {
            std::vector<std::int64_t> out;
            if (words.size() != n + 1) {
                throw CodespecError(K::malformed_line, lineno,
                                    "'" + words[0] + "' takes " + std::to_string(n) + " integers");
            }
            for (std::size_t i = 1; i <= n; ++i) {
                auto v = detail::parse_int64(words[i]);
                if (!v) throw CodespecError(K::malformed_line, lineno, "not an integer: '" + words[i] + "'");
                out.push_back(*v);
            }
            return out;
        };

        if (words[0] == "basis") {
            if (basis) throw CodespecError(K::malformed_line, lineno, "second basis line");
            const auto v = ints(4);
            basis = std::pair<Point, Point>{{v[0], v[1]}, {v[2], v[3]}};
        } else if (words[0] == "point") {
            if (!basis) throw CodespecError(K::missing_basis, lineno, "point before basis");
            const auto v = ints(2);
            points.push_back({v[0], v[1]});
            point_lines.push_back(lineno);
        } else {
            throw CodespecError(K::malformed_line, lineno, "unknown keyword '" + words[0] + "'");
        }
    }
    if (!header) throw CodespecError(K::missing_header, lineno, "empty input, expected 'codespec v1' header");
    if (!basis) throw CodespecError(K::missing_basis, lineno, "no basis line");

    PeriodLattice lat;
    try {
        lat = hermite_form(basis->first, basis->second);
    } catch (const PreconditionError& e) {
        throw CodespecError(K::dependent_basis, lineno, e.what());
    }
    std::vector<std::size_t> owner(static_cast<std::size_t>(lat.det()), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::size_t& slot = owner[lat.cell_index(lat.reduce(points[i]))];
        if (slot != 0) {
            throw CodespecError(K::duplicate_residue, point_lines[i],
                                "point " + to_string(points[i]) + " repeats the class of line " + std::to_string(slot));
        }
        slot = point_lines[i];
    }
    return PeriodicCode(basis->first, basis->second, points);
}

/// Canonical text: Hermite basis and reduced residues in lexicographic order.
inline std::string serialize_codespec(const PeriodicCode& code) {
    std::ostringstream out;
    const Point b1 = code.basis1();
    const Point b2 = code.basis2();
    out << "codespec v1\n";
    out << "basis " << b1.x << ' ' << b1.y << ' ' << b2.x << ' ' << b2.y << '\n';
    for (const Point& p : code.residues()) out << "point " << p.x << ' ' << p.y << '\n';
    return out.str();
}

}  // namespace idcode
