#pragma once

// The seven tans and the two playable sets. Polygons are in canonical
// pose; areas are in quarter-square cells (the whole set covers 32).

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tangram/trigrid.hpp"

namespace tangram {

/// Fixed order; ranks keys and serializations everywhere.
enum class TanName : std::uint8_t { Ts, S, P, Tm, Tb, Tr, Tz };

inline constexpr int kTanKinds = 7;

inline std::string_view to_string(TanName n) {
    static constexpr std::string_view names[kTanKinds] = {"Ts", "S",  "P", "Tm",
                                                          "Tb", "Tr", "Tz"};
    return names[static_cast<int>(n)];
}

inline TanName tan_from_string(std::string_view s) {
    for (int i = 0; i < kTanKinds; ++i) {
        TanName n = static_cast<TanName>(i);
        if (to_string(n) == s) return n;
    }
    throw std::invalid_argument("unknown tan name: " + std::string(s));
}

struct Tan {
    TanName name = TanName::Ts;
    int multiplicity = 1;
    Polygon polygon;              // canonical pose, positively oriented
    std::vector<TriCell> cells;   // its raster, anchored
    int area_cells = 0;
};

namespace detail {

inline Tan make_tan(TanName name, int multiplicity, Polygon poly) {
    Tan t;
    t.name = name;
    t.multiplicity = multiplicity;
    t.polygon = std::move(poly);
    t.cells = rasterize_polygon(t.polygon);
    t.area_cells = static_cast<int>(t.cells.size());
    return t;
}

}  // namespace detail

/// Canonical pose of one tan kind (multiplicity 1).
inline Tan tan_piece(TanName name) {
    switch (name) {
        case TanName::Ts:  // small right triangle, legs 1
            return detail::make_tan(name, 1, polygon_units({{0, 0}, {1, 0}, {0, 1}}));
        case TanName::S:  // unit square
            return detail::make_tan(name, 1,
                                    polygon_units({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
        case TanName::P:  // parallelogram, base 1, offset 1
            return detail::make_tan(name, 1,
                                    polygon_units({{0, 0}, {1, 0}, {2, 1}, {1, 1}}));
        case TanName::Tm:  // medium right isosceles triangle, hypotenuse 2
            return detail::make_tan(name, 1, polygon_units({{0, 0}, {2, 0}, {1, 1}}));
        case TanName::Tb:  // big right triangle, legs 2
            return detail::make_tan(name, 1, polygon_units({{0, 0}, {2, 0}, {0, 2}}));
        case TanName::Tr:  // right trapezium, bases 2 and 1
            return detail::make_tan(name, 1,
                                    polygon_units({{0, 0}, {2, 0}, {2, 1}, {1, 1}}));
        case TanName::Tz:  // isosceles trapezium, bases 3 and 1
            return detail::make_tan(name, 1,
                                    polygon_units({{0, 0}, {3, 0}, {2, 1}, {1, 1}}));
    }
    throw std::invalid_argument("unknown tan");
}

enum class SetKind : std::uint8_t { chinese, japanese };

inline std::string_view to_string(SetKind k) {
    return k == SetKind::chinese ? "chinese" : "japanese";
}

inline SetKind set_from_string(std::string_view s) {
    if (s == "chinese") return SetKind::chinese;
    if (s == "japanese") return SetKind::japanese;
    throw std::invalid_argument("unknown tan set: " + std::string(s));
}

struct TanSet {
    SetKind kind = SetKind::japanese;
    std::vector<Tan> tans;  // one entry per kind, multiplicity set
};

/// The two playable sets. Both cover 32 cells.
inline TanSet tan_set(SetKind kind) {
    TanSet s;
    s.kind = kind;
    auto add = [&s](TanName n, int mult) {
        Tan t = tan_piece(n);
        t.multiplicity = mult;
        s.tans.push_back(std::move(t));
    };
    if (kind == SetKind::japanese) {
        add(TanName::Ts, 1);
        add(TanName::S, 1);
        add(TanName::P, 1);
        add(TanName::Tm, 2);
        add(TanName::Tr, 1);
        add(TanName::Tz, 1);
    } else {
        add(TanName::Ts, 2);
        add(TanName::S, 1);
        add(TanName::P, 1);
        add(TanName::Tm, 1);
        add(TanName::Tb, 2);
    }
    return s;
}

inline int total_area_cells(const TanSet& s) {
    int sum = 0;
    for (const Tan& t : s.tans) sum += t.multiplicity * t.area_cells;
    return sum;
}

}  // namespace tangram
