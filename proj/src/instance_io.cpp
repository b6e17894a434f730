#include "rectcover/instance_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace rectcover {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
    auto const* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

Region region_for(std::vector<Rectangle> const& rects) {
    Region const unit = unit_square;
    bool const inside_unit = std::all_of(rects.begin(), rects.end(), [&](Rectangle const& r) {
        return r.lo.x >= unit.x_min && r.hi.x <= unit.x_max &&
               r.lo.y >= unit.y_min && r.hi.y <= unit.y_max;
    });
    if (rects.empty() || inside_unit) {
        return unit;
    }
    Region box{rects[0].lo.x, rects[0].hi.x, rects[0].lo.y, rects[0].hi.y};
    for (Rectangle const& r : rects) {
        box.x_min = std::min(box.x_min, r.lo.x);
        box.x_max = std::max(box.x_max, r.hi.x);
        box.y_min = std::min(box.y_min, r.lo.y);
        box.y_max = std::max(box.y_max, r.hi.y);
    }
    return box;
}

} // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_instance(std::ostream& out, Instance const& instance) {
    out << "n " << instance.rects.size() << '\n';
    for (Rectangle const& r : instance.rects) {
        out << format_double(r.lo.x) << ' ' << format_double(r.lo.y) << ' '
            << format_double(r.hi.x) << ' ' << format_double(r.hi.y) << '\n';
    }
}

Instance read_instance(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        if (!std::getline(in, line)) {
            return false;
        }
        ++line_no;
        return true;
    };

    if (!next_line()) {
        throw InstanceParseError(1, "missing header \"n <count>\"");
    }
    auto header = split_ws(line);
    std::size_t count = 0;
    if (header.size() != 2 || header[0] != "n" || !parse_number(header[1], count)) {
        throw InstanceParseError(line_no, "expected header \"n <count>\"");
    }

    Instance inst;
    inst.n_requested = count;
    inst.rects.reserve(count);
    while (inst.rects.size() < count) {
        if (!next_line()) {
            throw InstanceParseError(line_no + 1, "expected " + std::to_string(count) +
                                                      " rectangles, found " +
                                                      std::to_string(inst.rects.size()));
        }
        auto toks = split_ws(line);
        std::array<double, 4> c{};
        if (toks.size() != 4) {
            throw InstanceParseError(line_no, "expected four numbers \"xl yl xr yr\"");
        }
        for (std::size_t k = 0; k < 4; ++k) {
            if (!parse_number(toks[k], c[k])) {
                throw InstanceParseError(line_no, "bad number '" + std::string(toks[k]) + "'");
            }
        }
        Rectangle r{{c[0], c[1]}, {c[2], c[3]}};
        if (!(r.lo.x < r.hi.x && r.lo.y < r.hi.y) ||
            !std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); })) {
            throw InstanceParseError(line_no, "rectangle needs xl < xr and yl < yr");
        }
        inst.rects.push_back(r);
    }
    while (next_line()) {
        if (!split_ws(line).empty()) {
            throw InstanceParseError(line_no, "unexpected content after last rectangle");
        }
    }
    inst.region = region_for(inst.rects);
    return inst;
}

void save_instance(std::string const& path, Instance const& instance) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_instance(out, instance);
    if (!out.flush()) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

Instance load_instance(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_instance(in);
}

} // namespace rectcover
