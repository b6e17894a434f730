#ifndef RECTCOVER_INSTANCE_IO_HPP
#define RECTCOVER_INSTANCE_IO_HPP

#include "rectcover/geometry.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rectcover {

class InstanceParseError : public std::runtime_error {
public:
    InstanceParseError(std::size_t line, std::string const& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Text format: "n <count>" then one "xl yl xr yr" line per rectangle.
void write_instance(std::ostream& out, Instance const& instance);

// Inverse of write_instance. Seed is not stored in the file and reads back
// as 0; region is the unit square when it holds every rectangle, else the
// bounding box. Blank trailing lines are ignored.
Instance read_instance(std::istream& in);

void save_instance(std::string const& path, Instance const& instance);
Instance load_instance(std::string const& path);

} // namespace rectcover

#endif
