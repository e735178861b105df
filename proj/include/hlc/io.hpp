#ifndef HLC_IO_HPP
#define HLC_IO_HPP

#include <optional>
#include <string>

#include "hlc/types.hpp"

namespace hlc {

// HLC instance format, UTF-8 text. '#' starts a comment, blank lines are
// ignored. Content lines in order:
//   HLC 1
//   <k> <c_declared>
//   <n> <m>
//   n list lines (ascending 1-based colors)
//   m edge lines (ascending 0-based vertex ids)
Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

// Solution format: "COLORABLE\n<n space-separated colors>\n" or
// "UNCOLORABLE\n".
struct Solution {
    bool colorable = false;
    PartialColoring coloring;
};

Solution parse_solution(const std::string& text, int n);
std::string render_solution(const std::optional<PartialColoring>& coloring);

} // namespace hlc

#endif
