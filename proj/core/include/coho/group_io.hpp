// Group file format: line `degree N`, then one generator per line in
// disjoint-cycle notation with 0-based points. `#` starts a comment.
#pragma once

#include <iosfwd>
#include <string>

#include "coho/group.hpp"

namespace coho::perm {

Group read_group(std::istream& in);
Group read_group_file(const std::string& path);
Group read_group_string(const std::string& text);

void write_group(std::ostream& out, const Group& g, const std::string& comment = "");
void write_group_file(const std::string& path, const Group& g, const std::string& comment = "");

}  // namespace coho::perm
