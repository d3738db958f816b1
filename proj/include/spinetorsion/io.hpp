#pragma once

// Plain-text spine files and move logs.
//
//   branched-spine 1
//   tets 2
//   glue 0.0 -> 1.3 : 021
//   branching 0:01 0:12 1:23
//   orient +-
//
// A glue line lists the images of the face's three corners, in increasing
// corner order. Blank lines and text after '#' are ignored.

#include <string>
#include <vector>

#include "spinetorsion/spine.hpp"

namespace spinetorsion {

RawSpine parse_spine_text(const std::string& text);
std::string serialize_spine(const BranchedSpine& spine);

BranchedSpine read_spine(const std::string& text);
BranchedSpine read_spine_file(const std::string& path);
void write_spine_file(const std::string& path, const BranchedSpine& spine);

struct MoveRecord {
  bool positive;
  int site;     // face class (positive) or edge class (negative)
  int variant;  // positive moves only
};

std::vector<MoveRecord> parse_move_log(const std::string& text);
std::string serialize_move_log(const std::vector<MoveRecord>& log);

}  // namespace spinetorsion
