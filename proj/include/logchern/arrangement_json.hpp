#pragma once

#include <string>

#include "logchern/arrangement.hpp"

namespace logchern {

// On-disk schema:
// {
//   "label": "...", "genus": 0, "degree": 3, "d": 11, "char_p": 5,   // char_p optional
//   "fibers": [ [ {"sections":[1,4,7], "contact":[[1],[1,1]]}, ... ], ... ]
// }
// Section ids are 1-based. "contact" holds the strict lower triangle of the
// symmetric contact matrix in section order: row i (i = 2..k) lists the
// contacts with sections 1..i-1. It may be omitted for an ordinary point
// (all contacts 1).

std::string to_json(const ArrangementSpec& spec, int indent = 2);

ArrangementSpec spec_from_json(const std::string& text);

ArrangementSpec load_spec_file(const std::string& path);

void save_spec_file(const ArrangementSpec& spec, const std::string& path);

}  // namespace logchern
