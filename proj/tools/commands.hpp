#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logchern/arrangement.hpp"

namespace logchern::cli {

enum class Format { Table, Json, Csv, Dot };

Format parse_format(const std::string& name);

// "none" -> empty set; otherwise 1-based indices and inclusive ranges,
// e.g. "9-20" or "1,2,5-7".
ExtensionChoice parse_xi(const std::string& text, int delta);

// "7919" or "1000:100000" (all primes in range) or "1000:100000:20"
// (that many primes evenly spaced by index across the range).
std::vector<std::int64_t> parse_primes(const std::string& text);

// --input path | --builtin name
ArrangementSpec load_input(const std::string& input_path, const std::string& builtin_name);

// Renders one ratio the way the reference tables print it: exact decimals
// stay exact, short periods are shown as "2.21(6)", everything else is
// truncated to four places with an ellipsis.
std::string render_ratio(const Rat& r);

std::string cmd_analyze(const ArrangementSpec& spec, const std::vector<ExtensionChoice>& choices,
                        Format format);

std::string cmd_sample(const ArrangementSpec& spec, const ExtensionChoice& choice, std::int64_t p,
                       std::uint64_t seed, Format format);

std::string cmd_converge(const ArrangementSpec& spec, const ExtensionChoice& choice,
                         const std::vector<std::int64_t>& primes, std::uint64_t seed, int retries,
                         int workers, Format format);

std::string cmd_badset(const std::vector<std::int64_t>& primes, int workers, Format format);

std::string cmd_graph(const ArrangementSpec& spec, const ExtensionChoice& choice, Format format);

std::string cmd_export(const ArrangementSpec& spec);

}  // namespace logchern::cli
