#pragma once

#include <map>
#include <string>
#include <vector>

namespace kinekit {

/// Deterministic golden artifacts: the classification tables, the contraction
/// arrows, the extension tables, the deformation case table and the orbit
/// matrix displays, all exact. Keys are file names, values file contents.
/// Sections are independent; jobs > 1 renders them concurrently.
std::map<std::string, std::string> generate_fixtures(int jobs = 1);

/// Writes fixtures into dir (creating it). Returns number of files written.
int write_fixtures(const std::string& dir, int jobs = 1);

/// Compares regenerated fixtures against dir byte-for-byte; returns the list
/// of mismatched or missing files.
std::vector<std::string> check_fixtures(const std::string& dir);

}  // namespace kinekit
