#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mlsna/graph.hpp"

namespace mlsna {

/// Tab-separated edge list: source, target, layer, weight. Lines starting
/// with '#' and an optional header line are ignored. `undirected` expands
/// every record into both directions.
std::vector<EdgeRecord> read_edge_list(const std::filesystem::path& file, bool undirected = false);

/// Same with a fifth integer timestamp column.
std::vector<EventRecord> read_event_log(const std::filesystem::path& file, bool undirected = false);

void write_edge_list(const std::filesystem::path& file, const Msn& msn);

/// node,group_id CSV; group id "-1" marks an unassigned node.
Partition read_groups_csv(const std::filesystem::path& file);
void write_groups_csv(const std::filesystem::path& file, const Partition& p);

/// Single-column CSV of class labels (optional header "label"/"class").
std::vector<std::string> read_label_column(const std::filesystem::path& file);

/// key=value configuration file; '#' comments allowed.
std::vector<std::pair<std::string, std::string>> read_kv_file(const std::filesystem::path& file);

/// Write via a temporary file in the same directory and rename into
/// place, so failures never leave partial output behind.
void atomic_write(const std::filesystem::path& file, const std::string& content);

} // namespace mlsna
