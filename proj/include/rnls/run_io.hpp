#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rnls/config.hpp"
#include "rnls/stream.hpp"

namespace rnls {

/// Decimal with 17 significant digits; round-trips every double.
std::string format_double(double v);
/// Throws ErrorKind::io on malformed input.
double parse_double(std::string_view text);

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// Ledger CSV: header t,M,E,E1,E2,calE1,calE2,pot6,L10,tail_mass.
std::string ledger_csv(const std::vector<EnergyLedger>& ledgers);
std::vector<EnergyLedger> parse_ledger_csv(std::string_view text);

/// Snapshot CSV: header r,re_w,im_w, one row per grid radius.
std::string snapshot_csv(const RadialField& field);
/// Throws ErrorKind::io when the rows do not match the grid.
RadialField parse_snapshot_csv(std::string_view text, const GridPtr& grid, double time);

/// Writes manifest.json, ledger.csv and snapshots/NNNNNN.csv under dir.
/// The manifest echoes the config and lists every file with its SHA-256.
/// Output bytes depend only on config and stream.
void write_run(const std::filesystem::path& dir, const RunConfig& config, const SnapshotStream& stream);

struct RunData {
  RunConfig config;
  SnapshotStream stream;
  std::vector<EnergyLedger> ledger;  // as stored in ledger.csv
  nlohmann::json manifest;
};

/// Reads a run directory and checks every checksum. Throws ErrorKind::io for
/// missing or unreadable files, ErrorKind::integrity on a checksum mismatch.
RunData read_run(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& path);
/// Writes bytes exactly; throws ErrorKind::io on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);
/// Pretty-printed JSON plus a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace rnls
