#include "rnls/run_io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "rnls/error.hpp"

namespace fs = std::filesystem;

namespace rnls {

namespace {

constexpr std::string_view ledger_header = "t,M,E,E1,E2,calE1,calE2,pot6,L10,tail_mass";
constexpr std::string_view snapshot_header = "r,re_w,im_w";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines(std::string_view text) {
  auto out = split(text, '\n');
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::string snapshot_name(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshots/%06zu.csv", index);
  return buf;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    fail(ErrorKind::io, "malformed number '" + std::string(text) + "'");
  }
  return v;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorKind::io, "SHA-256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string sha256_file(const fs::path& path) { return sha256_hex(read_file(path)); }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorKind::io, "write failed for " + path.string());
}

void write_json(const fs::path& path, const nlohmann::json& doc) { write_file(path, doc.dump(2) + "\n"); }

std::string ledger_csv(const std::vector<EnergyLedger>& ledgers) {
  std::string out(ledger_header);
  out += '\n';
  for (const auto& l : ledgers) {
    for (double v : {l.t, l.M, l.E, l.E1, l.E2, l.calE1, l.calE2, l.pot6, l.L10}) {
      out += format_double(v);
      out += ',';
    }
    out += format_double(l.tail_mass);
    out += '\n';
  }
  return out;
}

std::vector<EnergyLedger> parse_ledger_csv(std::string_view text) {
  const auto rows = lines(text);
  if (rows.empty() || rows.front() != ledger_header) fail(ErrorKind::io, "ledger.csv: unexpected header");
  std::vector<EnergyLedger> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i], ',');
    if (cells.size() != 10) fail(ErrorKind::io, "ledger.csv: row " + std::to_string(i) + " has wrong arity");
    EnergyLedger l;
    double* slots[] = {&l.t, &l.M, &l.E, &l.E1, &l.E2, &l.calE1, &l.calE2, &l.pot6, &l.L10, &l.tail_mass};
    for (std::size_t k = 0; k < 10; ++k) *slots[k] = parse_double(cells[k]);
    out.push_back(l);
  }
  return out;
}

std::string snapshot_csv(const RadialField& field) {
  std::string out(snapshot_header);
  out += '\n';
  for (std::size_t i = 0; i < field.size(); ++i) {
    out += format_double(field.grid().radius(i));
    out += ',';
    out += format_double(field[i].real());
    out += ',';
    out += format_double(field[i].imag());
    out += '\n';
  }
  return out;
}

RadialField parse_snapshot_csv(std::string_view text, const GridPtr& grid, double time) {
  const auto rows = lines(text);
  if (rows.empty() || rows.front() != snapshot_header) fail(ErrorKind::io, "snapshot: unexpected header");
  if (rows.size() != grid->size() + 1) fail(ErrorKind::io, "snapshot: row count does not match the grid");
  std::vector<Complex> w(grid->size());
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto cells = split(rows[i + 1], ',');
    if (cells.size() != 3) fail(ErrorKind::io, "snapshot: row " + std::to_string(i + 1) + " has wrong arity");
    const double r = parse_double(cells[0]);
    if (std::abs(r - grid->radius(i)) > 1e-12 * grid->r_max()) fail(ErrorKind::io, "snapshot: radius mismatch");
    w[i] = {parse_double(cells[1]), parse_double(cells[2])};
  }
  return RadialField(grid, std::move(w), time);
}

void write_run(const fs::path& dir, const RunConfig& config, const SnapshotStream& stream) {
  std::error_code ec;
  fs::create_directories(dir / "snapshots", ec);
  if (ec) fail(ErrorKind::io, "cannot create " + (dir / "snapshots").string() + ": " + ec.message());

  nlohmann::json files = nlohmann::json::object();
  nlohmann::json snaps = nlohmann::json::array();
  auto put = [&](const std::string& rel, const std::string& bytes) {
    write_file(dir / rel, bytes);
    files[rel] = sha256_hex(bytes);
  };
  put("ledger.csv", ledger_csv(stream.ledgers()));
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const auto rel = snapshot_name(i);
    put(rel, snapshot_csv(stream.field(i)));
    snaps.push_back({{"file", rel}, {"step", stream.step(i)}, {"t", stream.time(i)}});
  }
  const nlohmann::json manifest = {{"format", "rnls-run-1"},
                                   {"config", to_json(config)},
                                   {"dt", stream.dt()},
                                   {"stride", stream.stride()},
                                   {"snapshots", snaps},
                                   {"files", files}};
  write_json(dir / "manifest.json", manifest);
}

RunData read_run(const fs::path& dir) {
  const auto mpath = dir / "manifest.json";
  if (!fs::exists(mpath)) fail(ErrorKind::io, "missing " + mpath.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(mpath));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::io, "manifest.json: " + std::string(e.what()));
  }

  RunData data{RunConfig{}, SnapshotStream(1.0, 1), {}, manifest};
  try {
    data.config = config_from_json(manifest.at("config"));
    for (const auto& [rel, sum] : manifest.at("files").items()) {
      const auto p = dir / rel;
      if (!fs::exists(p)) fail(ErrorKind::io, "missing " + p.string());
      if (sha256_file(p) != sum.get<std::string>()) fail(ErrorKind::integrity, "checksum mismatch in " + rel);
    }
    data.ledger = parse_ledger_csv(read_file(dir / "ledger.csv"));
    const auto grid = make_grid(data.config.r_max, data.config.n);
    data.stream = SnapshotStream(manifest.at("dt").get<double>(), manifest.at("stride").get<std::size_t>());
    for (const auto& s : manifest.at("snapshots")) {
      const auto rel = s.at("file").get<std::string>();
      if (!manifest.at("files").contains(rel)) fail(ErrorKind::integrity, rel + " is not covered by a checksum");
      data.stream.push(parse_snapshot_csv(read_file(dir / rel), grid, s.at("t").get<double>()),
                       s.at("step").get<std::size_t>());
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::io, "manifest.json: " + std::string(e.what()));
  }
  if (data.ledger.size() != data.stream.size()) fail(ErrorKind::integrity, "ledger rows do not match snapshots");
  return data;
}

}  // namespace rnls
