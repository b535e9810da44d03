#include "kerrsim/runner/manifest.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include <json.hpp>

#include "kerrsim/error.hpp"
#include "kerrsim/runner/csv.hpp"

namespace kerrsim::runner {

using nlohmann::json;

namespace {

// JSON has no NaN; non-finite diagnostics are written as null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string code_version() {
#ifdef KERRSIM_VERSION
  return KERRSIM_VERSION;
#else
  return "unknown";
#endif
}

std::string RunManifest::to_json() const {
  json j;
  j["schema_version"] = kManifestSchemaVersion;
  j["command"] = command;
  j["scan_type"] = scan_type;
  j["code_version"] = code_version;
  j["started_utc"] = started_utc;
  j["finished_utc"] = finished_utc;
  j["exit_code"] = exit_code;
  j["config"] = config_text;
  j["outputs"] = json::array();
  for (const auto& o : outputs) {
    json e{{"path", o.path}};
    e["rows"] = o.rows ? json(*o.rows) : json(nullptr);
    j["outputs"].push_back(std::move(e));
  }
  j["diagnostics"] = json::object();
  for (const auto& [k, v] : diagnostics) j["diagnostics"][k] = number_or_null(v);
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

RunManifest RunManifest::from_json(std::string_view text) {
  RunManifest m;
  try {
    const json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kManifestSchemaVersion) throw Error("unsupported manifest schema");
    m.command = j.at("command").get<std::string>();
    m.scan_type = j.at("scan_type").get<std::string>();
    m.code_version = j.at("code_version").get<std::string>();
    m.started_utc = j.at("started_utc").get<std::string>();
    m.finished_utc = j.at("finished_utc").get<std::string>();
    m.exit_code = j.at("exit_code").get<int>();
    m.config_text = j.at("config").get<std::string>();
    for (const auto& e : j.at("outputs")) {
      OutputFile o;
      o.path = e.at("path").get<std::string>();
      if (!e.at("rows").is_null()) o.rows = e.at("rows").get<std::size_t>();
      m.outputs.push_back(std::move(o));
    }
    for (const auto& [k, v] : j.at("diagnostics").items()) {
      m.diagnostics[k] = v.is_null() ? std::nan("") : v.get<double>();
    }
    m.notes = j.at("notes").get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw Error(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string sidecar_metadata(const std::string& data_file, const std::string& config_text,
                             const std::map<std::string, double>& values) {
  json j;
  j["schema_version"] = kManifestSchemaVersion;
  j["data_file"] = data_file;
  j["code_version"] = code_version();
  j["config"] = config_text;
  j["values"] = json::object();
  for (const auto& [k, v] : values) j["values"][k] = number_or_null(v);
  return j.dump(2) + "\n";
}

std::string verify_manifest(const std::filesystem::path& directory, const RunManifest& manifest) {
  for (const auto& o : manifest.outputs) {
    const auto p = directory / o.path;
    if (!std::filesystem::exists(p)) return "missing output " + o.path;
    if (o.rows) {
      const CsvTable t = read_csv(p);
      if (t.rows.size() != *o.rows) {
        return o.path + ": manifest lists " + std::to_string(*o.rows) + " rows, file has " +
               std::to_string(t.rows.size());
      }
    }
  }
  return {};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace kerrsim::runner
