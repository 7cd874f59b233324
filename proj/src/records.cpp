#include "crys/records.hpp"

#include <ostream>

#include "crys/errors.hpp"

namespace crys {

namespace {

std::string format_name(OutputFormat f) { return f == OutputFormat::Table ? "table" : "records"; }

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "records") return OutputFormat::Records;
  throw UsageError("unknown output format '" + s + "'");
}

std::string plain(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

nlohmann::json run_config_to_json(const RunConfig& c) {
  return {{"subcommand", c.subcommand},
          {"group", c.group},
          {"mu", c.mu},
          {"mu_prime", c.mu_prime},
          {"cbar", c.cbar},
          {"p", c.p},
          {"D", c.D},
          {"budget", c.budget},
          {"format", format_name(c.format)},
          {"seed", c.seed},
          {"i", c.i},
          {"i_max", c.i_max},
          {"n_max", c.n_max},
          {"h", c.h},
          {"h_max", c.h_max},
          {"n", c.n},
          {"samples", c.samples},
          {"count", c.count},
          {"k", c.k},
          {"instance", c.instance}};
}

RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig c;
  try {
    c.subcommand = j.at("subcommand").get<std::string>();
    c.group = j.value("group", c.group);
    c.mu = j.value("mu", c.mu);
    c.mu_prime = j.value("mu_prime", c.mu_prime);
    c.cbar = j.value("cbar", c.cbar);
    c.p = j.value("p", c.p);
    c.D = j.value("D", c.D);
    c.budget = j.value("budget", c.budget);
    c.format = parse_format(j.value("format", std::string("table")));
    c.seed = j.value("seed", c.seed);
    c.i = j.value("i", c.i);
    c.i_max = j.value("i_max", c.i_max);
    c.n_max = j.value("n_max", c.n_max);
    c.h = j.value("h", c.h);
    c.h_max = j.value("h_max", c.h_max);
    c.n = j.value("n", c.n);
    c.samples = j.value("samples", c.samples);
    c.count = j.value("count", c.count);
    c.k = j.value("k", c.k);
    c.instance = j.value("instance", c.instance);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("run config: ") + e.what());
  }
  return c;
}

void RecordWriter::emit(const std::string& kind, const nlohmann::json& fields) {
  if (format_ == OutputFormat::Records) {
    nlohmann::json rec = {{"schema_version", kRecordSchemaVersion}, {"kind", kind}};
    for (const auto& [key, value] : fields.items()) rec[key] = value;
    out_ << rec.dump() << '\n';
    return;
  }
  out_ << kind;
  for (const auto& [key, value] : fields.items()) out_ << ' ' << key << '=' << plain(value);
  out_ << '\n';
}

}  // namespace crys
