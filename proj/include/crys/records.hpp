#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

namespace crys {

inline constexpr int kRecordSchemaVersion = 1;

enum class OutputFormat { Table, Records };

struct RunConfig {
  std::string subcommand;
  std::string group;
  std::string mu;        // "a1,a2,...;b1,b2,..." with ';' between embeddings
  std::string mu_prime;
  std::string cbar;      // diagonal Frobenius exponents, same syntax as mu
  std::int64_t p = 5;
  std::int64_t D = 60;
  std::size_t budget = 2'000'000;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 20240611;
  unsigned i = 0;
  unsigned i_max = 3;
  unsigned n_max = 4;
  unsigned h = 1;
  unsigned h_max = 3;
  std::size_t n = 2;
  std::size_t samples = 500;
  std::size_t count = 20;
  std::int64_t k = 1;
  std::string instance;  // Frobenius instance file
  bool operator==(const RunConfig&) const = default;
};

nlohmann::json run_config_to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const nlohmann::json& j);

// One record per line: JSON objects tagged with the schema version, or
// "kind key=value ..." lines for people.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}
  void emit(const std::string& kind, const nlohmann::json& fields);
  OutputFormat format() const { return format_; }

 private:
  std::ostream& out_;
  OutputFormat format_;
};

}  // namespace crys
