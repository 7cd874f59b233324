#pragma once

#include <iosfwd>
#include <string>

#include "crys/records.hpp"
#include "crys/rootdatum.hpp"

namespace crys {

// "a1,a2,...;b1,b2,..." with one ';'-separated block per embedding. Each block
// is read by RootDatum::coweight_from_input.
MultiCoweight parse_mu(const RootDatum& datum, const std::string& text);

// Exit status: 0 when every check passes, 1 when a check fails, 2 on bad input.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crys
