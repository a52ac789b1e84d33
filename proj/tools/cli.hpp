#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "whitt/serialize.hpp"

namespace whitt::cli {

/// Parsed command line, echoed verbatim in every JSON output.
struct QueryRequest {
  std::string subcommand;
  std::optional<AlgebraKind> algebra;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  std::optional<WhittakerCharacter> zeta;
  std::string group;
  std::string x;
  std::string w;
  std::string scope = "even";
  std::string format = "json";
  bool strict = false;
  int criterion = 0;
};

Json to_json(const QueryRequest& r);
QueryRequest request_from_json(const Json& j);

/// "gl,1,2", "osp,2", "pe,2"; a trailing ",even" selects the even part.
AlgebraKind parse_algebra(const std::string& text);
/// "1:1", "1:1,2:-1/2".  Empty text is the zero character.
std::map<int, Rational> parse_zeta(const std::string& text);

enum ExitCode { kOk = 0, kUsage = 1, kUnsupported = 2, kCheckFailed = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whitt::cli
