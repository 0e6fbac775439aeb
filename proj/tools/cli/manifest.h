#ifndef PETRUSKA_TOOLS_MANIFEST_H_
#define PETRUSKA_TOOLS_MANIFEST_H_

#include <map>
#include <string>
#include <vector>

namespace petruska::cli {

std::string sha256_hex(const std::string& bytes);

struct Artifact {
  std::string path;  // "-" for stdout
  std::string sha256;
};

// Record of one CLI run. Input digests are taken over the canonical
// re-serialization of what was parsed, so formatting differences in an
// input file do not change them.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Artifact> inputs;
  std::vector<Artifact> outputs;
  double wall_seconds = 0;
  bool passed = false;
  std::string summary_json = "{}";  // an object, embedded as is

  std::string to_json() const;
};

}  // namespace petruska::cli

#endif  // PETRUSKA_TOOLS_MANIFEST_H_
