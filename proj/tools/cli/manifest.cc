#include "manifest.h"

#include <openssl/evp.h>

#include <cstdio>
#include <json.hpp>
#include <memory>
#include <stdexcept>

namespace petruska::cli {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string RunManifest::to_json() const {
  using nlohmann::json;
  auto artifacts = [](const std::vector<Artifact>& list) {
    json a = json::array();
    for (const Artifact& x : list) a.push_back({{"path", x.path}, {"sha256", x.sha256}});
    return a;
  };
  json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["inputs"] = artifacts(inputs);
  j["outputs"] = artifacts(outputs);
  j["wall_seconds"] = wall_seconds;
  j["passed"] = passed;
  j["summary"] = json::parse(summary_json);
  return j.dump(2) + "\n";
}

}  // namespace petruska::cli
