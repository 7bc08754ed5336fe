#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "betamom/catalog.hpp"
#include "betamom/rational.hpp"

namespace betamom::oeis {

struct OeisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFoundError : OeisError {
  using OeisError::OeisError;
};
struct NetworkUnavailableError : OeisError {
  using OeisError::OeisError;
};
struct BfileParseError : OeisError {
  using OeisError::OeisError;
};

struct OeisEntry {
  std::string id;  // "A" + 6 digits
  long offset = 0;
  std::vector<Int> terms;
};

/// b-file format: optional '#' comment lines, then "index value" pairs.
/// Terms are kept contiguous from the first index; a gap ends the entry.
OeisEntry parse_bfile(const std::string& text, const std::string& id);
std::string serialize_bfile(const OeisEntry& entry);

/// Resolution order: in-memory cache, fixture directory, network b-file.
/// BETAMOM_OEIS_OFFLINE=1 forces offline; BETAMOM_OEIS_FIXTURES overrides the
/// fixture directory.
class OeisClient {
 public:
  struct Options {
    std::filesystem::path fixture_dir;
    bool offline = false;
    int timeout_seconds = 10;
  };

  static Options from_environment();

  OeisClient() : OeisClient(from_environment()) {}
  explicit OeisClient(Options opts) : opts_(std::move(opts)) {}

  OeisEntry fetch(const std::string& id);

  const Options& options() const { return opts_; }

 private:
  Options opts_;
  std::mutex mu_;
  std::map<std::string, OeisEntry> cache_;
};

enum class ClaimStatus { exact_prefix_match, mismatch, unresolved };

struct ClaimReport {
  std::string label;
  std::string oeis_id;
  ClaimStatus status = ClaimStatus::unresolved;
  int shift = 0;               // fixture index = computed index + shift
  std::size_t first_mismatch = 0;
  std::size_t compared = 0;
  std::string note;
};

/// Compares >= min_terms computed terms against the OEIS entry, trying
/// alignment shifts in {-2..2}; reports which shift matched.
ClaimReport verify_claim(const NamedSequenceEntry& entry, OeisClient& client,
                         std::size_t min_terms = 20);

/// Claims for every catalog row with an OEIS id.
std::vector<ClaimReport> verify_all_claims(OeisClient& client,
                                           std::size_t min_terms = 20);

}  // namespace betamom::oeis
