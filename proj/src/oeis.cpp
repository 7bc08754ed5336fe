#include "betamom/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifdef BETAMOM_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace betamom::oeis {

namespace {

bool well_formed_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

}  // namespace

OeisEntry parse_bfile(const std::string& text, const std::string& id) {
  if (!well_formed_id(id)) throw BfileParseError("malformed id: " + id);
  OeisEntry entry;
  entry.id = id;
  std::istringstream in(text);
  std::string line;
  bool have_offset = false;
  long expected = 0;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line.substr(pos));
    long index = 0;
    std::string value;
    if (!(ls >> index >> value))
      throw BfileParseError(id + ": bad b-file line: " + line);
    for (std::size_t i = 0; i < value.size(); ++i) {
      const char ch = value[i];
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || (i == 0 && ch == '-')))
        throw BfileParseError(id + ": bad b-file value: " + value);
    }
    if (!have_offset) {
      entry.offset = index;
      expected = index;
      have_offset = true;
    }
    if (index != expected) break;  // index gaps end the contiguous run
    entry.terms.emplace_back(value, 10);
    ++expected;
  }
  if (entry.terms.empty()) throw BfileParseError(id + ": no terms");
  return entry;
}

std::string serialize_bfile(const OeisEntry& entry) {
  std::ostringstream out;
  out << "# " << entry.id << " snapshot, offset " << entry.offset << "\n";
  for (std::size_t i = 0; i < entry.terms.size(); ++i)
    out << entry.offset + static_cast<long>(i) << " " << entry.terms[i].get_str()
        << "\n";
  return out.str();
}

OeisClient::Options OeisClient::from_environment() {
  Options o;
  if (const char* dir = std::getenv("BETAMOM_OEIS_FIXTURES"))
    o.fixture_dir = dir;
  else
    o.fixture_dir = std::filesystem::path("tests") / "fixtures" / "oeis";
  if (const char* off = std::getenv("BETAMOM_OEIS_OFFLINE"))
    o.offline = std::string(off) != "0";
  return o;
}

OeisEntry OeisClient::fetch(const std::string& id) {
  if (!well_formed_id(id)) throw BfileParseError("malformed id: " + id);
  {
    std::scoped_lock lock(mu_);
    if (auto it = cache_.find(id); it != cache_.end()) return it->second;
  }

  const std::string digits = id.substr(1);
  const std::filesystem::path fixture = opts_.fixture_dir / ("b" + digits + ".txt");
  if (std::filesystem::exists(fixture)) {
    std::ifstream in(fixture);
    std::stringstream buf;
    buf << in.rdbuf();
    OeisEntry entry = parse_bfile(buf.str(), id);
    std::scoped_lock lock(mu_);
    auto [it, inserted] = cache_.emplace(id, std::move(entry));
    return it->second;
  }

  if (opts_.offline)
    throw NetworkUnavailableError(id + ": offline and no fixture present");

#ifdef BETAMOM_HAVE_OPENSSL
  httplib::SSLClient client("oeis.org");
#else
  httplib::Client client("oeis.org");
#endif
  client.set_connection_timeout(opts_.timeout_seconds);
  client.set_read_timeout(opts_.timeout_seconds);
  const std::string path = "/" + id + "/b" + digits + ".txt";
  httplib::Result res = client.Get(path);
  if (!res) res = client.Get(path);  // single retry
  if (!res)
    throw NetworkUnavailableError(id + ": request failed");
  if (res->status == 404) throw NotFoundError(id + ": no such b-file");
  if (res->status != 200)
    throw NetworkUnavailableError(id + ": http status " +
                                  std::to_string(res->status));
  OeisEntry entry = parse_bfile(res->body, id);
  std::scoped_lock lock(mu_);
  auto [it, inserted] = cache_.emplace(id, std::move(entry));
  return it->second;
}

ClaimReport verify_claim(const NamedSequenceEntry& centry, OeisClient& client,
                         std::size_t min_terms) {
  ClaimReport rep;
  rep.label = centry.label;
  rep.oeis_id = centry.oeis_id;
  if (centry.oeis_id.empty()) {
    rep.status = ClaimStatus::unresolved;
    rep.note = "no OEIS id";
    return rep;
  }

  OeisEntry entry;
  try {
    entry = client.fetch(centry.oeis_id);
  } catch (const OeisError& e) {
    rep.status = ClaimStatus::unresolved;
    rep.note = e.what();
    return rep;
  }

  const std::size_t want = min_terms + 2;
  std::vector<Rational> computed;
  try {
    computed = entry_terms(centry, want);
  } catch (const std::exception& e) {
    rep.status = ClaimStatus::unresolved;
    rep.note = std::string("computing terms failed: ") + e.what();
    return rep;
  }

  auto fixture_at = [&](long seq_index) -> const Int* {
    const long i = seq_index - entry.offset;
    if (i < 0 || static_cast<std::size_t>(i) >= entry.terms.size())
      return nullptr;
    return &entry.terms[static_cast<std::size_t>(i)];
  };

  std::size_t best_len = 0;
  std::size_t best_bad = 0;
  bool any_short_agreement = false;
  for (int shift : {0, 1, -1, 2, -2}) {
    std::size_t len = 0;
    bool ok = true;
    std::size_t bad = 0;
    for (std::size_t n = 0; n < computed.size(); ++n) {
      const Int* fv = fixture_at(static_cast<long>(n) + shift);
      if (fv == nullptr) break;
      if (!computed[n].is_integer() || !(computed[n].num() == *fv)) {
        ok = false;
        bad = n;
        break;
      }
      ++len;
    }
    if (ok && len >= min_terms) {
      rep.status = ClaimStatus::exact_prefix_match;
      rep.shift = shift;
      rep.compared = len;
      return rep;
    }
    if (ok && len >= 8) any_short_agreement = true;
    if (!ok && shift == 0) {
      best_len = len;
      best_bad = bad;
    }
  }
  if (any_short_agreement) {
    rep.status = ClaimStatus::unresolved;
    rep.note = "too few overlapping terms for a verdict";
    return rep;
  }
  rep.status = ClaimStatus::mismatch;
  rep.shift = 0;
  rep.compared = best_len;
  rep.first_mismatch = best_bad;
  return rep;
}

std::vector<ClaimReport> verify_all_claims(OeisClient& client,
                                           std::size_t min_terms) {
  std::vector<ClaimReport> out;
  for (const auto& entry : catalog())
    if (!entry.oeis_id.empty()) out.push_back(verify_claim(entry, client, min_terms));
  return out;
}

}  // namespace betamom::oeis
