#include "rcq/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace rcq {

std::string fnv1a_digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

bool VerificationReport::passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  int n = 0;
  for (const auto& c : cases) n += !c.pass;
  return n;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json out = Json::object();
  out["schema"] = kReportSchema;
  out["suite"] = suite;
  out["config"] = config;
  if (!notes.empty()) out["notes"] = notes;
  Json cs = Json::array();
  for (const auto& c : cases) {
    Json e = Json::object();
    e["id"] = c.id;
    e["claim"] = c.claim;
    e["inputs"] = c.inputs;
    e["digest"] = c.digest;
    e["status"] = c.pass ? "PASS" : "FAIL";
    if (!c.pass) e["witness"] = c.witness;
    if (with_timing) e["seconds"] = c.seconds;
    cs.push_back(std::move(e));
  }
  out["cases"] = std::move(cs);
  Json summary = Json::object();
  summary["total"] = cases.size();
  summary["failed"] = failures();
  summary["status"] = passed() ? "PASS" : "FAIL";
  out["summary"] = std::move(summary);
  if (with_timing) out["timing"] = Json::object({{"seconds", seconds}});
  return out;
}

std::string VerificationReport::to_text(bool verbose) const {
  std::ostringstream os;
  os << suite << ": " << (passed() ? "PASS" : "FAIL") << " (" << cases.size() - failures() << "/" << cases.size()
     << " cases, " << std::fixed << std::setprecision(2) << seconds << " s)\n";
  for (const auto& c : cases) {
    if (c.pass && !verbose) continue;
    os << "  " << (c.pass ? "PASS " : "FAIL ") << c.id << ": " << c.claim << "\n";
    if (!c.pass) {
      std::string w = c.witness.dump();
      if (w.size() > 600) w = w.substr(0, 600) + "...";
      os << "    inputs " << c.digest << "\n    witness " << w << "\n";
    }
  }
  return os.str();
}

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw InputError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw InputError("cannot move report into place: " + ec.message());
}

}  // namespace rcq
