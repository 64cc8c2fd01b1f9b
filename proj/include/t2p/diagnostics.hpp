#pragma once

#include <string>
#include <utility>
#include <vector>

namespace t2p {

enum class Severity { Info, Warning, Error };

inline const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Info: return "info";
    case Severity::Warning: return "warning";
    case Severity::Error: return "error";
  }
  return "info";
}

struct Diagnostic {
  std::string stage;
  Severity severity = Severity::Info;
  std::string message;
};

// Formats as "stage:severity:message", the wire format used on stderr.
inline std::string format_diagnostic(const Diagnostic& d) {
  return d.stage + ":" + severity_name(d.severity) + ":" + d.message;
}

class Diagnostics {
 public:
  void add(std::string stage, Severity sev, std::string msg) {
    entries_.push_back({std::move(stage), sev, std::move(msg)});
  }

  const std::vector<Diagnostic>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool has(Severity at_least) const {
    for (const auto& d : entries_)
      if (static_cast<int>(d.severity) >= static_cast<int>(at_least)) return true;
    return false;
  }

  void merge(const Diagnostics& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

 private:
  std::vector<Diagnostic> entries_;
};

}  // namespace t2p
