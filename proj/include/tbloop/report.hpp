// Machine-readable check reports shared by every verification suite.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace tbloop {

struct CheckReport {
  std::string check_name;
  std::string anchor;  // identity token resolved in docs/anchors.md
  std::string params;
  std::string mode;  // "exact" | "numeric"
  double residual = 0.0;
  bool pass = false;
  bool conjectural = false;
  int64_t runtime_ms = 0;

  static CheckReport exact(const std::string& name, const std::string& anchor,
                           const std::string& params, bool pass) {
    return CheckReport{name, anchor, params, "exact", 0.0, pass, false, 0};
  }
  static CheckReport numeric(const std::string& name, const std::string& anchor,
                             const std::string& params, double residual, double tol) {
    return CheckReport{name, anchor, params, "numeric", residual, residual < tol, false, 0};
  }

  CheckReport& flag_conjectural() {
    conjectural = true;
    return *this;
  }

  std::string residual_str() const {
    if (mode == "exact") return pass ? "0" : "nonzero";
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << residual;
    return os.str();
  }
};

using Report = std::vector<CheckReport>;

inline bool all_pass(const Report& r, bool include_conjectural = false) {
  for (auto& c : r)
    if (!c.pass && (include_conjectural || !c.conjectural)) return false;
  return true;
}

inline void append(Report& to, const Report& from) {
  to.insert(to.end(), from.begin(), from.end());
}

}  // namespace tbloop
