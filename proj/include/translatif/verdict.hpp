#pragma once

#include <string>
#include <utility>

namespace translatif {

// Theorem | NonTheorem | Unknown(reason). Unknown only when a declared
// resource limit or cap was hit.
class Verdict {
 public:
  enum class Kind { Theorem, NonTheorem, Unknown };

  static Verdict theorem() { return Verdict(Kind::Theorem, {}); }
  static Verdict non_theorem() { return Verdict(Kind::NonTheorem, {}); }
  static Verdict unknown(std::string reason) { return Verdict(Kind::Unknown, std::move(reason)); }
  static Verdict from_bool(bool b) { return b ? theorem() : non_theorem(); }

  Kind kind() const noexcept { return kind_; }
  bool is_theorem() const noexcept { return kind_ == Kind::Theorem; }
  bool is_non_theorem() const noexcept { return kind_ == Kind::NonTheorem; }
  bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }
  const std::string& reason() const noexcept { return reason_; }

  // Theorem / NonTheorem / Unknown
  const char* name() const noexcept {
    switch (kind_) {
      case Kind::Theorem: return "Theorem";
      case Kind::NonTheorem: return "NonTheorem";
      case Kind::Unknown: return "Unknown";
    }
    return "?";
  }
  // T / N / U
  char letter() const noexcept { return name()[0] == 'T' ? 'T' : (kind_ == Kind::NonTheorem ? 'N' : 'U'); }

  friend bool operator==(const Verdict& a, const Verdict& b) = default;

 private:
  Verdict(Kind k, std::string r) : kind_(k), reason_(std::move(r)) {}
  Kind kind_;
  std::string reason_;
};

}  // namespace translatif
