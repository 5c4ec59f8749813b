#ifndef CATALE_CORE_HPP_
#define CATALE_CORE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catale {

// Positional identity: objects, morphisms and carrier elements are referred to
// by their index in the owning structure. kNone marks an undefined table entry.
using Idx = int32_t;
inline constexpr Idx kNone = -1;

enum class ErrorKind {
  Precondition,  // an operation's stated precondition does not hold
  Carrier,       // structures passed together do not fit each other
  Bound,         // a configured search or size bound was exceeded
  Parse,         // malformed input document
  UnknownName,   // unknown fixture or identifier
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Validators collect every violated axiom instance instead of aborting on the
// first one. `notes` carries informational findings that are not failures.
struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  void fail(std::string msg) { violations.push_back(std::move(msg)); }
  void note(std::string msg) { notes.push_back(std::move(msg)); }
};

}  // namespace catale

#endif  // CATALE_CORE_HPP_
