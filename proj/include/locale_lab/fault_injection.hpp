#pragma once

#include <optional>
#include <string_view>

namespace locale_lab {

/// Deliberate defects that can be switched on to check that the verification
/// suites are able to fail. Never active unless a ScopedMutant is alive on the
/// current thread.
enum class Mutant {
  none,
  /// covered_primes() drops its largest reported element.
  covered_prime_underreport,
  /// sublocale_join() returns the plain union without closing under meets.
  join_without_meet_closure,
  /// difference() closes the set difference instead of decomposing T.
  difference_without_decomposition,
};

inline Mutant& active_mutant() {
  thread_local Mutant current = Mutant::none;
  return current;
}

inline bool mutant_active(Mutant m) { return active_mutant() == m; }

class ScopedMutant {
 public:
  explicit ScopedMutant(Mutant m) : previous_(active_mutant()) { active_mutant() = m; }
  ~ScopedMutant() { active_mutant() = previous_; }
  ScopedMutant(const ScopedMutant&) = delete;
  ScopedMutant& operator=(const ScopedMutant&) = delete;

 private:
  Mutant previous_;
};

inline std::string_view mutant_name(Mutant m) {
  switch (m) {
    case Mutant::none: return "none";
    case Mutant::covered_prime_underreport: return "covered-prime-underreport";
    case Mutant::join_without_meet_closure: return "join-without-meet-closure";
    case Mutant::difference_without_decomposition: return "difference-without-decomposition";
  }
  return "none";
}

inline std::optional<Mutant> parse_mutant(std::string_view name) {
  for (Mutant m : {Mutant::none, Mutant::covered_prime_underreport, Mutant::join_without_meet_closure,
                   Mutant::difference_without_decomposition}) {
    if (mutant_name(m) == name) return m;
  }
  return std::nullopt;
}

}  // namespace locale_lab
