#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apl/linalg.hpp"

namespace apl {

/// One failing instance of an identity: which identity, on which basis
/// indices (0-based), and the nonzero residual.
struct Witness {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector residual;
  std::string detail;
};

/// Outcome of a check. `failures` counts every failing instance; only the
/// first `max_witnesses` are kept.
class CheckReport {
 public:
  static constexpr std::size_t max_witnesses = 16;

  bool passed() const noexcept { return failures_ == 0; }
  std::size_t failures() const noexcept { return failures_; }
  const std::vector<Witness>& witnesses() const noexcept { return witnesses_; }

  /// Records a failure if `residual` is nonzero; returns true when recorded.
  bool expect_zero(const std::string& identity, std::vector<std::size_t> indices, Vector residual);
  /// Records an unconditional failure described in words.
  void fail(const std::string& identity, std::string detail, std::vector<std::size_t> indices = {},
            Vector residual = {});
  /// Appends every failure of `other`, keeping the cap. A nonempty `suffix`
  /// is appended to each identity name.
  void merge(const CheckReport& other, const std::string& suffix = {});

  bool has_failure(const std::string& identity) const;

  explicit operator bool() const noexcept { return passed(); }

 private:
  void record(Witness w);

  std::size_t failures_ = 0;
  std::vector<Witness> witnesses_;
};

}  // namespace apl
