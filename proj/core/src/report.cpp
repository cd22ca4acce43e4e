#include "apl/report.hpp"

#include <algorithm>

namespace apl {

void CheckReport::record(Witness w) {
  ++failures_;
  if (witnesses_.size() < max_witnesses) witnesses_.push_back(std::move(w));
}

bool CheckReport::expect_zero(const std::string& identity, std::vector<std::size_t> indices, Vector residual) {
  if (is_zero(residual)) return false;
  record(Witness{identity, std::move(indices), std::move(residual), {}});
  return true;
}

void CheckReport::fail(const std::string& identity, std::string detail, std::vector<std::size_t> indices,
                       Vector residual) {
  record(Witness{identity, std::move(indices), std::move(residual), std::move(detail)});
}

void CheckReport::merge(const CheckReport& other, const std::string& suffix) {
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= max_witnesses) break;
    witnesses_.push_back(w);
    witnesses_.back().identity += suffix;
  }
  failures_ += other.failures_;
}

bool CheckReport::has_failure(const std::string& identity) const {
  return std::any_of(witnesses_.begin(), witnesses_.end(),
                     [&](const Witness& w) { return w.identity == identity; });
}

}  // namespace apl
