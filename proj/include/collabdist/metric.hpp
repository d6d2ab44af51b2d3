#pragma once

#include <optional>
#include <string_view>

namespace collabdist {

/// Which distance is meant: plain edge count, or edges weighted by the
/// reciprocal of the pair's joint-publication count.
enum class Metric { Unweighted, Weighted };

constexpr std::string_view metric_token(Metric m) noexcept {
  return m == Metric::Unweighted ? "u" : "w";
}

constexpr std::string_view metric_name(Metric m) noexcept {
  return m == Metric::Unweighted ? "unweighted" : "weighted";
}

constexpr std::optional<Metric> metric_from_token(std::string_view token) noexcept {
  if (token == "u") return Metric::Unweighted;
  if (token == "w") return Metric::Weighted;
  return std::nullopt;
}

}  // namespace collabdist
