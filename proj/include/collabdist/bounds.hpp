#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "collabdist/errors.hpp"
#include "collabdist/metric.hpp"
#include "collabdist/rational.hpp"

namespace collabdist {

enum class FactKind { Exact, UpperBound };

constexpr std::string_view fact_kind_token(FactKind k) noexcept {
  return k == FactKind::Exact ? "exact" : "upper";
}

/// Lower bound on the number of joint publications of a pair ("at least k
/// publications together").
struct CountFact {
  std::string author_a;
  std::string author_b;
  std::uint64_t min_count = 1;
};

/// A known distance value or upper bound for a pair under one metric.
/// Unweighted values must be integers; a value of 0 is only valid for
/// identical endpoints.
struct DistanceFact {
  std::string author_a;
  std::string author_b;
  Metric metric = Metric::Unweighted;
  FactKind kind = FactKind::Exact;
  Rational value;

  friend bool operator==(const DistanceFact&, const DistanceFact&) = default;
};

/// How a derivation step is justified.
///
/// Stated facts enter chains as given. The derived rules are:
///   DirectLink       a pair with any joint publication is at unweighted
///                    distance exactly 1;
///   CountReciprocal  a pair with at least k joint publications is at
///                    weighted distance at most 1/k;
///   MetricTransfer   a weighted distance never exceeds the unweighted
///                    distance of the same pair.
/// Triangle steps concatenate the running chain with the last introduced
/// link; TriangleSym marks a link whose fact was stated for the opposite
/// orientation and enters via symmetry of the distance.
enum class Rule { Stated, DirectLink, CountReciprocal, MetricTransfer, TriangleForward, TriangleSym };

std::string_view rule_name(Rule rule) noexcept;

struct DerivationStep {
  Rule rule;
  std::string from;      // link orientation as traversed, query source -> target
  std::string to;
  FactKind kind;         // of the link fact involved
  Rational value;        // the link fact's value
  std::string citation;  // underlying stated fact, in facts-file syntax
  Rational bound_after;  // bound on (query source, `to`) established so far
};

/// Result of a bound query: the tightest derivable upper bound plus the
/// steps that justify it. `bound` is empty when no chain of facts connects
/// the endpoints. Summing each link once (every introduction step) replays
/// the bound exactly.
struct BoundDerivation {
  std::string source;
  std::string target;
  Metric metric = Metric::Unweighted;
  std::optional<Rational> bound;
  std::vector<DerivationStep> steps;
};

/// Stores partial distance and collaboration-count facts and answers
/// provable-upper-bound queries by closing the facts under the triangle
/// inequality (a shortest-path problem over the fact graph). Only upper
/// bounds are ever derived; in particular a collaboration count never
/// yields an unweighted bound through its reciprocal.
///
/// Append facts first; queries are read-only and safe to run concurrently
/// once the ledger stops changing.
class FactLedger {
 public:
  /// Records a fact. Authors are trimmed and interned on first mention.
  /// A count fact below 1 or pairing an author with itself is rejected;
  /// an exact distance fact contradicting an existing exact fact on the
  /// same (pair, metric) throws InconsistentFactError. An exact fact
  /// supersedes any looser stored upper bound on its (pair, metric).
  void add(const CountFact& fact);
  void add(const DistanceFact& fact);

  /// The base facts implied by the stored ones: per count fact a weighted
  /// upper bound 1/min_count and an unweighted exact 1; per stated
  /// unweighted fact a weighted upper bound of the same value.
  std::vector<DistanceFact> derived_base_facts() const;

  /// Tightest provable upper bound on the (a, b) distance. Identity queries
  /// return 0 with no steps; distinct unknown authors throw
  /// UnknownAuthorError. Symmetric in a and b.
  BoundDerivation tightest_upper_bound(std::string_view a, std::string_view b,
                                       Metric metric) const;

  /// Upper bound along an explicit author chain: the sum of the best
  /// per-pair bounds. Throws MissingLinkError when a consecutive pair has
  /// no usable fact. Never tighter than tightest_upper_bound.
  BoundDerivation chain_bound(std::span<const std::string> path, Metric metric) const;

  bool knows(std::string_view label) const;
  const std::vector<std::string>& authors() const noexcept { return authors_; }

 private:
  using AuthorId = std::uint32_t;

  struct Stated {
    AuthorId from, to;  // orientation as stated
    FactKind kind;
    Rational value;
  };
  struct StatedCount {
    AuthorId from, to;
    std::uint64_t min_count;
  };
  struct PairRecord {
    std::optional<Stated> exact_u, upper_u, exact_w, upper_w;
    std::optional<StatedCount> count;
  };
  // One usable pairwise bound, oriented for traversal.
  struct Link {
    AuthorId from, to;
    AuthorId stated_from, stated_to;
    Rule rule;
    FactKind kind;
    Rational value;
    std::string citation;
  };

  AuthorId intern(std::string_view label);
  std::optional<AuthorId> lookup(std::string_view label) const;
  PairRecord& ensure_pair(AuthorId a, AuthorId b);
  const PairRecord* find_pair(AuthorId a, AuthorId b) const;
  std::optional<Link> best_link(AuthorId from, AuthorId to, Metric metric) const;
  std::vector<std::vector<Link>> link_adjacency(Metric metric) const;
  BoundDerivation assemble(std::string source, std::string target, Metric metric,
                           std::span<const Link> chain) const;
  std::string cite(const Stated& fact, Metric metric) const;
  std::string cite(const StatedCount& fact) const;

  std::vector<std::string> authors_;
  std::unordered_map<std::string, AuthorId> index_;
  std::unordered_map<std::uint64_t, PairRecord> pairs_;
  std::vector<std::uint64_t> pair_order_;  // insertion order, for determinism
};

/// Parses the line-oriented facts format:
///   count <authorA> <authorB> <min_count>
///   dist <u|w> <exact|upper> <authorA> <authorB> <value>
/// where value is an integer or a fraction p/q. Tokens are
/// whitespace-delimited; double quotes allow embedded spaces. Lines whose
/// first non-blank character is '#' are comments.
FactLedger parse_facts(std::istream& in);

}  // namespace collabdist
